#include "nba/rank_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace nba {

namespace {

std::vector<Index> descending_order(const Eigen::Ref<const Eigen::VectorXd>& scores) {
    std::vector<Index> order(static_cast<std::size_t>(scores.size()));
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return scores(a) > scores(b); });
    return order;
}

struct TieSums {
    std::int64_t pairs = 0;    // sum t(t-1)/2
    double v_term = 0.0;       // sum t(t-1)(2t+5)
    double t1 = 0.0;           // sum t(t-1)
    double t2 = 0.0;           // sum t(t-1)(t-2)

    void add(std::int64_t t) {
        const double td = static_cast<double>(t);
        pairs += t * (t - 1) / 2;
        v_term += td * (td - 1) * (2 * td + 5);
        t1 += td * (td - 1);
        t2 += td * (td - 1) * (td - 2);
    }
};

template <typename Eq>
TieSums tie_runs(std::size_t n, Eq same_as_previous) {
    TieSums sums;
    std::int64_t run = 1;
    for (std::size_t i = 1; i < n; ++i) {
        if (same_as_previous(i)) {
            ++run;
        } else {
            sums.add(run);
            run = 1;
        }
    }
    if (n > 0) sums.add(run);
    return sums;
}

/// Sorts ys ascending and returns the number of inversions.
std::int64_t merge_count(std::vector<double>& ys, std::vector<double>& scratch, std::size_t lo,
                         std::size_t hi) {
    if (hi - lo < 2) return 0;
    const std::size_t mid = lo + (hi - lo) / 2;
    std::int64_t swaps = merge_count(ys, scratch, lo, mid) + merge_count(ys, scratch, mid, hi);
    std::size_t i = lo, j = mid, k = lo;
    while (i < mid && j < hi) {
        if (ys[j] < ys[i]) {
            swaps += static_cast<std::int64_t>(mid - i);
            scratch[k++] = ys[j++];
        } else {
            scratch[k++] = ys[i++];
        }
    }
    while (i < mid) scratch[k++] = ys[i++];
    while (j < hi) scratch[k++] = ys[j++];
    std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo),
              scratch.begin() + static_cast<std::ptrdiff_t>(hi),
              ys.begin() + static_cast<std::ptrdiff_t>(lo));
    return swaps;
}

}  // namespace

Eigen::VectorXd fractional_ranks(const Eigen::Ref<const Eigen::VectorXd>& scores) {
    const auto order = descending_order(scores);
    Eigen::VectorXd ranks(scores.size());
    std::size_t i = 0;
    while (i < order.size()) {
        std::size_t j = i + 1;
        while (j < order.size() && scores(order[j]) == scores(order[i])) ++j;
        // positions i+1 .. j share their mean
        const double mean = 0.5 * (static_cast<double>(i + 1) + static_cast<double>(j));
        for (std::size_t t = i; t < j; ++t) ranks(order[t]) = mean;
        i = j;
    }
    return ranks;
}

std::optional<KendallResult> kendall_tau(const Eigen::Ref<const Eigen::VectorXd>& x,
                                         const Eigen::Ref<const Eigen::VectorXd>& y,
                                         TauVariant variant) {
    if (x.size() != y.size()) throw std::invalid_argument("rank vectors differ in length");
    if (x.size() < 2) throw std::invalid_argument("kendall tau needs at least two observations");
    if (!x.allFinite() || !y.allFinite()) throw std::invalid_argument("scores must be finite");

    const auto n = static_cast<std::size_t>(x.size());
    std::vector<std::pair<double, double>> xy(n);
    for (std::size_t i = 0; i < n; ++i) xy[i] = {x(static_cast<Index>(i)), y(static_cast<Index>(i))};
    std::sort(xy.begin(), xy.end());

    const TieSums xt = tie_runs(n, [&](std::size_t i) { return xy[i].first == xy[i - 1].first; });
    const TieSums joint = tie_runs(n, [&](std::size_t i) { return xy[i] == xy[i - 1]; });

    std::vector<double> ys(n), scratch(n);
    for (std::size_t i = 0; i < n; ++i) ys[i] = xy[i].second;
    const std::int64_t discordant = merge_count(ys, scratch, 0, n);
    const TieSums yt = tie_runs(n, [&](std::size_t i) { return ys[i] == ys[i - 1]; });

    const auto nn = static_cast<std::int64_t>(n);
    const std::int64_t n0 = nn * (nn - 1) / 2;
    const std::int64_t s = n0 - xt.pairs - yt.pairs + joint.pairs - 2 * discordant;

    KendallResult out{};
    if (variant == TauVariant::B) {
        const std::int64_t dx = n0 - xt.pairs;
        const std::int64_t dy = n0 - yt.pairs;
        if (dx == 0 || dy == 0) return std::nullopt;
        out.tau = static_cast<double>(s) / std::sqrt(static_cast<double>(dx) * static_cast<double>(dy));
    } else {
        out.tau = static_cast<double>(s) / static_cast<double>(n0);
    }

    const double g = static_cast<double>(n);
    double var = (g * (g - 1) * (2 * g + 5) - xt.v_term - yt.v_term) / 18.0;
    var += xt.t1 * yt.t1 / (2.0 * g * (g - 1));
    if (n > 2) var += xt.t2 * yt.t2 / (9.0 * g * (g - 1) * (g - 2));
    if (var > 0.0) out.z = static_cast<double>(s) / std::sqrt(var);
    return out;
}

std::vector<Index> top_k(const Eigen::Ref<const Eigen::VectorXd>& scores, Index k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    const auto order = descending_order(scores);
    std::vector<Index> out;
    if (order.empty()) return out;
    const auto cut = static_cast<std::size_t>(std::min<Index>(k, scores.size())) - 1;
    const double threshold = scores(order[cut]);
    for (Index i : order) {
        if (scores(i) < threshold) break;
        out.push_back(i);
    }
    return out;
}

RosterMatch roster_match(const ScoreVector& scores, std::span<const AuthorKey> nodes,
                         const std::set<AuthorKey>& roster, Index k) {
    if (static_cast<Index>(nodes.size()) != scores.size()) {
        throw std::invalid_argument("scores and node keys differ in length");
    }
    RosterMatch out;
    out.k = k;
    const auto group = top_k(scores.scores, k);
    out.group_size = group.size();
    for (Index i : group) {
        const auto& key = nodes[static_cast<std::size_t>(i)];
        if (roster.contains(key)) out.matched.insert(key);
    }
    out.count = out.matched.size();
    return out;
}

}  // namespace nba
