#pragma once

#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace nba {

using Index = Eigen::Index;

/// Fraction of an author's initial credit (1/N) that is passed on to the
/// preceding coauthors. Always within [0, 1].
template <typename Scalar = double>
class DistributionFactorT {
public:
    constexpr DistributionFactorT() = default;

    explicit DistributionFactorT(Scalar value) : value_(value) {
        if (!(value >= Scalar(0) && value <= Scalar(1))) {
            throw std::domain_error("distribution factor must lie in [0, 1]");
        }
    }

    constexpr Scalar value() const noexcept { return value_; }

    friend constexpr bool operator==(DistributionFactorT, DistributionFactorT) = default;

private:
    Scalar value_ = Scalar(0);
};

using DistributionFactor = DistributionFactorT<double>;

/// Credit share per author rank. Element r-1 holds the share of rank r.
template <typename Scalar>
using CreditShareVectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using CreditShareVector = CreditShareVectorT<double>;

/// One directed transfer inside a paper. Ranks are 1-based, receiver < sender.
template <typename Scalar>
struct RankTransferT {
    int sender;
    int receiver;
    Scalar weight;

    friend bool operator==(const RankTransferT&, const RankTransferT&) = default;
};

/// Per-paper split of the unit paper value into non-transferable self-loops,
/// the first author's self-allocated transferable credit, and the pairwise
/// transfers towards preceding coauthors.
template <typename Scalar>
struct PaperTransferDecompositionT {
    int n_authors = 0;
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nc;
    Scalar first_author_self = Scalar(0);
    /// Ordered by sender rank, then receiver rank.
    std::vector<RankTransferT<Scalar>> transfers;

    /// Credit held by each rank after all transfers.
    CreditShareVectorT<Scalar> receiver_totals() const {
        CreditShareVectorT<Scalar> totals = nc;
        if (n_authors > 0) totals(0) += first_author_self;
        // receivers accumulate in ascending sender order, matching credit_shares
        for (int r = 1; r <= n_authors; ++r) {
            for (const auto& t : transfers) {
                if (t.receiver == r) totals(r - 1) += t.weight;
            }
        }
        return totals;
    }

    Scalar total() const {
        Scalar sum = nc.sum() + first_author_self;
        for (const auto& t : transfers) sum += t.weight;
        return sum;
    }
};

using RankTransfer = RankTransferT<double>;
using PaperTransferDecomposition = PaperTransferDecompositionT<double>;

namespace detail {

inline void require_authors(int n_authors) {
    if (n_authors < 1) throw std::domain_error("a paper needs at least one author");
}

/// Weight every rank s >= 2 sends to each of its s-1 predecessors.
template <typename Scalar>
Scalar transfer_weight(int n_authors, Scalar d, int sender) {
    return d / (Scalar(n_authors) * Scalar(sender - 1));
}

}  // namespace detail

template <typename Scalar>
PaperTransferDecompositionT<Scalar> paper_transfer_decomposition(int n_authors,
                                                                 DistributionFactorT<Scalar> factor) {
    detail::require_authors(n_authors);
    const Scalar d = factor.value();
    const Scalar n = Scalar(n_authors);

    PaperTransferDecompositionT<Scalar> out;
    out.n_authors = n_authors;
    out.nc = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>::Constant(n_authors, (Scalar(1) - d) / n);
    out.first_author_self = d / n;
    out.transfers.reserve(static_cast<std::size_t>(n_authors) * (n_authors - 1) / 2);
    for (int s = 2; s <= n_authors; ++s) {
        const Scalar w = detail::transfer_weight(n_authors, d, s);
        for (int t = 1; t < s; ++t) out.transfers.push_back({s, t, w});
    }
    return out;
}

/// Closed-form NBA credit shares:
///   share(r) = (1-d)/N + [r = 1] d/N + sum_{k=r+1..N} d / (N (k-1)).
/// Summation order matches PaperTransferDecomposition::receiver_totals, so
/// both routes agree bit for bit.
template <typename Scalar>
CreditShareVectorT<Scalar> credit_shares(int n_authors, DistributionFactorT<Scalar> factor) {
    detail::require_authors(n_authors);
    const Scalar d = factor.value();
    const Scalar n = Scalar(n_authors);

    CreditShareVectorT<Scalar> shares(n_authors);
    for (int r = 1; r <= n_authors; ++r) {
        Scalar s = (Scalar(1) - d) / n;
        if (r == 1) s += d / n;
        for (int k = r + 1; k <= n_authors; ++k) s += detail::transfer_weight(n_authors, d, k);
        shares(r - 1) = s;
    }
    return shares;
}

inline CreditShareVector credit_shares(int n_authors, double d) {
    return credit_shares(n_authors, DistributionFactor(d));
}

inline PaperTransferDecomposition paper_transfer_decomposition(int n_authors, double d) {
    return paper_transfer_decomposition(n_authors, DistributionFactor(d));
}

}  // namespace nba
