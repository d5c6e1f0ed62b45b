#include "nba/measures.hpp"

#include <queue>
#include <stdexcept>
#include <vector>

namespace nba {

std::string to_string(Measure m) {
    switch (m) {
        case Measure::Degree: return "degree";
        case Measure::Betweenness: return "betweenness";
        case Measure::Closeness: return "closeness";
        case Measure::Indegree: return "indegree";
    }
    return "unknown";
}

Measure parse_measure(const std::string& name) {
    if (name == "degree") return Measure::Degree;
    if (name == "betweenness") return Measure::Betweenness;
    if (name == "closeness") return Measure::Closeness;
    if (name == "indegree") return Measure::Indegree;
    throw std::invalid_argument("unknown measure '" + name + "'");
}

namespace {

constexpr Index kUnreached = -1;

/// BFS from source; fills hop distances (-1 when unreachable).
void bfs_distances(const UndirectedBinaryNetwork& net, Index source, std::vector<Index>& dist) {
    dist.assign(static_cast<std::size_t>(net.size()), kUnreached);
    std::queue<Index> frontier;
    dist[static_cast<std::size_t>(source)] = 0;
    frontier.push(source);
    while (!frontier.empty()) {
        const Index v = frontier.front();
        frontier.pop();
        for (Index w : net.adjacency[static_cast<std::size_t>(v)]) {
            auto& dw = dist[static_cast<std::size_t>(w)];
            if (dw == kUnreached) {
                dw = dist[static_cast<std::size_t>(v)] + 1;
                frontier.push(w);
            }
        }
    }
}

}  // namespace

ScoreVector degree_centrality(const UndirectedBinaryNetwork& net) {
    ScoreVector out{Measure::Degree, Eigen::VectorXd(net.size())};
    for (Index i = 0; i < net.size(); ++i) {
        out.scores(i) = static_cast<double>(net.adjacency[static_cast<std::size_t>(i)].size());
    }
    return out;
}

ScoreVector betweenness_centrality(const UndirectedBinaryNetwork& net) {
    const auto g = static_cast<std::size_t>(net.size());
    ScoreVector out{Measure::Betweenness, Eigen::VectorXd::Zero(net.size())};

    // Brandes accumulation; every unordered pair is visited from both ends.
    std::vector<Index> order;
    std::vector<std::vector<Index>> preds(g);
    std::vector<double> sigma(g), delta(g);
    std::vector<Index> dist(g);
    for (std::size_t s = 0; s < g; ++s) {
        order.clear();
        for (auto& p : preds) p.clear();
        std::fill(sigma.begin(), sigma.end(), 0.0);
        std::fill(delta.begin(), delta.end(), 0.0);
        std::fill(dist.begin(), dist.end(), kUnreached);

        sigma[s] = 1.0;
        dist[s] = 0;
        std::queue<Index> frontier;
        frontier.push(static_cast<Index>(s));
        while (!frontier.empty()) {
            const auto v = static_cast<std::size_t>(frontier.front());
            frontier.pop();
            order.push_back(static_cast<Index>(v));
            for (Index wi : net.adjacency[v]) {
                const auto w = static_cast<std::size_t>(wi);
                if (dist[w] == kUnreached) {
                    dist[w] = dist[v] + 1;
                    frontier.push(wi);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(static_cast<Index>(v));
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            const auto w = static_cast<std::size_t>(*it);
            for (Index vi : preds[w]) {
                const auto v = static_cast<std::size_t>(vi);
                delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            }
            if (w != s) out.scores(static_cast<Index>(w)) += delta[w];
        }
    }
    out.scores *= 0.5;
    return out;
}

ScoreVector harmonic_closeness(const UndirectedBinaryNetwork& net) {
    ScoreVector out{Measure::Closeness, Eigen::VectorXd::Zero(net.size())};
    std::vector<Index> dist;
    for (Index i = 0; i < net.size(); ++i) {
        bfs_distances(net, i, dist);
        double sum = 0.0;
        for (Index d : dist) {
            if (d > 0) sum += 1.0 / static_cast<double>(d);
        }
        out.scores(i) = sum;
    }
    return out;
}

ScoreVector indegree_prestige(const DirectedCreditNetwork& net, bool include_self) {
    ScoreVector out{Measure::Indegree, Eigen::VectorXd::Zero(net.size())};
    if (net.size() == 0) return out;
    // column sums of the sender-by-receiver matrix
    out.scores = (Eigen::RowVectorXd::Ones(net.size()) * net.transfer_weight).transpose();
    if (include_self) out.scores += net.nc_self + net.first_self;
    return out;
}

}  // namespace nba
