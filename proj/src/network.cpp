#include "nba/network.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace nba {

DistributionPolicy::DistributionPolicy(std::map<int, DistributionFactor> factors)
    : factors_(std::move(factors)) {
    for (const auto& [n, d] : factors_) {
        if (n < 2) throw std::invalid_argument("distribution factors are keyed by coauthor counts >= 2");
    }
}

DistributionPolicy DistributionPolicy::fitted_default() {
    return DistributionPolicy({{2, DistributionFactor(0.21)},
                               {3, DistributionFactor(0.33)},
                               {4, DistributionFactor(0.39)}});
}

DistributionFactor DistributionPolicy::factor_for(int n_authors) const {
    if (n_authors < 1) throw std::domain_error("a paper needs at least one author");
    if (n_authors == 1) return DistributionFactor(0.0);
    if (factors_.empty()) throw std::invalid_argument("no distribution factors configured");
    if (auto it = factors_.find(n_authors); it != factors_.end()) return it->second;
    const auto& [largest, d] = *factors_.rbegin();
    if (n_authors > largest) return d;
    throw std::invalid_argument("no distribution factor for " + std::to_string(n_authors) +
                                "-author papers");
}

double DirectedCreditNetwork::total_credit() const {
    return transfer_weight.sum() + nc_self.sum() + first_self.sum();
}

std::optional<Index> DirectedCreditNetwork::index_of(const AuthorKey& key) const {
    const auto it = std::find(nodes.begin(), nodes.end(), key);
    if (it == nodes.end()) return std::nullopt;
    return static_cast<Index>(it - nodes.begin());
}

DirectedCreditNetwork make_network(std::vector<AuthorKey> nodes,
                                   const std::vector<Eigen::Triplet<double>>& transfers,
                                   Eigen::VectorXd nc_self, Eigen::VectorXd first_self,
                                   std::size_t paper_count) {
    const auto g = static_cast<Index>(nodes.size());
    if (nc_self.size() != g || first_self.size() != g) {
        throw DataError("self-credit vectors must have one entry per node");
    }
    if ((nc_self.array() < 0).any() || (first_self.array() < 0).any()) {
        throw DataError("self-credit must be non-negative");
    }
    std::vector<AuthorKey> sorted = nodes;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw DataError("duplicate node key");
    }
    for (const auto& t : transfers) {
        if (t.row() < 0 || t.row() >= g || t.col() < 0 || t.col() >= g) {
            throw DataError("transfer references a node out of range");
        }
        if (t.row() == t.col()) throw DataError("transfers must connect distinct nodes");
        if (!(t.value() >= 0)) throw DataError("transfer weights must be non-negative");
    }
    DirectedCreditNetwork net;
    net.nodes = std::move(nodes);
    net.transfer_weight.resize(g, g);
    net.transfer_weight.setFromTriplets(transfers.begin(), transfers.end());
    net.transfer_weight.makeCompressed();
    net.nc_self = std::move(nc_self);
    net.first_self = std::move(first_self);
    net.paper_count = paper_count;
    return net;
}

NetworkBuilder::NetworkBuilder(DistributionPolicy factors) : factors_(std::move(factors)) {}

Index NetworkBuilder::intern(const AuthorKey& key) {
    auto [it, inserted] = index_.try_emplace(key, static_cast<Index>(nodes_.size()));
    if (inserted) {
        nodes_.push_back(key);
        nc_self_.push_back(0.0);
        first_self_.push_back(0.0);
    }
    return it->second;
}

void NetworkBuilder::add_paper(std::span<const AuthorKey> ordered_authors) {
    const int n = static_cast<int>(ordered_authors.size());
    const auto parts = paper_transfer_decomposition(n, factors_.factor_for(n));

    std::vector<Index> idx;
    idx.reserve(ordered_authors.size());
    for (const auto& a : ordered_authors) idx.push_back(intern(a));

    for (int r = 0; r < n; ++r) nc_self_[idx[r]] += parts.nc(r);
    first_self_[idx[0]] += parts.first_author_self;
    for (const auto& t : parts.transfers) {
        transfers_[{idx[t.sender - 1], idx[t.receiver - 1]}] += t.weight;
    }
    ++paper_count_;
}

DirectedCreditNetwork NetworkBuilder::finish() const {
    std::vector<Eigen::Triplet<double>> triplets;
    triplets.reserve(transfers_.size());
    for (const auto& [key, w] : transfers_) triplets.emplace_back(key.first, key.second, w);
    const auto g = static_cast<Index>(nodes_.size());
    return make_network(nodes_, triplets, Eigen::Map<const Eigen::VectorXd>(nc_self_.data(), g),
                        Eigen::Map<const Eigen::VectorXd>(first_self_.data(), g), paper_count_);
}

DirectedCreditNetwork build_directed_network(const Corpus& corpus, OrderingPolicy policy,
                                             const DistributionPolicy& factors,
                                             bool include_singles) {
    if (factors.empty()) {
        const bool needs_factors = std::any_of(corpus.begin(), corpus.end(),
                                               [](const BibRecord& r) { return r.size() > 1; });
        if (needs_factors) throw std::invalid_argument("no distribution factors configured");
    }
    NetworkBuilder builder(factors);
    for (const auto& rec : corpus) {
        if (rec.size() < 2 && !include_singles) continue;
        const auto ordered = apply_author_ordering(rec, policy);
        builder.add_paper(ordered);
    }
    return builder.finish();
}

std::size_t UndirectedBinaryNetwork::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nbrs : adjacency) twice += nbrs.size();
    return twice / 2;
}

bool UndirectedBinaryNetwork::connected(Index i, Index j) const {
    const auto& nbrs = adjacency[static_cast<std::size_t>(i)];
    return std::binary_search(nbrs.begin(), nbrs.end(), j);
}

UndirectedBinaryNetwork make_undirected(std::vector<AuthorKey> nodes,
                                        std::span<const std::pair<Index, Index>> edges) {
    UndirectedBinaryNetwork out;
    const auto g = static_cast<Index>(nodes.size());
    out.nodes = std::move(nodes);
    out.adjacency.resize(out.nodes.size());
    for (const auto& [i, j] : edges) {
        if (i < 0 || j < 0 || i >= g || j >= g) throw DataError("edge references a node out of range");
        if (i == j) continue;
        out.adjacency[static_cast<std::size_t>(i)].push_back(j);
        out.adjacency[static_cast<std::size_t>(j)].push_back(i);
    }
    for (auto& nbrs : out.adjacency) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    return out;
}

UndirectedBinaryNetwork symmetrize(const DirectedCreditNetwork& net) {
    std::vector<std::pair<Index, Index>> edges;
    const auto& w = net.transfer_weight;
    for (Index row = 0; row < w.outerSize(); ++row) {
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(w, row); it; ++it) {
            if (it.value() > 0.0) edges.emplace_back(it.row(), it.col());
        }
    }
    return make_undirected(net.nodes, edges);
}

std::vector<std::vector<Index>> connected_components(const UndirectedBinaryNetwork& net) {
    const auto g = static_cast<std::size_t>(net.size());
    std::vector<bool> seen(g, false);
    std::vector<std::vector<Index>> comps;
    for (std::size_t start = 0; start < g; ++start) {
        if (seen[start]) continue;
        std::vector<Index> comp;
        std::queue<Index> frontier;
        frontier.push(static_cast<Index>(start));
        seen[start] = true;
        while (!frontier.empty()) {
            const Index v = frontier.front();
            frontier.pop();
            comp.push_back(v);
            for (Index u : net.adjacency[static_cast<std::size_t>(v)]) {
                if (!seen[static_cast<std::size_t>(u)]) {
                    seen[static_cast<std::size_t>(u)] = true;
                    frontier.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }

    auto smallest_key = [&](const std::vector<Index>& c) {
        return std::min_element(c.begin(), c.end(), [&](Index a, Index b) {
            return net.nodes[static_cast<std::size_t>(a)] < net.nodes[static_cast<std::size_t>(b)];
        });
    };
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return net.nodes[static_cast<std::size_t>(*smallest_key(a))] <
               net.nodes[static_cast<std::size_t>(*smallest_key(b))];
    });
    return comps;
}

std::optional<double> density(const UndirectedBinaryNetwork& net) {
    const auto g = static_cast<double>(net.size());
    if (net.size() < 2) return std::nullopt;
    return 2.0 * static_cast<double>(net.edge_count()) / (g * (g - 1.0));
}

}  // namespace nba
