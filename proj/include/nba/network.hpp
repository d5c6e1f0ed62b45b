#pragma once

#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "nba/corpus.hpp"
#include "nba/credit_model.hpp"

namespace nba {

/// Distribution factor per coauthor count. Papers larger than the largest
/// configured size reuse that size's factor; single-authored papers carry no
/// transferable credit (d = 0).
class DistributionPolicy {
public:
    DistributionPolicy() = default;
    explicit DistributionPolicy(std::map<int, DistributionFactor> factors);

    /// 2: 0.21, 3: 0.33, 4: 0.39, clamped above four authors.
    static DistributionPolicy fitted_default();

    DistributionFactor factor_for(int n_authors) const;

    const std::map<int, DistributionFactor>& factors() const noexcept { return factors_; }
    bool empty() const noexcept { return factors_.empty(); }

private:
    std::map<int, DistributionFactor> factors_;
};

/// Accumulated credit network. Transfers are stored sender-by-row,
/// receiver-by-column; the two kinds of self-credit live in their own vectors.
struct DirectedCreditNetwork {
    std::vector<AuthorKey> nodes;
    Eigen::SparseMatrix<double, Eigen::RowMajor> transfer_weight;
    Eigen::VectorXd nc_self;
    Eigen::VectorXd first_self;
    std::size_t paper_count = 0;

    Index size() const noexcept { return static_cast<Index>(nodes.size()); }
    double total_credit() const;
    std::optional<Index> index_of(const AuthorKey& key) const;
};

/// Builds the network from explicit parts, checking shapes and signs.
DirectedCreditNetwork make_network(std::vector<AuthorKey> nodes,
                                   const std::vector<Eigen::Triplet<double>>& transfers,
                                   Eigen::VectorXd nc_self, Eigen::VectorXd first_self,
                                   std::size_t paper_count);

/// Incremental, order-preserving accumulator behind build_directed_network.
class NetworkBuilder {
public:
    explicit NetworkBuilder(DistributionPolicy factors);

    /// Adds one paper whose authors are already in credit order.
    void add_paper(std::span<const AuthorKey> ordered_authors);

    DirectedCreditNetwork finish() const;

private:
    Index intern(const AuthorKey& key);

    DistributionPolicy factors_;
    std::vector<AuthorKey> nodes_;
    std::map<AuthorKey, Index> index_;
    std::map<std::pair<Index, Index>, double> transfers_;
    std::vector<double> nc_self_;
    std::vector<double> first_self_;
    std::size_t paper_count_ = 0;
};

DirectedCreditNetwork build_directed_network(const Corpus& corpus, OrderingPolicy policy,
                                             const DistributionPolicy& factors,
                                             bool include_singles = false);

/// Binary, symmetric, loop-free view. Neighbor lists are sorted.
struct UndirectedBinaryNetwork {
    std::vector<AuthorKey> nodes;
    std::vector<std::vector<Index>> adjacency;

    Index size() const noexcept { return static_cast<Index>(nodes.size()); }
    std::size_t edge_count() const;
    bool connected(Index i, Index j) const;
};

/// Builds from an undirected edge list; duplicates and loops are dropped.
UndirectedBinaryNetwork make_undirected(std::vector<AuthorKey> nodes,
                                        std::span<const std::pair<Index, Index>> edges);

UndirectedBinaryNetwork symmetrize(const DirectedCreditNetwork& net);

/// Largest first; equal sizes ordered by their smallest member key.
std::vector<std::vector<Index>> connected_components(const UndirectedBinaryNetwork& net);

/// 2m / (g (g - 1)); empty when g < 2.
std::optional<double> density(const UndirectedBinaryNetwork& net);

}  // namespace nba
