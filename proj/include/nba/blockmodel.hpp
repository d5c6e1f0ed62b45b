#pragma once

#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "nba/measures.hpp"
#include "nba/network.hpp"

namespace nba {

/// Ordered partition of the nodes into rank-defined blocks, best block first.
struct BlockPartition {
    std::vector<std::vector<Index>> blocks;
    std::vector<Index> cut_counts;
    Measure basis = Measure::Indegree;

    Index block_count() const noexcept { return static_cast<Index>(blocks.size()); }
    /// block id per node
    Eigen::VectorXi membership(Index node_count) const;
};

/// Block sizes from percentages of g: each share rounds down, the last block
/// takes the remainder.
std::vector<Index> cuts_from_percentages(Index g, std::span<const double> percentages);

/// Sorts nodes by score descending (ties by key ascending) and slices them
/// into consecutive blocks of the given sizes.
BlockPartition partition_by_ranking(const ScoreVector& scores, std::span<const AuthorKey> nodes,
                                    std::span<const Index> cut_counts);

enum class BlockMode { Full, TransferOnly, Normalized };

std::string to_string(BlockMode mode);
BlockMode parse_block_mode(const std::string& name);

/// Rows send, columns receive.
struct BlockMatrix {
    BlockMode mode = BlockMode::Full;
    Eigen::MatrixXd cells;
    /// First-author self-credit contained in each diagonal cell. Zero in Full
    /// mode, where it is not reported separately.
    Eigen::VectorXd diag_first_self;
};

BlockMatrix block_credit_matrix(const DirectedCreditNetwork& net, const BlockPartition& partition,
                                BlockMode mode);

/// Divides each row (and its diagonal self-credit) by the sender block size.
BlockMatrix normalize_by_sender(const BlockMatrix& transfer_only, std::span<const Index> block_sizes);

/// Share of the total sitting on the diagonal.
double diagonal_share(const Eigen::Ref<const Eigen::MatrixXd>& cells);

}  // namespace nba
