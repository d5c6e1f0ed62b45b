#include "nba/blockmodel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <Eigen/SparseCore>

namespace nba {

Eigen::VectorXi BlockPartition::membership(Index node_count) const {
    Eigen::VectorXi out = Eigen::VectorXi::Constant(node_count, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (Index i : blocks[b]) {
            if (i < 0 || i >= node_count) throw std::invalid_argument("block member out of range");
            out(i) = static_cast<int>(b);
        }
    }
    return out;
}

std::vector<Index> cuts_from_percentages(Index g, std::span<const double> percentages) {
    if (percentages.empty()) throw std::invalid_argument("no percentages given");
    const double total = std::accumulate(percentages.begin(), percentages.end(), 0.0);
    if (std::abs(total - 100.0) > 1e-9) throw std::invalid_argument("percentages must sum to 100");
    std::vector<Index> cuts;
    Index used = 0;
    for (std::size_t b = 0; b + 1 < percentages.size(); ++b) {
        if (!(percentages[b] > 0.0)) throw std::invalid_argument("percentages must be positive");
        const auto c = static_cast<Index>(std::floor(static_cast<double>(g) * percentages[b] / 100.0));
        cuts.push_back(c);
        used += c;
    }
    cuts.push_back(g - used);
    return cuts;
}

BlockPartition partition_by_ranking(const ScoreVector& scores, std::span<const AuthorKey> nodes,
                                    std::span<const Index> cut_counts) {
    const Index g = scores.size();
    if (static_cast<Index>(nodes.size()) != g) {
        throw std::invalid_argument("scores and node keys differ in length");
    }
    if (std::any_of(cut_counts.begin(), cut_counts.end(), [](Index c) { return c < 1; })) {
        throw std::invalid_argument("block sizes must be positive");
    }
    const Index total = std::accumulate(cut_counts.begin(), cut_counts.end(), Index{0});
    if (total != g) {
        throw std::invalid_argument("block sizes sum to " + std::to_string(total) + ", expected " +
                                    std::to_string(g));
    }

    std::vector<Index> order(static_cast<std::size_t>(g));
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        if (scores[a] != scores[b]) return scores[a] > scores[b];
        return nodes[static_cast<std::size_t>(a)] < nodes[static_cast<std::size_t>(b)];
    });

    BlockPartition out;
    out.basis = scores.measure;
    out.cut_counts.assign(cut_counts.begin(), cut_counts.end());
    auto it = order.begin();
    for (Index c : cut_counts) {
        out.blocks.emplace_back(it, it + c);
        it += c;
    }
    return out;
}

std::string to_string(BlockMode mode) {
    switch (mode) {
        case BlockMode::Full: return "full";
        case BlockMode::TransferOnly: return "transfer";
        case BlockMode::Normalized: return "normalized";
    }
    return "unknown";
}

BlockMode parse_block_mode(const std::string& name) {
    if (name == "full") return BlockMode::Full;
    if (name == "transfer") return BlockMode::TransferOnly;
    if (name == "normalized") return BlockMode::Normalized;
    throw std::invalid_argument("unknown block mode '" + name + "'");
}

BlockMatrix block_credit_matrix(const DirectedCreditNetwork& net, const BlockPartition& partition,
                                BlockMode mode) {
    const Index g = net.size();
    const Index nb = partition.block_count();
    const Eigen::VectorXi member = partition.membership(g);
    const Index covered = std::accumulate(partition.blocks.begin(), partition.blocks.end(), Index{0},
                                          [](Index acc, const auto& b) { return acc + static_cast<Index>(b.size()); });
    if (covered != g || (member.array() < 0).any()) {
        throw std::invalid_argument("partition does not cover the network's nodes exactly");
    }

    // node-to-block indicator P (g x B); cells = P^T W P
    Eigen::SparseMatrix<double> indicator(g, nb);
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(static_cast<std::size_t>(g));
    for (Index i = 0; i < g; ++i) entries.emplace_back(i, member(i), 1.0);
    indicator.setFromTriplets(entries.begin(), entries.end());

    const Eigen::SparseMatrix<double> weights = net.transfer_weight;
    BlockMatrix out;
    out.mode = mode;
    out.cells = Eigen::MatrixXd(indicator.transpose() * weights * indicator);
    out.diag_first_self = Eigen::VectorXd::Zero(nb);
    for (Index i = 0; i < g; ++i) out.diag_first_self(member(i)) += net.first_self(i);

    if (mode == BlockMode::Full) {
        Eigen::VectorXd nc = Eigen::VectorXd::Zero(nb);
        for (Index i = 0; i < g; ++i) nc(member(i)) += net.nc_self(i);
        out.cells.diagonal() += nc + out.diag_first_self;
        out.diag_first_self.setZero();
        return out;
    }

    out.cells.diagonal() += out.diag_first_self;
    out.mode = BlockMode::TransferOnly;
    if (mode == BlockMode::TransferOnly) return out;
    return normalize_by_sender(out, partition.cut_counts);
}

BlockMatrix normalize_by_sender(const BlockMatrix& transfer_only, std::span<const Index> block_sizes) {
    if (transfer_only.mode != BlockMode::TransferOnly) {
        throw std::invalid_argument("only transfer-only matrices can be normalized");
    }
    const Index nb = transfer_only.cells.rows();
    if (static_cast<Index>(block_sizes.size()) != nb) {
        throw std::invalid_argument("one block size per matrix row is required");
    }
    BlockMatrix out;
    out.mode = BlockMode::Normalized;
    out.cells = transfer_only.cells;
    out.diag_first_self = transfer_only.diag_first_self;
    for (Index b = 0; b < nb; ++b) {
        const Index size = block_sizes[static_cast<std::size_t>(b)];
        if (size < 1) throw std::invalid_argument("empty block");
        out.cells.row(b) /= static_cast<double>(size);
        out.diag_first_self(b) /= static_cast<double>(size);
    }
    return out;
}

double diagonal_share(const Eigen::Ref<const Eigen::MatrixXd>& cells) {
    return cells.diagonal().sum() / cells.sum();
}

}  // namespace nba
