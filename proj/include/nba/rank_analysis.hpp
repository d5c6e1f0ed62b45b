#pragma once

#include <optional>
#include <set>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nba/corpus.hpp"
#include "nba/measures.hpp"

namespace nba {

/// Descending ranks, 1 = best; tied scores share the mean of their positions.
Eigen::VectorXd fractional_ranks(const Eigen::Ref<const Eigen::VectorXd>& scores);

inline Eigen::VectorXd fractional_ranks(const ScoreVector& sv) { return fractional_ranks(sv.scores); }

enum class TauVariant { A, B };

struct KendallResult {
    double tau;
    /// Normal approximation of the tie-corrected null distribution of C - D.
    /// Empty when the variance vanishes.
    std::optional<double> z;

    /// Two-tailed significance at the 0.01 level.
    bool significant_at_1pct() const { return z && std::abs(*z) > 2.576; }
};

/// Kendall rank correlation computed in O(g log g) (Knight's merge-sort
/// counting). Empty when a tau-b denominator is zero, i.e. one input is
/// constant. Throws std::invalid_argument on length mismatch or g < 2.
std::optional<KendallResult> kendall_tau(const Eigen::Ref<const Eigen::VectorXd>& x,
                                         const Eigen::Ref<const Eigen::VectorXd>& y,
                                         TauVariant variant = TauVariant::B);

inline std::optional<KendallResult> kendall_tau_b(const ScoreVector& x, const ScoreVector& y) {
    return kendall_tau(x.scores, y.scores, TauVariant::B);
}

/// Node indices whose score is at least the k-th best score. A tie group
/// straddling position k is included whole.
std::vector<Index> top_k(const Eigen::Ref<const Eigen::VectorXd>& scores, Index k);

struct RosterMatch {
    std::set<AuthorKey> matched;
    std::size_t count = 0;
    Index k = 0;
    std::size_t group_size = 0;
};

RosterMatch roster_match(const ScoreVector& scores, std::span<const AuthorKey> nodes,
                         const std::set<AuthorKey>& roster, Index k);

}  // namespace nba
