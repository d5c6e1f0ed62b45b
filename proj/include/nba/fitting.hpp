#pragma once

#include <map>

#include <Eigen/Dense>

#include "nba/credit_model.hpp"

namespace nba {

/// Observed credit share per rank, keyed by coauthor count.
class EmpiricalShareTable {
public:
    EmpiricalShareTable() = default;
    explicit EmpiricalShareTable(std::map<int, Eigen::VectorXd> rows);

    /// The perceived-contribution survey shares for two to four authors.
    static EmpiricalShareTable psychology_survey();

    const std::map<int, Eigen::VectorXd>& rows() const noexcept { return rows_; }

private:
    std::map<int, Eigen::VectorXd> rows_;
};

struct FitResult {
    int n_authors = 0;
    DistributionFactor best_d;
    double lof = 0.0;
    CreditShareVector model_shares;
};

/// LOF = 1/(n-1) * sum (E - C)^2 / C over the n ranks.
/// Throws std::invalid_argument on length mismatch, n < 2 or a zero model share.
double lack_of_fit(const Eigen::Ref<const Eigen::VectorXd>& empirical,
                   const Eigen::Ref<const Eigen::VectorXd>& model);

/// Exhaustive scan of d over {0, step, 2 step, ...} up to 1. Grid points
/// where the model assigns some rank zero credit (d = 1 leaves the last
/// author empty) have no defined LOF and are skipped. Ties go to smaller d.
FitResult fit_distribution_factor(int n_authors, const Eigen::Ref<const Eigen::VectorXd>& empirical,
                                  double grid_step = 0.001);

std::map<int, FitResult> fit_all(const EmpiricalShareTable& table, double grid_step = 0.001);

}  // namespace nba
