#include "nba/fitting.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "nba/corpus.hpp"

namespace nba {

EmpiricalShareTable::EmpiricalShareTable(std::map<int, Eigen::VectorXd> rows) : rows_(std::move(rows)) {
    for (const auto& [n, row] : rows_) {
        const std::string label = std::to_string(n) + "-author row";
        if (n < 2) throw DataError("empirical shares need at least two authors");
        if (row.size() != n) throw DataError(label + " must have " + std::to_string(n) + " entries");
        if ((row.array() <= 0.0).any() || (row.array() >= 1.0).any()) {
            throw DataError(label + " has a share outside (0, 1)");
        }
        if (std::abs(row.sum() - 1.0) > 0.02) throw DataError(label + " does not sum to 1");
    }
}

EmpiricalShareTable EmpiricalShareTable::psychology_survey() {
    std::map<int, Eigen::VectorXd> rows;
    rows[2] = (Eigen::VectorXd(2) << 0.61, 0.39).finished();
    rows[3] = (Eigen::VectorXd(3) << 0.49, 0.29, 0.22).finished();
    rows[4] = (Eigen::VectorXd(4) << 0.42, 0.24, 0.19, 0.14).finished();
    return EmpiricalShareTable(std::move(rows));
}

double lack_of_fit(const Eigen::Ref<const Eigen::VectorXd>& empirical,
                   const Eigen::Ref<const Eigen::VectorXd>& model) {
    if (empirical.size() != model.size()) {
        throw std::invalid_argument("empirical and model shares differ in length");
    }
    if (model.size() < 2) throw std::invalid_argument("lack of fit needs at least two shares");
    if ((model.array() <= 0.0).any()) throw std::invalid_argument("model share of zero");
    const double n = static_cast<double>(model.size());
    return ((empirical - model).array().square() / model.array()).sum() / (n - 1.0);
}

FitResult fit_distribution_factor(int n_authors, const Eigen::Ref<const Eigen::VectorXd>& empirical,
                                  double grid_step) {
    if (n_authors < 2) throw std::invalid_argument("fitting needs at least two authors");
    if (empirical.size() != n_authors) {
        throw std::invalid_argument("empirical shares differ in length from the author count");
    }
    if (!(grid_step > 0.0 && grid_step <= 0.1)) {
        throw std::invalid_argument("grid step must lie in (0, 0.1]");
    }

    FitResult best;
    best.n_authors = n_authors;
    best.lof = std::numeric_limits<double>::infinity();
    const auto steps = static_cast<long>(std::floor(1.0 / grid_step + 1e-9));
    for (long k = 0; k <= steps; ++k) {
        const DistributionFactor d(std::min(1.0, static_cast<double>(k) * grid_step));
        auto model = credit_shares(n_authors, d);
        if ((model.array() <= 0.0).any()) continue;
        const double lof = lack_of_fit(empirical, model);
        if (lof < best.lof) {
            best.best_d = d;
            best.lof = lof;
            best.model_shares = std::move(model);
        }
    }
    return best;
}

std::map<int, FitResult> fit_all(const EmpiricalShareTable& table, double grid_step) {
    std::map<int, FitResult> out;
    for (const auto& [n, row] : table.rows()) out.emplace(n, fit_distribution_factor(n, row, grid_step));
    return out;
}

}  // namespace nba
