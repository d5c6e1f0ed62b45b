// Command-line front end: corpus -> network -> measures -> reports.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nba/blockmodel.hpp"
#include "nba/corpus.hpp"
#include "nba/fitting.hpp"
#include "nba/io.hpp"
#include "nba/measures.hpp"
#include "nba/network.hpp"
#include "nba/rank_analysis.hpp"

namespace {

using namespace nba;
namespace fs = std::filesystem;

constexpr int kUsageError = 1;
constexpr int kDataError = 2;

/// Defaults shared by the subcommands; NBA_CONFIG may point to a JSON file
/// overriding them, command-line flags override both.
struct RunConfig {
    OrderingPolicy ordering = OrderingPolicy::CorrespondingFirst;
    DistributionPolicy factors = DistributionPolicy::fitted_default();
    bool include_singles = false;
    double grid_step = 0.001;
    std::vector<Index> cuts;
    std::vector<double> percentages{20, 30, 50};
    std::string format = "csv";
};

std::ifstream open_input(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot read " + path.string());
    return in;
}

RunConfig load_config() {
    RunConfig cfg;
    const char* path = std::getenv("NBA_CONFIG");
    if (path == nullptr || *path == '\0') return cfg;
    auto in = open_input(path);
    try {
        const auto j = nlohmann::json::parse(in);
        if (j.contains("ordering")) cfg.ordering = parse_ordering_policy(j["ordering"].get<std::string>());
        if (j.contains("factors")) cfg.factors = io::parse_factors(j["factors"].dump());
        if (j.contains("include_singles")) cfg.include_singles = j["include_singles"].get<bool>();
        if (j.contains("grid_step")) cfg.grid_step = j["grid_step"].get<double>();
        if (j.contains("cuts")) cfg.cuts = j["cuts"].get<std::vector<Index>>();
        if (j.contains("percentages")) cfg.percentages = j["percentages"].get<std::vector<double>>();
        if (j.contains("format")) cfg.format = j["format"].get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("config ") + path + ": " + e.what());
    }
    if (cfg.format != "csv" && cfg.format != "json") throw DataError("config: format must be csv or json");
    return cfg;
}

// ---------------------------------------------------------------------------
// Tabular output

using Cell = std::variant<std::string, double>;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    void write(std::ostream& out, const std::string& format) const {
        if (format == "json") {
            nlohmann::ordered_json doc = nlohmann::ordered_json::array();
            for (const auto& row : rows) {
                nlohmann::ordered_json obj;
                for (std::size_t c = 0; c < header.size(); ++c) {
                    if (const auto* d = std::get_if<double>(&row[c]);
                        d && std::trunc(*d) == *d && std::abs(*d) < 1e15) {
                        obj[header[c]] = static_cast<long long>(*d);
                    } else {
                        std::visit([&](const auto& v) { obj[header[c]] = v; }, row[c]);
                    }
                }
                doc.push_back(std::move(obj));
            }
            out << doc.dump(1) << '\n';
            return;
        }
        io::write_csv_row(out, header);
        for (const auto& row : rows) {
            std::vector<std::string> fields;
            for (const auto& cell : row) {
                if (const auto* s = std::get_if<std::string>(&cell)) {
                    fields.push_back(*s);
                } else {
                    fields.push_back(io::format_number(std::get<double>(cell)));
                }
            }
            io::write_csv_row(out, fields);
        }
    }
};

void emit(const std::string& out_path, const std::function<void(std::ostream&)>& writer) {
    if (out_path.empty() || out_path == "-") {
        writer(std::cout);
        std::cout.flush();
    } else {
        io::write_atomically(out_path, writer);
    }
}

DistributionPolicy factors_from_flag(const std::string& value) {
    if (!value.empty() && value.front() == '{') return io::parse_factors(value);
    auto in = open_input(value);
    std::stringstream buf;
    buf << in.rdbuf();
    return io::parse_factors(buf.str());
}

Corpus read_corpus_file(const std::string& path) {
    auto in = open_input(path);
    try {
        return parse_corpus(in);
    } catch (const DataError& e) {
        throw DataError(path + ": " + e.what());
    }
}

DirectedCreditNetwork read_network_file(const std::string& path) {
    auto in = open_input(path);
    return io::read_network(in);
}

/// Scores file as written by `measures`: an author column plus one numeric
/// column per measure.
struct ScoreTable {
    std::vector<AuthorKey> authors;
    std::vector<std::string> measures;
    std::vector<Eigen::VectorXd> columns;
};

ScoreTable read_score_table(const std::string& path) {
    auto in = open_input(path);
    const auto csv = io::read_csv(in);
    if (csv.header.empty() || csv.header.front() != "author") {
        throw DataError(path + ": first column must be 'author'");
    }
    ScoreTable t;
    t.measures.assign(csv.header.begin() + 1, csv.header.end());
    t.columns.assign(t.measures.size(), Eigen::VectorXd(static_cast<Index>(csv.rows.size())));
    for (std::size_t r = 0; r < csv.rows.size(); ++r) {
        t.authors.emplace_back(csv.rows[r][0]);
        for (std::size_t c = 0; c < t.measures.size(); ++c) {
            try {
                std::size_t used = 0;
                const double v = std::stod(csv.rows[r][c + 1], &used);
                if (used != csv.rows[r][c + 1].size()) throw std::invalid_argument("trailing text");
                t.columns[c](static_cast<Index>(r)) = v;
            } catch (const std::logic_error&) {
                throw DataError(path + ": row " + std::to_string(r + 2) + " has a non-numeric score");
            }
        }
    }
    return t;
}

ScoreVector compute_measure(const DirectedCreditNetwork& net, const UndirectedBinaryNetwork& undirected,
                            Measure m, bool include_self) {
    switch (m) {
        case Measure::Degree: return degree_centrality(undirected);
        case Measure::Betweenness: return betweenness_centrality(undirected);
        case Measure::Closeness: return harmonic_closeness(undirected);
        case Measure::Indegree: return indegree_prestige(net, include_self);
    }
    throw std::logic_error("unhandled measure");
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

// ---------------------------------------------------------------------------
// Subcommands

int run_fit(const std::string& empirical, double grid_step, const std::string& out, const std::string& format) {
    auto in = open_input(empirical);
    const auto table = io::read_empirical_shares(in);
    const auto fits = fit_all(table, grid_step);
    int widest = 0;
    for (const auto& [n, f] : fits) widest = std::max(widest, n);

    Table t;
    t.header = {"n_authors", "d", "lof"};
    for (int r = 1; r <= widest; ++r) t.header.push_back("share_" + std::to_string(r));
    for (const auto& [n, f] : fits) {
        std::vector<Cell> row{static_cast<double>(n), f.best_d.value(), f.lof};
        for (int r = 0; r < widest; ++r) {
            row.push_back(r < n ? Cell(f.model_shares(r)) : Cell(std::string()));
        }
        t.rows.push_back(std::move(row));
    }
    emit(out, [&](std::ostream& os) { t.write(os, format); });
    return 0;
}

int run_build(const std::string& corpus_path, const RunConfig& cfg, const std::string& out) {
    const auto corpus = read_corpus_file(corpus_path);
    const auto net = build_directed_network(corpus, cfg.ordering, cfg.factors, cfg.include_singles);
    emit(out, [&](std::ostream& os) { io::write_network(os, net); });
    return 0;
}

int run_stats(const std::string& corpus_path, const RunConfig& cfg, const std::string& out) {
    const auto corpus = read_corpus_file(corpus_path);
    const auto stats = descriptive_stats(corpus, cfg.include_singles);
    const auto net = symmetrize(build_directed_network(corpus, cfg.ordering, cfg.factors, cfg.include_singles));
    const auto comps = connected_components(net);

    Table t;
    t.header = {"statistic", "value"};
    auto add = [&](const std::string& name, std::optional<double> v) {
        t.rows.push_back({name, v ? Cell(*v) : Cell(std::string("NA"))});
    };
    add("paper_count", static_cast<double>(stats.paper_count));
    for (const auto& [size, count] : stats.size_histogram) {
        add("papers_with_" + std::to_string(size) + "_authors", static_cast<double>(count));
    }
    add("unique_authors", static_cast<double>(stats.unique_authors));
    add("avg_papers_per_author", stats.avg_papers_per_author);
    add("sd_papers_per_author", stats.sd_papers_per_author);
    add("avg_authors_per_paper", stats.avg_authors_per_paper);
    add("sd_authors_per_paper", stats.sd_authors_per_paper);
    add("avg_coauthors_per_author", stats.avg_coauthors_per_author);
    add("sd_coauthors_per_author", stats.sd_coauthors_per_author);
    add("components", static_cast<double>(comps.size()));
    add("largest_component", comps.empty() ? std::nullopt : std::optional<double>(comps[0].size()));
    add("second_component", comps.size() < 2 ? std::nullopt : std::optional<double>(comps[1].size()));
    add("density", density(net));
    emit(out, [&](std::ostream& os) { t.write(os, cfg.format); });
    return 0;
}

int run_measures(const std::string& network_path, const std::string& which, bool exclude_self,
                 const std::string& out, const std::string& format) {
    const auto net = read_network_file(network_path);
    const auto undirected = symmetrize(net);
    std::vector<Measure> measures;
    if (which == "all") {
        measures = {Measure::Degree, Measure::Betweenness, Measure::Closeness, Measure::Indegree};
    } else {
        measures = {parse_measure(which)};
    }
    std::vector<ScoreVector> scores;
    for (auto m : measures) scores.push_back(compute_measure(net, undirected, m, !exclude_self));

    Table t;
    t.header = {"author"};
    for (auto m : measures) t.header.push_back(to_string(m));
    for (Index i = 0; i < net.size(); ++i) {
        std::vector<Cell> row{net.nodes[static_cast<std::size_t>(i)].str()};
        for (const auto& s : scores) row.push_back(s[i]);
        t.rows.push_back(std::move(row));
    }
    emit(out, [&](std::ostream& os) { t.write(os, format); });
    return 0;
}

int run_rank(const std::string& scores_path, const std::string& out) {
    const auto scores = read_score_table(scores_path);
    Table t;
    t.header = {"author"};
    std::vector<Eigen::VectorXd> ranks;
    for (std::size_t c = 0; c < scores.measures.size(); ++c) {
        t.header.push_back(scores.measures[c] + "_rank");
        ranks.push_back(fractional_ranks(scores.columns[c]));
    }
    for (std::size_t i = 0; i < scores.authors.size(); ++i) {
        std::vector<Cell> row{scores.authors[i].str()};
        for (const auto& r : ranks) row.push_back(r(static_cast<Index>(i)));
        t.rows.push_back(std::move(row));
    }
    emit(out, [&](std::ostream& os) { t.write(os, "csv"); });
    return 0;
}

int run_correlate(const std::vector<std::string>& paths, const std::string& variant, const std::string& out) {
    // join all files' columns on the author key of the first file
    std::vector<std::string> names;
    std::vector<Eigen::VectorXd> columns;
    std::vector<AuthorKey> authors;
    for (const auto& path : paths) {
        const auto t = read_score_table(path);
        if (authors.empty()) authors = t.authors;
        std::map<AuthorKey, Index> where;
        for (std::size_t i = 0; i < t.authors.size(); ++i) where.emplace(t.authors[i], static_cast<Index>(i));
        if (where.size() != authors.size()) throw DataError(path + ": author set differs from " + paths[0]);
        for (std::size_t c = 0; c < t.measures.size(); ++c) {
            Eigen::VectorXd aligned(static_cast<Index>(authors.size()));
            for (std::size_t i = 0; i < authors.size(); ++i) {
                const auto it = where.find(authors[i]);
                if (it == where.end()) throw DataError(path + ": missing author " + authors[i].str());
                aligned(static_cast<Index>(i)) = t.columns[c](it->second);
            }
            names.push_back(t.measures[c]);
            columns.push_back(std::move(aligned));
        }
    }
    const auto tau_variant = variant == "a" ? TauVariant::A : TauVariant::B;

    Table t;
    t.header = {"measure_a", "measure_b", "tau", "z", "significant_0.01"};
    for (std::size_t a = 0; a < columns.size(); ++a) {
        for (std::size_t b = a + 1; b < columns.size(); ++b) {
            std::vector<Cell> row{names[a], names[b]};
            std::optional<KendallResult> r;
            if (authors.size() >= 2) r = kendall_tau(columns[a], columns[b], tau_variant);
            if (r) {
                row.push_back(r->tau);
                row.push_back(r->z ? Cell(*r->z) : Cell(std::string("NA")));
                row.push_back(std::string(r->significant_at_1pct() ? "yes" : "no"));
            } else {
                row.insert(row.end(), {std::string("NA"), std::string("NA"), std::string("NA")});
            }
            t.rows.push_back(std::move(row));
        }
    }
    emit(out, [&](std::ostream& os) { t.write(os, "csv"); });
    return 0;
}

int run_blocks(const std::string& network_path, const std::string& mode, const std::string& basis,
               const RunConfig& cfg, const std::string& out) {
    const auto net = read_network_file(network_path);
    const auto undirected = symmetrize(net);
    const auto scores = compute_measure(net, undirected, parse_measure(basis), true);
    const auto cuts = cfg.cuts.empty() ? cuts_from_percentages(net.size(), cfg.percentages) : cfg.cuts;
    const auto partition = partition_by_ranking(scores, net.nodes, cuts);
    const auto matrix = block_credit_matrix(net, partition, parse_block_mode(mode));
    emit(out, [&](std::ostream& os) { io::write_block_matrix(os, matrix); });
    return 0;
}

int run_roster(const std::string& scores_path, const std::string& roster_path, const std::string& measure,
               Index top, const std::string& out) {
    const auto scores = read_score_table(scores_path);
    auto in = open_input(roster_path);
    const auto roster = io::read_roster(in);

    Table t;
    t.header = {"measure", "k", "group_size", "roster_size", "matched_count", "matched"};
    for (std::size_t c = 0; c < scores.measures.size(); ++c) {
        if (!measure.empty() && scores.measures[c] != measure) continue;
        const ScoreVector sv{Measure::Degree, scores.columns[c]};
        const auto match = roster_match(sv, scores.authors, roster, top);
        std::string matched;
        for (const auto& key : match.matched) {
            if (!matched.empty()) matched += ';';
            matched += key.str();
        }
        t.rows.push_back({scores.measures[c], static_cast<double>(top), static_cast<double>(match.group_size),
                          static_cast<double>(roster.size()), static_cast<double>(match.count), matched});
    }
    if (!measure.empty() && t.rows.empty()) throw DataError("no column named '" + measure + "' in " + scores_path);
    emit(out, [&](std::ostream& os) { t.write(os, "csv"); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Network-based coauthorship credit allocation and analysis"};
    app.require_subcommand(1);

    RunConfig cfg;
    try {
        cfg = load_config();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }

    std::string out, ordering = to_string(cfg.ordering), factors, format = cfg.format;
    bool include_singles = cfg.include_singles;
    const std::vector<std::string> formats{"csv", "json"};

    auto* fit = app.add_subcommand("fit", "Fit distribution factors to empirical credit shares");
    std::string empirical;
    double grid_step = cfg.grid_step;
    fit->add_option("--empirical", empirical, "JSON map of coauthor count to share list")->required();
    fit->add_option("--grid-step", grid_step, "Grid spacing for d")->check(CLI::Range(1e-9, 0.1));
    fit->add_option("--format", format)->check(CLI::IsMember(formats));
    fit->add_option("-o,--out", out, "Output file (default stdout)");

    auto* build = app.add_subcommand("build", "Build the directed credit network from a corpus");
    std::string corpus;
    build->add_option("--corpus", corpus, "Newline-delimited JSON records")->required();
    build->add_option("--factors", factors, "JSON object {\"N\": d} or a file holding one");
    build->add_option("--ordering", ordering)->check(CLI::IsMember({"byline", "corresponding-first"}));
    build->add_flag("--include-singles", include_singles, "Add single-authored papers as self-loops");
    build->add_option("-o,--out", out, "Output file (default stdout)");

    auto* stats = app.add_subcommand("stats", "Descriptive statistics of a corpus and its network");
    stats->add_option("--corpus", corpus)->required();
    stats->add_option("--factors", factors);
    stats->add_option("--ordering", ordering)->check(CLI::IsMember({"byline", "corresponding-first"}));
    stats->add_flag("--include-singles", include_singles);
    stats->add_option("--format", format)->check(CLI::IsMember(formats));
    stats->add_option("-o,--out", out);

    auto* measures = app.add_subcommand("measures", "Prominence scores per author");
    std::string network, which = "all";
    bool exclude_self = false;
    measures->add_option("--network", network, "Network file written by build")->required();
    measures->add_option("--measure", which)
        ->check(CLI::IsMember({"degree", "betweenness", "closeness", "indegree", "all"}));
    measures->add_flag("--exclude-self", exclude_self, "Indegree without self-loops");
    measures->add_option("--format", format)->check(CLI::IsMember(formats));
    measures->add_option("-o,--out", out);

    auto* rank = app.add_subcommand("rank", "Fractional ranks for every score column");
    std::string scores_path;
    rank->add_option("--scores", scores_path, "CSV written by measures")->required();
    rank->add_option("-o,--out", out);

    auto* correlate = app.add_subcommand("correlate", "Kendall tau between every pair of score columns");
    std::vector<std::string> rankings;
    std::string variant = "b";
    correlate->add_option("--rankings", rankings, "Score or rank CSV files")->required();
    correlate->add_option("--variant", variant)->check(CLI::IsMember({"a", "b"}));
    correlate->add_option("-o,--out", out);

    auto* blocks = app.add_subcommand("blocks", "Credit flow between rank-defined blocks");
    std::string mode = "full", basis = "indegree", cuts_text, pct_text;
    blocks->add_option("--network", network)->required();
    blocks->add_option("--mode", mode)->check(CLI::IsMember({"full", "transfer", "normalized"}));
    blocks->add_option("--basis", basis)->check(CLI::IsMember({"degree", "betweenness", "closeness", "indegree"}));
    auto* cuts_opt = blocks->add_option("--cuts", cuts_text, "Block sizes, best first, e.g. 175,257,429");
    blocks->add_option("--percent", pct_text, "Block percentages, e.g. 20,30,50")->excludes(cuts_opt);
    blocks->add_option("-o,--out", out);

    auto* roster_cmd = app.add_subcommand("roster", "Match top-ranked authors against a roster");
    std::string roster_path, measure;
    Index top = 100;
    roster_cmd->add_option("--scores", scores_path)->required();
    roster_cmd->add_option("--roster", roster_path, "One author key per line")->required();
    roster_cmd->add_option("--measure", measure, "Score column (default: every column)");
    roster_cmd->add_option("--top", top)->check(CLI::PositiveNumber);
    roster_cmd->add_option("-o,--out", out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        cfg.ordering = parse_ordering_policy(ordering);
        cfg.include_singles = include_singles;
        cfg.format = format;
        if (!factors.empty()) cfg.factors = factors_from_flag(factors);
        if (!cuts_text.empty()) {
            cfg.cuts.clear();
            for (const auto& c : split_list(cuts_text)) cfg.cuts.push_back(std::stol(c));
        }
        if (!pct_text.empty()) {
            cfg.cuts.clear();
            cfg.percentages.clear();
            for (const auto& p : split_list(pct_text)) cfg.percentages.push_back(std::stod(p));
        }
    } catch (const std::logic_error& e) {
        std::cerr << "error: invalid option value: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }

    try {
        if (*fit) return run_fit(empirical, grid_step, out, cfg.format);
        if (*build) return run_build(corpus, cfg, out);
        if (*stats) return run_stats(corpus, cfg, out);
        if (*measures) return run_measures(network, which, exclude_self, out, cfg.format);
        if (*rank) return run_rank(scores_path, out);
        if (*correlate) return run_correlate(rankings, variant, out);
        if (*blocks) return run_blocks(network, mode, basis, cfg, out);
        if (*roster_cmd) return run_roster(scores_path, roster_path, measure, top, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDataError;
    }
    return kUsageError;
}
