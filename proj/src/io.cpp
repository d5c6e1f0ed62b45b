#include "nba/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace nba::io {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double value) {
    std::array<char, 32> buf{};
    const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf.data(), end);
}

void write_network(std::ostream& out, const DirectedCreditNetwork& net) {
    ordered_json doc;
    auto& nodes = doc["nodes"] = ordered_json::array();
    for (const auto& n : net.nodes) nodes.push_back(n.str());
    doc["nc_self"] = std::vector<double>(net.nc_self.begin(), net.nc_self.end());
    doc["first_self"] = std::vector<double>(net.first_self.begin(), net.first_self.end());
    auto& transfers = doc["transfers"] = ordered_json::array();
    // row-major storage iterates in (from, to) order
    const auto& w = net.transfer_weight;
    for (Index row = 0; row < w.outerSize(); ++row) {
        for (Eigen::SparseMatrix<double, Eigen::RowMajor>::InnerIterator it(w, row); it; ++it) {
            transfers.push_back({{"from", it.row()}, {"to", it.col()}, {"weight", it.value()}});
        }
    }
    doc["paper_count"] = net.paper_count;
    out << doc.dump(1) << '\n';
}

DirectedCreditNetwork read_network(std::istream& in) {
    try {
        const auto doc = nlohmann::json::parse(in);
        std::vector<AuthorKey> nodes;
        for (const auto& n : doc.at("nodes")) nodes.emplace_back(n.get<std::string>());
        const auto nc = doc.at("nc_self").get<std::vector<double>>();
        const auto fs = doc.at("first_self").get<std::vector<double>>();
        std::vector<Eigen::Triplet<double>> transfers;
        for (const auto& t : doc.at("transfers")) {
            transfers.emplace_back(t.at("from").get<Index>(), t.at("to").get<Index>(),
                                   t.at("weight").get<double>());
        }
        const auto papers = doc.at("paper_count").get<std::size_t>();
        return make_network(std::move(nodes), transfers,
                            Eigen::Map<const Eigen::VectorXd>(nc.data(), static_cast<Index>(nc.size())),
                            Eigen::Map<const Eigen::VectorXd>(fs.data(), static_cast<Index>(fs.size())),
                            papers);
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("network file: ") + e.what());
    }
}

EmpiricalShareTable read_empirical_shares(std::istream& in) {
    try {
        const auto doc = nlohmann::json::parse(in);
        if (!doc.is_object()) throw DataError("empirical shares must be a JSON object");
        std::map<int, Eigen::VectorXd> rows;
        for (const auto& [key, value] : doc.items()) {
            const int n = std::stoi(key);
            const auto xs = value.get<std::vector<double>>();
            rows[n] = Eigen::Map<const Eigen::VectorXd>(xs.data(), static_cast<Index>(xs.size()));
        }
        return EmpiricalShareTable(std::move(rows));
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("empirical shares: ") + e.what());
    } catch (const std::logic_error& e) {
        throw DataError(std::string("empirical shares: bad coauthor count: ") + e.what());
    }
}

DistributionPolicy parse_factors(const std::string& json_text) {
    try {
        const auto doc = nlohmann::json::parse(json_text);
        if (!doc.is_object()) throw DataError("factors must be a JSON object");
        std::map<int, DistributionFactor> factors;
        for (const auto& [key, value] : doc.items()) {
            std::size_t used = 0;
            const int n = std::stoi(key, &used);
            if (used != key.size()) throw DataError("bad coauthor count '" + key + "'");
            factors.emplace(n, DistributionFactor(value.get<double>()));
        }
        return DistributionPolicy(std::move(factors));
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("factors: ") + e.what());
    } catch (const std::logic_error& e) {
        throw DataError(std::string("factors: ") + e.what());
    }
}

std::set<AuthorKey> read_roster(std::istream& in) {
    std::set<AuthorKey> roster;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        roster.emplace(line);
    }
    return roster;
}

namespace {

std::vector<std::string> split_csv_record(std::istream& in, bool& got) {
    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    got = false;
    char c;
    while (in.get(c)) {
        got = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    field += '"';
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            break;
        } else if (c != '\r') {
            field += c;
        }
    }
    if (got) fields.push_back(std::move(field));
    return fields;
}

}  // namespace

CsvTable read_csv(std::istream& in) {
    CsvTable table;
    bool got = false;
    table.header = split_csv_record(in, got);
    if (!got) throw DataError("CSV input is empty");
    std::size_t line = 1;
    while (true) {
        auto row = split_csv_record(in, got);
        ++line;
        if (!got) break;
        if (row.size() == 1 && row[0].empty()) continue;
        if (row.size() != table.header.size()) {
            throw DataError("CSV line " + std::to_string(line) + " has " + std::to_string(row.size()) +
                            " fields, expected " + std::to_string(table.header.size()));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

std::string csv_field(const std::string& text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) return text;
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out << ',';
        out << csv_field(fields[i]);
    }
    out << '\n';
}

void write_block_matrix(std::ostream& out, const BlockMatrix& m) {
    const Index nb = m.cells.rows();
    const bool with_self = m.mode != BlockMode::Full;
    std::vector<std::string> header{"sender"};
    for (Index b = 0; b < nb; ++b) header.push_back("block" + std::to_string(b + 1));
    if (with_self) header.push_back("first_self");
    write_csv_row(out, header);
    for (Index s = 0; s < nb; ++s) {
        std::vector<std::string> row{"block" + std::to_string(s + 1)};
        for (Index t = 0; t < nb; ++t) row.push_back(format_number(m.cells(s, t)));
        if (with_self) row.push_back(format_number(m.diag_first_self(s)));
        write_csv_row(out, row);
    }
}

void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
    auto tmp = path;
    tmp += ".tmp";
    try {
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
            writer(out);
            out.flush();
            if (!out) throw std::runtime_error("write to " + tmp.string() + " failed");
        }
        std::filesystem::rename(tmp, path);
    } catch (...) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        throw;
    }
}

}  // namespace nba::io
