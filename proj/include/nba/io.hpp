#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "nba/blockmodel.hpp"
#include "nba/corpus.hpp"
#include "nba/fitting.hpp"
#include "nba/network.hpp"

namespace nba::io {

/// Shortest decimal text that parses back to the same double.
std::string format_number(double value);

// Network document: nodes, nc_self, first_self, transfers sorted by
// (from, to), paper_count. Field order is fixed.
void write_network(std::ostream& out, const DirectedCreditNetwork& net);
DirectedCreditNetwork read_network(std::istream& in);

/// JSON object mapping coauthor count (string key) to a share array.
EmpiricalShareTable read_empirical_shares(std::istream& in);

/// JSON object mapping coauthor count (string key) to d.
DistributionPolicy parse_factors(const std::string& json_text);

/// One key per line; blank lines and lines starting with '#' are skipped.
std::set<AuthorKey> read_roster(std::istream& in);

/// Parsed CSV with a header row. Quoting follows RFC 4180.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(std::istream& in);
std::string csv_field(const std::string& text);
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Block matrix as labeled CSV; non-full modes add a first_self column.
void write_block_matrix(std::ostream& out, const BlockMatrix& m);

/// Writes through a sibling temporary file and renames it into place, so a
/// failing writer never leaves a partial file behind.
void write_atomically(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace nba::io
