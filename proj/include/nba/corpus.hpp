#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace nba {

/// Raised for malformed or inconsistent input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Canonical, already disambiguated author identity. Compared bytewise.
class AuthorKey {
public:
    explicit AuthorKey(std::string key);

    const std::string& str() const noexcept { return key_; }

    friend bool operator==(const AuthorKey&, const AuthorKey&) = default;
    friend std::strong_ordering operator<=>(const AuthorKey& a, const AuthorKey& b) {
        return a.key_.compare(b.key_) <=> 0;
    }

private:
    std::string key_;
};

struct BibRecord {
    std::string paper_id;
    std::vector<AuthorKey> authors;  // byline order
    std::size_t corresponding_index = 0;
    std::optional<int> year;

    std::size_t size() const noexcept { return authors.size(); }

    /// Throws DataError when the record breaks its invariants.
    void validate() const;

    friend bool operator==(const BibRecord&, const BibRecord&) = default;
};

using Corpus = std::vector<BibRecord>;

enum class OrderingPolicy { Byline, CorrespondingFirst };

OrderingPolicy parse_ordering_policy(const std::string& name);
std::string to_string(OrderingPolicy policy);

/// Reads newline-delimited JSON records. Blank lines are skipped.
/// Errors carry the 1-based line number.
Corpus parse_corpus(std::istream& in);

/// One JSON object per record, LF terminated.
void write_corpus(std::ostream& out, const Corpus& corpus);

std::vector<AuthorKey> apply_author_ordering(const BibRecord& record, OrderingPolicy policy);

struct CorpusStats {
    std::size_t paper_count = 0;
    std::map<std::size_t, std::size_t> size_histogram;
    std::size_t unique_authors = 0;
    // Population SDs. Empty when the filtered corpus is empty.
    std::optional<double> avg_papers_per_author;
    std::optional<double> sd_papers_per_author;
    std::optional<double> avg_authors_per_paper;
    std::optional<double> sd_authors_per_paper;
    std::optional<double> avg_coauthors_per_author;
    std::optional<double> sd_coauthors_per_author;
};

CorpusStats descriptive_stats(const Corpus& corpus, bool include_singles = false);

}  // namespace nba
