#include "nba/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <set>
#include <unordered_set>

#include <json.hpp>

namespace nba {

namespace {

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

std::pair<double, double> mean_and_sd(const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, std::sqrt(ss / static_cast<double>(xs.size()))};
}

}  // namespace

AuthorKey::AuthorKey(std::string key) : key_(std::move(key)) {
    if (blank(key_)) throw DataError("author key must not be empty");
}

void BibRecord::validate() const {
    if (paper_id.empty()) throw DataError("record has an empty paper_id");
    if (authors.empty()) throw DataError("record '" + paper_id + "' has no authors");
    std::set<AuthorKey> seen;
    for (const auto& a : authors) {
        if (!seen.insert(a).second) {
            throw DataError("record '" + paper_id + "' lists author '" + a.str() + "' twice");
        }
    }
    if (corresponding_index >= authors.size()) {
        throw DataError("record '" + paper_id + "' has corresponding_index " +
                        std::to_string(corresponding_index) + " but only " +
                        std::to_string(authors.size()) + " authors");
    }
}

OrderingPolicy parse_ordering_policy(const std::string& name) {
    if (name == "byline") return OrderingPolicy::Byline;
    if (name == "corresponding-first") return OrderingPolicy::CorrespondingFirst;
    throw std::invalid_argument("unknown ordering policy '" + name + "'");
}

std::string to_string(OrderingPolicy policy) {
    return policy == OrderingPolicy::Byline ? "byline" : "corresponding-first";
}

Corpus parse_corpus(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> ids;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (blank(line)) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        try {
            const auto j = nlohmann::json::parse(line);
            if (!j.is_object()) throw DataError("expected a JSON object");

            BibRecord rec;
            const auto& id = j.at("paper_id");
            if (!id.is_string()) throw DataError("paper_id must be a string");
            rec.paper_id = id.get<std::string>();

            const auto& authors = j.at("authors");
            if (!authors.is_array()) throw DataError("authors must be an array");
            for (const auto& a : authors) {
                if (!a.is_string()) throw DataError("author names must be strings");
                rec.authors.emplace_back(a.get<std::string>());
            }
            if (auto it = j.find("corresponding_index"); it != j.end() && !it->is_null()) {
                if (!it->is_number_integer() || it->get<long long>() < 0) {
                    throw DataError("corresponding_index must be a non-negative integer");
                }
                rec.corresponding_index = it->get<std::size_t>();
            }
            if (auto it = j.find("year"); it != j.end() && !it->is_null()) {
                if (!it->is_number_integer()) throw DataError("year must be an integer");
                rec.year = it->get<int>();
            }
            rec.validate();
            if (!ids.insert(rec.paper_id).second) {
                throw DataError("duplicate paper_id '" + rec.paper_id + "'");
            }
            corpus.push_back(std::move(rec));
        } catch (const nlohmann::json::exception& e) {
            throw DataError(where + e.what());
        } catch (const DataError& e) {
            throw DataError(where + e.what());
        }
    }
    return corpus;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
    for (const auto& rec : corpus) {
        nlohmann::ordered_json j;
        j["paper_id"] = rec.paper_id;
        auto& authors = j["authors"] = nlohmann::ordered_json::array();
        for (const auto& a : rec.authors) authors.push_back(a.str());
        j["corresponding_index"] = rec.corresponding_index;
        if (rec.year) j["year"] = *rec.year;
        out << j.dump() << '\n';
    }
}

std::vector<AuthorKey> apply_author_ordering(const BibRecord& record, OrderingPolicy policy) {
    std::vector<AuthorKey> out = record.authors;
    if (policy == OrderingPolicy::CorrespondingFirst && record.corresponding_index > 0) {
        const auto lead = out.begin() + static_cast<std::ptrdiff_t>(record.corresponding_index);
        std::rotate(out.begin(), lead, lead + 1);
    }
    return out;
}

CorpusStats descriptive_stats(const Corpus& corpus, bool include_singles) {
    CorpusStats stats;
    std::map<AuthorKey, std::size_t> papers_per_author;
    std::map<AuthorKey, std::set<AuthorKey>> collaborators;
    std::vector<double> sizes;

    for (const auto& rec : corpus) {
        if (rec.size() < 2 && !include_singles) continue;
        ++stats.paper_count;
        ++stats.size_histogram[rec.size()];
        sizes.push_back(static_cast<double>(rec.size()));
        for (const auto& a : rec.authors) {
            ++papers_per_author[a];
            auto& mine = collaborators[a];
            for (const auto& b : rec.authors) {
                if (!(a == b)) mine.insert(b);
            }
        }
    }
    stats.unique_authors = papers_per_author.size();
    if (stats.paper_count == 0) return stats;

    std::tie(stats.avg_authors_per_paper, stats.sd_authors_per_paper) = mean_and_sd(sizes);

    std::vector<double> ppa, cpa;
    for (const auto& [author, n] : papers_per_author) {
        ppa.push_back(static_cast<double>(n));
        cpa.push_back(static_cast<double>(collaborators[author].size()));
    }
    std::tie(stats.avg_papers_per_author, stats.sd_papers_per_author) = mean_and_sd(ppa);
    std::tie(stats.avg_coauthors_per_author, stats.sd_coauthors_per_author) = mean_and_sd(cpa);
    return stats;
}

}  // namespace nba
