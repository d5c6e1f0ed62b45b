#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "nba/corpus.hpp"

namespace nba::testing {

inline BibRecord make_record(std::string id, std::vector<std::string> authors, std::size_t corresponding = 0) {
    BibRecord rec;
    rec.paper_id = std::move(id);
    for (auto& a : authors) rec.authors.emplace_back(std::move(a));
    rec.corresponding_index = corresponding;
    return rec;
}

/// The three-author example: A first, B second, C third.
inline Corpus three_author_paper() { return {make_record("abc", {"A", "B", "C"})}; }

/// Coauthor lists of two eleven-paper authors, in byline order.
inline Corpus carroll_hwang_corpus() {
    const std::vector<std::vector<std::string>> lists = {
        // carroll
        {"carroll, j. douglas", "winsberg, suzanne"},
        {"de soete, geert", "carroll, j. douglas"},
        {"carroll, j. douglas", "arabie, phipps"},
        {"takane, yoshio", "carroll, j. douglas"},
        {"desarbo, wayne s.", "carroll, j. douglas"},
        {"arabie, phipps", "carroll, j. douglas"},
        {"carroll, j. douglas", "pruzansky, sandra", "kruskal, joseph b."},
        {"weinberg, sharon l.", "carroll, j. douglas", "cohen, harvey s."},
        {"pruzansky, sandra", "tversky, amos", "carroll, j. douglas"},
        {"desarbo, wayne s.", "carroll, j. douglas", "clark, linda a.", "green, paul e."},
        {"de soete, geert", "desarbo, wayne s.", "furnas, george w.", "carroll, j. douglas"},
        // hwang
        {"takane, yoshio", "hwang, heungsun"},
        {"hwang, heungsun", "takane, yoshio"},
        {"hwang, heungsun", "takane, yoshio"},
        {"hwang, heungsun", "takane, yoshio"},
        {"hwang, heungsun", "dillon, william r.", "takane, yoshio"},
        {"hwang, heungsun", "desarbo, wayne s.", "takane, yoshio"},
        {"hwang, heungsun", "ho, moon-ho ringo", "lee, jonathan"},
        {"takane, yoshio", "hwang, heungsun", "abdi, herve"},
        {"jung, kwanghee", "takane, yoshio", "hwang, heungsun", "woodward, todd s."},
        {"hwang, heungsun", "jung, kwanghee", "takane, yoshio", "woodward, todd s."},
        {"hwang, heungsun", "suk, hye won", "lee, jang-han", "moskowitz, d. s.", "lim, jooseop"},
    };
    Corpus corpus;
    for (std::size_t i = 0; i < lists.size(); ++i) {
        corpus.push_back(make_record("ch-" + std::to_string(i + 1), lists[i]));
    }
    return corpus;
}

/// Papers sized like the journal corpus: 464x2, 144x3, 47x4, 4x5, 2x6, 1x7,
/// 1x12 authors. Names are drawn from a pool so authors recur across papers.
inline Corpus histogram_corpus(unsigned seed = 7) {
    const std::vector<std::pair<int, int>> histogram = {{464, 2}, {144, 3}, {47, 4}, {4, 5},
                                                        {2, 6},   {1, 7},   {1, 12}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> pick(0, 860);
    Corpus corpus;
    int id = 0;
    for (const auto& [count, size] : histogram) {
        for (int p = 0; p < count; ++p) {
            std::vector<std::string> authors;
            while (static_cast<int>(authors.size()) < size) {
                auto name = "author-" + std::to_string(pick(rng));
                if (std::find(authors.begin(), authors.end(), name) == authors.end()) {
                    authors.push_back(std::move(name));
                }
            }
            corpus.push_back(make_record("h" + std::to_string(++id), std::move(authors)));
        }
    }
    return corpus;
}

/// Random corpus: 1..max_papers papers of 1..max_size authors drawn from a
/// pool of pool_size names, random corresponding author.
inline Corpus random_corpus(std::mt19937& rng, int max_papers = 30, int max_size = 8, int pool_size = 25) {
    std::uniform_int_distribution<int> papers(1, max_papers), size(1, max_size), who(0, pool_size - 1);
    Corpus corpus;
    const int np = papers(rng);
    for (int p = 0; p < np; ++p) {
        const int n = std::min(size(rng), pool_size);
        std::vector<std::string> authors;
        while (static_cast<int>(authors.size()) < n) {
            auto name = "p" + std::to_string(who(rng));
            if (std::find(authors.begin(), authors.end(), name) == authors.end()) authors.push_back(name);
        }
        std::uniform_int_distribution<std::size_t> corr(0, authors.size() - 1);
        corpus.push_back(make_record("r" + std::to_string(p), std::move(authors), corr(rng)));
    }
    return corpus;
}

}  // namespace nba::testing
