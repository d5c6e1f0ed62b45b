#pragma once

#include <string>

#include <Eigen/Dense>

#include "nba/network.hpp"

namespace nba {

enum class Measure { Degree, Betweenness, Closeness, Indegree };

std::string to_string(Measure m);
Measure parse_measure(const std::string& name);

/// Scores aligned to the network's node index.
struct ScoreVector {
    Measure measure;
    Eigen::VectorXd scores;

    Index size() const noexcept { return scores.size(); }
    double operator[](Index i) const { return scores(i); }
};

/// Number of distinct neighbors.
ScoreVector degree_centrality(const UndirectedBinaryNetwork& net);

/// Unnormalized betweenness over unordered pairs, unit edge lengths.
ScoreVector betweenness_centrality(const UndirectedBinaryNetwork& net);

/// Sum of reciprocal geodesic distances; unreachable nodes contribute 0.
ScoreVector harmonic_closeness(const UndirectedBinaryNetwork& net);

/// Total credit received by each author. With include_self the two self-loop
/// kinds are counted, which makes the score the author's accumulated credit;
/// without it only transfers from coauthors are summed.
ScoreVector indegree_prestige(const DirectedCreditNetwork& net, bool include_self = true);

}  // namespace nba
