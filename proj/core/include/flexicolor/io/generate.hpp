#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "flexicolor/hypergraph.hpp"
#include "flexicolor/io/instance.hpp"

namespace flexicolor::io {

/// "name" or "name:key=value,key=value".
struct FamilySpec {
  std::string name;
  std::map<std::string, std::int64_t> params;

  std::int64_t get(const std::string& key, std::int64_t fallback) const;
};

FamilySpec parse_family(const std::string& text);

/// Fixed instances and random families by name; deterministic in (spec, seed).
/// Throws PreconditionError on an unknown name or bad parameter.
Instance generate(const std::string& spec, std::uint64_t seed);

/// Names accepted by generate(), fixtures first.
std::vector<std::string> family_names();

// Fixtures.

/// Even 10-cycle with lists of size two whose requests admit no satisfied
/// vertex. The two unlabeled vertices are completed by the first
/// lexicographic choice that keeps the optimum at zero.
Instance cycle_counterexample();
/// Diamond with degree-sized lists and a widespread request of optimum 0.
Instance diamond_counterexample();
/// 3-tree on 8 vertices in construction order.
Instance three_tree_example();
/// Ring of `gadgets` copies of K_{degree+1} minus an edge, one request per gadget.
Instance gadget_ring(int gadgets, int degree);
/// Five requested vertices plus one vertex per triple of them.
Instance triple_cover();
/// Two K_degree joined by a perfect matching; color 1 requested on the first.
Instance two_cliques_matching(int degree);
/// 3-cube plus the 0-7 diagonal: 3-connected, degrees 3 and 4.
Instance cube_with_chord();
/// Two triangles sharing a vertex with tight lists.
Instance bowtie();
/// K4 minus an edge with tight lists and no request.
Instance tight_diamond();

// Random families.

enum class RequestShape { Unweighted = 0, Unique = 1, Weighted = 2 };

/// Connected graph with maximum degree at most `degree` (at least 3, never
/// K_{degree+1}); lists of size deg + 1 below the maximum and maximum at it,
/// plus `slack` extra colors; a random request of random size.
Instance random_bounded_degree(int n, int degree, RequestShape shape, int slack, std::mt19937_64& rng);

/// Random k-tree in a shuffled labelling with (k+1)-lists. With non-empty
/// `parts` the lists follow that partition over disjoint color classes.
Instance random_ktree(int n, int k, const std::vector<int>& parts, RequestShape shape, std::mt19937_64& rng);

/// Graph inside the closure of a random forest of height <= k, lists of size
/// k up to k + slack.
Instance random_treedepth(int n, int k, RequestShape shape, int slack, std::mt19937_64& rng);

/// Verified 3-connected, non-regular graph with maximum degree exactly
/// `degree` (>= 4) and a random requested set.
Instance random_three_connected(int n, int degree, std::mt19937_64& rng);

/// 3-edge-connected hypergraph with edges of size 1..d.
degeneracy::Hypergraph random_hypergraph(int n, int d, std::mt19937_64& rng);

}  // namespace flexicolor::io
