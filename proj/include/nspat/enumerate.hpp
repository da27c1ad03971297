#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "nspat/interact.hpp"
#include "nspat/pattern.hpp"
#include "nspat/semigroup.hpp"

namespace nspat {

/// Deduplicated DAG of semigroups, nodes keyed by canonical representation.
/// Edges are (parent, child, removed generator); a node may have several
/// parents.
struct SemigroupDag {
  struct Node {
    NumericalSemigroup semigroup;
    std::vector<int64_t> psystem;  // minimal p-system (ordinary generators for the census)
    int64_t frobenius;
  };

  std::map<std::string, Node> nodes;                           // key order is canonical
  std::set<std::tuple<std::string, std::string, int64_t>> edges;  // (from, to, removed)
  std::string root;

  size_t out_degree(const std::string& key) const;
  bool is_leaf(const std::string& key) const { return out_degree(key) == 0; }
};

/// All semigroups admitting p with Frobenius number <= max_frobenius, built
/// breadth-first from the naturals by removing p-generators greater than the
/// Frobenius number.
SemigroupDag enumerate_sp(const Pattern& p, int64_t max_frobenius);

/// Census of all numerical semigroups of genus <= max_genus.
SemigroupDag enumerate_all(int64_t max_genus);

struct EquivalenceVerdict {
  enum class Status { Separated, IndistinguishableUpToGenus };
  Status status;
  std::optional<NumericalSemigroup> separator;  // admits exactly one of the two
  int64_t genus_bound;
};

/// Bounded equivalence check: boolean invariants (admissibility degree, d)
/// yield constructed separators; otherwise the census is scanned.
EquivalenceVerdict equivalence_check(const Pattern& p1, const Pattern& p2, int64_t max_genus);

/// Deterministic DOT rendering; labels are "<g1,...,gr>_p, F=f".
std::string to_dot(const SemigroupDag& dag);

/// Deterministic JSON rendering of nodes and edges.
std::string to_json(const SemigroupDag& dag);

}  // namespace nspat
