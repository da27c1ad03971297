#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nspat/pattern.hpp"
#include "nspat/semigroup.hpp"

namespace nspat {

struct AdmitsVerdict {
  enum class Status { Admits, Rejects, UnknownUpToBound };
  Status status;
  std::vector<int64_t> witness;  // non-increasing members evaluating outside (Rejects only)
  int64_t value = 0;             // evaluation at the witness
  std::optional<int64_t> bound;  // search bound (UnknownUpToBound only)

  bool admits() const { return status == Status::Admits; }
  bool rejects() const { return status == Status::Rejects; }
};

struct AdmitsOptions {
  std::optional<int64_t> bound;  // search bound for admissible, not strongly admissible patterns
  bool parallel = true;          // use the OpenMP scan kernel
};

/// Three-valued admits check. Exact for non-admissible patterns (constructed
/// witness) and for strongly admissible patterns (conductor-bounded scan);
/// bounded semidecision otherwise. Witnesses are lexicographically first.
AdmitsVerdict admits(const NumericalSemigroup& sg, const Pattern& p, AdmitsOptions opts = {});

struct ClosureTrace {
  std::vector<NumericalSemigroup> steps;  // L_0 c L_1 c ... c L_k
  int64_t fixpoint_index = 0;             // least k with p(L_k) = L_k

  const NumericalSemigroup& last() const { return steps.back(); }
};

/// p(L) for a strongly admissible premonic pattern; always a numerical
/// semigroup containing L.
NumericalSemigroup image(const NumericalSemigroup& sg, const Pattern& p, bool parallel = true);

/// Fixpoint iteration of the image operator: the unique p-closure of L.
ClosureTrace closure(const NumericalSemigroup& sg, const Pattern& p, bool parallel = true);

/// The unique minimal p-system of generators of a semigroup admitting p.
/// Re-verified against the closure operator before returning.
std::vector<int64_t> minimal_p_system(const NumericalSemigroup& sg, const Pattern& p);

struct SubtractionDegreeResult {
  int64_t degree;
  int64_t lower_bound;  // Apery depth
  int64_t upper_bound;  // ceil(c/m) + 1
};

/// Least k such that the semigroup admits the subtraction pattern of degree k.
SubtractionDegreeResult subtraction_degree(const NumericalSemigroup& sg);

/// The separating family <q,q+1> u {(k-1)(q+1)+1 .. (k-1)(q+1)+(q-k-1)} u
/// [kq, oo); requires k > 2 and q > k+1.
NumericalSemigroup witness_family(int64_t q, int64_t k);

}  // namespace nspat
