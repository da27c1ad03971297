#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace nspat {

struct AperySet {
  int64_t modulus;                 // positive member of the semigroup
  std::vector<int64_t> witnesses;  // witnesses[i] = least member congruent to i (mod modulus)
};

/// A numerical semigroup in canonical form: the conductor c together with the
/// sorted members below c. The natural numbers are (c = 0, {}). Values are
/// immutable after construction and safe to share across threads.
class NumericalSemigroup {
 public:
  /// Smallest numerical semigroup containing `gens`. Throws GcdNotOne when the
  /// generated monoid has infinite complement.
  static NumericalSemigroup from_generators(const std::vector<int64_t>& gens);

  static NumericalSemigroup natural() { return NumericalSemigroup(0, {}); }

  /// Canonicalizes a membership bitmap over [0, bound) under the promise that
  /// every integer >= bound is a member.
  static NumericalSemigroup from_membership(const std::vector<char>& member, int64_t bound);

  int64_t conductor() const { return conductor_; }
  int64_t frobenius() const { return conductor_ - 1; }  // -1 for the naturals
  const std::vector<int64_t>& small_elements() const { return small_; }

  int64_t multiplicity() const;
  int64_t genus() const { return conductor_ - static_cast<int64_t>(small_.size()); }

  bool contains(int64_t x) const;

  /// Members of the semigroup in [0, bound), ascending.
  std::vector<int64_t> members_below(int64_t bound) const;

  /// The unique minimal system of generators.
  std::vector<int64_t> minimal_generators() const;

  /// Apery set of lambda: least member in each residue class mod lambda.
  /// Throws NotAMember unless lambda is a positive member.
  AperySet apery(int64_t lambda) const;

  /// Maximum length (in vertices) of a chain w_1 <_L ... <_L w_d inside
  /// Ap(L, m). Bounded by the multiplicity.
  int64_t apery_depth() const;

  /// a <=_L b, i.e. b - a is a member. Both arguments must be members.
  bool leq_in(int64_t a, int64_t b) const;

  /// L \ {a} for a minimal generator a. Throws NotMinimalGenerator otherwise.
  NumericalSemigroup remove_element(int64_t a) const;

  /// L u {F(L)}. Throws AlreadyFull for the naturals.
  NumericalSemigroup add_frobenius() const;

  bool operator==(const NumericalSemigroup& o) const {
    return conductor_ == o.conductor_ && small_ == o.small_;
  }
  bool operator<(const NumericalSemigroup& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    return small_ < o.small_;
  }

  /// Canonical key, e.g. "c=4;0,2".
  std::string key() const;

  /// Printed form "<gens=7,15; F=83; m=7; g=42>".
  std::string to_string() const;

 private:
  NumericalSemigroup(int64_t conductor, std::vector<int64_t> small);
  void validate() const;

  int64_t conductor_;
  std::vector<int64_t> small_;
};

}  // namespace nspat
