#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nspat {

/// Admissibility degree of a pattern: either a finite count of derivation
/// steps or infinite (patterns with only positive coefficients).
class AdmissibilityDegree {
 public:
  static AdmissibilityDegree finite(int64_t k) { return AdmissibilityDegree(true, k); }
  static AdmissibilityDegree infinite() { return AdmissibilityDegree(false, 0); }

  bool is_finite() const { return finite_; }
  int64_t value() const;  // throws on infinite

  bool operator==(const AdmissibilityDegree&) const = default;
  std::string to_string() const;

 private:
  AdmissibilityDegree(bool finite, int64_t k) : finite_(finite), value_(k) {}
  bool finite_;
  int64_t value_;
};

struct BooleanDecomposition {
  int64_t k;  // admissibility degree; f = x_1 + ... + x_{k-1}
  int64_t l;  // largest index with sum_{i=k+1}^{l} a_i = -1; g spans [k, l]
  int64_t d;  // max partial sum of the tail walk starting at position k
  std::vector<int64_t> f_coeffs;
  std::vector<int64_t> g_coeffs;
  std::vector<int64_t> h_coeffs;
};

/// A linear pattern: ordered nonzero integer coefficients. The zero pattern
/// is the empty coefficient list. Immutable value type.
class Pattern {
 public:
  Pattern() = default;  // zero pattern
  explicit Pattern(std::vector<int64_t> coeffs);

  /// Accepts the symbolic grammar ("x1+x2-x3", "10x1-7x2") and the
  /// comma-separated coefficient form ("1,1,-1").
  static Pattern parse(std::string_view text);

  static Pattern arf() { return Pattern({1, 1, -1}); }
  static Pattern trivializing() { return Pattern({1, -1}); }
  static Pattern subtraction(int64_t k);

  size_t length() const { return coeffs_.size(); }
  const std::vector<int64_t>& coeffs() const { return coeffs_; }
  std::vector<int64_t> prefix_sums() const;
  int64_t total() const;

  /// Evaluates on a non-increasing tuple of nonnegative integers.
  int64_t evaluate(std::span<const int64_t> s) const;

  bool is_admissible() const;         // all prefix sums >= 0
  bool is_strongly_admissible() const;
  bool is_premonic() const;           // some prefix sum equals 1
  bool is_boolean() const;            // all coefficients +-1

  /// p' : decrement a_1 if a_1 > 1, else drop the first variable.
  Pattern derived() const;

  AdmissibilityDegree admissibility_degree() const;

  /// f + g + h split of a boolean pattern with finite positive degree.
  BooleanDecomposition boolean_decomposition() const;

  /// Truncate after the last negative coefficient (equivalent pattern).
  Pattern normalize_tail() const;

  Pattern prefix(size_t n_prime) const;
  /// Insert a +1 coefficient at slot j (1-based, 1 <= j <= n+1).
  Pattern interleave(size_t j) const;

  std::string to_string() const;  // symbolic grammar, no spaces

  bool operator==(const Pattern&) const = default;

 private:
  std::vector<int64_t> coeffs_;
};

}  // namespace nspat
