#include "nspat/pattern.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "nspat/errors.hpp"

namespace nspat {

int64_t AdmissibilityDegree::value() const {
  if (!finite_) throw_domain("DegreeInfinite", "admissibility degree is infinite");
  return value_;
}

std::string AdmissibilityDegree::to_string() const {
  return finite_ ? std::to_string(value_) : "inf";
}

Pattern::Pattern(std::vector<int64_t> coeffs) : coeffs_(std::move(coeffs)) {
  for (int64_t a : coeffs_)
    if (a == 0) throw_domain("ZeroCoefficient", "pattern coefficients must be nonzero");
}

Pattern Pattern::subtraction(int64_t k) {
  if (k < 1) throw_domain("IndexOutOfRange", "subtraction degree must be >= 1");
  std::vector<int64_t> c(static_cast<size_t>(k), 1);
  c.push_back(-1);
  return Pattern(std::move(c));
}

namespace {

Pattern parse_comma_form(std::string_view text) {
  std::vector<int64_t> coeffs;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t comma = text.find(',', pos);
    std::string tok(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    size_t used = 0;
    int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw_domain("SyntaxError", "bad coefficient '" + tok + "'");
    }
    if (used != tok.size()) throw_domain("SyntaxError", "bad coefficient '" + tok + "'");
    if (v == 0) throw_domain("ZeroCoefficient", "zero coefficient in pattern");
    coeffs.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return Pattern(std::move(coeffs));
}

Pattern parse_symbolic(std::string_view text) {
  // term := [coeff] "x" index, terms joined by "+"/"-".
  std::vector<int64_t> by_index;   // coefficient per variable index (1-based)
  std::vector<char> seen;
  size_t i = 0;
  auto digits = [&](int64_t& out) -> bool {
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i]))) return false;
    out = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      out = out * 10 + (text[i] - '0');
      if (out > (int64_t{1} << 60)) throw_domain("SyntaxError", "number too large");
      ++i;
    }
    return true;
  };
  bool first = true;
  while (i < text.size()) {
    int64_t sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      if (first && text[i] == '+') throw_domain("SyntaxError", "unexpected leading '+'");
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw_domain("SyntaxError", "expected '+' or '-' at position " + std::to_string(i));
    }
    first = false;
    int64_t coeff = 1;
    digits(coeff);
    if (i >= text.size() || text[i] != 'x')
      throw_domain("SyntaxError", "expected 'x' at position " + std::to_string(i));
    ++i;
    int64_t index = 0;
    if (!digits(index) || index < 1)
      throw_domain("SyntaxError", "expected variable index at position " + std::to_string(i));
    if (coeff == 0) throw_domain("ZeroCoefficient", "zero coefficient in pattern");
    size_t idx = static_cast<size_t>(index);
    if (by_index.size() < idx) {
      by_index.resize(idx, 0);
      seen.resize(idx, 0);
    }
    if (seen[idx - 1])
      throw_domain("SyntaxError", "variable x" + std::to_string(index) + " appears twice");
    seen[idx - 1] = 1;
    by_index[idx - 1] = sign * coeff;
  }
  if (by_index.empty()) throw_domain("SyntaxError", "empty pattern");
  for (size_t j = 0; j < seen.size(); ++j)
    if (!seen[j]) throw_domain("MissingVariable", "variable x" + std::to_string(j + 1) + " is missing");
  return Pattern(std::move(by_index));
}

}  // namespace

Pattern Pattern::parse(std::string_view text) {
  if (text.find('x') != std::string_view::npos) return parse_symbolic(text);
  return parse_comma_form(text);
}

std::vector<int64_t> Pattern::prefix_sums() const {
  std::vector<int64_t> sums;
  sums.reserve(coeffs_.size());
  int64_t s = 0;
  for (int64_t a : coeffs_) sums.push_back(s += a);
  return sums;
}

int64_t Pattern::total() const {
  int64_t s = 0;
  for (int64_t a : coeffs_) s += a;
  return s;
}

int64_t Pattern::evaluate(std::span<const int64_t> s) const {
  if (s.size() != coeffs_.size())
    throw_domain("LengthMismatch", "tuple length " + std::to_string(s.size()) +
                                       " does not match pattern length " +
                                       std::to_string(coeffs_.size()));
  for (size_t i = 0; i + 1 < s.size(); ++i)
    if (s[i] < s[i + 1]) throw_domain("NotSorted", "tuple is not non-increasing");
  if (!s.empty() && s.back() < 0) throw_domain("NotSorted", "tuple entries must be nonnegative");
  __int128 acc = 0;
  for (size_t i = 0; i < s.size(); ++i) acc += static_cast<__int128>(coeffs_[i]) * s[i];
  if (acc > INT64_MAX || acc < INT64_MIN)
    throw_domain("Overflow", "pattern evaluation overflows 64 bits");
  return static_cast<int64_t>(acc);
}

bool Pattern::is_admissible() const {
  int64_t s = 0;
  for (int64_t a : coeffs_)
    if ((s += a) < 0) return false;
  return true;
}

Pattern Pattern::derived() const {
  if (coeffs_.empty()) throw_domain("EmptyPattern", "zero pattern has no derivation");
  std::vector<int64_t> c = coeffs_;
  if (c[0] > 1) {
    --c[0];
  } else {
    c.erase(c.begin());
  }
  return Pattern(std::move(c));
}

bool Pattern::is_strongly_admissible() const {
  if (coeffs_.empty()) return true;  // derived of empty is empty, by convention
  return is_admissible() && derived().is_admissible();
}

bool Pattern::is_premonic() const {
  int64_t s = 0;
  for (int64_t a : coeffs_)
    if ((s += a) == 1) return true;
  return false;
}

bool Pattern::is_boolean() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](int64_t a) { return a == 1 || a == -1; });
}

AdmissibilityDegree Pattern::admissibility_degree() const {
  // derived() strictly decreases (a_1, n) lexicographically, so this loop
  // terminates: either some p^(k) fails the prefix-sum test or the pattern
  // empties out (all coefficients were positive).
  Pattern cur = *this;
  int64_t k = 0;
  for (;;) {
    if (!cur.is_admissible()) return AdmissibilityDegree::finite(k);
    if (cur.length() == 0) return AdmissibilityDegree::infinite();
    cur = cur.derived();
    ++k;
  }
}

BooleanDecomposition Pattern::boolean_decomposition() const {
  if (!is_boolean()) throw_domain("NotBoolean", "pattern has a coefficient outside {-1,1}");
  AdmissibilityDegree deg = admissibility_degree();
  if (!deg.is_finite()) throw_domain("DegreeInfinite", "pattern has infinite admissibility degree");
  if (deg.value() == 0) throw_domain("DegreeZero", "pattern is not admissible");
  int64_t k = deg.value();
  int64_t n = static_cast<int64_t>(coeffs_.size());
  // Largest l > k with sum_{i=k+1}^{l} a_i = -1 (1-based indices).
  int64_t l = -1, run = 0;
  for (int64_t i = k + 1; i <= n; ++i) {
    run += coeffs_[static_cast<size_t>(i - 1)];
    if (run == -1) l = i;
  }
  if (l < 0) throw_domain("InternalInvariant", "boolean decomposition split not found");
  // d: height of the first excursion of the partial-sum walk starting at k.
  int64_t d = 0, walk = 0;
  for (int64_t i = k; i <= n; ++i) {
    walk += coeffs_[static_cast<size_t>(i - 1)];
    d = std::max(d, walk);
    if (walk == 0) break;
  }
  BooleanDecomposition out;
  out.k = k;
  out.l = l;
  out.d = d;
  out.f_coeffs.assign(coeffs_.begin(), coeffs_.begin() + (k - 1));
  out.g_coeffs.assign(coeffs_.begin() + (k - 1), coeffs_.begin() + l);
  out.h_coeffs.assign(coeffs_.begin() + l, coeffs_.end());
  return out;
}

Pattern Pattern::normalize_tail() const {
  auto it = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](int64_t a) { return a < 0; });
  if (it == coeffs_.rend()) return *this;
  size_t keep = coeffs_.size() - static_cast<size_t>(it - coeffs_.rbegin());
  return Pattern(std::vector<int64_t>(coeffs_.begin(), coeffs_.begin() + keep));
}

Pattern Pattern::prefix(size_t n_prime) const {
  if (n_prime > coeffs_.size()) throw_domain("IndexOutOfRange", "prefix length exceeds pattern");
  return Pattern(std::vector<int64_t>(coeffs_.begin(), coeffs_.begin() + n_prime));
}

Pattern Pattern::interleave(size_t j) const {
  if (j < 1 || j > coeffs_.size() + 1) throw_domain("IndexOutOfRange", "interleave slot out of range");
  std::vector<int64_t> c = coeffs_;
  c.insert(c.begin() + (j - 1), 1);
  return Pattern(std::move(c));
}

std::string Pattern::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    int64_t a = coeffs_[i];
    if (a < 0) {
      os << "-";
    } else if (i > 0) {
      os << "+";
    }
    int64_t mag = a < 0 ? -a : a;
    if (mag != 1) os << mag;
    os << "x" << (i + 1);
  }
  return os.str();
}

}  // namespace nspat
