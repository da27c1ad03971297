#include "nspat/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "nspat/errors.hpp"

namespace nspat {

NumericalSemigroup::NumericalSemigroup(int64_t conductor, std::vector<int64_t> small)
    : conductor_(conductor), small_(std::move(small)) {
  validate();
}

void NumericalSemigroup::validate() const {
  if (conductor_ < 0) throw_domain("InternalInvariant", "negative conductor");
  if (conductor_ == 0) {
    if (!small_.empty()) throw_domain("InternalInvariant", "naturals must have empty small set");
    return;
  }
  if (small_.empty() || small_.front() != 0)
    throw_domain("InternalInvariant", "0 must be a small element");
  for (size_t i = 0; i + 1 < small_.size(); ++i)
    if (small_[i] >= small_[i + 1])
      throw_domain("InternalInvariant", "small elements not strictly increasing");
  if (small_.back() >= conductor_)
    throw_domain("InternalInvariant", "small element not below conductor");
  if (std::binary_search(small_.begin(), small_.end(), conductor_ - 1))
    throw_domain("InternalInvariant", "conductor not canonical");
  // Additive closure below the conductor.
  for (size_t i = 1; i < small_.size(); ++i)
    for (size_t j = i; j < small_.size(); ++j) {
      int64_t s = small_[i] + small_[j];
      if (s < conductor_ && !std::binary_search(small_.begin(), small_.end(), s))
        throw_domain("InternalInvariant", "small elements not additively closed");
    }
}

NumericalSemigroup NumericalSemigroup::from_membership(const std::vector<char>& member,
                                                       int64_t bound) {
  int64_t c = 0;
  for (int64_t x = bound - 1; x >= 0; --x)
    if (!member[static_cast<size_t>(x)]) {
      c = x + 1;
      break;
    }
  std::vector<int64_t> small;
  for (int64_t x = 0; x < c; ++x)
    if (member[static_cast<size_t>(x)]) small.push_back(x);
  return NumericalSemigroup(c, std::move(small));
}

NumericalSemigroup NumericalSemigroup::from_generators(const std::vector<int64_t>& gens) {
  if (gens.empty()) throw_domain("GcdNotOne", "empty generator list");
  for (int64_t g : gens)
    if (g < 1) throw_domain("GcdNotOne", "generators must be positive");
  int64_t g = 0;
  for (int64_t x : gens) g = std::gcd(g, x);
  if (g != 1) throw_domain("GcdNotOne", "gcd of generators is " + std::to_string(g));

  int64_t m = *std::min_element(gens.begin(), gens.end());
  if (m == 1) return natural();

  // Sieve reachable sums upward until a run of m consecutive members appears;
  // the start of that run is the conductor.
  int64_t bound = 2 * *std::max_element(gens.begin(), gens.end()) + m;
  for (;;) {
    std::vector<char> member(static_cast<size_t>(bound), 0);
    member[0] = 1;
    int64_t run = 0;
    for (int64_t x = 1; x < bound; ++x) {
      for (int64_t gen : gens)
        if (x >= gen && member[static_cast<size_t>(x - gen)]) {
          member[static_cast<size_t>(x)] = 1;
          break;
        }
      run = member[static_cast<size_t>(x)] ? run + 1 : 0;
      if (run == m) return from_membership(member, x + 1);
    }
    bound *= 2;
  }
}

int64_t NumericalSemigroup::multiplicity() const {
  if (conductor_ == 0) return 1;
  if (small_.size() >= 2) return small_[1];
  return conductor_;
}

bool NumericalSemigroup::contains(int64_t x) const {
  if (x < 0) return false;
  if (x >= conductor_) return true;
  return std::binary_search(small_.begin(), small_.end(), x);
}

std::vector<int64_t> NumericalSemigroup::members_below(int64_t bound) const {
  std::vector<int64_t> out;
  for (int64_t s : small_)
    if (s < bound) out.push_back(s);
  for (int64_t x = conductor_; x < bound; ++x) out.push_back(x);
  return out;
}

std::vector<int64_t> NumericalSemigroup::minimal_generators() const {
  if (conductor_ == 0) return {1};
  int64_t m = multiplicity();
  // Every minimal generator is below c + m.
  std::vector<int64_t> candidates = members_below(conductor_ + m);
  std::vector<int64_t> gens;
  for (int64_t x : candidates) {
    if (x == 0) continue;
    bool decomposable = false;
    for (int64_t a : candidates) {
      if (a == 0) continue;
      if (2 * a > x) break;
      if (contains(x - a)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) gens.push_back(x);
  }
  return gens;
}

AperySet NumericalSemigroup::apery(int64_t lambda) const {
  if (lambda <= 0 || !contains(lambda))
    throw_domain("NotAMember", std::to_string(lambda) + " is not a positive member");
  AperySet ap;
  ap.modulus = lambda;
  ap.witnesses.assign(static_cast<size_t>(lambda), -1);
  int64_t found = 0;
  for (int64_t x : members_below(conductor_ + lambda)) {
    size_t r = static_cast<size_t>(x % lambda);
    if (ap.witnesses[r] < 0) {
      ap.witnesses[r] = x;
      if (++found == lambda) break;
    }
  }
  return ap;
}

int64_t NumericalSemigroup::apery_depth() const {
  AperySet ap = apery(multiplicity());
  std::vector<int64_t> w = ap.witnesses;
  std::sort(w.begin(), w.end());
  // Longest path in the divisibility DAG on the witnesses, counted in vertices.
  std::vector<int64_t> longest(w.size(), 1);
  int64_t best = 1;
  for (size_t i = 1; i < w.size(); ++i) {
    for (size_t j = 0; j < i; ++j)
      if (w[i] != w[j] && contains(w[i] - w[j]))
        longest[i] = std::max(longest[i], longest[j] + 1);
    best = std::max(best, longest[i]);
  }
  return best;
}

bool NumericalSemigroup::leq_in(int64_t a, int64_t b) const {
  if (!contains(a)) throw_domain("NotAMember", std::to_string(a) + " is not a member");
  if (!contains(b)) throw_domain("NotAMember", std::to_string(b) + " is not a member");
  return contains(b - a);
}

NumericalSemigroup NumericalSemigroup::remove_element(int64_t a) const {
  auto gens = minimal_generators();
  if (!std::binary_search(gens.begin(), gens.end(), a))
    throw_domain("NotMinimalGenerator", std::to_string(a) + " is not a minimal generator");
  int64_t bound = std::max(conductor_, a + 2);
  std::vector<char> member(static_cast<size_t>(bound), 0);
  for (int64_t x : members_below(bound))
    if (x != a) member[static_cast<size_t>(x)] = 1;
  return from_membership(member, bound);
}

NumericalSemigroup NumericalSemigroup::add_frobenius() const {
  if (conductor_ == 0) throw_domain("AlreadyFull", "the naturals have no Frobenius number");
  std::vector<char> member(static_cast<size_t>(conductor_), 0);
  for (int64_t x : small_) member[static_cast<size_t>(x)] = 1;
  member[static_cast<size_t>(conductor_ - 1)] = 1;
  return from_membership(member, conductor_);
}

std::string NumericalSemigroup::key() const {
  std::ostringstream os;
  os << "c=" << conductor_ << ";";
  for (size_t i = 0; i < small_.size(); ++i) {
    if (i) os << ",";
    os << small_[i];
  }
  return os.str();
}

std::string NumericalSemigroup::to_string() const {
  std::ostringstream os;
  os << "<gens=";
  auto gens = minimal_generators();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (i) os << ",";
    os << gens[i];
  }
  os << "; F=" << frobenius() << "; m=" << multiplicity() << "; g=" << genus() << ">";
  return os.str();
}

}  // namespace nspat
