#include "nspat/interact.hpp"

#include <algorithm>

#include "nspat/errors.hpp"
#include "nspat/scan.hpp"

namespace nspat {

namespace {

int64_t narrow_value(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw_domain("Overflow", "pattern evaluation overflows 64 bits");
  return static_cast<int64_t>(v);
}

template <class Member>
std::optional<ScanHit> run_scan(const Pattern& p, const std::vector<int64_t>& values,
                                bool parallel, Member&& member) {
  if (parallel) return scan_first_violation_parallel(p.coeffs(), values, member);
  return scan_first_violation_serial(p.coeffs(), values, member);
}

}  // namespace

AdmitsVerdict admits(const NumericalSemigroup& sg, const Pattern& p, AdmitsOptions opts) {
  const size_t n = p.length();
  if (n == 0) return {AdmitsVerdict::Status::Admits, {}, 0, {}};

  if (!p.is_admissible()) {
    // Constructed rejection: (l,...,l,0,...,0) with l the multiplicity and
    // the prefix cut at the first negative prefix sum.
    auto sums = p.prefix_sums();
    size_t cut = 0;
    while (sums[cut] >= 0) ++cut;
    int64_t l = sg.multiplicity();
    std::vector<int64_t> witness(n, 0);
    for (size_t i = 0; i <= cut; ++i) witness[i] = l;
    int64_t value = narrow_value(static_cast<__int128>(sums[cut]) * l);
    return {AdmitsVerdict::Status::Rejects, std::move(witness), value, {}};
  }

  if (sg.conductor() == 0) return {AdmitsVerdict::Status::Admits, {}, 0, {}};

  auto member = [&sg](__int128 v) {
    return v >= sg.conductor() || (v >= 0 && sg.contains(static_cast<int64_t>(v)));
  };

  if (p.is_strongly_admissible()) {
    // Exact: evaluations on tuples with s_1 >= c land at or above c.
    auto hit = run_scan(p, sg.small_elements(), opts.parallel, member);
    if (!hit) return {AdmitsVerdict::Status::Admits, {}, 0, {}};
    return {AdmitsVerdict::Status::Rejects, std::move(hit->tuple), narrow_value(hit->value), {}};
  }

  // Admissible but not strongly admissible: bounded semidecision.
  int64_t bound = opts.bound.value_or(sg.conductor() +
                                      static_cast<int64_t>(n) * sg.multiplicity());
  auto hit = run_scan(p, sg.members_below(bound + 1), opts.parallel, member);
  if (hit)
    return {AdmitsVerdict::Status::Rejects, std::move(hit->tuple), narrow_value(hit->value), {}};
  return {AdmitsVerdict::Status::UnknownUpToBound, {}, 0, bound};
}

NumericalSemigroup image(const NumericalSemigroup& sg, const Pattern& p, bool parallel) {
  if (!p.is_strongly_admissible())
    throw_domain("NotStronglyAdmissible", "image requires a strongly admissible pattern");
  if (!p.is_premonic()) throw_domain("NotPremonic", "image requires a premonic pattern");
  const int64_t c = sg.conductor();
  if (c == 0) return NumericalSemigroup::natural();

  // p(L) below c comes only from tuples with s_1 < c; everything at or above
  // c is already in L and hence in p(L).
  std::vector<char> member(static_cast<size_t>(c), 0);
  for (int64_t s : sg.small_elements()) member[static_cast<size_t>(s)] = 1;
  if (parallel) {
    scan_collect_parallel(p.coeffs(), sg.small_elements(), c, member);
  } else {
    scan_collect_serial(p.coeffs(), sg.small_elements(), c, member);
  }
  return NumericalSemigroup::from_membership(member, c);
}

ClosureTrace closure(const NumericalSemigroup& sg, const Pattern& p, bool parallel) {
  ClosureTrace trace;
  trace.steps.push_back(sg);
  for (;;) {
    NumericalSemigroup next = image(trace.steps.back(), p, parallel);
    if (next == trace.steps.back()) break;
    trace.steps.push_back(std::move(next));
  }
  trace.fixpoint_index = static_cast<int64_t>(trace.steps.size()) - 1;
  return trace;
}

std::vector<int64_t> minimal_p_system(const NumericalSemigroup& sg, const Pattern& p) {
  if (!p.is_strongly_admissible())
    throw_domain("NotStronglyAdmissible", "p-systems require a strongly admissible pattern");
  if (!p.is_premonic()) throw_domain("NotPremonic", "p-systems require a premonic pattern");
  if (!admits(sg, p).admits())
    throw_domain("DoesNotAdmit", "the semigroup does not admit the pattern");

  std::vector<int64_t> system;
  for (int64_t a : sg.minimal_generators())
    if (admits(sg.remove_element(a), p).admits()) system.push_back(a);

  // The closure of the system must reproduce the semigroup exactly.
  try {
    if (!(closure(NumericalSemigroup::from_generators(system), p).last() == sg))
      throw_domain("VerificationFailed", "closure of the computed p-system differs");
  } catch (const domain_error& e) {
    if (e.code() == "VerificationFailed") throw;
    throw_domain("VerificationFailed", std::string("p-system closure check failed: ") + e.what());
  }
  return system;
}

SubtractionDegreeResult subtraction_degree(const NumericalSemigroup& sg) {
  if (sg.conductor() == 0) return {1, 1, 1};
  int64_t c = sg.conductor();
  int64_t m = sg.multiplicity();
  int64_t depth = sg.apery_depth();
  int64_t hi = (c + m - 1) / m + 1;
  int64_t lo = std::max<int64_t>(2, depth);
  for (int64_t k = lo; k <= hi; ++k)
    if (admits(sg, Pattern::subtraction(k)).admits()) return {k, depth, hi};
  throw_domain("InternalInvariant", "subtraction degree exceeded its upper bound");
}

NumericalSemigroup witness_family(int64_t q, int64_t k) {
  if (k <= 2 || q <= k + 1)
    throw_domain("InvalidParameters", "requires k > 2 and q > k+1");
  int64_t top = k * q;  // everything at or above kq is a member
  std::vector<char> member(static_cast<size_t>(top + 1), 0);
  // <q, q+1> below kq
  for (int64_t i = 0; i * q <= top; ++i)
    for (int64_t j = 0; i * q + j * (q + 1) <= top; ++j)
      member[static_cast<size_t>(i * q + j * (q + 1))] = 1;
  // middle block
  for (int64_t t = 1; t <= q - k - 1; ++t)
    member[static_cast<size_t>((k - 1) * (q + 1) + t)] = 1;
  member[static_cast<size_t>(top)] = 1;
  try {
    return NumericalSemigroup::from_membership(member, top + 1);
  } catch (const domain_error&) {
    throw_domain("NotASemigroup", "the displayed union is not additively closed");
  }
}

}  // namespace nspat
