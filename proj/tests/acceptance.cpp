// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Kept independent of the unit-test framework.

#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "nspat/enumerate.hpp"
#include "nspat/interact.hpp"
#include "nspat/pattern.hpp"
#include "nspat/semigroup.hpp"
#include "oracle.hpp"

using namespace nspat;

namespace {

NumericalSemigroup sg(std::vector<int64_t> gens) {
  return NumericalSemigroup::from_generators(gens);
}

Pattern pat(std::vector<int64_t> coeffs) { return Pattern(std::move(coeffs)); }

struct Criterion {
  std::string name;
  std::function<void(std::ostream&)> body;  // throws or writes failure details
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void criterion1(std::ostream&) {
  auto check = [](std::vector<int64_t> start, std::vector<int64_t> coeffs,
                  std::vector<int64_t> expected) {
    auto got = closure(sg(start), Pattern(coeffs)).last();
    require(got == sg(expected), "closure mismatch from " + sg(start).to_string() + ": got " +
                                     got.to_string());
  };
  check({7, 15}, {1, 1, 1, -1}, {7, 15, 31, 47, 48});
  check({7, 15}, {1, 3, -1}, {7, 15, 46, 69});
  check({10, 21, 23}, {1, 1, 1, 1, -1}, {10, 21, 23, 68});
  check({10, 21, 23}, {1, 1, 2, -1}, {10, 21, 23, 68});
  check({10, 21, 23}, {1, 3, -1}, {10, 21, 23, 78});
  check({5, 6, 13}, {1, 1, 1, 1, -1, -1}, {5, 6, 13, 14});
  check({7, 8, 17, 26}, {1, 1, 1, -1, 1, 1, -1, -1}, {7, 8, 17, 18, 27});
}

void criterion2(std::ostream&) {
  Pattern p({1, 1, 1, -1});
  auto dag = enumerate_sp(p, 7);
  struct Row {
    std::vector<int64_t> gens;
    int64_t frob;
  };
  std::vector<Row> rows{
      {{1}, -1},          {{2, 3}, 1},          {{3, 4, 5}, 2}, {{2, 5}, 3},
      {{4, 5, 6, 7}, 3},  {{5, 6, 7, 8, 9}, 4}, {{3, 5, 7}, 4}, {{4, 6, 7, 9}, 5},
      {{3, 7, 8}, 5},     {{3, 4}, 5},          {{2, 7}, 5},    {{4, 5, 7}, 6},
      {{4, 5, 6}, 7},     {{3, 5}, 7},          {{2, 9}, 7}};
  require(dag.nodes.size() == 27, "node count at Frobenius <= 7 is not 27");
  for (const auto& row : rows) {
    auto s = closure(sg(row.gens), p).last();
    require(dag.nodes.count(s.key()) == 1, "missing node " + s.to_string());
    const auto& node = dag.nodes.at(s.key());
    require(node.psystem == row.gens, "p-system mismatch at " + s.key());
    require(node.frobenius == row.frob, "Frobenius mismatch at " + s.key());
  }
  require(dag.out_degree(closure(sg({4, 5, 6, 7}), p).last().key()) == 4,
          "out-degree of <4,5,6,7> is not 4");
  for (auto gens : {std::vector<int64_t>{3, 4}, {4, 5, 6}, {3, 5}})
    require(dag.is_leaf(closure(sg(gens), p).last().key()), "expected leaf is not a leaf");
}

void criterion3(std::ostream&) {
  for (int64_t q = 2; q <= 7; ++q)
    require(subtraction_degree(sg({q, q + 1})).degree == q,
            "subtraction degree of <q,q+1> != q, q=" + std::to_string(q));
  require(subtraction_degree(NumericalSemigroup::natural()).degree == 1, "degree of N != 1");
  require(subtraction_degree(sg({2, 3})).degree == 2, "degree of <2,3> != 2");
  require(subtraction_degree(sg({3, 8, 13})).degree == 3, "degree of <3,8,13> != 3");
  require(sg({3, 8, 13}).apery_depth() == 2, "apery_depth of <3,8,13> != 2");
}

void criterion4(std::ostream&) {
  Pattern p({10, -7});
  require(p.admissibility_degree() == AdmissibilityDegree::finite(4), "degree(10x1-7x2) != 4");
  Pattern third = p.derived().derived().derived();
  require(third == pat({7, -7}), "p^(3) != 7x1-7x2");
  require(third.is_admissible(), "p^(3) not admissible");
  for (int64_t k = 1; k <= 8; ++k)
    require(Pattern::subtraction(k).admissibility_degree() == AdmissibilityDegree::finite(k),
            "degree of subtraction pattern != k, k=" + std::to_string(k));
  require(pat({5, -5}).admissibility_degree() == AdmissibilityDegree::finite(1),
          "degree(5x1-5x2) != 1");
  require(pat({10, -9}).admissibility_degree() == AdmissibilityDegree::finite(2),
          "degree(10x1-9x2) != 2");
}

void criterion5(std::ostream&) {
  require(admits(sg({4, 5, 11}), pat({10, -9})).admits(), "<4,5,11> should admit 10x1-9x2");
  auto v = admits(sg({4, 5, 11}), Pattern::arf());
  require(v.rejects() && v.value == 6, "<4,5,11> Arf rejection value != 6");
  require(admits(sg({3, 8, 13}), pat({1, 1, 1, -1})).admits(),
          "<3,8,13> should admit x1+x2+x3-x4");
  auto w = admits(sg({3, 8, 13}), Pattern::arf());
  require(w.rejects() && w.value == 10, "<3,8,13> Arf rejection value != 10");
}

void criterion6(std::ostream&) {
  auto check = [](std::vector<int64_t> coeffs, int64_t k, int64_t d) {
    auto b = Pattern(coeffs).boolean_decomposition();
    require(b.k == k && b.d == d, "(k,d) mismatch for " + Pattern(coeffs).to_string() + ": got (" +
                                      std::to_string(b.k) + "," + std::to_string(b.d) + ")");
  };
  check({1, 1, 1, -1}, 3, 1);
  check({1, 1, 1, 1, -1, -1}, 3, 2);
  check({1, 1, 1, -1, 1, 1, -1, -1}, 3, 1);
}

void criterion7(std::ostream& log) {
  auto census = enumerate_all(12);
  log << "    census size at genus <= 12: " << census.nodes.size() << "\n";
  Pattern arf = Pattern::arf();
  Pattern p1111({1, 1, 1, -1});

  // (a) Arf pattern vs 2x1-x2: indistinguishable over the census
  auto eq = equivalence_check(arf, pat({2, -1}), 12);
  require(eq.status == EquivalenceVerdict::Status::IndistinguishableUpToGenus,
          "Arf vs 2x1-x2 separated unexpectedly");

  for (const auto& [key, node] : census.nodes) {
    const auto& s = node.semigroup;

    // (b) bound sandwich
    auto r = subtraction_degree(s);
    require(s.apery_depth() <= r.degree && r.degree <= r.upper_bound,
            "bound sandwich fails at " + s.to_string());

    for (const auto& p : {arf, p1111}) {
      if (!admits(s, p).admits()) continue;

      // (c) membership preserved under remove-multiplicity / add-Frobenius
      if (s.conductor() != 0) {
        require(admits(s.remove_element(s.multiplicity()), p).admits(),
                "S(p) not closed under removing m at " + s.to_string());
        require(admits(s.add_frobenius(), p).admits(),
                "S(p) not closed under adding F at " + s.to_string());
      }

      // (d) closure idempotence + prefix/interleave induction
      require(closure(s, p).fixpoint_index == 0, "closure not idempotent at " + s.to_string());
      for (size_t n = 0; n <= p.length(); ++n) {
        Pattern q = p.prefix(n);
        if (q.is_strongly_admissible())
          require(admits(s, q).admits(), "prefix induction fails at " + s.to_string());
      }
      for (size_t j = 1; j <= p.length() + 1; ++j)
        require(admits(s, p.interleave(j)).admits(),
                "interleave induction fails at " + s.to_string());
    }
  }

  // (e) enumerate_sp equals brute-force filtering at Frobenius <= 7
  for (const auto& p : {arf, p1111}) {
    std::set<std::string> filtered;
    for (const auto& [key, node] : census.nodes)
      if (node.semigroup.frobenius() <= 7 && admits(node.semigroup, p).admits())
        filtered.insert(key);
    std::set<std::string> built;
    for (const auto& [key, node] : enumerate_sp(p, 7).nodes) built.insert(key);
    require(built == filtered, "enumerate_sp disagrees with census filtering");
  }
}

void criterion8(std::ostream&) {
  std::mt19937 rng(20260826);
  std::uniform_int_distribution<int64_t> pick(2, 50);
  std::uniform_int_distribution<int> count(2, 4);
  int done = 0;
  while (done < 200) {
    std::vector<int64_t> gens;
    for (int i = 0, n = count(rng); i < n; ++i) gens.push_back(pick(rng));
    int64_t g = 0;
    for (int64_t x : gens) g = std::gcd(g, x);
    if (g != 1) continue;
    ++done;

    int64_t bound = 2600;  // Schur bound (50-1)^2 dominates any Frobenius number here
    auto sieve = oracle::sieve(gens, bound);
    auto s = sg(gens);
    for (int64_t x = 0; x <= bound; ++x)
      require(s.contains(x) == sieve.contains(x), "membership mismatch");

    int64_t m = s.multiplicity();
    auto ap = s.apery(m);
    require(ap.witnesses == oracle::apery(sieve, m), "Apery mismatch");

    require(s.minimal_generators() == oracle::minimal_generators(sieve, s.conductor() + m),
            "minimal generators mismatch");
  }
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"closure goldens", criterion1},
      {"DAG reproduction at max Frobenius 7", criterion2},
      {"subtraction degrees", criterion3},
      {"admissibility degrees", criterion4},
      {"admits spot checks", criterion5},
      {"boolean pattern invariants", criterion6},
      {"property suites on the genus <= 12 census", criterion7},
      {"sieve oracle equivalence on 200 random generator sets", criterion8},
  };
  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::ostringstream log;
    try {
      criteria[i].body(log);
      std::cout << "PASS criterion " << i + 1 << ": " << criteria[i].name << "\n";
    } catch (const std::exception& e) {
      ++failures;
      std::cout << "FAIL criterion " << i + 1 << ": " << criteria[i].name << " — " << e.what()
                << "\n";
    }
    std::cout << log.str();
  }
  return failures == 0 ? 0 : 1;
}
