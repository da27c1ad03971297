#include "nspat/enumerate.hpp"

#include <deque>
#include <sstream>

#include "nspat/errors.hpp"

namespace nspat {

size_t SemigroupDag::out_degree(const std::string& key) const {
  size_t n = 0;
  for (const auto& [from, to, removed] : edges)
    if (from == key) ++n;
  return n;
}

SemigroupDag enumerate_sp(const Pattern& p, int64_t max_frobenius) {
  if (!p.is_strongly_admissible())
    throw_domain("NotStronglyAdmissible", "enumeration requires a strongly admissible pattern");
  if (!p.is_premonic()) throw_domain("NotPremonic", "enumeration requires a premonic pattern");

  SemigroupDag dag;
  auto add_node = [&](const NumericalSemigroup& sg) -> std::string {
    std::string key = sg.key();
    if (!dag.nodes.count(key))
      dag.nodes.emplace(key, SemigroupDag::Node{sg, minimal_p_system(sg, p), sg.frobenius()});
    return key;
  };

  NumericalSemigroup root = NumericalSemigroup::natural();
  dag.root = add_node(root);
  std::deque<std::string> queue{dag.root};
  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    SemigroupDag::Node node = dag.nodes.at(key);
    for (int64_t a : node.psystem) {
      if (a <= node.frobenius) continue;  // child would not be canonical
      if (a > max_frobenius) continue;    // F(child) = a
      NumericalSemigroup child = node.semigroup.remove_element(a);
      bool fresh = !dag.nodes.count(child.key());
      std::string child_key = add_node(child);
      dag.edges.insert({key, child_key, a});
      if (fresh) queue.push_back(child_key);
    }
  }
  return dag;
}

SemigroupDag enumerate_all(int64_t max_genus) {
  SemigroupDag dag;
  auto add_node = [&](const NumericalSemigroup& sg) -> std::string {
    std::string key = sg.key();
    if (!dag.nodes.count(key))
      dag.nodes.emplace(key, SemigroupDag::Node{sg, sg.minimal_generators(), sg.frobenius()});
    return key;
  };

  dag.root = add_node(NumericalSemigroup::natural());
  std::deque<std::string> queue{dag.root};
  while (!queue.empty()) {
    std::string key = queue.front();
    queue.pop_front();
    SemigroupDag::Node node = dag.nodes.at(key);
    if (node.semigroup.genus() >= max_genus) continue;
    for (int64_t a : node.psystem) {
      if (a <= node.frobenius) continue;
      NumericalSemigroup child = node.semigroup.remove_element(a);
      bool fresh = !dag.nodes.count(child.key());
      std::string child_key = add_node(child);
      dag.edges.insert({key, child_key, a});
      if (fresh) queue.push_back(child_key);
    }
  }
  return dag;
}

namespace {

// A separator must carry exact, differing verdicts for both patterns.
bool verify_separator(const NumericalSemigroup& sg, const Pattern& p1, const Pattern& p2) {
  AdmitsVerdict v1 = admits(sg, p1);
  AdmitsVerdict v2 = admits(sg, p2);
  if (v1.status == AdmitsVerdict::Status::UnknownUpToBound) return false;
  if (v2.status == AdmitsVerdict::Status::UnknownUpToBound) return false;
  return v1.admits() != v2.admits();
}

}  // namespace

EquivalenceVerdict equivalence_check(const Pattern& p1, const Pattern& p2, int64_t max_genus) {
  if (!p1.is_strongly_admissible() || !p2.is_strongly_admissible())
    throw_domain("NotStronglyAdmissible", "equivalence check requires strongly admissible patterns");

  if (p1.is_boolean() && p2.is_boolean()) {
    AdmissibilityDegree k1 = p1.admissibility_degree();
    AdmissibilityDegree k2 = p2.admissibility_degree();
    if (!(k1 == k2)) {
      // <q,q+1> admits a boolean pattern iff its admissibility degree >= q.
      int64_t small_k = INT64_MAX;
      if (k1.is_finite()) small_k = k1.value();
      if (k2.is_finite()) small_k = std::min(small_k, k2.value());
      int64_t q = small_k + 1;
      NumericalSemigroup sep = NumericalSemigroup::from_generators({q, q + 1});
      if (verify_separator(sep, p1, p2))
        return {EquivalenceVerdict::Status::Separated, sep, max_genus};
    } else if (k1.is_finite() && k1.value() > 2) {
      int64_t d1 = p1.boolean_decomposition().d;
      int64_t d2 = p2.boolean_decomposition().d;
      if (d1 != d2) {
        // The witness family of (q, k) admits a degree-k boolean pattern iff
        // d <= q-k-1; pick q so the bound sits between d1 and d2.
        int64_t k = k1.value();
        int64_t q = k + std::max(d1, d2);
        NumericalSemigroup sep = witness_family(q, k);
        if (verify_separator(sep, p1, p2))
          return {EquivalenceVerdict::Status::Separated, sep, max_genus};
      }
    }
  }

  SemigroupDag census = enumerate_all(max_genus);
  for (const auto& [key, node] : census.nodes)
    if (verify_separator(node.semigroup, p1, p2))
      return {EquivalenceVerdict::Status::Separated, node.semigroup, max_genus};
  return {EquivalenceVerdict::Status::IndistinguishableUpToGenus, std::nullopt, max_genus};
}

std::string to_dot(const SemigroupDag& dag) {
  if (dag.nodes.empty()) return "digraph S {}";
  std::ostringstream os;
  os << "digraph S {\n";
  for (const auto& [key, node] : dag.nodes) {
    os << "  \"" << key << "\" [label=\"<";
    for (size_t i = 0; i < node.psystem.size(); ++i) {
      if (i) os << ",";
      os << node.psystem[i];
    }
    os << ">_p, F=" << node.frobenius << "\"];\n";
  }
  for (const auto& [from, to, removed] : dag.edges)
    os << "  \"" << from << "\" -> \"" << to << "\" [label=\"" << removed << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_json(const SemigroupDag& dag) {
  std::ostringstream os;
  os << "{\"nodes\":[";
  bool first = true;
  for (const auto& [key, node] : dag.nodes) {
    if (!first) os << ",";
    first = false;
    os << "{\"key\":\"" << key << "\",\"psystem\":[";
    for (size_t i = 0; i < node.psystem.size(); ++i) {
      if (i) os << ",";
      os << node.psystem[i];
    }
    os << "],\"frobenius\":" << node.frobenius << "}";
  }
  os << "],\"edges\":[";
  first = true;
  for (const auto& [from, to, removed] : dag.edges) {
    if (!first) os << ",";
    first = false;
    os << "{\"from\":\"" << from << "\",\"to\":\"" << to << "\",\"removed\":" << removed << "}";
  }
  os << "]}";
  return os.str();
}

}  // namespace nspat
