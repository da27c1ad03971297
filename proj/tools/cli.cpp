#include "cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "nspat/enumerate.hpp"
#include "nspat/errors.hpp"
#include "nspat/interact.hpp"
#include "nspat/pattern.hpp"
#include "nspat/semigroup.hpp"

namespace nspat::cli {

namespace {

using nlohmann::json;

NumericalSemigroup parse_semigroup(const std::string& text) {
  std::vector<int64_t> gens;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t used = 0;
      int64_t v = std::stoll(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      gens.push_back(v);
    } catch (const std::exception&) {
      throw_domain("SyntaxError", "bad generator '" + tok + "'");
    }
  }
  if (gens.empty()) throw_domain("SyntaxError", "empty generator list");
  return NumericalSemigroup::from_generators(gens);
}

json semigroup_json(const NumericalSemigroup& sg) {
  return {{"gens", sg.minimal_generators()},
          {"frobenius", sg.frobenius()},
          {"multiplicity", sg.multiplicity()},
          {"genus", sg.genus()}};
}

std::string tuple_text(const std::vector<int64_t>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i];
  }
  os << ")";
  return os.str();
}

std::string set_text(const std::vector<int64_t>& t) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) os << ",";
    os << t[i];
  }
  os << "}";
  return os.str();
}

json verdict_json(const AdmitsVerdict& v) {
  switch (v.status) {
    case AdmitsVerdict::Status::Admits:
      return {{"status", "Admits"}};
    case AdmitsVerdict::Status::Rejects:
      return {{"status", "Rejects"}, {"witness", v.witness}, {"value", v.value}};
    default:
      return {{"status", "UnknownUpToBound"}, {"bound", *v.bound}};
  }
}

std::string verdict_text(const AdmitsVerdict& v) {
  switch (v.status) {
    case AdmitsVerdict::Status::Admits:
      return "ADMITS";
    case AdmitsVerdict::Status::Rejects:
      return "REJECTS witness=" + tuple_text(v.witness) + " value=" + std::to_string(v.value);
    default:
      return "UNKNOWN bound=" + std::to_string(*v.bound);
  }
}

struct Options {
  std::string format = "text";
  bool quiet = false;
  std::ostream* out;

  bool text() const { return format == "text"; }
  void emit_json(const json& result) const { *out << json{{"ok", true}, {"result", result}}.dump() << "\n"; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"patterns on numerical semigroups"};
  app.require_subcommand(1);

  Options opt;
  opt.out = &out;
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json", "dot"}))
      ->capture_default_str();
  app.add_flag("--quiet", opt.quiet, "suppress informational output");

  std::string sg_arg, pat_arg, pat2_arg;
  int64_t lambda_arg = -1;
  int64_t max_genus = 8;
  int64_t max_frobenius = 7;
  std::optional<int64_t> bound;
  bool dot_flag = false;
  int64_t q_arg = 0, k_arg = 0;

  auto* classify = app.add_subcommand("classify", "classify a pattern");
  classify->add_option("pattern", pat_arg)->required();

  auto* admits_cmd = app.add_subcommand("admits", "does a semigroup admit a pattern");
  admits_cmd->add_option("gens", sg_arg)->required();
  admits_cmd->add_option("pattern", pat_arg)->required();
  admits_cmd->add_option("--bound", bound, "search bound for non-strongly-admissible patterns");

  auto* closure_cmd = app.add_subcommand("closure", "pattern closure of a semigroup");
  closure_cmd->add_option("gens", sg_arg)->required();
  closure_cmd->add_option("pattern", pat_arg)->required();

  auto* psystem_cmd = app.add_subcommand("psystem", "minimal p-system of generators");
  psystem_cmd->add_option("gens", sg_arg)->required();
  psystem_cmd->add_option("pattern", pat_arg)->required();

  auto* apery_cmd = app.add_subcommand("apery", "Apery set");
  apery_cmd->add_option("gens", sg_arg)->required();
  apery_cmd->add_option("lambda", lambda_arg, "modulus (defaults to the multiplicity)");

  auto* depth_cmd = app.add_subcommand("depth", "Apery depth");
  depth_cmd->add_option("gens", sg_arg)->required();

  auto* subdeg_cmd = app.add_subcommand("subdeg", "subtraction degree");
  subdeg_cmd->add_option("gens", sg_arg)->required();

  auto* enum_cmd = app.add_subcommand("enumerate", "DAG of semigroups admitting a pattern");
  enum_cmd->add_option("pattern", pat_arg)->required();
  enum_cmd->add_option("--max-frobenius", max_frobenius)->capture_default_str();
  enum_cmd->add_flag("--dot", dot_flag, "emit DOT");

  auto* census_cmd = app.add_subcommand("census", "census of semigroups by genus");
  census_cmd->add_option("--max-genus", max_genus)->capture_default_str();
  census_cmd->add_flag("--dot", dot_flag, "emit DOT");

  auto* equiv_cmd = app.add_subcommand("equiv", "bounded pattern equivalence check");
  equiv_cmd->add_option("pattern1", pat_arg)->required();
  equiv_cmd->add_option("pattern2", pat2_arg)->required();
  equiv_cmd->add_option("--max-genus", max_genus)->capture_default_str();

  auto* wf_cmd = app.add_subcommand("witness-family", "separating family member");
  wf_cmd->add_option("q", q_arg)->required();
  wf_cmd->add_option("k", k_arg)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (*classify) {
      Pattern p = Pattern::parse(pat_arg);
      AdmissibilityDegree deg = p.admissibility_degree();
      json j{{"pattern", p.to_string()},
             {"admissible", p.is_admissible()},
             {"strongly_admissible", p.is_strongly_admissible()},
             {"premonic", p.is_premonic()},
             {"boolean", p.is_boolean()},
             {"admissibility_degree", deg.to_string()}};
      bool has_split = p.is_boolean() && deg.is_finite() && deg.value() > 0;
      if (has_split) {
        auto bd = p.boolean_decomposition();
        j["boolean_decomposition"] = {{"k", bd.k}, {"l", bd.l}, {"d", bd.d}};
      }
      if (opt.text()) {
        out << "pattern: " << p.to_string() << "\n";
        out << "admissible: " << (p.is_admissible() ? "yes" : "no") << "\n";
        out << "strongly_admissible: " << (p.is_strongly_admissible() ? "yes" : "no") << "\n";
        out << "premonic: " << (p.is_premonic() ? "yes" : "no") << "\n";
        out << "boolean: " << (p.is_boolean() ? "yes" : "no") << "\n";
        out << "admissibility_degree: " << deg.to_string() << "\n";
        if (has_split) {
          auto bd = p.boolean_decomposition();
          out << "boolean_decomposition: k=" << bd.k << " l=" << bd.l << " d=" << bd.d << "\n";
        }
      } else {
        opt.emit_json(j);
      }
    } else if (*admits_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      Pattern p = Pattern::parse(pat_arg);
      AdmitsVerdict v = admits(sg, p, {bound, true});
      if (opt.text()) {
        out << verdict_text(v) << "\n";
      } else {
        opt.emit_json(verdict_json(v));
      }
    } else if (*closure_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      Pattern p = Pattern::parse(pat_arg);
      ClosureTrace trace = closure(sg, p);
      if (opt.text()) {
        if (!opt.quiet)
          for (size_t i = 0; i < trace.steps.size(); ++i)
            out << "step " << i << ": " << trace.steps[i].to_string() << "\n";
        out << "fixpoint k=" << trace.fixpoint_index << "\n";
        out << "closure: " << trace.last().to_string() << "\n";
      } else {
        json steps = json::array();
        for (const auto& s : trace.steps) steps.push_back(semigroup_json(s));
        opt.emit_json({{"steps", steps},
                       {"fixpoint_index", trace.fixpoint_index},
                       {"closure", semigroup_json(trace.last())}});
      }
    } else if (*psystem_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      Pattern p = Pattern::parse(pat_arg);
      auto system = minimal_p_system(sg, p);
      if (opt.text()) {
        out << set_text(system) << "\n";
      } else {
        opt.emit_json({{"psystem", system}});
      }
    } else if (*apery_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      int64_t lambda = apery_cmd->count("lambda") ? lambda_arg : sg.multiplicity();
      AperySet ap = sg.apery(lambda);
      std::vector<int64_t> sorted = ap.witnesses;
      std::sort(sorted.begin(), sorted.end());
      if (opt.text()) {
        out << set_text(sorted) << "\n";
      } else {
        opt.emit_json({{"modulus", ap.modulus}, {"witnesses", ap.witnesses}});
      }
    } else if (*depth_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      int64_t d = sg.apery_depth();
      if (opt.text()) {
        out << d << "\n";
      } else {
        opt.emit_json({{"apery_depth", d}});
      }
    } else if (*subdeg_cmd) {
      NumericalSemigroup sg = parse_semigroup(sg_arg);
      SubtractionDegreeResult r = subtraction_degree(sg);
      if (opt.text()) {
        out << r.degree << " (bounds: apery_depth=" << r.lower_bound
            << ", ceil(c/m)+1=" << r.upper_bound << ")\n";
      } else {
        opt.emit_json({{"subtraction_degree", r.degree},
                       {"lower_bound", r.lower_bound},
                       {"upper_bound", r.upper_bound}});
      }
    } else if (*enum_cmd || *census_cmd) {
      SemigroupDag dag = *enum_cmd ? enumerate_sp(Pattern::parse(pat_arg), max_frobenius)
                                   : enumerate_all(max_genus);
      if (dot_flag || opt.format == "dot") {
        out << to_dot(dag);
        if (dag.nodes.empty()) out << "\n";
      } else if (opt.text()) {
        out << dag.nodes.size() << " nodes, " << dag.edges.size() << " edges\n";
        for (const auto& [key, node] : dag.nodes)
          out << key << " psystem=" << set_text(node.psystem) << " F=" << node.frobenius << "\n";
      } else {
        *opt.out << to_json(dag) << "\n";
      }
    } else if (*equiv_cmd) {
      Pattern p1 = Pattern::parse(pat_arg);
      Pattern p2 = Pattern::parse(pat2_arg);
      EquivalenceVerdict v = equivalence_check(p1, p2, max_genus);
      if (opt.text()) {
        if (v.status == EquivalenceVerdict::Status::Separated) {
          out << "SEPARATED by " << v.separator->to_string() << "\n";
        } else {
          out << "INDISTINGUISHABLE up to genus " << v.genus_bound << "\n";
        }
      } else {
        json j{{"status", v.status == EquivalenceVerdict::Status::Separated
                              ? "Separated"
                              : "IndistinguishableUpToGenus"},
               {"genus_bound", v.genus_bound}};
        if (v.separator) j["separator"] = semigroup_json(*v.separator);
        opt.emit_json(j);
      }
    } else if (*wf_cmd) {
      NumericalSemigroup sg = witness_family(q_arg, k_arg);
      if (opt.text()) {
        out << sg.to_string() << "\n";
      } else {
        opt.emit_json(semigroup_json(sg));
      }
    }
  } catch (const domain_error& e) {
    if (opt.text()) {
      err << "error: " << e.what() << "\n";
    } else {
      err << json{{"ok", false}, {"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    }
    return 1;
  }
  return 0;
}

}  // namespace nspat::cli
