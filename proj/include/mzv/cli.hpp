#pragma once

// Command-line front end.  run() is separate from main so tests can drive it.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "mzv/diagrams.hpp"
#include "mzv/identities.hpp"
#include "mzv/json.hpp"
#include "mzv/linalg.hpp"
#include "mzv/numerics.hpp"
#include "mzv/verify.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mzv::cli {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  double eps = 1e-12;
  long long trunc = 0;
  int digits = 0;
  bool json = false;
  bool trace = false;
  int max_weight = 8;
  std::string variant;
  int length = 0;
};

inline Parts parse_parts(const std::string& s) {
  const auto c = parse_composition(s);
  if (!c.unsigned_sum()) throw CompositionError("signed parts are only accepted by eval: '" + s + "'");
  return c.parts();
}

inline int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw UsageError("expected an integer, got '" + s + "'");
  }
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError("malformed JSON in '" + path + "': " + e.what());
  }
}

/// Fixed-point rendering with as many decimals as the bound supports.
inline std::string format_value(const PrecisionValue& v) {
  int decimals = 20;
  if (v.bound > 0) {
    const double lb = static_cast<double>(boost::multiprecision::log10(v.bound));
    decimals = std::clamp(static_cast<int>(std::ceil(-lb)) + 1, 1, 40);
  }
  return v.value.str(decimals, std::ios_base::fixed) + " ± " + to_decimal(v.bound, 2);
}

inline Identity derive(const std::string& family, const std::vector<std::string>& p, Variant variant) {
  family_info(family);
  auto need = [&](std::size_t n) {
    if (p.size() != n)
      throw UsageError(family + " expects " + std::to_string(n) + " parameter(s): " + family_info(family).grammar);
  };
  if (family == "reflection") {
    need(2);
    return reflection(parse_int(p[0]), parse_int(p[1]));
  }
  if (family == "permutation") {
    need(2);
    return permutation_identity(parse_parts(p[0]), parse_parts(p[1]));
  }
  if (family == "shuffle") {
    need(2);
    return shuffle_identity(parse_parts(p[0]), parse_parts(p[1]));
  }
  if (family == "three_point") {
    need(3);
    return three_point_identity(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]));
  }
  if (family == "partial_integration_length2") {
    need(2);
    return partial_integration_length2(parse_int(p[0]), parse_int(p[1]));
  }
  if (family == "partial_integration_length3") {
    need(3);
    return partial_integration_length3(parse_int(p[0]), parse_int(p[1]), parse_int(p[2]),
                                       variant == Variant::None ? Variant::Rightward : variant);
  }
  if (family == "partial_integration_general") {
    need(1);
    return partial_integration_general(parse_parts(p[0]), variant == Variant::None ? Variant::Rightward : variant);
  }
  need(1);
  return trailing_one(parse_parts(p[0]));
}

inline void print_identity(std::ostream& out, const Identity& id, const Options& o) {
  if (o.json) {
    Json j = to_json(id);
    if (!o.trace) j.erase("derivation");
    out << j.dump(2) << "\n";
    return;
  }
  out << id.family;
  if (id.variant != Variant::None) out << " (" << to_string(id.variant) << ")";
  out << ": " << format_combination(id.combination) << " = 0\n";
  if (id.regularized()) out << "regularized: contains divergent factors\n";
  if (o.trace)
    for (const auto& line : id.derivation) out << "  " << line << "\n";
}

inline Diagram diagram_from_text(const std::string& kind, const std::string& text) {
  if (kind == "seashell") return build_seashell(parse_parts(text));
  // peacock "A|B|C", zero labels allowed
  std::vector<Parts> br;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '|')) {
    Parts p;
    std::stringstream ps(part);
    std::string tok;
    while (std::getline(ps, tok, ',')) p.push_back(parse_int(tok));
    br.push_back(p);
  }
  if (br.size() != 3) throw UsageError("peacock argument must look like 'A|B|C', e.g. '0|2|2'");
  return build_peacock(br[0], br[1], br[2]);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple zeta values: evaluation, identity derivation, verification, rank analysis"};
  app.name("mzv");
  app.require_subcommand(1);
  Options o;

  auto add_precision = [&](CLI::App* sub) {
    sub->add_option("--eps", o.eps, "target absolute error bound");
    sub->add_option("--digits", o.digits, "working precision in decimal digits (30..60)");
    sub->add_flag("--json", o.json, "JSON output");
  };

  std::string comp;
  auto* eval = app.add_subcommand("eval", "evaluate zeta(k1,..,km)");
  eval->add_option("composition", comp, "e.g. 3,1 or 2,-1")->required();
  eval->add_option("--trunc", o.trunc, "direct nested sum truncated at N");
  add_precision(eval);

  std::string family;
  std::vector<std::string> params;
  auto* der = app.add_subcommand("derive", "emit an identity of a catalog family");
  der->add_option("family", family, "family name")->required();
  der->add_option("params", params, "family parameters");
  der->add_option("--variant", o.variant, "rightward | alternative | leftward");
  der->add_flag("--json", o.json, "JSON output");
  der->add_flag("--trace", o.trace, "include the derivation steps");

  std::string file;
  auto* ver = app.add_subcommand("verify", "verify an identity JSON file numerically");
  ver->add_option("file", file, "identity JSON")->required();
  add_precision(ver);

  std::string pattern;
  bool three_point = false, with_basis = false, matrix = false;
  auto* rk = app.add_subcommand("rank", "rank of the permutation-identity system");
  rk->add_option("--length", o.length, "argument count l")->required();
  rk->add_option("--pattern", pattern, "degenerate arguments, e.g. abb");
  rk->add_flag("--three-point", three_point, "append three-point rows (l = 3)");
  rk->add_flag("--basis", with_basis, "reduce to the fixed-first-argument basis");
  rk->add_flag("--matrix", matrix, "print the coefficient matrix");
  rk->add_flag("--json", o.json, "JSON output");

  std::string strategy = "rightward", seashell, peacock;
  bool dot = false, eliminate = false;
  auto* red = app.add_subcommand("reduce", "reduce a diagram to zeta values");
  red->add_option("file", file, "diagram JSON");
  red->add_option("--seashell", seashell, "build the sea shell of a composition");
  red->add_option("--peacock", peacock, "build Z(A|B|C), e.g. '0|2|2'");
  red->add_option("--strategy", strategy, "rightward | alternative | shuffle | reversal | three-point");
  red->add_option("--variant", o.variant, "rightward | alternative | leftward (leftward = shuffle)");
  red->add_flag("--eliminate", eliminate, "remove zeta(1) terms from the result");
  red->add_flag("--dot", dot, "print the diagram as a graph description");
  red->add_flag("--trace", o.trace, "print one rewrite per line");
  red->add_flag("--json", o.json, "JSON output");

  std::vector<std::string> families;
  bool perturb = false;
  auto* sw = app.add_subcommand("sweep", "verify every family up to a weight bound");
  sw->add_option("--max-weight", o.max_weight, "largest total weight");
  sw->add_option("--family", families, "restrict to these families");
  sw->add_flag("--perturb", perturb, "self-test: flip one coefficient per identity");
  add_precision(sw);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "mzv: " << e.what() << "\n" << "run 'mzv --help' for usage\n";
    return kUsage;
  }

  try {
    if (o.digits != 0) {
      if (o.digits < 30 || o.digits > 60) throw UsageError("--digits must lie in 30..60");
      ::setenv("MZV_PRECISION_DIGITS", std::to_string(o.digits).c_str(), 1);
    }
    if (!(o.eps > 0)) throw UsageError("--eps must be positive");
    const Real eps(o.eps);
    const Variant variant = o.variant.empty() ? Variant::None : parse_variant(o.variant);

    if (*eval) {
      const auto c = parse_composition(comp);
      PrecisionValue v;
      std::string method;
      if (o.trunc > 0 || !c.unsigned_sum()) {
        v = eval_mzv_direct(c, o.trunc > 0 ? o.trunc : 1000000);
        method = "direct";
      } else {
        Oracle oracle;
        v = oracle.eval_mzv_accel(c, eps);
        method = "accelerated";
      }
      if (o.json) {
        Json j = to_json(v);
        j["composition"] = format_composition(c);
        j["method"] = method;
        out << j.dump(2) << "\n";
      } else {
        out << "ζ(" << format_composition(c) << ") = " << format_value(v) << "\n";
      }
      return kOk;
    }

    if (*der) {
      print_identity(out, derive(family, params, variant), o);
      return kOk;
    }

    if (*ver) {
      const auto id = identity_from_json(read_json_file(file));
      if (id.regularized()) {
        err << "mzv: identity is regularized (contains zeta(1,...)); eliminate divergent terms first\n";
        return kVerificationFailed;
      }
      Oracle oracle;
      const auto rep = verify_identity(oracle, id, eps);
      if (o.json) {
        out << to_json(rep).dump(2) << "\n";
      } else {
        out << (rep.report.pass ? "PASS " : "FAIL ") << rep.identity << " = 0\n"
            << "  residual " << to_decimal(rep.report.residual, 6) << ", bound " << to_decimal(rep.report.bound, 6)
            << "\n";
      }
      return rep.report.pass ? kOk : kVerificationFailed;
    }

    if (*rk) {
      if (o.length < 2) throw UsageError("--length must be >= 2");
      std::vector<int> arg_ids;
      if (pattern.empty()) {
        for (int i = 0; i < o.length; ++i) arg_ids.push_back(i);
      } else {
        arg_ids = parse_degeneracy(pattern);
        if (static_cast<int>(arg_ids.size()) != o.length) throw UsageError("--pattern length differs from --length");
      }
      const auto sys = assemble_permutation_system(arg_ids, three_point);
      const auto r = rank(sys.matrix);
      Json j{{"length", o.length},
             {"rank", r},
             {"rows", sys.matrix.rows()},
             {"unknowns", sys.unknowns.size()},
             {"rhs_columns", sys.rhs_columns.size()}};
      if (!pattern.empty()) j["pattern"] = pattern;
      std::optional<BasisReport> basis;
      if (with_basis) {
        if (!pattern.empty() || three_point) throw UsageError("--basis applies to the generic system only");
        basis = reduce_to_basis(o.length);
        j["basis"] = to_json(*basis);
      }
      if (o.json) {
        out << j.dump(2) << "\n";
      } else {
        out << r << "\n";
        out << "rank " << r << " with " << sys.unknowns.size() << " unknowns, " << sys.matrix.rows() << " rows, "
            << sys.rhs_columns.size() << " lower-length columns\n";
        if (basis) {
          out << "basis (" << (basis->canonical ? "canonical" : "non-canonical, elimination order") << "):";
          for (const auto& b : basis->basis) out << " " << format_symbol_parts(b);
          out << "\n";
          for (const auto& [u, e] : basis->expressions)
            out << "  " << format_symbol_parts(u) << " = " << format_combination(e) << "\n";
        }
        if (matrix) out << sys.matrix.to_text();
      }
      return kOk;
    }

    if (*red) {
      const int sources = !file.empty() + !seashell.empty() + !peacock.empty();
      if (sources != 1) throw UsageError("reduce needs exactly one of: a diagram file, --seashell, --peacock");
      Diagram d = !file.empty()           ? diagram_from_json(read_json_file(file))
                  : !seashell.empty()     ? diagram_from_text("seashell", seashell)
                                          : diagram_from_text("peacock", peacock);
      Strategy st = parse_strategy(strategy);
      if (variant == Variant::Alternative) st = Strategy::Alternative;
      if (variant == Variant::Leftward) st = Strategy::Shuffle;
      if (variant == Variant::Rightward) st = Strategy::Rightward;
      auto res = reduce(d, st);
      ZetaCombination value = res.value;
      if (eliminate) value = eliminate_zeta1(value, &res.trace);
      if (o.json) {
        Json j{{"diagram", to_json(d)}, {"strategy", to_string(st)}, {"value", to_json(value)},
               {"text", format_combination(value)}, {"rewrites", res.rewrites}};
        if (o.trace) j["trace"] = res.trace;
        if (dot) j["dot"] = to_dot(d);
        out << j.dump(2) << "\n";
      } else {
        if (dot) out << to_dot(d);
        if (o.trace)
          for (const auto& line : res.trace) out << line << "\n";
        out << format_combination(value) << "\n";
      }
      return kOk;
    }

    if (*sw) {
      if (o.max_weight < 2 || o.max_weight > 12) throw UsageError("--max-weight must lie in 2..12");
      if (families.empty())
        for (const auto& f : family_catalog()) families.push_back(f.name);
      Oracle oracle;
      Json summary = Json::object();
      bool all_pass = true;
      std::size_t total = 0, failed = 0, skipped = 0;
      for (const auto& fam : families) {
        std::size_t n = 0, bad = 0, reg = 0;
        for (auto id : enumerate_family(fam, o.max_weight)) {
          if (id.regularized()) {
            ++reg;
            if (id.final_family) ++bad;
            continue;
          }
          if (perturb) {
            auto first = id.combination.map().begin();
            const auto f = first->first;
            const auto c = first->second;
            id.combination.add(f, -2 * c);
          }
          ++n;
          if (!verify_identity(oracle, id, eps).report.pass) ++bad;
        }
        total += n;
        failed += bad;
        skipped += reg;
        all_pass = all_pass && bad == 0;
        summary[fam] = {{"checked", n}, {"failed", bad}, {"regularized", reg}};
        if (!o.json)
          out << std::left << std::setw(30) << fam << " checked " << std::setw(5) << n << " failed " << bad
              << (reg ? "  (regularized, skipped: " + std::to_string(reg) + ")" : "") << "\n";
      }
      if (o.json) {
        out << Json{{"max_weight", o.max_weight}, {"families", summary}, {"checked", total}, {"failed", failed},
                    {"regularized", skipped}, {"pass", all_pass}}
                   .dump(2)
            << "\n";
      } else {
        out << (all_pass ? "all identities verified" : "VERIFICATION FAILURES") << " (" << total << " checked)\n";
      }
      return all_pass ? kOk : kVerificationFailed;
    }
  } catch (const CompositionError& e) {
    err << "mzv: malformed composition: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "mzv: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "mzv: precondition violated: " << e.what() << "\n";
    return kUsage;
  } catch (const RuleError& e) {
    err << "mzv: rewrite rule not applicable: " << e.what() << "\n";
    return kUsage;
  } catch (const IrreducibleError& e) {
    err << "mzv: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const EliminationError& e) {
    err << "mzv: " << e.what() << "\n";
    return kVerificationFailed;
  } catch (const DivergenceError& e) {
    err << "mzv: divergent input: " << e.what() << "\n";
    return kUsage;
  } catch (const PrecisionError& e) {
    err << "mzv: precision: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "mzv: malformed input JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "mzv: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace mzv::cli
