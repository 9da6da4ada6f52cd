// xray: generate, validate and analyse weighted X-rays.
//
// Exit codes: 0 success, 1 validation or check failure, 2 usage error.

#include "wallcross/arrangement.hpp"
#include "wallcross/checks.hpp"
#include "wallcross/engine.hpp"
#include "wallcross/generators.hpp"
#include "wallcross/oracle.hpp"
#include "wallcross/render.hpp"
#include "wallcross/validate.hpp"
#include "wallcross/xray_io.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

using namespace wallcross;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

bool use_color() {
  const char* env = std::getenv("XRAY_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

std::string status_word(CheckStatus s) {
  const std::string w = to_string(s);
  if (!use_color()) return w;
  const char* code = s == CheckStatus::Pass ? "\033[32m" : s == CheckStatus::Fail ? "\033[31m" : "\033[33m";
  return code + w + "\033[0m";
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print_violations(const std::vector<Violation>& vs) {
  for (const auto& v : vs) std::cout << status_word(CheckStatus::Fail) << ' ' << to_string(v) << '\n';
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string summary(const WeightedXray& x, const ChamberComplex& complex) {
  std::size_t vertices = 0;
  for (const auto& s : x.strata()) vertices += s.is_vertex();
  const auto top = x.top();
  std::ostringstream out;
  out << x.size() << " strata (" << vertices << " vertices), rank " << x.torus_rank() << ", half dimension "
      << x.half_dim() << "; top stratum '" << x.stratum(top).id << "' has " << complex.subchambers(top).size()
      << " chamber(s)";
  return out.str();
}

int print_report(const CheckReport& r, bool verbose) {
  const CheckStatus overall = !r.passed() ? CheckStatus::Fail
                              : r.count(CheckStatus::Pass) == 0 ? CheckStatus::Skip
                                                                 : CheckStatus::Pass;
  std::cout << status_word(overall) << ' ' << r.name << " (" << r.count(CheckStatus::Pass) << " pass, "
            << r.count(CheckStatus::Fail) << " fail, " << r.count(CheckStatus::Skip) << " skip)\n";
  for (const auto& l : r.lines) {
    if (!verbose && l.status != CheckStatus::Fail) continue;
    std::cout << "  " << status_word(l.status) << ' ' << l.subject << ": " << l.detail << '\n';
  }
  return r.passed() ? kOk : kFail;
}

std::string overall_word(const CheckReport& r) {
  if (!r.passed()) return "FAIL";
  return r.count(CheckStatus::Pass) == 0 ? "SKIP" : "PASS";
}

// ---------------------------------------------------------------- commands

struct GenOptions {
  int n = 0;
  std::string matrix;
  std::vector<std::string> labels;
  std::size_t simplex = 0;
  std::size_t cube = 0;
  std::string out;
};

int finish_generated(const WeightedXray& x, const std::string& out) {
  const auto violations = validate_all(x);
  if (!violations.empty()) {
    print_violations(violations);
    return kFail;
  }
  const ChamberComplex complex(x);
  write_text(out, xray_to_json(x));
  (out.empty() || out == "-" ? std::cerr : std::cout) << "wrote " << (out.empty() ? "-" : out) << ": "
                                                       << summary(x, complex) << '\n';
  return kOk;
}

int cmd_gen_cpn(const GenOptions& o) {
  ProjectionMatrix pi;
  try {
    pi = ProjectionMatrix::parse(o.matrix);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--matrix: ") + e.what());
  }
  return finish_generated(cpn_xray(o.n, pi, o.labels), o.out);
}

int cmd_gen_delzant(const GenOptions& o) {
  if ((o.simplex == 0) == (o.cube == 0)) throw UsageError("give exactly one of --simplex or --cube");
  const Polytope p = o.simplex ? standard_simplex(o.simplex) : unit_cube(o.cube);
  return finish_generated(delzant_xray(p, edge_direction_weights(p)), o.out);
}

std::optional<WeightedXray> load_or_report(const std::string& path, bool unchecked) {
  try {
    return load_xray(path, unchecked);
  } catch (const LoadError& e) {
    std::cout << status_word(CheckStatus::Fail) << ' ' << path << ": " << e.what() << '\n';
    print_violations(e.violations());
    return std::nullopt;
  }
}

int cmd_validate(const std::string& path) {
  auto x = load_or_report(path, true);
  if (!x) return kFail;
  const auto violations = validate_all(*x);
  if (!violations.empty()) {
    print_violations(violations);
    return kFail;
  }
  const ChamberComplex complex(*x);
  std::cout << status_word(CheckStatus::Pass) << ' ' << path << ": " << summary(*x, complex) << '\n';
  return kOk;
}

int cmd_chambers(const std::string& path, bool unchecked) {
  auto x = load_or_report(path, unchecked);
  if (!x) return kFail;
  const ChamberComplex complex(*x);
  for (auto f : x->by_dimension()) {
    const auto& s = x->stratum(f);
    const auto& subs = complex.subchambers(f);
    std::cout << s.id << "  dim " << s.wall.dim() << "  " << subs.size() << " subchamber(s)\n";
    if (s.is_vertex()) continue;
    for (std::size_t i = 0; i < subs.size(); ++i) {
      std::cout << "  #" << i << "  rep " << to_string(subs[i].rep) << "  " << subs[i].cell.to_string() << '\n';
    }
    for (const auto& e : complex.crossing_graph(f).edges) {
      std::cout << "  " << node_name(e.from) << " -> " << node_name(e.to) << "  at " << to_string(e.facet_rep);
      for (const auto& sep : e.separators) {
        std::cout << "  [" << sep.stratum << " #" << sep.subchamber << " f=" << sep.forward
                  << " b=" << sep.backward << ']';
      }
      std::cout << '\n';
    }
    for (const auto& w : complex.crossing_graph(f).warnings) std::cout << "  warning: " << w << '\n';
  }
  return kOk;
}

int cmd_invariants(const std::string& path, const std::vector<std::string>& which, const std::string& format,
                   bool unchecked) {
  auto x = load_or_report(path, unchecked);
  if (!x) return kFail;
  const ChamberComplex complex(*x);

  std::vector<std::pair<RecursiveInvariantSpec, std::optional<InvariantTable>>> specs{
      {signature_invariant(), std::nullopt}, {poincare_invariant(), std::nullopt}, {euler_invariant(), std::nullopt}};
  std::vector<std::pair<std::string, std::string>> results;
  bool failed = false;
  for (auto& [spec, table] : specs) {
    try {
      table = propagate(complex, spec);
      results.emplace_back("cycle-consistency(" + spec.name + ")", "PASS");
    } catch (const PathDependenceError& e) {
      results.emplace_back("cycle-consistency(" + spec.name + ")", "FAIL");
      std::cerr << e.what() << '\n';
      failed = true;
    }
  }
  const auto& sig = specs[0].second;
  const auto& poin = specs[1].second;
  const auto& eul = specs[2].second;
  std::vector<CheckReport> reports;
  if (sig && eul) reports.push_back(check_parity(*x, *sig, *eul));
  if (sig && poin) reports.push_back(check_sig_equals_poincare_at_i(*x, *sig, *poin));
  if (sig && poin && eul) reports.push_back(delzant_shortcut(*x, *sig, &*poin, &*eul));
  for (const auto& r : reports) {
    results.emplace_back(r.name, overall_word(r));
    failed |= !r.passed();
  }

  std::vector<const InvariantTable*> shown;
  auto want = [&](const std::string& name) { return std::find(which.begin(), which.end(), name) != which.end(); };
  if (want("sig") && sig) shown.push_back(&*sig);
  if (want("poincare") && poin) shown.push_back(&*poin);
  if (want("euler") && eul) shown.push_back(&*eul);

  if (format == "json") {
    std::cout << tables_to_json(*x, shown, results);
  } else {
    std::cout << "stratum\tsubchamber\trep";
    for (const auto* t : shown) std::cout << '\t' << t->name();
    std::cout << '\n';
    if (!shown.empty()) {
      for (const auto& r : shown.front()->rows()) {
        std::cout << r.stratum << "\t#" << r.subchamber << '\t' << to_string(r.rep);
        for (const auto* t : shown) std::cout << '\t' << format_value(t->value(r.stratum, r.subchamber), t->ring());
        std::cout << '\n';
      }
    }
    for (const auto& [name, status] : results) {
      const CheckStatus s = status == "PASS" ? CheckStatus::Pass : status == "FAIL" ? CheckStatus::Fail : CheckStatus::Skip;
      std::cout << status_word(s) << ' ' << name << '\n';
    }
  }
  return failed ? kFail : kOk;
}

int cmd_oracle(const std::string& path, bool unchecked, bool verbose) {
  auto x = load_or_report(path, unchecked);
  if (!x) return kFail;
  const ChamberComplex complex(*x);
  int code = kOk;
  for (const auto& r : run_oracle(complex)) code = std::max(code, print_report(r, verbose));
  return code;
}

int cmd_render(const std::string& path, const std::string& out, const std::string& label, bool unchecked) {
  auto x = load_or_report(path, unchecked);
  if (!x) return kFail;
  const ChamberComplex complex(*x);
  std::optional<InvariantTable> table;
  if (label == "sig") table = propagate(complex, signature_invariant());
  if (label == "poincare") table = propagate(complex, poincare_invariant());
  if (label == "euler") table = propagate(complex, euler_invariant());
  write_text(out, render_svg(complex, table ? &*table : nullptr));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weighted X-rays: validation, subchambers and wall-crossing invariants"};
  app.require_subcommand(1);
  bool unchecked = false;
  app.add_flag("--unchecked", unchecked, "Skip axiom validation when loading");

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an X-ray file");
  gen_cmd->require_subcommand(1);
  auto* cpn = gen_cmd->add_subcommand("cpn", "CP^n restricted along a projection matrix");
  cpn->add_option("--n", gen.n, "Complex dimension")->required();
  cpn->add_option("--matrix", gen.matrix, "Rows split by ';', entries by ','")->required();
  cpn->add_option("--labels", gen.labels, "Column labels")->delimiter(',');
  cpn->add_option("-o,--output", gen.out, "Output file ('-' for stdout)");
  auto* delz = gen_cmd->add_subcommand("delzant", "Toric X-ray of a simplex or cube");
  delz->add_option("--simplex", gen.simplex, "Standard simplex of this dimension");
  delz->add_option("--cube", gen.cube, "Unit cube of this dimension");
  delz->add_option("-o,--output", gen.out, "Output file ('-' for stdout)");

  std::string input;
  auto* validate = app.add_subcommand("validate", "Check all axioms");
  validate->add_option("input", input, "X-ray file")->required();

  auto* chambers = app.add_subcommand("chambers", "List subchambers and crossing edges");
  chambers->add_option("input", input, "X-ray file")->required();
  chambers->add_flag("--unchecked", unchecked, "Skip axiom validation");

  std::vector<std::string> which{"sig", "poincare", "euler"};
  std::string format = "table";
  auto* inv = app.add_subcommand("invariants", "Propagate invariants over all subchambers");
  inv->add_option("input", input, "X-ray file")->required();
  inv->add_option("--which", which, "Subset of sig,poincare,euler")
      ->delimiter(',')
      ->check(CLI::IsMember({"sig", "poincare", "euler"}));
  inv->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
  inv->add_flag("--unchecked", unchecked, "Skip axiom validation");

  bool verbose = false;
  auto* oracle = app.add_subcommand("oracle", "Cross-check the engine against direct formulas");
  oracle->add_option("input", input, "X-ray file")->required();
  oracle->add_flag("-v,--verbose", verbose, "Print every check line");
  oracle->add_flag("--unchecked", unchecked, "Skip axiom validation");

  std::string out;
  std::string label = "sig";
  auto* render = app.add_subcommand("render", "SVG drawing of a rank 1 or 2 X-ray");
  render->add_option("input", input, "X-ray file")->required();
  render->add_option("-o,--output", out, "SVG file ('-' for stdout)");
  render->add_option("--label", label, "sig, poincare, euler or none")
      ->check(CLI::IsMember({"sig", "poincare", "euler", "none"}));
  render->add_flag("--unchecked", unchecked, "Skip axiom validation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*cpn) return cmd_gen_cpn(gen);
    if (*delz) return cmd_gen_delzant(gen);
    if (*validate) return cmd_validate(input);
    if (*chambers) return cmd_chambers(input, unchecked);
    if (*inv) return cmd_invariants(input, which, format, unchecked);
    if (*oracle) return cmd_oracle(input, unchecked, verbose);
    if (*render) return cmd_render(input, out, label, unchecked);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
