#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semigraph/graph.hpp"
#include "semigraph/invariants.hpp"
#include "semigraph/io.hpp"
#include "semigraph/spec.hpp"
#include "semigraph/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInputError = 2;

int default_cap() {
  if (const char* env = std::getenv("MONOGENIC_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw semigraph::InvalidParams("MONOGENIC_CAP is not an integer");
    }
  }
  return semigraph::kDefaultSolverCap;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw semigraph::ParseError("cannot write " + out_path);
  out << text;
}

std::string set_to_string(const std::set<int>& v) {
  std::string out = "{";
  bool first = true;
  for (int x : v) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(x);
  }
  return out + "}";
}

int cmd_build(const std::string& spec_text) {
  using namespace semigraph;
  Realized r = realize(parse_spec(spec_text));
  const FiniteSemigroup& s = r.semigroup;
  const SimpleGraph g = build_cyclic_graph(s);
  std::ostringstream out;
  out << "spec: " << render_spec(parse_spec(spec_text)) << "\n";
  out << "n: " << s.size() << "\n";
  out << "idempotents: " << s.idempotents().size() << "\n";
  out << "pi: " << set_to_string(s.pi_set()) << "\n";
  out << "exponent: " << s.exponent() << "\n";
  out << "components:";
  for (const auto& comp : connected_components(g)) out << " " << comp.size();
  out << "\n";
  std::cout << out.str();
  return kExitOk;
}

int cmd_graph(const std::string& spec_text, const std::string& format,
              const std::string& out_path) {
  using namespace semigraph;
  Realized r = realize(parse_spec(spec_text));
  const SimpleGraph g = build_cyclic_graph(r.semigroup);
  if (format == "dot")
    emit(to_dot(g, r.semigroup.labels()), out_path);
  else
    emit(graph_to_json(g, r.semigroup.labels()) + "\n", out_path);
  return kExitOk;
}

int cmd_invariants(const std::string& spec_text, int cap, bool strict,
                   const std::string& out_path) {
  using namespace semigraph;
  Realized r = realize(parse_spec(spec_text));
  const InvariantReport report = build_report(
      r.semigroup, cap, r.monogenic, r.rees ? &*r.rees : nullptr);
  emit(report_to_json(report) + "\n", out_path);
  if (strict && !report.formulas_match_oracles) return kExitVerifyFail;
  return kExitOk;
}

int cmd_verify(const std::string& family, const semigraph::VerifyOptions& opt) {
  using namespace semigraph;
  const auto outcomes = verify_family(family, opt);
  int failed = 0;
  for (const auto& o : outcomes) {
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS " : "FAIL ") << o.theorem << " " << o.instance;
    if (!o.witness.empty()) std::cout << " :: " << o.witness;
    std::cout << "\n";
  }
  std::cout << "checked " << outcomes.size() << " outcomes, " << failed
            << " failed\n";
  return failed == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-semigroup cyclic-graph toolkit"};
  app.require_subcommand(1);

  std::string spec_text, format = "json", out_path, family;
  int cap = -1;
  bool strict = false;
  semigraph::VerifyOptions vopt;

  auto* build = app.add_subcommand("build", "construct and summarize a semigroup");
  build->add_option("spec", spec_text, "construction expression")->required();

  auto* graph = app.add_subcommand("graph", "emit the cyclic graph");
  graph->add_option("spec", spec_text, "construction expression")->required();
  graph->add_option("--format", format, "dot|json")
      ->check(CLI::IsMember({"dot", "json"}));
  graph->add_option("--out", out_path, "output file (default stdout)");

  auto* inv = app.add_subcommand("invariants", "formula/oracle report as JSON");
  inv->add_option("spec", spec_text, "construction expression")->required();
  inv->add_option("--cap", cap, "exact-solver component cap");
  inv->add_flag("--strict", strict, "exit 1 when formulas and oracles disagree");
  inv->add_option("--out", out_path, "output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "run a theorem-check sweep");
  verify->add_option("--family", family,
                     "monogenic|cyclic|band|rees-random|product|table-enum3")
      ->required();
  verify->add_option("--max-order", vopt.max_order, "size bound for sweeps");
  verify->add_option("--count", vopt.count, "instances for randomized families");
  verify->add_option("--seed", vopt.seed, "seed for randomized families");
  verify->add_option("--cap", cap, "exact-solver component cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    const int effective_cap = cap >= 0 ? cap : default_cap();
    if (build->parsed()) return cmd_build(spec_text);
    if (graph->parsed()) return cmd_graph(spec_text, format, out_path);
    if (inv->parsed())
      return cmd_invariants(spec_text, effective_cap, strict, out_path);
    vopt.cap = effective_cap;
    return cmd_verify(family, vopt);
  } catch (const semigraph::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
