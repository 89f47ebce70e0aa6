// tautilt: command-line front end.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tautilt/objects.hpp"
#include "tautilt/taucmc.hpp"
#include "tautilt/twoterm.hpp"
#include "tautilt/verify.hpp"

namespace {

using namespace tautilt;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct Options {
  std::uint64_t seed = 0;
  std::string field = "Q";
  int depth = 3;
  int dim_bound = 12;
  bool dot = false;
  bool json = false;
  std::string algebra;
  std::string object, second;
  std::string suite;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string slurp_if_file(const std::string& arg) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(arg, ec)) return arg;
  std::ifstream in(arg);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_prime(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void select_field(const std::string& f) {
  if (f == "Q" || f == "q") {
    Field::use_rationals();
    return;
  }
  unsigned long p = 0;
  try {
    std::size_t used = 0;
    p = std::stoul(f, &used);
    if (used != f.size()) throw std::invalid_argument(f);
  } catch (const std::exception&) {
    throw UsageError("--field expects Q or a prime, got " + f);
  }
  if (!is_prime(p)) throw UsageError("--field " + f + " is not prime");
  Field::use_prime(p);
}

AlgebraPtr load_algebra(const std::string& arg) {
  std::error_code ec;
  AlgebraPtr a;
  if (std::filesystem::is_regular_file(arg, ec)) {
    a = compile_text(slurp_if_file(arg));
  } else {
    const auto names = builtin_names();
    if (std::find(names.begin(), names.end(), arg) == names.end())
      throw UsageError("no algebra file or built-in algebra named " + arg);
    a = compile_text(builtin_algebra(arg));
  }
  if (const auto p = Field::characteristic(); p != 0 && p <= static_cast<unsigned long>(a->dim()))
    throw UsageError("--field " + std::to_string(p) + " must exceed dim " + a->name() + " = " + std::to_string(a->dim()));
  return a;
}

int cmd_compile(ModuleCategory& c) {
  const BasedAlgebra& a = c.algebra();
  std::cout << "algebra " << a.name() << "\n";
  std::cout << "rank " << a.rank() << ", dimension " << a.dim() << ", Loewy length " << a.loewy_length() << "\n";
  std::cout << "generators:";
  for (int g : a.generators()) {
    const auto& e = a.basis(g);
    std::cout << " " << e.label << ":" << e.source + 1 << "->" << e.target + 1;
  }
  std::cout << "\n";
  for (int v = 0; v < a.rank(); ++v)
    std::cout << "P(" << v + 1 << ") " << dims_string(c.dims(c.projective(v))) << "  I(" << v + 1 << ") "
              << dims_string(c.dims(c.injective(v))) << "\n";
  return kOk;
}

int cmd_tau(ModuleCategory& c, const Options& o) {
  const std::string text = slurp_if_file(o.object);
  Rep m;
  if (!text.empty() && text.find('{') != std::string::npos && text.find('[') != 0) {
    m = parse_module_json(c.algebra_ptr(), text);
  } else {
    const ShiftedObject u = parse_object(c, text);
    if (!shifted_part(u).empty()) throw InputError("tau expects a module, got " + describe(c, u));
    m = c.sum_of(module_part(u));
  }
  ShiftedObject in;
  for (auto id : c.decompose(m)) in.items.push_back({id, 0});
  const Rep t = tau(m);
  ShiftedObject out;
  for (auto id : c.decompose(t)) out.items.push_back({id, 0});
  std::cout << "M = " << describe(c, in) << "  " << dims_string(m.dims) << "\n";
  std::cout << "τM = " << describe(c, out) << "  " << dims_string(t.dims) << "\n";
  std::cout << module_to_json(t) << "\n";
  return kOk;
}

int cmd_rigid(ModuleCategory& c, const Options& o) {
  const ShiftedObject u = parse_object(c, slurp_if_file(o.object));
  std::cout << "U = " << describe(c, u) << "\n";
  if (!u.basic() || !is_rigid_pair(c, u)) {
    std::cout << "support τ-rigid: no\n";
    return kFailed;
  }
  std::cout << "support τ-rigid: yes\n";
  std::cout << "support τ-tilting: " << (is_tau_tilting(c, u) ? "yes" : "no") << "\n";
  const ShiftedObject b = bongartz(c, u), cb = co_bongartz(c, u);
  std::cout << "Bongartz complement: " << describe(c, b) << "  ->  " << describe(c, unite(u, b)) << "\n";
  std::cout << "co-Bongartz complement: " << describe(c, cb) << "  ->  " << describe(c, unite(u, cb)) << "\n";
  return kOk;
}

bool require_rigid(ModuleCategory& c, const ShiftedObject& u) {
  if (u.basic() && is_rigid_pair(c, u)) return true;
  std::cout << describe(c, u) << " is not a basic support τ-rigid pair\n";
  return false;
}

int cmd_jperp(ModuleCategory& c, const Options& o) {
  const ShiftedObject u = parse_object(c, slurp_if_file(o.object));
  if (!require_rigid(c, u)) return kFailed;
  const PerpPtr w = jperp(c, u);
  if (o.json) {
    std::cout << to_json(c, *w) << "\n";
    return kOk;
  }
  std::cout << "J(" << describe(c, u) << ") = " << describe(c, w->key) << "\n";
  std::cout << "rank " << w->rank() << ", dim Γ = " << w->gamma->dim() << "\n";
  for (int i = 0; i < w->rank(); ++i)
    std::cout << "  vertex " << i + 1 << ": projective " << c.name(w->gens[i]) << ", simple " << c.name(w->simples[i])
              << "\n";
  return kOk;
}

int cmd_emap(ModuleCategory& c, const Options& o) {
  const ShiftedObject u = parse_object(c, slurp_if_file(o.object));
  const ShiftedObject v = parse_object(c, slurp_if_file(o.second));
  if (!require_rigid(c, unite(u, v))) return kFailed;
  const ShiftedObject e = emap(c, u, v);
  std::cout << "E_U(V) = " << describe(c, e) << "  in J(U) = " << describe(c, jperp(c, u)->key) << "\n";
  return kOk;
}

int cmd_mutgraph(ModuleCategory& c, const Options& o) {
  const MutationGraph g = explore(c, o.depth, true);
  if (o.dot) std::cout << to_dot(c, g);
  else if (o.json) std::cout << to_json(c, g) << "\n";
  else {
    std::cout << g.nodes.size() << " support τ-tilting pairs, " << g.edges.size() << " mutations, "
              << (g.complete ? "complete" : "truncated at depth " + std::to_string(o.depth)) << "\n";
    for (const auto& n : g.nodes) std::cout << "  " << describe(c, n) << "\n";
  }
  return kOk;
}

int cmd_category(ModuleCategory& c, const Options& o) {
  CmcGraph g = build(c, o.depth);
  if (o.dot) {
    std::cout << to_dot(c, g);
    return kOk;
  }
  if (o.json) {
    compose_all(c, g);
    std::cout << to_json(c, g) << "\n";
    return kOk;
  }
  std::cout << g.objects.size() << " objects, " << g.morphisms.size() << " morphisms (depth " << o.depth << ")\n";
  for (const auto& w : g.objects)
    std::cout << "  " << describe(c, w.key) << "  rank " << w.rank() << (w.complete ? "" : "  (fan truncated)") << "\n";
  return kOk;
}

int cmd_verify(const Options& o) {
  SuiteConfig cfg;
  cfg.depth = o.depth;
  cfg.dim_bound = o.dim_bound;
  cfg.seed = o.seed;
  std::vector<std::string> suites;
  if (o.suite == "all") suites = suite_names();
  else {
    const auto names = suite_names();
    if (std::find(names.begin(), names.end(), o.suite) == names.end()) throw UsageError("unknown suite " + o.suite);
    suites = {o.suite};
  }
  ModuleCategory c(load_algebra(o.algebra.empty() ? "A3" : o.algebra), o.seed);
  bool ok = true;
  for (const auto& s : suites) {
    const SuiteReport r = run_suite(s, c, cfg);
    std::cout << r.text();
    ok = ok && r.ok();
  }
  return ok ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"τ-tilting reduction and τ-cluster morphism categories"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  app.add_option("--field", o.field, "Q or a prime p larger than the algebra dimension")->capture_default_str();
  app.add_option("--depth", o.depth, "mutation depth")->check(CLI::NonNegativeNumber)->capture_default_str();
  app.add_option("--dimbound", o.dim_bound, "dimension bound for bounded certificates")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  const auto algebra_arg = [&](CLI::App* s) {
    s->add_option("algebra", o.algebra, "algebra file or built-in name")->required();
  };
  auto* compile = app.add_subcommand("compile", "algebra sanity report");
  algebra_arg(compile);
  auto* tau_cmd = app.add_subcommand("tau", "AR translate of a module");
  algebra_arg(tau_cmd);
  tau_cmd->add_option("module", o.object, "module JSON, file, or named modules")->required();
  auto* rigid = app.add_subcommand("rigid", "τ-rigidity with Bongartz and co-Bongartz completions");
  algebra_arg(rigid);
  rigid->add_option("object", o.object, "e.g. \"P(1) + S(2)[1]\"")->required();
  auto* jp = app.add_subcommand("jperp", "the τ-perpendicular category J(U)");
  algebra_arg(jp);
  jp->add_option("object", o.object)->required();
  jp->add_flag("--json", o.json);
  auto* em = app.add_subcommand("emap", "E_U(V)");
  algebra_arg(em);
  em->add_option("U", o.object)->required();
  em->add_option("V", o.second)->required();
  auto* mg = app.add_subcommand("mutgraph", "support τ-tilting mutation graph");
  algebra_arg(mg);
  auto* cat = app.add_subcommand("category", "τ-cluster morphism category");
  algebra_arg(cat);
  for (auto* s : {mg, cat}) {
    auto* d = s->add_flag("--dot", o.dot);
    s->add_flag("--json", o.json)->excludes(d);
  }
  auto* ver = app.add_subcommand("verify", "verification suites");
  ver->add_option("suite", o.suite, "all, " + [] {
    std::string s;
    for (const auto& n : suite_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  ver->add_option("algebra", o.algebra, "algebra file or built-in name (default A3)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    select_field(o.field);
    if (*ver) return cmd_verify(o);
    ModuleCategory c(load_algebra(o.algebra), o.seed);
    if (*compile) return cmd_compile(c);
    if (*tau_cmd) return cmd_tau(c, o);
    if (*rigid) return cmd_rigid(c, o);
    if (*jp) return cmd_jperp(c, o);
    if (*em) return cmd_emap(c, o);
    if (*mg) return cmd_mutgraph(c, o);
    if (*cat) return cmd_category(c, o);
  } catch (const ParseError& e) {
    std::cerr << o.algebra << ": parse error, " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const FieldError& e) {
    std::cerr << "field error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlgebraError& e) {
    std::cerr << "algebra error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
