#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>

#include "CLI11.hpp"
#include "amalgam/closure.hpp"
#include "amalgam/companion.hpp"
#include "amalgam/errors.hpp"
#include "amalgam/generic.hpp"
#include "amalgam/graph_io.hpp"
#include "amalgam/kernel.hpp"
#include "amalgam/moss.hpp"
#include "amalgam/zoo.hpp"

using namespace amalgam;

namespace {

enum Exit : int { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3 };

struct Common {
  std::string alpha = "618/1000";
  int jobs = 1;

  ClassSpec spec(const std::string& name) const { return make_class(name, AlphaParam::parse(alpha)); }
};

VertexSet parse_set(std::string text) {
  std::erase_if(text, [](char c) { return c == '{' || c == '}' || c == ' '; });
  return parse_vertex_list(text);
}

// "1..20" or "1,3,5".
std::vector<int> parse_radii(const std::string& text) {
  std::vector<int> out;
  auto to_int = [](std::string_view s) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size()) throw InvalidArgument("bad radius '" + std::string(s) + "'");
    return v;
  };
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const int lo = to_int(std::string_view(text).substr(0, dots)), hi = to_int(std::string_view(text).substr(dots + 2));
    for (int r = lo; r <= hi; ++r) out.push_back(r);
    return out;
  }
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) out.push_back(to_int(item));
  return out;
}

void print_witness(const std::string& header, const Graph& g) { std::cout << "# " << header << '\n' << to_text(g); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

// --- subcommands ------------------------------------------------------------

int run_classes() {
  for (const auto& name : class_names()) {
    const auto s = make_class(name);
    std::cout << name << "\t" << s.summary << '\n';
  }
  return kOk;
}

struct StrongArgs {
  std::string cls, ambient, set, within;
  bool bruteforce = false;
};

int run_check_strong(const Common& c, const StrongArgs& a) {
  const auto spec = c.spec(a.cls);
  const Graph full = read_graph_file(a.ambient);
  const VertexSet s = parse_set(a.set);
  // --within evaluates inside the induced substructure on those vertices.
  const VertexSet w = a.within.empty() ? full.all() : parse_set(a.within);
  if (!s.subset_of(w) || !w.subset_of(full.all())) throw InvalidArgument("need set ⊆ within ⊆ ambient");
  const Graph m = induced(full, w);
  const VertexSet local = restrict_to(s, w);
  if (!spec.membership(m)) throw InvalidArgument("ambient is not a member of " + a.cls);
  const bool strong = a.bruteforce ? is_strong_bruteforce(spec, local, m) : Ambient(spec, m).strong_in_m(local);
  if (strong) {
    std::cout << "PASS check-strong class=" << a.cls << " set=" << format_set(s) << '\n';
    return kOk;
  }
  print_witness("FAIL check-strong class=" + a.cls + " set=" + format_set(s) +
                    (a.within.empty() ? "" : " within=" + format_set(w)),
                full);
  return kFail;
}

struct BiminArgs {
  std::string cls, ambient, set;
  int max_new = -1;
  bool minimal = false;
};

int run_biminimal(const Common& c, const BiminArgs& a) {
  const auto spec = c.spec(a.cls);
  const Graph m = read_graph_file(a.ambient);
  Ambient amb(spec, m);
  const VertexSet x = parse_set(a.set);
  const auto exts = a.minimal ? amb.minimal_extensions(x, a.max_new) : amb.biminimal_extensions(x, a.max_new);
  std::cout << (a.minimal ? "minimal" : "biminimal") << " extensions of " << format_set(x) << ": " << exts.size()
            << '\n';
  for (VertexSet y : exts) std::cout << format_set(y) << '\n';
  return kOk;
}

struct AmalgArgs {
  std::string cls, a, b, c;
  bool full = false;
};

int run_amalgam(const Common& c, const AmalgArgs& a) {
  const auto spec = c.spec(a.cls);
  const VertexSet base = parse_set(a.a);
  const Graph b = read_graph_file(a.b), cg = read_graph_file(a.c);
  const auto v = a.full ? check_full_amalgamation(spec, base, b, cg) : check_free_amalgamation(spec, base, b, cg);
  const std::string kind = a.full ? "full" : "free";
  switch (v.outcome) {
    case Outcome::Pass:
      std::cout << "PASS " << kind << "-amalgam class=" << a.cls << '\n' << to_text(v.d);
      return kOk;
    case Outcome::Precondition:
      std::cerr << "precondition: " << v.detail << '\n';
      return kUsage;
    case Outcome::Fail:
      break;
  }
  print_witness("FAIL " + kind + "-amalgam class=" + a.cls + " b=" + format_set(v.b_in_d) + " c=" +
                    format_set(v.c_in_d) + " " + v.detail,
                v.d);
  return kFail;
}

struct ClosureArgs {
  std::string mode = "mcl", cls, ambient, set, chi = "lex";
  int max_size = -1;
};

int run_closure(const Common& c, const ClosureArgs& a) {
  const auto spec = c.spec(a.cls);
  const Graph m = read_graph_file(a.ambient);
  const VertexSet s = parse_set(a.set);
  if (a.mode == "enumerate") {
    const auto all = enumerate_minimal_resolutions(spec, s, m, a.max_size);
    std::cout << "minimal resolutions of " << format_set(s) << ": " << all.size() << '\n';
    for (VertexSet r : all) std::cout << format_set(r) << '\n';
    return kOk;
  }
  ClosureReport rep;
  if (a.mode == "mcl") {
    rep = mcl(spec, s, m);
  } else {
    const auto chi = a.chi == "revlex" ? ChiStrategy::reverse_lexicographic() : ChiStrategy::lexicographic();
    rep = resolve(spec, s, m, chi);
  }
  std::cout << to_string(rep.mode) << ' ' << format_set(rep.input) << " -> " << format_set(rep.result) << '\n';
  for (std::size_t i = 0; i < rep.layers.size(); ++i) std::cout << "layer " << i << ' ' << format_set(rep.layers[i]) << '\n';
  std::cout << "strong " << (rep.verified_strong ? "yes" : "no") << '\n';
  return rep.verified_strong ? kOk : kFail;
}

struct GenericArgs {
  std::string cls, out, log, ambient;
  int stages = 10, bound = 2, interior = -1;
  std::uint64_t seed = 1;
};

int run_generic_build(const Common& c, const GenericArgs& a) {
  const auto spec = c.spec(a.cls);
  BuildOptions opt;
  opt.stages = a.stages;
  opt.pattern_bound = a.bound;
  opt.seed = a.seed;
  const auto res = build_generic(spec, opt);
  if (!a.out.empty()) write_file(a.out, to_text(res.m));
  if (!a.log.empty())
    write_file(a.log, res.log.to_text());
  else
    std::cout << res.log.to_text();
  return kOk;
}

int run_generic_verify(const Common& c, const GenericArgs& a) {
  const auto spec = c.spec(a.cls);
  const Graph m = read_graph_file(a.ambient);
  const VertexSet within = a.interior < 0 ? m.all() : VertexSet::range(std::min(a.interior, m.size()));
  const auto rep = verify_injectivity(spec, m, a.bound, within);
  const bool age = verify_age(spec, m);
  std::cout << "age " << (age ? "PASS" : "FAIL") << "\ninjectivity tasks " << rep.tasks << " satisfied "
            << rep.satisfied << " unmet " << rep.unmet.size() << '\n';
  for (const auto& u : rep.unmet) std::cout << "unmet pattern " << u.pattern << " at " << format_set(u.f.image()) << '\n';
  return age && rep.unmet.empty() ? kOk : kFail;
}

struct CompanionArgs {
  std::string cls, other, ambient, set;
  int bound = 5, max_a = 4, max_ext = 1;
};

int report_coincide(const std::string& what, const CoincideVerdict& v) {
  if (v.outcome == Outcome::Pass) {
    std::cout << "PASS " << what << '\n';
    return kOk;
  }
  if (v.outcome == Outcome::Precondition) {
    std::cerr << "precondition: " << v.detail << '\n';
    return kUsage;
  }
  print_witness("FAIL " + what + " x=" + format_set(v.x) + " first=" + (v.first ? "yes" : "no") +
                    " second=" + (v.second ? "yes" : "no") + " " + v.detail,
                *v.y);
  return kFail;
}

int run_companion(const Common& c, const std::string& action, const CompanionArgs& a) {
  const auto spec = c.spec(a.cls);
  if (action == "derive") {
    const auto derived = derive_forall(spec);
    const Graph m = read_graph_file(a.ambient);
    const VertexSet s = parse_set(a.set);
    if (derived.strong(s, m)) {
      std::cout << "PASS " << derived.name << " set=" << format_set(s) << '\n';
      return kOk;
    }
    print_witness("FAIL " + derived.name + " set=" + format_set(s), m);
    return kFail;
  }
  if (action == "coincide") return report_coincide("coincide " + a.cls + " " + a.other,
                                                   biminimal_coincide(spec, c.spec(a.other), a.bound, c.jobs));
  if (action == "roundtrip")
    return report_coincide("roundtrip " + a.cls + " " + a.other, roundtrip_check(spec, c.spec(a.other), a.bound, c.jobs));
  const auto w = find_free_amalg_counterexample(spec, a.max_a, a.max_ext);
  if (!w) {
    std::cout << "NONE break-free class=" << a.cls << " max-a=" << a.max_a << " max-ext=" << a.max_ext << '\n';
    return kOk;
  }
  print_witness("FAIL free-amalgam class=" + a.cls + " b=" + format_set(w->b_in_d) + " c=" + format_set(w->c_in_d) +
                    " " + w->reason,
                w->d);
  return kFail;
}

struct MossArgs {
  std::string cls = "kp-lt", radii = "1..10", out;
  int length = 5, paths = 1, path_len = 20, filler = 4, margin = 8, x = -1, bound = 2;
  bool csv = false;
};

int run_moss(const Common& c, const std::string& action, const MossArgs& a) {
  if (action == "chain") {
    const auto spec = c.spec(a.cls);
    const auto chain = find_minimal_pair_chain(spec, a.length);
    if (!chain) {
      std::cout << "NONE chain class=" << a.cls << " length=" << a.length << '\n';
      return kFail;
    }
    for (std::size_t i = 0; i < chain->size(); ++i) std::cout << "# X" << i << '\n' << to_text((*chain)[i]);
    return kOk;
  }
  const auto t = build_truncation(a.paths, a.path_len, a.filler, a.margin);
  if (action == "truncate") {
    if (a.out.empty())
      std::cout << to_text(t.g);
    else
      write_file(a.out, to_text(t.g));
    return kOk;
  }
  const auto spec = c.spec(a.cls);
  if (action == "growth") {
    const int x = a.x >= 0 ? a.x : t.paths.front()[a.path_len / 2];
    const auto rows = closure_growth(spec, x, t, parse_radii(a.radii));
    std::cout << (a.csv ? growth_table_csv(rows) : growth_table_text(rows));
    return kOk;
  }
  const auto rep = injectivity_suite(spec, t, a.bound);
  std::cout << "interior tasks " << rep.tasks << " satisfied " << rep.satisfied << " unmet " << rep.unmet.size() << '\n';
  for (const auto& u : rep.unmet) std::cout << "unmet pattern " << u.pattern << " at " << format_set(u.f.image()) << '\n';
  return rep.unmet.empty() ? kOk : kFail;
}

struct AxiomArgs {
  std::string cls;
  int max_n = 4;
  std::uint64_t seed = 1;
};

int run_axioms(const Common& c, const AxiomArgs& a) {
  const auto report = check_axioms(c.spec(a.cls), a.max_n, a.seed);
  // Summary lines are comments so a single witness replays as a graph file.
  std::cout << "# axioms class=" << a.cls << " max-n=" << a.max_n << (report.exhaustive ? " exhaustive" : " sampled")
            << '\n';
  for (const auto& v : report.verdicts) std::cout << "# " << v.axiom << ' ' << (v.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& v : report.verdicts) {
    if (v.pass || !v.witness) continue;
    const auto& w = *v.witness;
    print_witness("FAIL " + v.axiom + " a=" + format_set(w.a) + " b=" + format_set(w.b) + " x=" + format_set(w.x) +
                      " " + w.note,
                  w.w);
  }
  return report.all_pass() ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Amalgamation classes, closures and companions at desk scale"};
  app.require_subcommand(1);
  Common common;
  app.add_option("--alpha", common.alpha, "alpha for kalpha as N/D")->capture_default_str();
  app.add_option("--jobs", common.jobs, "worker threads where supported")->check(CLI::PositiveNumber);

  auto* classes = app.add_subcommand("classes", "list registered classes");

  StrongArgs strong;
  auto* check = app.add_subcommand("check-strong", "is SET strong in the ambient");
  check->add_option("--class", strong.cls)->required();
  check->add_option("--ambient", strong.ambient)->required()->check(CLI::ExistingFile);
  check->add_option("--set", strong.set)->required();
  check->add_option("--within", strong.within, "evaluate inside the substructure on these vertices");
  check->add_flag("--bruteforce", strong.bruteforce, "use the definitional predicate");

  BiminArgs bimin;
  auto* biminimal = app.add_subcommand("biminimal", "biminimal (or minimal) extensions of SET in the ambient");
  biminimal->add_option("--class", bimin.cls)->required();
  biminimal->add_option("--ambient", bimin.ambient)->required()->check(CLI::ExistingFile);
  biminimal->add_option("--set", bimin.set)->required();
  biminimal->add_option("--max-new", bimin.max_new);
  biminimal->add_flag("--minimal", bimin.minimal);

  AmalgArgs amalg;
  auto* amalgam = app.add_subcommand("amalgam", "free or full amalgamation over shared vertices A");
  amalgam->add_option("--class", amalg.cls)->required();
  amalgam->add_option("--a", amalg.a, "shared vertices, same indices in B and C")->required();
  amalgam->add_option("--b", amalg.b)->required()->check(CLI::ExistingFile);
  amalgam->add_option("--c", amalg.c)->required()->check(CLI::ExistingFile);
  amalgam->add_flag("--full", amalg.full);

  ClosureArgs clos;
  auto* closure = app.add_subcommand("closure", "maximal closure, chi-resolution or minimal resolutions");
  closure->add_option("--mode", clos.mode)->check(CLI::IsMember({"mcl", "resolve", "enumerate"}))->capture_default_str();
  closure->add_option("--class", clos.cls)->required();
  closure->add_option("--ambient", clos.ambient)->required()->check(CLI::ExistingFile);
  closure->add_option("--set", clos.set)->required();
  closure->add_option("--chi", clos.chi)->check(CLI::IsMember({"lex", "revlex"}))->capture_default_str();
  closure->add_option("--max-size", clos.max_size);

  GenericArgs gen;
  auto* generic = app.add_subcommand("generic", "finite generic approximations");
  generic->require_subcommand(1);
  auto* build = generic->add_subcommand("build", "run the staged construction");
  build->add_option("--class", gen.cls)->required();
  build->add_option("--stages", gen.stages)->capture_default_str();
  build->add_option("--bound", gen.bound)->capture_default_str();
  build->add_option("--seed", gen.seed)->capture_default_str();
  build->add_option("--out", gen.out, "final structure in graph text");
  build->add_option("--log", gen.log, "stage log (default stdout)");
  auto* verify = generic->add_subcommand("verify", "age and injectivity of a structure");
  verify->add_option("--class", gen.cls)->required();
  verify->add_option("--ambient", gen.ambient)->required()->check(CLI::ExistingFile);
  verify->add_option("--bound", gen.bound)->capture_default_str();
  verify->add_option("--interior", gen.interior, "only embeddings into the first N vertices");

  CompanionArgs comp;
  auto* companion = app.add_subcommand("companion", "derived companions and class comparisons");
  companion->require_subcommand(1);
  std::string comp_action;
  const std::pair<const char*, const char*> comp_cmds[] = {
      {"derive", "is SET strong in the universal companion of the class"},
      {"coincide", "compare membership and biminimal pairs of two classes"},
      {"roundtrip", "does the universal companion of --other coincide with --class"},
      {"break-free", "search for a free amalgam that leaves the class"}};
  for (auto [name, help] : comp_cmds) {
    auto* s = companion->add_subcommand(name, help);
    s->add_option("--class", comp.cls)->required();
    s->callback([&comp_action, name] { comp_action = name; });
    if (std::string_view(name) == "derive") {
      s->add_option("--ambient", comp.ambient)->required()->check(CLI::ExistingFile);
      s->add_option("--set", comp.set)->required();
    } else if (std::string_view(name) == "break-free") {
      s->add_option("--max-a", comp.max_a)->capture_default_str();
      s->add_option("--max-ext", comp.max_ext)->capture_default_str();
    } else {
      s->add_option("--other", comp.other)->required();
      s->add_option("--bound", comp.bound)->capture_default_str();
    }
  }

  MossArgs moss;
  auto* moss_cmd = app.add_subcommand("moss", "chains of minimal pairs and truncated path structures");
  moss_cmd->require_subcommand(1);
  std::string moss_action;
  const std::pair<const char*, const char*> moss_cmds[] = {
      {"chain", "descending chain of minimal pairs"},
      {"truncate", "print a truncated path structure"},
      {"growth", "smallest resolution of one vertex per order radius"},
      {"inject", "injectivity tasks inside the truncation interior"}};
  for (auto [name, help] : moss_cmds) {
    auto* s = moss_cmd->add_subcommand(name, help);
    s->callback([&moss_action, name] { moss_action = name; });
    if (std::string_view(name) == "chain") {
      s->add_option("--class", moss.cls)->capture_default_str();
      s->add_option("--length", moss.length)->capture_default_str();
      continue;
    }
    s->add_option("--paths", moss.paths)->capture_default_str();
    s->add_option("--path-len", moss.path_len)->capture_default_str();
    s->add_option("--filler", moss.filler)->capture_default_str();
    s->add_option("--margin", moss.margin)->capture_default_str();
    if (std::string_view(name) == "truncate") {
      s->add_option("--out", moss.out);
      continue;
    }
    s->add_option("--class", moss.cls)->capture_default_str();
    if (std::string_view(name) == "growth") {
      s->add_option("--x", moss.x, "vertex (default: middle of the first path)");
      s->add_option("--radii", moss.radii, "range a..b or list")->capture_default_str();
      s->add_flag("--csv", moss.csv);
    } else {
      s->add_option("--bound", moss.bound)->capture_default_str();
    }
  }

  AxiomArgs ax;
  auto* axioms = app.add_subcommand("axioms", "check the amalgamation-class axioms");
  axioms->add_option("--class", ax.cls)->required();
  axioms->add_option("--max-n", ax.max_n)->capture_default_str();
  axioms->add_option("--seed", ax.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*classes) return run_classes();
    if (*check) return run_check_strong(common, strong);
    if (*biminimal) return run_biminimal(common, bimin);
    if (*amalgam) return run_amalgam(common, amalg);
    if (*closure) return run_closure(common, clos);
    if (*generic) return *build ? run_generic_build(common, gen) : run_generic_verify(common, gen);
    if (*companion) return run_companion(common, comp_action, comp);
    if (*moss_cmd) return run_moss(common, moss_action, moss);
    if (*axioms) return run_axioms(common, ax);
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kBudget;
  } catch (const AmalgamationError& e) {
    std::cout << "# FAIL " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
