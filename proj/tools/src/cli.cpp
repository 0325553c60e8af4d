#include "sbraid_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "sbraid/builtin_scripts.hpp"
#include "sbraid/error.hpp"
#include "sbraid/nilpotent.hpp"
#include "sbraid/presentation.hpp"
#include "sbraid/script_io.hpp"
#include "sbraid/split.hpp"

namespace sbraid::cli {

namespace {

using json = nlohmann::ordered_json;

// Thrown for bad flag combinations found after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

struct Case {
  std::string id;
  bool pass = false;
  json details;
};

struct Grid {
  int n_lo = 2, n_hi = 2, g_lo = 1, g_hi = 1;
};

std::string grid_id(int n, int g) { return "n=" + std::to_string(n) + ",g=" + std::to_string(g); }

PointReading parse_reading(const std::string& s) {
  if (s == "literal") return PointReading::Literal;
  if (s == "boundary") return PointReading::Boundary;
  throw UsageError("unknown reading '" + s + "' (expected literal or boundary)");
}

// ---- presentation -------------------------------------------------------

struct PresentationArgs {
  std::string preset = "pure-closed-abt";
  int n = 2;
  int g = 1;
  std::string format = "json";
  std::string reading = "literal";
};

int run_presentation(const PresentationArgs& a, std::ostream& out) {
  Presentation p = build_presentation(parse_preset(a.preset), a.n, a.g, parse_reading(a.reading));
  if (a.format == "text") {
    out << to_string(p.preset) << " n=" << p.n << " g=" << p.g << "\n";
    out << "generators (" << p.generators.size() << "):";
    for (const auto& x : p.generators) out << ' ' << to_string(x);
    out << "\nrelators (" << p.relators.size() << "):\n";
    for (std::size_t i = 0; i < p.relators.size(); ++i) {
      if (i < p.instances.size()) {
        const auto& inst = p.instances[i];
        out << "  " << inst.label() << ": " << to_string(inst.lhs) << " = " << to_string(inst.rhs) << "\n";
      } else {
        out << "  " << to_string(p.relators[i]) << "\n";
      }
    }
    return kPass;
  }
  json j;
  j["preset"] = to_string(p.preset);
  j["n"] = p.n;
  j["g"] = p.g;
  j["generators"] = json::array();
  for (const auto& x : p.generators) j["generators"].push_back(to_string(x));
  j["relators"] = json::array();
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    json r;
    if (i < p.instances.size()) {
      const auto& inst = p.instances[i];
      r["family"] = to_string(inst.family);
      r["indices"] = inst.indices;
      r["lhs"] = to_string(inst.lhs);
      r["rhs"] = to_string(inst.rhs);
    }
    r["relator"] = to_string(p.relators[i]);
    j["relators"].push_back(std::move(r));
  }
  j["counts"] = {{"generators", p.generators.size()}, {"relators", p.relators.size()}};
  out << j.dump(2) << "\n";
  return kPass;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  std::string suite = "all";
  std::optional<int> n, g, n_max, g_max;
  int max_class = 2;
  std::optional<int> omit_section_c;
};

Grid resolve_grid(const VerifyArgs& a) {
  Grid r;
  r.n_lo = a.n.value_or(2);
  r.n_hi = a.n_max.value_or(r.n_lo);
  r.g_lo = a.g.value_or(1);
  r.g_hi = a.g_max.value_or(r.g_lo);
  if (r.n_hi < r.n_lo || r.g_hi < r.g_lo) throw UsageError("empty grid: --n-max/--g-max below --n/--g");
  return r;
}

void suite_cases(Suite suite, int n, int g, std::vector<Case>& out) {
  SuiteReport rep = builtin_suite(suite, n, g);
  for (const CaseResult& c : rep.cases) {
    json d;
    d["steps_checked"] = c.report.steps_checked;
    if (!c.pass) {
      d["failure"] = c.detail.empty() ? c.report.failure : c.detail;
      if (c.report.failing_step) d["failing_step"] = *c.report.failing_step;
    }
    out.push_back({rep.suite + "/" + grid_id(n, g) + "/" + c.id, c.pass, std::move(d)});
  }
}

void splitting_case(int n, int g, const VerifyArgs& a, std::vector<Case>& out) {
  SectionRelatorOptions opt;
  opt.max_class = a.max_class;
  opt.omit_section_c = a.omit_section_c;
  SectionRelatorReport rep = verify_section_relator(n, g, opt);
  json d;
  d["relator"] = to_string(rep.relator);
  d["image_length"] = rep.image.size();
  d["derivation_pass"] = rep.derivation_pass;
  d["steps_checked"] = rep.derivation.steps_checked;
  if (!rep.derivation_pass) d["failure"] = rep.derivation.failure;
  json q = json::object();
  for (const auto& [c, t] : rep.quotient_trivial) q["class " + std::to_string(c)] = t;
  d["quotient_trivial"] = std::move(q);
  out.push_back({"splitting/" + grid_id(n, g), rep.pass, std::move(d)});
}

void almost_direct_case(int n, int g, std::vector<Case>& out) {
  AlmostDirectReport rep = almost_direct_check(n, g);
  json d;
  d["n"] = n;
  d["g"] = g;
  d["pairs_checked"] = rep.pairs_checked;
  d["totality"] = rep.totality;
  d["balance"] = rep.balance;
  d["matrix_form"] = rep.matrix_form;
  d["section_support"] = rep.section_support;
  d["witnesses"] = json::array();
  for (const CaseResult& c : rep.tau_gamma2.cases) d["witnesses"].push_back({{"id", c.id}, {"pass", c.pass}});
  if (!rep.failures.empty()) d["failures"] = rep.failures;
  out.push_back({"almost-direct/" + grid_id(n, g), rep.pass, std::move(d)});
}

std::vector<Case> run_verify(const VerifyArgs& a) {
  const Grid grid = resolve_grid(a);
  std::vector<std::string> names;
  if (a.suite == "all") {
    for (Suite s : all_suites()) names.push_back(to_string(s));
    names.push_back("almost-direct");
  } else {
    if (a.suite != "almost-direct") parse_suite(a.suite);  // reject unknown names before any work
    names.push_back(a.suite);
  }
  std::vector<Case> cases;
  for (int n = grid.n_lo; n <= grid.n_hi; ++n) {
    for (int g = grid.g_lo; g <= grid.g_hi; ++g) {
      for (const auto& name : names) {
        if (name == "almost-direct") {
          almost_direct_case(n, g, cases);
        } else if (name == "splitting") {
          splitting_case(n, g, a, cases);
        } else {
          suite_cases(parse_suite(name), n, g, cases);
        }
      }
    }
  }
  return cases;
}

// ---- nq ---------------------------------------------------------------------

struct NqArgs {
  std::string preset;
  int n = 2;
  int g = 1;
  int nilpotency_class = 2;
  std::string reading = "literal";
};

int run_nq(const NqArgs& a, std::ostream& out) {
  Presentation p = build_presentation(parse_preset(a.preset), a.n, a.g, parse_reading(a.reading));
  LcsQuotients q = lcs_quotients(p, a.nilpotency_class);
  json j;
  j["preset"] = to_string(p.preset);
  j["n"] = p.n;
  j["g"] = p.g;
  j["class"] = q.nilpotency_class;
  j["pieces"] = json::array();
  for (const GradedPiece& piece : q.pieces) {
    json t = json::array();
    for (const Integer& v : piece.torsion) t.push_back(integer_json(v));
    j["pieces"].push_back({{"quotient", "Gamma_" + std::to_string(piece.weight) + "/Gamma_" +
                                            std::to_string(piece.weight + 1)},
                           {"weight", piece.weight},
                           {"rank", piece.rank},
                           {"torsion", std::move(t)},
                           {"trivial", piece.rank == 0 && piece.torsion.empty()}});
  }
  j["rational_ranks"] = q.rational_ranks;
  j["stabilizes_at"] = q.stabilizes_at ? json(*q.stabilizes_at) : json(nullptr);
  out << j.dump(2) << "\n";
  return kPass;
}

// ---- derive -----------------------------------------------------------------

struct DeriveArgs {
  std::string file;
  std::string export_suite;
  int n = 2;
  int g = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A file holds one script object or an array of them.
std::vector<DerivationScript> load_scripts(const std::string& path) {
  std::string text = read_file(path);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  std::vector<DerivationScript> out;
  if (j.is_array()) {
    for (const json& s : j) out.push_back(script_from_json(s.dump()));
  } else {
    out.push_back(script_from_json(text));
  }
  return out;
}

int run_export(const DeriveArgs& a, std::ostream& out) {
  json arr = json::array();
  for (const SuiteCase& c : builtin_scripts(parse_suite(a.export_suite), a.n, a.g)) {
    arr.push_back(json::parse(script_to_json(c.script)));
  }
  out << arr.dump(2) << "\n";
  return kPass;
}

std::vector<Case> run_derive(const DeriveArgs& a) {
  std::vector<Case> cases;
  for (const DerivationScript& s : load_scripts(a.file)) {
    DerivationReport rep = check_derivation(s);
    json d = json::parse(report_to_json(rep));
    d.erase("name");
    d.erase("pass");
    cases.push_back({s.name, rep.pass, std::move(d)});
  }
  return cases;
}

// ---- action -----------------------------------------------------------------

struct ActionArgs {
  int n = 2;
  int g = 1;
  std::string format = "json";
};

int run_action(const ActionArgs& a, std::ostream& out) {
  const int n = a.n, g = a.g;
  const auto basis = kernel_alphabet(n, g);
  std::vector<GeneratorId> conjugators;
  for (int k = 1; k <= g; ++k) {
    conjugators.push_back(GeneratorId::a(1, k));
    conjugators.push_back(GeneratorId::b(1, k));
  }
  for (int d = 2; d <= n; ++d) conjugators.push_back(GeneratorId::tau(1, d));

  json rules = json::array();
  for (const GeneratorId& x : conjugators) {
    for (const GeneratorId& h : basis) {
      json r{{"conjugator", to_string(x)}, {"target", to_string(h)}};
      try {
        ForwardRule fr = forward_rule(x, h, n, g);
        r["relation"] = fr.instance.label();
        r["image"] = to_string(fr.image);
      } catch (const MatchError& e) {
        r["unresolved"] = e.what();
      }
      rules.push_back(std::move(r));
    }
  }

  json matrices = json::array();
  for (const GeneratorId& x : strand_generators(n, g)) {
    if (is_kernel_generator(x, n, g)) continue;  // identity
    for (int e : {1, -1}) {
      ActionMatrix m = action_matrix(Letter{x, e}, n, g);
      json dev = json::array();
      for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t c = 0; c < m.dim(); ++c)
          if (m.at(i, c) != (i == c ? 1 : 0))
            dev.push_back({{"row", to_string(basis[i])}, {"col", to_string(basis[c])}, {"value", m.at(i, c)}});
      matrices.push_back({{"letter", to_string(Letter{x, e})}, {"unipotent", m.has_unipotent_form()},
                          {"off_identity", std::move(dev)}});
    }
  }

  if (a.format == "text") {
    out << "kernel alphabet (" << basis.size() << "):";
    for (const auto& h : basis) out << ' ' << to_string(h);
    out << "\n";
    for (const json& r : rules) {
      out << "^{" << r["conjugator"].get<std::string>() << "}" << r["target"].get<std::string>() << " = ";
      if (r.contains("image")) {
        out << r["image"].get<std::string>() << "   [" << r["relation"].get<std::string>() << "]\n";
      } else {
        out << "?   (" << r["unresolved"].get<std::string>() << ")\n";
      }
    }
    for (const json& m : matrices) {
      out << "M(" << m["letter"].get<std::string>() << ") = I";
      for (const json& d : m["off_identity"]) {
        out << " + (" << d["value"].get<long>() << ")e[" << d["row"].get<std::string>() << ","
            << d["col"].get<std::string>() << "]";
      }
      out << "\n";
    }
    return kPass;
  }
  json j;
  j["n"] = n;
  j["g"] = g;
  j["basis"] = json::array();
  for (const auto& h : basis) j["basis"].push_back(to_string(h));
  j["rules"] = std::move(rules);
  j["matrices"] = std::move(matrices);
  out << j.dump(2) << "\n";
  return kPass;
}

// ---- report -----------------------------------------------------------------

int emit_report(const std::vector<std::string>& args, std::vector<Case> cases, std::chrono::microseconds took,
                std::ostream& out) {
  std::sort(cases.begin(), cases.end(), [](const Case& x, const Case& y) { return x.id < y.id; });
  std::size_t passed = 0;
  json j;
  j["command"] = args;
  j["cases"] = json::array();
  for (Case& c : cases) {
    passed += c.pass ? 1 : 0;
    j["cases"].push_back({{"id", c.id}, {"pass", c.pass}, {"details", std::move(c.details)}});
  }
  j["summary"] = {{"cases", cases.size()}, {"passed", passed}, {"failed", cases.size() - passed},
                  {"pass", passed == cases.size()}};
  j["duration_us"] = took.count();
  out << j.dump(2) << "\n";
  return passed == cases.size() ? kPass : kFail;
}

}  // namespace

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Surface pure braid presentations: builders, derivation checks and nilpotent quotients", "sbraid"};
  app.require_subcommand(1);

  PresentationArgs pa;
  auto* pres = app.add_subcommand("presentation", "Build a presentation and list generators and relators");
  pres->add_option("--preset", pa.preset, "pure-closed-A, pure-closed-abt, surface-group, artin-braid, "
                                          "artin-pure-braid or free")
      ->capture_default_str();
  pres->add_option("--n", pa.n)->capture_default_str();
  pres->add_option("--g", pa.g)->capture_default_str();
  pres->add_option("--format", pa.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  pres->add_option("--reading", pa.reading, "ER2A r = 2g case for pure-closed-A: literal or boundary")
      ->check(CLI::IsMember({"literal", "boundary"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run built-in derivation suites and the splitting checks");
  ver->add_option("--suite", va.suite,
                  "lemma41-1, lemma41-2, identity-A, identity-B, tau-gamma2, splitting, almost-direct or all")
      ->check(CLI::IsMember({"lemma41-1", "lemma41-2", "identity-A", "identity-B", "tau-gamma2", "splitting",
                             "almost-direct", "all"}))
      ->capture_default_str();
  ver->add_option("--n", va.n, "smallest n (default 2)");
  ver->add_option("--g", va.g, "smallest g (default 1)");
  ver->add_option("--n-max", va.n_max, "largest n (default: --n)");
  ver->add_option("--g-max", va.g_max, "largest g (default: --g)");
  ver->add_option("--max-class", va.max_class, "splitting: quotient classes checked, 2 or 3")
      ->check(CLI::Range(2, 3))
      ->capture_default_str();
  ver->add_option("--omit-section-c", va.omit_section_c,
                  "splitting: drop the first s(c_i) of the i-th commutator (must then fail)");

  NqArgs na;
  auto* nq = app.add_subcommand("nq", "Lower central series quotients of a presented group");
  nq->add_option("--preset", na.preset)->required();
  nq->add_option("--n", na.n)->capture_default_str();
  nq->add_option("--g", na.g)->capture_default_str();
  nq->add_option("--class", na.nilpotency_class)->check(CLI::Range(1, 3))->capture_default_str();
  nq->add_option("--reading", na.reading, "ER2A r = 2g case for pure-closed-A: literal or boundary")
      ->check(CLI::IsMember({"literal", "boundary"}))
      ->capture_default_str();

  DeriveArgs da;
  auto* der = app.add_subcommand("derive", "Check derivation scripts from a JSON file");
  der->add_option("file", da.file, "script object or array of scripts");
  der->add_option("--export", da.export_suite, "print the built-in scripts of a suite instead");
  der->add_option("--n", da.n)->capture_default_str();
  der->add_option("--g", da.g)->capture_default_str();

  ActionArgs aa;
  auto* act = app.add_subcommand("action", "Conjugation rules on the kernel alphabet and their matrices");
  act->add_option("--n", aa.n)->capture_default_str();
  act->add_option("--g", aa.g)->capture_default_str();
  act->add_option("--format", aa.format)->check(CLI::IsMember({"json", "text"}))->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  auto elapsed = [&] {
    return std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - started);
  };
  try {
    if (pres->parsed()) return run_presentation(pa, out);
    if (nq->parsed()) return run_nq(na, out);
    if (act->parsed()) return run_action(aa, out);
    if (ver->parsed()) {
      auto cases = run_verify(va);
      return emit_report(args, std::move(cases), elapsed(), out);
    }
    if (der->parsed()) {
      if (!da.export_suite.empty()) return run_export(da, out);
      if (da.file.empty()) throw UsageError("derive needs a FILE or --export SUITE");
      auto cases = run_derive(da);
      return emit_report(args, std::move(cases), elapsed(), out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kFail;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AlphabetError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace sbraid::cli
