#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "bott/data.hpp"
#include "bott/parse.hpp"
#include "bott/report.hpp"
#include "bott/verify.hpp"

namespace {

constexpr int kUsageError = 3;
constexpr int kInputError = 4;

struct Config {
  std::string group;
  std::string distribution;
  bool perturbed = false;
  int eta = 1;
  std::size_t samples = 100;
  std::uint64_t seed = bott::kDefaultSeed;
  std::string format = "text";
  std::string spec_file;
  std::string data_dir;
  unsigned jobs = 1;
  bool timing = false;
  bool symbolic = false;
  std::vector<std::string> ids;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool json(const Config& c) { return c.format == "json"; }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bott::Registry registry(const Config& c) {
  if (c.data_dir.empty()) return bott::builtin_registry();
  return bott::load_registry(c.data_dir);
}

bott::VerifyOptions verify_options(const Config& c) {
  bott::VerifyOptions o;
  o.samples = c.samples;
  o.seed = c.seed;
  o.jobs = c.jobs;
  return o;
}

bott::Computed selected(const Config& c) {
  std::optional<bott::DistId> dist;
  if (!c.distribution.empty()) dist = bott::dist_from_name(c.distribution);
  if (c.perturbed && !dist) throw UsageError("--perturbed needs --distribution");
  bott::LieAlgebraSpec spec;
  if (!c.spec_file.empty()) {
    if (!c.group.empty()) throw UsageError("give either --group or --spec-file");
    spec = bott::parse_custom_algebra(read_file(c.spec_file));
  } else {
    if (c.group.empty()) throw UsageError("--group is required");
    spec = bott::catalog(*bott::group_from_name(c.group), c.eta);
  }
  return bott::compute(spec, dist, c.perturbed);
}

std::string heading(const bott::Computed& c) {
  std::string s = "# " + c.spec.label;
  if (c.spec.eta) s += *c.spec.eta > 0 ? " eta=+1" : " eta=-1";
  return s + ", " + bott::connection_name(c.conn) + "\n";
}

int cmd_list(const Config& c) {
  auto reg = registry(c);
  if (json(c)) {
    std::cout << "{\n  \"groups\": [";
    for (std::size_t i = 0; i < bott::kAllGroups.size(); ++i) {
      auto s = bott::catalog(bott::kAllGroups[i]);
      std::cout << (i ? ", " : "") << "\"" << s.label << "\"";
    }
    std::cout << "],\n  \"distributions\": [\"D\", \"D1\", \"D2\"],\n  \"fixtures\": " << reg.fixtures.size()
              << ",\n  \"theorems\": " << reg.theorems.size() << "\n}\n";
    return 0;
  }
  for (auto g : bott::kAllGroups) {
    auto s = bott::catalog(g);
    std::cout << s.label << (*s.unimodular ? "  unimodular" : "  non-unimodular") << "\n";
    if (g == bott::GroupId::G4) std::cout << "  eta = +1 or -1\n";
    std::cout << "  params:";
    for (auto p : s.params) std::cout << " " << bott::name(p);
    std::cout << "\n";
    for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
      std::cout << "  [e_" << i + 1 << ", e_" << j + 1 << "] = " << bott::vec_str(s.c[i][j]) << "\n";
    for (auto& e : s.equal) std::cout << "  " << e.str() << " = 0\n";
    for (auto& e : s.nonzero) std::cout << "  " << e.str() << " != 0\n";
  }
  for (auto d : bott::kAllDistributions) {
    auto dd = bott::distribution(d);
    std::cout << bott::dist_name(d) << "  span{e_" << dd.plane[0] + 1 << ", e_" << dd.plane[1] + 1 << "}, normal e_"
              << dd.normal + 1 << "\n";
  }
  std::cout << reg.fixtures.size() << " fixtures, " << reg.errata.size() << " errata, " << reg.theorems.size()
            << " theorem records\n";
  return 0;
}

int cmd_print(const Config& c, const std::string& what) {
  auto comp = selected(c);
  if (json(c)) {
    if (what == "connection") std::cout << bott::connection_json(comp.conn) << "\n";
    if (what == "curvature") std::cout << bott::curvature_json(comp.curvature) << "\n";
    if (what == "ricci")
      std::cout << "{\n\"ricci\": " << bott::form_json(comp.ricci) << ",\n\"sym_ricci\": " << bott::form_json(comp.sym_ricci)
                << "\n}\n";
    if (what == "system")
      std::cout << "{\n\"lie_derivative\": " << bott::form_json(comp.lie) << ",\n\"system\": "
                << bott::system_json(comp.system) << "\n}\n";
    return 0;
  }
  std::cout << heading(comp);
  if (what == "connection") std::cout << bott::connection_text(comp.conn);
  if (what == "curvature") std::cout << bott::curvature_text(comp.curvature);
  if (what == "ricci")
    std::cout << "ricci\n" << bott::form_text(comp.ricci) << "symmetrized ricci\n" << bott::form_text(comp.sym_ricci);
  if (what == "system") {
    std::cout << "L_V g\n" << bott::form_text(comp.lie) << "system in mu1, mu2, mu3, mu\n"
              << bott::system_text(comp.system);
    for (auto& e : comp.system.constraints.equal) std::cout << "given " << e.str() << " = 0\n";
    for (auto& e : comp.system.constraints.nonzero) std::cout << "given " << e.str() << " != 0\n";
    if (comp.system.perturbed) std::cout << "given a0 != 0\n";
  }
  return 0;
}

int emit(const Config& c, const std::vector<bott::FixtureReport>& f, const std::vector<bott::TheoremReport>& t) {
  if (json(c)) {
    std::cout << bott::report_json(f, t, {c.timing, c.seed});
  } else {
    for (auto& r : f) std::cout << bott::fixture_text(r, c.timing);
    for (auto& r : t) std::cout << bott::theorem_text(r, c.timing);
    std::cout << bott::summary_text(f, t);
  }
  return bott::exit_code(f, t);
}

int cmd_verify_fixture(const Config& c) {
  auto reg = registry(c);
  bott::PipelineCache cache;
  std::vector<bott::FixtureReport> out;
  for (auto& id : c.ids) {
    auto* f = reg.fixture(id);
    if (!f) throw UsageError("no fixture " + id);
    out.push_back(bott::verify_fixture(*f, reg.erratum(id), cache));
  }
  return emit(c, out, {});
}

int cmd_verify_theorem(const Config& c) {
  auto reg = registry(c);
  bott::PipelineCache cache;
  std::vector<bott::TheoremReport> out;
  for (auto& id : c.ids) {
    auto* t = reg.theorem(id);
    if (!t) throw UsageError("no theorem record " + id);
    out.push_back(bott::verify_theorem(*t, cache, verify_options(c)));
  }
  return emit(c, {}, out);
}

int cmd_verify_all(const Config& c) {
  auto reg = registry(c);
  auto all = bott::verify_all(reg, verify_options(c));
  return emit(c, all.fixtures, all.theorems);
}

int cmd_check_custom(const Config& c) {
  if (c.spec_file.empty()) throw UsageError("check-custom needs --spec-file");
  auto spec = bott::parse_custom_algebra(read_file(c.spec_file));
  bool antisym = bott::is_antisymmetric(spec.c);
  bool sampled = bott::jacobi_holds_sampled(spec, c.seed, 10);
  std::optional<bool> symbolic;
  if (c.symbolic) symbolic = bott::jacobi_holds(spec);
  bool ok = antisym && sampled && symbolic.value_or(true);
  if (json(c)) {
    std::cout << "{\n  \"label\": \"" << spec.label << "\",\n  \"antisymmetric\": " << (antisym ? "true" : "false")
              << ",\n  \"jacobi_sampled\": " << (sampled ? "true" : "false") << ",\n  \"jacobi_symbolic\": "
              << (symbolic ? (*symbolic ? "true" : "false") : "null") << "\n}\n";
  } else {
    std::cout << spec.label << ": Jacobi at 10 random points " << (sampled ? "holds" : "FAILS") << "\n";
    if (symbolic) std::cout << spec.label << ": Jacobi as a polynomial identity " << (*symbolic ? "holds" : "FAILS") << "\n";
  }
  if (!ok) return 1;
  if (!json(c)) {
    Config d = c;
    d.spec_file = c.spec_file;
    cmd_print(d, "connection");
    if (!c.distribution.empty()) cmd_print(d, "system");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Bott-connection soliton tables and their verification"};
  app.require_subcommand(1);
  Config cfg;

  auto add_instance = [&](CLI::App* sub) {
    sub->add_option("--group", cfg.group, "Catalog algebra")->check(CLI::IsMember({"G1", "G2", "G3", "G4", "G5", "G6", "G7"}));
    sub->add_option("--distribution", cfg.distribution, "Plane for the Bott connection; Levi-Civita when omitted")
        ->check(CLI::IsMember({"D", "D1", "D2"}));
    sub->add_flag("--perturbed", cfg.perturbed, "Add the a0 perturbation along the normal");
    sub->add_option("--eta", cfg.eta, "Sign used for G4")->check(CLI::IsMember({1, -1}));
    sub->add_option("--spec-file", cfg.spec_file, "Custom algebra file instead of --group");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_verify = [&](CLI::App* sub) {
    sub->add_option("--samples", cfg.samples, "Minimum sample points per non-existence claim")->check(CLI::PositiveNumber);
    sub->add_option("--seed", cfg.seed, "Seed for random sample points");
    sub->add_option("--data-dir", cfg.data_dir, "Read fixtures, errata and theorems from this directory");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    sub->add_flag("--timing", cfg.timing, "Include timings (output is then not reproducible byte for byte)");
  };

  auto* list = app.add_subcommand("list", "Catalog algebras, distributions and registry sizes");
  list->add_option("--data-dir", cfg.data_dir, "Read the registry from this directory");
  add_format(list);
  std::vector<std::pair<CLI::App*, std::string>> prints;
  for (auto what : {"connection", "curvature", "ricci", "system"}) {
    auto* sub = app.add_subcommand(std::string("print-") + what, std::string("Print the ") + what + " table");
    add_instance(sub);
    add_format(sub);
    prints.emplace_back(sub, what);
  }
  auto* vf = app.add_subcommand("verify-fixture", "Check printed tables against the pipeline");
  vf->add_option("ids", cfg.ids, "Fixture ids")->required();
  add_verify(vf);
  add_format(vf);
  auto* vt = app.add_subcommand("verify-theorem", "Check theorem and corollary claims");
  vt->add_option("ids", cfg.ids, "Theorem ids")->required();
  add_verify(vt);
  add_format(vt);
  auto* va = app.add_subcommand("verify-all", "Check every fixture and theorem record");
  add_verify(va);
  add_format(va);
  auto* cc = app.add_subcommand("check-custom", "Validate a custom algebra and print its connections");
  cc->add_option("--spec-file", cfg.spec_file, "Custom algebra file")->required();
  cc->add_option("--distribution", cfg.distribution, "Also print the Bott system for this plane")
      ->check(CLI::IsMember({"D", "D1", "D2"}));
  cc->add_flag("--perturbed", cfg.perturbed, "Use the perturbed Bott connection");
  cc->add_flag("--symbolic", cfg.symbolic, "Also check Jacobi as a polynomial identity");
  cc->add_option("--seed", cfg.seed, "Seed for the random Jacobi points");
  add_format(cc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (list->parsed()) return cmd_list(cfg);
    for (auto& [sub, what] : prints)
      if (sub->parsed()) return cmd_print(cfg, what);
    if (vf->parsed()) return cmd_verify_fixture(cfg);
    if (vt->parsed()) return cmd_verify_theorem(cfg);
    if (va->parsed()) return cmd_verify_all(cfg);
    if (cc->parsed()) return cmd_check_custom(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kUsageError;
}
