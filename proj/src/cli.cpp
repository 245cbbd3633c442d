#include "vfilt/cli.hpp"

#include "vfilt/filtration_checks.hpp"
#include "vfilt/poisson_checks.hpp"
#include "vfilt/serialize.hpp"
#include "vfilt/spanning.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>

namespace vfilt {
namespace {

struct RunConfig {
  std::string command;
  std::string preset_text = "heisenberg";
  std::string family = "E";
  std::optional<int> max_n;
  std::optional<int> max_weight;
  std::optional<int> window;
  std::string format = "json";
  std::string output;
  std::uint64_t seed = 1;
  std::string suite = "all";
  std::string generators;
  int samples = 100;
};

// invalid configuration, reported with exit 2
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Resolved {
  AlgebraPreset preset = AlgebraPreset::heisenberg();
  int cutoff = 0;
  int max_n = 6;
};

Resolved resolve(const RunConfig& cfg) {
  Resolved r;
  try {
    r.preset = AlgebraPreset::parse(cfg.preset_text);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  r.cutoff = r.preset.kind() == AlgebraPreset::Kind::heisenberg ? 10 : 6;
  if (const char* env = std::getenv("VFILT_MAX_WEIGHT"); env && *env) {
    const std::string_view text(env);
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      throw ConfigError("VFILT_MAX_WEIGHT must be an integer, got '" + std::string(text) + "'");
    }
    r.cutoff = v;
  }
  if (cfg.max_weight) r.cutoff = *cfg.max_weight;
  if (r.cutoff < 0) throw ConfigError("weight cutoff must be >= 0");
  if (cfg.max_n) r.max_n = *cfg.max_n;
  if (r.max_n < 0) throw ConfigError("--max-n must be >= 0");
  if (cfg.window && *cfg.window < 0) throw ConfigError("--window must be >= 0");
  if (cfg.samples < 1) throw ConfigError("--samples must be >= 1");
  return r;
}

FiltrationEngine make_engine(const Resolved& r, const RunConfig& cfg) {
  try {
    return FiltrationEngine(r.preset, r.cutoff, cfg.window);
  } catch (const InfiniteWeightSpace& e) {
    throw ConfigError(std::string(e.what()) + "; pass --window <max |lattice point|>");
  }
}

Json config_json(const RunConfig& cfg, const Resolved& r) {
  Json j{{"command", cfg.command}, {"preset", r.preset.name()}, {"max_weight", r.cutoff}};
  j["window"] = cfg.window ? Json(*cfg.window) : Json(nullptr);
  if (cfg.command == "table") {
    j["family"] = cfg.family;
    j["max_n"] = r.max_n;
  }
  if (cfg.command == "verify") {
    j["max_n"] = r.max_n;
    j["suite"] = cfg.suite;
    j["seed"] = cfg.seed;
    j["samples"] = cfg.samples;
    j["generators"] = cfg.generators.empty() ? Json(nullptr) : Json(cfg.generators);
  }
  return j;
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

// ---- table

std::string cmd_table(const RunConfig& cfg, const Resolved& r) {
  Family family = parse_family(cfg.family);
  FiltrationEngine engine = make_engine(r, cfg);
  const FiltrationTable t = filtration_table(engine, family, r.max_n);
  if (cfg.format == "csv") return table_to_csv(t);
  if (cfg.format == "markdown") return table_to_markdown(t);
  return table_to_json(t).dump(2) + "\n";
}

// ---- verify

class SuiteRunner {
public:
  SuiteRunner(const RunConfig& cfg, const Resolved& r) : cfg_(cfg), r_(r) {}

  VerificationReport run(const std::string& name, std::size_t index) {
    // one stream per suite, so a suite's samples do not depend on which others ran
    std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32),
                      static_cast<std::uint32_t>(index)};
    Rng rng(seq);
    const int samples = cfg_.samples;
    VerificationReport rep;
    if (name == "borcherds") {
      // lattice triples get expensive fast in the weight: weight 6 costs ~30 s
      VertexAlgebra va(r_.preset);
      const int top = r_.preset.kind() == AlgebraPreset::Kind::heisenberg ? 6 : 4;
      rep.append(verify_borcherds(va, rng, 2 * samples, std::min(top, r_.cutoff), 4, cfg_.window));
    } else if (name == "identities") {
      rep.append(verify_c_e_identities(engine(), r_.max_n));
    } else if (name == "bounds") {
      rep.append(verify_weight_bounds(engine()));
    } else if (name == "nesting") {
      rep.append(verify_nesting(engine(), r_.max_n));
    } else if (name == "modes") {
      rep.append(verify_mode_bounds(engine(), rng, samples));
      rep.append(verify_c_mode_properties(engine(), rng, samples));
    } else if (name == "depth") {
      for (int n : {0, 1}) rep.append(verify_depth_collapse(engine(), n));
    } else if (name == "raising") {
      for (int k : {2, 3}) rep.append(verify_c_raising(engine(), k));
    } else if (name == "increasing") {
      rep.append(verify_increasing_filtration(engine(), r_.max_n, rng, samples));
    } else if (name == "cofiniteness") {
      rep.append(cofiniteness_report(engine(), r_.max_n));
    } else if (name == "poisson") {
      if (!graded(rep, "zhu_poisson")) return rep;
      ZhuAlgebra zhu(engine());
      GrAlgebra gr(engine(), 1);
      rep.append(verify_zhu_poisson_axioms(zhu, rng, samples));
      rep.append(verify_degree0_is_zhu(zhu, gr));
    } else if (name == "gr") {
      if (!graded(rep, "gr_vertex_poisson")) return rep;
      const int top = std::min(r_.max_n, 4);
      ZhuAlgebra zhu(engine());
      GrAlgebra gr(engine(), top + 1);
      rep.append(verify_gr_axioms(gr, rng, samples));
      rep.append(verify_vertex_lie_axioms(gr, rng, samples));
      rep.append(verify_gr_generation(zhu, gr, top));
    } else if (name == "spanning") {
      if (cfg_.generators.empty()) {
        rep.append(verify_spanning_suite(engine(), rng));
      } else {
        rep.append(verify_spanning_for(engine(), load_generators(), rng));
      }
    } else if (name == "degeneracy") {
      rep.append(degeneracy_report(r_.preset, cfg_.window.value_or(1)));
    } else {
      throw ConfigError("unknown suite '" + name + "'");
    }
    return rep;
  }

private:
  FiltrationEngine& engine() {
    if (!engine_) engine_ = std::make_unique<FiltrationEngine>(make_engine(r_, cfg_));
    return *engine_;
  }

  bool graded(VerificationReport& rep, const std::string& name) {
    if (r_.preset.is_n_graded()) return true;
    rep.skip(name, Json{{"preset", r_.preset.name()}}, "needs an N-graded preset");
    return false;
  }

  GeneratorSet load_generators() {
    std::ifstream in(cfg_.generators);
    if (!in) throw ConfigError("cannot read generators file '" + cfg_.generators + "'");
    try {
      return generators_from_json(Json::parse(in), r_.preset);
    } catch (const Json::exception& e) {
      throw ConfigError("generators file: " + std::string(e.what()));
    } catch (const std::invalid_argument& e) {
      throw ConfigError("generators file: " + std::string(e.what()));
    }
  }

  const RunConfig& cfg_;
  const Resolved& r_;
  std::unique_ptr<FiltrationEngine> engine_;
};

std::string report_csv(const Json& report) {
  std::ostringstream out;
  out << "name,status,params,witness\n";
  for (const auto& c : report.at("checks")) {
    out << c.at("name").get<std::string>() << ',' << c.at("status").get<std::string>() << ','
        << csv_field(c.at("params").dump()) << ','
        << (c.contains("witness") ? csv_field(c.at("witness").at("terms").dump()) : std::string()) << '\n';
  }
  return out.str();
}

std::pair<std::string, bool> cmd_verify(const RunConfig& cfg, const Resolved& r) {
  const auto& names = suite_names();
  std::vector<std::string> selected;
  if (cfg.suite == "all") {
    selected = names;
  } else if (std::find(names.begin(), names.end(), cfg.suite) != names.end()) {
    selected = {cfg.suite};
  } else {
    throw ConfigError("unknown suite '" + cfg.suite + "'");
  }
  if (!cfg.generators.empty() && std::find(selected.begin(), selected.end(), "spanning") == selected.end()) {
    throw ConfigError("--generators only applies to the spanning suite");
  }
  SuiteRunner runner(cfg, r);
  VerificationReport report;
  for (const auto& name : selected) {
    const auto index = static_cast<std::size_t>(std::find(names.begin(), names.end(), name) - names.begin());
    report.append(runner.run(name, index));
  }
  const Json j = report_to_json(report, r.preset, config_json(cfg, r));
  std::string text;
  if (cfg.format == "csv") {
    text = report_csv(j);
  } else if (cfg.format == "markdown") {
    text = report_to_markdown(j);
  } else {
    text = j.dump(2) + "\n";
  }
  return {text, report.all_passed()};
}

// ---- zhu

Json sparse_in_basis(const State& rep, const std::map<Monomial, std::size_t>& index) {
  Json out = Json::array();
  for (const auto& [m, c] : rep.terms()) {
    auto it = index.find(m);
    if (it == index.end()) throw std::logic_error("invariant breach: Zhu representative off the quotient basis");
    out.push_back(Json{{"index", it->second}, {"coef", coefficient_to_string(c)}});
  }
  return out;
}

std::string cmd_zhu(const RunConfig& cfg, const Resolved& r) {
  if (!r.preset.is_n_graded()) throw ConfigError("zhu needs an N-graded preset (heisenberg or lattice:N with N > 0)");
  FiltrationEngine engine = make_engine(r, cfg);
  ZhuAlgebra zhu(engine);
  struct Entry {
    int weight;
    State vector;
  };
  std::vector<Entry> basis;
  std::map<Monomial, std::size_t> index;
  for (int w = 0; w <= r.cutoff; ++w) {
    for (auto& v : zhu.quotient_basis(w)) {
      index[v.terms().begin()->first] = basis.size();
      basis.push_back({w, std::move(v)});
    }
  }
  Json jb = Json::array();
  std::vector<std::size_t> per_weight(static_cast<std::size_t>(r.cutoff) + 1, 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ++per_weight[static_cast<std::size_t>(basis[i].weight)];
    jb.push_back(Json{{"index", i}, {"weight", basis[i].weight},
                      {"vector", state_to_json(r.preset, basis[i].vector).at("terms")}});
  }
  Json products = Json::array(), brackets = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (basis[i].weight + basis[j].weight > r.cutoff) continue;
      const ZhuElement a{basis[i].vector}, b{basis[j].vector};
      products.push_back(Json{{"left", i}, {"right", j}, {"result", sparse_in_basis(zhu.product(a, b).representative, index)}});
      brackets.push_back(Json{{"left", i}, {"right", j}, {"result", sparse_in_basis(zhu.bracket(a, b).representative, index)}});
    }
  }
  Json j{{"schema_version", 1},
         {"kind", "zhu_structure"},
         {"preset", preset_to_json(r.preset)},
         {"cutoff", r.cutoff},
         {"quotient_dims", per_weight},
         {"basis", jb},
         {"products", products},
         {"brackets", brackets}};
  if (cfg.format == "json") return j.dump(2) + "\n";

  std::ostringstream out;
  if (cfg.format == "csv") {
    out << "op,left,right,result,coef\n";
    for (const char* op : {"products", "brackets"}) {
      for (const auto& e : j.at(op)) {
        for (const auto& t : e.at("result")) {
          out << (op[0] == 'p' ? "product" : "bracket") << ',' << e.at("left") << ',' << e.at("right") << ','
              << t.at("index") << ',' << t.at("coef").get<std::string>() << '\n';
        }
      }
    }
    return out.str();
  }
  out << "# V/C_2 for " << r.preset.name() << ", weights 0.." << r.cutoff << "\n\n| index | weight | vector |\n|---|---|---|\n";
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out << "| " << i << " | " << basis[i].weight << " | " << to_string(basis[i].vector) << " |\n";
  }
  auto render = [&](const Json& result) {
    if (result.empty()) return std::string("0");
    std::string s;
    for (const auto& t : result) {
      if (!s.empty()) s += " + ";
      s += "(" + t.at("coef").get<std::string>() + ") x" + std::to_string(t.at("index").get<std::size_t>());
    }
    return s;
  };
  for (const char* op : {"products", "brackets"}) {
    out << "\n## " << op << " (nonzero entries)\n\n| left | right | result |\n|---|---|---|\n";
    for (const auto& e : j.at(op)) {
      if (e.at("result").empty()) continue;
      out << "| x" << e.at("left") << " | x" << e.at("right") << " | " << render(e.at("result")) << " |\n";
    }
  }
  return out.str();
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.output, std::ios::binary);
  if (!file) throw ConfigError("cannot write '" + cfg.output + "'");
  file << text;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"borcherds", "identities", "bounds",       "nesting", "modes",
                                              "depth",     "raising",    "increasing",   "cofiniteness",
                                              "poisson",   "gr",         "spanning",     "degeneracy"};
  return names;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Exact filtrations, Zhu Poisson algebras and spanning checks for graded vertex algebras", "vfilt"};
  app.require_subcommand(1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--preset", cfg.preset_text, "heisenberg or lattice:N")->capture_default_str();
    sub->add_option("--max-weight", cfg.max_weight, "weight cutoff (default: VFILT_MAX_WEIGHT or the preset's)");
    sub->add_option("--window", cfg.window, "bound on |lattice point|, needed for negative gram");
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "markdown"}))->capture_default_str();
    sub->add_option("--output", cfg.output, "write here instead of stdout");
  };
  CLI::App* table = app.add_subcommand("table", "dimension table of a filtration");
  common(table);
  table->add_option("--family", cfg.family)->check(CLI::IsMember({"E", "C", "EU"}))->capture_default_str();
  table->add_option("--max-n", cfg.max_n, "largest filtration index (default 6)");

  CLI::App* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify->add_option("--suite", cfg.suite)->check(CLI::IsMember(suites))->capture_default_str();
  verify->add_option("--max-n", cfg.max_n, "largest filtration index (default 6)");
  verify->add_option("--seed", cfg.seed)->capture_default_str();
  verify->add_option("--samples", cfg.samples, "samples per property sweep")->capture_default_str();
  verify->add_option("--generators", cfg.generators, "JSON list of states for the spanning suite");

  CLI::App* zhu = app.add_subcommand("zhu", "structure constants of V/C_2");
  common(zhu);

  std::vector<std::string> argv_store{"vfilt"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "vfilt: " << e.what() << "\n";
    return exit_invalid_config;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    const Resolved r = resolve(cfg);
    if (cfg.command == "table") {
      emit(cfg, cmd_table(cfg, r), out);
      return exit_ok;
    }
    if (cfg.command == "zhu") {
      emit(cfg, cmd_zhu(cfg, r), out);
      return exit_ok;
    }
    auto [text, passed] = cmd_verify(cfg, r);
    emit(cfg, text, out);
    if (!passed) {
      err << "vfilt: verification failed; see the report for witnesses\n";
      return exit_check_failed;
    }
    return exit_ok;
  } catch (const ConfigError& e) {
    err << "vfilt: " << e.what() << "\n";
    return exit_invalid_config;
  } catch (const InfiniteWeightSpace& e) {
    err << "vfilt: " << e.what() << "\n";
    return exit_invalid_config;
  } catch (const std::invalid_argument& e) {
    err << "vfilt: invalid configuration: " << e.what() << "\n";
    return exit_invalid_config;
  } catch (const std::exception& e) {
    err << "vfilt: internal error: " << e.what() << "\n";
    return exit_internal;
  }
}

}  // namespace vfilt
