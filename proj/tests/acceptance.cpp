// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
// Exits nonzero when any criterion fails.

#include "vfilt/filtration_checks.hpp"
#include "vfilt/poisson_checks.hpp"
#include "vfilt/serialize.hpp"
#include "vfilt/spanning.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace vfilt;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

// ok iff no failures; detail names the first failure
Outcome summarize(const VerificationReport& r, std::string what) {
  Outcome o{r.all_passed(), std::move(what)};
  o.detail += " (" + std::to_string(r.count(CheckStatus::pass)) + " pass, " +
              std::to_string(r.count(CheckStatus::fail)) + " fail, " + std::to_string(r.count(CheckStatus::skipped)) +
              " skipped)";
  for (const auto& rec : r.records()) {
    if (rec.status != CheckStatus::fail) continue;
    o.detail += "; first failure " + rec.name + " " + rec.params.dump();
    if (rec.witness) o.detail += " witness " + to_string(*rec.witness);
    break;
  }
  return o;
}

std::size_t count_named(const VerificationReport& r, const std::string& name) {
  std::size_t k = 0;
  for (const auto& rec : r.records()) k += rec.name == name;
  return k;
}

// every named record must be present
Outcome require_records(Outcome o, const VerificationReport& r, const std::vector<std::string>& names) {
  for (const auto& n : names) {
    if (count_named(r, n) == 0) {
      o.ok = false;
      o.detail += "; missing record " + n;
    }
  }
  return o;
}

long partitions(int w, int largest) {
  if (w == 0) return 1;
  long total = 0;
  for (int k = std::min(w, largest); k >= 1; --k) total += partitions(w - k, k);
  return total;
}

Outcome criterion1() {
  const auto t0 = Clock::now();
  Rng rng(101);
  VertexAlgebra h(AlgebraPreset::heisenberg());
  VertexAlgebra l(AlgebraPreset::lattice(2));
  VerificationReport r;
  r.append(verify_borcherds(h, rng, 200, 6, 4));
  r.append(verify_borcherds(l, rng, 60, 4, 4));
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  Outcome o = summarize(r, "commutator formula on 200 heisenberg (wt<=6) + 60 lattice:2 (wt<=4) triples, |m|,|n|<=4");
  std::ostringstream t;
  t.precision(2);
  t << std::fixed << "; " << secs << " s";
  o.detail += t.str();
  if (secs >= 60) {
    o.ok = false;
    o.detail += " (limit 60 s)";
  }
  return o;
}

Outcome criterion2() {
  Outcome o{true, "E_1 = C_2 and E_2 = C_3 per weight"};
  for (auto [preset, top] : {std::pair{AlgebraPreset::heisenberg(), 8}, std::pair{AlgebraPreset::lattice(2), 6}}) {
    FiltrationEngine e(preset, top);
    for (int w = 0; w <= top; ++w) {
      for (auto [n, c] : {std::pair{1, 2}, std::pair{2, 3}}) {
        if (!subspace_equal(e.e_component(n, w), e.c_component(c, w))) {
          o.ok = false;
          o.detail += "; " + preset.name() + " w=" + std::to_string(w) + " E_" + std::to_string(n) +
                      " != C_" + std::to_string(c);
        }
      }
    }
    o.detail += "; " + preset.name() + " w<=" + std::to_string(top);
  }
  return o;
}

Outcome criterion3() {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 10);
  Outcome o{true, "heisenberg w<=10:"};
  for (int n = 2; n <= 6; ++n) {
    for (int w = 0; w <= 10; ++w) {
      if (auto wit = inclusion_witness(h, w, h.c_component(n, w), h.e_component(n - 1, w))) {
        o.ok = false;
        o.detail += " C_" + std::to_string(n) + " not in E_" + std::to_string(n - 1) + " at w=" + std::to_string(w) +
                    " witness " + to_string(*wit) + ";";
        break;
      }
    }
  }
  if (o.ok) o.detail += " C_n in E_{n-1} for n=2..6;";
  for (auto [n, m] : {std::pair{2, 0}, std::pair{3, 2}, std::pair{4, 8}}) {
    std::optional<std::pair<int, State>> fail;
    std::size_t nonzero = 0;
    for (int w = 0; w <= 10 && !fail; ++w) {
      nonzero += h.e_component(m, w).rank();
      if (auto wit = inclusion_witness(h, w, h.e_component(m, w), h.c_component(n, w))) fail = {w, *wit};
    }
    const std::string pair = "E_" + std::to_string(m) + " in C_" + std::to_string(n);
    if (fail) {
      o.ok = false;
      o.detail += " " + pair + " FAILS at w=" + std::to_string(fail->first) + " witness " + to_string(fail->second) +
                  " (E_0 = V contains the vacuum, C_2 does not);";
    } else {
      o.detail += " " + pair + " holds (dim E_m through w=10: " + std::to_string(nonzero) + ");";
    }
  }
  return o;
}

Outcome criterion4() {
  FiltrationEngine h(AlgebraPreset::heisenberg(), 10);
  FiltrationEngine l(AlgebraPreset::lattice(2), 6);
  VerificationReport r;
  for (auto* e : {&h, &l}) {
    for (int n : {0, 1}) r.append(verify_depth_collapse(*e, n));
    for (int k : {2, 3}) r.append(verify_c_raising(*e, k));
  }
  return summarize(r, "exhaustive depth collapse n=0,1 and u_{-k} C_k in C_{k+1}, k=2,3; heisenberg w<=10, lattice:2 w<=6");
}

Outcome criterion5() {
  VerificationReport r;
  FiltrationEngine h(AlgebraPreset::heisenberg(), 10);
  FiltrationEngine l(AlgebraPreset::lattice(2), 6);
  r.append(verify_weight_bounds(h));
  r.append(verify_weight_bounds(l));
  return summarize(r, "E_n(w) = 0 for w < n, C_n(w) = 0 for w < n-1, every computed n, w");
}

Outcome criterion6() {
  VerificationReport r;
  Rng rng(606);
  for (auto [preset, top] : {std::pair{AlgebraPreset::heisenberg(), 8}, std::pair{AlgebraPreset::lattice(2), 6}}) {
    FiltrationEngine e(preset, top);
    ZhuAlgebra zhu(e);
    GrAlgebra gr(e, 4);
    r.append(verify_zhu_poisson_axioms(zhu, rng, 100));
    r.append(verify_gr_axioms(gr, rng, 100));
    r.append(verify_vertex_lie_axioms(gr, rng, 100));
  }
  Outcome o = summarize(r, "Zhu Poisson and gr vertex Poisson axioms, 100 samples each, both presets");
  return require_records(o, r, {"zhu_well_defined_mod_C2", "gr_well_defined_mod_deeper_E", "zhu_jacobi",
                                "gr_yminus_derivation", "gr_commutator_formula"});
}

Outcome criterion7() {
  VerificationReport r;
  for (auto preset : {AlgebraPreset::heisenberg(), AlgebraPreset::lattice(2)}) {
    FiltrationEngine e(preset, 8);
    ZhuAlgebra zhu(e);
    GrAlgebra gr(e, 1);
    r.append(verify_degree0_is_zhu(zhu, gr));
  }
  return summarize(r, "V/C_2 = E_0/E_1 intertwines product and bracket, all basis pairs, product weight <= 8");
}

Outcome criterion8() {
  VerificationReport r;
  Rng rng(808);
  for (auto [preset, top] : {std::pair{AlgebraPreset::heisenberg(), 8}, std::pair{AlgebraPreset::lattice(2), 8}}) {
    FiltrationEngine e(preset, top);
    ZhuAlgebra zhu(e);
    GrAlgebra gr(e, 5);
    r.append(verify_gr_generation(zhu, gr, 4));
    r.append(verify_reduction_identity(gr, rng, 20, {1, 2}));
  }
  Outcome o = summarize(r, "strict d-monomials span E_n/E_{n+1}, n<=4, w<=8; reduction identity k=1,2 on 20 pairs");
  if (count_named(r, "gr_strict_partial_monomials_span") != 8) {
    o.ok = false;
    o.detail += "; expected 4 degrees per preset";
  }
  return require_records(o, r, {"partial_reduction_identity"});
}

Outcome criterion9() {
  const AlgebraPreset neg = AlgebraPreset::lattice(-2);
  VertexAlgebra va(neg);
  const State r = va.mode_act(va.lattice_vector(1), -3, va.lattice_vector(-1));
  Outcome o = summarize(degeneracy_report(neg), "lattice:-2 degeneracy suite");
  if (r != va.vacuum()) {
    o.ok = false;
    o.detail += "; (e^alpha)_{-3} e^{-alpha} = " + to_string(r);
  } else {
    o.detail += "; (e^alpha)_{-3} e^{-alpha} = 1 exactly";
  }
  try {
    FiltrationEngine e(neg, 4);
    o.ok = false;
    o.detail += "; windowless engine was accepted";
  } catch (const InfiniteWeightSpace& e) {
    o.detail += "; windowless enumeration rejected";
  }
  return o;
}

Outcome criterion10() {
  VerificationReport r;
  Rng rng(1010);
  for (auto [preset, top] : {std::pair{AlgebraPreset::heisenberg(), 8}, std::pair{AlgebraPreset::lattice(2), 6}}) {
    FiltrationEngine e(preset, top);
    r.append(verify_spanning_suite(e, rng));
  }
  Outcome o = summarize(r, "strict spanning forward/reverse, PBW, generating types on the default sets");
  o = require_records(o, r, {"strict_spanning_forward", "strict_spanning_reverse", "pbw_ordered_family_spans"});

  FiltrationEngine h(AlgebraPreset::heisenberg(), 8);
  const GeneratorSet b{{h.algebra().generator()}, {}};
  FamilySpan pbw(h, b, SpanningKind::ordered);
  std::string ranks;
  for (int w = 0; w <= 8; ++w) {
    const std::size_t rank = pbw.at(w).rank();
    ranks += (w ? "," : "") + std::to_string(rank);
    if (rank != h.spaces().dim(w) || static_cast<long>(rank) != partitions(w, w)) o.ok = false;
  }
  o.detail += "; PBW rank for {b}, w=0..8: " + ranks;
  return o;
}

Outcome criterion11() {
  const std::string tool = VFILT_TOOL_PATH;
  const auto dir = std::filesystem::temp_directory_path() / "vfilt_acceptance";
  std::filesystem::create_directories(dir);
  Outcome o{true, "verify --suite all:"};
  const auto t0 = Clock::now();
  for (const std::string preset : {"heisenberg", "lattice:2"}) {
    const auto out = dir / (preset == "heisenberg" ? "heisenberg.json" : "lattice2.json");
    const std::string cmd = tool + " verify --preset " + preset + " --suite all --seed 7 --output " + out.string() +
                            " 2>/dev/null";
    const int status = std::system(cmd.c_str());
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.detail += " " + preset + " exit " + std::to_string(code);
    if (code != 0) o.ok = false;
    std::ifstream in(out);
    if (in) {
      const Json j = Json::parse(in);
      o.detail += " (" + j.at("summary").dump();
      for (const auto& c : j.at("checks")) {
        if (c.at("status") == "fail") o.detail += " fail " + c.at("name").get<std::string>() + c.at("params").dump();
      }
      o.detail += ");";
    }
  }
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  std::ostringstream t;
  t.precision(1);
  t << std::fixed << " " << secs << " s total";
  o.detail += t.str();
  if (secs >= 300) {
    o.ok = false;
    o.detail += " (limit 300 s)";
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4,
                                                       criterion5, criterion6, criterion7, criterion8,
                                                       criterion9, criterion10, criterion11};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << o.detail << std::endl;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
