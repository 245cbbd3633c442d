#include "vfilt/filtration_checks.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace vfilt {
namespace {

using json = nlohmann::ordered_json;
using Component = std::function<const RowBasis&(int)>;

struct Failure {
  int w;
  State witness;
};

// sub(w) in super(w) for every enumerated weight.
std::optional<Failure> first_failure(FiltrationEngine& engine, const Component& sub,
                                     const Component& super) {
  for (int w = engine.lowest_weight(); w <= engine.cutoff(); ++w) {
    const RowBasis& a = sub(w);
    if (a.empty()) continue;
    if (auto wit = inclusion_witness(engine, w, a, super(w))) return Failure{w, *wit};
  }
  return std::nullopt;
}

void record_inclusion(VerificationReport& report, FiltrationEngine& engine, std::string name,
                      json params, const Component& sub, const Component& super) {
  params["weights"] = {engine.lowest_weight(), engine.cutoff()};
  if (auto f = first_failure(engine, sub, super)) {
    params["failing_weight"] = f->w;
    report.fail(std::move(name), std::move(params), f->witness);
  } else {
    report.pass(std::move(name), std::move(params));
  }
}

void record_equality(VerificationReport& report, FiltrationEngine& engine, std::string name,
                     json params, const Component& a, const Component& b) {
  params["weights"] = {engine.lowest_weight(), engine.cutoff()};
  auto f = first_failure(engine, a, b);
  if (!f) f = first_failure(engine, b, a);
  if (f) {
    params["failing_weight"] = f->w;
    report.fail(std::move(name), std::move(params), f->witness);
  } else {
    report.pass(std::move(name), std::move(params));
  }
}

std::optional<State> zero_witness(FiltrationEngine& engine, int w, const RowBasis& b) {
  if (b.empty()) return std::nullopt;
  return engine.state(w, b.rows().front());
}

// Random nonzero homogeneous state of weight in [lo, hi]; zero if none.
std::pair<int, State> random_state(FiltrationEngine& engine, Rng& rng, int lo, int hi) {
  for (int attempt = 0; attempt < 20; ++attempt) {
    const int w = random_int(rng, lo, hi);
    State s = random_homogeneous_state(engine.algebra(), w, rng, engine.window());
    if (!s.is_zero()) return {w, s};
  }
  return {lo, State{}};
}

// Span of u^(1)_{-k_1} ... u^(r)_{-k_r} w with k_i >= 2, per (r, w).
class DeepProducts {
public:
  explicit DeepProducts(FiltrationEngine& engine) : engine_(engine) {}

  const RowBasis& at(int r, int w) {
    if (r == 0) return engine_.full(w);
    if (auto it = memo_.find({r, w}); it != memo_.end()) return it->second;
    RowBasis b;
    const std::size_t dim = engine_.spaces().dim(w);
    const int lo = engine_.lowest_weight();
    for (int k = 2; w - k + 1 - 2 * lo >= 0 && b.rank() < dim; ++k) {
      for (int a = lo; a <= w - k + 1 - lo && b.rank() < dim; ++a) {
        const int wx = w - a - k + 1;
        if (wx > engine_.cutoff()) continue;
        const std::vector<SparseVector> rows = at(r - 1, wx).rows();
        for (const auto& u : engine_.generators_of_weight(a)) {
          for (const auto& x : rows) {
            if (b.rank() == dim) break;
            if (auto v = engine_.act(u, -k, wx, x); v && !v->empty()) b.insert(*v);
          }
        }
      }
    }
    return memo_.emplace(std::make_pair(r, w), std::move(b)).first->second;
  }

private:
  FiltrationEngine& engine_;
  std::map<std::pair<int, int>, RowBasis> memo_;
};

// E^U_n from an explicit list of homogeneous generators.
class IncreasingFromGenerators {
public:
  IncreasingFromGenerators(FiltrationEngine& engine, std::vector<std::pair<int, State>> gens)
      : engine_(engine), gens_(std::move(gens)) {}

  const RowBasis& at(int n, int w) {
    static const RowBasis empty;
    if (n < 0 || w < 0) return empty;
    if (auto it = memo_.find({n, w}); it != memo_.end()) return it->second;
    RowBasis b;
    if (w == 0) b.insert(SparseVector::unit(0));
    for (const auto& [a, u] : gens_) {
      if (a > n) continue;
      for (int k = 1; w - a - k + 1 >= 0; ++k) {
        const int wx = w - a - k + 1;
        const std::vector<SparseVector> rows = at(n - a, wx).rows();
        for (const auto& x : rows) {
          if (auto v = engine_.act(u, -k, wx, x); v && !v->empty()) b.insert(*v);
        }
      }
    }
    return memo_.emplace(std::make_pair(n, w), std::move(b)).first->second;
  }

private:
  FiltrationEngine& engine_;
  std::vector<std::pair<int, State>> gens_;
  std::map<std::pair<int, int>, RowBasis> memo_;
};

}  // namespace

std::optional<State> inclusion_witness(FiltrationEngine& engine, int w, const RowBasis& sub,
                                       const RowBasis& super) {
  for (const auto& row : sub.rows()) {
    if (!contains(super, row)) return engine.state(w, row);
  }
  return std::nullopt;
}

SparseVector random_element(const RowBasis& basis, Rng& rng) {
  SparseVector out;
  if (basis.empty()) return out;
  const int rank = static_cast<int>(basis.rank());
  while (out.empty()) {
    const int terms = random_int(rng, 1, std::min(3, rank));
    for (int t = 0; t < terms; ++t) out.axpy(random_coefficient(rng), basis.rows()[random_int(rng, 0, rank - 1)]);
  }
  return out;
}

VerificationReport verify_c_e_identities(FiltrationEngine& engine, int max_n) {
  VerificationReport report;
  auto E = [&](int n) -> Component { return [&engine, n](int w) -> const RowBasis& { return engine.e_component(n, w); }; };
  auto C = [&](int n) -> Component { return [&engine, n](int w) -> const RowBasis& { return engine.c_component(n, w); }; };

  record_equality(report, engine, "E1_equals_C2", json::object(), E(1), C(2));
  record_equality(report, engine, "E2_equals_C3", json::object(), E(2), C(3));

  for (int n = 2; n <= max_n; ++n) {
    record_inclusion(report, engine, "Cn_in_En-1", json{{"n", n}}, C(n), E(n - 1));
  }

  for (int n = 2; n <= 5; ++n) {
    const int m = (n - 2) * (1 << (n - 2));
    json params{{"n", n}, {"m", m}};
    bool vacuous = true;
    for (int w = engine.lowest_weight(); w <= engine.cutoff() && vacuous; ++w) {
      vacuous = engine.e_component(m, w).empty();
    }
    if (vacuous) {
      report.skip("Em_in_Cn", params,
                  "E_" + std::to_string(m) + " vanishes at every weight <= " +
                      std::to_string(engine.cutoff()) + "; inclusion would be vacuous");
      continue;
    }
    record_inclusion(report, engine, "Em_in_Cn", params, E(m), C(n));
  }
  return report;
}

VerificationReport verify_weight_bounds(FiltrationEngine& engine) {
  VerificationReport report;
  const int t = engine.lowest_weight();
  for (int n = 1; n <= engine.cutoff() + 2; ++n) {
    std::optional<State> wit;
    int bad = 0;
    for (int w = engine.lowest_weight(); w < std::min(n, engine.cutoff() + 1) && !wit; ++w) {
      wit = zero_witness(engine, w, engine.e_component(n, w));
      bad = w;
    }
    json params{{"n", n}, {"below_weight", n}};
    if (wit) params["failing_weight"] = bad;
    report.check("En_weight_support", params, wit);
  }
  for (int n = 2; n <= engine.cutoff() + 2; ++n) {
    const int bound = 2 * t + n - 1;
    std::optional<State> wit;
    int bad = 0;
    for (int w = engine.lowest_weight(); w < std::min(bound, engine.cutoff() + 1) && !wit; ++w) {
      wit = zero_witness(engine, w, engine.c_component(n, w));
      bad = w;
    }
    json params{{"n", n}, {"below_weight", bound}};
    if (wit) params["failing_weight"] = bad;
    report.check("Cn_weight_support", params, wit);
  }
  return report;
}

VerificationReport verify_nesting(FiltrationEngine& engine, int max_n) {
  VerificationReport report;
  for (int n = 0; n < max_n; ++n) {
    record_inclusion(
        report, engine, "E_decreasing", json{{"n", n}},
        [&engine, n](int w) -> const RowBasis& { return engine.e_component(n + 1, w); },
        [&engine, n](int w) -> const RowBasis& { return engine.e_component(n, w); });
  }
  for (int n = 2; n < max_n; ++n) {
    record_inclusion(
        report, engine, "C_decreasing", json{{"n", n}},
        [&engine, n](int w) -> const RowBasis& { return engine.c_component(n + 1, w); },
        [&engine, n](int w) -> const RowBasis& { return engine.c_component(n, w); });
  }
  if (engine.preset().is_n_graded()) {
    const int m = engine.cutoff();
    std::optional<State> wit;
    for (int w = 0; w <= m && !wit; ++w) wit = zero_witness(engine, w, engine.e_component(m + 1, w));
    report.check("E_intersection_trivial", json{{"n", m + 1}, {"through_weight", m}}, wit);
  }
  return report;
}

VerificationReport verify_mode_bounds(FiltrationEngine& engine, Rng& rng, int samples) {
  VerificationReport report;
  const int lo = engine.lowest_weight();
  const int top = engine.cutoff();

  // a = b on whole components: b_{-3} E_2 in E_4 and b_1 E_3 in E_2.
  const State b = engine.algebra().generator();
  auto whole = [&](int m, int n, int w) {
    json params{{"a", "b"}, {"m", m}, {"n", n}, {"w", w}};
    const int wr = 1 + w - m - 1;
    if (wr > top || w > top) {
      report.skip("generator_mode_bound", params, "result weight exceeds the cutoff");
      return;
    }
    std::optional<State> wit;
    for (const auto& row : engine.e_component(n, w).rows()) {
      auto r = engine.act(b, m, w, row);
      if (r && !contains(engine.e_component(n - m - 1, wr), *r)) {
        wit = engine.state(wr, *r);
        break;
      }
    }
    report.check("generator_mode_bound", params, wit);
  };
  whole(-3, 2, 2);
  whole(1, 3, 3);

  int failures = 0, checked = 0;
  std::optional<State> wit;
  json where;
  for (int s = 0; s < samples; ++s) {
    // a_m E_n: a homogeneous, x in E_n of weight wx
    auto [wa, a] = random_state(engine, rng, std::max(lo, 0), std::min(3, top));
    const int n = random_int(rng, 0, std::max(0, top - 1));
    const int wx = random_int(rng, std::max(lo, n), top);
    const int m = random_int(rng, -4, 4);
    const int wr = wa + wx - m - 1;
    if (a.is_zero() || wr > top || wr < lo) continue;
    const SparseVector x = random_element(engine.e_component(n, wx), rng);
    if (x.empty()) continue;
    auto r = engine.act(a, m, wx, x);
    if (!r) continue;
    ++checked;
    const int target = m >= 0 ? n - m : n - m - 1;
    if (!contains(engine.e_component(target, wr), *r)) {
      if (!wit) {
        wit = engine.state(wr, *r);
        where = json{{"a", to_string(a)}, {"m", m}, {"n", n}, {"target", target}};
      }
      ++failures;
    }
  }
  json params{{"samples", samples}, {"checked", checked}};
  if (wit) params["first_failure"] = where;
  report.check("mode_filtration_bound", params, wit);

  // u in E_r, w in E_s: u_n w in E_{r+s-n-1}, and E_{r+s-n} for n >= 0
  wit.reset();
  checked = 0;
  for (int s = 0; s < samples; ++s) {
    const int r_deg = random_int(rng, 0, 3), s_deg = random_int(rng, 0, 3);
    const int wu = random_int(rng, std::max(lo, r_deg), std::min(top, r_deg + 3));
    const int ww = random_int(rng, std::max(lo, s_deg), std::min(top, s_deg + 3));
    const int n = random_int(rng, -3, 3);
    const int wr = wu + ww - n - 1;
    if (wr > top || wr < lo) continue;
    const SparseVector u = random_element(engine.e_component(r_deg, wu), rng);
    const SparseVector x = random_element(engine.e_component(s_deg, ww), rng);
    if (u.empty() || x.empty()) continue;
    auto r = engine.act(engine.state(wu, u), n, ww, x);
    if (!r) continue;
    ++checked;
    const int target = n >= 0 ? r_deg + s_deg - n : r_deg + s_deg - n - 1;
    if (!contains(engine.e_component(target, wr), *r) && !wit) {
      wit = engine.state(wr, *r);
      where = json{{"r", r_deg}, {"s", s_deg}, {"n", n}, {"target", target}};
    }
  }
  params = json{{"samples", samples}, {"checked", checked}};
  if (wit) params["first_failure"] = where;
  report.check("product_filtration_bound", params, wit);
  return report;
}

VerificationReport verify_depth_collapse(FiltrationEngine& engine, int n) {
  VerificationReport report;
  const int r_min = 1 << n;
  json params{{"n", n}, {"r_min", r_min}};
  // each factor u_{-k} with k >= 2 raises weight by at least 1 - lo + ... ;
  // for N-graded presets at least 1, so r <= cutoff.
  if (!engine.preset().is_n_graded()) {
    report.skip("deep_products_in_C", params, "needs an N-graded preset");
    return report;
  }
  DeepProducts products(engine);
  std::optional<State> wit;
  int checked_r = 0;
  bool nonvacuous = false;
  for (int r = r_min; r <= engine.cutoff() && !wit; ++r) {
    ++checked_r;
    for (int w = 0; w <= engine.cutoff() && !wit; ++w) {
      const RowBasis& p = products.at(r, w);
      if (p.empty()) continue;
      nonvacuous = true;
      if ((wit = inclusion_witness(engine, w, p, engine.c_component(n + 2, w)))) {
        params["failing_r"] = r;
        params["failing_weight"] = w;
      }
    }
  }
  params["r_checked"] = {r_min, r_min + checked_r - 1};
  if (!nonvacuous) {
    report.skip("deep_products_in_C", params, "no such product has weight <= the cutoff");
    return report;
  }
  report.check("deep_products_in_C", params, wit);
  return report;
}

VerificationReport verify_c_raising(FiltrationEngine& engine, int k) {
  VerificationReport report;
  json params{{"k", k}};
  std::optional<State> wit;
  bool nonvacuous = false;
  const int lo = engine.lowest_weight();
  for (int wx = lo; wx <= engine.cutoff() && !wit; ++wx) {
    const RowBasis& ck = engine.c_component(k, wx);
    if (ck.empty()) continue;
    for (int a = lo; a + wx + k - 1 <= engine.cutoff() && !wit; ++a) {
      const int wr = a + wx + k - 1;
      for (const auto& u : engine.generators_of_weight(a)) {
        for (const auto& x : ck.rows()) {
          auto r = engine.act(u, -k, wx, x);
          if (!r || r->empty()) continue;
          nonvacuous = true;
          if (!contains(engine.c_component(k + 1, wr), *r)) {
            wit = engine.state(wr, *r);
            params["u"] = to_string(u);
            params["failing_weight"] = wr;
            break;
          }
        }
        if (wit) break;
      }
    }
  }
  if (!nonvacuous) {
    report.skip("u_minus_k_Ck_in_Ck+1", params, "C_k vanishes below the cutoff");
    return report;
  }
  report.check("u_minus_k_Ck_in_Ck+1", params, wit);
  return report;
}

VerificationReport verify_c_mode_properties(FiltrationEngine& engine, Rng& rng, int samples) {
  VerificationReport report;
  auto& va = engine.algebra();
  const int lo = std::max(engine.lowest_weight(), 0);
  const int top = engine.cutoff();

  // v_{-r-1} = (D v)_{-r} / r for r >= 2
  std::optional<State> wit;
  for (int s = 0; s < samples && !wit; ++s) {
    auto [wv, v] = random_state(engine, rng, std::max(lo, 1), 3);
    auto [wx, x] = random_state(engine, rng, lo, 3);
    const int r = random_int(rng, 2, 4);
    State lhs = va.mode_act(v, -r - 1, x);
    State rhs = Scalar(1) / r * va.mode_act(va.d_operator(v), -r, x);
    if (lhs != rhs) wit = lhs - rhs;
  }
  report.check("D_shift_of_modes", json{{"samples", samples}}, wit);

  // u_{-k} C_n in C_n for k >= 0
  wit.reset();
  int checked = 0;
  for (int s = 0; s < samples && !wit; ++s) {
    const int n = random_int(rng, 2, 4);
    const int k = random_int(rng, 0, 3);
    auto [wu, u] = random_state(engine, rng, std::max(lo, 1), 3);
    const int wx = random_int(rng, std::max(engine.lowest_weight(), n - 1), top);
    const int wr = wu + wx + k - 1;
    if (u.is_zero() || wr > top) continue;
    const SparseVector x = random_element(engine.c_component(n, wx), rng);
    if (x.empty()) continue;
    auto r = engine.act(u, -k, wx, x);
    if (!r) continue;
    ++checked;
    if (!contains(engine.c_component(n, wr), *r)) wit = engine.state(wr, *r);
  }
  report.check("Cn_stable_under_nonpositive_modes", json{{"samples", samples}, {"checked", checked}}, wit);

  // u_{-n} v_{-k} w = v_{-k} u_{-n} w mod C_{n+k}
  wit.reset();
  checked = 0;
  for (int s = 0; s < samples && !wit; ++s) {
    const int n = random_int(rng, 2, 3);
    const int k = random_int(rng, 0, 2);
    auto [wu, u] = random_state(engine, rng, std::max(lo, 1), 2);
    auto [wv, v] = random_state(engine, rng, std::max(lo, 1), 2);
    auto [ww, w] = random_state(engine, rng, lo, 2);
    const int wr = wu + wv + ww + n + k - 2;
    if (u.is_zero() || v.is_zero() || w.is_zero() || wr > top) continue;
    State diff = va.mode_act(u, -n, va.mode_act(v, -k, w)) - va.mode_act(v, -k, va.mode_act(u, -n, w));
    auto d = engine.spaces().coordinates(wr, diff);
    if (!d) continue;
    ++checked;
    if (!contains(engine.c_component(n + k, wr), *d)) wit = diff;
  }
  report.check("commutation_mod_deeper_C", json{{"samples", samples}, {"checked", checked}}, wit);
  return report;
}

VerificationReport verify_increasing_filtration(FiltrationEngine& engine, int max_n, Rng& rng,
                                                int samples) {
  VerificationReport report;
  if (!engine.preset().is_n_graded()) {
    report.skip("EU_increasing", json::object(), "needs an N-graded preset with V_(0) = C1");
    return report;
  }
  const int top = engine.cutoff();
  for (int n = 0; n < max_n; ++n) {
    record_inclusion(
        report, engine, "EU_increasing", json{{"n", n}},
        [&engine, n](int w) -> const RowBasis& { return engine.eu_component(n, w); },
        [&engine, n](int w) -> const RowBasis& { return engine.eu_component(n + 1, w); });
  }
  record_equality(
      report, engine, "EU_exhaustive", json{{"n", top}},
      [&engine, top](int w) -> const RowBasis& { return engine.eu_component(top, w); },
      [&engine](int w) -> const RowBasis& { return engine.full(w); });

  // u in E^U_r, x in E^U_s: u_j x in E^U_{r+s}, and E^U_{r+s-1} for j >= 0
  std::optional<State> wit;
  json where;
  int checked = 0;
  for (int s = 0; s < samples && !wit; ++s) {
    const int r_deg = random_int(rng, 0, 3), s_deg = random_int(rng, 0, 3);
    const int wu = random_int(rng, 0, std::min(top, 4));
    const int wx = random_int(rng, 0, std::min(top, 4));
    const int j = random_int(rng, -3, 3);
    const int wr = wu + wx - j - 1;
    if (wr < 0 || wr > top) continue;
    const SparseVector u = random_element(engine.eu_component(r_deg, wu), rng);
    const SparseVector x = random_element(engine.eu_component(s_deg, wx), rng);
    if (u.empty() || x.empty()) continue;
    auto r = engine.act(engine.state(wu, u), j, wx, x);
    if (!r) continue;
    ++checked;
    const int target = j >= 0 ? r_deg + s_deg - 1 : r_deg + s_deg;
    if (!contains(engine.eu_component(target, wr), *r)) {
      wit = engine.state(wr, *r);
      where = json{{"r", r_deg}, {"s", s_deg}, {"j", j}, {"target", target}};
    }
  }
  json params{{"samples", samples}, {"checked", checked}};
  if (wit) params["first_failure"] = where;
  report.check("EU_good_filtration", params, wit);

  // independence of U: compare with a small strong generating set
  std::vector<std::pair<int, State>> gens{{1, engine.algebra().generator()}};
  if (engine.preset().kind() == AlgebraPreset::Kind::lattice) {
    const int wl = engine.preset().sector_lowest_weight(1);
    gens.emplace_back(wl, engine.algebra().lattice_vector(1));
    gens.emplace_back(wl, engine.algebra().lattice_vector(-1));
  }
  IncreasingFromGenerators small(engine, gens);
  json names = json::array();
  for (const auto& [a, g] : gens) names.push_back(to_string(g));
  for (int n = 0; n <= max_n; ++n) {
    record_equality(
        report, engine, "EU_independent_of_U", json{{"n", n}, {"U", names}},
        [&engine, n](int w) -> const RowBasis& { return engine.eu_component(n, w); },
        [&small, n](int w) -> const RowBasis& { return small.at(n, w); });
  }
  return report;
}

VerificationReport cofiniteness_report(FiltrationEngine& engine, int max_n) {
  VerificationReport report;
  auto quotient_row = [&](auto&& component) {
    json dims = json::array();
    std::size_t total = 0;
    for (int w = engine.lowest_weight(); w <= engine.cutoff(); ++w) {
      const std::size_t q = quotient_dim(engine.spaces().dim(w), component(w));
      dims.push_back(q);
      total += q;
    }
    return std::make_pair(dims, total);
  };
  for (int n = 2; n <= max_n; ++n) {
    auto [dims, total] = quotient_row([&](int w) -> const RowBasis& { return engine.c_component(n, w); });
    const bool top_zero = dims.back() == 0;
    report.pass("quotient_V_mod_Cn",
                json{{"n", n}, {"per_weight", dims}, {"total_through_cutoff", total},
                     {"vanishes_at_cutoff", top_zero}},
                top_zero ? "quotient vanishes at the cutoff weight"
                         : "quotient nonzero at the cutoff weight; total is a truncation");
  }
  for (int n = 0; n <= max_n; ++n) {
    auto [dims, total] = quotient_row([&](int w) -> const RowBasis& { return engine.e_component(n, w); });
    report.pass("quotient_V_mod_En",
                json{{"n", n}, {"per_weight", dims}, {"total_through_cutoff", total}});
  }
  return report;
}

VerificationReport verify_borcherds(VertexAlgebra& algebra, Rng& rng, int triples, int max_weight,
                                    int max_mode, std::optional<int> lattice_window) {
  VerificationReport report;
  json params{{"preset", algebra.preset().name()}, {"triples", triples}, {"max_weight", max_weight},
              {"max_mode", max_mode}};
  const int lowest = algebra.preset().is_n_graded() ? 0 : algebra.preset().sector_lowest_weight(lattice_window.value_or(0));
  int checked = 0;
  for (int t = 0; t < triples; ++t) {
    State x[3];
    for (auto& s : x) s = random_homogeneous_state(algebra, random_int(rng, lowest, max_weight), rng, lattice_window);
    const int m = random_int(rng, -max_mode, max_mode), n = random_int(rng, -max_mode, max_mode);
    const IdentityCheck r = algebra.check_commutator(x[0], m, x[1], n, x[2]);
    ++checked;
    if (!r.holds) {
      params["checked"] = checked;
      params["failure"] = {{"u", to_string(x[0])}, {"m", m}, {"v", to_string(x[1])}, {"n", n}, {"w", to_string(x[2])}};
      report.fail("borcherds_commutator", std::move(params), r.residual, "residual LHS - RHS");
      return report;
    }
  }
  params["checked"] = checked;
  report.pass("borcherds_commutator", std::move(params));
  return report;
}

VerificationReport degeneracy_report(const AlgebraPreset& preset, int window) {
  VerificationReport report;
  if (preset.kind() != AlgebraPreset::Kind::lattice || preset.gram() > 0) {
    report.skip("vacuum_from_lattice_modes", json{{"preset", preset.name()}},
                "degeneracy applies to lattices with negative gram only");
    return report;
  }
  VertexAlgebra va(preset);
  const int k = -preset.gram() / 2;
  const int mode = -2 * k - 1;
  const State r = va.mode_act(va.lattice_vector(1), mode, va.lattice_vector(-1));
  const std::string statement =
      "(e^alpha)_{" + std::to_string(mode) + "} e^{-alpha} = vacuum";
  json params{{"k", k}, {"mode", mode}, {"result", to_string(r)}};
  if (r == va.vacuum()) {
    report.pass("vacuum_from_lattice_modes", params, statement);
    report.pass("C2_is_everything", json{{"k", k}},
                "1 lies in C_" + std::to_string(2 * k + 1) +
                    " inside C_2, so v = v_{-1} 1 lies in C_2 for every v; "
                    "hence E_n = C_{n+2} = V for all n >= 0");
  } else {
    report.fail("vacuum_from_lattice_modes", params, r - va.vacuum(), statement + " failed");
    report.fail("C2_is_everything", json{{"k", k}}, va.vacuum(), "vacuum not produced");
  }

  // lower modes vanish: (e^alpha)_{mode+1} e^{-alpha} = 0
  const State above = va.mode_act(va.lattice_vector(1), mode + 1, va.lattice_vector(-1));
  report.check("lattice_leading_power", json{{"mode", mode + 1}},
               above.is_zero() ? std::nullopt : std::optional<State>(above));

  // windowed C_2 at weight 0 already contains the vacuum
  FiltrationEngine windowed(preset, 0, window);
  const SparseVector vac = windowed.coordinates(0, va.vacuum());
  report.check("vacuum_in_windowed_C2", json{{"window", window}, {"w", 0}},
               contains(windowed.c_component(2, 0), vac) ? std::nullopt
                                                         : std::optional<State>(va.vacuum()));

  try {
    (void)va.basis_of_weight(0);
    report.fail("windowless_enumeration_rejected", json::object(), va.vacuum(),
                "enumeration without a window was accepted");
  } catch (const InfiniteWeightSpace& e) {
    report.pass("windowless_enumeration_rejected", json::object(), e.what());
  }
  return report;
}

}  // namespace vfilt
