#include "vfilt/poisson_checks.hpp"

#include "vfilt/filtration_checks.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

namespace vfilt {
namespace {

using json = nlohmann::ordered_json;

// First failing instance of a sampled identity.
struct Tally {
  int checked = 0;
  std::optional<State> witness;
  json where;

  void expect_zero(const State& residual, const json& ctx) {
    ++checked;
    if (!residual.is_zero() && !witness) {
      witness = residual;
      where = ctx;
    }
  }

  void report_to(VerificationReport& report, const std::string& name, int samples) const {
    json params{{"samples", samples}, {"checked", checked}};
    if (witness) params["first_failure"] = where;
    report.check(name, params, witness);
  }
};

// ---- V/C_2 sampling

struct ZhuSample {
  int w;
  ZhuElement x;
};

class ZhuSampler {
public:
  ZhuSampler(ZhuAlgebra& zhu, Rng& rng) : zhu_(zhu), rng_(rng) {
    auto& engine = zhu.engine();
    for (int w = 0; w <= engine.cutoff(); ++w)
      if (!zhu.quotient_basis(w).empty()) weights_.push_back(w);
  }

  // Raw (non-canonical) representative of a random element of weight <= budget.
  ZhuSample draw(int budget) {
    std::vector<int> ok;
    for (int w : weights_)
      if (w <= budget) ok.push_back(w);
    const int w = ok.at(random_int(rng_, 0, static_cast<int>(ok.size()) - 1));
    State s = random_homogeneous_state(zhu_.engine().algebra(), w, rng_);
    return {w, ZhuElement{s}};
  }

  // Random C_2 vector of weight w (zero if C_2 vanishes there).
  State c2_vector(int w) {
    auto& engine = zhu_.engine();
    return engine.state(w, random_element(engine.c_component(2, w), rng_));
  }

  // Three samples with total weight <= budget, drawn in random order.
  std::vector<ZhuSample> triple(int budget) {
    std::vector<ZhuSample> out;
    for (int i = 0; i < 3; ++i) {
      out.push_back(draw(budget));
      budget -= out.back().w;
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

private:
  ZhuAlgebra& zhu_;
  Rng& rng_;
  std::vector<int> weights_;
};

// ---- gr sampling

class GrSampler {
public:
  GrSampler(GrAlgebra& gr, Rng& rng) : gr_(gr), rng_(rng) {
    auto& engine = gr.engine();
    for (int d = 0; d <= gr.max_degree(); ++d)
      for (int w = d; w <= engine.cutoff(); ++w)
        if (!gr.quotient_basis(d, w).empty()) slots_.emplace_back(d, w);
  }

  // Random class with degree <= max_d and weight <= max_w; (0, 0) always fits.
  GrElement draw(int max_d, int max_w) {
    std::vector<std::pair<int, int>> ok;
    for (const auto& s : slots_)
      if (s.first <= max_d && s.second <= max_w) ok.push_back(s);
    const auto [d, w] = ok.at(random_int(rng_, 0, static_cast<int>(ok.size()) - 1));
    const auto& basis = gr_.quotient_basis(d, w);
    State rep;
    const int terms = random_int(rng_, 1, std::min<int>(3, basis.size()));
    for (int t = 0; t < terms; ++t) {
      rep.axpy(random_coefficient(rng_), basis[random_int(rng_, 0, static_cast<int>(basis.size()) - 1)]);
    }
    return gr_.element(d, w, rep);
  }

  std::vector<GrElement> draw_many(int count, int max_d, int max_w) {
    std::vector<GrElement> out;
    for (int i = 0; i < count; ++i) {
      out.push_back(draw(max_d, max_w));
      max_d -= out.back().degree;
      max_w -= out.back().weight;
    }
    std::shuffle(out.begin(), out.end(), rng_);
    return out;
  }

  // a with its representative shifted by a random vector of E_{degree+1}.
  GrElement perturbed(const GrElement& a) {
    auto& engine = gr_.engine();
    GrElement out = a;
    out.representative +=
        engine.state(a.weight, random_element(engine.e_component(a.degree + 1, a.weight), rng_));
    return out;
  }

private:
  GrAlgebra& gr_;
  Rng& rng_;
  std::vector<std::pair<int, int>> slots_;
};

json describe(const GrElement& a) {
  return json{{"degree", a.degree}, {"weight", a.weight}, {"rep", to_string(a.representative)}};
}

State difference(GrAlgebra& gr, const GrElement& a, const GrElement& b) {
  return gr.subtract(a, b).representative;
}

// Repeated d.
GrElement partial_power(GrAlgebra& gr, GrElement a, int k) {
  for (int i = 0; i < k; ++i) a = gr.partial(a);
  return a;
}

}  // namespace

VerificationReport verify_zhu_poisson_axioms(ZhuAlgebra& zhu, Rng& rng, int samples) {
  VerificationReport report;
  ZhuSampler sampler(zhu, rng);
  const int top = zhu.engine().cutoff();
  Tally commutative, associative, unit, skew, jacobi, leibniz, well_defined;

  for (int s = 0; s < samples; ++s) {
    auto t = sampler.triple(top);
    const ZhuElement a = zhu.element(t[0].x.representative);
    const ZhuElement b = zhu.element(t[1].x.representative);
    const ZhuElement c = zhu.element(t[2].x.representative);
    const json ctx{{"a", to_string(a.representative)}, {"b", to_string(b.representative)},
                   {"c", to_string(c.representative)}};

    commutative.expect_zero((zhu.product(a, b) - zhu.product(b, a)).representative, ctx);
    associative.expect_zero(
        (zhu.product(zhu.product(a, b), c) - zhu.product(a, zhu.product(b, c))).representative, ctx);
    unit.expect_zero((zhu.product(zhu.one(), a) - a).representative +
                         (zhu.product(a, zhu.one()) - a).representative,
                     ctx);
    skew.expect_zero((zhu.bracket(a, b) + zhu.bracket(b, a)).representative, ctx);
    jacobi.expect_zero((zhu.bracket(a, zhu.bracket(b, c)) - zhu.bracket(zhu.bracket(a, b), c) -
                        zhu.bracket(b, zhu.bracket(a, c)))
                           .representative,
                       ctx);
    leibniz.expect_zero((zhu.bracket(a, zhu.product(b, c)) - zhu.product(zhu.bracket(a, b), c) -
                         zhu.product(b, zhu.bracket(a, c)))
                            .representative,
                        ctx);

    // Raw representatives shifted by C_2 vectors, never canonicalized first.
    const ZhuElement a2{t[0].x.representative + sampler.c2_vector(t[0].w)};
    const ZhuElement b2{t[1].x.representative + sampler.c2_vector(t[1].w)};
    State residual = (zhu.product(a2, b2) - zhu.product(a, b)).representative;
    residual += (zhu.bracket(a2, b2) - zhu.bracket(a, b)).representative;
    well_defined.expect_zero(residual, ctx);
  }

  commutative.report_to(report, "zhu_commutative", samples);
  associative.report_to(report, "zhu_associative", samples);
  unit.report_to(report, "zhu_unit", samples);
  skew.report_to(report, "zhu_bracket_skew", samples);
  jacobi.report_to(report, "zhu_jacobi", samples);
  leibniz.report_to(report, "zhu_leibniz", samples);
  well_defined.report_to(report, "zhu_well_defined_mod_C2", samples);
  return report;
}

VerificationReport verify_gr_axioms(GrAlgebra& gr, Rng& rng, int samples) {
  VerificationReport report;
  GrSampler sampler(gr, rng);
  FiltrationEngine& engine = gr.engine();
  auto& va = engine.algebra();
  const int top = engine.cutoff();
  const int deg = gr.max_degree();
  Tally commutative, associative, unit, derivation, bigrading, y_derivation, partial_y, well_defined;

  for (int s = 0; s < samples; ++s) {
    {
      auto t = sampler.draw_many(3, deg, top);
      const auto &a = t[0], &b = t[1], &c = t[2];
      const json ctx{{"a", describe(a)}, {"b", describe(b)}, {"c", describe(c)}};
      commutative.expect_zero(difference(gr, gr.product(a, b), gr.product(b, a)), ctx);
      associative.expect_zero(
          difference(gr, gr.product(gr.product(a, b), c), gr.product(a, gr.product(b, c))), ctx);
      unit.expect_zero(difference(gr, gr.product(gr.one(), a), a), ctx);

      const int n = random_int(rng, 0, 3);
      const GrElement lhs = gr.yminus(a, n, gr.product(b, c));
      const GrElement rhs = gr.add(gr.product(gr.yminus(a, n, b), c), gr.product(b, gr.yminus(a, n, c)));
      y_derivation.expect_zero(difference(gr, lhs, rhs), json{{"n", n}, {"a", describe(a)},
                                                             {"b", describe(b)}, {"c", describe(c)}});
    }
    {
      // one step of room for d
      auto t = sampler.draw_many(2, deg - 1, top - 1);
      const auto &a = t[0], &b = t[1];
      const json ctx{{"a", describe(a)}, {"b", describe(b)}};
      derivation.expect_zero(
          difference(gr, gr.partial(gr.product(a, b)),
                     gr.add(gr.product(gr.partial(a), b), gr.product(a, gr.partial(b)))),
          ctx);

      // raw product and D land one filtration index where the bidegree says
      State miss;
      const State ab = va.mode_act(a.representative, -1, b.representative);
      if (!ab.is_zero() &&
          !contains(engine.e_component(a.degree + b.degree, a.weight + b.weight),
                    engine.coordinates(a.weight + b.weight, ab)))
        miss += ab;
      const State da = va.d_operator(a.representative);
      if (!da.is_zero() && !contains(engine.e_component(a.degree + 1, a.weight + 1),
                                     engine.coordinates(a.weight + 1, da)))
        miss += da;
      const GrElement p = gr.product(a, b), q = gr.partial(a);
      if (p.degree != a.degree + b.degree || p.weight != a.weight + b.weight ||
          q.degree != a.degree + 1 || q.weight != a.weight + 1)
        miss += a.representative;
      bigrading.expect_zero(miss, ctx);

      const int n = random_int(rng, 0, 3);
      partial_y.expect_zero(
          difference(gr, gr.partial(gr.yminus(a, n, b)),
                     gr.add(gr.yminus(gr.partial(a), n, b), gr.yminus(a, n, gr.partial(b)))),
          json{{"n", n}, {"a", describe(a)}, {"b", describe(b)}});

      const GrElement a2 = sampler.perturbed(a), b2 = sampler.perturbed(b);
      State residual = difference(gr, gr.product(a2, b2), gr.product(a, b));
      residual += difference(gr, gr.partial(a2), gr.partial(a));
      residual += difference(gr, gr.yminus(a2, n, b2), gr.yminus(a, n, b));
      well_defined.expect_zero(residual, json{{"n", n}, {"a", describe(a)}, {"b", describe(b)}});
    }
  }

  commutative.report_to(report, "gr_commutative", samples);
  associative.report_to(report, "gr_associative", samples);
  unit.report_to(report, "gr_unit", samples);
  derivation.report_to(report, "gr_partial_derivation", samples);
  bigrading.report_to(report, "gr_bigrading", samples);
  y_derivation.report_to(report, "gr_yminus_derivation", samples);
  partial_y.report_to(report, "gr_partial_commutes_with_yminus", samples);
  well_defined.report_to(report, "gr_well_defined_mod_deeper_E", samples);
  return report;
}

VerificationReport verify_vertex_lie_axioms(GrAlgebra& gr, Rng& rng, int samples) {
  VerificationReport report;
  GrSampler sampler(gr, rng);
  FiltrationEngine& engine = gr.engine();
  auto& va = engine.algebra();
  const int top = engine.cutoff();
  const int deg = gr.max_degree();
  Tally translation, skew, commutator;

  for (int s = 0; s < samples; ++s) {
    {
      auto t = sampler.draw_many(2, deg - 1, top - 1);
      const auto &a = t[0], &b = t[1];
      const int n = random_int(rng, 0, 3);
      GrElement rhs = n == 0 ? gr.zero(a.degree + 1 + b.degree, a.weight + b.weight)
                             : gr.scale(-n, gr.yminus(a, n - 1, b));
      translation.expect_zero(difference(gr, gr.yminus(gr.partial(a), n, b), rhs),
                              json{{"n", n}, {"a", describe(a)}, {"b", describe(b)}});
    }
    {
      auto t = sampler.draw_many(2, deg, top);
      const auto &a = t[0], &b = t[1];
      const int n = random_int(rng, 0, 3);
      // a_n b = sum_j (-1)^{n+j+1} d^j (b_{n+j} a) / j!
      GrElement rhs = gr.zero(a.degree + b.degree - n, a.weight + b.weight - n - 1);
      const auto top_mode = va.max_nonzero_mode(b.representative, a.representative);
      mpz_class factorial = 1;
      for (int j = 0; top_mode && n + j <= *top_mode; ++j) {
        if (j > 0) factorial *= j;
        const Scalar sign = (n + j + 1) % 2 == 0 ? 1 : -1;
        rhs = gr.add(rhs, gr.scale(sign / Scalar(factorial), partial_power(gr, gr.yminus(b, n + j, a), j)));
      }
      skew.expect_zero(difference(gr, gr.yminus(a, n, b), rhs),
                       json{{"n", n}, {"a", describe(a)}, {"b", describe(b)}});
    }
    {
      auto t = sampler.draw_many(3, deg, top);
      const auto &a = t[0], &b = t[1], &c = t[2];
      const int m = random_int(rng, 0, 2), n = random_int(rng, 0, 2);
      GrElement lhs = gr.subtract(gr.yminus(a, m, gr.yminus(b, n, c)), gr.yminus(b, n, gr.yminus(a, m, c)));
      GrElement rhs = gr.zero(lhs.degree, lhs.weight);
      for (int i = 0; i <= m; ++i) {
        rhs = gr.add(rhs, gr.scale(Scalar(binomial(m, i)), gr.yminus(gr.yminus(a, i, b), m + n - i, c)));
      }
      commutator.expect_zero(difference(gr, lhs, rhs), json{{"m", m}, {"n", n}, {"a", describe(a)},
                                                            {"b", describe(b)}, {"c", describe(c)}});
    }
  }

  translation.report_to(report, "gr_translation_of_modes", samples);
  skew.report_to(report, "gr_skew_symmetry", samples);
  commutator.report_to(report, "gr_commutator_formula", samples);
  return report;
}

VerificationReport verify_degree0_is_zhu(ZhuAlgebra& zhu, GrAlgebra& gr) {
  VerificationReport report;
  FiltrationEngine& engine = zhu.engine();
  const int top = engine.cutoff();

  std::optional<State> wit;
  json dims = json::array();
  for (int w = 0; w <= top; ++w) {
    const std::size_t zd = quotient_dim(engine.spaces().dim(w), engine.c_component(2, w));
    const std::size_t gd = gr.quotient_basis(0, w).size();
    dims.push_back({zd, gd});
    if (!wit && zd != gd) wit = zd > gd ? zhu.quotient_basis(w).front() : gr.quotient_basis(0, w).front();
    if (!wit) wit = inclusion_witness(engine, w, engine.c_component(2, w), engine.e_component(1, w));
    if (!wit) wit = inclusion_witness(engine, w, engine.e_component(1, w), engine.c_component(2, w));
  }
  report.check("degree0_dimensions", json{{"weights", {0, top}}, {"zhu_vs_gr0", dims}}, wit);

  Tally product, bracket;
  for (int wa = 0; wa <= top; ++wa) {
    for (int wb = 0; wa + wb <= top; ++wb) {
      for (const auto& x : zhu.quotient_basis(wa)) {
        for (const auto& y : zhu.quotient_basis(wb)) {
          const json ctx{{"x", to_string(x)}, {"y", to_string(y)}};
          const ZhuElement zx = zhu.element(x), zy = zhu.element(y);
          const GrElement gx = gr.element(0, wa, x), gy = gr.element(0, wb, y);
          product.expect_zero(zhu.product(zx, zy).representative - gr.product(gx, gy).representative, ctx);
          bracket.expect_zero(zhu.bracket(zx, zy).representative - gr.yminus(gx, 0, gy).representative, ctx);
        }
      }
    }
  }
  json params{{"pairs", product.checked}, {"max_product_weight", top}};
  if (product.witness) params["first_failure"] = product.where;
  report.check("degree0_product_intertwining", params, product.witness);
  params = json{{"pairs", bracket.checked}, {"max_product_weight", top}};
  if (bracket.witness) params["first_failure"] = bracket.where;
  report.check("degree0_bracket_intertwining", params, bracket.witness);
  return report;
}

VerificationReport verify_gr_generation(ZhuAlgebra& zhu, GrAlgebra& gr, int max_degree) {
  VerificationReport report;
  FiltrationEngine& engine = gr.engine();
  auto& va = engine.algebra();
  const int top = engine.cutoff();
  max_degree = std::min(max_degree, gr.max_degree() - 1);

  // d^k x for degree-0 basis classes, memoized by (k, weight, index).
  std::map<std::tuple<int, int, std::size_t>, State> powers;
  auto d_power = [&](int k, int w, std::size_t i) -> const State& {
    auto key = std::make_tuple(k, w, i);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    State s = zhu.quotient_basis(w)[i];
    for (int j = 0; j < k; ++j) s = va.d_operator(s);
    return powers.emplace(key, std::move(s)).first->second;
  };

  for (int n = 1; n <= max_degree; ++n) {
    // (i) E_n = sum over p + q + 1 = n of gr_p * d(gr_q), modulo E_{n+1}
    std::optional<State> wit;
    json ranks = json::array();
    for (int w = n; w <= top; ++w) {
      const RowBasis& target = engine.e_component(n, w);
      RowBasis span = engine.e_component(n + 1, w);
      for (int p = 0; p < n && span.rank() < target.rank(); ++p) {
        const int q = n - 1 - p;
        for (int wx = 0; wx + 1 <= w; ++wx) {
          const int wy = w - 1 - wx;
          for (const auto& x : gr.quotient_basis(p, wx)) {
            for (const auto& y : gr.quotient_basis(q, wy)) {
              const State v = va.mode_act(x, -1, va.d_operator(y));
              if (!v.is_zero()) span.insert(engine.coordinates(w, v));
            }
          }
        }
      }
      ranks.push_back(span.rank() - engine.e_component(n + 1, w).rank());
      if (!wit) wit = inclusion_witness(engine, w, target, span);
    }
    report.check("gr_positive_part_is_A_dA", json{{"degree", n}, {"weights", {n, top}}, {"ranks", ranks}}, wit);

    // (ii) strictly decreasing d-monomials of degree-0 classes
    wit.reset();
    ranks = json::array();
    json dims = json::array();
    for (int w = n; w <= top; ++w) {
      const RowBasis& target = engine.e_component(n, w);
      const RowBasis& deeper = engine.e_component(n + 1, w);
      RowBasis span = deeper;
      // factors chosen left to right with strictly decreasing k
      std::function<void(int, int, int, const State&)> extend = [&](int k_bound, int deg_left, int w_left,
                                                                    const State& acc) {
        if (deg_left == 0 && w_left == 0) {
          span.insert(engine.coordinates(w, acc));
          return;
        }
        for (int k = std::min(k_bound - 1, deg_left); k >= 0; --k) {
          if (k == 0 && deg_left != 0) break;
          for (int wx = 1; wx + k <= w_left; ++wx) {
            const std::size_t count = zhu.quotient_basis(wx).size();
            for (std::size_t i = 0; i < count; ++i) {
              const State next = va.mode_act(d_power(k, wx, i), -1, acc);
              if (next.is_zero()) continue;
              extend(k, deg_left - k, w_left - wx - k, next);
            }
          }
        }
      };
      extend(n + 1, n, w, va.vacuum());
      ranks.push_back(span.rank() - deeper.rank());
      dims.push_back(target.rank() - deeper.rank());
      if (!wit) wit = inclusion_witness(engine, w, target, span);
      if (!wit) wit = inclusion_witness(engine, w, span, target);
    }
    report.check("gr_strict_partial_monomials_span",
                 json{{"degree", n}, {"weights", {n, top}}, {"ranks", ranks}, {"dims", dims}}, wit);
  }
  return report;
}

}  // namespace vfilt
