#include "vfilt/spanning.hpp"

#include "vfilt/filtration_checks.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace vfilt {
namespace {

using json = nlohmann::ordered_json;

constexpr long kNoBound = LONG_MAX;

const RowBasis kEmpty;

json per_weight_ranks(FiltrationEngine& engine, FamilySpan& span) {
  json out = json::array();
  for (int w = 0; w <= engine.cutoff(); ++w) out.push_back(span.at(w).rank());
  return out;
}

json per_weight_dims(FiltrationEngine& engine) {
  json out = json::array();
  for (int w = 0; w <= engine.cutoff(); ++w) out.push_back(engine.spaces().dim(w));
  return out;
}

// First weight where the family misses part of V, with a missing vector.
ComplementResult first_gap(FiltrationEngine& engine, FamilySpan& span) {
  ComplementResult out;
  for (int w = 0; w <= engine.cutoff(); ++w) {
    if (span.full(w)) continue;
    out.holds = false;
    out.failing_weight = w;
    out.witness = inclusion_witness(engine, w, engine.full(w), span.at(w));
    return out;
  }
  return out;
}

void require_n_graded(FiltrationEngine& engine) {
  if (!engine.preset().is_n_graded()) {
    throw std::invalid_argument("spanning checks need an N-graded preset, got " + engine.preset().name());
  }
}

GeneratorSet monomial_set(const std::vector<Monomial>& ms) {
  GeneratorSet s;
  for (const auto& m : ms) s.vectors.emplace_back(m);
  return s;
}

}  // namespace

std::string kind_name(SpanningKind k) {
  switch (k) {
    case SpanningKind::unordered: return "unordered";
    case SpanningKind::strict: return "strict";
    case SpanningKind::weak: return "weak";
    case SpanningKind::ordered: return "ordered";
    case SpanningKind::ordered_strict: return "ordered_strict";
  }
  return "?";
}

std::vector<Generator> prepare_generators(FiltrationEngine& engine, const GeneratorSet& s) {
  if (s.order && s.order->size() != s.vectors.size()) {
    throw std::invalid_argument("generator order has the wrong length");
  }
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < s.vectors.size(); ++i) {
    const State& v = s.vectors[i];
    if (v.is_zero()) continue;
    auto w = homogeneous_weight(engine.preset(), v);
    if (!w) throw std::invalid_argument("generator " + to_string(v) + " is not homogeneous");
    if (*w < engine.lowest_weight()) throw std::invalid_argument("generator " + to_string(v) + " has no weight space");
    if (*w > engine.cutoff()) continue;  // cannot reach weights under the cutoff
    (void)engine.coordinates(*w, v);    // rejects states outside the preset
    idx.push_back(i);
  }
  // rank: supplied order, else the leading monomial in the global order
  auto less = [&](std::size_t a, std::size_t b) {
    if (s.order) return (*s.order)[a] < (*s.order)[b];
    const Monomial& la = s.vectors[a].terms().begin()->first;
    const Monomial& lb = s.vectors[b].terms().begin()->first;
    if (la != lb) return la < lb;
    return a < b;
  };
  std::vector<std::size_t> sorted = idx;
  std::stable_sort(sorted.begin(), sorted.end(), less);
  std::vector<Generator> out;
  for (std::size_t i : idx) {
    const std::size_t rank = std::find(sorted.begin(), sorted.end(), i) - sorted.begin();
    out.push_back({*homogeneous_weight(engine.preset(), s.vectors[i]), s.vectors[i], rank});
  }
  return out;
}

GeneratorSet reduced_generators(FiltrationEngine& engine, const GeneratorSet& s) {
  std::map<int, RowBasis> by_weight;
  for (const auto& g : prepare_generators(engine, s)) {
    if (g.weight == 0) continue;
    by_weight[g.weight].insert(engine.coordinates(g.weight, g.vector));
  }
  GeneratorSet out;
  for (const auto& [w, b] : by_weight)
    for (const auto& row : b.rows()) out.vectors.push_back(engine.state(w, row));
  return out;
}

ComplementResult complement_mod_c2(FiltrationEngine& engine, const GeneratorSet& u) {
  require_n_graded(engine);
  const auto gens = prepare_generators(engine, u);
  ComplementResult out;
  for (int w = 0; w <= engine.cutoff(); ++w) {
    RowBasis span = engine.c_component(2, w);
    for (const auto& g : gens)
      if (g.weight == w) span.insert(engine.coordinates(w, g.vector));
    if (span.rank() == engine.spaces().dim(w)) continue;
    out.holds = false;
    out.failing_weight = w;
    out.witness = inclusion_witness(engine, w, engine.full(w), span);
    break;
  }
  return out;
}

bool check_complement_mod_c2(FiltrationEngine& engine, const GeneratorSet& u) {
  return complement_mod_c2(engine, u).holds;
}

FamilySpan::FamilySpan(FiltrationEngine& engine, const GeneratorSet& s, SpanningKind kind)
    : engine_(engine), kind_(kind) {
  require_n_graded(engine);
  for (auto& g : prepare_generators(engine, s))
    if (g.weight > 0) gens_.push_back(std::move(g));
  for (const auto& g : gens_) rank_span_ = std::max(rank_span_, static_cast<long>(g.rank) + 1);
}

long FamilySpan::key(std::size_t g, int n) const {
  switch (kind_) {
    case SpanningKind::unordered: return 0;
    case SpanningKind::strict:
    case SpanningKind::weak: return n;
    case SpanningKind::ordered:
    case SpanningKind::ordered_strict:
      return static_cast<long>(n) * rank_span_ + static_cast<long>(gens_[g].rank);
  }
  return 0;
}

long FamilySpan::next_bound(long k) const {
  switch (kind_) {
    case SpanningKind::unordered: return kNoBound;
    case SpanningKind::strict:
    case SpanningKind::ordered_strict: return k;
    case SpanningKind::weak:
    case SpanningKind::ordered: return k + 1;
  }
  return kNoBound;
}

// Every key in weight w is below this, so larger bounds share one memo slot.
long FamilySpan::clip(int w, long bound) const {
  switch (kind_) {
    case SpanningKind::unordered: return 0;
    case SpanningKind::strict:
    case SpanningKind::weak: return std::min<long>(bound, w + 2);
    case SpanningKind::ordered:
    case SpanningKind::ordered_strict:
      return std::min<long>(bound, static_cast<long>(w + 2) * rank_span_);
  }
  return bound;
}

const RowBasis& FamilySpan::at(int w) { return at(w, kNoBound); }

const RowBasis& FamilySpan::at(int w, long bound) {
  if (w < 0) return kEmpty;
  const long clipped = clip(w, bound);
  if (auto it = memo_.find({w, clipped}); it != memo_.end()) return it->second;
  RowBasis b;
  const std::size_t dim = engine_.spaces().dim(w);
  if (w == 0) b.insert(SparseVector::unit(0));
  for (std::size_t g = 0; g < gens_.size() && b.rank() < dim; ++g) {
    const int a = gens_[g].weight;
    for (int n = 1; a + n - 1 <= w && b.rank() < dim; ++n) {
      const long k = key(g, n);
      if (kind_ != SpanningKind::unordered && k >= clipped) break;
      const int wx = w - a - n + 1;
      const RowBasis& inner = at(wx, next_bound(k));
      for (const auto& x : inner.rows()) {
        if (auto r = engine_.act(gens_[g].vector, -n, wx, x); r && !r->empty()) b.insert(*r);
        if (b.rank() == dim) break;
      }
    }
  }
  return memo_.emplace(std::make_pair(w, clipped), std::move(b)).first->second;
}

mpz_class FamilySpan::sequence_count(int w) {
  std::function<mpz_class(int, long)> count = [&](int wt, long bound) -> mpz_class {
    if (wt < 0) return 0;
    const long clipped = clip(wt, bound);
    if (auto it = count_memo_.find({wt, clipped}); it != count_memo_.end()) return it->second;
    mpz_class total = wt == 0 ? 1 : 0;
    for (std::size_t g = 0; g < gens_.size(); ++g) {
      for (int n = 1; gens_[g].weight + n - 1 <= wt; ++n) {
        const long k = key(g, n);
        if (kind_ != SpanningKind::unordered && k >= clipped) break;
        total += count(wt - gens_[g].weight - n + 1, next_bound(k));
      }
    }
    count_memo_.emplace(std::make_pair(wt, clipped), total);
    return total;
  };
  return count(w, kNoBound);
}

SpanningFamily spanning_vectors(FiltrationEngine& engine, const GeneratorSet& s, SpanningKind kind, int w) {
  require_n_graded(engine);
  std::vector<Generator> gens;
  for (auto& g : prepare_generators(engine, s))
    if (g.weight > 0) gens.push_back(std::move(g));
  long m = 1;
  for (const auto& g : gens) m = std::max(m, static_cast<long>(g.rank) + 1);
  auto key = [&](std::size_t g, int n) -> long {
    if (kind == SpanningKind::unordered) return 0;
    if (kind == SpanningKind::strict || kind == SpanningKind::weak) return n;
    return n * m + static_cast<long>(gens[g].rank);
  };
  auto allowed = [&](long k, long prev) {
    switch (kind) {
      case SpanningKind::unordered: return true;
      case SpanningKind::strict:
      case SpanningKind::ordered_strict: return k < prev;
      default: return k <= prev;
    }
  };
  auto& va = engine.algebra();
  // products built from the right: inner(wt, prev) lists the tails whose
  // leftmost key is compatible with a factor of key prev on their left
  std::function<std::vector<State>(int, long)> tails = [&](int wt, long prev) {
    std::vector<State> out;
    if (wt == 0) out.push_back(va.vacuum());
    for (std::size_t g = 0; g < gens.size(); ++g) {
      for (int n = 1; gens[g].weight + n - 1 <= wt; ++n) {
        const long k = key(g, n);
        if (!allowed(k, prev)) continue;
        for (const auto& x : tails(wt - gens[g].weight - n + 1, k)) {
          State r = va.mode_act(gens[g].vector, -n, x);
          if (!r.is_zero()) out.push_back(std::move(r));
        }
      }
    }
    return out;
  };
  return {kind, w, tails(w, kNoBound)};
}

SpanningFamily strict_spanning_vectors(FiltrationEngine& engine, const GeneratorSet& u, int w) {
  return spanning_vectors(engine, u, SpanningKind::strict, w);
}

ComplementResult algebra_generation(FiltrationEngine& engine, const GeneratorSet& s) {
  require_n_graded(engine);
  std::vector<Generator> gens;
  for (auto& g : prepare_generators(engine, s))
    if (g.weight > 0) gens.push_back(std::move(g));
  std::vector<RowBasis> products(engine.cutoff() + 1);
  ComplementResult out;
  for (int w = 0; w <= engine.cutoff(); ++w) {
    RowBasis& b = products[w];
    if (w == 0) b.insert(SparseVector::unit(0));
    for (const auto& g : gens) {
      if (g.weight > w) continue;
      const int wx = w - g.weight;
      for (const auto& x : products[wx].rows())
        if (auto r = engine.act(g.vector, -1, wx, x); r && !r->empty()) b.insert(*r);
    }
    if (!out.holds) continue;
    const RowBasis with_c2 = span_sum(b, engine.c_component(2, w));
    if (with_c2.rank() < engine.spaces().dim(w)) {
      out.holds = false;
      out.failing_weight = w;
      out.witness = inclusion_witness(engine, w, engine.full(w), with_c2);
    }
  }
  return out;
}

VerificationReport verify_strict_spanning(FiltrationEngine& engine, const GeneratorSet& u, const std::string& label) {
  VerificationReport report;
  const ComplementResult lhs = complement_mod_c2(engine, u);
  FamilySpan strict(engine, u, SpanningKind::strict);
  const ComplementResult rhs = first_gap(engine, strict);

  json params{{"set", label}, {"exercised", lhs.holds}, {"complement", lhs.holds}, {"strict_spans", rhs.holds},
              {"strict_ranks", per_weight_ranks(engine, strict)}, {"dims", per_weight_dims(engine)}};
  if (lhs.holds && !rhs.holds) {
    params["failing_weight"] = *rhs.failing_weight;
    report.fail("strict_spanning_forward", params, *rhs.witness);
  } else {
    report.pass("strict_spanning_forward", params, lhs.holds ? "" : "vacuous: U + C_2 misses part of V");
  }

  params = json{{"set", label}, {"exercised", rhs.holds}, {"complement", lhs.holds}, {"strict_spans", rhs.holds}};
  if (rhs.holds && !lhs.holds) {
    params["failing_weight"] = *lhs.failing_weight;
    report.fail("strict_spanning_reverse", params, *lhs.witness);
  } else {
    report.pass("strict_spanning_reverse", params, rhs.holds ? "" : "vacuous: the strict family misses part of V");
  }
  return report;
}

VerificationReport pbw_spanning_check(FiltrationEngine& engine, const GeneratorSet& s, const std::string& label) {
  VerificationReport report;
  const ComplementResult gen = algebra_generation(engine, s);
  json params{{"set", label}};
  if (!gen.holds) {
    params["failing_weight"] = *gen.failing_weight;
    report.fail("pbw_precondition_generates_V_mod_C2", params, *gen.witness);
    const std::string why = "precondition failed: S does not generate V/C_2 at weight " +
                            std::to_string(*gen.failing_weight);
    report.skip("pbw_weak_family_spans", json{{"set", label}}, why);
    report.skip("pbw_ordered_family_spans", json{{"set", label}}, why);
    return report;
  }
  report.pass("pbw_precondition_generates_V_mod_C2", params);

  for (auto [kind, name] : {std::pair{SpanningKind::weak, "pbw_weak_family_spans"},
                            std::pair{SpanningKind::ordered, "pbw_ordered_family_spans"}}) {
    FamilySpan family(engine, s, kind);
    const ComplementResult r = first_gap(engine, family);
    json counts = json::array();
    for (int w = 0; w <= engine.cutoff(); ++w) counts.push_back(family.sequence_count(w).get_str());
    json p{{"set", label},
           {"ranks", per_weight_ranks(engine, family)},
           {"dims", per_weight_dims(engine)},
           {"family_sizes", counts}};
    if (!r.holds) p["failing_weight"] = *r.failing_weight;
    report.check(name, p, r.witness);
  }
  return report;
}

GeneratingType classify_generating_type(FiltrationEngine& engine, const GeneratorSet& s, Rng& rng,
                                        VerificationReport& report, const std::string& label,
                                        int random_orders) {
  const GeneratorSet basis = s.order ? s : reduced_generators(engine, s);
  GeneratingType out;

  FamilySpan type1(engine, basis, SpanningKind::unordered);
  const ComplementResult t1 = first_gap(engine, type1);
  out.type1 = t1.holds;

  const std::size_t count = basis.vectors.size();
  // the given (or default) order first, then shuffles
  std::vector<std::optional<std::vector<std::size_t>>> orders{basis.order};
  for (int i = 0; i < random_orders; ++i) {
    std::vector<std::size_t> o(count);
    std::iota(o.begin(), o.end(), 0);
    std::shuffle(o.begin(), o.end(), rng);
    orders.emplace_back(std::move(o));
  }
  std::optional<ComplementResult> t2_failure;
  json per_order = json::array();
  for (const auto& o : orders) {
    GeneratorSet ordered = basis;
    ordered.order = o;
    FamilySpan type2(engine, ordered, SpanningKind::ordered);
    const ComplementResult r = first_gap(engine, type2);
    per_order.push_back(r.holds);
    if (!r.holds && !t2_failure) t2_failure = r;
  }
  out.type2 = !t2_failure;

  const ComplementResult gen = algebra_generation(engine, basis);
  out.algebra_gen = gen.holds;
  out.type0_implied = out.type1;

  json params{{"set", label},
              {"generators", count},
              {"type1", out.type1},
              {"type2", out.type2},
              {"algebra_gen", out.algebra_gen},
              {"type0", out.type1 ? "implied by type 1" : "not decided"},
              {"type2_per_order", per_order}};
  if (out.type1 == out.type2 && out.type2 == out.algebra_gen) {
    report.pass("generating_type_equivalence", params);
  } else {
    // a vector that one of the spanning notions misses
    const ComplementResult& miss = !t1.holds ? t1 : t2_failure ? *t2_failure : gen;
    params["failing_weight"] = *miss.failing_weight;
    report.fail("generating_type_equivalence", params, *miss.witness);
  }
  return out;
}

bool partial_reduction_identity(GrAlgebra& gr, const GrElement& a, const GrElement& b, int k) {
  auto d = [&](GrElement x, int times) {
    for (int i = 0; i < times; ++i) x = gr.partial(x);
    return x;
  };
  const GrElement lhs = gr.scale(Scalar(binomial(2 * k, k)), gr.product(d(a, k), d(b, k)));
  GrElement rhs = d(gr.product(a, b), 2 * k);
  rhs = gr.subtract(rhs, gr.product(d(a, 2 * k), b));
  rhs = gr.subtract(rhs, gr.product(d(b, 2 * k), a));
  for (int i = 1; i <= k - 1; ++i) {
    const GrElement pair = gr.add(gr.product(d(a, 2 * k - i), d(b, i)), gr.product(d(a, i), d(b, 2 * k - i)));
    rhs = gr.subtract(rhs, gr.scale(Scalar(binomial(2 * k, i)), pair));
  }
  return lhs == rhs;
}

VerificationReport verify_reduction_identity(GrAlgebra& gr, Rng& rng, int pairs, const std::vector<int>& ks) {
  VerificationReport report;
  const int top = gr.engine().cutoff();
  for (int k : ks) {
    json params{{"k", k}, {"pairs", pairs}};
    if (2 * k > gr.max_degree() || 2 * k > top) {
      report.skip("partial_reduction_identity", params, "degree 2k is outside the computed range");
      continue;
    }
    std::vector<int> weights;
    for (int w = 0; w <= top - 2 * k; ++w)
      if (!gr.quotient_basis(0, w).empty()) weights.push_back(w);
    auto draw = [&](int budget) {
      std::vector<int> ok;
      for (int w : weights)
        if (w <= budget) ok.push_back(w);
      const int w = ok.at(random_int(rng, 0, static_cast<int>(ok.size()) - 1));
      const auto& basis = gr.quotient_basis(0, w);
      State rep;
      for (int t = 0, terms = random_int(rng, 1, std::min<int>(2, basis.size())); t < terms; ++t)
        rep.axpy(random_coefficient(rng), basis[random_int(rng, 0, static_cast<int>(basis.size()) - 1)]);
      return gr.element(0, w, rep);
    };
    std::optional<State> wit;
    for (int p = 0; p < pairs && !wit; ++p) {
      const GrElement a = draw(top - 2 * k);
      const GrElement b = draw(top - 2 * k - a.weight);
      if (!partial_reduction_identity(gr, a, b, k)) {
        wit = a.representative;
        params["failing_pair"] = {to_string(a.representative), to_string(b.representative)};
      }
    }
    report.check("partial_reduction_identity", params, wit);
  }
  return report;
}

VerificationReport verify_spanning_for(FiltrationEngine& engine, const GeneratorSet& s, Rng& rng) {
  VerificationReport report;
  report.append(verify_strict_spanning(engine, s, "generators"));
  report.append(pbw_spanning_check(engine, s, "generators"));
  classify_generating_type(engine, s, rng, report, "generators");
  return report;
}

VerificationReport verify_spanning_suite(FiltrationEngine& engine, Rng& rng, int random_sets) {
  VerificationReport report;
  if (!engine.preset().is_n_graded()) {
    report.skip("spanning_suite", json{{"preset", engine.preset().name()}}, "needs an N-graded preset");
    return report;
  }
  auto& va = engine.algebra();
  const int top = engine.cutoff();
  const bool lattice = engine.preset().kind() == AlgebraPreset::Kind::lattice;

  GeneratorSet full;
  for (int w = 0; w <= top; ++w)
    for (const auto& m : engine.spaces().basis(w)) full.vectors.emplace_back(m);
  const GeneratorSet b{{va.generator()}, {}};

  std::vector<std::pair<std::string, GeneratorSet>> complements;
  std::vector<std::pair<std::string, GeneratorSet>> classified;
  GeneratorSet pbw_set;
  if (!lattice) {
    GeneratorSet powers;
    for (int m = 0; m <= top; ++m) powers.vectors.emplace_back(Monomial{std::vector<int>(m, 1), 0});
    complements = {{"b_powers", powers}, {"b", b}, {"full_basis", full}};
    classified = {{"b", b}, {"b_minus2", monomial_set({Monomial{{2}, 0}})}, {"b_powers", powers}};
    pbw_set = b;
  } else {
    ZhuAlgebra zhu(engine);
    GeneratorSet lifts;
    for (int w = 0; w <= top; ++w)
      for (auto& v : zhu.quotient_basis(w)) lifts.vectors.push_back(std::move(v));
    pbw_set = GeneratorSet{{va.generator(), va.lattice_vector(1), va.lattice_vector(-1)}, {}};
    complements = {{"quotient_lifts", lifts}, {"b", b}, {"full_basis", full}};
    classified = {{"b_e_plus_e_minus", pbw_set}, {"b", b}, {"quotient_lifts", lifts}};
  }
  for (const auto& [label, set] : complements) report.append(verify_strict_spanning(engine, set, label));
  report.append(pbw_spanning_check(engine, pbw_set, lattice ? "b_e_plus_e_minus" : "b"));
  for (const auto& [label, set] : classified) classify_generating_type(engine, set, rng, report, label);

  for (int i = 0; i < random_sets; ++i) {
    GeneratorSet set;
    const int size = random_int(rng, 1, 3);
    for (int j = 0; j < size; ++j) {
      const int w = random_int(rng, 1, std::min(3, top));
      set.vectors.push_back(random_homogeneous_state(va, w, rng, {}, 2));
    }
    classify_generating_type(engine, set, rng, report, "random_" + std::to_string(i));
  }

  GrAlgebra gr(engine, 4);
  report.append(verify_reduction_identity(gr, rng, 20, {1, 2}));
  return report;
}

}  // namespace vfilt
