#include "vfilt/poisson.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vfilt {
namespace {

std::map<int, State> split_by_weight(const AlgebraPreset& preset, const State& s) {
  std::map<int, State> out;
  for (const auto& [m, c] : s.terms()) out[preset.weight(m)].add_term(m, c);
  return out;
}

void require_n_graded(const AlgebraPreset& preset) {
  if (!preset.is_n_graded()) {
    throw std::invalid_argument("preset " + preset.name() + " is not N-graded");
  }
}

void require_under_cutoff(const FiltrationEngine& engine, int w) {
  if (w > engine.cutoff()) {
    throw CutoffExceeded("result weight " + std::to_string(w) + " exceeds the cutoff " +
                         std::to_string(engine.cutoff()) + "; raise --max-weight");
  }
}

}  // namespace

ZhuAlgebra::ZhuAlgebra(FiltrationEngine& engine) : engine_(engine) {
  require_n_graded(engine.preset());
}

ZhuElement ZhuAlgebra::element(const State& v) {
  State rep;
  for (const auto& [w, part] : split_by_weight(engine_.preset(), v)) {
    require_under_cutoff(engine_, w);
    SparseVector r = engine_.c_component(2, w).reduce(engine_.coordinates(w, part));
    rep += engine_.state(w, r);
  }
  return {rep};
}

ZhuElement ZhuAlgebra::one() { return {engine_.algebra().vacuum()}; }

ZhuElement ZhuAlgebra::mode(const ZhuElement& a, int n, const ZhuElement& b) {
  const auto& preset = engine_.preset();
  const auto pa = split_by_weight(preset, a.representative);
  const auto pb = split_by_weight(preset, b.representative);
  // check every weight first so an overflow does not leave half a result
  for (const auto& [wa, x] : pa)
    for (const auto& [wb, y] : pb) require_under_cutoff(engine_, wa + wb - n - 1);
  return element(engine_.algebra().mode_act(a.representative, n, b.representative));
}

ZhuElement ZhuAlgebra::product(const ZhuElement& a, const ZhuElement& b) { return mode(a, -1, b); }

ZhuElement ZhuAlgebra::bracket(const ZhuElement& a, const ZhuElement& b) { return mode(a, 0, b); }

std::vector<State> ZhuAlgebra::quotient_basis(int w) {
  std::vector<State> out;
  const auto pivots = engine_.c_component(2, w).pivots();
  const auto& basis = engine_.spaces().basis(w);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!std::binary_search(pivots.begin(), pivots.end(), i)) out.emplace_back(basis[i]);
  }
  return out;
}

GrAlgebra::GrAlgebra(FiltrationEngine& engine, int max_degree)
    : engine_(engine), max_degree_(max_degree) {
  require_n_graded(engine.preset());
  if (max_degree < 0) throw std::invalid_argument("max degree must be >= 0");
}

void GrAlgebra::require_degree(int degree) const {
  if (degree > max_degree_) {
    throw std::out_of_range("gr degree " + std::to_string(degree) + " exceeds the computed range " +
                            std::to_string(max_degree_));
  }
}

GrElement GrAlgebra::reduce(int degree, int w, const State& v, bool trusted) {
  require_degree(degree);
  if (degree < 0 || v.is_zero()) return zero(degree, w);
  require_under_cutoff(engine_, w);
  SparseVector x = engine_.coordinates(w, v);
  if (!contains(engine_.e_component(degree, w), x)) {
    const std::string what = to_string(v) + " is not in E_" + std::to_string(degree);
    if (trusted) throw std::logic_error("invariant breach: " + what);
    throw std::invalid_argument(what);
  }
  x = engine_.e_component(degree + 1, w).reduce(std::move(x));
  return {degree, w, engine_.state(w, x)};
}

GrElement GrAlgebra::element(int degree, int w, const State& v) {
  if (degree < 0) throw std::invalid_argument("gr degree must be >= 0");
  if (auto hw = homogeneous_weight(engine_.preset(), v); hw && *hw != w) {
    throw std::invalid_argument(to_string(v) + " does not have weight " + std::to_string(w));
  } else if (!hw && !v.is_zero()) {
    throw std::invalid_argument(to_string(v) + " is not homogeneous");
  }
  return reduce(degree, w, v, false);
}

GrElement GrAlgebra::one() { return element(0, 0, engine_.algebra().vacuum()); }

GrElement GrAlgebra::add(const GrElement& a, const GrElement& b) const {
  if (a.degree != b.degree || a.weight != b.weight) {
    throw std::invalid_argument("adding gr classes of different bidegree");
  }
  return {a.degree, a.weight, a.representative + b.representative};
}

GrElement GrAlgebra::scale(const Scalar& c, GrElement a) const {
  a.representative *= c;
  return a;
}

GrElement GrAlgebra::product(const GrElement& a, const GrElement& b) {
  const int degree = a.degree + b.degree;
  const int w = a.weight + b.weight;
  require_degree(degree);
  if (a.is_zero() || b.is_zero()) return zero(degree, w);
  return reduce(degree, w, engine_.algebra().mode_act(a.representative, -1, b.representative), true);
}

GrElement GrAlgebra::partial(const GrElement& a) {
  require_degree(a.degree + 1);
  if (a.is_zero()) return zero(a.degree + 1, a.weight + 1);
  return reduce(a.degree + 1, a.weight + 1, engine_.algebra().d_operator(a.representative), true);
}

GrElement GrAlgebra::yminus(const GrElement& a, int n, const GrElement& b) {
  if (n < 0) throw std::invalid_argument("Y_- mode index must be >= 0");
  const int degree = a.degree + b.degree - n;
  const int w = a.weight + b.weight - n - 1;
  require_degree(degree);
  if (degree < 0 || a.is_zero() || b.is_zero()) return zero(degree, w);
  return reduce(degree, w, engine_.algebra().mode_act(a.representative, n, b.representative), true);
}

std::vector<State> GrAlgebra::quotient_basis(int degree, int w) {
  require_degree(degree);
  if (auto it = quotient_bases_.find({degree, w}); it != quotient_bases_.end()) return it->second;
  std::vector<State> out;
  if (w >= engine_.lowest_weight()) {
    const RowBasis& deeper = engine_.e_component(degree + 1, w);
    RowBasis seen = deeper;
    for (const auto& row : engine_.e_component(degree, w).rows()) {
      if (seen.insert(row)) out.push_back(engine_.state(w, deeper.reduce(row)));
    }
  }
  return quotient_bases_.emplace(std::make_pair(degree, w), std::move(out)).first->second;
}

}  // namespace vfilt
