#include "vfilt/filtration.hpp"

#include <stdexcept>
#include <string>

namespace vfilt {
namespace {

const RowBasis kEmptyBasis;

int lowest_weight_of(const AlgebraPreset& preset, std::optional<int> window) {
  if (preset.is_n_graded()) return 0;
  // gram < 0: the deepest sector inside the window.
  return preset.sector_lowest_weight(*window);
}

bool full_rank(const RowBasis& b, std::size_t dim) { return b.rank() == dim; }

}  // namespace

WeightSpaces::WeightSpaces(const VertexAlgebra& algebra, int cutoff,
                           std::optional<int> lattice_window)
    : cutoff_(cutoff), window_(lattice_window) {
  const auto& preset = algebra.preset();
  if (preset.requires_window()) {
    if (!window_) {
      // basis_of_weight produces the diagnostic
      (void)algebra.basis_of_weight(cutoff);
    }
    if (*window_ < 0) throw std::invalid_argument("lattice window must be >= 0");
  } else {
    window_.reset();
  }
  lowest_ = lowest_weight_of(preset, window_);
  for (int w = lowest_; w <= cutoff_; ++w) {
    bases_.push_back(algebra.basis_of_weight(w, window_));
    auto& idx = index_.emplace_back();
    for (std::size_t i = 0; i < bases_.back().size(); ++i) idx.emplace(bases_.back()[i], i);
  }
}

const std::vector<Monomial>& WeightSpaces::basis(int w) const {
  static const std::vector<Monomial> empty;
  if (w > cutoff_) {
    throw CutoffExceeded("weight " + std::to_string(w) + " exceeds the cutoff " +
                         std::to_string(cutoff_) + "; raise --max-weight");
  }
  if (w < lowest_) return empty;
  return bases_[w - lowest_];
}

std::optional<std::size_t> WeightSpaces::index(int w, const Monomial& m) const {
  if (w > cutoff_ || w < lowest_) return std::nullopt;
  const auto& idx = index_[w - lowest_];
  if (auto it = idx.find(m); it != idx.end()) return it->second;
  return std::nullopt;
}

std::optional<SparseVector> WeightSpaces::coordinates(int w, const State& s) const {
  std::vector<SparseVector::Entry> entries;
  entries.reserve(s.size());
  for (const auto& [m, c] : s.terms()) {
    auto i = index(w, m);
    if (!i) return std::nullopt;
    entries.emplace_back(*i, c);
  }
  return SparseVector::from_entries(std::move(entries));
}

State WeightSpaces::state(int w, const SparseVector& v) const {
  State out;
  const auto& b = basis(w);
  for (const auto& [i, c] : v.entries()) out.add_term(b.at(i), c);
  return out;
}

const RowBasis& GradedSubspace::at(int w) const {
  if (auto it = components.find(w); it != components.end()) return it->second;
  return kEmptyBasis;
}

Family parse_family(const std::string& text) {
  if (text == "E") return Family::E;
  if (text == "C") return Family::C;
  if (text == "EU") return Family::EU;
  throw std::invalid_argument("unknown filtration family '" + text + "' (expected E, C or EU)");
}

std::string family_name(Family f) {
  switch (f) {
    case Family::E: return "E";
    case Family::C: return "C";
    case Family::EU: return "EU";
  }
  return "?";
}

FiltrationEngine::FiltrationEngine(AlgebraPreset preset, int weight_cutoff,
                                   std::optional<int> lattice_window)
    : algebra_(preset), spaces_(algebra_, weight_cutoff, lattice_window) {}

void FiltrationEngine::require_weight(int w) const {
  if (w > cutoff()) {
    throw CutoffExceeded("weight " + std::to_string(w) + " exceeds the cutoff " +
                         std::to_string(cutoff()) + "; raise --max-weight");
  }
}

const std::vector<Monomial>& FiltrationEngine::generators_of_weight(int a) const {
  if (auto it = generators_.find(a); it != generators_.end()) return it->second;
  auto basis = algebra_.basis_of_weight(a, window());
  std::erase_if(basis, [](const Monomial& m) { return m.is_vacuum(); });
  return generators_.emplace(a, std::move(basis)).first->second;
}

std::optional<SparseVector> FiltrationEngine::act(const Monomial& u, int n, int wx,
                                                  const SparseVector& x) {
  const int wr = algebra_.weight(u) + wx - n - 1;
  if (x.empty()) return SparseVector{};
  require_weight(wr);
  if (wr < lowest_weight()) {
    // Below the window floor: only possible for terms outside the window.
    State r;
    for (const auto& [i, c] : x.entries())
      r.axpy(c, algebra_.mode_act(u, n, spaces_.basis(wx).at(i)));
    if (r.is_zero()) return SparseVector{};
    return std::nullopt;
  }
  std::vector<SparseVector::Entry> entries;
  const auto& source = spaces_.basis(wx);
  for (const auto& [i, c] : x.entries()) {
    const State& r = algebra_.mode_act(u, n, source.at(i));
    for (const auto& [m, a] : r.terms()) {
      auto idx = spaces_.index(wr, m);
      if (!idx) return std::nullopt;
      entries.emplace_back(*idx, c * a);
    }
  }
  return SparseVector::from_entries(std::move(entries));
}

std::optional<SparseVector> FiltrationEngine::act(const State& u, int n, int wx,
                                                  const SparseVector& x) {
  std::optional<SparseVector> out;
  for (const auto& [m, c] : u.terms()) {
    auto piece = act(m, n, wx, x);
    if (!piece) return std::nullopt;
    if (!out) out.emplace();
    out->axpy(c, *piece);
  }
  if (!out) return SparseVector{};
  return out;
}

SparseVector FiltrationEngine::coordinates(int w, const State& s) const {
  auto v = spaces_.coordinates(w, s);
  if (!v) {
    throw std::invalid_argument("state " + to_string(s) + " is not inside V_(" +
                                std::to_string(w) + ") as enumerated");
  }
  return *v;
}

const RowBasis& FiltrationEngine::full(int w) {
  require_weight(w);
  if (auto it = full_.find(w); it != full_.end()) return it->second;
  RowBasis b;
  for (std::size_t i = 0; i < spaces_.dim(w); ++i) b.insert(SparseVector::unit(i));
  return full_.emplace(w, std::move(b)).first->second;
}

const RowBasis& FiltrationEngine::c_component(int n, int w) {
  if (n < 2) throw std::invalid_argument("C_n is defined for n >= 2");
  require_weight(w);
  if (w < lowest_weight()) return kEmptyBasis;
  if (auto it = c_.find({n, w}); it != c_.end()) return it->second;

  // span{u_{-n} v : wt u + wt v + n - 1 = w}
  RowBasis b;
  const std::size_t dim = spaces_.dim(w);
  const int pair_weight = w - n + 1;
  for (int a = lowest_weight(); a - lowest_weight() <= pair_weight - 2 * lowest_weight() &&
                                !full_rank(b, dim);
       ++a) {
    const int wv = pair_weight - a;
    if (wv < lowest_weight() || wv > cutoff()) continue;
    for (const auto& u : generators_of_weight(a)) {
      for (std::size_t j = 0; j < spaces_.dim(wv) && !full_rank(b, dim); ++j) {
        if (auto r = act(u, -n, wv, SparseVector::unit(j)); r && !r->empty()) b.insert(*r);
      }
    }
  }
  return c_.emplace(Key{n, w}, std::move(b)).first->second;
}

const RowBasis& FiltrationEngine::e_component(int n, int w) {
  if (n <= 0) return full(w);
  require_weight(w);
  if (w < lowest_weight()) return kEmptyBasis;
  if (auto it = e_.find({n, w}); it != e_.end()) return it->second;

  // E_n = sum over u != 1, k >= 1 of u_{-1-k} E_{n-k}
  RowBasis b;
  const std::size_t dim = spaces_.dim(w);
  for (int k = 1; w - k - 2 * lowest_weight() >= 0 && !full_rank(b, dim); ++k) {
    for (int a = lowest_weight(); a <= w - k - lowest_weight() && !full_rank(b, dim); ++a) {
      const int wx = w - a - k;
      if (wx > cutoff()) continue;
      const auto& gens = generators_of_weight(a);
      if (gens.empty()) continue;
      // copy: recursion may rehash nothing here (std::map is node based) but
      // keep the rows stable regardless
      const std::vector<SparseVector> rows = e_component(n - k, wx).rows();
      for (const auto& u : gens) {
        for (const auto& x : rows) {
          if (full_rank(b, dim)) break;
          if (auto r = act(u, -1 - k, wx, x); r && !r->empty()) b.insert(*r);
        }
      }
    }
  }
  return e_.emplace(Key{n, w}, std::move(b)).first->second;
}

const RowBasis& FiltrationEngine::eu_component(int n, int w) {
  if (!preset().is_n_graded()) {
    throw std::invalid_argument("the increasing filtration needs an N-graded preset with V_(0) = C1");
  }
  if (n < 0) return kEmptyBasis;
  require_weight(w);
  if (w < 0) return kEmptyBasis;
  if (auto it = eu_.find({n, w}); it != eu_.end()) return it->second;

  // span of u^(1)_{-k_1} ... u^(r)_{-k_r} 1 with u^(i) in V_+, k_i >= 1 and
  // total generator weight <= n; peel off the leftmost factor.
  RowBasis b;
  const std::size_t dim = spaces_.dim(w);
  if (w == 0) b.insert(SparseVector::unit(0));
  for (int a = 1; a <= std::min(n, w) && !full_rank(b, dim); ++a) {
    const auto& gens = generators_of_weight(a);
    for (int k = 1; w - a - k + 1 >= 0 && !full_rank(b, dim); ++k) {
      const int wx = w - a - k + 1;
      const std::vector<SparseVector> rows = eu_component(n - a, wx).rows();
      for (const auto& u : gens) {
        for (const auto& x : rows) {
          if (full_rank(b, dim)) break;
          if (auto r = act(u, -k, wx, x); r && !r->empty()) b.insert(*r);
        }
      }
    }
  }
  return eu_.emplace(Key{n, w}, std::move(b)).first->second;
}

GradedSubspace FiltrationEngine::collect(const std::function<const RowBasis&(int)>& component) {
  GradedSubspace out{preset(), cutoff(), lowest_weight(), window(), {}};
  for (int w = lowest_weight(); w <= cutoff(); ++w) {
    const RowBasis& b = component(w);
    if (!b.empty()) out.components.emplace(w, b);
  }
  return out;
}

GradedSubspace FiltrationEngine::compute_cn(int n) {
  if (n < 2) throw std::invalid_argument("C_n is defined for n >= 2");
  return collect([&](int w) -> const RowBasis& { return c_component(n, w); });
}

GradedSubspace FiltrationEngine::compute_en(int n) {
  if (n < 0) throw std::invalid_argument("compute_En expects n >= 0");
  return collect([&](int w) -> const RowBasis& { return e_component(n, w); });
}

GradedSubspace FiltrationEngine::compute_increasing_eu(int n) {
  if (n < 0) throw std::invalid_argument("compute_increasing_EU expects n >= 0");
  return collect([&](int w) -> const RowBasis& { return eu_component(n, w); });
}

FiltrationTable filtration_table(FiltrationEngine& engine, Family family, int max_n) {
  FiltrationTable t;
  t.preset = engine.preset();
  t.family = family;
  t.max_n = max_n;
  t.weight_cutoff = engine.cutoff();
  t.lowest_weight = engine.lowest_weight();
  t.lattice_window = engine.window();
  for (int w = t.lowest_weight; w <= t.weight_cutoff; ++w) t.ambient.push_back(engine.spaces().dim(w));
  for (int n = family == Family::C ? 2 : 0; n <= max_n; ++n) {
    t.ns.push_back(n);
    auto& row = t.dims.emplace_back();
    for (int w = t.lowest_weight; w <= t.weight_cutoff; ++w) {
      switch (family) {
        case Family::E: row.push_back(engine.e_component(n, w).rank()); break;
        case Family::C: row.push_back(engine.c_component(n, w).rank()); break;
        case Family::EU: row.push_back(engine.eu_component(n, w).rank()); break;
      }
    }
  }
  return t;
}

}  // namespace vfilt
