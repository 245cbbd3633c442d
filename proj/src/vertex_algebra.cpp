#include "vfilt/vertex_algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace vfilt {
namespace {

constexpr int kMaxRecursionDepth = 512;

using Partition = std::vector<int>;

// Partitions of d with parts <= max_part, lexicographically largest first.
void append_partitions(int d, int max_part, Partition& prefix, std::vector<Partition>& out) {
  if (d == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(d, max_part); k >= 1; --k) {
    prefix.push_back(k);
    append_partitions(d - k, k, prefix, out);
    prefix.pop_back();
  }
}

Partition merge_parts(const Partition& a, const Partition& b) {
  Partition out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out),
             std::greater<>());
  return out;
}

int max_part(const Monomial& m) { return m.hpart.empty() ? 0 : m.hpart.front(); }

}  // namespace

mpz_class binomial(long top, unsigned long k) {
  mpz_class out;
  mpz_class t(top);
  mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), k);
  return out;
}

std::size_t VertexAlgebra::ModeKeyHash::operator()(const ModeKey& k) const noexcept {
  MonomialHash h;
  return (h(k.u) * 31 + static_cast<std::size_t>(k.n + 1000003)) * 0x9e3779b97f4a7c15ULL ^ h(k.v);
}

VertexAlgebra::VertexAlgebra(AlgebraPreset preset) : preset_(preset) {}

State VertexAlgebra::vacuum() const { return State(Monomial{}); }

State VertexAlgebra::generator() const { return State(Monomial{{1}, 0}); }

State VertexAlgebra::lattice_vector(int p) const {
  if (preset_.kind() != AlgebraPreset::Kind::lattice && p != 0) {
    throw std::invalid_argument("lattice vectors are undefined in preset " + preset_.name());
  }
  return State(Monomial{{}, p});
}

std::vector<Monomial> VertexAlgebra::basis_of_weight(int w, std::optional<int> lattice_window) const {
  std::vector<Monomial> out;
  auto add_sector = [&](int p) {
    const int d = w - preset_.sector_lowest_weight(p);
    if (d < 0) return;
    std::vector<Partition> parts;
    Partition prefix;
    append_partitions(d, d, prefix, parts);
    for (auto& part : parts) out.push_back(Monomial{std::move(part), p});
  };

  if (preset_.kind() == AlgebraPreset::Kind::heisenberg) {
    add_sector(0);
    return out;
  }
  if (preset_.requires_window() && !lattice_window) {
    throw InfiniteWeightSpace(
        "weight spaces of " + preset_.name() +
        " are infinite-dimensional (wt e^{m alpha} = m^2 * gram / 2 is unbounded below); "
        "supply a lattice window bounding |lpoint|");
  }
  for (int a = 0;; ++a) {
    if (preset_.requires_window()) {
      if (a > *lattice_window) break;
    } else if (preset_.sector_lowest_weight(a) > w) {
      break;
    }
    add_sector(a);
    if (a != 0) add_sector(-a);
  }
  return out;
}

void VertexAlgebra::require_admitted(const Monomial& m) const {
  if (!preset_.admits(m)) {
    throw std::invalid_argument("monomial " + to_string(m) + " does not belong to preset " +
                                preset_.name());
  }
}

State VertexAlgebra::generator_mode(int j, const Monomial& m) const {
  if (j < 0) {
    Monomial out = m;
    out.hpart.insert(std::upper_bound(out.hpart.begin(), out.hpart.end(), -j, std::greater<>()),
                     -j);
    return State(std::move(out));
  }
  if (j == 0) return State(m, Scalar(preset_.pairing()) * m.lpoint);
  const auto [first, last] = std::equal_range(m.hpart.begin(), m.hpart.end(), j, std::greater<>());
  const long multiplicity = last - first;
  if (multiplicity == 0) return {};
  Monomial out = m;
  out.hpart.erase(out.hpart.begin() + (first - m.hpart.begin()));
  return State(std::move(out), Scalar(static_cast<long>(j) * preset_.pairing() * multiplicity));
}

State VertexAlgebra::generator_mode(int j, const State& v) const {
  State out;
  for (const auto& [m, c] : v.terms()) {
    require_admitted(m);
    out.axpy(c, generator_mode(j, m));
  }
  return out;
}

const std::map<Partition, Scalar>& VertexAlgebra::creation_polynomial(int p, int d) {
  if (auto it = creation_cache_.find({p, d}); it != creation_cache_.end()) return it->second;
  // Coefficient of x^d in exp(p * sum_{j>0} b_{-j} x^j / j), as a polynomial in
  // the commuting creation operators: d P_d = p * sum_{j=1}^d b_{-j} P_{d-j}.
  std::map<Partition, Scalar> poly;
  if (d == 0) {
    poly.emplace(Partition{}, Scalar(1));
  } else {
    const Scalar scale = Scalar(p) / d;
    for (int j = 1; j <= d; ++j) {
      for (const auto& [part, c] : creation_polynomial(p, d - j)) {
        auto key = merge_parts(part, Partition{j});
        auto [it, inserted] = poly.try_emplace(std::move(key), scale * c);
        if (!inserted) it->second += scale * c;
      }
    }
    std::erase_if(poly, [](const auto& kv) { return sgn(kv.second) == 0; });
  }
  return creation_cache_.emplace(std::make_pair(p, d), std::move(poly)).first->second;
}

State VertexAlgebra::lattice_mode(int p, int n, const Monomial& v) {
  // Y(e^{p alpha}, x) = E^-(-p alpha, x) E^+(-p alpha, x) e_{p alpha} x^{p alpha(0)}
  // with the trivial cocycle. On b_{-lambda} e^{q alpha} the power x^{p q gram}
  // is fixed; E^+ lowers oscillator degree by d_plus and contributes x^{-d_plus},
  // E^- raises it by d_minus and contributes x^{d_minus}.
  const long base_power = static_cast<long>(p) * v.lpoint * preset_.gram();

  // Degree pieces of E^+ applied to v: Q_d = (-p / d) sum_{j=1}^d b_j Q_{d-j}.
  std::vector<State> lowered{State(v)};
  for (int d = 1; d <= v.degree(); ++d) {
    State piece;
    for (int j = 1; j <= d; ++j) piece += generator_mode(j, lowered[d - j]);
    piece *= Scalar(-p) / d;
    lowered.push_back(std::move(piece));
  }

  State out;
  for (int d_plus = 0; d_plus < static_cast<int>(lowered.size()); ++d_plus) {
    const long d_minus = -static_cast<long>(n) - 1 - base_power + d_plus;
    if (d_minus < 0 || lowered[d_plus].is_zero()) continue;
    const auto& creation = creation_polynomial(p, static_cast<int>(d_minus));
    for (const auto& [m, c] : lowered[d_plus].terms()) {
      for (const auto& [part, e] : creation) {
        out.add_term(Monomial{merge_parts(m.hpart, part), m.lpoint + p}, c * e);
      }
    }
  }
  return out;
}

State VertexAlgebra::compute_mode(const Monomial& u, int n, const Monomial& v) {
  if (u.hpart.empty()) {
    if (u.lpoint == 0) return n == -1 ? State(v) : State();
    return lattice_mode(u.lpoint, n, v);
  }

  // u = b_{-k} u'. Iterate formula with m = -k:
  //   (b_{-k} u')_n v = sum_i C(k+i-1, i) b_{-k-i} u'_{n+i} v
  //                     - (-1)^k sum_i C(k+i-1, i) u'_{n-k-i} b_i v
  const int k = u.hpart.front();
  const Monomial rest{Partition(u.hpart.begin() + 1, u.hpart.end()), u.lpoint};
  const int lowest = preset_.sector_lowest_weight(rest.lpoint + v.lpoint);
  const int first_terms = weight(rest) + weight(v) - n - 1 - lowest;

  State out;
  for (int i = 0; i <= first_terms; ++i) {
    const State& inner = mode_act(rest, n + i, v);
    if (inner.is_zero()) continue;
    out.axpy(Scalar(binomial(k + i - 1, i)), generator_mode(-k - i, inner));
  }

  const Scalar sign = (k % 2 == 0) ? Scalar(-1) : Scalar(1);
  for (int i = 0; i <= max_part(v); ++i) {
    const State lowered = generator_mode(i, v);
    if (lowered.is_zero()) continue;
    const Scalar c = sign * Scalar(binomial(k + i - 1, i));
    for (const auto& [m, a] : lowered.terms()) out.axpy(c * a, mode_act(rest, n - k - i, m));
  }
  return out;
}

const State& VertexAlgebra::mode_act(const Monomial& u, int n, const Monomial& v) {
  ModeKey key{u, n, v};
  if (auto it = mode_cache_.find(key); it != mode_cache_.end()) return it->second;
  if (depth_ >= kMaxRecursionDepth) {
    throw std::logic_error("mode recursion exceeded depth " + std::to_string(kMaxRecursionDepth) +
                           "; truncation bound is not terminating");
  }
  struct DepthGuard {
    int& depth;
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
  } guard(depth_);
  State value = compute_mode(u, n, v);
  return mode_cache_.emplace(std::move(key), std::move(value)).first->second;
}

State VertexAlgebra::mode_act(const State& u, int n, const State& v) {
  State out;
  for (const auto& [mu, cu] : u.terms()) {
    require_admitted(mu);
    for (const auto& [mv, cv] : v.terms()) {
      require_admitted(mv);
      out.axpy(cu * cv, mode_act(mu, n, mv));
    }
  }
  return out;
}

State VertexAlgebra::d_operator(const State& v) { return mode_act(v, -2, vacuum()); }

std::optional<int> VertexAlgebra::max_nonzero_mode(const State& u, const State& v) const {
  std::optional<int> best;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) {
      const int bound =
          weight(mu) + weight(mv) - 1 - preset_.sector_lowest_weight(mu.lpoint + mv.lpoint);
      best = best ? std::max(*best, bound) : bound;
    }
  }
  return best;
}

IdentityCheck VertexAlgebra::check_commutator(const State& u, int m, const State& v, int n,
                                              const State& w) {
  State lhs = mode_act(u, m, mode_act(v, n, w)) - mode_act(v, n, mode_act(u, m, w));
  State rhs;
  if (auto top = max_nonzero_mode(u, v)) {
    for (int i = 0; i <= *top; ++i) {
      const State uv = mode_act(u, i, v);
      if (uv.is_zero()) continue;
      rhs.axpy(Scalar(binomial(m, i)), mode_act(uv, m + n - i, w));
    }
  }
  IdentityCheck result;
  result.residual = lhs - rhs;
  result.holds = result.residual.is_zero();
  return result;
}

IdentityCheck VertexAlgebra::translation_series_check(const State& v, int k) {
  if (k < 0) throw std::invalid_argument("translation_series_check needs k >= 0");
  State lhs = mode_act(v, -1 - k, vacuum());
  State rhs = v;
  mpz_class factorial = 1;
  for (int i = 1; i <= k; ++i) {
    rhs = d_operator(rhs);
    factorial *= i;
  }
  rhs *= Scalar(1) / Scalar(factorial);
  IdentityCheck result;
  result.residual = lhs - rhs;
  result.holds = result.residual.is_zero();
  return result;
}

}  // namespace vfilt
