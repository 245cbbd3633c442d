#pragma once

// Test-only oracle for u_n v in the Heisenberg and rank-1 lattice presets.
//
// Evaluates the vertex operator of b_{-k_1}...b_{-k_r} e^{p alpha} as the
// fully normal-ordered free-field product
//     sum over S of  prod_{i in S} d^{(k_i-1)} b^-(x) * Y(e^{p alpha}, x) * prod_{i not in S} d^{(k_i-1)} b^+(x)
// acting on v, with the exponentials expanded factor by factor. Shares only
// the data types with the library; none of its recursion or caches.

#include "vfilt/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

namespace vfilt::oracle {

using Series = std::map<long, State>;  // power of x -> coefficient

inline mpz_class binom(long top, unsigned long k) {
  mpz_class out, t(top);
  mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), k);
  return out;
}

inline State apply_b(const AlgebraPreset& preset, int j, const State& s) {
  State out;
  for (const auto& [m, c] : s.terms()) {
    if (j < 0) {
      Monomial r = m;
      r.hpart.push_back(-j);
      std::sort(r.hpart.begin(), r.hpart.end(), std::greater<>());
      out.add_term(r, c);
    } else if (j == 0) {
      out.add_term(m, c * preset.pairing() * m.lpoint);
    } else {
      auto it = std::find(m.hpart.begin(), m.hpart.end(), j);
      if (it == m.hpart.end()) continue;
      const long mult = std::count(m.hpart.begin(), m.hpart.end(), j);
      Monomial r = m;
      r.hpart.erase(r.hpart.begin() + (it - m.hpart.begin()));
      out.add_term(r, c * Scalar(static_cast<long>(j) * preset.pairing() * mult));
    }
  }
  return out;
}

inline void add_to(Series& s, long power, const State& x, const Scalar& c) {
  if (x.is_zero() || sgn(c) == 0) return;
  auto& slot = s[power];
  slot.axpy(c, x);
  if (slot.is_zero()) s.erase(power);
}

// Annihilation part of d^{(k-1)} b(x): sum_{j>=0} C(-j-1, k-1) b_j x^{-j-k}.
inline Series annihilate(const AlgebraPreset& preset, int k, const Series& in) {
  Series out;
  for (const auto& [pw, st] : in) {
    int top = 0;
    for (const auto& [m, c] : st.terms()) top = std::max(top, m.degree());
    for (int j = 0; j <= top; ++j) {
      add_to(out, pw - j - k, apply_b(preset, j, st), Scalar(binom(-j - 1, k - 1)));
    }
  }
  return out;
}

// Creation part of d^{(k-1)} b(x): sum_{j<=-k} C(-j-1, k-1) b_j x^{-j-k}, truncated.
inline Series create(const AlgebraPreset& preset, int k, const Series& in, long target) {
  Series out;
  for (const auto& [pw, st] : in) {
    for (int j = -k; pw + (-j - k) <= target; --j) {
      add_to(out, pw - j - k, apply_b(preset, j, st), Scalar(binom(-j - 1, k - 1)));
    }
  }
  return out;
}

// exp(sum_{j>0} coef_j * b_{sign*j} * x^{power_sign*j}) expanded as a product over j of
// truncated exponentials sum_m (coef_j b_{sign j})^m x^{power_sign j m} / m!.
inline Series lattice_operator(const AlgebraPreset& preset, int p, const Series& in, long target) {
  if (p == 0) return in;
  Series out;
  for (const auto& [pw, st] : in) {
    for (const auto& [m, c] : st.terms()) {
      // E^+: exp(-p sum_{j>0} b_j x^{-j} / j), factor by factor.
      Series plus{{0, State(m, c)}};
      for (int j = 1; j <= m.degree(); ++j) {
        Series next;
        for (const auto& [q, s] : plus) {
          State term = s;
          Scalar coef = 1;
          for (int e = 0; !term.is_zero(); ++e) {
            add_to(next, q - static_cast<long>(j) * e, term, coef);
            term = apply_b(preset, j, term);
            coef *= Scalar(-p) / j / (e + 1);
          }
        }
        plus = std::move(next);
      }
      // e_{p alpha} x^{p alpha(0)}
      const long shift = static_cast<long>(p) * m.lpoint * preset.gram();
      Series moved;
      for (const auto& [q, s] : plus) {
        State t;
        for (const auto& [mm, cc] : s.terms()) t.add_term(Monomial{mm.hpart, mm.lpoint + p}, cc);
        add_to(moved, pw + q + shift, t, 1);
      }
      // E^-: exp(p sum_{j>0} b_{-j} x^j / j), truncated at target.
      Series minus = moved;
      for (int j = 1; !minus.empty() && minus.begin()->first + j <= target; ++j) {
        Series next;
        for (const auto& [q, s] : minus) {
          State term = s;
          Scalar coef = 1;
          for (long e = 0; q + j * e <= target; ++e) {
            add_to(next, q + j * e, term, coef);
            term = apply_b(preset, -j, term);
            coef *= Scalar(p) / j / (e + 1);
          }
        }
        minus = std::move(next);
      }
      for (const auto& [q, s] : minus) add_to(out, q, s, 1);
    }
  }
  return out;
}

/// u_n v for basis monomials, by direct free-field normal ordering.
inline State mode(const AlgebraPreset& preset, const Monomial& u, int n, const Monomial& v) {
  const long target = -static_cast<long>(n) - 1;
  const std::size_t r = u.hpart.size();
  State result;
  for (unsigned mask = 0; mask < (1u << r); ++mask) {
    Series s{{0, State(v)}};
    for (std::size_t i = 0; i < r; ++i) {
      if (!(mask & (1u << i))) s = annihilate(preset, u.hpart[i], s);
    }
    s = lattice_operator(preset, u.lpoint, s, target);
    for (std::size_t i = 0; i < r; ++i) {
      if (mask & (1u << i)) s = create(preset, u.hpart[i], s, target);
    }
    if (auto it = s.find(target); it != s.end()) result += it->second;
  }
  return result;
}

inline State mode(const AlgebraPreset& preset, const State& u, int n, const State& v) {
  State out;
  for (const auto& [mu, cu] : u.terms()) {
    for (const auto& [mv, cv] : v.terms()) out.axpy(cu * cv, mode(preset, mu, n, mv));
  }
  return out;
}

}  // namespace vfilt::oracle
