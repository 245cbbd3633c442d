#pragma once

#include "vfilt/algebra.hpp"

#include <map>
#include <optional>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace vfilt {

/// Generalized binomial coefficient C(top, k) for any integer top, k >= 0.
mpz_class binomial(long top, unsigned long k);

/// Result of an identity check; `residual` is LHS - RHS.
struct IdentityCheck {
  bool holds = true;
  State residual;
};

/// Mode calculus on a preset vertex algebra.
///
/// `mode_act(u, n, v)` evaluates u_n v by recursion on the leftmost oscillator
/// of u through the iterate formula, bottoming out at the vacuum and at the
/// lattice vertex operators Y(e^{p alpha}, x). Results on monomial pairs are
/// memoized, so an instance must not be shared between threads without
/// external locking; give each worker its own instance.
class VertexAlgebra {
public:
  explicit VertexAlgebra(AlgebraPreset preset);

  const AlgebraPreset& preset() const { return preset_; }

  State vacuum() const;
  /// b = b_{-1} 1
  State generator() const;
  /// e^{p alpha}; only valid for the lattice preset.
  State lattice_vector(int p) const;

  int weight(const Monomial& m) const { return preset_.weight(m); }

  /// All monomials of weight exactly w in the global order. For a lattice
  /// with negative gram the window bounds |lpoint| and is mandatory; it is
  /// ignored for N-graded presets.
  std::vector<Monomial> basis_of_weight(int w, std::optional<int> lattice_window = {}) const;

  /// b_j v.
  State generator_mode(int j, const State& v) const;

  /// u_n v, bilinear in u and v.
  State mode_act(const State& u, int n, const State& v);
  const State& mode_act(const Monomial& u, int n, const Monomial& v);

  /// D v = v_{-2} 1.
  State d_operator(const State& v);

  /// Largest n with u_n v possibly nonzero, from the sector lowest weights.
  /// Returns nullopt if u or v is zero.
  std::optional<int> max_nonzero_mode(const State& u, const State& v) const;

  /// u_m (v_n w) - v_n (u_m w) == sum_{i>=0} C(m, i) (u_i v)_{m+n-i} w.
  IdentityCheck check_commutator(const State& u, int m, const State& v, int n, const State& w);

  /// v_{-1-k} 1 == D^k v / k!.
  IdentityCheck translation_series_check(const State& v, int k);

  std::size_t cache_size() const { return mode_cache_.size(); }

private:
  using Partition = std::vector<int>;

  struct ModeKey {
    Monomial u;
    int n;
    Monomial v;
    friend bool operator==(const ModeKey&, const ModeKey&) = default;
  };
  struct ModeKeyHash {
    std::size_t operator()(const ModeKey& k) const noexcept;
  };

  void require_admitted(const Monomial& m) const;
  State generator_mode(int j, const Monomial& m) const;
  State compute_mode(const Monomial& u, int n, const Monomial& v);
  State lattice_mode(int p, int n, const Monomial& v);
  const std::map<Partition, Scalar>& creation_polynomial(int p, int d);

  AlgebraPreset preset_;
  std::unordered_map<ModeKey, State, ModeKeyHash> mode_cache_;
  std::map<std::pair<int, int>, std::map<Partition, Scalar>> creation_cache_;
  int depth_ = 0;
};

}  // namespace vfilt
