#pragma once

#include "vfilt/linalg.hpp"

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vfilt {

/// Raised when a computation would need a weight space that is
/// infinite-dimensional without a lattice window.
class InfiniteWeightSpace : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a result would land above the configured weight cutoff.
class CutoffExceeded : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Normal-ordered basis monomial b_{-k_1} ... b_{-k_r} e^{m alpha}.
///
/// `hpart` is weakly decreasing with entries >= 1; `lpoint` is the lattice
/// coordinate m (always 0 in the Heisenberg preset). The empty monomial with
/// lpoint 0 is the vacuum.
struct Monomial {
  std::vector<int> hpart;
  int lpoint = 0;

  int degree() const;
  bool is_vacuum() const { return hpart.empty() && lpoint == 0; }

  /// Global order: lattice coordinate by (|m|, sign), then oscillator degree,
  /// then partitions in reverse-lexicographic order (lexicographically larger
  /// partitions first). Per-weight bases are enumerated in this order.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// The ambient vertex algebra: the level-1 Heisenberg algebra or the lattice
/// vertex algebra of L = Z alpha with <alpha, alpha> = gram (even, nonzero).
///
/// In the lattice preset the oscillator is alpha itself, so
/// [b_m, b_n] = m * gram * delta_{m+n,0} and b_0 e^{p alpha} = p * gram e^{p alpha}.
class AlgebraPreset {
public:
  enum class Kind { heisenberg, lattice };

  static AlgebraPreset heisenberg();
  static AlgebraPreset lattice(int gram);

  /// Accepts "heisenberg" or "lattice:<gram>".
  static AlgebraPreset parse(std::string_view text);

  Kind kind() const { return kind_; }
  int gram() const { return gram_; }
  int pairing() const { return kind_ == Kind::heisenberg ? 1 : gram_; }

  /// Heisenberg, or a positive-definite lattice.
  bool is_n_graded() const { return kind_ == Kind::heisenberg || gram_ > 0; }
  bool requires_window() const { return !is_n_graded(); }

  std::string name() const;

  /// p^2 * gram / 2, the lowest weight in the lattice sector p.
  int sector_lowest_weight(int lpoint) const;
  int weight(const Monomial& m) const;

  /// Whether m is a well-formed monomial of this preset.
  bool admits(const Monomial& m) const;

  friend bool operator==(const AlgebraPreset&, const AlgebraPreset&) = default;

private:
  AlgebraPreset(Kind kind, int gram) : kind_(kind), gram_(gram) {}

  Kind kind_ = Kind::heisenberg;
  int gram_ = 0;
};

/// Finite exact linear combination of basis monomials.
class State {
public:
  using Terms = std::map<Monomial, Scalar>;

  State() = default;
  explicit State(Monomial m, const Scalar& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Scalar& c);

  /// this += alpha * x
  void axpy(const Scalar& alpha, const State& x);

  State& operator+=(const State& x);
  State& operator-=(const State& x);
  State& operator*=(const Scalar& alpha);

  friend State operator+(State a, const State& b) { return a += b; }
  friend State operator-(State a, const State& b) { return a -= b; }
  friend State operator*(const Scalar& alpha, State a) { return a *= alpha; }
  friend State operator-(State a) { return a *= Scalar(-1); }
  friend bool operator==(const State&, const State&) = default;

private:
  Terms terms_;
};

/// Weight of a state if it is nonzero and homogeneous.
std::optional<int> homogeneous_weight(const AlgebraPreset& preset, const State& s);

/// Human-readable form, e.g. "2*b_{-2}b_{-1}e^{-1a} + -1/3*1".
std::string to_string(const Monomial& m);
std::string to_string(const State& s);

}  // namespace vfilt
