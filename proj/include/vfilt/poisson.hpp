#pragma once

#include "vfilt/filtration.hpp"

#include <map>
#include <vector>

namespace vfilt {

/// Coset v + C_2(V), stored as the canonical residual against the reduced
/// echelon basis of C_2 in each weight. Zero coset iff zero representative.
struct ZhuElement {
  State representative;

  bool is_zero() const { return representative.is_zero(); }
  friend bool operator==(const ZhuElement&, const ZhuElement&) = default;
  friend ZhuElement operator+(const ZhuElement& a, const ZhuElement& b) { return {a.representative + b.representative}; }
  friend ZhuElement operator-(const ZhuElement& a, const ZhuElement& b) { return {a.representative - b.representative}; }
  friend ZhuElement operator*(const Scalar& c, const ZhuElement& a) { return {c * a.representative}; }
};

/// The Poisson algebra V/C_2 with product u_{-1}v and bracket u_0 v.
/// Throws CutoffExceeded when a result would need a weight above the
/// engine's cutoff.
class ZhuAlgebra {
public:
  /// N-graded presets only (invalid_argument otherwise).
  explicit ZhuAlgebra(FiltrationEngine& engine);

  FiltrationEngine& engine() { return engine_; }

  ZhuElement element(const State& v);
  ZhuElement one();
  ZhuElement product(const ZhuElement& a, const ZhuElement& b);
  ZhuElement bracket(const ZhuElement& a, const ZhuElement& b);

  /// Monomials off the C_2 pivots of weight w: a basis of the quotient.
  std::vector<State> quotient_basis(int w);

private:
  ZhuElement mode(const ZhuElement& a, int n, const ZhuElement& b);

  FiltrationEngine& engine_;
};

/// Class of a homogeneous vector in E_n / E_{n+1}, weight w. The
/// representative lies in E_n and is reduced against E_{n+1}. Classes of
/// negative degree are zero (E_n = V for n <= 0).
struct GrElement {
  int degree = 0;
  int weight = 0;
  State representative;

  bool is_zero() const { return representative.is_zero(); }
  friend bool operator==(const GrElement&, const GrElement&) = default;
};

/// gr_E(V) = sum_n E_n/E_{n+1} for 0 <= n <= max_degree, with product,
/// derivation and the Y_- modes. Output degrees above max_degree raise
/// std::out_of_range; weights above the cutoff raise CutoffExceeded.
class GrAlgebra {
public:
  GrAlgebra(FiltrationEngine& engine, int max_degree);

  FiltrationEngine& engine() { return engine_; }
  int max_degree() const { return max_degree_; }

  /// v must be homogeneous of weight w and lie in E_degree (invalid_argument
  /// otherwise).
  GrElement element(int degree, int w, const State& v);
  GrElement zero(int degree, int w) const { return {degree, w, {}}; }
  GrElement one();

  GrElement add(const GrElement& a, const GrElement& b) const;
  GrElement scale(const Scalar& c, GrElement a) const;
  GrElement subtract(const GrElement& a, const GrElement& b) const { return add(a, scale(-1, b)); }

  GrElement product(const GrElement& a, const GrElement& b);
  GrElement partial(const GrElement& a);
  /// Class of a_n b in degree r + s - n; zero when that degree is negative.
  GrElement yminus(const GrElement& a, int n, const GrElement& b);

  /// Representatives of a basis of E_n/E_{n+1} in weight w.
  std::vector<State> quotient_basis(int degree, int w);

private:
  void require_degree(int degree) const;
  /// Reduces a vector that must lie in E_degree; a miss is an internal
  /// invariant breach (std::logic_error).
  GrElement reduce(int degree, int w, const State& v, bool trusted);

  FiltrationEngine& engine_;
  int max_degree_;
  std::map<std::pair<int, int>, std::vector<State>> quotient_bases_;
};

}  // namespace vfilt
