#pragma once

#include "vfilt/vertex_algebra.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vfilt {

/// Enumerated weight components V_(w) for lowest <= w <= cutoff, with
/// coordinates relative to the global monomial order.
class WeightSpaces {
public:
  WeightSpaces(const VertexAlgebra& algebra, int cutoff, std::optional<int> lattice_window);

  int cutoff() const { return cutoff_; }
  int lowest() const { return lowest_; }
  std::optional<int> window() const { return window_; }

  /// Empty below the lowest weight; throws CutoffExceeded above the cutoff.
  const std::vector<Monomial>& basis(int w) const;
  std::size_t dim(int w) const { return basis(w).size(); }
  std::optional<std::size_t> index(int w, const Monomial& m) const;

  /// Coordinates of a state of weight w. nullopt if a term falls outside the
  /// window (or has another weight).
  std::optional<SparseVector> coordinates(int w, const State& s) const;
  State state(int w, const SparseVector& v) const;

private:
  int cutoff_;
  int lowest_;
  std::optional<int> window_;
  std::vector<std::vector<Monomial>> bases_;
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> index_;
};

/// Per-weight reduced bases of a graded subspace up to a weight cutoff.
struct GradedSubspace {
  AlgebraPreset preset = AlgebraPreset::heisenberg();
  int weight_cutoff = 0;
  int lowest_weight = 0;
  std::optional<int> lattice_window;
  std::map<int, RowBasis> components;  // zero components omitted

  const RowBasis& at(int w) const;
  std::size_t dim(int w) const { return at(w).rank(); }
};

enum class Family { E, C, EU };

Family parse_family(const std::string& text);
std::string family_name(Family f);

/// Builds and memoizes C_n, E_n and the increasing filtration E^U_n (with
/// U = V_+) per weight component. Holds its own VertexAlgebra; not
/// thread-safe.
class FiltrationEngine {
public:
  /// Throws InfiniteWeightSpace for a negative-definite lattice without a window.
  FiltrationEngine(AlgebraPreset preset, int weight_cutoff, std::optional<int> lattice_window = {});

  const AlgebraPreset& preset() const { return algebra_.preset(); }
  VertexAlgebra& algebra() { return algebra_; }
  const WeightSpaces& spaces() const { return spaces_; }
  int cutoff() const { return spaces_.cutoff(); }
  int lowest_weight() const { return spaces_.lowest(); }
  std::optional<int> window() const { return spaces_.window(); }

  /// u_n x for x given by coordinates in weight wx. nullopt when the result
  /// leaves the window; throws CutoffExceeded above the cutoff.
  std::optional<SparseVector> act(const Monomial& u, int n, int wx, const SparseVector& x);
  std::optional<SparseVector> act(const State& u, int n, int wx, const SparseVector& x);

  SparseVector coordinates(int w, const State& s) const;
  State state(int w, const SparseVector& v) const { return spaces_.state(w, v); }

  const RowBasis& full(int w);
  const RowBasis& c_component(int n, int w);
  const RowBasis& e_component(int n, int w);
  const RowBasis& eu_component(int n, int w);

  GradedSubspace compute_cn(int n);
  GradedSubspace compute_en(int n);
  GradedSubspace compute_increasing_eu(int n);

  /// Non-vacuum basis monomials of weight a (the spanning generators).
  const std::vector<Monomial>& generators_of_weight(int a) const;

private:
  using Key = std::pair<int, int>;

  GradedSubspace collect(const std::function<const RowBasis&(int)>& component);
  void require_weight(int w) const;

  VertexAlgebra algebra_;
  WeightSpaces spaces_;
  std::map<int, RowBasis> full_;
  std::map<Key, RowBasis> c_;
  std::map<Key, RowBasis> e_;
  std::map<Key, RowBasis> eu_;
  mutable std::map<int, std::vector<Monomial>> generators_;
};

/// Dimension table over (n, w). Rows are filtration indices, columns are
/// weights lowest..cutoff.
struct FiltrationTable {
  AlgebraPreset preset = AlgebraPreset::heisenberg();
  Family family = Family::E;
  int max_n = 0;
  int weight_cutoff = 0;
  int lowest_weight = 0;
  std::optional<int> lattice_window;
  std::vector<int> ns;
  std::vector<std::size_t> ambient;              // dim V_(w)
  std::vector<std::vector<std::size_t>> dims;    // dims[row][w - lowest]

  std::size_t quotient(std::size_t row, std::size_t col) const { return ambient[col] - dims[row][col]; }
};

/// C rows start at n = 2; E and E^U rows start at n = 0.
FiltrationTable filtration_table(FiltrationEngine& engine, Family family, int max_n);

}  // namespace vfilt
