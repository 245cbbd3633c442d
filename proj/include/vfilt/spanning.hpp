#pragma once

#include "vfilt/poisson.hpp"
#include "vfilt/report.hpp"
#include "vfilt/sampling.hpp"

#include <optional>
#include <vector>

namespace vfilt {

/// Homogeneous vectors spanning a graded subspace up to the cutoff, with an
/// optional linear order: order[i] is the rank of vectors[i], larger rank
/// meaning larger element. Without one the global monomial order of the
/// leading terms is used.
struct GeneratorSet {
  std::vector<State> vectors;
  std::optional<std::vector<std::size_t>> order;
};

/// Index constraints on u^(1)_{-n_1} ... u^(r)_{-n_r} 1 (n_i >= 1):
///   unordered       none
///   strict          n_1 > ... > n_r
///   weak            n_1 >= ... >= n_r
///   ordered         (n_i, u^(i)) weakly decreasing lexicographically
///   ordered_strict  (n_i, u^(i)) strictly decreasing, i.e. u^(i) > u^(i+1)
///                   on ties read literally
enum class SpanningKind { unordered, strict, weak, ordered, ordered_strict };

std::string kind_name(SpanningKind k);

struct SpanningFamily {
  SpanningKind kind = SpanningKind::strict;
  int weight = 0;
  std::vector<State> vectors;
};

/// Nonzero homogeneous members of S with weight and rank. Throws
/// invalid_argument for a non-homogeneous vector or a weight outside the
/// enumerated range.
struct Generator {
  int weight;
  State vector;
  std::size_t rank;
};
std::vector<Generator> prepare_generators(FiltrationEngine& engine, const GeneratorSet& s);

/// Replaces S by a reduced basis of its span in each weight, ordered by
/// weight and then pivot; weight-0 vectors (vacuum multiples) are dropped.
GeneratorSet reduced_generators(FiltrationEngine& engine, const GeneratorSet& s);

struct ComplementResult {
  bool holds = true;
  std::optional<int> failing_weight;
  std::optional<State> witness;
};

/// span(U) + C_2 = V in every weight up to the cutoff, by row reduction.
ComplementResult complement_mod_c2(FiltrationEngine& engine, const GeneratorSet& u);
bool check_complement_mod_c2(FiltrationEngine& engine, const GeneratorSet& u);

/// Every vector of the family in weight w, evaluated exactly. Vacuum-weight
/// generators are skipped (their modes are scalar multiples of 1_{-1}).
SpanningFamily spanning_vectors(FiltrationEngine& engine, const GeneratorSet& s, SpanningKind kind, int w);
SpanningFamily strict_spanning_vectors(FiltrationEngine& engine, const GeneratorSet& u, int w);

/// Span of the family per weight, by memoized recursion on the leftmost
/// factor; cross-checked against spanning_vectors in the tests.
class FamilySpan {
public:
  FamilySpan(FiltrationEngine& engine, const GeneratorSet& s, SpanningKind kind);

  const RowBasis& at(int w);
  bool full(int w) { return at(w).rank() == engine_.spaces().dim(w); }
  /// Number of index/generator sequences in weight w (the family's size).
  mpz_class sequence_count(int w);

private:
  const RowBasis& at(int w, long bound);
  long key(std::size_t g, int n) const;
  long next_bound(long key) const;
  long clip(int w, long bound) const;

  FiltrationEngine& engine_;
  SpanningKind kind_;
  std::vector<Generator> gens_;
  long rank_span_ = 1;  // ranks lie in [0, rank_span_)
  std::map<std::pair<int, long>, RowBasis> memo_;
  std::map<std::pair<int, long>, mpz_class> count_memo_;
};

/// Span of all products s^(1)_{-1} ... s^(r)_{-1} 1 plus C_2 equals V per
/// weight, i.e. S generates V/C_2 as an algebra.
ComplementResult algebra_generation(FiltrationEngine& engine, const GeneratorSet& s);

/// Both directions of: V = U + C_2 iff the strict family spans V.
VerificationReport verify_strict_spanning(FiltrationEngine& engine, const GeneratorSet& u, const std::string& label);

/// Precondition (S generates V/C_2), then the weak and ordered families span.
VerificationReport pbw_spanning_check(FiltrationEngine& engine, const GeneratorSet& s, const std::string& label);

struct GeneratingType {
  bool type1 = false;
  bool type2 = false;
  bool algebra_gen = false;
  bool type0_implied = false;  // type 0 is only ever reported as implied by type 1
};

/// Type-1, type-2 (given or default order and `random_orders` shuffles) and
/// algebra generation of V/C_2, per weight up to the cutoff; records whether
/// the three agree.
GeneratingType classify_generating_type(FiltrationEngine& engine, const GeneratorSet& s, Rng& rng,
                                        VerificationReport& report, const std::string& label,
                                        int random_orders = 3);

/// C(2k,k) d^k a d^k b = d^{2k}(ab) - d^{2k}(a) b - a d^{2k}(b)
///   - sum_{i=1}^{k-1} C(2k,i) (d^{2k-i}(a) d^i(b) + d^i(a) d^{2k-i}(b))
/// as classes of degree 2k.
bool partial_reduction_identity(GrAlgebra& gr, const GrElement& a, const GrElement& b, int k);

/// The identity on `pairs` random degree-0 pairs for each k in ks.
VerificationReport verify_reduction_identity(GrAlgebra& gr, Rng& rng, int pairs, const std::vector<int>& ks);

/// Default generator sets for the preset, then the theorem checks, the
/// classification on them and on `random_sets` random sets, and the
/// rewriting identity.
VerificationReport verify_spanning_suite(FiltrationEngine& engine, Rng& rng, int random_sets = 10);

/// Same checks for one caller-supplied generator set.
VerificationReport verify_spanning_for(FiltrationEngine& engine, const GeneratorSet& s, Rng& rng);

}  // namespace vfilt
