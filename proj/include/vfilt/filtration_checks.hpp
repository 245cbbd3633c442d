#pragma once

#include "vfilt/filtration.hpp"
#include "vfilt/report.hpp"
#include "vfilt/sampling.hpp"

#include <optional>

namespace vfilt {

/// First row of `sub` (as a state of weight w) that is not in `super`.
std::optional<State> inclusion_witness(FiltrationEngine& engine, int w, const RowBasis& sub,
                                       const RowBasis& super);

/// Random nonzero combination of up to three rows; empty if the basis is.
SparseVector random_element(const RowBasis& basis, Rng& rng);

/// The commutator formula on `triples` seeded homogeneous triples with
/// weights in [lowest, max_weight] and |m|, |n| <= max_mode. One record.
VerificationReport verify_borcherds(VertexAlgebra& algebra, Rng& rng, int triples, int max_weight = 6,
                                    int max_mode = 4, std::optional<int> lattice_window = {});

/// E_1 = C_2, E_2 = C_3, C_n in E_{n-1} for n = 2..max_n, and E_m in C_n for
/// m = (n-2) 2^(n-2), n = 2..5. Pairs whose E_m vanishes below the cutoff are
/// reported as skipped.
VerificationReport verify_c_e_identities(FiltrationEngine& engine, int max_n = 6);

/// E_n meets V_(w) trivially for w < n; C_n for w < 2t + n - 1, t the lowest
/// weight. n runs up to cutoff + 2.
VerificationReport verify_weight_bounds(FiltrationEngine& engine);

/// E_{n+1} in E_n, C_{n+1} in C_n, and E_{M+1} = 0 through weight M.
VerificationReport verify_nesting(FiltrationEngine& engine, int max_n);

/// a_m E_n in E_{n-m-1} (and E_{n-m} for m >= 0), and u_n w in E_{r+s-n-1}
/// (E_{r+s-n} for n >= 0) for u in E_r, w in E_s, on seeded samples.
VerificationReport verify_mode_bounds(FiltrationEngine& engine, Rng& rng, int samples);

/// Products u^(1)_{-k_1} ... u^(r)_{-k_r} w with k_i >= 2 and r >= 2^n lie in
/// C_{n+2}; exhaustive over every r and weight under the cutoff.
VerificationReport verify_depth_collapse(FiltrationEngine& engine, int n);

/// u_{-k} C_k in C_{k+1}, exhaustive under the cutoff.
VerificationReport verify_c_raising(FiltrationEngine& engine, int k);

/// D-shift of modes, stability of C_n under u_{-k} (k >= 0) and
/// commutation modulo C_{n+k}, on seeded samples.
VerificationReport verify_c_mode_properties(FiltrationEngine& engine, Rng& rng, int samples);

/// The increasing filtration E^U: monotone, exhaustive, good on samples, and
/// equal to the one built from a small strong generating set.
VerificationReport verify_increasing_filtration(FiltrationEngine& engine, int max_n, Rng& rng,
                                                int samples);

/// Per-weight dim V/C_n and dim V/E_n up to the cutoff.
VerificationReport cofiniteness_report(FiltrationEngine& engine, int max_n);

/// Negative-definite lattice: (e^a)_{-2k-1} e^{-a} = 1, so 1 lies in C_2 and
/// the filtrations are trivial. Also checks the windowless-enumeration guard.
VerificationReport degeneracy_report(const AlgebraPreset& preset, int window = 1);

}  // namespace vfilt
