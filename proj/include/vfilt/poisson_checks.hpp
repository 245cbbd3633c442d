#pragma once

#include "vfilt/poisson.hpp"
#include "vfilt/report.hpp"
#include "vfilt/sampling.hpp"

namespace vfilt {

/// Commutativity, associativity, unit, skew-symmetry, Jacobi and Leibniz on
/// V/C_2, plus invariance under shifting representatives by C_2 vectors.
/// Each property is one record aggregated over `samples` draws.
VerificationReport verify_zhu_poisson_axioms(ZhuAlgebra& zhu, Rng& rng, int samples);

/// gr_E(V) as a differential algebra with Y_- acting by derivations:
/// commutative, associative, unit, d a derivation of bidegree (1, 1), Y_-
/// modes derivations, d commuting with Y_-, and invariance under shifting
/// representatives one filtration step deeper.
VerificationReport verify_gr_axioms(GrAlgebra& gr, Rng& rng, int samples);

/// Vertex Lie axioms on gr: (d a)_n = -n a_{n-1}, skew-symmetry and the
/// commutator formula for m, n >= 0.
VerificationReport verify_vertex_lie_axioms(GrAlgebra& gr, Rng& rng, int samples);

/// V/C_2 and E_0/E_1 agree per weight and the identity on representatives
/// intertwines products and brackets on all quotient basis pairs under the
/// cutoff.
VerificationReport verify_degree0_is_zhu(ZhuAlgebra& zhu, GrAlgebra& gr);

/// For 1 <= n <= max_degree and every weight: E_n/E_{n+1} is spanned by
/// products x * d(y), and by d^{k_1}(x_1) ... d^{k_r}(x_r) with degree-0
/// classes x_i and k_1 > ... > k_r >= 0 summing to n.
VerificationReport verify_gr_generation(ZhuAlgebra& zhu, GrAlgebra& gr, int max_degree);

}  // namespace vfilt
