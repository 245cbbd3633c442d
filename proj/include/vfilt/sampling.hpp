#pragma once

#include "vfilt/vertex_algebra.hpp"

#include <optional>
#include <random>

namespace vfilt {

using Rng = std::mt19937_64;

/// Small nonzero rational with numerator in [-5, 5] and denominator in [1, 3].
Scalar random_coefficient(Rng& rng);

/// Random nonzero combination of up to `max_terms` basis monomials of weight w.
/// Returns the zero state when V_(w) is empty.
State random_homogeneous_state(const VertexAlgebra& algebra, int w, Rng& rng,
                               std::optional<int> lattice_window = {}, int max_terms = 3);

/// Uniform integer in [lo, hi].
int random_int(Rng& rng, int lo, int hi);

}  // namespace vfilt
