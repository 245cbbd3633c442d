#include "vfilt/sampling.hpp"

#include <algorithm>

namespace vfilt {

int random_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Scalar random_coefficient(Rng& rng) {
  int num = 0;
  while (num == 0) num = random_int(rng, -5, 5);
  Scalar out(num);
  return out / random_int(rng, 1, 3);
}

State random_homogeneous_state(const VertexAlgebra& algebra, int w, Rng& rng,
                               std::optional<int> lattice_window, int max_terms) {
  const auto basis = algebra.basis_of_weight(w, lattice_window);
  State out;
  if (basis.empty()) return out;
  const int terms = random_int(rng, 1, std::min<int>(max_terms, static_cast<int>(basis.size())));
  while (static_cast<int>(out.size()) < terms) {
    const auto& m = basis[random_int(rng, 0, static_cast<int>(basis.size()) - 1)];
    if (sgn(out.coefficient(m)) == 0) out.add_term(m, random_coefficient(rng));
  }
  return out;
}

}  // namespace vfilt
