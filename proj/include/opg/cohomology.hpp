#pragma once

#include <string>
#include <vector>

#include "opg/fp.hpp"
#include "opg/presentation.hpp"

namespace opg {

// The quadratic part of the Z/p-cohomology of a minimal presentation.
// H^1 is the dual of the generator space; H^2 is spanned by relator duals
// through transgression, and the cup product pairing of H^1 classes against
// the relator r is the antisymmetric matrix B_r extracted from the Magnus
// expansion of r.

struct QuadraticRing {
  int64_t p = 0;
  std::vector<std::string> gen_names;
  size_t nrel = 0;
  std::vector<FpMat> pairing; // B_r per relator, antisymmetric

  size_t dim_h1() const { return gen_names.size(); }
};

// B_r = (quad(r) - quad(r)^T) / 2; for a Frattini relator the Magnus
// quadratic part is already antisymmetric, so B_r = quad(r) and the
// normalization anchor holds: r = [x_i, x_j] pairs (chi_i, chi_j) to +1.
QuadraticRing build_ring(const Presentation& pres);

// Coordinates of cup(a, b) over the relator duals: entry r is a^T B_r b.
FpVec cup(const QuadraticRing& ring, const FpVec& a, const FpVec& b);

// Kernel basis of /\^2 H^1 -> H^2. Each relation is returned as a vector
// over the wedge coordinates e_i /\ e_j, i < j, in lexicographic order.
struct H2Relations {
  std::vector<std::pair<size_t, size_t>> wedge_index; // (i, j), i < j
  std::vector<FpVec> relations;
};

H2Relations h2_relations(const QuadraticRing& ring);

std::string format_relation(const QuadraticRing& ring, const H2Relations& rel,
                            const FpVec& coeffs);

} // namespace opg
