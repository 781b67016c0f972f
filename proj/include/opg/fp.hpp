#pragma once

#include <cstdint>
#include <vector>

namespace opg {

// Dense linear algebra over the prime field F_p, p a small odd prime.
// Scalars are canonical residues in [0, p).

using FpVec = std::vector<uint32_t>;
using FpMat = std::vector<FpVec>;

inline uint32_t fp_add(uint32_t a, uint32_t b, uint32_t p) { return (a + b) % p; }
inline uint32_t fp_sub(uint32_t a, uint32_t b, uint32_t p) { return (a + p - b) % p; }
inline uint32_t fp_mul(uint32_t a, uint32_t b, uint32_t p) {
  return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
uint32_t fp_inv(uint32_t a, uint32_t p);
uint32_t fp_pow(uint32_t a, int64_t e, uint32_t p);

FpVec fp_vec_add(const FpVec& a, const FpVec& b, uint32_t p);
FpVec fp_vec_scale(const FpVec& a, uint32_t s, uint32_t p);
bool fp_vec_is_zero(const FpVec& a);

// Solution set of A x = b: empty when inconsistent, otherwise a particular
// solution plus a basis of the kernel of A.
struct FpAffineSpace {
  bool consistent = false;
  FpVec particular;          // one solution (size = #columns)
  std::vector<FpVec> kernel; // kernel basis, deterministic order
};

// `cols` disambiguates the unknown count when a has no rows.
FpAffineSpace fp_solve(const FpMat& a, const FpVec& b, size_t cols, uint32_t p);

// Kernel basis of A (columns = unknowns).
std::vector<FpVec> fp_nullspace(const FpMat& a, uint32_t p);

size_t fp_rank(FpMat a, uint32_t p);

} // namespace opg
