#include "opg/fp.hpp"

#include <stdexcept>

namespace opg {

uint32_t fp_inv(uint32_t a, uint32_t p) {
  if (a % p == 0) throw std::domain_error("fp_inv: zero is not invertible");
  return fp_pow(a, static_cast<int64_t>(p) - 2, p);
}

uint32_t fp_pow(uint32_t a, int64_t e, uint32_t p) {
  a %= p;
  if (e < 0) {
    a = fp_inv(a, p);
    e = -e;
  }
  uint32_t r = 1 % p;
  while (e > 0) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}

FpVec fp_vec_add(const FpVec& a, const FpVec& b, uint32_t p) {
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_add(a[i], b[i], p);
  return r;
}

FpVec fp_vec_scale(const FpVec& a, uint32_t s, uint32_t p) {
  FpVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = fp_mul(a[i], s, p);
  return r;
}

bool fp_vec_is_zero(const FpVec& a) {
  for (uint32_t x : a)
    if (x != 0) return false;
  return true;
}

namespace {

// Row-reduce [A | b] in place; returns pivot column per row.
std::vector<size_t> rref(FpMat& m, uint32_t p) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  const size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[r], m[sel]);
    uint32_t inv = fp_inv(m[r][c], p);
    for (size_t j = c; j < cols; ++j) m[r][j] = fp_mul(m[r][j], inv, p);
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      uint32_t f = m[i][c];
      for (size_t j = c; j < cols; ++j)
        m[i][j] = fp_sub(m[i][j], fp_mul(f, m[r][j], p), p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

FpAffineSpace fp_solve(const FpMat& a, const FpVec& b, size_t cols, uint32_t p) {
  FpAffineSpace out;
  const size_t rows = a.size();
  if (rows == 0) {
    out.consistent = true;
    out.particular.assign(cols, 0);
    for (size_t c = 0; c < cols; ++c) {
      FpVec k(cols, 0);
      k[c] = 1;
      out.kernel.push_back(std::move(k));
    }
    return out;
  }
  FpMat m(rows, FpVec(cols + 1, 0));
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) m[i][j] = a[i][j] % p;
    m[i][cols] = b[i] % p;
  }
  std::vector<size_t> pivots = rref(m, p);
  if (!pivots.empty() && pivots.back() == cols) {
    out.consistent = false; // pivot in the constant column
    return out;
  }
  out.consistent = true;
  out.particular.assign(cols, 0);
  for (size_t i = 0; i < pivots.size(); ++i) out.particular[pivots[i]] = m[i][cols];

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  for (size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    FpVec k(cols, 0);
    k[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) k[pivots[i]] = fp_sub(0, m[i][c], p);
    out.kernel.push_back(std::move(k));
  }
  return out;
}

std::vector<FpVec> fp_nullspace(const FpMat& a, uint32_t p) {
  if (a.empty()) return {};
  FpVec zero(a.size(), 0);
  return fp_solve(a, zero, a[0].size(), p).kernel;
}

size_t fp_rank(FpMat a, uint32_t p) {
  return rref(a, p).size();
}

} // namespace opg
