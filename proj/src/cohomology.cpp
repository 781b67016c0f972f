#include "opg/cohomology.hpp"

#include <stdexcept>

namespace opg {

QuadraticRing build_ring(const Presentation& pres) {
  if (pres.p == 2) throw std::invalid_argument("build_ring: p must be odd");
  MinimalityResult mr = is_minimal(pres);
  if (!mr.minimal)
    throw std::invalid_argument("build_ring: presentation is not minimal (relator " +
                                std::to_string(mr.offending_relator) + ")");
  QuadraticRing ring;
  ring.p = pres.p;
  ring.gen_names = pres.gens;
  ring.nrel = pres.relators.size();
  const uint32_t p = static_cast<uint32_t>(pres.p);
  const uint32_t half = fp_inv(2, p);
  const size_t d = pres.gens.size();
  for (const Word& r : pres.relators) {
    Magnus2 m = magnus2(r, pres.ngens(), p);
    FpMat b(d, FpVec(d, 0));
    for (size_t i = 0; i < d; ++i)
      for (size_t j = 0; j < d; ++j)
        b[i][j] = fp_mul(half, fp_sub(m.quad[i][j], m.quad[j][i], p), p);
    ring.pairing.push_back(std::move(b));
  }
  return ring;
}

FpVec cup(const QuadraticRing& ring, const FpVec& a, const FpVec& b) {
  const uint32_t p = static_cast<uint32_t>(ring.p);
  const size_t d = ring.dim_h1();
  if (a.size() != d || b.size() != d)
    throw std::invalid_argument("cup: class dimension mismatch");
  FpVec out(ring.nrel, 0);
  for (size_t r = 0; r < ring.nrel; ++r) {
    uint32_t acc = 0;
    for (size_t i = 0; i < d; ++i) {
      if (a[i] == 0) continue;
      uint32_t row = 0;
      for (size_t j = 0; j < d; ++j)
        row = fp_add(row, fp_mul(ring.pairing[r][i][j], b[j], p), p);
      acc = fp_add(acc, fp_mul(a[i], row, p), p);
    }
    out[r] = acc;
  }
  return out;
}

H2Relations h2_relations(const QuadraticRing& ring) {
  const uint32_t p = static_cast<uint32_t>(ring.p);
  const size_t d = ring.dim_h1();
  H2Relations out;
  for (size_t i = 0; i < d; ++i)
    for (size_t j = i + 1; j < d; ++j) out.wedge_index.emplace_back(i, j);

  // columns = wedges, rows = relator duals
  FpMat m(ring.nrel, FpVec(out.wedge_index.size(), 0));
  for (size_t r = 0; r < ring.nrel; ++r)
    for (size_t w = 0; w < out.wedge_index.size(); ++w) {
      auto [i, j] = out.wedge_index[w];
      m[r][w] = ring.pairing[r][i][j];
    }
  if (ring.nrel == 0) {
    // everything is a relation
    for (size_t w = 0; w < out.wedge_index.size(); ++w) {
      FpVec k(out.wedge_index.size(), 0);
      k[w] = 1;
      out.relations.push_back(std::move(k));
    }
    return out;
  }
  out.relations = fp_nullspace(m, p);
  return out;
}

std::string format_relation(const QuadraticRing& ring, const H2Relations& rel,
                            const FpVec& coeffs) {
  std::string s;
  for (size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] == 0) continue;
    auto [i, j] = rel.wedge_index[w];
    if (!s.empty()) s += " + ";
    if (coeffs[w] != 1) s += std::to_string(coeffs[w]) + "*";
    s += ring.gen_names[i] + "* ^ " + ring.gen_names[j] + "*";
  }
  if (s.empty()) return "0";
  return s + " = 0";
}

} // namespace opg
