#include "opg/schreier.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "opg/fp.hpp"

namespace opg {

int64_t FiniteQuotientMap::index(int64_t p) const {
  int64_t n = 1;
  for (int e : target_exps)
    for (int i = 0; i < e; ++i) {
      if (n > 1000000 / p)
        throw std::invalid_argument("FiniteQuotientMap: target too large");
      n *= p;
    }
  return n;
}

namespace {

struct CosetSpace {
  int64_t p;
  std::vector<int64_t> moduli; // p^{e_i}
  std::vector<int64_t> strides;
  int64_t count = 1;

  explicit CosetSpace(int64_t p, const std::vector<int>& exps) : p(p) {
    for (int e : exps) {
      int64_t m = 1;
      for (int i = 0; i < e; ++i) m *= p;
      moduli.push_back(m);
    }
    strides.resize(moduli.size());
    for (size_t i = 0; i < moduli.size(); ++i) {
      strides[i] = count;
      count *= moduli[i];
    }
  }

  int64_t shift(int64_t c, const std::vector<int64_t>& img, int sign) const {
    int64_t r = 0;
    for (size_t i = 0; i < moduli.size(); ++i) {
      int64_t coord = (c / strides[i]) % moduli[i];
      int64_t add = ((img[i] * sign) % moduli[i] + moduli[i]) % moduli[i];
      r += ((coord + add) % moduli[i]) * strides[i];
    }
    return r;
  }
};

void check_surjective(const Presentation& pres, const FiniteQuotientMap& map) {
  // images generate the target iff they generate target/p: rank over F_p
  const uint32_t p = static_cast<uint32_t>(pres.p);
  FpMat m;
  for (const auto& img : map.images) {
    FpVec row;
    for (int64_t v : img) row.push_back(static_cast<uint32_t>(((v % p) + p) % p));
    m.push_back(std::move(row));
  }
  if (m.empty() || fp_rank(m, p) < map.target_exps.size())
    throw std::invalid_argument("kernel_presentation: the map is not surjective");
}

} // namespace

SchreierPresentation kernel_presentation(const Presentation& pres,
                                         const FiniteQuotientMap& map) {
  if (map.images.size() != pres.gens.size())
    throw std::invalid_argument("kernel_presentation: one image per generator required");
  for (const auto& img : map.images)
    if (img.size() != map.target_exps.size())
      throw std::invalid_argument("kernel_presentation: image vector length mismatch");
  check_surjective(pres, map);

  // relators must die in the target
  CosetSpace cs(pres.p, map.target_exps);
  const int d = pres.ngens();
  for (const Word& r : pres.relators) {
    int64_t c = 0;
    for (auto [g, s] : letter_sequence(r)) c = cs.shift(c, map.images[static_cast<size_t>(g)], s);
    if (c != 0)
      throw std::invalid_argument("kernel_presentation: a relator has nonzero image");
  }

  // breadth-first Schreier tree over cosets; edges by declaration order,
  // generator then its inverse
  const int64_t index = cs.count;
  std::vector<Word> transversal(static_cast<size_t>(index));
  std::vector<bool> seen(static_cast<size_t>(index), false);
  // tree edge marker: tree[c * d + g] = true when t_{c g} = t_c g
  std::vector<bool> tree(static_cast<size_t>(index * d), false);
  std::deque<int64_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int64_t c = queue.front();
    queue.pop_front();
    for (int g = 0; g < d; ++g) {
      for (int s : {1, -1}) {
        int64_t c2 = cs.shift(c, map.images[static_cast<size_t>(g)], s);
        if (seen[static_cast<size_t>(c2)]) continue;
        seen[static_cast<size_t>(c2)] = true;
        Word w = transversal[static_cast<size_t>(c)];
        w.append_power(g, s);
        transversal[static_cast<size_t>(c2)] = normalize(w);
        int64_t from = s == 1 ? c : c2;
        tree[static_cast<size_t>(from * d + g)] = true;
        queue.push_back(c2);
      }
    }
  }

  SchreierPresentation sp;
  sp.pres.p = pres.p;
  sp.transversal = transversal;

  // Schreier generators s_{c,g} for non-tree edges
  std::map<std::pair<int64_t, int>, int> sgen;
  for (int64_t c = 0; c < index; ++c) {
    for (int g = 0; g < d; ++g) {
      if (tree[static_cast<size_t>(c * d + g)]) continue;
      int id = static_cast<int>(sp.pres.gens.size());
      sgen[{c, g}] = id;
      sp.pres.gens.push_back("s" + std::to_string(c) + "_" + pres.gens[static_cast<size_t>(g)]);
      sp.origin.emplace_back(static_cast<int>(c), g);
      int64_t c2 = cs.shift(c, map.images[static_cast<size_t>(g)], 1);
      Word emb = transversal[static_cast<size_t>(c)];
      emb.append_power(g, 1);
      emb.append(inverse_reduced(transversal[static_cast<size_t>(c2)]));
      sp.embedding.push_back(normalize(emb));
    }
  }

  // rewrite t_c r t_c^{-1} for every coset and relator
  for (int64_t c0 = 0; c0 < index; ++c0) {
    for (const Word& r : pres.relators) {
      Word rewritten;
      int64_t c = c0;
      for (auto [g, s] : letter_sequence(r)) {
        if (s == 1) {
          if (!tree[static_cast<size_t>(c * d + g)])
            rewritten.append_power(sgen.at({c, g}), 1);
          c = cs.shift(c, map.images[static_cast<size_t>(g)], 1);
        } else {
          int64_t c2 = cs.shift(c, map.images[static_cast<size_t>(g)], -1);
          if (!tree[static_cast<size_t>(c2 * d + g)])
            rewritten.append_power(sgen.at({c2, g}), -1);
          c = c2;
        }
      }
      if (c != c0)
        throw std::logic_error("kernel_presentation: rewriting did not close up");
      sp.pres.relators.push_back(normalize(rewritten));
    }
  }
  return sp;
}

Orientation restrict_orientation(const OrientedPresentation& op,
                                 const SchreierPresentation& sp) {
  Orientation o;
  o.precision = op.precision();
  for (const Word& emb : sp.embedding)
    o.theta.emplace_back(orientation_of_word(op, emb));
  return o;
}

namespace {

// Smith normal form over Z for small matrices; divisors reported positive.
std::vector<int64_t> integer_snf(std::vector<std::vector<int64_t>> m) {
  std::vector<int64_t> divisors;
  if (m.empty() || m[0].empty()) return divisors;
  const size_t rows = m.size(), cols = m[0].size();
  size_t k = 0;
  while (k < rows && k < cols) {
    // find the entry of least nonzero magnitude
    size_t pi = k, pj = k;
    int64_t best = 0;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j)
        if (m[i][j] != 0 && (best == 0 || std::abs(m[i][j]) < best)) {
          best = std::abs(m[i][j]);
          pi = i;
          pj = j;
        }
    if (best == 0) break;
    std::swap(m[k], m[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
    bool again = false;
    for (size_t i = k + 1; i < rows; ++i) {
      int64_t q = m[i][k] / m[k][k];
      if (q != 0)
        for (size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
      if (m[i][k] != 0) again = true;
    }
    for (size_t j = k + 1; j < cols; ++j) {
      int64_t q = m[k][j] / m[k][k];
      if (q != 0)
        for (size_t i = k; i < rows; ++i) m[i][j] -= q * m[i][k];
      if (m[k][j] != 0) again = true;
    }
    if (again) continue; // remainders left, pick a new pivot
    divisors.push_back(std::abs(m[k][k]));
    ++k;
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

} // namespace

AbelianizationCheck abelianization_check(const SchreierPresentation& sp) {
  AbelianizationCheck out;
  for (const Word& r : sp.pres.relators)
    out.matrix.push_back(exponent_sums(r, sp.pres.ngens()));
  out.divisors = integer_snf(out.matrix);
  out.rank = static_cast<int>(out.divisors.size());
  out.free_rank = sp.pres.ngens() - out.rank;
  return out;
}

} // namespace opg
