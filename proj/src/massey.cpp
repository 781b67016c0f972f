#include "opg/massey.hpp"

#include <stdexcept>

namespace opg {

UniTri UniTri::identity_of(int64_t p, int size) {
  UniTri u;
  u.p = p;
  u.size = size;
  u.a.assign(static_cast<size_t>(size), FpVec(static_cast<size_t>(size), 0));
  for (int i = 0; i < size; ++i) u.a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  return u;
}

uint32_t UniTri::at(int i, int j) const {
  return a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
}

void UniTri::set(int i, int j, uint32_t v) {
  if (j <= i) throw std::invalid_argument("UniTri::set: only strictly upper entries");
  a[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] =
      v % static_cast<uint32_t>(p);
}

bool UniTri::is_identity() const {
  for (int i = 0; i < size; ++i)
    for (int j = i + 1; j < size; ++j)
      if (a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) return false;
  return true;
}

UniTri UniTriMonoid::mul(const Elem& x, const Elem& y) const {
  const uint32_t pp = static_cast<uint32_t>(p);
  UniTri r = identity();
  for (int i = 0; i < size; ++i)
    for (int j = i; j < size; ++j) {
      uint32_t acc = 0;
      for (int k = i; k <= j; ++k)
        acc = fp_add(acc,
                     fp_mul(x.a[static_cast<size_t>(i)][static_cast<size_t>(k)],
                            y.a[static_cast<size_t>(k)][static_cast<size_t>(j)], pp),
                     pp);
      r.a[static_cast<size_t>(i)][static_cast<size_t>(j)] = acc;
    }
  return r;
}

UniTri UniTriMonoid::inv(const Elem& x) const {
  // (I + N)^-1 = I - N + N^2 - ..., N nilpotent of index <= size
  UniTri n = x;
  for (int i = 0; i < size; ++i) n.a[static_cast<size_t>(i)][static_cast<size_t>(i)] = 0;
  const uint32_t pp = static_cast<uint32_t>(p);
  UniTri acc = identity();
  UniTri pw = identity();
  uint32_t sign = 1;
  for (int k = 1; k < size; ++k) {
    pw = mul(pw, n); // pw = N^k
    sign = pp - sign;
    for (int i = 0; i < size; ++i)
      for (int j = i + 1; j < size; ++j)
        acc.a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            fp_add(acc.a[static_cast<size_t>(i)][static_cast<size_t>(j)],
                   fp_mul(sign, pw.a[static_cast<size_t>(i)][static_cast<size_t>(j)], pp),
                   pp);
  }
  return acc;
}

UniTri UniTriMonoid::pow(const Elem& x, int64_t e) const { return generic_pow(*this, x, e); }

WitnessCheck verify_witness(const Presentation& pres, const std::vector<UniTri>& rep,
                            const std::vector<FpVec>& alphas) {
  WitnessCheck wc;
  const int n = static_cast<int>(alphas.size());
  const int size = n + 1;
  if (n < 2) throw std::invalid_argument("verify_witness: need n >= 2 classes");
  if (rep.size() != pres.gens.size())
    throw std::invalid_argument("verify_witness: one matrix per generator required");
  for (const UniTri& u : rep)
    if (u.size != size || u.p != pres.p)
      throw std::invalid_argument("verify_witness: matrix size or prime mismatch");
  MinimalityResult mr = is_minimal(pres);
  if (!mr.minimal)
    throw std::invalid_argument("verify_witness: presentation is not minimal");
  wc.shape_ok = true;

  wc.superdiagonal_ok = true;
  for (size_t g = 0; g < rep.size(); ++g)
    for (int h = 1; h <= n; ++h)
      if (rep[g].at(h, h + 1) != alphas[static_cast<size_t>(h - 1)][g])
        wc.superdiagonal_ok = false;

  UniTriMonoid m{pres.p, size};
  wc.defined_ok = true;
  wc.vanish_ok = true;
  for (const Word& r : pres.relators) {
    UniTri img = evaluate(r, rep, m);
    for (int i = 1; i <= size; ++i)
      for (int j = i + 1; j <= size; ++j) {
        if (img.at(i, j) == 0) continue;
        wc.vanish_ok = false;
        if (!(i == 1 && j == size)) wc.defined_ok = false;
      }
    wc.value.push_back(img.at(1, size));
    wc.images.push_back(std::move(img));
  }
  wc.defined_ok = wc.defined_ok && wc.superdiagonal_ok;
  wc.vanish_ok = wc.vanish_ok && wc.superdiagonal_ok;
  return wc;
}

FpVec massey_value(const Presentation& pres, const std::vector<UniTri>& rep,
                   const std::vector<FpVec>& alphas) {
  WitnessCheck wc = verify_witness(pres, rep, alphas);
  if (!wc.defined_ok)
    throw std::domain_error("massey_value: the representation is not a defined-witness");
  return wc.value;
}

namespace {

struct LayeredSearch {
  const Presentation& pres;
  const MasseyProblem& prob;
  const int n;
  const int size;
  const uint32_t p;
  int64_t budget;
  int64_t solves = 0;
  bool exhausted_budget = false;
  std::vector<UniTri> rep;
  // The unknown-coefficient matrix of a layer does not depend on the values
  // chosen at lower layers: a path through one distance-k unknown must stay
  // on the diagonal elsewhere. Computed once per layer and reused.
  std::vector<FpMat> coeff_cache;

  LayeredSearch(const Presentation& pr, const MasseyProblem& pb, int64_t bud)
      : pres(pr), prob(pb), n(static_cast<int>(pb.alphas.size())),
        size(static_cast<int>(pb.alphas.size()) + 1),
        p(static_cast<uint32_t>(pr.p)), budget(bud) {
    rep.assign(pres.gens.size(), UniTri::identity_of(pres.p, size));
    for (size_t g = 0; g < rep.size(); ++g)
      for (int h = 1; h <= n; ++h)
        rep[g].set(h, h + 1, prob.alphas[static_cast<size_t>(h - 1)][g]);
    coeff_cache.assign(static_cast<size_t>(n + 1), FpMat{});
  }

  // unknown slots at distance k, ordered by (generator, row)
  std::vector<std::pair<size_t, int>> slots(int k) const {
    std::vector<std::pair<size_t, int>> s;
    for (size_t g = 0; g < rep.size(); ++g)
      for (int i = 1; i + k <= size; ++i) s.emplace_back(g, i);
    return s;
  }

  void write_slots(const std::vector<std::pair<size_t, int>>& sl, int k, const FpVec& x) {
    for (size_t idx = 0; idx < sl.size(); ++idx)
      rep[sl[idx].first].set(sl[idx].second, sl[idx].second + k, x[idx]);
  }

  // distance-k entries of all relator images, flattened
  FpVec image_entries(int k) const {
    UniTriMonoid m{pres.p, size};
    FpVec out;
    for (const Word& r : pres.relators) {
      UniTri img = evaluate(r, rep, m);
      for (int i = 1; i + k <= size; ++i) out.push_back(img.at(i, i + k));
    }
    return out;
  }

  // true when a full assignment was found; rep holds it
  bool search(int k) {
    const auto sl = slots(k);
    const size_t nu = sl.size();

    // constraints at this layer
    bool constrained = k < n || prob.mode != MasseyMode::Defined;
    FpAffineSpace space;
    if (!constrained) {
      space.consistent = true;
      space.particular.assign(nu, 0);
    } else {
      if (solves >= budget) {
        exhausted_budget = true;
        return false;
      }
      ++solves;
      FpVec zero(nu, 0);
      write_slots(sl, k, zero);
      FpVec c0 = image_entries(k);
      if (coeff_cache[static_cast<size_t>(k)].empty()) {
        FpMat a(c0.size(), FpVec(nu, 0));
        for (size_t u = 0; u < nu; ++u) {
          FpVec e(nu, 0);
          e[u] = 1;
          write_slots(sl, k, e);
          FpVec cu = image_entries(k);
          for (size_t row = 0; row < c0.size(); ++row)
            a[row][u] = fp_sub(cu[row], c0[row], p);
        }
        write_slots(sl, k, zero);
        coeff_cache[static_cast<size_t>(k)] = std::move(a);
      }
      const FpMat& a = coeff_cache[static_cast<size_t>(k)];
      FpVec rhs(c0.size(), 0);
      if (k == n && prob.mode == MasseyMode::Target) {
        // one distance-n entry per relator, the (1, n+1) value
        for (size_t r = 0; r < pres.relators.size(); ++r) rhs[r] = prob.target[r];
      }
      for (size_t row = 0; row < rhs.size(); ++row) rhs[row] = fp_sub(rhs[row], c0[row], p);
      space = fp_solve(a, rhs, nu, p);
      if (!space.consistent) return false;
    }

    // enumerate solution points in lexicographic coordinate order
    const size_t dim = space.kernel.size();
    std::vector<uint32_t> coeff(dim, 0);
    while (true) {
      FpVec x = space.particular;
      for (size_t d = 0; d < dim; ++d)
        if (coeff[d] != 0)
          for (size_t u = 0; u < x.size(); ++u)
            x[u] = fp_add(x[u], fp_mul(coeff[d], space.kernel[d][u], p), p);
      write_slots(sl, k, x);
      if (k == n) return true;
      if (search(k + 1)) return true;
      if (exhausted_budget) return false;
      // odometer
      size_t d = 0;
      for (; d < dim; ++d) {
        if (++coeff[d] < p) break;
        coeff[d] = 0;
      }
      if (d == dim) break;
    }
    return false;
  }
};

FpVec zero_vec(size_t n) { return FpVec(n, 0); }

} // namespace

MasseyOutcome solve(const MasseyProblem& problem, const Presentation& pres,
                    int64_t budget) {
  if (problem.alphas.size() < 2)
    throw std::invalid_argument("solve: need n >= 2 classes");
  for (const FpVec& a : problem.alphas)
    if (a.size() != pres.gens.size())
      throw std::invalid_argument("solve: class dimension mismatch");
  MinimalityResult mr = is_minimal(pres);
  if (!mr.minimal) throw std::invalid_argument("solve: presentation is not minimal");
  if (problem.mode == MasseyMode::Target && problem.target.size() != pres.relators.size())
    throw std::invalid_argument("solve: target dimension mismatch");

  MasseyOutcome out;
  LayeredSearch ls(pres, problem, budget);
  bool found = pres.gens.empty() ? true : ls.search(2);
  out.solves_used = ls.solves;
  out.budget_exhausted = ls.exhausted_budget;

  auto value_of_rep = [&]() {
    WitnessCheck wc = verify_witness(pres, ls.rep, problem.alphas);
    if (!wc.defined_ok)
      throw std::logic_error("solve: produced witness failed re-verification");
    if (problem.mode == MasseyMode::Vanish && !wc.vanish_ok)
      throw std::logic_error("solve: vanish witness has a nonzero relator image");
    return wc.value;
  };

  if (found) {
    out.witness = ls.rep;
    out.defined = SearchStatus::Yes;
    out.has_value = true;
    out.value = value_of_rep();
    switch (problem.mode) {
      case MasseyMode::Defined:
        out.vanishes =
            fp_vec_is_zero(out.value) ? SearchStatus::Yes : SearchStatus::Unknown;
        break;
      case MasseyMode::Vanish:
        out.vanishes = SearchStatus::Yes;
        break;
      case MasseyMode::Target:
        out.vanishes = fp_vec_is_zero(problem.target) ? SearchStatus::Yes
                                                      : SearchStatus::Unknown;
        break;
    }
    return out;
  }

  SearchStatus failure = ls.exhausted_budget ? SearchStatus::Unknown : SearchStatus::No;
  switch (problem.mode) {
    case MasseyMode::Defined:
      out.defined = failure;
      out.vanishes = failure == SearchStatus::No ? SearchStatus::No : SearchStatus::Unknown;
      break;
    case MasseyMode::Vanish:
      out.vanishes = failure;
      out.defined = SearchStatus::Unknown;
      break;
    case MasseyMode::Target:
      out.defined = SearchStatus::Unknown;
      out.vanishes = SearchStatus::Unknown;
      break;
  }
  return out;
}

Coset indeterminacy_coset(const QuadraticRing& ring, const FpVec& beta,
                          const FpVec& alpha_first, const FpVec& alpha_last) {
  const uint32_t p = static_cast<uint32_t>(ring.p);
  Coset c;
  c.offset = beta;
  std::vector<FpVec> span;
  for (size_t i = 0; i < ring.dim_h1(); ++i) {
    FpVec e(ring.dim_h1(), 0);
    e[i] = 1;
    span.push_back(cup(ring, alpha_first, e));
    span.push_back(cup(ring, alpha_last, e));
  }
  // reduce to an independent subset, keeping first-seen vectors
  FpMat rows;
  for (const FpVec& v : span) {
    FpMat trial = rows;
    trial.push_back(v);
    if (fp_rank(trial, p) > fp_rank(rows, p)) {
      rows.push_back(v);
      c.basis.push_back(v);
    }
  }
  return c;
}

bool coset_contains(const Coset& c, const FpVec& v, uint32_t p) {
  // v = offset + sum t_i basis_i for some t
  if (c.basis.empty()) return v == c.offset;
  FpMat a(v.size(), FpVec(c.basis.size(), 0));
  FpVec rhs(v.size(), 0);
  for (size_t row = 0; row < v.size(); ++row) {
    for (size_t b = 0; b < c.basis.size(); ++b) a[row][b] = c.basis[b][row];
    rhs[row] = fp_sub(v[row], c.offset[row], p);
  }
  return fp_solve(a, rhs, c.basis.size(), p).consistent;
}

CyclicCertificate cyclic_vanishing(const Presentation& pres, const QuadraticRing& ring,
                                   const FpVec& alpha, const FpVec& alpha_prime,
                                   int64_t budget) {
  const uint32_t p = static_cast<uint32_t>(pres.p);
  if (!fp_vec_is_zero(cup(ring, alpha, alpha_prime)))
    throw std::invalid_argument("cyclic_vanishing: cup(alpha, alpha') != 0");

  const int n = static_cast<int>(pres.p); // p-fold product
  const int size = n + 1;
  std::vector<FpVec> alphas(static_cast<size_t>(n - 1), alpha);
  alphas.push_back(alpha_prime);

  CyclicCertificate cert;

  // banded witness from the class coordinates
  std::vector<UniTri> rep;
  for (size_t g = 0; g < pres.gens.size(); ++g) {
    UniTri u = UniTri::identity_of(pres.p, size);
    for (int h = 1; h <= n - 1; ++h) u.set(h, h + 1, alpha[g]);
    u.set(n, n + 1, alpha_prime[g]);
    rep.push_back(std::move(u));
  }
  WitnessCheck wc = verify_witness(pres, rep, alphas);
  if (wc.defined_ok) {
    cert.value = wc.value;
    cert.witness = rep;
    if (fp_vec_is_zero(wc.value)) {
      cert.certified = true;
      cert.route = CyclicRoute::BandedDirect;
      cert.note = "banded witness has identity relator images";
      return cert;
    }
    Coset coset = indeterminacy_coset(ring, wc.value, alpha, alpha_prime);
    if (coset_contains(coset, zero_vec(wc.value.size()), p)) {
      cert.certified = true;
      cert.route = CyclicRoute::BandedCoset;
      cert.note = "0 lies in the indeterminacy coset of the banded witness value";
      return cert;
    }
  }

  // fall back to a vanish-mode search
  MasseyProblem prob{alphas, MasseyMode::Vanish, {}};
  MasseyOutcome out = solve(prob, pres, budget);
  if (out.vanishes == SearchStatus::Yes) {
    cert.certified = true;
    cert.route = CyclicRoute::Solver;
    cert.witness = out.witness;
    cert.note = "vanish witness found by layered search";
  } else {
    cert.certified = false;
    cert.route = CyclicRoute::Solver;
    cert.note = out.budget_exhausted ? "budget exhausted" : "search space exhausted";
  }
  return cert;
}

} // namespace opg
