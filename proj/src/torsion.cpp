#include "opg/torsion.hpp"

#include <algorithm>
#include <stdexcept>

namespace opg {

SemidirectElem SemidirectMonoid::identity() const {
  SemidirectElem e;
  e.mvec.assign(static_cast<size_t>(ngens), Padic(p, 0, prec));
  e.t = Padic(p, 0, tprec);
  return e;
}

namespace {

Padic unit_power(const Unit1& base, const Padic& t, int prec) {
  Padic u = pow_padic(base, t).padic();
  return u.prec() > prec ? u.truncated(prec) : u;
}

} // namespace

SemidirectElem SemidirectMonoid::mul(const Elem& a, const Elem& b) const {
  Padic ut = unit_power(base, a.t, prec);
  SemidirectElem r;
  r.mvec.reserve(a.mvec.size());
  for (size_t i = 0; i < a.mvec.size(); ++i) r.mvec.push_back(a.mvec[i] + ut * b.mvec[i]);
  r.t = a.t + b.t;
  return r;
}

SemidirectElem SemidirectMonoid::inv(const Elem& a) const {
  Padic uti = inv_unit(unit_power(base, a.t, prec));
  SemidirectElem r;
  r.mvec.reserve(a.mvec.size());
  for (const Padic& m : a.mvec) r.mvec.push_back(-(uti * m));
  r.t = -a.t;
  return r;
}

SemidirectElem SemidirectMonoid::pow(const Elem& a, int64_t e) const {
  // (m, t)^e = (qint(u0^t, e) m, e t), same q-integer identity as cocycles
  Padic ut = unit_power(base, a.t, prec);
  Padic q = qint(Unit1(ut), e);
  SemidirectElem r;
  r.mvec.reserve(a.mvec.size());
  for (const Padic& m : a.mvec) r.mvec.push_back(q * m);
  r.t = a.t * Padic(p, e, tprec);
  return r;
}

std::optional<Unit1> choose_base_unit(const OrientedPresentation& op) {
  int best_val = op.precision();
  int best = -1;
  for (size_t i = 0; i < op.orient.theta.size(); ++i) {
    Padic d = op.orient.theta[i].padic() - Padic(op.p(), 1, op.precision());
    int v = valuation(d);
    if (v < best_val) {
      best_val = v;
      best = static_cast<int>(i); // ties resolve to declaration order
    }
  }
  if (best < 0) return std::nullopt;
  return op.orient.theta[static_cast<size_t>(best)];
}

ModulePresentation twisted_abelianization(const OrientedPresentation& op) {
  const int64_t p = op.p();
  const int N = op.precision();
  std::optional<Unit1> base = choose_base_unit(op);

  ModulePresentation mp;
  mp.symbols = op.pres.gens;
  mp.precision = N;

  int tprec;
  Unit1 u0(p, 1, N);
  std::vector<Padic> tvals;
  if (!base) {
    tprec = N;
    tvals.assign(op.pres.gens.size(), Padic(p, 0, N));
  } else {
    u0 = *base;
    int v0 = valuation(u0.padic() - Padic(p, 1, N));
    tprec = N - v0;
    if (tprec < 1)
      throw std::domain_error("twisted_abelianization: precision exhausted by dlog");
    for (const Unit1& th : op.orient.theta) {
      if (th.is_one()) {
        tvals.emplace_back(p, 0, tprec);
      } else {
        Padic t = dlog(th, u0); // may throw: theta value outside <u0>
        tvals.push_back(t.prec() > tprec ? t.truncated(tprec) : t);
      }
    }
  }

  SemidirectMonoid m{p, N, tprec, op.pres.ngens(), u0};
  std::vector<SemidirectElem> assign;
  for (int i = 0; i < op.pres.ngens(); ++i) {
    SemidirectElem e = m.identity();
    e.mvec[static_cast<size_t>(i)] = Padic(p, 1, N);
    e.t = tvals[static_cast<size_t>(i)];
    assign.push_back(std::move(e));
  }

  int prec_eff = N;
  for (const Word& r : op.pres.relators) {
    SemidirectElem img = evaluate(r, assign, m);
    if (!img.t.is_zero())
      throw std::logic_error(
          "twisted_abelianization: relator with nonzero t-component");
    for (const Padic& e : img.mvec) prec_eff = std::min(prec_eff, e.prec());
    mp.rows.push_back(std::move(img.mvec));
  }
  mp.precision_eff = prec_eff;
  return mp;
}

namespace {

struct ZpCtx {
  int64_t p;
  int prec;
  uint64_t mod;

  uint64_t mul(uint64_t a, uint64_t b) const {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % mod);
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return (a + mod - b) % mod; }
  int val(uint64_t a) const {
    if (a == 0) return prec;
    int v = 0;
    while (a % static_cast<uint64_t>(p) == 0) {
      a /= static_cast<uint64_t>(p);
      ++v;
    }
    return v;
  }
  uint64_t inv_unit(uint64_t a) const {
    // p^prec <= 2^62, extended Euclid
    int64_t t = 0, nt = 1;
    int64_t r = static_cast<int64_t>(mod), nr = static_cast<int64_t>(a % mod);
    while (nr != 0) {
      int64_t q = r / nr;
      t -= q * nt;
      std::swap(t, nt);
      r -= q * nr;
      std::swap(r, nr);
    }
    if (r != 1) throw std::domain_error("snf: inverse of a non-unit");
    if (t < 0) t += static_cast<int64_t>(mod);
    return static_cast<uint64_t>(t);
  }
};

using U64Mat = std::vector<std::vector<uint64_t>>;

U64Mat eye(size_t n, uint64_t one = 1) {
  U64Mat m(n, std::vector<uint64_t>(n, 0));
  for (size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

void row_op(U64Mat& m, size_t dst, size_t src, uint64_t f, const ZpCtx& z) {
  for (size_t j = 0; j < m[dst].size(); ++j)
    m[dst][j] = z.sub(m[dst][j], z.mul(f, m[src][j]));
}

void col_op(U64Mat& m, size_t dst, size_t src, uint64_t f, const ZpCtx& z) {
  for (size_t i = 0; i < m.size(); ++i)
    m[i][dst] = z.sub(m[i][dst], z.mul(f, m[i][src]));
}

void scale_row(U64Mat& m, size_t i, uint64_t f, const ZpCtx& z) {
  for (uint64_t& x : m[i]) x = z.mul(x, f);
}

} // namespace

SNFResult snf(const std::vector<std::vector<Padic>>& a, int64_t p, int prec) {
  ZpCtx z{p, prec, Padic(p, 0, prec).modulus()};
  const size_t rows = a.size();
  const size_t cols = rows == 0 ? 0 : a[0].size();

  U64Mat m(rows, std::vector<uint64_t>(cols, 0));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) {
      const Padic& e = a[i][j];
      if (e.prime() != p) throw std::invalid_argument("snf: prime mismatch");
      m[i][j] = (e.prec() >= prec ? e.truncated(prec) : Padic(p, 0, prec)).value();
      if (e.prec() < prec)
        throw std::invalid_argument("snf: entry below the requested precision");
    }

  SNFResult out;
  out.p = p;
  out.prec = prec;
  out.left = eye(rows);
  out.right = eye(cols);

  const size_t steps = std::min(rows, cols);
  for (size_t k = 0; k < steps; ++k) {
    // pivot: minimal valuation over the trailing block
    int best = prec;
    size_t pi = k, pj = k;
    for (size_t i = k; i < rows; ++i)
      for (size_t j = k; j < cols; ++j) {
        int v = z.val(m[i][j]);
        if (v < best) {
          best = v;
          pi = i;
          pj = j;
        }
      }
    if (best >= prec) {
      for (size_t k2 = k; k2 < steps; ++k2) out.divisor_vals.push_back(prec);
      break;
    }
    std::swap(m[k], m[pi]);
    std::swap(out.left[k], out.left[pi]);
    for (size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
    for (size_t i = 0; i < cols; ++i) std::swap(out.right[i][k], out.right[i][pj]);

    // normalize the pivot to p^v
    uint64_t pv = 1;
    for (int i = 0; i < best; ++i) pv *= static_cast<uint64_t>(p);
    uint64_t unit = z.inv_unit(m[k][k] / pv);
    scale_row(m, k, unit, z);
    scale_row(out.left, k, unit, z);

    // clear the column and the row; every entry is divisible by p^v
    for (size_t i = k + 1; i < rows; ++i) {
      if (m[i][k] == 0) continue;
      uint64_t f = m[i][k] / pv; // exact: val(m[i][k]) >= v
      row_op(m, i, k, f, z);
      row_op(out.left, i, k, f, z);
    }
    for (size_t j = k + 1; j < cols; ++j) {
      if (m[k][j] == 0) continue;
      uint64_t f = m[k][j] / pv;
      col_op(m, j, k, f, z);
      col_op(out.right, j, k, f, z);
    }
    out.divisor_vals.push_back(best);
  }
  out.diag = std::move(m);
  std::sort(out.divisor_vals.begin(), out.divisor_vals.end());
  return out;
}

TorsionReport torsion_report(const OrientedPresentation& op) {
  TorsionReport rep;
  rep.module = twisted_abelianization(op);
  rep.precision = rep.module.precision;
  rep.precision_eff = rep.module.precision_eff;

  const int Neff = rep.precision_eff;
  SNFResult s = snf(rep.module.rows, op.p(), Neff);

  const size_t nsym = rep.module.symbols.size();
  const size_t ndiag = s.divisor_vals.size();
  for (int v : s.divisor_vals) {
    if (v == 0)
      ++rep.unit_divisors;
    else if (v < Neff)
      rep.definite_divisors.push_back(v);
    else
      ++rep.ambiguous;
  }
  rep.free_rank = rep.ambiguous + static_cast<int>(nsym - std::min(nsym, ndiag));
  if (!rep.definite_divisors.empty()) {
    rep.verdict = TorsionVerdict::NotKummerian;
    rep.witness_divisor = rep.definite_divisors.front();
  } else {
    rep.verdict = TorsionVerdict::TorsionFreeUpToPrecision;
  }

  std::string shape = "Z_p^" + std::to_string(rep.free_rank);
  for (int v : rep.definite_divisors) shape += " (+) Z/p^" + std::to_string(v);
  std::optional<Unit1> base = choose_base_unit(op);
  if (base) shape += " x| Im(theta)";
  rep.shape = shape;
  return rep;
}

std::string theta_abelian_shape(const OrientedPresentation& op) {
  return torsion_report(op).shape;
}

} // namespace opg
