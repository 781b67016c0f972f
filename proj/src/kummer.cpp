#include "opg/kummer.hpp"

#include <algorithm>
#include <stdexcept>

namespace opg {

AffineForm AffineForm::scaled(const Padic& s) const {
  AffineForm r;
  r.constant = constant * s;
  r.coeff.reserve(coeff.size());
  for (const Padic& c : coeff) r.coeff.push_back(c * s);
  return r;
}

AffineForm AffineForm::plus(const AffineForm& o) const {
  AffineForm r;
  r.constant = constant + o.constant;
  r.coeff.reserve(coeff.size());
  for (size_t i = 0; i < coeff.size(); ++i) r.coeff.push_back(coeff[i] + o.coeff[i]);
  return r;
}

CocyclePair CocycleMonoid::identity() const {
  AffineForm f;
  f.constant = Padic(p, 0, prec);
  f.coeff.assign(static_cast<size_t>(ngens), Padic(p, 0, prec));
  return CocyclePair{std::move(f), Padic(p, 1, prec)};
}

CocyclePair CocycleMonoid::mul(const Elem& a, const Elem& b) const {
  return CocyclePair{a.form.plus(b.form.scaled(a.twist)), a.twist * b.twist};
}

CocyclePair CocycleMonoid::inv(const Elem& a) const {
  Padic ti = inv_unit(a.twist);
  return CocyclePair{a.form.scaled(-ti), ti};
}

CocyclePair CocycleMonoid::pow(const Elem& a, int64_t e) const {
  // c(x^e) = qint(theta(x), e) c(x); exact geometric sums, no digit loss
  Padic q = qint(Unit1(a.twist), e);
  return CocyclePair{a.form.scaled(q), pow_int(a.twist, e)};
}

CocyclePair CocycleMonoid::generator(int i, const Unit1& theta_i) const {
  CocyclePair e = identity();
  e.form.coeff[static_cast<size_t>(i)] = Padic(p, 1, prec);
  e.twist = theta_i.padic();
  return e;
}

namespace {

std::vector<CocyclePair> relator_images(const Presentation& pres,
                                        const std::vector<Unit1>& theta, int prec) {
  CocycleMonoid m{pres.p, prec, pres.ngens()};
  std::vector<CocyclePair> assign;
  assign.reserve(theta.size());
  for (int i = 0; i < pres.ngens(); ++i)
    assign.push_back(m.generator(i, theta[static_cast<size_t>(i)]));
  std::vector<CocyclePair> images;
  images.reserve(pres.relators.size());
  for (const Word& r : pres.relators) images.push_back(evaluate(r, assign, m));
  return images;
}

} // namespace

std::vector<std::vector<Padic>> constraint_rows(const OrientedPresentation& op) {
  std::vector<CocyclePair> images =
      relator_images(op.pres, op.orient.theta, op.precision());
  std::vector<std::vector<Padic>> rows;
  rows.reserve(images.size());
  for (CocyclePair& img : images) {
    if (!img.form.constant.is_zero())
      throw std::logic_error("constraint_rows: nonzero constant term on a relator");
    if (img.twist.value() != 1)
      throw std::logic_error("constraint_rows: relator with nontrivial twist; "
                             "run validate first");
    rows.push_back(std::move(img.form.coeff));
  }
  return rows;
}

KummerVerdict is_kummerian(const OrientedPresentation& op) {
  KummerVerdict v;
  v.precision = op.precision();
  v.matrix = constraint_rows(op);

  int best_val = op.precision();
  for (size_t r = 0; r < v.matrix.size(); ++r) {
    for (size_t g = 0; g < v.matrix[r].size(); ++g) {
      int val = valuation(v.matrix[r][g]);
      if (val < best_val) {
        best_val = val;
        v.witness_relator = static_cast<int>(r);
        v.witness_generator = static_cast<int>(g);
        v.witness_entry = v.matrix[r][g];
      }
    }
  }
  if (best_val >= op.precision()) {
    v.holds = true;
    v.level = op.precision();
  } else {
    v.holds = false;
    v.level = best_val + 1; // first level where the entry is not 0 mod p^level
  }
  return v;
}

namespace {

// theta values are 1 + p*a with a running over digits; a candidate is the
// vector of a-values mod p^{stage-1}, i.e. theta mod p^stage.
struct Candidate {
  std::vector<uint64_t> avals;
};

// A candidate survives a stage when theta kills every relator and every
// row entry vanishes, both mod p^stage.
bool candidate_passes(const Presentation& pres, const std::vector<Unit1>& theta,
                      int stage) {
  std::vector<CocyclePair> images = relator_images(pres, theta, stage);
  for (const CocyclePair& img : images) {
    if (img.twist.value() != 1) return false;
    for (const Padic& e : img.form.coeff)
      if (!e.is_zero()) return false;
  }
  return true;
}

std::vector<Unit1> theta_of(const Candidate& c, int64_t p, int stage) {
  std::vector<Unit1> theta;
  theta.reserve(c.avals.size());
  for (uint64_t a : c.avals)
    theta.emplace_back(Padic(p, 1 + p * static_cast<int64_t>(a), stage));
  return theta;
}

} // namespace

OrientationSearchResult search_orientations(const Presentation& pres, int precision,
                                            int64_t budget) {
  MinimalityResult mr = is_minimal(pres);
  if (!mr.minimal)
    throw std::invalid_argument(
        "search_orientations: the presentation is not minimal (relator " +
        std::to_string(mr.offending_relator) + ")");

  OrientationSearchResult out;
  const int64_t p = pres.p;
  const int d = pres.ngens();
  std::vector<Candidate> frontier{Candidate{std::vector<uint64_t>(
      static_cast<size_t>(d), 0)}};

  // stage m tests theta mod p^m; digits of the a-values are added one at a
  // time, so the frontier at stage m knows a mod p^{m-1}
  uint64_t digit_mod = 1;
  for (int stage = 2; stage <= precision; ++stage) {
    std::vector<Candidate> next;
    std::vector<uint64_t> ext(static_cast<size_t>(d), 0);
    for (const Candidate& c : frontier) {
      // enumerate all extensions of each a-value by one base-p digit
      std::fill(ext.begin(), ext.end(), 0);
      while (true) {
        Candidate cand = c;
        for (int i = 0; i < d; ++i)
          cand.avals[static_cast<size_t>(i)] +=
              ext[static_cast<size_t>(i)] * digit_mod;
        ++out.candidates_tested;
        if (out.candidates_tested > budget) {
          out.budget_exceeded = true;
          out.frontier_size = frontier.size();
          out.classes.clear();
          return out;
        }
        if (candidate_passes(pres, theta_of(cand, p, stage), stage))
          next.push_back(std::move(cand));
        // odometer over ext
        int i = 0;
        for (; i < d; ++i) {
          if (++ext[static_cast<size_t>(i)] < static_cast<uint64_t>(p)) break;
          ext[static_cast<size_t>(i)] = 0;
        }
        if (i == d) break;
      }
    }
    frontier = std::move(next);
    digit_mod *= static_cast<uint64_t>(p);
    if (frontier.empty()) break;
  }

  std::sort(frontier.begin(), frontier.end(), [](const Candidate& a, const Candidate& b) {
    return a.avals < b.avals;
  });
  for (const Candidate& c : frontier) {
    Orientation o;
    o.precision = precision;
    o.theta = theta_of(c, p, precision);
    out.classes.push_back(std::move(o));
  }
  return out;
}

Cocycle::Cocycle(const OrientedPresentation& op, std::vector<Padic> prescribed)
    : op_(op), prescribed_(std::move(prescribed)) {
  if (prescribed_.size() != op.pres.gens.size())
    throw std::invalid_argument("solve_cocycle: need one prescribed value per generator");
  KummerVerdict v = is_kummerian(op);
  if (!v.holds)
    throw std::domain_error(
        "solve_cocycle: the oriented presentation fails Kummerianity at level " +
        std::to_string(v.level));
}

Padic Cocycle::operator()(const Word& w) const {
  CocycleMonoid m{op_.p(), op_.precision(), op_.pres.ngens()};
  std::vector<CocyclePair> assign;
  assign.reserve(prescribed_.size());
  for (int i = 0; i < op_.pres.ngens(); ++i) {
    CocyclePair e = m.identity();
    e.form.constant = prescribed_[static_cast<size_t>(i)];
    e.twist = op_.orient.theta[static_cast<size_t>(i)].padic();
    assign.push_back(std::move(e));
  }
  return evaluate(w, assign, m).form.constant;
}

Cocycle solve_cocycle(const OrientedPresentation& op, std::vector<Padic> prescribed) {
  return Cocycle(op, std::move(prescribed));
}

bool kg_annihilation_check(const OrientedPresentation& op, const Word& w) {
  KummerVerdict v = is_kummerian(op);
  if (!v.holds)
    throw std::domain_error("kg_annihilation_check: presentation is not Kummerian");
  // evaluate once with symbolic generator values; w dies under every cocycle
  // iff it dies under the d basis cocycles, by affine-linearity
  CocycleMonoid m{op.p(), op.precision(), op.pres.ngens()};
  std::vector<CocyclePair> assign;
  for (int i = 0; i < op.pres.ngens(); ++i)
    assign.push_back(m.generator(i, op.orient.theta[static_cast<size_t>(i)]));
  CocyclePair img = evaluate(w, assign, m);
  for (const Padic& c : img.form.coeff)
    if (!c.is_zero()) return false;
  return img.form.constant.is_zero();
}

} // namespace opg
