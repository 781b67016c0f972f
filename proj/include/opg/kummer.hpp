#pragma once

#include <functional>
#include <vector>

#include "opg/presentation.hpp"

namespace opg {

// Continuous 1-cocycles c : G -> Z_p(theta)/p^N obey
//   c(gh) = c(g) + theta(g) c(h),
// so the value of a word is an affine function of the unknown generator
// values c(x_i). AffineForm tracks that function; CocyclePair carries the
// twist theta(w) along with it.

struct AffineForm {
  Padic constant;
  std::vector<Padic> coeff;

  AffineForm scaled(const Padic& s) const;
  AffineForm plus(const AffineForm& o) const;
};

struct CocyclePair {
  AffineForm form;
  Padic twist;
};

// Monoid law (c, u) * (c', u') = (c + u c', u u'); powers use the q-integer
// identity c(x^m) = qint(u, m) c(x).
struct CocycleMonoid {
  int64_t p;
  int prec;
  int ngens;

  using Elem = CocyclePair;
  Elem identity() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, int64_t e) const;

  Elem generator(int i, const Unit1& theta_i) const;
};

// One row per relator, one column per generator: the value the relator
// forces on an arbitrary prescription of c on the generators. Rows of a
// valid oriented presentation carry zero constant term and trivial twist.
std::vector<std::vector<Padic>> constraint_rows(const OrientedPresentation& op);

struct KummerVerdict {
  bool holds = false;
  int precision = 0;
  // when holds is false: the first failing level and its witness entry
  int level = 0;
  int witness_relator = -1;
  int witness_generator = -1;
  Padic witness_entry;
  std::vector<std::vector<Padic>> matrix;
};

// Level n (1 <= n <= N) passes iff every row entry is 0 mod p^n. A failure
// is exact; a pass only certifies surjectivity of the defining maps up to
// the working precision.
KummerVerdict is_kummerian(const OrientedPresentation& op);

struct OrientationSearchResult {
  std::vector<Orientation> classes; // sorted lexicographically by residue
  bool budget_exceeded = false;
  size_t frontier_size = 0; // at the moment the budget tripped
  int64_t candidates_tested = 0;
};

// Breadth-first digit lifting over theta assignments: enumerate values mod
// p^2, keep those whose rows vanish mod p^2, extend digit by digit up to
// mod p^N. An empty result certifies that no orientation makes the
// presentation cohomologically Kummerian, at any precision.
OrientationSearchResult search_orientations(const Presentation& pres, int precision,
                                            int64_t budget = 1000000);

// Evaluator for the cocycle with prescribed generator values; requires a
// presentation that passed is_kummerian at the working precision.
class Cocycle {
public:
  Cocycle(const OrientedPresentation& op, std::vector<Padic> prescribed);
  Padic operator()(const Word& w) const;

private:
  const OrientedPresentation& op_;
  std::vector<Padic> prescribed_;
};

Cocycle solve_cocycle(const OrientedPresentation& op, std::vector<Padic> prescribed);

// True iff every continuous 1-cocycle vanishes on w, decided on the basis
// cocycles; this is the membership test for the cocycle-kernel intersection
// that cuts out K(G) of a Kummerian oriented pro-p group.
bool kg_annihilation_check(const OrientedPresentation& op, const Word& w);

} // namespace opg
