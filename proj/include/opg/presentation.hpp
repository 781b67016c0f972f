#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opg/padic.hpp"
#include "opg/word.hpp"

namespace opg {

struct Presentation {
  int64_t p = 0;
  std::vector<std::string> gens;
  std::vector<Word> relators;

  int ngens() const { return static_cast<int>(gens.size()); }
  int gen_index(const std::string& name) const; // -1 when absent
};

// Orientation values all live at one shared precision; verdicts downstream
// are stated "at precision N".
struct Orientation {
  int precision = 0;
  std::vector<Unit1> theta; // indexed like Presentation::gens

  static Orientation trivial(int64_t p, int ngens, int precision);
};

struct OrientedPresentation {
  Presentation pres;
  Orientation orient;

  int64_t p() const { return pres.p; }
  int precision() const { return orient.precision; }
};

struct Diagnostics {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// The units monoid (1 + pZ_p, x) as an evaluation target; evaluating a
// relator here computes theta(r).
struct UnitsMonoid {
  int64_t p;
  int prec;
  using Elem = Padic;
  Elem identity() const { return Padic(p, 1, prec); }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem inv(const Elem& a) const { return inv_unit(a); }
  Elem pow(const Elem& a, int64_t e) const { return pow_int(a, e); }
};

Padic orientation_of_word(const OrientedPresentation& op, const Word& w);

// Checks the container invariants and that theta kills every relator.
Diagnostics validate(const OrientedPresentation& op);

// Minimal presentation test: every relator has all per-generator exponent
// sums divisible by p (its image in F/Phi(F) is trivial). Returns the first
// offending relator otherwise.
struct MinimalityResult {
  bool minimal = true;
  int offending_relator = -1;
};
MinimalityResult is_minimal(const Presentation& pres);

// Quotient by the normal subgroup generated by a set of generators, which
// must have trivial orientation. Killed generators vanish from relators;
// relators that collapse to the identity are dropped.
OrientedPresentation quotient_by_generators(const OrientedPresentation& op,
                                            const std::vector<int>& kill);

} // namespace opg
