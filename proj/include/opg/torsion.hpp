#pragma once

#include <optional>
#include <string>
#include <vector>

#include "opg/presentation.hpp"

namespace opg {

// Elements of M x| Im(theta), where M is the free module on the generator
// symbols and the Im(theta)-part acts by theta-powers: conjugation in
// G/K(G) raises Ker(theta)-elements to theta(g)-th powers.
struct SemidirectElem {
  std::vector<Padic> mvec;
  Padic t; // exponent of the base unit
};

// Law (m, t) (m', t') = (m + u0^t m', t + t'), u0 the chosen base unit.
struct SemidirectMonoid {
  int64_t p;
  int prec;   // precision of the mvec scalars
  int tprec;  // precision of the t-coordinates
  int ngens;
  Unit1 base; // u0; 1 when theta is trivial

  using Elem = SemidirectElem;
  Elem identity() const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, int64_t e) const;
};

// The generator theta-value of minimal valuation(theta(g) - 1); nullopt
// when theta is constantly 1 (then the computation degenerates to the plain
// abelianization and K(G) = [G, G]).
std::optional<Unit1> choose_base_unit(const OrientedPresentation& op);

struct ModulePresentation {
  std::vector<std::string> symbols;    // one per generator
  std::vector<std::vector<Padic>> rows; // one per relator
  int precision = 0;      // requested
  int precision_eff = 0;  // actually carried by the rows
};

// Presentation of Ker(theta)/K(G) as a module over Z/p^N: generator g_i
// maps to (e_i, dlog(theta(g_i), u0)); each relator's m-part is a relation
// row, and its t-part must vanish.
ModulePresentation twisted_abelianization(const OrientedPresentation& op);

// Smith normal form over the local ring Z/p^N: U A V = diag(p^{v_1} u_1, ...)
// with U, V unimodular and v_1 <= v_2 <= ...; v = N stands for an entry
// indistinguishable from 0 at this precision.
struct SNFResult {
  int64_t p = 0;
  int prec = 0;
  std::vector<int> divisor_vals;           // length min(rows, cols)
  std::vector<std::vector<uint64_t>> left; // U, rows x rows
  std::vector<std::vector<uint64_t>> right; // V, cols x cols
  std::vector<std::vector<uint64_t>> diag; // U A V, for checking
};

SNFResult snf(const std::vector<std::vector<Padic>>& a, int64_t p, int prec);

enum class TorsionVerdict { NotKummerian, TorsionFreeUpToPrecision };

struct TorsionReport {
  TorsionVerdict verdict = TorsionVerdict::TorsionFreeUpToPrecision;
  std::vector<int> definite_divisors; // valuations v with 0 < v < precision_eff
  int unit_divisors = 0;              // v = 0 pivots (killed symbols)
  int ambiguous = 0;                  // v = precision_eff divisors
  int free_rank = 0;                  // lower bound
  int witness_divisor = -1;           // smallest definite torsion valuation
  int precision = 0;
  int precision_eff = 0;
  std::string shape;
  ModulePresentation module;
};

// Divisors with 0 < v < N_eff are definite torsion, stable under any lift
// of the matrix; v = N_eff entries are reported as ambiguous and counted
// toward the free rank, never silently dropped.
TorsionReport torsion_report(const OrientedPresentation& op);

// Structure string for G/K(G) per the semidirect splitting, e.g.
// "Z_p^3 (+) Z/p^2 x| Im(theta)".
std::string theta_abelian_shape(const OrientedPresentation& op);

} // namespace opg
