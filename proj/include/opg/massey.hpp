#pragma once

#include <string>
#include <vector>

#include "opg/cohomology.hpp"
#include "opg/presentation.hpp"

namespace opg {

// Unipotent upper-triangular (n+1)x(n+1) matrix over F_p; the home of
// n-fold Massey product witnesses: a representation rho of the free group
// with rho_{h,h+1} = alpha_h realizes <alpha_1, ..., alpha_n> when every
// relator lands in I + F_p E_{1,n+1}.
struct UniTri {
  int64_t p = 0;
  int size = 0; // n + 1
  FpMat a;      // a[i][j] for i < j; diagonal implicit 1, below 0

  static UniTri identity_of(int64_t p, int size);
  uint32_t at(int i, int j) const; // 1-based, matching the (1, n+1) idiom
  void set(int i, int j, uint32_t v);
  bool is_identity() const;
};

struct UniTriMonoid {
  int64_t p;
  int size;
  using Elem = UniTri;
  Elem identity() const { return UniTri::identity_of(p, size); }
  Elem mul(const Elem& x, const Elem& y) const;
  Elem inv(const Elem& x) const;
  Elem pow(const Elem& x, int64_t e) const;
};

enum class MasseyMode { Defined, Vanish, Target };

struct MasseyProblem {
  std::vector<FpVec> alphas; // n >= 2 classes over generator duals
  MasseyMode mode = MasseyMode::Defined;
  FpVec target; // over relator duals, Target mode only
};

enum class SearchStatus { Yes, No, Unknown };

struct MasseyOutcome {
  SearchStatus defined = SearchStatus::Unknown;
  SearchStatus vanishes = SearchStatus::Unknown;
  bool has_value = false;
  FpVec value;                 // one element of the Massey set, over relator duals
  std::vector<UniTri> witness; // per generator, when a search succeeded
  int64_t solves_used = 0;
  bool budget_exhausted = false;
};

struct WitnessCheck {
  bool shape_ok = false;
  bool superdiagonal_ok = false;
  bool defined_ok = false; // images in I + F_p E_{1,n+1}
  bool vanish_ok = false;  // images = I
  std::vector<UniTri> images;
  FpVec value; // (1, n+1) entries per relator
};

// Checks rho_{h,h+1} = alpha_h on every generator and classifies the
// relator images.
WitnessCheck verify_witness(const Presentation& pres, const std::vector<UniTri>& rep,
                            const std::vector<FpVec>& alphas);

// The transgressed value of a defined witness: coordinate at the relator
// dual phi_r is the (1, n+1) entry of rho(r).
FpVec massey_value(const Presentation& pres, const std::vector<UniTri>& rep,
                   const std::vector<FpVec>& alphas);

// Layered search: entries at distance k are solved for k = 2..n in order;
// at each layer the relator image entries at distance k are affine in the
// layer's unknowns. Depth-first over the solution spaces, deterministic
// ordering, budget counted in layer-system solves.
MasseyOutcome solve(const MasseyProblem& problem, const Presentation& pres,
                    int64_t budget = 1000000);

// {beta + alpha_first u xi + alpha_last u xi' : xi, xi' in H^1} as offset
// plus an independent basis.
struct Coset {
  FpVec offset;
  std::vector<FpVec> basis;
};

Coset indeterminacy_coset(const QuadraticRing& ring, const FpVec& beta,
                          const FpVec& alpha_first, const FpVec& alpha_last);

bool coset_contains(const Coset& c, const FpVec& v, uint32_t p);

enum class CyclicRoute { BandedDirect, BandedCoset, Solver };

struct CyclicCertificate {
  bool certified = false;
  CyclicRoute route = CyclicRoute::Solver;
  FpVec value;                 // value of the banded witness, when built
  std::vector<UniTri> witness; // the witness backing the certificate
  std::string note;
};

// p-cyclic Massey vanishing certificate for <a, ..., a, a'> (p-1 copies of
// a), requiring cup(a, a') = 0. Builds the banded witness
//   rho(g) = I + a(g)(E_{1,2}+...+E_{p-1,p}) + a'(g) E_{p,p+1},
// verifies definedness, then certifies 0 via the indeterminacy coset or
// falls back to a vanish-mode search.
CyclicCertificate cyclic_vanishing(const Presentation& pres, const QuadraticRing& ring,
                                   const FpVec& alpha, const FpVec& alpha_prime,
                                   int64_t budget = 1000000);

} // namespace opg
