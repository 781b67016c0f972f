#pragma once

#include <string>
#include <vector>

#include "opg/presentation.hpp"

namespace opg {

// Surjection onto a finite abelian p-group Z/p^{e_1} x ... x Z/p^{e_k},
// given by the image vector of each generator.
struct FiniteQuotientMap {
  std::vector<int> target_exps;          // e_1, ..., e_k
  std::vector<std::vector<int64_t>> images; // per generator, length k

  int64_t index(int64_t p) const; // |target|
};

struct SchreierPresentation {
  Presentation pres;              // the kernel, on Schreier generators
  std::vector<Word> embedding;    // per Schreier generator, a word in the ambient gens
  std::vector<Word> transversal;  // per coset, prefix-closed representatives
  std::vector<std::pair<int, int>> origin; // (coset, ambient generator) per Schreier gen
};

// Reidemeister-Schreier: cosets are the target elements, the transversal
// comes from a breadth-first tree in generator declaration order, Schreier
// generators are s_{c,g} = t_c g t_{cg}^{-1} minus tree edges, and each
// pair (coset c, relator r) contributes the rewrite of t_c r t_c^{-1}.
SchreierPresentation kernel_presentation(const Presentation& pres,
                                         const FiniteQuotientMap& map);

// theta(s_{c,g}) by evaluating the embedding word in the units monoid.
Orientation restrict_orientation(const OrientedPresentation& op,
                                 const SchreierPresentation& sp);

struct AbelianizationCheck {
  std::vector<std::vector<int64_t>> matrix; // exponent sums of rewritten relators
  std::vector<int64_t> divisors;            // nonzero elementary divisors over Z
  int rank = 0;                             // = divisors.size()
  int free_rank = 0;                        // generators - rank
};

// Integer exponent-sum matrix of the rewritten relators with its Smith
// data; cross-validated in tests against an independent rewriting oracle.
AbelianizationCheck abelianization_check(const SchreierPresentation& sp);

} // namespace opg
