#pragma once

// Seeded random minimal oriented presentations for the two-oracle
// equivalence suites: <= 4 generators, <= 2 relators built from commutators,
// iterated commutators and p-th powers of orientation-trivial generators, so
// theta always kills the relators and exponent sums stay divisible by p.

#include <random>
#include <string>

#include "opg/presentation.hpp"

namespace opg::testgen {

inline OrientedPresentation random_minimal(std::mt19937_64& rng, int64_t p, int prec) {
  int ngens = 1 + static_cast<int>(rng() % 4);
  Presentation pres;
  pres.p = p;
  for (int g = 0; g < ngens; ++g) pres.gens.push_back("g" + std::to_string(g));

  Orientation orient = Orientation::trivial(p, ngens, prec);
  std::vector<int> trivial;
  if (rng() % 2 == 0) {
    for (int g = 0; g < ngens; ++g) trivial.push_back(g);
  } else {
    // nontrivial values all have valuation(theta - 1) = 1
    for (int g = 0; g < ngens; ++g) {
      switch (rng() % 4) {
        case 0:
          orient.theta[static_cast<size_t>(g)] =
              Unit1(p, 1 + p * (1 + static_cast<int64_t>(rng() % (p - 1))), prec);
          break;
        case 1:
          orient.theta[static_cast<size_t>(g)] = Unit1(p, 1 + p + p * p, prec);
          break;
        default:
          trivial.push_back(g);
          break;
      }
    }
    if (trivial.empty()) {
      trivial.push_back(0);
      orient.theta[0] = Unit1(p, 1, prec);
    }
  }

  auto random_gen = [&]() { return static_cast<int>(rng() % static_cast<uint64_t>(ngens)); };
  int nrel = static_cast<int>(rng() % 3);
  for (int r = 0; r < nrel; ++r) {
    Word w;
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < parts; ++k) {
      switch (rng() % 4) {
        case 0: {
          Word a, b;
          a.append_power(random_gen(), 1);
          b.append_power(random_gen(), 1);
          w.append_commutator(std::move(a), std::move(b));
          break;
        }
        case 1: {
          Word a, b, c;
          a.append_power(random_gen(), 1);
          b.append_power(random_gen(), 1);
          Word inner;
          inner.append_commutator(std::move(a), std::move(b));
          c.append_power(random_gen(), 1);
          w.append_commutator(std::move(inner), std::move(c));
          break;
        }
        default: {
          // p-th powers only of orientation-trivial generators
          int g = trivial[static_cast<size_t>(rng() % trivial.size())];
          int64_t e = p * (1 + static_cast<int64_t>(rng() % 2));
          if (rng() % 2 == 0) e = -e;
          if (rng() % 3 == 0) e = p * p;
          w.append_power(g, e);
          break;
        }
      }
    }
    Word n = normalize(w);
    if (!n.empty()) pres.relators.push_back(std::move(n));
  }
  return OrientedPresentation{std::move(pres), std::move(orient)};
}

} // namespace opg::testgen
