#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "opg/fp.hpp"

namespace opg {

// Words over free pro-p group generators. An atom is either a generator
// power g^e (e a nonzero signed integer) or a commutator [w1, w2] with
// [h, g] = h^-1 g^-1 h g. Commutators are first-class: evaluation handles
// them structurally instead of pre-expanding.

struct Word;

struct Atom {
  // generator power when gen >= 0; commutator when gen < 0
  int gen = -1;
  int64_t exp = 0;
  std::shared_ptr<const Word> lhs;
  std::shared_ptr<const Word> rhs;

  static Atom power(int gen, int64_t exp);
  static Atom commutator(Word l, Word r);
  bool is_power() const { return gen >= 0; }
};

struct Word {
  std::vector<Atom> atoms;

  bool empty() const { return atoms.empty(); }
  Word& append_power(int gen, int64_t exp);
  Word& append_commutator(Word l, Word r);
  Word& append(const Word& w);
};

bool words_equal(const Word& a, const Word& b);

// Free reduction at the top level of each atom sequence: adjacent equal-
// generator powers merge, zero exponents drop, and commutators with an
// identity side drop; commutator atoms are otherwise kept structurally.
Word normalize(const Word& w);

// Commutator-free form via [a,b] -> a^-1 b^-1 a b, recursively, normalized.
Word expand_commutators(const Word& w);

// Inverse of a commutator-free word.
Word inverse_reduced(const Word& w);

// Per-generator exponent sums (commutators contribute zero).
std::vector<int64_t> exponent_sums(const Word& w, int ngens);

// Single letters g^{+1}/g^{-1} of the expanded word, for rewriting.
std::vector<std::pair<int, int>> letter_sequence(const Word& w);

std::string word_str(const Word& w, const std::vector<std::string>& names);

// A monoid-with-inverses evaluation target. pow must agree with repeated
// multiplication; generic_pow provides it by square-and-multiply.
template <class M>
concept EvalTarget = requires(const M& m, const typename M::Elem& x, int64_t e) {
  { m.identity() } -> std::convertible_to<typename M::Elem>;
  { m.mul(x, x) } -> std::convertible_to<typename M::Elem>;
  { m.inv(x) } -> std::convertible_to<typename M::Elem>;
  { m.pow(x, e) } -> std::convertible_to<typename M::Elem>;
};

template <class M>
typename M::Elem generic_pow(const M& m, const typename M::Elem& x, int64_t e) {
  typename M::Elem base = e < 0 ? m.inv(x) : x;
  uint64_t n = e < 0 ? static_cast<uint64_t>(-(e + 1)) + 1 : static_cast<uint64_t>(e);
  typename M::Elem acc = m.identity();
  while (n > 0) {
    if (n & 1) acc = m.mul(acc, base);
    base = m.mul(base, base);
    n >>= 1;
  }
  return acc;
}

// Image of w under the homomorphism sending generator i to assign[i].
template <class M>
  requires EvalTarget<M>
typename M::Elem evaluate(const Word& w, const std::vector<typename M::Elem>& assign,
                          const M& m) {
  typename M::Elem acc = m.identity();
  for (const Atom& a : w.atoms) {
    if (a.is_power()) {
      if (a.gen >= static_cast<int>(assign.size()))
        throw std::out_of_range("evaluate: generator without an assignment");
      acc = m.mul(acc, m.pow(assign[a.gen], a.exp));
    } else {
      typename M::Elem l = evaluate(*a.lhs, assign, m);
      typename M::Elem r = evaluate(*a.rhs, assign, m);
      acc = m.mul(acc, m.mul(m.mul(m.inv(l), m.inv(r)), m.mul(l, r)));
    }
  }
  return acc;
}

// Degree <= 2 coefficients of the Magnus expansion x_i -> 1 + X_i over F_p:
// linear[i] is the coefficient of X_i, quad[i][j] of X_i X_j (noncommuting).
struct Magnus2 {
  FpVec linear;
  FpMat quad;
};

Magnus2 magnus2(const Word& w, int ngens, uint32_t p);

// Words form an evaluation target themselves (the free group on reduced
// words); used for Schreier embedding checks.
struct FreeWordMonoid {
  using Elem = Word;
  Elem identity() const { return Word{}; }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const { return inverse_reduced(a); }
  Elem pow(const Elem& a, int64_t e) const { return generic_pow(*this, a, e); }
};

} // namespace opg
