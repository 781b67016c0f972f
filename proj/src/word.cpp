#include "opg/word.hpp"

#include <stdexcept>

namespace opg {

Atom Atom::power(int gen, int64_t exp) {
  Atom a;
  a.gen = gen;
  a.exp = exp;
  return a;
}

Atom Atom::commutator(Word l, Word r) {
  Atom a;
  a.gen = -1;
  a.lhs = std::make_shared<const Word>(std::move(l));
  a.rhs = std::make_shared<const Word>(std::move(r));
  return a;
}

Word& Word::append_power(int gen, int64_t exp) {
  atoms.push_back(Atom::power(gen, exp));
  return *this;
}

Word& Word::append_commutator(Word l, Word r) {
  atoms.push_back(Atom::commutator(std::move(l), std::move(r)));
  return *this;
}

Word& Word::append(const Word& w) {
  atoms.insert(atoms.end(), w.atoms.begin(), w.atoms.end());
  return *this;
}

bool words_equal(const Word& a, const Word& b) {
  if (a.atoms.size() != b.atoms.size()) return false;
  for (size_t i = 0; i < a.atoms.size(); ++i) {
    const Atom& x = a.atoms[i];
    const Atom& y = b.atoms[i];
    if (x.is_power() != y.is_power()) return false;
    if (x.is_power()) {
      if (x.gen != y.gen || x.exp != y.exp) return false;
    } else {
      if (!words_equal(*x.lhs, *y.lhs) || !words_equal(*x.rhs, *y.rhs)) return false;
    }
  }
  return true;
}

Word normalize(const Word& w) {
  Word out;
  for (const Atom& a : w.atoms) {
    Atom na = a;
    if (!a.is_power()) {
      Word l = normalize(*a.lhs);
      Word r = normalize(*a.rhs);
      if (l.empty() || r.empty()) continue; // [1,w] = [w,1] = 1
      na = Atom::commutator(std::move(l), std::move(r));
    } else if (a.exp == 0) {
      continue;
    }
    // stack reduction: merge with the previous power of the same generator
    if (na.is_power() && !out.atoms.empty() && out.atoms.back().is_power() &&
        out.atoms.back().gen == na.gen) {
      out.atoms.back().exp += na.exp;
      if (out.atoms.back().exp == 0) out.atoms.pop_back();
    } else {
      out.atoms.push_back(std::move(na));
    }
  }
  return out;
}

Word expand_commutators(const Word& w) {
  Word flat;
  for (const Atom& a : w.atoms) {
    if (a.is_power()) {
      flat.atoms.push_back(a);
    } else {
      Word l = expand_commutators(*a.lhs);
      Word r = expand_commutators(*a.rhs);
      flat.append(inverse_reduced(l));
      flat.append(inverse_reduced(r));
      flat.append(l);
      flat.append(r);
    }
  }
  return normalize(flat);
}

Word inverse_reduced(const Word& w) {
  Word out;
  for (auto it = w.atoms.rbegin(); it != w.atoms.rend(); ++it) {
    if (!it->is_power())
      throw std::invalid_argument("inverse_reduced: word contains a commutator atom");
    out.atoms.push_back(Atom::power(it->gen, -it->exp));
  }
  return out;
}

std::vector<int64_t> exponent_sums(const Word& w, int ngens) {
  std::vector<int64_t> s(ngens, 0);
  for (const Atom& a : w.atoms) {
    if (!a.is_power()) continue; // commutators cancel
    if (a.gen >= ngens) throw std::out_of_range("exponent_sums: generator out of range");
    s[a.gen] += a.exp;
  }
  return s;
}

std::vector<std::pair<int, int>> letter_sequence(const Word& w) {
  Word flat = expand_commutators(w);
  std::vector<std::pair<int, int>> out;
  for (const Atom& a : flat.atoms) {
    int step = a.exp > 0 ? 1 : -1;
    if (a.exp > (1 << 20) || a.exp < -(1 << 20))
      throw std::invalid_argument("letter_sequence: exponent too large to expand");
    for (int64_t i = 0; i != a.exp; i += step) out.emplace_back(a.gen, step);
  }
  return out;
}

std::string word_str(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  bool first = true;
  for (const Atom& a : w.atoms) {
    if (!first) s += " * ";
    first = false;
    if (a.is_power()) {
      s += names.at(static_cast<size_t>(a.gen));
      if (a.exp != 1) s += "^" + std::to_string(a.exp);
    } else {
      s += "[" + word_str(*a.lhs, names) + ", " + word_str(*a.rhs, names) + "]";
    }
  }
  return s;
}

namespace {

// Group algebra F_p<X_1..X_d> truncated at total degree 2.
struct TruncAlg {
  uint32_t p;
  int ngens;

  struct Elem {
    uint32_t c;
    FpVec lin;
    FpMat quad;
  };

  Elem identity() const {
    return Elem{1, FpVec(static_cast<size_t>(ngens), 0),
                FpMat(static_cast<size_t>(ngens), FpVec(static_cast<size_t>(ngens), 0))};
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem r = identity();
    r.c = fp_mul(a.c, b.c, p);
    for (int i = 0; i < ngens; ++i)
      r.lin[i] = fp_add(fp_mul(a.c, b.lin[i], p), fp_mul(b.c, a.lin[i], p), p);
    for (int i = 0; i < ngens; ++i)
      for (int j = 0; j < ngens; ++j)
        r.quad[i][j] =
            fp_add(fp_add(fp_mul(a.c, b.quad[i][j], p), fp_mul(b.c, a.quad[i][j], p), p),
                   fp_mul(a.lin[i], b.lin[j], p), p);
    return r;
  }

  // (1 + l + q)^-1 = 1 - l - q + l*l for group-like elements (c = 1)
  Elem inv(const Elem& a) const {
    if (a.c != 1) throw std::domain_error("TruncAlg: inverse needs constant term 1");
    Elem r = identity();
    for (int i = 0; i < ngens; ++i) r.lin[i] = fp_sub(0, a.lin[i], p);
    for (int i = 0; i < ngens; ++i)
      for (int j = 0; j < ngens; ++j)
        r.quad[i][j] = fp_add(fp_sub(0, a.quad[i][j], p), fp_mul(a.lin[i], a.lin[j], p), p);
    return r;
  }

  Elem pow(const Elem& a, int64_t e) const { return generic_pow(*this, a, e); }
};

} // namespace

Magnus2 magnus2(const Word& w, int ngens, uint32_t p) {
  if (p == 2) throw std::invalid_argument("magnus2: p must be odd");
  TruncAlg alg{p, ngens};
  std::vector<TruncAlg::Elem> assign;
  assign.reserve(static_cast<size_t>(ngens));
  for (int i = 0; i < ngens; ++i) {
    TruncAlg::Elem e = alg.identity();
    e.lin[i] = 1;
    assign.push_back(std::move(e));
  }
  TruncAlg::Elem img = evaluate(w, assign, alg);
  return Magnus2{std::move(img.lin), std::move(img.quad)};
}

Word FreeWordMonoid::mul(const Elem& a, const Elem& b) const {
  Word c = a;
  c.append(b);
  return normalize(c);
}

} // namespace opg
