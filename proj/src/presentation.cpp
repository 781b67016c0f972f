#include "opg/presentation.hpp"

#include <set>
#include <stdexcept>

namespace opg {

int Presentation::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens.size(); ++i)
    if (gens[i] == name) return static_cast<int>(i);
  return -1;
}

Orientation Orientation::trivial(int64_t p, int ngens, int precision) {
  Orientation o;
  o.precision = precision;
  o.theta.assign(static_cast<size_t>(ngens), Unit1(p, 1, precision));
  return o;
}

Padic orientation_of_word(const OrientedPresentation& op, const Word& w) {
  UnitsMonoid m{op.p(), op.precision()};
  std::vector<Padic> assign;
  assign.reserve(op.orient.theta.size());
  for (const Unit1& u : op.orient.theta) assign.push_back(u.padic());
  return evaluate(w, assign, m);
}

namespace {

void check_word_gens(const Word& w, int ngens, Diagnostics& d, int relator_idx) {
  for (const Atom& a : w.atoms) {
    if (a.is_power()) {
      if (a.gen < 0 || a.gen >= ngens)
        d.issues.push_back("relator " + std::to_string(relator_idx) +
                           " references an undeclared generator");
    } else {
      check_word_gens(*a.lhs, ngens, d, relator_idx);
      check_word_gens(*a.rhs, ngens, d, relator_idx);
    }
  }
}

} // namespace

Diagnostics validate(const OrientedPresentation& op) {
  Diagnostics d;
  std::set<std::string> seen;
  for (const std::string& g : op.pres.gens)
    if (!seen.insert(g).second) d.issues.push_back("duplicate generator name: " + g);

  if (op.orient.theta.size() != op.pres.gens.size())
    d.issues.push_back("orientation does not cover every generator");

  for (size_t i = 0; i < op.pres.relators.size(); ++i)
    check_word_gens(op.pres.relators[i], op.pres.ngens(), d, static_cast<int>(i));
  if (!d.ok()) return d;

  for (const Unit1& u : op.orient.theta) {
    if (u.prime() != op.p() || u.prec() != op.precision())
      d.issues.push_back("orientation value with mismatched prime or precision");
  }
  if (!d.ok()) return d;

  for (size_t i = 0; i < op.pres.relators.size(); ++i) {
    Padic t = orientation_of_word(op, op.pres.relators[i]);
    if (t.value() != 1)
      d.issues.push_back("theta does not kill relator " + std::to_string(i) +
                         ": theta(r) = " + t.str());
  }
  return d;
}

MinimalityResult is_minimal(const Presentation& pres) {
  for (size_t r = 0; r < pres.relators.size(); ++r) {
    std::vector<int64_t> s = exponent_sums(pres.relators[r], pres.ngens());
    for (int64_t e : s) {
      if (((e % pres.p) + pres.p) % pres.p != 0)
        return MinimalityResult{false, static_cast<int>(r)};
    }
  }
  return MinimalityResult{true, -1};
}

namespace {

// Delete killed generators (substitute the identity) and renumber survivors.
std::optional<Word> delete_generators(const Word& w, const std::vector<int>& newindex) {
  Word out;
  for (const Atom& a : w.atoms) {
    if (a.is_power()) {
      int ni = newindex[static_cast<size_t>(a.gen)];
      if (ni < 0) continue;
      out.append_power(ni, a.exp);
    } else {
      std::optional<Word> l = delete_generators(*a.lhs, newindex);
      std::optional<Word> r = delete_generators(*a.rhs, newindex);
      if (!l || !r) continue; // a side died entirely: [1, w] = 1
      if (l->empty() || r->empty()) continue;
      out.append_commutator(std::move(*l), std::move(*r));
    }
  }
  if (out.empty()) return std::nullopt;
  return out;
}

} // namespace

OrientedPresentation quotient_by_generators(const OrientedPresentation& op,
                                            const std::vector<int>& kill) {
  std::vector<bool> killed(op.pres.gens.size(), false);
  for (int k : kill) {
    if (k < 0 || k >= op.pres.ngens())
      throw std::out_of_range("quotient_by_generators: generator index out of range");
    if (!op.orient.theta[static_cast<size_t>(k)].is_one())
      throw std::invalid_argument("quotient_by_generators: cannot kill " +
                                  op.pres.gens[static_cast<size_t>(k)] +
                                  ", its orientation value is not 1");
    killed[static_cast<size_t>(k)] = true;
  }

  OrientedPresentation out;
  out.pres.p = op.pres.p;
  out.orient.precision = op.orient.precision;
  std::vector<int> newindex(op.pres.gens.size(), -1);
  for (size_t i = 0; i < op.pres.gens.size(); ++i) {
    if (killed[i]) continue;
    newindex[i] = static_cast<int>(out.pres.gens.size());
    out.pres.gens.push_back(op.pres.gens[i]);
    out.orient.theta.push_back(op.orient.theta[i]);
  }
  for (const Word& r : op.pres.relators) {
    std::optional<Word> q = delete_generators(r, newindex);
    if (!q) continue;
    Word n = normalize(*q);
    if (!n.empty()) out.pres.relators.push_back(std::move(n));
  }
  return out;
}

} // namespace opg
