// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runs against the library the same way the CLI does.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <vector>

#include "opg/cohomology.hpp"
#include "opg/corpus.hpp"
#include "opg/kummer.hpp"
#include "opg/massey.hpp"
#include "opg/parser.hpp"
#include "opg/schreier.hpp"
#include "opg/torsion.hpp"
#include "random_presentations.hpp"

using namespace opg;

namespace {

struct Harness {
  int failures = 0;
  int current = 0;
  bool current_ok = true;
  std::string detail;

  void criterion(int n, const std::string& title, const std::function<void()>& body) {
    current = n;
    current_ok = true;
    detail.clear();
    auto t0 = std::chrono::steady_clock::now();
    try {
      body();
    } catch (const std::exception& e) {
      current_ok = false;
      detail = std::string("exception: ") + e.what();
    }
    auto t1 = std::chrono::steady_clock::now();
    double secs = std::chrono::duration<double>(t1 - t0).count();
    std::printf("[criterion %2d] %s: %s (%.2fs)%s%s\n", n, title.c_str(),
                current_ok ? "PASS" : "FAIL", secs, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!current_ok) ++failures;
  }

  void require(bool cond, const std::string& why) {
    if (!cond && current_ok) {
      current_ok = false;
      detail = why;
    }
  }

  void require_under(double secs, double limit) {
    require(secs <= limit, "runtime " + std::to_string(secs) + "s over the " +
                               std::to_string(limit) + "s limit");
  }
};

FpVec random_class(std::mt19937_64& rng, size_t dim, uint32_t p) {
  FpVec v(dim, 0);
  for (auto& x : v) x = static_cast<uint32_t>(rng() % p);
  return v;
}

const CorpusEntry& entry(const std::string& name) {
  for (const CorpusEntry& e : corpus())
    if (e.name == name) return e;
  throw std::runtime_error("no corpus entry named " + name);
}

} // namespace

int main() {
  Harness h;

  // 1. orientation forcing on the (2,2) two-relator amalgam
  h.criterion(1, "orientation forcing, theta(x) = 1-p", [&] {
    auto t0 = std::chrono::steady_clock::now();
    OrientedPresentation op = parse_presentation(entry("amalgam_d1_2_d2_2").text);
    OrientationSearchResult r = search_orientations(op.pres, 4);
    auto t1 = std::chrono::steady_clock::now();
    h.require(!r.budget_exceeded, "budget exceeded");
    h.require(r.classes.size() == 1,
              "expected one class, got " + std::to_string(r.classes.size()));
    if (r.classes.size() == 1) {
      // tolerance: equality mod p^{N-1} = 3^3
      h.require(r.classes[0].theta[0].padic().truncated(3) == Padic(3, -2, 3),
                "theta(x) != 1-p mod 27");
      for (size_t g = 1; g < 7; ++g)
        h.require(r.classes[0].theta[g].padic().truncated(3) == Padic(3, 1, 3),
                  "theta != 1 mod 27 on generator " + std::to_string(g));
    }
    h.require_under(std::chrono::duration<double>(t1 - t0).count(), 10.0);
  });

  // 2. the two verdict oracles agree
  h.criterion(2, "kummer/torsion oracle equivalence", [&] {
    for (const CorpusEntry& e : corpus()) {
      OrientedPresentation op = parse_presentation(e.text);
      bool kummer_ok = is_kummerian(op).holds;
      bool torsion_ok =
          torsion_report(op).verdict == TorsionVerdict::TorsionFreeUpToPrecision;
      h.require(kummer_ok == torsion_ok, "disagreement on corpus entry " + e.name);
    }
    std::mt19937_64 rng(20205);
    for (int trial = 0; trial < 200; ++trial) {
      OrientedPresentation op = testgen::random_minimal(rng, 3, 4);
      h.require(validate(op).ok(), "random presentation failed validation");
      bool kummer_ok = is_kummerian(op).holds;
      bool torsion_ok =
          torsion_report(op).verdict == TorsionVerdict::TorsionFreeUpToPrecision;
      h.require(kummer_ok == torsion_ok,
                "disagreement on random presentation " + std::to_string(trial));
    }
  });

  // 3. the endgame quotient carries exactly one definite divisor p^2
  h.criterion(3, "endgame quotient divisor p^2", [&] {
    OrientedPresentation op = parse_presentation(
        "prime 3\nprecision 5\ngenerators u t\nrelator [u, t]\n"
        "orientation u = (1-p)^p\n");
    TorsionReport r = torsion_report(op);
    h.require(r.verdict == TorsionVerdict::NotKummerian, "verdict is not NotKummerian");
    h.require(r.definite_divisors == std::vector<int>{2},
              "definite divisors are not exactly {2}");
  });

  // 4. RAAG-type forcing theta(x) = 1 + q at q = p
  h.criterion(4, "oriented RAAG forcing, theta(x) = 1+q", [&] {
    OrientedPresentation op = parse_presentation(entry("raag_qp").text);
    OrientationSearchResult r = search_orientations(op.pres, 4);
    h.require(r.classes.size() == 1,
              "expected one class, got " + std::to_string(r.classes.size()));
    if (r.classes.size() == 1) {
      h.require(r.classes[0].theta[0].padic() == Padic(3, 4, 4), "theta(x) != 1+p");
      h.require(r.classes[0].theta[1].is_one() && r.classes[0].theta[2].is_one(),
                "theta(y_i) != 1");
    }
  });

  // 5. iterated-commutator group: empty search at q = p, free theta(x_1) at q = 0
  h.criterion(5, "iterated-commutator orientation search", [&] {
    OrientedPresentation qp = parse_presentation(entry("iterated_commutator_qp").text, 3);
    OrientationSearchResult rp = search_orientations(qp.pres, 3);
    h.require(rp.classes.empty() && !rp.budget_exceeded, "q = p search is not empty");

    OrientedPresentation q0 = parse_presentation(entry("iterated_commutator_q0").text, 3);
    OrientationSearchResult r0 = search_orientations(q0.pres, 3);
    h.require(!r0.classes.empty(), "q = 0 search is empty");
    for (const Orientation& o : r0.classes)
      for (size_t g = 1; g < o.theta.size(); ++g)
        h.require(o.theta[g].is_one(), "theta(x_i) != 1 for some i >= 2");
  });

  // 6. the quadratic ring relations of the (2,2) group
  h.criterion(6, "quadratic ring relation display", [&] {
    OrientedPresentation op = parse_presentation(entry("amalgam_d1_2_d2_2").text);
    QuadraticRing ring = build_ring(op.pres);
    const uint32_t p = 3;
    auto dual = [&](size_t i) {
      FpVec v(7, 0);
      v[i] = 1;
      return v;
    };
    FpVec chi = dual(0);
    FpVec phi[3] = {dual(1), dual(2), dual(3)};
    FpVec psi[3] = {dual(4), dual(5), dual(6)};

    // one recorded global sign per relator
    FpVec e1 = cup(ring, chi, phi[0]);
    FpVec e2 = cup(ring, chi, psi[0]);
    h.require(e1[1] == 0 && e1[0] != 0, "chi u phi_0 is not on the r_1 line");
    h.require(e2[0] == 0 && e2[1] != 0, "chi u psi_0 is not on the r_2 line");
    int sign1 = e1[0] == 1 ? +1 : -1;
    int sign2 = e2[1] == 1 ? +1 : -1;

    h.require(cup(ring, phi[1], phi[2]) == e1, "chi u phi_0 != phi_1 u phi_2");
    h.require(cup(ring, psi[1], psi[2]) == e2, "chi u psi_0 != psi_1 u psi_2");
    for (int i = 1; i <= 2; ++i) {
      h.require(fp_vec_is_zero(cup(ring, chi, phi[i])), "chi u phi_i != 0");
      h.require(fp_vec_is_zero(cup(ring, chi, psi[i])), "chi u psi_i != 0");
    }
    for (const FpVec& a : phi)
      for (const FpVec& b : psi)
        h.require(fp_vec_is_zero(cup(ring, a, b)), "phi_i u psi_j != 0");
    h.require(fp_vec_is_zero(cup(ring, phi[0], phi[1])), "phi_0 u phi_1 != 0");
    h.require(fp_vec_is_zero(cup(ring, phi[0], phi[2])), "phi_0 u phi_2 != 0");
    h.require(fp_vec_is_zero(cup(ring, psi[0], psi[1])), "psi_0 u psi_1 != 0");
    h.require(fp_vec_is_zero(cup(ring, psi[0], psi[2])), "psi_0 u psi_2 != 0");

    H2Relations rel = h2_relations(ring);
    h.require(rel.relations.size() == 19, "relation space dimension is not 19");
    for (const FpVec& r : rel.relations) {
      for (size_t rr = 0; rr < ring.nrel; ++rr) {
        uint32_t acc = 0;
        for (size_t k = 0; k < rel.wedge_index.size(); ++k) {
          auto [i, j] = rel.wedge_index[k];
          acc = fp_add(acc, fp_mul(r[k], ring.pairing[rr][i][j], p), p);
        }
        h.require(acc == 0, "a reported relation does not vanish");
      }
    }
    h.detail = "signs: r_1 " + std::string(sign1 > 0 ? "+1" : "-1") + ", r_2 " +
               std::string(sign2 > 0 ? "+1" : "-1");
  });

  // 7. p-cyclic Massey vanishing, exhaustive on (0,2), sampled on (2,2)
  h.criterion(7, "p-cyclic Massey vanishing sweeps", [&] {
    auto t0 = std::chrono::steady_clock::now();
    {
      OrientedPresentation op = parse_presentation(entry("amalgam_d1_0_d2_2").text);
      QuadraticRing ring = build_ring(op.pres);
      const uint32_t p = 3;
      const size_t d = 5;
      uint64_t total = 243;
      uint64_t cup_zero = 0, certified = 0;
      for (uint64_t ia = 0; ia < total; ++ia) {
        FpVec a(d, 0);
        uint64_t ta = ia;
        for (size_t i = 0; i < d; ++i) {
          a[i] = static_cast<uint32_t>(ta % p);
          ta /= p;
        }
        for (uint64_t ib = 0; ib < total; ++ib) {
          FpVec b(d, 0);
          uint64_t tb = ib;
          for (size_t i = 0; i < d; ++i) {
            b[i] = static_cast<uint32_t>(tb % p);
            tb /= p;
          }
          if (!fp_vec_is_zero(cup(ring, a, b))) continue;
          ++cup_zero;
          CyclicCertificate cert = cyclic_vanishing(op.pres, ring, a, b);
          if (cert.certified) ++certified;
        }
      }
      h.require(certified == cup_zero,
                std::to_string(certified) + " of " + std::to_string(cup_zero) +
                    " cup-zero pairs certified on (0,2)");
    }
    auto t1 = std::chrono::steady_clock::now();
    h.require_under(std::chrono::duration<double>(t1 - t0).count(), 60.0);

    {
      OrientedPresentation op = parse_presentation(entry("amalgam_d1_2_d2_2").text);
      QuadraticRing ring = build_ring(op.pres);
      std::mt19937_64 rng(7070);
      int64_t done = 0, certified = 0;
      while (done < 10000) {
        FpVec a = random_class(rng, 7, 3);
        FpVec b = random_class(rng, 7, 3);
        if (!fp_vec_is_zero(cup(ring, a, b))) continue;
        ++done;
        if (cyclic_vanishing(op.pres, ring, a, b).certified) ++certified;
      }
      h.require(certified == done, std::to_string(certified) +
                                       " of 10000 sampled pairs certified on (2,2)");
    }
  });

  // 8. the 2-fold solver value is the cup product
  h.criterion(8, "2-fold Massey = cup product", [&] {
    std::mt19937_64 rng(808);
    for (const CorpusEntry& e : corpus()) {
      OrientedPresentation op = parse_presentation(e.text);
      if (op.pres.relators.empty()) {
        // H^2 = 0: both sides are the empty vector; run a few anyway
        for (int t = 0; t < 5; ++t) {
          FpVec a = random_class(rng, op.pres.gens.size(), 3);
          FpVec b = random_class(rng, op.pres.gens.size(), 3);
          MasseyOutcome out =
              solve(MasseyProblem{{a, b}, MasseyMode::Defined, {}}, op.pres);
          h.require(out.defined == SearchStatus::Yes && out.value.empty(),
                    "free-group 2-fold product is not empty");
        }
        continue;
      }
      QuadraticRing ring = build_ring(op.pres);
      for (int t = 0; t < 100; ++t) {
        FpVec a = random_class(rng, ring.dim_h1(), 3);
        FpVec b = random_class(rng, ring.dim_h1(), 3);
        MasseyOutcome out =
            solve(MasseyProblem{{a, b}, MasseyMode::Defined, {}}, op.pres);
        h.require(out.defined == SearchStatus::Yes, "2-fold product undefined");
        h.require(out.value == cup(ring, a, b),
                  "solver value differs from the cup product on " + e.name);
      }
    }
  });

  // 9. cyclic groups of order p^k fail exactly at level k+1
  h.criterion(9, "finite cyclic p-groups fail at level k+1", [&] {
    for (int k = 1; k <= 2; ++k) {
      std::string text = "prime 3\nprecision 4\ngenerators x\nrelator x^(p^" +
                         std::to_string(k) + ")\n";
      KummerVerdict v = is_kummerian(parse_presentation(text));
      h.require(!v.holds, "verdict holds unexpectedly");
      h.require(v.level == k + 1, "k = " + std::to_string(k) + ": level " +
                                      std::to_string(v.level) + " != " +
                                      std::to_string(k + 1));
    }
  });

  // 10. the seeded property suites
  h.criterion(10, "property suites (>= 500 seeded cases each)", [&] {
    std::mt19937_64 rng(101010);

    { // p-adic ring axioms and the q-integer cocycle identity
      int cases = 0;
      for (int trial = 0; trial < 600; ++trial) {
        int64_t p = trial % 2 == 0 ? 3 : 5;
        int prec = 2 + static_cast<int>(rng() % 4);
        Padic a(p, static_cast<int64_t>(rng() % 9999), prec);
        Padic b(p, static_cast<int64_t>(rng() % 9999), prec);
        Padic c(p, static_cast<int64_t>(rng() % 9999), prec);
        h.require((a + b) * c == a * c + b * c, "distributivity failed");
        h.require((a * b) * c == a * (b * c), "associativity failed");
        Unit1 u(p, 1 + p * (1 + static_cast<int64_t>(rng() % (p * p))), prec + 2);
        if (u.is_one()) continue;
        Padic lam(p, static_cast<int64_t>(rng() % 999), prec + 2);
        Padic mu(p, static_cast<int64_t>(rng() % 999), prec + 2);
        Padic lhs = qint(u, lam + mu);
        Padic rhs = qint(u, lam) + pow_padic(u, lam).padic() * qint(u, mu);
        int kk = std::min(lhs.prec(), rhs.prec());
        h.require(lhs.truncated(kk) == rhs.truncated(kk), "qint cocycle identity failed");
        ++cases;
      }
      h.require(cases >= 500, "under 500 padic cases");
    }

    { // evaluate is a homomorphism into the unitriangular monoid over F_3
      UniTriMonoid m{3, 4};
      int cases = 0;
      for (int trial = 0; trial < 520; ++trial) {
        std::vector<UniTri> assign;
        for (int g = 0; g < 3; ++g) {
          UniTri u = UniTri::identity_of(3, 4);
          for (int i = 1; i <= 3; ++i)
            for (int j = i + 1; j <= 4; ++j) u.set(i, j, static_cast<uint32_t>(rng() % 3));
          assign.push_back(u);
        }
        Word a, b;
        for (int i = 0; i < 3; ++i) {
          a.append_power(static_cast<int>(rng() % 3), static_cast<int64_t>(rng() % 5) - 2);
          b.append_power(static_cast<int>(rng() % 3), static_cast<int64_t>(rng() % 5) - 2);
        }
        Word ab = a;
        ab.append(b);
        h.require(evaluate(ab, assign, m).a ==
                      m.mul(evaluate(a, assign, m), evaluate(b, assign, m)).a,
                  "evaluate homomorphism failed");
        ++cases;
      }
      h.require(cases >= 500, "under 500 word cases");
    }

    { // magnus2 shuffle rule
      int cases = 0;
      for (int trial = 0; trial < 520; ++trial) {
        Word u, v;
        for (int i = 0; i < 2; ++i) {
          u.append_power(static_cast<int>(rng() % 3), static_cast<int64_t>(rng() % 7) - 3);
          v.append_power(static_cast<int>(rng() % 3), static_cast<int64_t>(rng() % 7) - 3);
        }
        Word uv = u;
        uv.append(v);
        Magnus2 mu = magnus2(u, 3, 3), mv = magnus2(v, 3, 3), muv = magnus2(uv, 3, 3);
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) {
            uint32_t want = fp_add(
                fp_add(mu.quad[static_cast<size_t>(i)][static_cast<size_t>(j)],
                       mv.quad[static_cast<size_t>(i)][static_cast<size_t>(j)], 3),
                fp_mul(mu.linear[static_cast<size_t>(i)],
                       mv.linear[static_cast<size_t>(j)], 3),
                3);
            h.require(muv.quad[static_cast<size_t>(i)][static_cast<size_t>(j)] == want,
                      "magnus2 shuffle rule failed");
          }
        ++cases;
      }
      h.require(cases >= 500, "under 500 magnus cases");
    }

    { // SNF invariants over Z/3^5
      int cases = 0;
      const int64_t p = 3;
      const int prec = 5;
      const uint64_t mod = Padic(p, 0, prec).modulus();
      for (int trial = 0; trial < 520; ++trial) {
        size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
        std::vector<std::vector<Padic>> a(rows);
        std::vector<std::vector<uint64_t>> raw(rows, std::vector<uint64_t>(cols));
        for (size_t i = 0; i < rows; ++i)
          for (size_t j = 0; j < cols; ++j) {
            raw[i][j] = rng() % mod;
            a[i].emplace_back(p, static_cast<int64_t>(raw[i][j]), prec);
          }
        SNFResult r = snf(a, p, prec);
        // U A V = diag with nondecreasing valuations
        std::vector<std::vector<uint64_t>> ua(rows, std::vector<uint64_t>(cols, 0));
        for (size_t i = 0; i < rows; ++i)
          for (size_t k = 0; k < rows; ++k)
            for (size_t j = 0; j < cols; ++j)
              ua[i][j] = (ua[i][j] +
                          static_cast<unsigned __int128>(r.left[i][k]) * raw[k][j] % mod) %
                         mod;
        std::vector<std::vector<uint64_t>> uav(rows, std::vector<uint64_t>(cols, 0));
        for (size_t i = 0; i < rows; ++i)
          for (size_t k = 0; k < cols; ++k)
            for (size_t j = 0; j < cols; ++j)
              uav[i][j] = (uav[i][j] + static_cast<unsigned __int128>(ua[i][k]) *
                                           r.right[k][j] % mod) %
                          mod;
        h.require(uav == r.diag, "U A V != diag");
        int prev = 0;
        size_t k = 0;
        for (size_t i = 0; i < rows && i < cols; ++i, ++k) {
          int v = valuation(Padic(p, static_cast<int64_t>(uav[i][i]), prec));
          h.require(v == r.divisor_vals[k] && prev <= v, "divisor chain violated");
          prev = v;
        }
        ++cases;
      }
      h.require(cases >= 500, "under 500 SNF cases");
    }

    { // Schreier index formulas
      int cases = 0;
      while (cases < 500) {
        int d = 1 + static_cast<int>(rng() % 3);
        Presentation pres;
        pres.p = 3;
        for (int g = 0; g < d; ++g) pres.gens.push_back("g" + std::to_string(g));
        int nrel = static_cast<int>(rng() % 2);
        for (int r = 0; r < nrel; ++r) {
          Word w;
          Word a, b;
          a.append_power(static_cast<int>(rng() % static_cast<uint64_t>(d)), 1);
          b.append_power(static_cast<int>(rng() % static_cast<uint64_t>(d)), 1);
          w.append_commutator(std::move(a), std::move(b));
          Word n = normalize(w);
          if (!n.empty()) pres.relators.push_back(n);
        }
        FiniteQuotientMap map;
        map.target_exps = {1 + static_cast<int>(rng() % 2)};
        map.images.assign(static_cast<size_t>(d), {0});
        for (int g = 0; g < d; ++g)
          map.images[static_cast<size_t>(g)][0] = static_cast<int64_t>(rng() % 9);
        int64_t index = map.index(3);
        SchreierPresentation sp;
        try {
          sp = kernel_presentation(pres, map);
        } catch (const std::invalid_argument&) {
          continue;
        }
        h.require(sp.pres.gens.size() == static_cast<size_t>(index * (d - 1) + 1),
                  "generator count formula failed");
        h.require(sp.pres.relators.size() ==
                      static_cast<size_t>(index) * pres.relators.size(),
                  "relator count formula failed");
        ++cases;
      }
    }

    { // quotient inheritance on every Kummerian corpus entry
      for (const CorpusEntry& e : corpus()) {
        OrientedPresentation op = parse_presentation(e.text);
        if (!is_kummerian(op).holds) continue;
        std::vector<int> trivial;
        for (int g = 0; g < op.pres.ngens(); ++g)
          if (op.orient.theta[static_cast<size_t>(g)].is_one()) trivial.push_back(g);
        for (uint32_t mask = 0; mask < (1u << trivial.size()); ++mask) {
          std::vector<int> kill;
          for (size_t bit = 0; bit < trivial.size(); ++bit)
            if (mask & (1u << bit)) kill.push_back(trivial[bit]);
          OrientedPresentation q = quotient_by_generators(op, kill);
          h.require(is_kummerian(q).holds,
                    "a quotient of Kummerian " + e.name + " fails Kummerianity");
        }
      }
    }

    { // coset realizability: 50 targeted solves on the (0,2) group
      OrientedPresentation op = parse_presentation(entry("amalgam_d1_0_d2_2").text);
      QuadraticRing ring = build_ring(op.pres);
      int done = 0;
      while (done < 50) {
        FpVec a = random_class(rng, 5, 3);
        FpVec ap = random_class(rng, 5, 3);
        if (!fp_vec_is_zero(cup(ring, a, ap))) continue;
        CyclicCertificate cert = cyclic_vanishing(op.pres, ring, a, ap);
        if (cert.value.empty()) continue;
        FpVec target = cert.value;
        target = fp_vec_add(target, cup(ring, a, random_class(rng, 5, 3)), 3);
        target = fp_vec_add(target, cup(ring, ap, random_class(rng, 5, 3)), 3);
        std::vector<FpVec> alphas = {a, a, ap};
        MasseyOutcome out =
            solve(MasseyProblem{alphas, MasseyMode::Target, target}, op.pres);
        h.require(out.defined == SearchStatus::Yes, "coset point not realized");
        if (out.defined == SearchStatus::Yes) {
          WitnessCheck wc = verify_witness(op.pres, out.witness, alphas);
          h.require(wc.defined_ok && wc.value == target, "realized witness is wrong");
        }
        ++done;
      }
    }
  });

  std::printf("%s: %d criterion(s) failed\n", h.failures == 0 ? "ACCEPTED" : "REJECTED",
              h.failures);
  return h.failures == 0 ? 0 : 1;
}
