#include "opg/corpus.hpp"

namespace opg {

namespace {

std::vector<CorpusEntry> make_corpus() {
  std::vector<CorpusEntry> c;

  {
    CorpusEntry e;
    e.name = "amalgam_d1_0_d2_2";
    e.anchor = "two-relator Demushkin amalgam (0,2): unique Kummerian orientation "
               "theta(x) = 1-p, torsion-free quotient";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x y0 z0 z1 z2\n"
             "relator y0^p * [y0, x^-1]\n"
             "relator z0^p * [z0, x^-1] * [z1, z2]\n"
             "orientation x = 1-p\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::ExactClasses;
    e.forced_theta = {"1-p", "1", "1", "1", "1"};
    e.has_two_relator_ring = true;
    e.run_cyclic_sample = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "amalgam_d1_2_d2_0";
    e.anchor = "two-relator Demushkin amalgam (2,0): unique Kummerian orientation "
               "theta(x) = 1-p, torsion-free quotient";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x y0 y1 y2 z0\n"
             "relator y0^p * [y0, x^-1] * [y1, y2]\n"
             "relator z0^p * [z0, x^-1]\n"
             "orientation x = 1-p\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::ExactClasses;
    e.forced_theta = {"1-p", "1", "1", "1", "1"};
    e.has_two_relator_ring = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "amalgam_d1_2_d2_2";
    e.anchor = "two-relator Demushkin amalgam (2,2): unique Kummerian orientation "
               "theta(x) = 1-p, quadratic ring relations chi^phi0 = phi1^phi2, "
               "chi^psi0 = psi1^psi2";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x y0 y1 y2 z0 z1 z2\n"
             "relator y0^p * [y0, x^-1] * [y1, y2]\n"
             "relator z0^p * [z0, x^-1] * [z1, z2]\n"
             "orientation x = 1-p\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::ExactClasses;
    e.forced_theta = {"1-p", "1", "1", "1", "1", "1", "1"};
    e.has_two_relator_ring = true;
    e.run_cyclic_sample = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "iterated_commutator_q0";
    e.anchor = "one-relator iterated-commutator group, q = 0: Kummerian "
               "orientations have theta(x_i) = 1 for i >= 2, theta(x_1) free";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x1 x2 x3\n"
             "relator [[x1, x2], x2] * [x2, x3]\n";
    e.expect_kummerian = true; // at the trivial orientation in the file
    e.search = SearchExpect::FreeFirstGen;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "iterated_commutator_qp";
    e.anchor = "one-relator iterated-commutator group, q = p: no Kummerian "
               "orientation exists";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x1 x2 x3\n"
             "relator x1^p * [[x1, x2], x2] * [x2, x3]\n";
    e.expect_kummerian = false;
    e.expect_fail_level = 2; // the q-integer of x1^p has valuation 1
    e.expect_divisors = {1};
    e.search = SearchExpect::Empty;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "raag_qp";
    e.anchor = "oriented right-angled Artin group x y_i x^-1 = y_i^{1+q}, q = p: "
               "unique Kummerian orientation theta(x) = 1+q";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x y1 y2\n"
             "relator [y1, x^-1] * y1^-p\n"
             "relator [y2, x^-1] * y2^-p\n"
             "orientation x = 1+p\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::ExactClasses;
    e.forced_theta = {"1+p", "1", "1"};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "comm_amalgam_2_2";
    e.anchor = "commutator-only two-relator amalgam: Kummerian only for the "
               "constant orientation theta = 1";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x y0 y1 y2 z0 z1 z2\n"
             "relator [x, y0] * [y1, y2]\n"
             "relator [x, z0] * [z1, z2]\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::ExactClasses;
    e.forced_theta = {"1", "1", "1", "1", "1", "1", "1"};
    e.has_two_relator_ring = true;
    e.run_cyclic_sample = true;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "cyclic_p";
    e.anchor = "cyclic group of order p: Kummerianity fails exactly at level 2";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x\n"
             "relator x^p\n";
    e.expect_kummerian = false;
    e.expect_fail_level = 2;
    e.expect_divisors = {1};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "cyclic_p2";
    e.anchor = "cyclic group of order p^2: Kummerianity fails exactly at level 3";
    e.text = "prime 3\n"
             "precision 4\n"
             "generators x\n"
             "relator x^(p^2)\n";
    e.expect_kummerian = false;
    e.expect_fail_level = 3;
    e.expect_divisors = {2};
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "free_rank1";
    e.anchor = "free pro-p group of rank 1: Kummerian for every orientation";
    e.text = "prime 3\nprecision 4\ngenerators x\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::AllClasses;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "free_rank2";
    e.anchor = "free pro-p group of rank 2: Kummerian for every orientation";
    e.text = "prime 3\nprecision 4\ngenerators x y\norientation x = 1+p^2\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::AllClasses;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "free_rank3";
    e.anchor = "free pro-p group of rank 3: Kummerian for every orientation";
    e.text = "prime 3\nprecision 4\ngenerators x y z\norientation x = 1-p\n";
    e.expect_kummerian = true;
    e.search = SearchExpect::AllClasses;
    c.push_back(e);
  }
  {
    CorpusEntry e;
    e.name = "endgame_quotient";
    e.anchor = "abelianized endgame quotient <u,t | [u,t]> with theta(u) = (1-p)^p: "
               "one definite elementary divisor p^2, not Kummerian";
    e.text = "prime 3\n"
             "precision 5\n"
             "generators u t\n"
             "relator [u, t]\n"
             "orientation u = (1-p)^p\n";
    e.expect_kummerian = false;
    e.expect_fail_level = 3; // the row entry 1 - theta(u)^-1 has valuation 2
    e.expect_divisors = {2};
    c.push_back(e);
  }
  return c;
}

} // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = make_corpus();
  return c;
}

} // namespace opg
