#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "opg/cohomology.hpp"
#include "opg/corpus.hpp"
#include "opg/kummer.hpp"
#include "opg/massey.hpp"
#include "opg/parser.hpp"
#include "opg/report.hpp"
#include "opg/schreier.hpp"
#include "opg/torsion.hpp"

namespace {

using opg::ordered_json;

// exit codes: 0 ok, 1 negative/mismatch, 2 usage, 3 parse or validation error
constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitParse = 3;

void emit(const ordered_json& j, const std::string& json_path) {
  if (json_path.empty()) return;
  std::ofstream out(json_path);
  out << j.dump(2) << "\n";
}

opg::FiniteQuotientMap parse_map_spec(const opg::Presentation& pres,
                                      const std::string& target_spec,
                                      const std::string& map_spec) {
  opg::FiniteQuotientMap map;
  {
    std::stringstream ss(target_spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      opg::Padic v = opg::eval_p_expression(tok, pres.p, 18);
      int64_t n = static_cast<int64_t>(v.value());
      int e = 0;
      while (n > 1 && n % pres.p == 0) {
        n /= pres.p;
        ++e;
      }
      if (n != 1 || e == 0)
        throw std::invalid_argument("--target entries must be powers of p");
      map.target_exps.push_back(e);
    }
  }
  map.images.assign(pres.gens.size(),
                    std::vector<int64_t>(map.target_exps.size(), 0));
  std::stringstream ss(map_spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("--map entries look like gen:c1,c2");
    std::string name = item.substr(0, colon);
    name.erase(0, name.find_first_not_of(" \t"));
    name.erase(name.find_last_not_of(" \t") + 1);
    int g = pres.gen_index(name);
    if (g < 0) throw std::invalid_argument("--map: unknown generator " + name);
    std::stringstream cs(item.substr(colon + 1));
    std::string c;
    size_t k = 0;
    while (std::getline(cs, c, ',')) {
      if (k >= map.target_exps.size())
        throw std::invalid_argument("--map: too many coordinates for " + name);
      map.images[static_cast<size_t>(g)][k++] = std::stoll(c);
    }
  }
  return map;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification engine for finitely presented oriented pro-p groups"};
  app.require_subcommand(1);

  std::string file, json_path;
  int precision = 0;
  int64_t budget = 1000000;
  uint64_t seed = 1;

  auto add_common = [&](CLI::App* cmd, bool needs_file = true) {
    if (needs_file) cmd->add_option("file", file, "presentation file")->required();
    cmd->add_option("--precision", precision, "working precision (digits of p)");
    cmd->add_option("--budget", budget, "search budget");
    cmd->add_option("--json", json_path, "write a JSON result to this path");
    cmd->add_option("--seed", seed, "seed for sampled runs");
  };

  CLI::App* c_validate = app.add_subcommand("validate", "parse and validate a file");
  add_common(c_validate);
  CLI::App* c_kummer = app.add_subcommand("kummer-check", "decide cohomological "
                                          "Kummerianity at the working precision");
  add_common(c_kummer);
  CLI::App* c_search = app.add_subcommand("orient-search", "search the orientation "
                                          "space for Kummerian classes");
  add_common(c_search);
  CLI::App* c_torsion = app.add_subcommand("torsion", "elementary divisors of the "
                                           "twisted abelianization");
  add_common(c_torsion);
  CLI::App* c_ring = app.add_subcommand("ring", "quadratic Z/p-cohomology ring");
  add_common(c_ring);

  CLI::App* c_massey = app.add_subcommand("massey", "n-fold Massey product solver");
  add_common(c_massey);
  std::string classes_spec, mode_spec = "defined", target_spec;
  c_massey->add_option("--classes", classes_spec,
                       "semicolon-separated H^1 classes, e.g. 'x; y0; x+2*y0'")
      ->required();
  c_massey->add_option("--mode", mode_spec, "defined | vanish | target");
  c_massey->add_option("--target", target_spec,
                       "comma-separated relator-dual coordinates (target mode)");

  CLI::App* c_cyclic = app.add_subcommand("massey-cyclic", "p-cyclic Massey "
                                          "vanishing certificates");
  add_common(c_cyclic);
  bool exhaustive = false;
  int64_t sample = 0;
  c_cyclic->add_flag("--exhaustive", exhaustive, "sweep all ordered class pairs");
  c_cyclic->add_option("--sample", sample, "number of sampled cup-zero pairs");

  CLI::App* c_subgroup = app.add_subcommand("subgroup", "Reidemeister-Schreier "
                                            "presentation of a kernel");
  add_common(c_subgroup);
  std::string map_spec, sub_target_spec;
  c_subgroup->add_option("--map", map_spec, "images, e.g. 'x:1,0; y0:0,1'")->required();
  c_subgroup->add_option("--target", sub_target_spec, "target moduli, e.g. 'p,p'")
      ->required();

  CLI::App* c_corpus = app.add_subcommand("corpus-report", "run the bundled corpus "
                                          "and diff against expectations");
  add_common(c_corpus, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? kExitOk : 2;
  }

  try {
    if (c_corpus->parsed()) {
      opg::ReportOptions opts;
      opts.precision = precision;
      opts.budget = budget;
      opts.seed = seed;
      opg::Report rep = opg::run_corpus(opts);
      std::cout << rep.markdown;
      emit(rep.json, json_path);
      return rep.mismatches == 0 ? kExitOk : kExitNegative;
    }

    opg::OrientedPresentation op = opg::parse_presentation_file(file, precision);

    if (c_validate->parsed()) {
      std::cout << "valid\n" << opg::print_presentation(op);
      ordered_json j;
      j["valid"] = true;
      j["presentation"] = opg::print_presentation(op);
      emit(j, json_path);
      return kExitOk;
    }

    if (c_kummer->parsed()) {
      opg::KummerVerdict v = opg::is_kummerian(op);
      ordered_json j = opg::kummer_json(op, v);
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return kExitOk;
    }

    if (c_search->parsed()) {
      opg::OrientationSearchResult r =
          opg::search_orientations(op.pres, op.precision(), budget);
      ordered_json j;
      j["budget_exceeded"] = r.budget_exceeded;
      if (r.budget_exceeded) j["frontier_size"] = r.frontier_size;
      j["candidates_tested"] = r.candidates_tested;
      j["classes"] = ordered_json::array();
      for (const opg::Orientation& o : r.classes)
        j["classes"].push_back(opg::orientation_json(op, o));
      j["count"] = r.classes.size();
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return kExitOk;
    }

    if (c_torsion->parsed()) {
      opg::TorsionReport r = opg::torsion_report(op);
      ordered_json j = opg::torsion_json(r);
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return kExitOk;
    }

    if (c_ring->parsed()) {
      opg::QuadraticRing ring = opg::build_ring(op.pres);
      ordered_json j;
      j["h1_dim"] = ring.dim_h1();
      j["h2_dim"] = ring.nrel;
      ordered_json pairings = ordered_json::array();
      for (const opg::FpMat& b : ring.pairing) pairings.push_back(b);
      j["pairing_matrices"] = pairings;
      opg::H2Relations rel = opg::h2_relations(ring);
      ordered_json rels = ordered_json::array();
      for (const opg::FpVec& v : rel.relations)
        rels.push_back(opg::format_relation(ring, rel, v));
      j["relations"] = rels;
      j["note"] = "H^2 basis = relator duals; their independence is assumed "
                  "from the presentation, not proved here";
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return kExitOk;
    }

    if (c_massey->parsed()) {
      opg::MasseyProblem prob;
      std::stringstream ss(classes_spec);
      std::string item;
      while (std::getline(ss, item, ';'))
        prob.alphas.push_back(opg::parse_h1_class(item, op.pres));
      if (mode_spec == "defined") {
        prob.mode = opg::MasseyMode::Defined;
      } else if (mode_spec == "vanish") {
        prob.mode = opg::MasseyMode::Vanish;
      } else if (mode_spec == "target") {
        prob.mode = opg::MasseyMode::Target;
        std::stringstream ts(target_spec);
        std::string t;
        while (std::getline(ts, t, ','))
          prob.target.push_back(static_cast<uint32_t>(
              ((std::stoll(t) % op.p()) + op.p()) % op.p()));
      } else {
        std::cerr << "unknown mode " << mode_spec << "\n";
        return 2;
      }
      opg::MasseyOutcome out = opg::solve(prob, op.pres, budget);
      auto status = [](opg::SearchStatus s) {
        return s == opg::SearchStatus::Yes ? "yes"
               : s == opg::SearchStatus::No ? "no"
                                            : "unknown";
      };
      ordered_json j;
      j["defined"] = status(out.defined);
      j["vanishes"] = status(out.vanishes);
      if (out.has_value) j["value"] = out.value;
      j["solves_used"] = out.solves_used;
      if (!out.witness.empty()) {
        ordered_json w = ordered_json::array();
        for (const opg::UniTri& u : out.witness) {
          ordered_json rows = ordered_json::array();
          for (const opg::FpVec& row : u.a) rows.push_back(row); // row-major
          w.push_back(rows);
        }
        j["witness"] = w;
      }
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return out.vanishes == opg::SearchStatus::No && prob.mode == opg::MasseyMode::Vanish
                 ? kExitNegative
                 : kExitOk;
    }

    if (c_cyclic->parsed()) {
      opg::QuadraticRing ring = opg::build_ring(op.pres);
      const uint32_t p = static_cast<uint32_t>(op.p());
      int64_t certified = 0, cup_zero = 0, pairs = 0;
      auto run_pair = [&](const opg::FpVec& a, const opg::FpVec& b) {
        ++pairs;
        if (!opg::fp_vec_is_zero(opg::cup(ring, a, b))) return;
        ++cup_zero;
        opg::CyclicCertificate cert = opg::cyclic_vanishing(op.pres, ring, a, b, budget);
        if (cert.certified) ++certified;
      };
      if (exhaustive) {
        const size_t d = ring.dim_h1();
        uint64_t total = 1;
        for (size_t i = 0; i < d; ++i) total *= p;
        for (uint64_t ia = 0; ia < total; ++ia)
          for (uint64_t ib = 0; ib < total; ++ib) {
            opg::FpVec a(d, 0), b(d, 0);
            uint64_t ta = ia, tb = ib;
            for (size_t i = 0; i < d; ++i) {
              a[i] = static_cast<uint32_t>(ta % p);
              ta /= p;
              b[i] = static_cast<uint32_t>(tb % p);
              tb /= p;
            }
            run_pair(a, b);
          }
      } else {
        if (sample <= 0) {
          std::cerr << "need --exhaustive or --sample K\n";
          return 2;
        }
        std::mt19937_64 rng(seed);
        int64_t done = 0;
        while (done < sample) {
          opg::FpVec a(ring.dim_h1()), b(ring.dim_h1());
          for (auto& x : a) x = static_cast<uint32_t>(rng() % p);
          for (auto& x : b) x = static_cast<uint32_t>(rng() % p);
          if (!opg::fp_vec_is_zero(opg::cup(ring, a, b))) continue;
          ++done;
          run_pair(a, b);
        }
      }
      ordered_json j;
      j["pairs_examined"] = pairs;
      j["cup_zero_pairs"] = cup_zero;
      j["certified"] = certified;
      j["complete"] = certified == cup_zero;
      std::cout << j.dump(2) << "\n";
      emit(j, json_path);
      return certified == cup_zero ? kExitOk : kExitNegative;
    }

    if (c_subgroup->parsed()) {
      opg::FiniteQuotientMap map = parse_map_spec(op.pres, sub_target_spec, map_spec);
      opg::SchreierPresentation sp = opg::kernel_presentation(op.pres, map);
      opg::Orientation ori = opg::restrict_orientation(op, sp);
      opg::OrientedPresentation kop{sp.pres, ori};
      std::cout << opg::print_presentation(kop);
      std::cout << "# embedding:\n";
      for (size_t i = 0; i < sp.embedding.size(); ++i)
        std::cout << "#   " << sp.pres.gens[i] << " = "
                  << opg::word_str(sp.embedding[i], op.pres.gens) << "\n";
      ordered_json j;
      j["presentation"] = opg::print_presentation(kop);
      ordered_json emb = ordered_json::object();
      for (size_t i = 0; i < sp.embedding.size(); ++i)
        emb[sp.pres.gens[i]] = opg::word_str(sp.embedding[i], op.pres.gens);
      j["embedding"] = emb;
      emit(j, json_path);
      return kExitOk;
    }
  } catch (const opg::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return 2;
}
