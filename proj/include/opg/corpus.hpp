#pragma once

#include <string>
#include <vector>

namespace opg {

// Expected outcome of the orientation search on a corpus entry.
enum class SearchExpect {
  None,         // not run
  ExactClasses, // exactly the classes listed in forced_theta
  Empty,        // no class survives
  AllClasses,   // every enumerated class survives (free presentations)
  FreeFirstGen, // classes are exactly: first generator free, others forced to 1
};

struct CorpusEntry {
  std::string name;
  std::string anchor; // the statement this entry reproduces
  std::string text;   // presentation file contents

  // kummer / torsion expectations
  bool expect_kummerian = false;
  int expect_fail_level = 0;             // when not Kummerian
  std::vector<int> expect_divisors;      // definite torsion divisor valuations

  SearchExpect search = SearchExpect::None;
  std::vector<std::string> forced_theta; // per generator, an expression in p

  bool has_two_relator_ring = false; // chi-anchored quadratic relation pattern
  bool run_cyclic_sample = false;    // sampled p-cyclic Massey certificates
};

const std::vector<CorpusEntry>& corpus();

} // namespace opg
