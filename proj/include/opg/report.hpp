#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

#include "opg/kummer.hpp"
#include "opg/torsion.hpp"

namespace opg {

using ordered_json = nlohmann::ordered_json;

ordered_json kummer_json(const OrientedPresentation& op, const KummerVerdict& v);
ordered_json torsion_json(const TorsionReport& r);
ordered_json orientation_json(const OrientedPresentation& context,
                              const Orientation& o);

struct ReportOptions {
  int precision = 0; // 0 = per-fixture default
  int64_t budget = 1000000;
  uint64_t seed = 1;
};

struct Report {
  ordered_json json;
  std::string markdown;
  int mismatches = 0;
};

// Runs every corpus entry through the applicable modules and diffs the
// results against the bundled expectations. Deterministic given
// (options.precision, options.budget, options.seed); everything that varies
// between runs lives under the single "timing" key.
Report run_corpus(const ReportOptions& options);

} // namespace opg
