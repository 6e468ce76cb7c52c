#pragma once
// Run configuration and deterministic result reports.
//
// A Report separates the canonical payload (pure data; byte-identical for
// identical configurations regardless of shard count or thread schedule)
// from advisory timing.  canonical_bytes() serializes only the payload;
// to_json_string() appends the timing block; to_csv() emits the pointcount
// row schema n,exact_value,approx,poly_count,wall_ms.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "ocs/cyclotomic.hpp"

namespace ocs {

struct RunConfig {
  std::string mode;            // pointcount | cohomology | verify-glt | normform
  uint32_t q = 0;              // 0 = not set (allowed for cohomology)
  uint32_t d = 1;
  uint32_t n_lo = 0, n_hi = 0; // inclusive range; single n when n_lo == n_hi
  std::string stat = "1";      // statistic text, or the reserved token "delta"
  uint32_t imax = 2;
  uint32_t shards = 4;
  std::string format = "json"; // json | csv

  void validate() const;       // throws std::invalid_argument
};

nlohmann::ordered_json config_to_json(const RunConfig& cfg);

struct Report {
  nlohmann::ordered_json payload;       // schema, config, results, verdicts
  std::vector<double> row_wall_ms;      // advisory, parallel to results rows
  double wall_ms = 0;                   // advisory total
  bool all_passed = true;

  std::string canonical_bytes() const;  // payload only, stable layout
  std::string to_json_string() const;   // payload plus timing block
  std::string to_csv() const;           // pointcount rows; throws otherwise
};

// {"order": m, "coeffs": ["a/b", ...], "approx": {"re": x, "im": y}}
nlohmann::ordered_json cyc_to_json(const Cyc& v);
std::string rat_to_string(const Rat& r);

}  // namespace ocs
