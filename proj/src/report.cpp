#include "ocs/report.hpp"

#include <sstream>
#include <stdexcept>

namespace ocs {

void RunConfig::validate() const {
  if (mode != "pointcount" && mode != "cohomology" && mode != "verify-glt" &&
      mode != "normform")
    throw std::invalid_argument("unknown mode: " + mode);
  if (d == 0) throw std::invalid_argument("d must be positive");
  if (format != "json" && format != "csv")
    throw std::invalid_argument("format must be json or csv");
  if (format == "csv" && mode != "pointcount")
    throw std::invalid_argument("csv output is defined for pointcount only");
  if (mode != "cohomology") {
    if (q == 0) throw std::invalid_argument("q is required");
    if ((q - 1) % d != 0) throw std::invalid_argument("d must divide q-1");
    if (n_lo == 0 || n_lo > n_hi)
      throw std::invalid_argument("need 1 <= n_lo <= n_hi");
  }
  if (mode == "verify-glt" && n_lo != n_hi)
    throw std::invalid_argument("verify-glt needs a single n");
  if (shards == 0) throw std::invalid_argument("shards must be positive");
}

nlohmann::ordered_json config_to_json(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["mode"] = cfg.mode;
  if (cfg.q != 0) j["q"] = cfg.q;
  j["d"] = cfg.d;
  if (cfg.n_lo != 0) {
    j["n_lo"] = cfg.n_lo;
    j["n_hi"] = cfg.n_hi;
  }
  j["stat"] = cfg.stat;
  j["imax"] = cfg.imax;
  j["shards"] = cfg.shards;
  return j;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << r.get_num();
  if (r.get_den() != 1) os << "/" << r.get_den();
  return os.str();
}

nlohmann::ordered_json cyc_to_json(const Cyc& v) {
  nlohmann::ordered_json j;
  j["order"] = v.order();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Rat& c : v.coeffs()) coeffs.push_back(rat_to_string(c));
  j["coeffs"] = coeffs;
  std::complex<double> a = v.approx();
  j["approx"] = {{"re", a.real()}, {"im", a.imag()}};
  return j;
}

std::string Report::canonical_bytes() const { return payload.dump(2) + "\n"; }

std::string Report::to_json_string() const {
  nlohmann::ordered_json full = payload;
  nlohmann::ordered_json timing;
  timing["wall_ms"] = wall_ms;
  if (!row_wall_ms.empty()) timing["rows_ms"] = row_wall_ms;
  full["timing"] = timing;
  return full.dump(2) + "\n";
}

std::string Report::to_csv() const {
  if (!payload.contains("results") || payload["mode"] != "pointcount")
    throw std::logic_error("csv output is defined for pointcount only");
  std::ostringstream os;
  os << "n,exact_value,approx,poly_count,wall_ms\n";
  const auto& rows = payload["results"];
  for (size_t r = 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    double re = row["average"]["approx"]["re"].get<double>();
    double im = row["average"]["approx"]["im"].get<double>();
    std::ostringstream approx;
    approx.precision(17);
    approx << re;
    if (im != 0) {
      approx << (im > 0 ? "+" : "") << im << "i";
    }
    os << row["n"].get<uint32_t>() << "," << row["exact"].get<std::string>()
       << "," << approx.str() << "," << row["poly_count"].get<uint64_t>() << ","
       << (r < row_wall_ms.size() ? row_wall_ms[r] : 0.0) << "\n";
  }
  return os.str();
}

}  // namespace ocs
