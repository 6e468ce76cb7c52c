#include "ocs/engine.hpp"

#include <chrono>
#include <optional>
#include <stdexcept>

#include "ocs/class_function.hpp"
#include "ocs/os_algebra.hpp"
#include "ocs/polyspace.hpp"
#include "ocs/scan.hpp"
#include "ocs/stable.hpp"
#include "ocs/statistic.hpp"

namespace ocs {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

mpz_class q_power(uint32_t q, uint32_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

// statistic, or the reserved n-specific indicator "delta"
struct Phi {
  std::optional<Statistic> stat;
  bool is_delta = false;

  static Phi make(const RunConfig& cfg) {
    Phi phi;
    if (cfg.stat == "delta") phi.is_delta = true;
    else phi.stat = Statistic::parse(cfg.stat, cfg.d);
    return phi;
  }
  Cyc operator()(const LabeledCycleType& t) const {
    if (is_delta) return Cyc(static_cast<long>(delta_indicator(t)));
    return stat->evaluate(t);
  }
};

nlohmann::ordered_json base_payload(const RunConfig& cfg) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["mode"] = cfg.mode;
  j["config"] = config_to_json(cfg);
  return j;
}

void finish(Report& rep, nlohmann::ordered_json verdicts) {
  bool all = true;
  for (const auto& v : verdicts) all = all && v["pass"].get<bool>();
  rep.payload["verdicts"] = std::move(verdicts);
  rep.payload["all_passed"] = all;
  rep.all_passed = all;
}

nlohmann::ordered_json census_json(const ScanResult& res) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [type, count] : res.counts)
    arr.push_back({{"type", type.to_string()}, {"count", count}});
  return arr;
}

// plain bilinear (1/|W|) sum |class| chi_p phi, as exact cyclotomics, for
// all degrees 0..max of the precomputed integer character table
std::vector<Cyc> all_pairings(const TypeTable& table,
                              const std::vector<std::vector<long long>>& chars,
                              const std::vector<Cyc>& phi_values) {
  std::vector<Cyc> out;
  for (const auto& chi : chars) {
    Cyc acc;
    for (size_t c = 0; c < table.types.size(); ++c) {
      if (chi[c] == 0) continue;
      acc += Cyc(Rat(table.class_size[c] * static_cast<long>(chi[c]))) *
             phi_values[c];
    }
    out.push_back(acc / Cyc(Rat(table.group_order)));
  }
  return out;
}

// alternating sum  sum_p (-1)^p q^{n-p} <chi_p, phi>
Cyc lefschetz_sum(uint32_t q, uint32_t n, const std::vector<Cyc>& pairings) {
  Cyc out;
  for (uint32_t p = 0; p < pairings.size(); ++p) {
    Cyc term = Cyc(Rat(q_power(q, n - p))) * pairings[p];
    out += (p & 1) ? -term : term;
  }
  return out;
}

}  // namespace

std::pair<uint32_t, uint32_t> split_prime_power(uint32_t q) {
  if (q < 2) throw std::invalid_argument("q must be a prime power >= 2");
  uint32_t p = q;
  for (uint32_t c = 2; c * c <= q; ++c)
    if (q % c == 0) { p = c; break; }
  uint32_t f = 0, rest = q;
  while (rest % p == 0 && rest > 1) { rest /= p; ++f; }
  if (rest != 1)
    throw std::invalid_argument("q = " + std::to_string(q) +
                                " is not a prime power");
  return {p, f};
}

Report run_pointcount(const RunConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  auto [p, f] = split_prime_power(cfg.q);
  FieldTable F = FieldTable::build(p, f);
  Phi phi = Phi::make(cfg);

  Report rep;
  rep.payload = base_payload(cfg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (uint32_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    auto trow = Clock::now();
    ScanResult res = scan_census(F, cfg.d, n, cfg.shards);
    Cyc sum;
    for (const auto& [type, count] : res.counts)
      sum += Cyc(Rat(mpz_class(count))) * phi(type);
    Cyc avg = sum * Cyc(Rat(1, 1) / Rat(q_power(cfg.q, n)));
    nlohmann::ordered_json row;
    row["n"] = n;
    row["exact"] = avg.to_string();
    row["average"] = cyc_to_json(avg);
    row["poly_count"] = res.poly_count;
    row["candidates"] = res.candidates;
    row["census"] = census_json(res);
    rows.push_back(std::move(row));
    rep.row_wall_ms.push_back(ms_since(trow));
  }
  rep.payload["results"] = std::move(rows);
  finish(rep, nlohmann::ordered_json::array());
  rep.wall_ms = ms_since(t0);
  return rep;
}

Report run_cohomology(const RunConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  if (cfg.stat == "delta")
    throw std::invalid_argument(
        "the all-zero-labels indicator is tied to a fixed n; "
        "use verify-glt or normform");
  Statistic P = Statistic::parse(cfg.stat, cfg.d);

  Report rep;
  rep.payload = base_payload(cfg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<Cyc> values;
  for (uint32_t i = 0; i <= cfg.imax; ++i) {
    auto trow = Clock::now();
    StableValue sv = stable_inner_product(P, i);
    values.push_back(sv.value);
    nlohmann::ordered_json row;
    row["i"] = i;
    row["exact"] = sv.value.to_string();
    row["value"] = cyc_to_json(sv.value);
    row["plateau_onset"] = sv.onset;
    row["plateau_run"] = sv.run;
    row["window"] = {{"n_min", sv.n_min}, {"n_max", sv.n_max}};
    nlohmann::ordered_json hist = nlohmann::ordered_json::array();
    for (const Cyc& h : sv.history) hist.push_back(h.to_string());
    row["history"] = hist;
    rows.push_back(std::move(row));
    rep.row_wall_ms.push_back(ms_since(trow));
  }
  rep.payload["results"] = std::move(rows);

  // truncated series sum_i (-1)^i q^{-i} <P, H^i>, reported coefficientwise
  nlohmann::ordered_json series = nlohmann::ordered_json::array();
  for (uint32_t i = 0; i < values.size(); ++i) {
    Cyc signed_coeff = (i & 1) ? -values[i] : values[i];
    series.push_back({{"i", i}, {"coeff", signed_coeff.to_string()}});
  }
  rep.payload["series_coeffs"] = std::move(series);
  if (cfg.q != 0) {
    Cyc at_q;
    for (uint32_t i = 0; i < values.size(); ++i) {
      Cyc term = values[i] * Cyc(Rat(1, 1) / Rat(q_power(cfg.q, i)));
      at_q += (i & 1) ? -term : term;
    }
    rep.payload["series_at_q"] = cyc_to_json(at_q);
  }
  finish(rep, nlohmann::ordered_json::array());
  rep.wall_ms = ms_since(t0);
  return rep;
}

Report run_verify_glt(const RunConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  auto [p, f] = split_prime_power(cfg.q);
  FieldTable F = FieldTable::build(p, f);
  const uint32_t n = cfg.n_lo;
  Phi phi = Phi::make(cfg);

  ScanResult res = scan_census(F, cfg.d, n, cfg.shards);
  Cyc lhs;
  for (const auto& [type, count] : res.counts)
    lhs += Cyc(Rat(mpz_class(count))) * phi(type);

  auto table = TypeTable::get(cfg.d, n);
  OSContext os(cfg.d, n, n);
  std::vector<std::vector<long long>> chars = os.graded_character(*table);
  std::vector<Cyc> phi_values;
  for (const auto& t : table->types) phi_values.push_back(phi(t));
  std::vector<Cyc> pairings = all_pairings(*table, chars, phi_values);
  Cyc rhs = lefschetz_sum(cfg.q, n, pairings);

  Report rep;
  rep.payload = base_payload(cfg);
  nlohmann::ordered_json result;
  result["n"] = n;
  result["poly_count"] = res.poly_count;
  result["lhs_exact"] = lhs.to_string();
  result["lhs"] = cyc_to_json(lhs);
  result["rhs_exact"] = rhs.to_string();
  result["rhs"] = cyc_to_json(rhs);
  nlohmann::ordered_json pj = nlohmann::ordered_json::array();
  for (uint32_t i = 0; i < pairings.size(); ++i)
    pj.push_back({{"i", i},
                  {"pairing", pairings[i].to_string()},
                  {"rank", os.rank(i)}});
  result["pairings"] = std::move(pj);
  rep.payload["results"] = nlohmann::ordered_json::array({result});

  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();
  verdicts.push_back({{"name", "glt_equal"}, {"pass", lhs == rhs}});
  finish(rep, std::move(verdicts));
  rep.wall_ms = ms_since(t0);
  return rep;
}

Report run_normform(const RunConfig& cfg) {
  cfg.validate();
  auto t0 = Clock::now();
  auto [p, f] = split_prime_power(cfg.q);
  FieldTable F = FieldTable::build(p, f);

  Report rep;
  rep.payload = base_payload(cfg);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  nlohmann::ordered_json verdicts = nlohmann::ordered_json::array();

  for (uint32_t n = cfg.n_lo; n <= cfg.n_hi; ++n) {
    auto trow = Clock::now();
    // witness-search budget: full polyspace sweep times the two coefficient
    // sweeps of the search itself
    const uint64_t space = polyspace_candidates(cfg.q, n);
    uint64_t per_f = 1;
    for (uint32_t e = 0; e < n / cfg.d + (n - 1) / cfg.d + 2; ++e) {
      per_f *= cfg.q;
      if (per_f > 2000000) break;
    }
    if (space > 2000000 || per_f > 2000000)
      throw std::invalid_argument("normform witness-search caps exceeded");

    ScanResult res = scan_census(F, cfg.d, n, cfg.shards);
    uint64_t delta_count = 0;
    for (const auto& [type, count] : res.counts)
      if (type.all_labels_zero()) delta_count += count;

    uint64_t wplus = 0, wminus = 0;
    enumerate_polyspace(F, n, 0, 1, [&](const PolyFq& poly) {
      if (norm_form_witness(poly, cfg.d, +1)) ++wplus;
      if (norm_form_witness(poly, cfg.d, -1)) ++wminus;
      return true;
    });

    auto table = TypeTable::get(cfg.d, n);
    OSContext os(cfg.d, n, n);
    std::vector<std::vector<long long>> chars = os.graded_character(*table);
    std::vector<Cyc> delta_values;
    for (const auto& t : table->types)
      delta_values.push_back(Cyc(static_cast<long>(delta_indicator(t))));
    Cyc cohom = lefschetz_sum(cfg.q, n,
                              all_pairings(*table, chars, delta_values));

    std::string sign;
    if (wplus == delta_count && wminus == delta_count) sign = "both";
    else if (wplus == delta_count) sign = "+";
    else if (wminus == delta_count) sign = "-";
    else sign = "none";

    nlohmann::ordered_json row;
    row["n"] = n;
    row["poly_count"] = res.poly_count;
    row["delta_count"] = delta_count;
    row["witness_plus"] = wplus;
    row["witness_minus"] = wminus;
    row["cohomological"] = cohom.to_string();
    row["realizing_sign"] = sign;
    // diagnostic: members of Poly_n equal, up to a unit, to a norm from the
    // degree-d Kummer cover; this locus is exactly the delta locus
    if (q_power(cfg.q, n) <= 200000) {
      uint64_t closure = norm_closure_census(F, cfg.d, n).size();
      row["norm_closure_count"] = closure;
    }
    rows.push_back(std::move(row));
    rep.row_wall_ms.push_back(ms_since(trow));

    const std::string suffix = "_n" + std::to_string(n);
    verdicts.push_back({{"name", "delta_equals_cohomological" + suffix},
                        {"pass", Cyc(Rat(mpz_class(delta_count))) == cohom}});
    verdicts.push_back({{"name", "witness_census_matches" + suffix},
                        {"pass", sign != "none"}});
  }
  rep.payload["results"] = std::move(rows);
  finish(rep, std::move(verdicts));
  rep.wall_ms = ms_since(t0);
  return rep;
}

Report run(const RunConfig& cfg) {
  cfg.validate();
  if (cfg.mode == "pointcount") return run_pointcount(cfg);
  if (cfg.mode == "cohomology") return run_cohomology(cfg);
  if (cfg.mode == "verify-glt") return run_verify_glt(cfg);
  return run_normform(cfg);
}

}  // namespace ocs
