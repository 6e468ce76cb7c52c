// Acceptance gate: one line per criterion, [PASS]/[FAIL] plus diagnostics.
// Exit code 0 only if every criterion that ran passed.  Run a single
// criterion with --only N (used by ctest to keep failures isolated).
//
// Criteria 4 and 5 encode honest expectations: the convergence tolerance and
// the two-term witness census are checked exactly as stated and currently
// fail for documented structural reasons (see README.md); the diagnostics
// below print the exact numbers behind the verdict.

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "ocs/arrangement.hpp"
#include "ocs/class_function.hpp"
#include "ocs/cycle_types.hpp"
#include "ocs/engine.hpp"
#include "ocs/field_table.hpp"
#include "ocs/os_algebra.hpp"
#include "ocs/polyspace.hpp"
#include "ocs/report.hpp"
#include "ocs/scan.hpp"
#include "ocs/stable.hpp"
#include "ocs/statistic.hpp"
#include "ocs/wreath.hpp"
#include "support/charpoly_oracle.hpp"

using ocs::Arrangement;
using ocs::Cyc;
using ocs::FieldTable;
using ocs::HPlane;
using ocs::LabeledCycleType;
using ocs::OSContext;
using ocs::Rat;
using ocs::Report;
using ocs::RunConfig;
using ocs::ScanResult;
using ocs::StableValue;
using ocs::Statistic;
using ocs::TypeTable;

namespace {

struct CritResult {
  bool pass = true;
  std::vector<std::string> notes;

  void fail(const std::string& note) {
    pass = false;
    notes.push_back(note);
  }
};

const char* kGaussPairD2 = "X[1,chi 1]*X[1,chi -1] - X[1,g 0] - X[1,g 1]";
const char* kGaussPairD4 =
    "X[1,chi 1]*X[1,chi -1] - (X[1,g 0]+X[1,g 1]+X[1,g 2]+X[1,g 3])";

mpz_class ipow(uint32_t q, uint32_t e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), q, e);
  return out;
}

// plain bilinear pairing (1/|W|) sum |class| chi phi in every degree
std::vector<Cyc> pair_all(const TypeTable& table,
                          const std::vector<std::vector<long long>>& chars,
                          const std::vector<Cyc>& phi) {
  std::vector<Cyc> out;
  for (const auto& chi : chars) {
    Cyc acc;
    for (size_t c = 0; c < table.types.size(); ++c) {
      if (chi[c] == 0) continue;
      acc += Cyc(Rat(table.class_size[c] * static_cast<long>(chi[c]))) * phi[c];
    }
    out.push_back(acc / Cyc(Rat(table.group_order)));
  }
  return out;
}

Cyc lefschetz(uint32_t q, uint32_t n, const std::vector<Cyc>& pairings) {
  Cyc out;
  for (uint32_t p = 0; p < pairings.size(); ++p) {
    Cyc term = Cyc(Rat(ipow(q, n - p))) * pairings[p];
    out += (p & 1) ? -term : term;
  }
  return out;
}

std::string rat_str(const Rat& r) { return ocs::rat_to_string(r); }

// exact scan average (1/q^n) sum_f P(sigma_f), which is rational for every
// statistic paired against a real census
Rat scan_average(const FieldTable& F, uint32_t d, uint32_t n,
                 const Statistic& P) {
  ScanResult res = ocs::scan_census(F, d, n, 4);
  Cyc sum;
  for (const auto& [type, count] : res.counts)
    sum += Cyc(Rat(mpz_class(count))) * P.evaluate(type);
  Cyc avg = sum / Cyc(Rat(ipow(F.q(), n)));
  return avg.to_rational();
}

// ---------------------------------------------------------------- criterion 1

CritResult glt_exact_matrix() {
  CritResult r;
  size_t points = 0, cells = 0;
  for (uint32_t q : {3u, 5u, 7u}) {
    auto [p, f] = ocs::split_prime_power(q);
    FieldTable F = FieldTable::build(p, f);
    for (uint32_t d = 1; d <= 6; ++d) {
      if ((q - 1) % d != 0) continue;
      uint32_t nmax = (q == 3) ? 4 : 3;
      for (uint32_t n = 1; n <= nmax; ++n) {
        ++points;
        ScanResult res = ocs::scan_census(F, d, n, 4);
        auto table = TypeTable::get(d, n);
        OSContext os(d, n, n);
        auto chars = os.graded_character(*table);

        std::vector<std::string> names = {"1"};
        for (uint32_t k = 0; k < d; ++k)
          names.push_back("X[1,g " + std::to_string(k) + "]");
        names.push_back("X[1,chi 1]*X[1,chi -1]");
        names.push_back("X[2,chi 1]");
        names.push_back("delta");

        for (const std::string& name : names) {
          std::vector<Cyc> phi;
          if (name == "delta") {
            for (const auto& t : table->types)
              phi.push_back(Cyc(static_cast<long>(ocs::delta_indicator(t))));
          } else {
            Statistic st = Statistic::parse(name, d);
            for (const auto& t : table->types) phi.push_back(st.evaluate(t));
          }
          Cyc lhs;
          for (const auto& [type, count] : res.counts)
            lhs += Cyc(Rat(mpz_class(count))) * phi[table->index_of(type)];
          Cyc rhs = lefschetz(q, n, pair_all(*table, chars, phi));
          ++cells;
          if (!(lhs == rhs)) {
            std::ostringstream os2;
            os2 << "MISMATCH q=" << q << " d=" << d << " n=" << n << " phi="
                << name << ": scan side " << lhs.to_string()
                << " vs cohomology side " << rhs.to_string();
            r.fail(os2.str());
          }
        }
      }
    }
  }
  std::ostringstream head;
  head << "exact scan = alternating q-weighted pairing identity holds at "
       << cells << " statistic cells over " << points << " (q,d,n) points";
  r.notes.insert(r.notes.begin(), head.str());
  return r;
}

// ---------------------------------------------------------------- criterion 2

CritResult stable_gauss_pair() {
  CritResult r;
  struct Cell { uint32_t d; const char* text; };
  for (const Cell& cell : {Cell{2, kGaussPairD2}, Cell{4, kGaussPairD4}}) {
    Statistic P = Statistic::parse(cell.text, cell.d);
    std::vector<Cyc> expect = {Cyc(0), Cyc(1), Cyc(5)};
    std::ostringstream line;
    line << "off-diagonal Gauss pair, d=" << cell.d << ": pairings (";
    for (uint32_t i = 0; i <= 2; ++i) {
      StableValue sv = ocs::stable_inner_product(P, i);
      if (i) line << ", ";
      line << sv.value.to_string() << " [onset n=" << sv.onset << ", run "
           << sv.run << "]";
      if (!(sv.value == expect[i])) {
        std::ostringstream os;
        os << "d=" << cell.d << " i=" << i << ": expected "
           << expect[i].to_string() << ", got " << sv.value.to_string();
        r.fail(os.str());
      }
      if (sv.run < 3) r.fail("plateau run below 3 at i=" + std::to_string(i));
    }
    line << ")";
    r.notes.push_back(line.str());
  }

  // the raw product keeps the diagonal terms and pairs to (1, 4, 8) + (0, 1, 5)
  // = (1, 5, 13); the tabulated coefficients 1 and 5 belong to the
  // off-diagonal normalization above
  Statistic raw = Statistic::parse("X[1,chi 1]*X[1,chi -1]", 2);
  std::vector<Cyc> raw_expect = {Cyc(1), Cyc(5), Cyc(13)};
  std::ostringstream rawline;
  rawline << "raw product, d=2 (diagonal kept): pairings (";
  for (uint32_t i = 0; i <= 2; ++i) {
    StableValue sv = ocs::stable_inner_product(raw, i);
    if (i) rawline << ", ";
    rawline << sv.value.to_string();
    if (!(sv.value == raw_expect[i]))
      r.fail("raw product drifted from frozen (1, 5, 13) at i=" +
             std::to_string(i) + ": " + sv.value.to_string());
  }
  rawline << ") -- off-diagonal part shifts these to (0, 1, 5)";
  r.notes.push_back(rawline.str());
  return r;
}

// ---------------------------------------------------------------- criterion 3

CritResult stable_twisted_two_cycle() {
  CritResult r;
  struct Cell {
    const char* text;
    const char* what;
    std::vector<const char*> expect;
  };
  std::vector<Cell> cells = {
      {"X[2,chi 1]", "per two-cycle", {"0", "1/2", "3/2"}},
      {"2*X[2,chi 1]", "per root pair (doubled)", {"0", "1", "3"}},
  };
  for (const Cell& cell : cells) {
    Statistic P = Statistic::parse(cell.text, 2);
    std::ostringstream line;
    line << cell.what << ", d=2: pairings (";
    for (uint32_t i = 0; i <= 2; ++i) {
      StableValue sv = ocs::stable_inner_product(P, i);
      Cyc expect(Rat(std::string(cell.expect[i])));
      if (i) line << ", ";
      line << sv.value.to_string() << " [onset n=" << sv.onset << ", run "
           << sv.run << "]";
      if (!(sv.value == expect)) {
        std::ostringstream os;
        os << cell.text << " i=" << i << ": expected " << cell.expect[i]
           << ", got " << sv.value.to_string();
        r.fail(os.str());
      }
      if (sv.run < 3) r.fail("plateau run below 3 at i=" + std::to_string(i));
    }
    line << ")";
    r.notes.push_back(line.str());
  }
  r.notes.push_back(
      "the tabulated integers 1 and 3 are the doubled normalization; the "
      "per-two-cycle statistic itself stabilizes at 1/2 and 3/2");
  return r;
}

// ---------------------------------------------------------------- criterion 4

CritResult scan_convergence() {
  CritResult r;
  struct Cell {
    uint32_t q, d;
    const char* text;
    const char* frozen_a3;
    const char* frozen_a9;
  };
  std::vector<Cell> cells = {
      {7, 2, kGaussPairD2, "-24/343", "-2837472/40353607"},
      {5, 4, kGaussPairD4, "-8/125", "-144736/1953125"},
  };
  for (const Cell& cell : cells) {
    auto [p, f] = ocs::split_prime_power(cell.q);
    FieldTable F = FieldTable::build(p, f);
    Statistic P = Statistic::parse(cell.text, cell.d);

    Rat a3 = scan_average(F, cell.d, 3, P);
    Rat a9 = scan_average(F, cell.d, 9, P);
    Rat s2a(-1, cell.q), s2b(5, static_cast<long>(cell.q) * cell.q);
    s2a.canonicalize();
    s2b.canonicalize();
    Rat s2 = s2a + s2b;
    Rat t3 = a3 - s2;
    if (t3 < 0) t3 = -t3;
    Rat t9 = a9 - s2;
    if (t9 < 0) t9 = -t9;
    Rat tol = Rat(10, static_cast<long>(cell.q) * cell.q * cell.q);
    tol.canonicalize();

    bool tol_ok = t9 < tol;
    bool trend_ok = t9 < t3;
    if (!tol_ok || !trend_ok) r.pass = false;

    std::ostringstream line;
    line << "q=" << cell.q << " d=" << cell.d << ": A3 = " << rat_str(a3)
         << ", A9 = " << rat_str(a9) << ", S2 = " << rat_str(s2);
    r.notes.push_back(line.str());
    std::ostringstream det;
    det << "  |A9-S2| = " << rat_str(t9) << " (" << t9.get_d()
        << ") vs tolerance 10*q^-3 = " << rat_str(tol) << " (" << tol.get_d()
        << "): " << (tol_ok ? "within" : "EXCEEDED");
    r.notes.push_back(det.str());
    std::ostringstream det2;
    det2 << "  |A3-S2| = " << rat_str(t3) << " (" << t3.get_d() << "): trend "
         << (trend_ok ? "improving" : "NOT improving (n=9 is farther than n=3)");
    r.notes.push_back(det2.str());

    if (rat_str(a3) != cell.frozen_a3)
      r.fail("  regression: A3 drifted from frozen " +
             std::string(cell.frozen_a3));
    if (rat_str(a9) != cell.frozen_a9)
      r.fail("  regression: A9 drifted from frozen " +
             std::string(cell.frozen_a9));
  }
  if (!r.pass)
    r.notes.push_back(
        "the two-term truncation S2 sits ~13*q^-3 away from the true limit "
        "(the next series coefficient), so a 10*q^-3 tolerance around S2 "
        "cannot hold and A_n moves toward the limit, not toward S2; this "
        "failure is the documented report-level warning, not a scan defect "
        "(the same scans satisfy the exact identities of criterion 1)");
  return r;
}

// ---------------------------------------------------------------- criterion 5

CritResult norm_form_census() {
  CritResult r;
  struct Cell { uint32_t q, d, n_hi; };
  for (const Cell& cell : {Cell{3, 2, 4}, Cell{5, 2, 3}, Cell{7, 3, 3}}) {
    RunConfig cfg;
    cfg.mode = "normform";
    cfg.q = cell.q;
    cfg.d = cell.d;
    cfg.n_lo = 1;
    cfg.n_hi = cell.n_hi;
    cfg.stat = "delta";
    Report rep = ocs::run_normform(cfg);
    for (const auto& row : rep.payload["results"]) {
      uint32_t n = row["n"].get<uint32_t>();
      uint64_t delta = row["delta_count"].get<uint64_t>();
      uint64_t wplus = row["witness_plus"].get<uint64_t>();
      uint64_t wminus = row["witness_minus"].get<uint64_t>();
      std::string sign = row["realizing_sign"].get<std::string>();
      std::string cohom = row["cohomological"].get<std::string>();
      uint64_t closure = row["norm_closure_count"].get<uint64_t>();

      bool cohom_ok = cohom == std::to_string(delta);
      bool closure_ok = closure == delta;
      bool witness_ok = sign != "none";
      if (!cohom_ok || !closure_ok || !witness_ok) r.pass = false;

      std::ostringstream line;
      line << "q=" << cell.q << " d=" << cell.d << " n=" << n << ": delta="
           << delta << " cohomological=" << cohom << " closure=" << closure
           << " witnesses(+)=" << wplus << " (-)=" << wminus << " sign="
           << sign;
      if (!witness_ok) line << "  <-- two-term shape unreachable";
      r.notes.push_back(line.str());
    }
  }
  if (!r.pass)
    r.notes.push_back(
        "for d=3 the two component degrees of g^3 + t*h^3 are 0 and 1 mod 3, "
        "so no degree-2 polynomial has a witness and at degree 3 the shape "
        "reaches only a fraction of the zero-label locus; the locus itself "
        "is still correct: the cohomological count and the full norm-closure "
        "census match the direct delta count in every cell above");
  return r;
}

// ---------------------------------------------------------------- criterion 6

CritResult structure_oracles() {
  CritResult r;

  // (a) graded ranks against the deletion-restriction oracle
  size_t rank_checks = 0;
  for (uint32_t d = 1; d <= 3; ++d)
    for (uint32_t n = 1; n <= 4; ++n) {
      Arrangement arr(d, n);
      std::vector<std::vector<Cyc>> normals;
      for (const HPlane& h : arr.planes()) normals.push_back(arr.normal(h));
      std::vector<mpz_class> betti = ocs::complement_betti(normals, n);
      OSContext os(d, n, n);
      for (uint32_t p = 0; p <= n; ++p) {
        ++rank_checks;
        if (mpz_class(static_cast<unsigned long>(os.rank(p))) != betti[p]) {
          std::ostringstream os2;
          os2 << "rank mismatch d=" << d << " n=" << n << " p=" << p << ": nbc "
              << os.rank(p) << " vs charpoly " << betti[p].get_str();
          r.fail(os2.str());
        }
      }
    }

  // (b) wreath class data against full group enumeration
  size_t class_checks = 0;
  for (uint32_t n = 1; n <= 3; ++n) {
    auto table = TypeTable::get(2, n);
    std::map<LabeledCycleType, uint64_t> census;
    for (const ocs::WreathElem& w : ocs::wreath_all_elements(2, n))
      ++census[wreath_type(w)];
    if (census.size() != table->types.size())
      r.fail("class count mismatch at d=2 n=" + std::to_string(n));
    for (size_t c = 0; c < table->types.size(); ++c) {
      ++class_checks;
      if (census[table->types[c]] != table->class_size[c].get_ui())
        r.fail("class size mismatch at d=2 n=" + std::to_string(n) + " type " +
               table->types[c].to_string());
    }
  }

  // (c) point counts against the closed form (q-1)(q^n-(-1)^n)/(q+1)
  size_t count_checks = 0;
  for (uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    auto [p, f] = ocs::split_prime_power(q);
    FieldTable F = FieldTable::build(p, f);
    for (uint32_t n = 2; n <= 6; ++n) {
      mpz_class sign = (n % 2 == 0) ? 1 : -1;
      mpz_class expect = (mpz_class(q) - 1) * (ipow(q, n) - sign) / (q + 1);
      uint64_t got = ocs::scan_census(F, 1, n, 4).poly_count;
      ++count_checks;
      if (mpz_class(static_cast<unsigned long>(got)) != expect) {
        std::ostringstream os2;
        os2 << "point count mismatch q=" << q << " n=" << n << ": scan " << got
            << " vs closed form " << expect.get_str();
        r.fail(os2.str());
      }
    }
  }

  std::ostringstream head;
  head << rank_checks << " graded ranks vs deletion-restriction, "
       << class_checks << " class sizes vs full enumeration, " << count_checks
       << " point counts vs (q-1)(q^n-(-1)^n)/(q+1) -- all exact";
  r.notes.insert(r.notes.begin(), head.str());
  r.notes.push_back(
      "note: the quadratic form q^n - 2q^{n-1} + q^{n-2} reproduces the count "
      "only for n = 2; from n = 3 on it is short by q-1, q^2-q, ... -- the "
      "closed form above is the one the scans confirm");
  return r;
}

// ---------------------------------------------------------------- criterion 7

CritResult plateau_regression() {
  CritResult r;
  struct Fixture {
    uint32_t d;
    const char* text;
    const char* values[3];
    uint32_t onsets[3];
    uint32_t runs[3];
  };
  std::vector<Fixture> fixtures = {
      {2, "1", {"1", "2", "2"}, {1, 2, 3}, {3, 3, 3}},
      {2, "X[1,g 0]", {"1/2", "2", "4"}, {1, 3, 4}, {4, 3, 3}},
      {2, "X[1,g 1]", {"1/2", "2", "4"}, {1, 3, 4}, {4, 3, 3}},
      {2, "X[2,chi 1]", {"0", "1/2", "3/2"}, {1, 2, 4}, {5, 5, 4}},
      {2, kGaussPairD2, {"0", "1", "5"}, {1, 2, 4}, {5, 5, 4}},
      {4, kGaussPairD4, {"0", "1", "5"}, {1, 2, 4}, {5, 5, 4}},
  };
  for (const Fixture& fix : fixtures) {
    Statistic P = Statistic::parse(fix.text, fix.d);
    std::ostringstream line;
    line << "d=" << fix.d << " P = " << fix.text << ":";
    for (uint32_t i = 0; i <= 2; ++i) {
      StableValue sv = ocs::stable_inner_product(P, i);
      Cyc expect(Rat(std::string(fix.values[i])));
      line << " i=" << i << " -> " << sv.value.to_string() << " (onset "
           << sv.onset << ", run " << sv.run << ")";
      if (!(sv.value == expect) || sv.onset != fix.onsets[i] ||
          sv.run != fix.runs[i]) {
        std::ostringstream os;
        os << "fixture drift at d=" << fix.d << " P=" << fix.text << " i=" << i
           << ": expected " << fix.values[i] << "/onset " << fix.onsets[i]
           << "/run " << fix.runs[i] << ", got " << sv.value.to_string()
           << "/onset " << sv.onset << "/run " << sv.run;
        r.fail(os.str());
      }
      if (sv.run < 3)
        r.fail("plateau shorter than 3 at d=" + std::to_string(fix.d) +
               " i=" + std::to_string(i));
    }
    r.notes.push_back(line.str());
  }
  return r;
}

// ---------------------------------------------------------------- criterion 8

CritResult scan_performance() {
  CritResult r;
  const double budget_ms = 60000.0;   // pinned bound for the shards=4 run
  std::string reference_bytes;
  double timed_ms = 0;
  for (uint32_t shards : {4u, 1u, 8u}) {
    RunConfig cfg;
    cfg.mode = "pointcount";
    cfg.q = 5;
    cfg.d = 2;
    cfg.n_lo = 10;
    cfg.n_hi = 10;
    cfg.stat = "1";
    cfg.shards = shards;
    Report rep = ocs::run(cfg);
    nlohmann::ordered_json payload = rep.payload;
    payload["config"].erase("shards");   // the only field allowed to differ
    std::string bytes = payload.dump(2);
    if (shards == 4) {
      reference_bytes = bytes;
      timed_ms = rep.wall_ms;
      std::ostringstream line;
      line << "q=5 n=10 full scan (7.8M candidates), shards=4: "
           << rep.wall_ms / 1000.0 << " s (budget 60 s)";
      r.notes.push_back(line.str());
      if (!(rep.wall_ms <= budget_ms)) r.pass = false;
    } else {
      std::ostringstream line;
      line << "shards=" << shards << ": " << rep.wall_ms / 1000.0
           << " s, payload "
           << (bytes == reference_bytes ? "byte-identical" : "DIFFERS");
      r.notes.push_back(line.str());
      if (bytes != reference_bytes)
        r.fail("payload differs between shard counts");
    }
  }
  if (timed_ms > budget_ms)
    r.notes.push_back("timing budget exceeded; see first line");
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  struct Entry {
    int id;
    const char* label;
    CritResult (*fn)();
  };
  const std::vector<Entry> entries = {
      {1, "glt_exact_matrix", glt_exact_matrix},
      {2, "stable_gauss_pair", stable_gauss_pair},
      {3, "stable_twisted_two_cycle", stable_twisted_two_cycle},
      {4, "scan_convergence", scan_convergence},
      {5, "norm_form_census", norm_form_census},
      {6, "structure_oracles", structure_oracles},
      {7, "plateau_regression", plateau_regression},
      {8, "scan_performance", scan_performance},
  };

  bool all = true;
  bool ran = false;
  for (const Entry& e : entries) {
    if (only != 0 && e.id != only) continue;
    ran = true;
    CritResult res;
    try {
      res = e.fn();
    } catch (const std::exception& ex) {
      res.pass = false;
      res.notes.push_back(std::string("exception: ") + ex.what());
    }
    std::cout << (res.pass ? "[PASS] " : "[FAIL] ") << e.id << " " << e.label
              << "\n";
    for (const std::string& note : res.notes)
      std::cout << "       " << note << "\n";
    all = all && res.pass;
  }
  if (!ran) {
    std::cerr << "no criterion matches --only " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
