// Command-line front end.
//
//   ocs pointcount  --q 5 --d 2 --n-range 1..6 --stat "X[1, chi = 1]"
//   ocs cohomology  --d 2 --stat "X[1,chi=1] * X[1,chi=-1]" --imax 2
//   ocs verify-glt  --q 3 --d 2 --n 3 --stat "delta"
//   ocs normform    --q 3 --d 2 --n-range 1..4
//
// The report goes to stdout (or --out).  Exit code 0 only when every
// verdict in the report passed; configuration errors exit 2.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ocs/engine.hpp"

namespace {

// "A..B" -> [A, B]; a bare integer is the degenerate range [A, A]
std::pair<uint32_t, uint32_t> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    unsigned long v = std::stoul(text);
    return {static_cast<uint32_t>(v), static_cast<uint32_t>(v)};
  }
  unsigned long lo = std::stoul(text.substr(0, dots));
  unsigned long hi = std::stoul(text.substr(dots + 2));
  return {static_cast<uint32_t>(lo), static_cast<uint32_t>(hi)};
}

struct CliOptions {
  ocs::RunConfig cfg;
  std::string n_range;
  std::string out_path;
};

void add_common_flags(CLI::App* sub, CliOptions& opt, bool needs_q) {
  auto* q = sub->add_option("--q", opt.cfg.q, "field size (prime power)");
  if (needs_q) q->required();
  sub->add_option("--d", opt.cfg.d, "label modulus, must divide q - 1")
      ->capture_default_str();
  auto* n = sub->add_option("--n", opt.cfg.n_lo, "single degree n");
  auto* r = sub->add_option("--n-range", opt.n_range,
                            "inclusive degree range A..B");
  n->excludes(r);
  r->excludes(n);
  sub->add_option("--stat", opt.cfg.stat,
                  "statistic expression, or the token \"delta\"")
      ->capture_default_str();
  sub->add_option("--imax", opt.cfg.imax, "largest cohomological degree")
      ->capture_default_str();
  sub->add_option("--shards", opt.cfg.shards, "scan shard count")
      ->capture_default_str();
  sub->add_option("--out", opt.out_path, "write the report here instead of stdout");
  sub->add_option("--format", opt.cfg.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"statistics of squarefree polynomials vs. equivariant cohomology"};
  app.require_subcommand(1);

  CliOptions opt;
  add_common_flags(app.add_subcommand("pointcount",
                                      "average a statistic over Poly_n(F_q^*)"),
                   opt, /*needs_q=*/true);
  add_common_flags(app.add_subcommand("cohomology",
                                      "stable inner products and 1/q series"),
                   opt, /*needs_q=*/false);
  add_common_flags(app.add_subcommand("verify-glt",
                                      "exact scan = cohomology check at fixed n"),
                   opt, /*needs_q=*/true);
  add_common_flags(app.add_subcommand("normform",
                                      "three-way census of the norm-form locus"),
                   opt, /*needs_q=*/true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help requests keep their zero exit; every rejection maps to 2
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto* sub = app.get_subcommands().front();
    opt.cfg.mode = sub->get_name();
    if (!opt.n_range.empty()) {
      auto [lo, hi] = parse_range(opt.n_range);
      opt.cfg.n_lo = lo;
      opt.cfg.n_hi = hi;
    } else if (sub->count("--n") > 0) {
      opt.cfg.n_hi = opt.cfg.n_lo;
    }
    opt.cfg.validate();

    ocs::Report report = ocs::run(opt.cfg);
    std::string text = opt.cfg.format == "csv" ? report.to_csv()
                                               : report.to_json_string();
    if (opt.out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(opt.out_path, std::ios::binary);
      if (!out) throw std::runtime_error("cannot open " + opt.out_path);
      out << text;
    }
    return report.all_passed ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
