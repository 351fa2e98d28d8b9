// ellmean command-line front end:
//   eval        point evaluation of E, K, the catalogued approximations, S_p
//   table       signed-error table over a closed [0,1] grid, as CSV
//   verify      run the named verification checks
//   scan-p      classify r -> R_p(r) across a range of p, as CSV
//   conjecture  explore the unimodality conjecture profile, as CSV
//
// Exit codes: 0 success, 1 verification failure, 2 domain/flag error,
// 3 I/O error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ellmean/analysis.hpp"
#include "ellmean/approx.hpp"
#include "ellmean/checks.hpp"
#include "ellmean/csv.hpp"
#include "ellmean/grid.hpp"
#include "ellmean/stolarsky.hpp"

namespace {

using namespace ellmean;
using csv::format_double;
using csv::format_int;

constexpr int exit_ok = 0;
constexpr int exit_verify_failure = 1;
constexpr int exit_domain = 2;
constexpr int exit_io = 3;

std::optional<ApproxId> parse_approx_id(const std::string& s) {
  for (const ApproxId id : all_approx_ids)
    if (s == to_string(id)) return id;
  return std::nullopt;
}

int write_file(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return exit_io;
  }
  out << bytes;
  out.flush();
  if (!out) {
    std::cerr << "error: write to '" << path << "' failed\n";
    return exit_io;
  }
  return exit_ok;
}

// ---- eval -----------------------------------------------------------------

int cmd_eval(double r, const std::vector<std::string>& targets) {
  const Modulus m = Modulus::from_r(r);
  for (const std::string& t : targets) {
    if (t == "E") {
      std::cout << "E " << format_double(ellip_e(m)) << "\n";
    } else if (t == "K") {
      std::cout << "K " << format_double(ellip_k(m)) << "\n";
    } else if (auto id = parse_approx_id(t)) {
      const double value = approx_value(*id, m);
      std::cout << t << " " << format_double(value) << " signed_error "
                << format_double(value - two_over_pi * ellip_e(m)) << "\n";
    } else if (t.size() > 2 && t[0] == 'S' && t[1] == ':') {
      double p = 0.0;
      try {
        p = std::stod(t.substr(2));
      } catch (const std::exception&) {
        throw DomainError("target '" + t + "': expected S:<p> with numeric p");
      }
      if (p > 2.25) throw DomainError("s_family: need p <= 9/4");
      const double value = s_family(p, m);
      std::cout << t << " " << format_double(value) << " signed_error "
                << format_double(value - two_over_pi * ellip_e(m)) << "\n";
    } else {
      throw DomainError("unknown target '" + t + "' (expected E, K, A1..A8, S:<p>)");
    }
  }
  return exit_ok;
}

// ---- table ------------------------------------------------------------------

int cmd_table(int grid_n, const std::vector<ApproxId>& ids, const std::string& out_path) {
  const std::vector<double> rs = grid::closed(grid_n);
  const std::vector<double> e_vals =
      grid::map(rs, [](double r) { return two_over_pi * ellip_e(Modulus::from_r(r)); });

  std::vector<std::vector<double>> values(ids.size()), errors(ids.size());
  for (std::size_t j = 0; j < ids.size(); ++j) {
    const ApproxId id = ids[j];
    values[j] = grid::map(rs, [id](double r) { return approx_value(id, Modulus::from_r(r)); });
    errors[j].resize(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) errors[j][i] = values[j][i] - e_vals[i];
  }

  csv::Writer w;
  std::vector<std::string> header = {"r", "rprime", "two_over_pi_E"};
  for (const ApproxId id : ids) {
    header.push_back(std::string(to_string(id)) + "_value");
    header.push_back(std::string(to_string(id)) + "_error");
  }
  w.header(header);

  for (std::size_t i = 0; i < rs.size(); ++i) {
    const Modulus m = Modulus::from_r(rs[i]);
    std::vector<std::string> row = {format_double(m.r), format_double(m.r_comp),
                                    format_double(e_vals[i])};
    for (std::size_t j = 0; j < ids.size(); ++j) {
      row.push_back(format_double(values[j][i]));
      row.push_back(format_double(errors[j][i]));
    }
    w.row(row);
  }

  // summary rows: label in the r column, per-id number in the value column
  const auto summary_row = [&](const std::string& label,
                               const std::function<std::string(std::size_t)>& cell) {
    std::vector<std::string> row = {label, "", ""};
    for (std::size_t j = 0; j < ids.size(); ++j) {
      row.push_back(cell(j));
      row.push_back("");
    }
    w.row(row);
  };
  std::vector<std::size_t> argmax(ids.size());
  for (std::size_t j = 0; j < ids.size(); ++j) argmax[j] = grid::argmax_abs(errors[j]);
  summary_row("max_abs_error", [&](std::size_t j) {
    return format_double(std::fabs(errors[j][argmax[j]]));
  });
  summary_row("argmax_r", [&](std::size_t j) { return format_double(rs[argmax[j]]); });
  std::vector<FitResult> fits;
  fits.reserve(ids.size());
  for (const ApproxId id : ids) fits.push_back(fit_leading_order(id));
  summary_row("fit_n0", [&](std::size_t j) { return format_int(fits[j].half_order); });
  summary_row("fit_eps", [&](std::size_t j) { return format_double(fits[j].coefficient); });

  return write_file(out_path, w.str());
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const std::string& level) {
  const checks::CheckParams params =
      level == "fast" ? checks::CheckParams::fast() : checks::CheckParams::full();
  const std::vector<checks::CheckResult> results = checks::run_all(params);
  bool all_pass = true;
  std::vector<std::string> failing;
  for (const auto& r : results) {
    std::cout << (r.pass ? "PASS " : "FAIL ") << r.name;
    if (!r.pass && !r.fatal) std::cout << " (non-fatal)";
    if (!r.detail.empty()) std::cout << ": " << r.detail;
    std::cout << "\n";
    if (!r.pass && r.fatal) {
      all_pass = false;
      failing.push_back(r.name);
    }
  }
  if (!all_pass) {
    std::cout << "failing checks:";
    for (const auto& n : failing) std::cout << " " << n;
    std::cout << "\n";
    return exit_verify_failure;
  }
  return exit_ok;
}

// ---- scan-p ----------------------------------------------------------------------

int cmd_scan_p(double lo, double hi, int steps, int grid_n, const std::string& out_path) {
  if (hi > 2.25) {
    std::cerr << "error: scan-p requires --hi <= 9/4 (ratio_R precondition)\n";
    return exit_domain;
  }
  csv::Writer w;
  w.header({"p", "direction", "max_violation", "sign_pattern", "expected", "agrees"});
  const std::vector<double> rs = grid::interior(grid_n);
  for (int i = 0; i < steps; ++i) {
    const double p = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    const MonotonicityReport rep = monotonicity_scan(
        [p](double r) { return ratio_R(p, Modulus::from_r(r)); }, 0.001, 0.999, grid_n,
        1e-12);
    int pos = 0, neg = 0;
    for (const double r : rs) {
      const int sign = sign_E_minus_s_family(p, Modulus::from_r(r));
      if (sign > 0) ++pos;
      if (sign < 0) ++neg;
    }
    const std::string sign_pattern =
        pos == grid_n ? "all_positive" : (neg == grid_n ? "all_negative" : "mixed");
    std::string expected, agrees;
    if (p <= 1.75) {
      expected = "increasing";
      agrees = (rep.direction == Direction::increasing && sign_pattern == "all_positive")
                   ? "yes" : "no";
    } else if (p >= 2.0) {
      expected = "decreasing";
      agrees = (rep.direction == Direction::decreasing && sign_pattern == "all_negative")
                   ? "yes" : "no";
    } else {
      expected = "unclassified";  // no documented direction on (7/4, 2)
    }
    w.row({format_double(p), to_string(rep.direction), format_double(rep.max_violation),
           sign_pattern, expected, agrees});
  }
  return write_file(out_path, w.str());
}

// ---- conjecture -----------------------------------------------------------------

int cmd_conjecture(int grid_n, const std::string& out_path) {
  const ConjectureScan scan = conjecture_scan(grid_n);
  std::cout << "p0 " << format_double(scan.p0) << "\n";
  std::cout << "unimodal " << (scan.single_peaked ? "yes" : "no") << "\n";
  std::cout << "r0_estimate " << format_double(scan.r0_estimate) << "\n";
  std::cout << "pointwise_inequality " << (scan.pointwise_inequality ? "holds" : "violated")
            << "\n";
  csv::Writer w;
  w.header({"r", "H"});
  for (const auto& [r, h] : scan.profile) w.row({format_double(r), format_double(h)});
  return write_file(out_path, w.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic integral of the second kind vs Stolarsky-mean approximations"};
  app.require_subcommand(1);

  double eval_r = 0.0;
  std::vector<std::string> eval_targets;
  CLI::App* eval = app.add_subcommand("eval", "evaluate targets at a single modulus");
  eval->add_option("--r", eval_r, "modulus r in [0,1]")->required();
  eval->add_option("--target", eval_targets, "E, K, A1..A8, S:<p>")
      ->required()
      ->delimiter(',');

  int table_grid = 101;
  std::vector<std::string> table_ids_raw;
  std::string table_out;
  CLI::App* table = app.add_subcommand("table", "signed-error table as CSV");
  table->add_option("--grid", table_grid, "number of grid points on [0,1]")
      ->required()
      ->check(CLI::Range(2, 100000000));
  table->add_option("--ids", table_ids_raw, "approximation ids (A1..A8)")
      ->required()
      ->delimiter(',');
  table->add_option("--out", table_out, "output CSV path")->required();

  std::string verify_level;
  CLI::App* verify = app.add_subcommand("verify", "run the verification checks");
  verify->add_option("--level", verify_level, "fast or full")
      ->required()
      ->check(CLI::IsMember({"fast", "full"}));

  double scan_lo = 0.0, scan_hi = 0.0;
  int scan_steps = 0, scan_grid = 0;
  std::string scan_out;
  CLI::App* scanp = app.add_subcommand("scan-p", "classify R_p across a p range");
  scanp->add_option("--lo", scan_lo)->required();
  scanp->add_option("--hi", scan_hi)->required();
  scanp->add_option("--steps", scan_steps)->required()->check(CLI::Range(1, 1000000));
  scanp->add_option("--grid", scan_grid)->required()->check(CLI::Range(16, 100000000));
  scanp->add_option("--out", scan_out)->required();

  int conj_grid = 0;
  std::string conj_out;
  CLI::App* conj = app.add_subcommand("conjecture", "explore the conjecture profile");
  conj->add_option("--grid", conj_grid)->required()->check(CLI::Range(100, 100000000));
  conj->add_option("--out", conj_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message/help
    return e.get_exit_code() == 0 ? exit_ok : exit_domain;
  }

  try {
    if (eval->parsed()) return cmd_eval(eval_r, eval_targets);
    if (table->parsed()) {
      std::vector<ApproxId> ids;
      for (const std::string& s : table_ids_raw) {
        const auto id = parse_approx_id(s);
        if (!id) {
          std::cerr << "error: unknown approximation id '" << s << "'\n";
          return exit_domain;
        }
        ids.push_back(*id);
      }
      return cmd_table(table_grid, ids, table_out);
    }
    if (verify->parsed()) return cmd_verify(verify_level);
    if (scanp->parsed()) return cmd_scan_p(scan_lo, scan_hi, scan_steps, scan_grid, scan_out);
    if (conj->parsed()) return cmd_conjecture(conj_grid, conj_out);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return exit_domain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_verify_failure;
  }
  return exit_ok;
}
