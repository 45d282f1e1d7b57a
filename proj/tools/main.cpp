// Command-line front end: exact and Monte Carlo projector norms, the
// regular-simplex closed-form table, psi curves, the d_n series with its
// spline envelope, stochastic norm minimization, and absorption indices.
//
// Exit codes: 0 success, 2 parse/config failure, 3 degenerate simplex,
// 4 spline range not covered, 1 anything else.  Data goes to stdout (or
// --out), diagnostics to stderr.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ballinterp/absorption.hpp"
#include "ballinterp/errors.hpp"
#include "ballinterp/geometry.hpp"
#include "ballinterp/io.hpp"
#include "ballinterp/minimize.hpp"
#include "ballinterp/projector_norm.hpp"
#include "ballinterp/regular_simplex.hpp"

namespace {

using nlohmann::json;

struct OutputOpts {
  std::string format;
  std::string out;
  int precision = 12;
};

void add_output_flags(CLI::App* cmd, OutputOpts* opts, const std::string& default_format) {
  opts->format = default_format;
  cmd->add_option("--format", opts->format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts->out, "Write output to a file instead of stdout");
  cmd->add_option("--precision", opts->precision, "Significant digits for CSV output (6..17)");
}

void check_output(const OutputOpts& opts, bool json_only) {
  if (opts.precision < 6 || opts.precision > 17) {
    throw ballinterp::PreconditionError("--precision must lie in [6, 17]");
  }
  if (json_only && opts.format == "csv") {
    throw ballinterp::PreconditionError("this subcommand emits JSON only; drop --format csv");
  }
}

void emit(const OutputOpts& opts, const std::string& payload) {
  if (opts.out.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream f(opts.out);
  if (!f) throw ballinterp::ParseError("cannot open '" + opts.out + "' for writing");
  f << payload;
}

ballinterp::Ball read_ball(const std::string& ball_str, const std::string& ball_json_path) {
  if (ball_str.empty() == ball_json_path.empty()) {
    throw ballinterp::PreconditionError("provide exactly one of --ball or --ball-json");
  }
  if (!ball_str.empty()) return ballinterp::ball_from_string(ball_str);
  std::ifstream in(ball_json_path);
  if (!in) throw ballinterp::ParseError("cannot open '" + ball_json_path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return ballinterp::ball_from_json(buf.str());
}

long long parse_integer(const std::string& token) {
  const std::string t = token;
  std::size_t consumed = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &consumed);
  } catch (const std::exception&) {
    throw ballinterp::ParseError("not an integer: '" + t + "'");
  }
  if (consumed != t.size()) throw ballinterp::ParseError("not an integer: '" + t + "'");
  return v;
}

// Dimension lists like "1..15,50,100,1000"; empty means no rows.
std::vector<int> parse_n_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    const auto dots = token.find("..");
    long long lo = 0;
    long long hi = 0;
    if (dots == std::string::npos) {
      lo = hi = parse_integer(token);
    } else {
      lo = parse_integer(token.substr(0, dots));
      hi = parse_integer(token.substr(dots + 2));
    }
    if (lo < 1 || hi < lo) {
      throw ballinterp::ParseError("bad dimension token '" + token + "' (need 1 <= a <= b)");
    }
    for (long long n = lo; n <= hi; ++n) out.push_back(static_cast<int>(n));
  }
  return out;
}

// --- subcommand payload builders -------------------------------------------

std::string run_norm(const std::string& simplex_path, const std::string& ball_str,
                     const std::string& ball_json_path, const std::string& method,
                     std::int64_t samples, std::uint64_t seed) {
  const ballinterp::Simplex s = ballinterp::load_simplex(simplex_path);
  const ballinterp::Ball ball = read_ball(ball_str, ball_json_path);
  if (method == "exact") {
    return ballinterp::to_json(ballinterp::projector_norm(s, ball)) + "\n";
  }
  json j;
  j["lower_bound"] = ballinterp::norm_lower_bound_mc(s, ball, samples, seed);
  j["samples"] = samples;
  j["seed"] = seed;
  return j.dump() + "\n";
}

std::string run_regular_table(const std::string& n_list, const OutputOpts& opts) {
  const std::vector<int> dims = parse_n_list(n_list);
  const auto reports = ballinterp::regular_reports(dims);
  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"n", r.n},
                      {"t_minus", r.t_minus},
                      {"a", r.a},
                      {"psi_a", r.psi_a},
                      {"psi_a1", r.psi_a_plus_1},
                      {"norm", r.norm},
                      {"k_star", r.k_star},
                      {"d_n", r.d_n}});
    }
    return rows.dump() + "\n";
  }
  std::ostringstream csv;
  csv << ballinterp::regular_report_csv_header() << "\n";
  for (const auto& r : reports) csv << ballinterp::to_csv_row(r, opts.precision) << "\n";
  return csv.str();
}

std::string run_psi_curve(int n, int samples, const OutputOpts& opts) {
  if (n < 1) throw ballinterp::DomainError("--n must be >= 1");
  if (samples < 2) throw ballinterp::PreconditionError("--samples must be >= 2");
  const auto cp = ballinterp::critical_points(n);
  struct Marker {
    const char* label;
    double t;
  };
  const Marker markers[] = {{"t_minus", cp.t_minus},
                            {"t_plus", cp.t_plus},
                            {"a", static_cast<double>(cp.a)},
                            {"a_plus_1", static_cast<double>(cp.a + 1)}};

  if (opts.format == "json") {
    json grid = json::array();
    for (int i = 0; i < samples; ++i) {
      const double t = (n + 1.0) * i / (samples - 1.0);
      grid.push_back({{"t", t}, {"psi", ballinterp::psi(n, t)}});
    }
    json marks = json::array();
    for (const auto& m : markers) {
      marks.push_back({{"label", m.label}, {"t", m.t}, {"psi", ballinterp::psi(n, m.t)}});
    }
    json j;
    j["n"] = n;
    j["grid"] = std::move(grid);
    j["markers"] = std::move(marks);
    return j.dump() + "\n";
  }

  std::ostringstream csv;
  csv << "t,psi,marker\n";
  for (int i = 0; i < samples; ++i) {
    const double t = (n + 1.0) * i / (samples - 1.0);
    csv << ballinterp::format_significant(t, opts.precision) << ','
        << ballinterp::format_significant(ballinterp::psi(n, t), opts.precision) << ",\n";
  }
  for (const auto& m : markers) {
    csv << ballinterp::format_significant(m.t, opts.precision) << ','
        << ballinterp::format_significant(ballinterp::psi(n, m.t), opts.precision) << ','
        << m.label << "\n";
  }
  return csv.str();
}

std::string run_dn_series(long long from, long long to, bool with_spline,
                          const OutputOpts& opts) {
  if (from < 1 || to < from) {
    throw ballinterp::PreconditionError("need 1 <= --from <= --to");
  }
  std::optional<ballinterp::SplineBound> spline;
  if (with_spline) spline.emplace(from, to);  // throws SplineRangeError when uncovered

  if (opts.format == "json") {
    json rows = json::array();
    for (long long n = from; n <= to; ++n) {
      const auto r = ballinterp::regular_norm(static_cast<int>(n));
      json row = {{"n", n}, {"d_n", r.d_n}};
      if (spline) row["l_n"] = spline->evaluate(n);
      rows.push_back(std::move(row));
    }
    return rows.dump() + "\n";
  }

  std::ostringstream csv;
  csv << (with_spline ? "n,d_n,l_n" : "n,d_n") << "\n";
  for (long long n = from; n <= to; ++n) {
    const auto r = ballinterp::regular_norm(static_cast<int>(n));
    csv << n << ',' << ballinterp::format_significant(r.d_n, opts.precision);
    if (spline) csv << ',' << ballinterp::format_significant(spline->evaluate(n), opts.precision);
    csv << "\n";
  }
  return csv.str();
}

std::string run_minimize(const ballinterp::SearchConfig& config) {
  return ballinterp::to_json(ballinterp::minimize_norm(config)) + "\n";
}

std::string run_xi(const std::string& simplex_path, const std::string& ball_str,
                   const std::string& ball_json_path) {
  const ballinterp::Simplex s = ballinterp::load_simplex(simplex_path);
  const ballinterp::Ball ball = read_ball(ball_str, ball_json_path);
  const ballinterp::AbsorptionResult res = ballinterp::absorption_index_ball(s, ball);
  const double norm = ballinterp::projector_norm(s, ball).value;
  const int n = s.dimension();
  const double lower = (n + 1.0) / (2.0 * n) * (norm - 1.0) + 1.0;
  const double upper = (n + 1.0) / 2.0 * (norm - 1.0) + 1.0;

  json j = json::parse(ballinterp::to_json(res));
  j["sandwich"] = {{"norm", norm},
                   {"lower", lower},
                   {"upper", upper},
                   {"holds", ballinterp::sandwich_check(norm, res.xi, n)},
                   {"right_equality", std::abs(res.xi - upper) <= 1e-9}};
  return j.dump() + "\n";
}

int run_guarded(const OutputOpts& opts, bool json_only, const std::function<std::string()>& fn) {
  try {
    check_output(opts, json_only);
    emit(opts, fn());
    return 0;
  } catch (const ballinterp::DegenerateSimplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ballinterp::SplineRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const ballinterp::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ballinterp::MalformedSimplexError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ballinterp::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ballinterp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ballinterp::DimensionMismatchError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ballinterp::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear interpolation projectors on Euclidean balls: norms, certificates, "
               "absorption indices"};
  app.require_subcommand(1);

  // norm
  auto* norm_cmd = app.add_subcommand("norm", "Projector norm of a simplex over a ball");
  std::string norm_simplex;
  std::string norm_ball;
  std::string norm_ball_json;
  std::string norm_method = "exact";
  std::int64_t norm_samples = 100000;
  std::uint64_t norm_seed = 0;
  OutputOpts norm_opts;
  norm_cmd->add_option("simplex", norm_simplex, "Simplex file (CSV rows or JSON)")->required();
  norm_cmd->add_option("--ball", norm_ball, "Ball as \"c1,c2,...,cn;R\"");
  norm_cmd->add_option("--ball-json", norm_ball_json, "Ball JSON file");
  norm_cmd->add_option("--method", norm_method, "exact | montecarlo")
      ->check(CLI::IsMember({"exact", "montecarlo"}));
  norm_cmd->add_option("--samples", norm_samples, "Monte Carlo sample count");
  norm_cmd->add_option("--seed", norm_seed, "Monte Carlo seed");
  add_output_flags(norm_cmd, &norm_opts, "json");

  // regular-table
  auto* table_cmd = app.add_subcommand("regular-table", "Closed-form table for regular simplices");
  std::string table_dims;
  OutputOpts table_opts;
  table_cmd->add_option("--n", table_dims, "Dimensions, e.g. \"1..15,50,100,1000\"");
  add_output_flags(table_cmd, &table_opts, "csv");

  // psi-curve
  auto* psi_cmd = app.add_subcommand("psi-curve", "psi(t) on [0, n+1] with critical markers");
  int psi_n = 0;
  int psi_samples = 1001;
  OutputOpts psi_opts;
  psi_cmd->add_option("--n", psi_n, "Dimension")->required();
  psi_cmd->add_option("--samples", psi_samples, "Grid size (>= 2)");
  add_output_flags(psi_cmd, &psi_opts, "csv");

  // dn-series
  auto* dn_cmd = app.add_subcommand("dn-series", "d_n = sqrt(n+1) - norm, optionally with the "
                                                 "spline envelope l_n");
  long long dn_from = 0;
  long long dn_to = 0;
  bool dn_spline = false;
  OutputOpts dn_opts;
  dn_cmd->add_option("--from", dn_from, "First dimension")->required();
  dn_cmd->add_option("--to", dn_to, "Last dimension")->required();
  dn_cmd->add_flag("--with-spline", dn_spline, "Add the l_n column (range must start at >= 23)");
  add_output_flags(dn_cmd, &dn_opts, "csv");

  // minimize
  auto* min_cmd = app.add_subcommand("minimize", "Stochastic norm minimization over inscribed "
                                                 "simplices in the unit ball");
  ballinterp::SearchConfig config;
  OutputOpts min_opts;
  min_cmd->add_option("--n", config.n, "Dimension")->required();
  min_cmd->add_option("--restarts", config.restarts, "Independent restarts");
  min_cmd->add_option("--iterations", config.max_iterations, "Iterations per restart");
  min_cmd->add_option("--step", config.initial_step, "Initial perturbation step");
  min_cmd->add_option("--decay", config.step_decay, "Multiplicative step decay in (0,1)");
  min_cmd->add_option("--tolerance", config.tolerance, "Stop when the step falls below this");
  min_cmd->add_option("--seed", config.seed, "RNG seed");
  min_cmd->add_option("--eps", config.degeneracy_eps, "Reject moves with |det A| below this");
  add_output_flags(min_cmd, &min_opts, "json");

  // xi
  auto* xi_cmd = app.add_subcommand("xi", "Absorption index of a ball with sandwich verdict");
  std::string xi_simplex;
  std::string xi_ball;
  std::string xi_ball_json;
  OutputOpts xi_opts;
  xi_cmd->add_option("simplex", xi_simplex, "Simplex file (CSV rows or JSON)")->required();
  xi_cmd->add_option("--ball", xi_ball, "Ball as \"c1,c2,...,cn;R\"");
  xi_cmd->add_option("--ball-json", xi_ball_json, "Ball JSON file");
  add_output_flags(xi_cmd, &xi_opts, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // parse failures map to 2; --help stays 0
  }

  if (app.got_subcommand(norm_cmd)) {
    return run_guarded(norm_opts, true, [&] {
      return run_norm(norm_simplex, norm_ball, norm_ball_json, norm_method, norm_samples,
                      norm_seed);
    });
  }
  if (app.got_subcommand(table_cmd)) {
    return run_guarded(table_opts, false, [&] { return run_regular_table(table_dims, table_opts); });
  }
  if (app.got_subcommand(psi_cmd)) {
    return run_guarded(psi_opts, false, [&] { return run_psi_curve(psi_n, psi_samples, psi_opts); });
  }
  if (app.got_subcommand(dn_cmd)) {
    return run_guarded(dn_opts, false,
                       [&] { return run_dn_series(dn_from, dn_to, dn_spline, dn_opts); });
  }
  if (app.got_subcommand(min_cmd)) {
    return run_guarded(min_opts, true, [&] { return run_minimize(config); });
  }
  if (app.got_subcommand(xi_cmd)) {
    return run_guarded(xi_opts, true, [&] { return run_xi(xi_simplex, xi_ball, xi_ball_json); });
  }
  std::cerr << "error: no subcommand selected\n";
  return 2;
}
