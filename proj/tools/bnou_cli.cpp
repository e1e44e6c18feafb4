// Command-line surface: Minkowski gauges, the three counterexample harnesses,
// figure geometry emission, the property/acceptance suite, and truncation
// chain reports. Every output is a pure function of the flags.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bnou/json_io.hpp"
#include "bnou/suite.hpp"

namespace fs = std::filesystem;
using namespace bnou;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(ErrorCode::ParseError, path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::ParseError, "cannot write " + path);
  out << text;
}

QVec parse_point(const std::string& csv) {
  QVec p;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) p.push_back(rat_parse(part));
  if (p.empty()) fail(ErrorCode::ParseError, "empty point");
  return p;
}

std::vector<int> parse_which_list(const std::string& csv) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    out.push_back(std::stoi(part));
  }
  if (out.empty()) fail(ErrorCode::UnknownFigure, "no figures requested");
  return out;
}

int cmd_gauge(const std::string& ball_path, const std::string& point_csv) {
  const Polytope ball = polytope_from_json(read_json_file(ball_path));
  const QVec p = parse_point(point_csv);
  std::cout << rat_str(gauge(ball, p)) << "\n";
  return 0;
}

int cmd_cx(int which, long samples, std::uint64_t seed, const std::string& out_path) {
  CxReport rep;
  if (which == 1)
    rep = cx1_run(samples, seed);
  else if (which == 2)
    rep = cx2_run(samples, seed);
  else if (which == 3)
    rep = cx3_run(samples, seed);
  else
    fail(ErrorCode::UnknownFigure, "counterexample index must be 1, 2 or 3");
  write_text_file(out_path, cx_report_to_json(rep).dump(2) + "\n");
  std::cout << "counterexample " << which << ": " << samples << " samples, verdict "
            << (rep.verdict ? "holds" : "FAILED") << ", report " << out_path << "\n";
  return rep.verdict ? 0 : 1;
}

int cmd_figures(const std::string& which_csv, const std::string& coords,
                const std::string& format, const std::string& out_dir) {
  CoordConvention conv;
  if (coords == "trace-vertical")
    conv = CoordConvention::TraceVertical;
  else if (coords == "axes")
    conv = CoordConvention::Axes;
  else
    fail(ErrorCode::ParseError, "coords must be trace-vertical or axes");
  if (format != "json" && format != "svg")
    fail(ErrorCode::ParseError, "format must be json or svg");
  fs::create_directories(out_dir);
  for (int which : parse_which_list(which_csv)) {
    const FigureGeometry g = emit_figure(which, conv);
    const std::string base = (fs::path(out_dir) / ("figure" + std::to_string(which))).string();
    if (format == "json")
      write_text_file(base + ".json", figure_to_json(g).dump(2) + "\n");
    else
      write_text_file(base + ".svg", figure_to_svg(g));
    std::cout << "wrote " << base << "." << format << "\n";
  }
  return 0;
}

int cmd_suite(std::uint64_t seed, long cases, bool mutate, const std::string& out_path) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.cases = cases;
  if (mutate) opt.gauge_offset = Rational(1, 7);
  const SuiteResult res = run_suite(opt);
  const std::string text = suite_result_to_json(res).dump(2) + "\n";
  if (!out_path.empty()) write_text_file(out_path, text);
  std::cout << text;
  return res.ok() ? 0 : 1;
}

int cmd_chain(const std::string& target_path, const std::string& mu_str,
              const std::string& eps_str) {
  const SeqRep target = seqrep_from_json(read_json_file(target_path));
  const Rational mu = rat_parse(mu_str);
  const Rational eps = rat_parse(eps_str);
  const OUElem top{SeqSpace::L1, target, mu};
  if (!ou_cone_member(top))
    fail(ErrorCode::NotPositive, "chain target must lie in the positive cone: mu >= l1 norm");
  const TruncationChain chain = make_chain(top);
  const long N = verify_norm_convergence(chain, eps);
  std::vector<std::pair<long, Rational>> rows;
  const long depth = std::min<long>(std::max<long>(N, 8), 64);
  for (long n = 1; n <= depth; ++n) rows.emplace_back(n, chain_distance(chain, n));
  const Rational bound = 2 * seq_norm(target);
  std::cout << residual_report_to_json(rows, bound, N).dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact base-norm / order-unit constructions toolkit"};
  app.require_subcommand(1);

  auto* g = app.add_subcommand("gauge", "Minkowski gauge of a vertex-described ball");
  std::string ball_path, point_csv;
  g->add_option("--ball", ball_path, "polytope JSON file")->required();
  g->add_option("--point", point_csv, "comma-separated rationals, e.g. 1/2,-3/4")->required();

  auto* cx = app.add_subcommand("cx", "run a counterexample harness");
  int cx_which = 0;
  long cx_samples = 100;
  std::uint64_t cx_seed = 20260819;
  std::string cx_out = "report.json";
  cx->add_option("--which", cx_which, "1, 2 or 3")->required();
  cx->add_option("--samples", cx_samples, "sample count (default 100)");
  cx->add_option("--seed", cx_seed, "generator seed");
  cx->add_option("--out", cx_out, "report path (default report.json)");

  auto* fig = app.add_subcommand("figures", "emit figure geometry");
  std::string fig_which = "1,2,3,4", fig_coords = "trace-vertical", fig_format = "json",
              fig_out = ".";
  fig->add_option("--which", fig_which, "comma list from 1,2,3,4");
  fig->add_option("--coords", fig_coords, "trace-vertical or axes");
  fig->add_option("--format", fig_format, "json or svg");
  fig->add_option("--out", fig_out, "output directory");

  auto* su = app.add_subcommand("suite", "run invariant suites and acceptance criteria");
  std::uint64_t su_seed = 20260819;
  long su_cases = 100;
  bool su_mutate = false;
  std::string su_out;
  su->add_option("--seed", su_seed, "generator seed");
  su->add_option("--cases", su_cases, "cases per module suite (default 100)");
  su->add_flag("--mutate", su_mutate, "corrupt the gauge oracle; the run must fail");
  su->add_option("--out", su_out, "also write the JSON report here");

  auto* ch = app.add_subcommand("chain", "truncation-chain convergence report");
  std::string ch_target, ch_mu, ch_eps;
  ch->add_option("--target", ch_target, "summable sequence JSON file")->required();
  ch->add_option("--mu", ch_mu, "scalar coordinate of the supremum, at least the l1 norm")
      ->required();
  ch->add_option("--eps", ch_eps, "positive rational tolerance")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_gauge(ball_path, point_csv);
    if (cx->parsed()) return cmd_cx(cx_which, cx_samples, cx_seed, cx_out);
    if (fig->parsed()) return cmd_figures(fig_which, fig_coords, fig_format, fig_out);
    if (su->parsed()) return cmd_suite(su_seed, su_cases, su_mutate, su_out);
    if (ch->parsed()) return cmd_chain(ch_target, ch_mu, ch_eps);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
