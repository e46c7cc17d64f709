// Command-line front end: construct and validate hypergroup tables, probe
// the order-5 family and its conic, and run the feasibility search.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "hg/families.hpp"
#include "hg/io.hpp"
#include "hg/search.hpp"
#include "hg/symbolic.hpp"
#include "hg/symmetry.hpp"
#include "hg/validate.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

hg::Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto q = hg::parse_fraction(text);
  if (!q) {
    throw CLI::ValidationError(flag, "expected a rational like 197/468");
  }
  return *q;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << content;
}

int cmd_validate(const std::string& file, bool as_json) {
  hg::Hypergroup h = hg::io::parse_document(read_file(file));
  const auto report = hg::validation::validate(h);
  std::cout << (as_json ? hg::io::report_to_json(report)
                        : hg::io::report_to_text(report));
  return report.overall ? kOk : kFailure;
}

int cmd_construct(const hg::Rational& r, const hg::Rational& s,
                  const std::string& out_path) {
  const hg::Hypergroup h = hg::families::build_k_rs(r, s);
  const std::string doc = hg::io::serialize(h);
  if (out_path.empty()) {
    std::cout << doc;
  } else {
    write_file(out_path, doc);
  }
  return kOk;
}

int cmd_conic(const hg::Rational& r, const hg::Rational& width) {
  for (const auto& sol : hg::families::conic_solutions_for_r(r, width)) {
    if (sol.exact) {
      std::cout << "s = " << hg::to_fraction_string(sol.value) << " (exact, ~"
                << hg::to_double(sol.value) << ")\n";
    } else {
      std::cout << "s in [" << hg::to_fraction_string(sol.lo) << ", "
                << hg::to_fraction_string(sol.hi) << "] (~"
                << hg::to_double((sol.lo + sol.hi) / 2) << ")\n";
    }
  }
  return kOk;
}

int cmd_point(const hg::Rational& slope) {
  const auto [r, s] = hg::families::rational_point_from_slope(slope);
  std::cout << "r = " << hg::to_fraction_string(r)
            << ", s = " << hg::to_fraction_string(s)
            << ", F(r,s) = " << hg::to_fraction_string(hg::families::conic_value(r, s))
            << "\n";
  return kOk;
}

int cmd_witness(const std::string& file) {
  hg::Hypergroup h = hg::io::parse_document(read_file(file));
  const auto witness = hg::validation::commutativity_witness(h);
  if (witness) {
    std::cout << "(" << witness->first << "," << witness->second << ")\n";
  } else {
    std::cout << "commutative\n";
  }
  return kOk;
}

int cmd_region(const hg::Rational& step, const std::string& out_path) {
  const auto rows = hg::search::sample_region(step);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  hg::io::write_region_csv(out, rows);
  size_t in_region = 0, admissible = 0;
  for (const auto& row : rows) {
    in_region += row.in_region;
    admissible += row.admissible;
  }
  std::cout << rows.size() << " grid points, " << in_region << " in region, "
            << admissible << " admissible\n";
  return kOk;
}

int cmd_search(int order, const std::string& star_csv, int restarts,
               std::uint64_t seed, int max_iterations, double residual_tol,
               double defect_tol, const std::string& out_path) {
  std::vector<int> perm;
  std::stringstream ss(star_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      perm.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw CLI::ValidationError("--star", "expected a comma list like 0,1,2,4,3");
    }
  }
  hg::search::SearchConfig config;
  config.order = order;
  config.star = hg::StarInvolution(std::move(perm));
  config.restarts = restarts;
  config.seed = seed;
  config.max_iterations = max_iterations;
  config.residual_tolerance = residual_tol;
  config.commutativity_tolerance = defect_tol;

  const auto candidates = hg::search::feasibility_search(config);
  std::cout << candidates.size() << " candidate(s) below residual tolerance "
            << config.residual_tolerance << "\n";
  size_t noncommutative = 0;
  double max_defect = 0.0;
  for (const auto& c : candidates) {
    max_defect = std::max(max_defect, c.commutativity_defect);
    if (c.commutativity_defect > config.commutativity_tolerance) ++noncommutative;
  }
  if (!candidates.empty()) {
    std::cout << "best residual " << candidates.front().residual << ", max defect "
              << max_defect << ", " << noncommutative
              << " candidate(s) over the commutativity tolerance\n";
  }
  if (!out_path.empty()) {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
    hg::io::write_candidates_csv(out, candidates);
  }
  return kOk;
}

int cmd_symbolic_verify(bool as_json) {
  const auto report = hg::symbolic::verify_catalog();
  std::cout << (as_json ? hg::io::catalog_report_to_json(report)
                        : hg::io::catalog_report_to_text(report));
  return report.all_certified ? kOk : kFailure;
}

int cmd_isocheck(const hg::Rational& r, const hg::Rational& s) {
  const hg::Hypergroup k_rs = hg::families::build_k_rs(r, s);
  const hg::Hypergroup k_sr = hg::families::build_k_rs(s, r);
  const auto swap12 = hg::symmetry::Relabeling::transposition(5, 1, 2);
  const auto swap34 = hg::symmetry::Relabeling::transposition(5, 3, 4);
  const bool pi_ok = hg::symmetry::check_isomorphism(k_rs, k_sr, swap12);
  const bool pi_tilde_ok = hg::symmetry::check_isomorphism(k_rs, k_sr, swap34);
  std::cout << "swap(1,2): K_(r,s) -> K_(s,r) " << (pi_ok ? "preserved" : "BROKEN")
            << "\n"
            << "swap(3,4): K_(r,s) -> K_(s,r) "
            << (pi_tilde_ok ? "preserved" : "BROKEN") << "\n";
  return (pi_ok && pi_tilde_ok) ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for finite hypergroups and the order-5 family"};
  app.require_subcommand(1);

  std::string file, out_path, star_csv;
  std::string r_text, s_text, width_text = "1/1000000000000", slope_text, step_text;
  bool as_json = false;
  int order = 0, restarts = 1, max_iterations = 1500;
  std::uint64_t seed = 0;
  double residual_tol = 1e-9, defect_tol = 1e-7;

  auto* validate = app.add_subcommand("validate", "Validate a hypergroup document");
  validate->add_option("file", file, "document path")->required();
  validate->add_flag("--json", as_json, "machine-readable report");

  auto* construct = app.add_subcommand("construct", "Build the order-5 family table");
  construct->add_option("--r", r_text, "parameter r")->required();
  construct->add_option("--s", s_text, "parameter s")->required();
  construct->add_option("--out", out_path, "output path (default stdout)");

  auto* conic = app.add_subcommand("conic", "Solve the conic in s for a fixed r");
  conic->add_option("--r", r_text, "parameter r")->required();
  conic->add_option("--width", width_text, "enclosure width for irrational roots");

  auto* point = app.add_subcommand("point", "Rational conic point from a line slope");
  point->add_option("--slope", slope_text, "slope of the line through (1/4,1/4)")
      ->required();

  auto* witness = app.add_subcommand("witness", "Commutativity witness of a document");
  witness->add_option("file", file, "document path")->required();

  auto* region = app.add_subcommand("region", "Sample the admissible region to CSV");
  region->add_option("--step", step_text, "grid step")->required();
  region->add_option("--out", out_path, "CSV output path")->required();

  auto* search = app.add_subcommand("search", "Feasibility search for hypergroups");
  search->add_option("--order", order, "number of elements")->required();
  search->add_option("--star", star_csv, "star permutation, comma list")->required();
  search->add_option("--restarts", restarts, "number of restarts")->required();
  search->add_option("--seed", seed, "base RNG seed")->required();
  search->add_option("--max-iters", max_iterations, "iterations per restart");
  search->add_option("--residual-tol", residual_tol, "feasibility tolerance");
  search->add_option("--defect-tol", defect_tol, "commutativity tolerance");
  search->add_option("--out", out_path, "CSV output path");

  auto* symbolic =
      app.add_subcommand("symbolic-verify", "Certify the identity catalog");
  symbolic->add_flag("--json", as_json, "machine-readable report");

  auto* isocheck =
      app.add_subcommand("isocheck", "Check the K_(r,s) <-> K_(s,r) relabelings");
  isocheck->add_option("--r", r_text, "parameter r")->required();
  isocheck->add_option("--s", s_text, "parameter s")->required();

  try {
    app.parse(argc, argv);

    if (app.got_subcommand(validate)) return cmd_validate(file, as_json);
    if (app.got_subcommand(construct)) {
      return cmd_construct(parse_rational_arg(r_text, "--r"),
                           parse_rational_arg(s_text, "--s"), out_path);
    }
    if (app.got_subcommand(conic)) {
      return cmd_conic(parse_rational_arg(r_text, "--r"),
                       parse_rational_arg(width_text, "--width"));
    }
    if (app.got_subcommand(point)) {
      return cmd_point(parse_rational_arg(slope_text, "--slope"));
    }
    if (app.got_subcommand(witness)) return cmd_witness(file);
    if (app.got_subcommand(region)) {
      return cmd_region(parse_rational_arg(step_text, "--step"), out_path);
    }
    if (app.got_subcommand(search)) {
      return cmd_search(order, star_csv, restarts, seed, max_iterations,
                        residual_tol, defect_tol, out_path);
    }
    if (app.got_subcommand(symbolic)) return cmd_symbolic_verify(as_json);
    if (app.got_subcommand(isocheck)) {
      return cmd_isocheck(parse_rational_arg(r_text, "--r"),
                          parse_rational_arg(s_text, "--s"));
    }
    return kUsage;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const hg::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}
