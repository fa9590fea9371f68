// Command-line front end.  Subcommands: validate, report, census,
// normalize, dot.  Exit codes: 0 success, 1 the matrix fails a domain
// check, 2 malformed input.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gbott/census.hpp"
#include "gbott/io.hpp"
#include "gbott/report.hpp"

namespace {

using gbott::VectorMatrix;
using nlohmann::json;

VectorMatrix read_matrix(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return gbott::parse_matrix_text(ss.str());
  }
  return gbott::read_matrix_file(path);
}

std::string one_based(const std::vector<int>& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i] + 1);
  }
  return out + ")";
}

// Returns the matrix when valid, otherwise prints the offending principal
// minor and leaves the result empty.
std::optional<VectorMatrix> load_valid(const std::string& path) {
  VectorMatrix A = read_matrix(path);
  if (auto witness = gbott::first_failing_minor(A)) {
    std::cout << "invalid: singular principal minor on rows "
              << one_based(witness->rows) << " with block columns "
              << one_based(witness->choice) << "\n";
    return std::nullopt;
  }
  return A;
}

std::string monomials_text(const json& monomials) {
  if (monomials.empty()) return "0";
  std::string out;
  for (const auto& mono : monomials) {
    if (!out.empty()) out += " + ";
    std::string term;
    for (size_t i = 0; i < mono.size(); ++i) {
      int e = mono[i].get<int>();
      if (e == 0) continue;
      if (!term.empty()) term += " ";
      term += "z" + std::to_string(i + 1);
      if (e > 1) term += "^" + std::to_string(e);
    }
    out += term.empty() ? "1" : term;
  }
  return out;
}

std::string word_text(const json& word) {
  std::string out;
  for (const auto& g : word) {
    int v = g.get<int>();
    if (!out.empty()) out += " ";
    out += "a" + std::to_string(v < 0 ? -v : v);
    if (v < 0) out += "^-1";
  }
  return out;
}

std::string join(const json& numbers) {
  std::string out;
  for (const auto& v : numbers) {
    if (!out.empty()) out += " ";
    out += std::to_string(v.get<long long>());
  }
  return out;
}

void print_text_report(const json& r) {
  std::cout << "dims: " << join(r["dims"]) << "\n";
  std::cout << "rows:\n";
  for (const auto& row : r["normalized_rows"])
    std::cout << "  " << join(row) << "\n";
  std::cout << "orientable: " << (r["orientable"] == true ? "yes" : "no")
            << "\n";
  if (r["spin"].is_null())
    std::cout << "spin: n/a (not orientable)\n";
  else
    std::cout << "spin: " << (r["spin"] == true ? "yes" : "no") << "\n";
  std::cout << "w1: " << monomials_text(r["w1"]) << "\n";
  std::cout << "w2: " << monomials_text(r["w2"]) << "\n";
  std::cout << "total sw: " << monomials_text(r["total_sw"]) << "\n";
  std::cout << "betti: " << join(r["betti"]) << "\n";
  std::cout << "pi1: " << r["pi1"]["generators"].get<int>()
            << " generators; relators:";
  for (const auto& rel : r["pi1"]["relators"])
    std::cout << "  " << word_text(rel);
  std::cout << "\n";
  std::cout << "h1:";
  long long free_rank = r["h1"]["free_rank"].get<long long>();
  for (long long i = 0; i < free_rank; ++i) std::cout << " Z";
  for (const auto& t : r["h1"]["torsion"])
    std::cout << " Z" << t.get<long long>();
  if (free_rank == 0 && r["h1"]["torsion"].empty()) std::cout << " trivial";
  std::cout << "\n";
  std::cout << "flags:";
  for (const char* f :
       {"abelian", "nilpotent", "torsion_free", "solvable", "aspherical"})
    if (r["flags"][f] == true) std::cout << " " << f;
  std::cout << "\n";
  std::cout << "fan: " << (r["fan"]["smooth"] == true ? "smooth" : "singular")
            << ", " << (r["fan"]["flag"] == true ? "flag" : "not flag") << "\n";
  std::cout << "big blocks first: "
            << (r["big_blocks_first"] == true ? "yes" : "no") << "\n";
  if (r.contains("higher_homotopy"))
    std::cout << "pi_" << r["higher_homotopy"]["degree"].get<int>() << ": "
              << r["higher_homotopy"]["groups"].get<std::string>() << "\n";
  if (r.contains("digraph_dot"))
    std::cout << r["digraph_dot"].get<std::string>();
}

int cmd_validate(const std::string& path) {
  auto A = load_valid(path);
  if (!A) return 1;
  std::cout << "valid\n";
  return 0;
}

int cmd_report(const std::string& path, bool as_json, bool with_dot,
               int homotopy) {
  auto A = load_valid(path);
  if (!A) return 1;
  gbott::ReportOptions opts;
  opts.include_dot = with_dot;
  opts.homotopy_degree = homotopy;
  json r = gbott::build_report(*A, opts);
  if (as_json)
    std::cout << r.dump(2) << "\n";
  else
    print_text_report(r);
  return 0;
}

int cmd_census(const std::vector<int>& parts, bool dedupe, int threads) {
  gbott::Dims d(parts);
  const uint64_t size = gbott::census_size(d);
  for (uint64_t idx = 0; idx < size; ++idx) {
    VectorMatrix A = gbott::census_matrix(d, idx);
    if (dedupe && !gbott::detail::orbit_representative(A)) continue;
    json record;
    record["matrix"] = gbott::matrix_to_json(A);
    record["report"] = gbott::build_report(A);
    record["canonical_key"] = gbott::canonical_key(A);
    std::cout << record.dump() << "\n";
  }
  gbott::CensusCounts c = gbott::classify(d, dedupe, threads);
  json summary;
  summary["summary"] = {{"dims", parts},         {"dedupe", dedupe},
                        {"total", c.total},      {"orientable", c.orientable},
                        {"spin", c.spin},        {"abelian", c.abelian},
                        {"aspherical", c.aspherical}};
  std::cout << summary.dump() << "\n";
  return 0;
}

int cmd_normalize(const std::string& path) {
  auto A = load_valid(path);
  if (!A) return 1;
  gbott::NormalizeResult nr = gbott::normalize(*A);
  json out = gbott::matrix_to_json(nr.matrix);
  std::vector<int> sigma;
  for (int s : nr.sigma.order) sigma.push_back(s + 1);
  out["sigma"] = sigma;
  std::cout << out.dump() << "\n";
  return 0;
}

int cmd_dot(const std::string& path) {
  auto A = load_valid(path);
  if (!A) return 1;
  std::cout << gbott::to_dot(gbott::build_digraph(gbott::normalize(*A).matrix));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of generalized real Bott manifolds"};
  app.require_subcommand(1);

  std::string path;
  bool as_json = false, with_dot = false, dedupe = false;
  int homotopy = 0, threads = 0;
  std::vector<int> dims;

  CLI::App* validate = app.add_subcommand(
      "validate", "check that a matrix defines a manifold");
  validate->add_option("file", path, "matrix JSON file, or - for stdin")
      ->required();

  CLI::App* report =
      app.add_subcommand("report", "compute every invariant of one matrix");
  report->add_option("file", path, "matrix JSON file, or - for stdin")
      ->required();
  report->add_flag("--json", as_json, "machine-readable output");
  report->add_flag("--dot", with_dot, "include the block digraph");
  report->add_option("--homotopy", homotopy,
                     "also report the homotopy group in this degree (>= 2)")
      ->check(CLI::Range(2, 1 << 20));

  CLI::App* census =
      app.add_subcommand("census", "enumerate all matrices for a dims vector");
  census
      ->add_option("--dims", dims,
                   "comma-separated fiber dimensions, e.g. 2,1")
      ->required()
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  census->add_flag("--dedupe", dedupe,
                   "one record per conjugation orbit");
  census->add_option("--threads", threads, "worker threads (0 = auto)");

  CLI::App* norm = app.add_subcommand(
      "normalize", "conjugate to unipotent upper-triangular form");
  norm->add_option("file", path, "matrix JSON file, or - for stdin")
      ->required();

  CLI::App* dot =
      app.add_subcommand("dot", "print the block digraph in DOT form");
  dot->add_option("file", path, "matrix JSON file, or - for stdin")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (report->parsed()) return cmd_report(path, as_json, with_dot, homotopy);
    if (census->parsed()) return cmd_census(dims, dedupe, threads);
    if (norm->parsed()) return cmd_normalize(path);
    return cmd_dot(path);
  } catch (const gbott::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
