// Batch front door: parse problem/point files, dispatch to the library,
// emit canonical result documents on stdout.
//
// Exit codes: 0 success, 2 validation failure (machine-readable error
// document on stdout), 1 internal assertion (theorem-identity violation).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qspectra/io.hpp"

namespace {

using namespace qspectra;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::size_t> parse_stratum_arg(const std::string& arg, std::size_t n) {
  std::vector<std::size_t> w;
  std::stringstream ss(arg);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    std::size_t idx = 0;
    try {
      idx = std::stoul(tok);
    } catch (const std::exception&) {
      throw validation_error("bad stratum index: " + tok);
    }
    if (idx < 1 || idx > n) throw validation_error("stratum index out of range: " + tok);
    w.push_back(idx - 1);
  }
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end())
    throw validation_error("duplicate stratum index");
  return w;
}

struct Options {
  std::string command;
  std::string problem_path;
  std::string point_path;
  std::string point2_path;
  std::string cocycle2_path;
  std::string stratum_arg;
  std::string out_path;
  std::size_t count = 3;
  unsigned threads = 1;
  bool torus = false;
};

void emit(const Options& opt, const std::string& doc) {
  std::cout << doc;
  if (!opt.out_path.empty()) {
    std::ofstream out(opt.out_path);
    if (!out) throw validation_error("cannot write file: " + opt.out_path);
    out << doc;
  }
}

resultdoc::Echo make_echo(const Options& opt) {
  resultdoc::Echo e;
  e.emplace_back("problem", opt.problem_path);
  if (!opt.point_path.empty()) e.emplace_back("point", opt.point_path);
  if (!opt.point2_path.empty()) e.emplace_back("point2", opt.point2_path);
  if (!opt.cocycle2_path.empty()) e.emplace_back("cocycle2", opt.cocycle2_path);
  if (!opt.stratum_arg.empty()) e.emplace_back("stratum", opt.stratum_arg);
  if (opt.command == "orbit-sample") e.emplace_back("count", std::to_string(opt.count));
  if (opt.torus) e.emplace_back("torus", "true");
  return e;
}

const GradingData& require_toric(const ProblemFile& pf) {
  if (!pf.has_toric())
    throw validation_error("command requires a toric block in the problem file");
  return *pf.grading;
}

int run(const Options& opt) {
  ProblemFile pf = parse_problem(read_file(opt.problem_path));
  resultdoc::Echo echo = make_echo(opt);
  const std::string& cmd = opt.command;

  if (cmd == "validate") {
    emit(opt, resultdoc::validate(echo, pf));
  } else if (cmd == "strata") {
    if (opt.torus) {
      emit(opt, resultdoc::strata(echo, {torus_summary(pf.q)}, "x"));
    } else {
      emit(opt, resultdoc::strata(echo, enumerate_strata(pf.q, opt.threads), "x"));
    }
  } else if (cmd == "radical") {
    std::vector<std::size_t> w = parse_stratum_arg(opt.stratum_arg, pf.q.n());
    RadicalLattice rad = radical(pf.q, w);
    std::vector<std::vector<Int>> basis;
    for (std::size_t i = 0; i < rad.lattice.rank(); ++i)
      basis.push_back(rad.lattice.basis_row(i));
    emit(opt, resultdoc::radical_basis(echo, w, basis, "x"));
  } else if (cmd == "cocycle") {
    emit(opt, resultdoc::cocycle(echo, build_cocycle(pf.q)));
  } else if (cmd == "center") {
    std::vector<std::size_t> w = parse_stratum_arg(opt.stratum_arg, pf.q.n());
    emit(opt, resultdoc::center(echo, w, center_generators(pf.q, w), "x"));
  } else if (cmd == "map-point") {
    Point p = parse_point(read_file(opt.point_path), pf);
    IdealPresentation I = map_point(pf.q, build_cocycle(pf.q), p);
    emit(opt, resultdoc::map_point(echo, I, "x", false));
  } else if (cmd == "torus-map-point") {
    Point p = parse_point(read_file(opt.point_path), pf);
    IdealPresentation I = torus_map_point(pf.q, build_cocycle(pf.q), p);
    emit(opt, resultdoc::map_point(echo, I, "x", true));
  } else if (cmd == "fibre") {
    Point a = parse_point(read_file(opt.point_path), pf);
    Point b = parse_point(read_file(opt.point2_path), pf);
    emit(opt, resultdoc::fibre(echo, same_fibre(pf.q, a, b)));
  } else if (cmd == "orbit-sample") {
    Point p = parse_point(read_file(opt.point_path), pf);
    emit(opt, resultdoc::orbit(echo, orbit_sample(pf.q, p, opt.count)));
  } else if (cmd == "toric-map-point") {
    const GradingData& gd = require_toric(pf);
    Point p = parse_point(read_file(opt.point_path), pf);
    IdealPresentation I = map_point_toric(gd, *pf.toric_c, p);
    emit(opt, resultdoc::map_point(echo, I, "a", false));
  } else if (cmd == "toric-fibre") {
    const GradingData& gd = require_toric(pf);
    Point a = parse_point(read_file(opt.point_path), pf);
    Point b = parse_point(read_file(opt.point2_path), pf);
    emit(opt, resultdoc::fibre(echo, same_fibre_toric(gd, *pf.toric_c, a, b)));
  } else if (cmd == "refine") {
    const GradingData& gd = require_toric(pf);
    GBicharacter c2 = parse_second_cocycle(read_file(opt.cocycle2_path), pf);
    Point p = parse_point(read_file(opt.point_path), pf);
    emit(opt, resultdoc::refine(echo, refine(gd, *pf.toric_c, c2, p), "a"));
  } else if (cmd == "check-grading") {
    const GradingData& gd = require_toric(pf);
    emit(opt, resultdoc::grading_report(
                  echo, validate_grading(gd, pf.group->characteristic())));
  } else {
    throw validation_error("unknown command: " + cmd);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stratified primitive spectra of quantum affine spaces, quantum tori, "
               "and quantum toric varieties"};
  app.require_subcommand(1);

  Options opt;
  const char* env_threads = std::getenv("QSPECTRA_THREADS");
  if (env_threads) opt.threads = static_cast<unsigned>(std::atoi(env_threads));

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--problem", opt.problem_path, "problem file")->required();
    sub->add_option("--out", opt.out_path, "also write the document to this file");
  };

  const std::pair<const char*, const char*> commands[] = {
      {"validate", "check the problem file against all structural invariants"},
      {"strata", "summarize the 2^n strata of the primitive spectrum"},
      {"radical", "HNF basis of the stratum radical lattice"},
      {"cocycle", "the canonical square-root cocycle of the parameter matrix"},
      {"center", "central monomials of the stratum localization"},
      {"map-point", "primitive ideal of a classical point of k^n"},
      {"fibre", "decide whether two points map to the same primitive ideal"},
      {"orbit-sample", "sample points of the fibre through a point"},
      {"torus-map-point", "primitive ideal of a point of the torus (k^x)^n"},
      {"toric-map-point", "primitive ideal of a point of the toric variety"},
      {"toric-fibre", "fibre decision on the toric variety, two-way checked"},
      {"refine", "radical-inclusion check and quotient triangle for two twists"},
      {"check-grading", "grading generates the group and torsion is visible"},
  };
  for (const auto& [name, description] : commands) {
    CLI::App* sub = app.add_subcommand(name, description);
    add_common(sub);
    std::string n = name;
    if (n == "strata") {
      sub->add_flag("--torus", opt.torus, "summarize the quantum torus instead");
      sub->add_option("--threads", opt.threads, "stratum-level parallelism");
    }
    if (n == "radical" || n == "center")
      sub->add_option("--stratum", opt.stratum_arg,
                      "comma-separated 1-based indices, empty for the dense stratum");
    if (n == "map-point" || n == "torus-map-point" || n == "toric-map-point" ||
        n == "orbit-sample" || n == "fibre" || n == "toric-fibre" || n == "refine")
      sub->add_option("--point", opt.point_path, "point file")->required();
    if (n == "fibre" || n == "toric-fibre")
      sub->add_option("--point2", opt.point2_path, "second point file")->required();
    if (n == "orbit-sample")
      sub->add_option("--count", opt.count, "number of sampled fibre points");
    if (n == "refine")
      sub->add_option("--cocycle2", opt.cocycle2_path, "file with the second c_matrix")
          ->required();
    sub->callback([&opt, n]() { opt.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    return run(opt);
  } catch (const qspectra::validation_error& e) {
    std::cout << qspectra::resultdoc::error_document("validation", e.what());
    return 2;
  } catch (const qspectra::internal_error& e) {
    std::cout << qspectra::resultdoc::error_document("internal", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::cout << qspectra::resultdoc::error_document("internal", e.what());
    return 1;
  }
}
