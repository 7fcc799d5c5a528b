#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "mapoly/ansatz.hpp"
#include "mapoly/classify.hpp"
#include "mapoly/error.hpp"
#include "mapoly/io.hpp"
#include "mapoly/ma_verifier.hpp"

using namespace mapoly;
using json = nlohmann::ordered_json;

namespace {

json strings(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

int run_check(const std::string& path) {
  const Polytope p = load_polytope(path);
  json out;
  out["dim"] = p.dim();
  out["vertices"] = p.vertices().size();
  out["facets"] = p.facets().a().size();
  out["lattice_points"] = p.lattice_points().size();
  const bool reflexive = is_reflexive(p);
  out["reflexive"] = reflexive;
  out["delzant"] = is_delzant(p);
  out["barycenter"] = strings(barycenter(p));
  if (!reflexive) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  out["blocks"] = decompose(p);
  try {
    const KHProfile top{axis_lengths(p), h_max(p)};
    out["k"] = top.k;
    out["h_max"] = top.h;
    out["rel1"] = satisfies_rel1(top);
    out["rel2"] = satisfies_rel2(top);
    json profiles = json::array();
    for (const auto& prof : kh_feasible(p)) profiles.push_back({{"k", prof.k}, {"H", prof.h}});
    out["feasible_profiles"] = profiles;
    auto failed = failed_relation(p);
    out["failed_relation"] = failed ? json(std::string(to_string(*failed))) : json(nullptr);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::MissingBaseVertex) throw;
    out["k"] = nullptr;
    out["note"] = "the point (-1,...,-1) is not a vertex";
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int run_verify(const std::string& path, const std::string& mode, int trials, std::uint64_t seed) {
  VerifyOptions opts;
  opts.mode = mode == "sampled" ? VerifyMode::Sampled : VerifyMode::Symbolic;
  opts.trials = trials;
  opts.seed = seed;
  std::cout << verify_json(verify_solution(load_polynomial(path), opts));
  return 0;
}

int run_obstruct(const std::string& path, int max_degree) {
  ClassifyOptions opts;
  opts.max_degree = max_degree;
  const Polytope p = load_polytope(path);
  const Analysis a = analyze(p, opts);
  std::cout << verdict_json(a.verdict, p.dim(), a.parameters);
  return 0;
}

int run_classify(int dim, const std::string& format, const std::string& out_path, bool timings, int max_degree) {
  ClassifyOptions opts;
  opts.max_degree = max_degree;
  const auto report = classify(dim, opts);
  const std::string text = emit_report(report, format == "text" ? ReportFormat::Text : ReportFormat::Json, timings);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
    f << text;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monge-Ampere polynomial identities on smooth reflexive polytopes"};
  app.require_subcommand(1);

  std::string file;
  auto* check = app.add_subcommand("check", "geometric gates, k/H and the relations for a polytope file");
  check->add_option("file", file, "polytope file")->required();

  std::string mode = "symbolic";
  int trials = 20;
  std::uint64_t seed = 1;
  auto* verify = app.add_subcommand("verify", "test whether a polynomial solves the identity");
  verify->add_option("polyfile", file, "polynomial file")->required();
  verify->add_option("--mode", mode, "symbolic or sampled")->check(CLI::IsMember({"symbolic", "sampled"}));
  verify->add_option("--trials", trials, "sample points")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "sampling seed");

  int max_degree = 4;
  auto* obstruct_cmd = app.add_subcommand("obstruct", "graded coefficient matching on a polytope file");
  obstruct_cmd->add_option("file", file, "polytope file")->required();
  obstruct_cmd->add_option("--max-degree", max_degree, "highest residual degree")->check(CLI::Range(1, 64));

  int dim = 0;
  std::string format = "json", out_path;
  bool timings = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify dimension n against the built-in catalog");
  classify_cmd->add_option("--dim", dim, "dimension 1..6")->required();
  classify_cmd->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  classify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  classify_cmd->add_option("--max-degree", max_degree, "highest residual degree")->check(CLI::Range(1, 64));
  classify_cmd->add_flag("--timings", timings, "append wall-clock timings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*check) return run_check(file);
    if (*verify) return run_verify(file, mode, trials, seed);
    if (*obstruct_cmd) return run_obstruct(file, max_degree);
    if (*classify_cmd) return run_classify(dim, format, out_path, timings, max_degree);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
