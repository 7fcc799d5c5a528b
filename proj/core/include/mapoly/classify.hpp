#pragma once

#include <map>
#include <string>
#include <vector>

#include "mapoly/ansatz.hpp"
#include "mapoly/catalog.hpp"
#include "mapoly/obstruction.hpp"

namespace mapoly {

struct ClassifyOptions {
  int max_degree = 4;
  bool parallel = true;
};

/// How a verdict was reached.
enum class Decision {
  Engine,      ///< obstruct() on the polytope's template
  ClosedForm,  ///< engine inconclusive, the known simplex solution completed it
  Factors,     ///< product whose factors all have solutions
  Factor,      ///< product rejected through one of its factors
};
std::string_view to_string(Decision d);

struct Analysis {
  Verdict verdict;
  Decision decision = Decision::Engine;
  /// Feasible profiles whose H differs from h_max.
  std::vector<KHProfile> discrepancies;
  /// Names of the template parameters the verdict refers to.
  std::vector<std::string> parameters;
};

/// Gates, kh_feasible, build_template and obstruct for one polytope.
/// Throws NotReflexive when a gate fails.
Analysis analyze(const Polytope& p, const ClassifyOptions& options = {});

struct CandidateResult {
  std::string id;
  std::vector<std::string> factors;  ///< catalog ids; a single id for an undecomposable entry
  int dim = 0;
  Verdict verdict;
  int verdict_dim = 0;               ///< dimension the verdict's monomials live in
  Decision decision = Decision::Engine;
  std::string via;                   ///< the rejecting factor for Decision::Factor
  std::vector<KHProfile> discrepancies;
  std::vector<std::string> parameters;
  bool expected = true;              ///< agrees with the catalog's expected verdict

  bool is_product() const noexcept { return factors.size() > 1; }
};

struct ClassificationReport {
  int dim = 0;
  std::vector<CandidateResult> entries;
  std::vector<std::string> solution_ids;
  std::vector<PolyQ> solutions;
  std::string summary;
  /// Wall-clock seconds per entry id; informational only.
  std::map<std::string, double> timings;
};

/// Candidates are the undecomposable catalog entries of dimension n and all
/// products of lower-dimensional ones with total dimension n. A product has a
/// solution exactly when every factor does. Throws UnsupportedDimension.
ClassificationReport classify(int n, const ClassifyOptions& options = {});

}  // namespace mapoly
