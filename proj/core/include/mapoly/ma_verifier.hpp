#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mapoly/poly.hpp"
#include "mapoly/polytope.hpp"

namespace mapoly {

/// M_ab = (P P_ab - P_a P_b) y_a + P P_a delta_ab. Row a carries the y_a
/// factor, so M is not symmetric in general.
struct MAMatrix {
  ParamPoly source;
  std::vector<std::vector<ParamPoly>> entries;
};

/// With `degree` set, P is first cut at degree + 1 (higher terms cannot
/// reach a degree <= `degree` entry) and every entry is truncated.
/// Throws ZeroConstantTerm.
MAMatrix ma_matrix(const ParamPoly& p, std::optional<int> degree = std::nullopt);

/// det M - P^(2n-1), truncated at `degree` when set.
ParamPoly residual(const ParamPoly& p, std::optional<int> degree = std::nullopt);
PolyQ residual(const PolyQ& p);

enum class VerifyMode { Symbolic, Sampled };
std::string_view to_string(VerifyMode m);

struct VerifyOptions {
  VerifyMode mode = VerifyMode::Symbolic;
  int trials = 20;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  bool solution = false;
  VerifyMode mode = VerifyMode::Symbolic;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Degree bound (2n-1) deg P of the residual; with `trials` agreeing
  /// samples from [1, 2^32]^n the identity fails with probability at most
  /// (bound / 2^32)^trials.
  int degree_bound = 0;
  /// A point where the residual does not vanish.
  std::optional<RatVector> counterexample;
};

/// Throws ZeroConstantTerm, and DimensionMismatch for trials < 1.
VerifyReport verify_solution(const PolyQ& p, const VerifyOptions& options = {});

/// The sample point of one trial, reproducible from (seed, trial).
RatVector sample_point(int nvars, std::uint64_t seed, int trial);

/// conv(exponents) - 1. Throws NegativeCoefficient.
Polytope support_polytope(const PolyQ& p);

}  // namespace mapoly
