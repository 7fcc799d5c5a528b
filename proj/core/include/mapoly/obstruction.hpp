#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "mapoly/ansatz.hpp"
#include "mapoly/ma_verifier.hpp"
#include "mapoly/poly.hpp"

namespace mapoly {

enum class ObstructionKind {
  Constant,          ///< the combined coefficient is a nonzero rational
  Sign,              ///< linear equation with no solution in a >= 0 (a > 0 where required)
  NoAdmissibleRoot,  ///< univariate equation without a root on the admissible ray
};
std::string_view to_string(ObstructionKind k);

/// A parameter value forced by the coefficient equations.
struct Deduction {
  int param = 0;
  Rat value;
  int degree = 0;     ///< truncation degree at which it was derived
  std::string rule;   ///< "linear", "sign", or "root"
};

/// sum multiplier_i * coeff(residual, monomial_i) == equation, where the
/// residual is taken at `degree` with `fixed_assignment` substituted.
struct Certificate {
  Monomial monomial;  ///< the leading monomial of the combination
  int degree = 0;
  ObstructionKind kind = ObstructionKind::Constant;
  std::vector<std::pair<Monomial, Rat>> combination;
  ParamCoeff equation;
  std::map<int, Rat> fixed_assignment;
};

struct Solution {
  PolyQ witness;
  VerifyReport report;
  std::vector<Deduction> deductions;
};

struct RelationObstruction {
  Relation failed = Relation::Rel1;
  IntVector k;
  IntMatrix h_max;
};

struct CoefficientObstruction {
  Certificate certificate;
  std::vector<Deduction> deductions;
};

struct Inconclusive {
  int degree_reached = 0;
  std::vector<ParamCoeff> unresolved;
  std::map<int, Rat> partial;
  std::vector<Deduction> deductions;
};

using Verdict = std::variant<Solution, RelationObstruction, CoefficientObstruction, Inconclusive>;

std::string_view verdict_name(const Verdict& v);

enum class VerdictKind { Solution, RelationObstruction, CoefficientObstruction, Inconclusive };
VerdictKind verdict_kind(const Verdict& v);
std::string_view to_string(VerdictKind k);

/// Graded coefficient matching on the residual for D = 1..max_degree.
/// Linear equations are eliminated exactly; univariate equations are solved
/// on the admissible ray; anything else stays unresolved.
Verdict obstruct(const AnsatzTemplate& t, int max_degree = 4);

/// Recomputes the certificate from the template alone.
bool check_certificate(const AnsatzTemplate& t, const Certificate& c);

/// Distinct real roots of a univariate polynomial (coefficients by
/// ascending power) in [0, inf), or (0, inf) when `strict`.
int count_admissible_roots(const std::vector<Rat>& coeffs, bool strict);

}  // namespace mapoly
