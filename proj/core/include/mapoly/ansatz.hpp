#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mapoly/poly.hpp"
#include "mapoly/polytope.hpp"

namespace mapoly {

/// Edge lengths k at the base vertex -1 and the line lengths H.
struct KHProfile {
  IntVector k;
  IntMatrix h;

  friend bool operator==(const KHProfile&, const KHProfile&) = default;
};

enum class Relation { Rel1, Rel2 };
std::string_view to_string(Relation r);

/// sum_{a != i} H_ia = k_i (n - 2) + 2 for every i.
bool satisfies_rel1(const KHProfile& p);
/// H_ij k_j = H_ji k_i for every pair.
bool satisfies_rel2(const KHProfile& p);

/// k_i = max{t : -1 + t e_i in P}. Throws MissingBaseVertex.
IntVector axis_lengths(const Polytope& p);

/// Entry (i,j) = max{t : -1 + e_j + t e_i in P}, zero diagonal.
IntMatrix h_max(const Polytope& p);

/// Every H with 0 <= H <= h_max satisfying both relations, in
/// lexicographic order of H.
std::vector<KHProfile> kh_feasible(const Polytope& p);

/// Which relation rules the polytope out: Rel1 when no H in the box meets
/// rel1 on its own, Rel2 otherwise. nullopt when kh_feasible is nonempty.
std::optional<Relation> failed_relation(const Polytope& p);

class AnsatzTemplate {
 public:
  AnsatzTemplate(Polytope polytope, KHProfile profile, std::vector<Monomial> index_set, std::map<Monomial, Rat> fixed,
                 std::vector<Monomial> free, std::vector<Monomial> positive_required);

  const Polytope& polytope() const noexcept { return polytope_; }
  const KHProfile& profile() const noexcept { return profile_; }
  int dim() const noexcept { return polytope_.dim(); }
  /// Exponent vectors lattice_points + 1, in graded order.
  const std::vector<Monomial>& index_set() const noexcept { return index_set_; }
  const std::map<Monomial, Rat>& fixed() const noexcept { return fixed_; }
  /// Parameter i stands for the coefficient of free()[i].
  const std::vector<Monomial>& free() const noexcept { return free_; }
  const std::vector<Monomial>& positive_required() const noexcept { return positive_required_; }
  int degree_bound() const noexcept { return degree_bound_; }

  std::optional<int> param_of(Monomial m) const;
  bool param_positive(int param) const { return param_positive_.at(param); }
  /// "a(2,2)" style name of a parameter.
  std::string param_name(int param) const;

  /// sum of fixed a_I y^I plus parameter a_i y^{free[i]}.
  ParamPoly polynomial() const;

  /// The polynomial with every parameter replaced by the given values.
  PolyQ instantiate(const std::map<int, Rat>& values) const;

 private:
  Polytope polytope_;
  KHProfile profile_;
  std::vector<Monomial> index_set_;
  std::map<Monomial, Rat> fixed_;
  std::vector<Monomial> free_;
  std::vector<Monomial> positive_required_;
  std::vector<bool> param_positive_;
  int degree_bound_ = 0;
};

/// Fixes a_{m e_i} = C(k_i, m)/k_i^m and a_{m e_i + e_j} = C(h_ij, m)/k_i^m.
/// Throws InconsistentConstraints when an index receives two values.
AnsatzTemplate build_template(const Polytope& p, const KHProfile& profile);

/// (1 + sum y_i/(n+1))^(n+1).
PolyQ simplex_solution(int n);

/// f(y_1..y_k) g(y_{k+1}..y_{k+h}).
PolyQ product_solution(const PolyQ& f, const PolyQ& g);

}  // namespace mapoly
