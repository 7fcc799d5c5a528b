#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mapoly/rational.hpp"

namespace mapoly {

/// Exponent vector packed into 64 bits: the top byte holds the total degree
/// and byte 6-i holds the exponent of y_i. Comparing keys as integers is
/// therefore graded lexicographic order with y_0 > y_1 > ...
class Monomial {
 public:
  static constexpr int kMaxVars = 7;
  static constexpr int kMaxDegree = 255;

  constexpr Monomial() = default;

  /// Throws Error(DimensionMismatch) for more than kMaxVars variables or a
  /// total degree above kMaxDegree.
  static Monomial from_exponents(const std::vector<int>& exps);
  static Monomial from_exponents(const IntVector& exps);
  static Monomial var(int i, int power = 1);

  static constexpr Monomial from_key(std::uint64_t key) {
    Monomial m;
    m.key_ = key;
    return m;
  }

  constexpr std::uint64_t key() const noexcept { return key_; }
  constexpr int degree() const noexcept { return static_cast<int>(key_ >> 56); }
  constexpr int exponent(int i) const noexcept { return static_cast<int>((key_ >> shift(i)) & 0xffU); }
  std::vector<int> exponents(int nvars) const;

  bool divides(Monomial other) const noexcept;

  /// Caller guarantees the degree sum stays within kMaxDegree.
  constexpr Monomial operator*(Monomial other) const noexcept { return from_key(key_ + other.key_); }
  /// Requires divides(other).
  constexpr Monomial operator/(Monomial other) const noexcept { return from_key(key_ - other.key_); }

  /// "1", "y1", "y1^2*y3" (variables are printed 1-based).
  std::string to_string(int nvars) const;

  friend constexpr auto operator<=>(Monomial, Monomial) = default;

  static constexpr int shift(int i) noexcept { return 8 * (6 - i); }
  static constexpr std::uint64_t kDegreeUnit = std::uint64_t{1} << 56;

 private:
  std::uint64_t key_ = 0;
};

/// Product of parameters a_id^e, sorted by id with positive exponents.
using ParamMono = std::vector<std::pair<int, int>>;

/// Sparse polynomial over Q in the parameter alphabet a_0, a_1, ...
class ParamCoeff {
 public:
  using Term = std::pair<ParamMono, Rat>;

  ParamCoeff() = default;
  ParamCoeff(const Rat& c);  // NOLINT: implicit lift of constants
  ParamCoeff(long c) : ParamCoeff(Rat(c)) {}  // NOLINT

  static ParamCoeff param(int id);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.empty()); }
  /// The parameter-free part.
  Rat constant() const;
  /// Coefficient of a single parameter in the linear part.
  Rat linear_coefficient(int id) const;
  /// Highest total parameter degree (0 for constants and for zero).
  int degree() const;
  std::vector<int> params() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }

  ParamCoeff substitute(const std::map<int, Rat>& values) const;
  Rat evaluate(const RatVector& params) const;

  ParamCoeff& operator+=(const ParamCoeff& o);
  ParamCoeff& operator-=(const ParamCoeff& o);
  ParamCoeff& operator*=(const Rat& c);
  friend ParamCoeff operator+(ParamCoeff a, const ParamCoeff& b) { return a += b; }
  friend ParamCoeff operator-(ParamCoeff a, const ParamCoeff& b) { return a -= b; }
  friend ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b);
  ParamCoeff operator-() const;

  friend bool operator==(const ParamCoeff& a, const ParamCoeff& b) = default;

  /// Terms joined by " + ", parameters printed through `name`.
  std::string to_string(const std::function<std::string(int)>& name) const;
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline bool is_zero(const Rat& c) { return sgn(c) == 0; }
inline bool is_zero(const ParamCoeff& c) { return c.is_zero(); }

/// Sparse polynomial in y_0..y_{n-1} with coefficients C, terms sorted in
/// ascending graded order, no stored zeros. A truncated polynomial knows
/// its coefficients only up to total degree `truncation()`.
template <class C>
class SparsePoly {
 public:
  using Term = std::pair<Monomial, C>;

  SparsePoly() = default;
  explicit SparsePoly(int nvars, std::optional<int> truncation = std::nullopt);
  /// Sorts, merges equal monomials, drops zeros and terms above the truncation.
  SparsePoly(int nvars, std::vector<Term> terms, std::optional<int> truncation = std::nullopt);

  /// Trusts that `terms` is already sorted, merged and zero-free.
  static SparsePoly from_sorted(int nvars, std::vector<Term> terms, std::optional<int> truncation);
  static SparsePoly constant(int nvars, const C& c);
  static SparsePoly variable(int nvars, int i);

  int nvars() const noexcept { return nvars_; }
  std::optional<int> truncation() const noexcept { return trunc_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return terms_.empty() ? -1 : terms_.back().first.degree(); }

  /// Coefficient of m (zero when absent). Throws TruncatedEvaluation when m
  /// lies above the truncation degree.
  C coefficient(Monomial m) const;

  /// Drops every term above degree d and records the truncation.
  SparsePoly truncated(int d) const;
  /// Terms of total degree exactly d.
  std::vector<Term> homogeneous_part(int d) const;

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  SparsePoly operator-() const;
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return mul(a, b); }

  SparsePoly scaled(const C& c) const;
  /// Multiplies by y_i.
  SparsePoly times_var(int i) const;

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) = default;

 private:
  void check_compatible(const SparsePoly& o) const;
  int nvars_ = 0;
  std::optional<int> trunc_;
  std::vector<Term> terms_;
};

using PolyQ = SparsePoly<Rat>;
using ParamPoly = SparsePoly<ParamCoeff>;

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b);

/// Product truncated at min(limit, truncations of the factors).
template <class C>
SparsePoly<C> mul(const SparsePoly<C>& f, const SparsePoly<C>& g, std::optional<int> limit = std::nullopt);

template <class C>
SparsePoly<C> pow(const SparsePoly<C>& f, unsigned exponent, std::optional<int> limit = std::nullopt);

/// d/dy_i (0-based). The truncation degree drops by one.
template <class C>
SparsePoly<C> partial_derivative(const SparsePoly<C>& f, int i);

/// Determinant of a square matrix by Laplace expansion with minors memoized
/// over column subsets; every product is truncated at `limit`.
template <class C>
SparsePoly<C> determinant(const std::vector<std::vector<SparsePoly<C>>>& m, std::optional<int> limit = std::nullopt);

ParamPoly lift(const PolyQ& f);
/// Substitutes parameter values; parameters not in `values` stay symbolic.
ParamPoly substitute(const ParamPoly& f, const std::map<int, Rat>& values);
/// Converts to PolyQ; nullopt when some coefficient still has parameters.
std::optional<PolyQ> to_polyq(const ParamPoly& f);
std::vector<int> parameters(const ParamPoly& f);

/// Exact value. Throws TruncatedEvaluation for truncated input and
/// VariableCountMismatch for a wrong point length.
Rat evaluate(const PolyQ& f, const RatVector& point);
Rat evaluate(const ParamPoly& f, const RatVector& point, const RatVector& params);

std::string to_string(const PolyQ& f);
std::string to_string(const ParamPoly& f);

extern template class SparsePoly<Rat>;
extern template class SparsePoly<ParamCoeff>;

}  // namespace mapoly
