#include "mapoly/poly.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "mapoly/error.hpp"

namespace mapoly {

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::from_exponents(const std::vector<int>& exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    throw Error(ErrorCode::DimensionMismatch, "at most 7 variables are supported");
  std::uint64_t key = 0;
  int deg = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0) throw Error(ErrorCode::DimensionMismatch, "negative exponent");
    deg += exps[i];
    if (deg > kMaxDegree) throw Error(ErrorCode::DimensionMismatch, "total degree above 255");
    key |= static_cast<std::uint64_t>(exps[i]) << shift(static_cast<int>(i));
  }
  key |= static_cast<std::uint64_t>(deg) << 56;
  return from_key(key);
}

Monomial Monomial::from_exponents(const IntVector& exps) {
  std::vector<int> e(exps.size());
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] > kMaxDegree || exps[i] < 0) throw Error(ErrorCode::DimensionMismatch, "exponent out of range");
    e[i] = static_cast<int>(exps[i]);
  }
  return from_exponents(e);
}

Monomial Monomial::var(int i, int power) {
  if (i < 0 || i >= kMaxVars) throw Error(ErrorCode::DimensionMismatch, "variable index out of range");
  if (power < 0 || power > kMaxDegree) throw Error(ErrorCode::DimensionMismatch, "exponent out of range");
  return from_key((static_cast<std::uint64_t>(power) << 56) | (static_cast<std::uint64_t>(power) << shift(i)));
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> e(nvars);
  for (int i = 0; i < nvars; ++i) e[i] = exponent(i);
  return e;
}

bool Monomial::divides(Monomial other) const noexcept {
  for (int i = 0; i < kMaxVars; ++i)
    if (exponent(i) > other.exponent(i)) return false;
  return true;
}

std::string Monomial::to_string(int nvars) const {
  std::string out;
  for (int i = 0; i < nvars; ++i) {
    int e = exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += 'y' + std::to_string(i + 1);
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// ParamCoeff

namespace {

ParamMono mono_mul(const ParamMono& a, const ParamMono& b) {
  ParamMono out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      out.emplace_back(a[i].first, a[i].second + b[j].second);
      ++i;
      ++j;
    }
  }
  return out;
}

int mono_degree(const ParamMono& m) {
  int d = 0;
  for (const auto& [id, e] : m) d += e;
  return d;
}

Rat rat_pow(const Rat& base, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

ParamCoeff::ParamCoeff(const Rat& c) {
  if (sgn(c) != 0) terms_.emplace_back(ParamMono{}, c);
}

ParamCoeff ParamCoeff::param(int id) {
  ParamCoeff p;
  p.terms_.emplace_back(ParamMono{{id, 1}}, Rat(1));
  return p;
}

Rat ParamCoeff::constant() const {
  if (!terms_.empty() && terms_[0].first.empty()) return terms_[0].second;
  return 0;
}

Rat ParamCoeff::linear_coefficient(int id) const {
  for (const auto& [m, c] : terms_)
    if (m.size() == 1 && m[0].first == id && m[0].second == 1) return c;
  return 0;
}

int ParamCoeff::degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

std::vector<int> ParamCoeff::params() const {
  std::vector<int> out;
  for (const auto& [m, c] : terms_)
    for (const auto& [id, e] : m) out.push_back(id);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void ParamCoeff::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && sgn(out.back().second) == 0) out.pop_back();
  terms_ = std::move(out);
}

ParamCoeff ParamCoeff::substitute(const std::map<int, Rat>& values) const {
  ParamCoeff out;
  for (const auto& [m, c] : terms_) {
    Rat coef = c;
    ParamMono rest;
    for (const auto& [id, e] : m) {
      auto it = values.find(id);
      if (it == values.end()) rest.emplace_back(id, e);
      else coef *= rat_pow(it->second, e);
    }
    if (sgn(coef) != 0) out.terms_.emplace_back(std::move(rest), std::move(coef));
  }
  out.normalize();
  return out;
}

Rat ParamCoeff::evaluate(const RatVector& params) const {
  Rat s = 0;
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (const auto& [id, e] : m) {
      if (id < 0 || static_cast<std::size_t>(id) >= params.size())
        throw Error(ErrorCode::VariableCountMismatch, "parameter index outside the supplied values");
      t *= rat_pow(params[id], e);
    }
    s += t;
  }
  return s;
}

ParamCoeff& ParamCoeff::operator+=(const ParamCoeff& o) {
  if (o.terms_.empty()) return *this;
  if (is_constant() && o.is_constant()) {
    Rat c = constant() + o.constant();
    terms_.clear();
    if (sgn(c) != 0) terms_.emplace_back(ParamMono{}, std::move(c));
    return *this;
  }
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Rat c = terms_[i].second + o.terms_[j].second;
      if (sgn(c) != 0) out.emplace_back(std::move(terms_[i].first), std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamCoeff& ParamCoeff::operator-=(const ParamCoeff& o) { return *this += -o; }

ParamCoeff& ParamCoeff::operator*=(const Rat& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

ParamCoeff ParamCoeff::operator-() const {
  ParamCoeff out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

ParamCoeff operator*(const ParamCoeff& a, const ParamCoeff& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.is_constant()) {
    ParamCoeff out = b;
    return out *= a.terms_[0].second;
  }
  if (b.is_constant()) {
    ParamCoeff out = a;
    return out *= b.terms_[0].second;
  }
  ParamCoeff out;
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.terms_.emplace_back(mono_mul(ma, mb), ca * cb);
  out.normalize();
  return out;
}

std::string ParamCoeff::to_string(const std::function<std::string(int)>& name) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t t = 0; t < terms_.size(); ++t) {
    const auto& [m, c] = terms_[t];
    if (t > 0) out += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) out += '-';
    const Rat mag = abs(c);
    std::string mono;
    for (const auto& [id, e] : m) {
      if (!mono.empty()) mono += '*';
      mono += name(id);
      if (e > 1) mono += '^' + std::to_string(e);
    }
    if (mono.empty()) out += mapoly::to_string(mag);
    else if (mag == 1) out += mono;
    else out += mapoly::to_string(mag) + '*' + mono;
  }
  return out;
}

std::string ParamCoeff::to_string() const {
  return to_string([](int id) { return "a" + std::to_string(id); });
}

// ---------------------------------------------------------------------------
// SparsePoly

namespace {

inline void mul_add(Rat& acc, const Rat& a, const Rat& b, Rat& scratch) {
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  acc += scratch;
}

inline void mul_add(ParamCoeff& acc, const ParamCoeff& a, const ParamCoeff& b, Rat& scratch) {
  if (a.is_constant() && b.is_constant()) {
    mpq_mul(scratch.get_mpq_t(), a.constant().get_mpq_t(), b.constant().get_mpq_t());
    acc += ParamCoeff(scratch);
  } else {
    acc += a * b;
  }
}

inline Rat times_int(const Rat& c, int k) { return c * k; }
inline ParamCoeff times_int(const ParamCoeff& c, int k) {
  ParamCoeff out = c;
  return out *= Rat(k);
}

}  // namespace

std::optional<int> min_truncation(std::optional<int> a, std::optional<int> b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

template <class C>
SparsePoly<C>::SparsePoly(int nvars, std::optional<int> truncation) : nvars_(nvars), trunc_(truncation) {
  if (nvars < 0 || nvars > Monomial::kMaxVars)
    throw Error(ErrorCode::VariableCountMismatch, "variable count must lie in 0..7");
}

template <class C>
SparsePoly<C>::SparsePoly(int nvars, std::vector<Term> terms, std::optional<int> truncation)
    : SparsePoly(nvars, truncation) {
  for (const auto& [m, c] : terms)
    for (int i = nvars; i < Monomial::kMaxVars; ++i)
      if (m.exponent(i) != 0) throw Error(ErrorCode::VariableCountMismatch, "monomial uses an undeclared variable");
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.first < b.first; });
  for (auto& t : terms) {
    if (trunc_ && t.first.degree() > *trunc_) continue;
    if (!terms_.empty() && terms_.back().first == t.first) {
      terms_.back().second += t.second;
    } else {
      if (!terms_.empty() && mapoly::is_zero(terms_.back().second)) terms_.pop_back();
      terms_.push_back(std::move(t));
    }
  }
  if (!terms_.empty() && mapoly::is_zero(terms_.back().second)) terms_.pop_back();
}

template <class C>
SparsePoly<C> SparsePoly<C>::from_sorted(int nvars, std::vector<Term> terms, std::optional<int> truncation) {
  SparsePoly p(nvars, truncation);
  p.terms_ = std::move(terms);
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::constant(int nvars, const C& c) {
  SparsePoly p(nvars);
  if (!mapoly::is_zero(c)) p.terms_.emplace_back(Monomial{}, c);
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
  SparsePoly p(nvars);
  p.terms_.emplace_back(Monomial::var(i), C(Rat(1)));
  return p;
}

template <class C>
C SparsePoly<C>::coefficient(Monomial m) const {
  if (trunc_ && m.degree() > *trunc_)
    throw Error(ErrorCode::TruncatedEvaluation, "coefficient requested above the truncation degree");
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, Monomial x) { return t.first < x; });
  if (it != terms_.end() && it->first == m) return it->second;
  return C{};
}

template <class C>
SparsePoly<C> SparsePoly<C>::truncated(int d) const {
  auto limit = min_truncation(trunc_, d);
  SparsePoly p(nvars_, limit);
  for (const auto& t : terms_) {
    if (t.first.degree() > *limit) break;
    p.terms_.push_back(t);
  }
  return p;
}

template <class C>
std::vector<typename SparsePoly<C>::Term> SparsePoly<C>::homogeneous_part(int d) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.first.degree() == d) out.push_back(t);
  return out;
}

template <class C>
void SparsePoly<C>::check_compatible(const SparsePoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::VariableCountMismatch, "polynomials over different variable counts");
}

template <class C>
SparsePoly<C>& SparsePoly<C>::operator+=(const SparsePoly& o) {
  check_compatible(o);
  trunc_ = min_truncation(trunc_, o.trunc_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      terms_[i].second += o.terms_[j].second;
      if (!mapoly::is_zero(terms_[i].second)) out.push_back(std::move(terms_[i]));
      ++i;
      ++j;
    }
  }
  if (trunc_)
    while (!out.empty() && out.back().first.degree() > *trunc_) out.pop_back();
  terms_ = std::move(out);
  return *this;
}

template <class C>
SparsePoly<C>& SparsePoly<C>::operator-=(const SparsePoly& o) {
  return *this += -o;
}

template <class C>
SparsePoly<C> SparsePoly<C>::operator-() const {
  SparsePoly p = *this;
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::scaled(const C& c) const {
  SparsePoly p(nvars_, trunc_);
  if (mapoly::is_zero(c)) return p;
  Rat scratch;
  for (const auto& [m, x] : terms_) {
    C v{};
    mul_add(v, x, c, scratch);
    if (!mapoly::is_zero(v)) p.terms_.emplace_back(m, std::move(v));
  }
  return p;
}

template <class C>
SparsePoly<C> SparsePoly<C>::times_var(int i) const {
  if (i < 0 || i >= nvars_) throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
  SparsePoly p(nvars_, trunc_ ? std::optional<int>(*trunc_ + 1) : std::nullopt);
  const Monomial y = Monomial::var(i);
  p.terms_.reserve(terms_.size());
  for (const auto& [m, c] : terms_) {
    if (m.degree() >= Monomial::kMaxDegree) throw Error(ErrorCode::DimensionMismatch, "total degree above 255");
    p.terms_.emplace_back(m * y, c);
  }
  return p;
}

template <class C>
SparsePoly<C> mul(const SparsePoly<C>& f, const SparsePoly<C>& g, std::optional<int> limit) {
  if (f.nvars() != g.nvars()) throw Error(ErrorCode::VariableCountMismatch, "polynomials over different variable counts");
  const auto lim = min_truncation(limit, min_truncation(f.truncation(), g.truncation()));
  if (f.is_zero() || g.is_zero()) return SparsePoly<C>(f.nvars(), lim);
  const int cap = lim ? *lim : f.degree() + g.degree();
  if (!lim && cap > Monomial::kMaxDegree) throw Error(ErrorCode::DimensionMismatch, "total degree above 255");

  // Single-term factors keep the order, so no accumulation is needed.
  if (g.size() == 1 || f.size() == 1) {
    const auto& one = g.size() == 1 ? g.terms().front() : f.terms().front();
    const auto& many = g.size() == 1 ? f : g;
    std::vector<typename SparsePoly<C>::Term> out;
    out.reserve(many.size());
    Rat scratch;
    for (const auto& [m, c] : many.terms()) {
      if (m.degree() + one.first.degree() > cap) break;
      C v{};
      mul_add(v, c, one.second, scratch);
      if (!is_zero(v)) out.emplace_back(m * one.first, std::move(v));
    }
    return SparsePoly<C>::from_sorted(f.nvars(), std::move(out), lim);
  }

  std::unordered_map<std::uint64_t, C> acc;
  acc.reserve(std::min<std::size_t>(f.size() * g.size(), 1U << 20));
  Rat scratch;
  for (const auto& [mf, cf] : f.terms()) {
    const int df = mf.degree();
    if (df > cap) break;
    for (const auto& [mg, cg] : g.terms()) {
      if (df + mg.degree() > cap) break;
      mul_add(acc[mf.key() + mg.key()], cf, cg, scratch);
    }
  }
  std::vector<typename SparsePoly<C>::Term> out;
  out.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (!is_zero(c)) out.emplace_back(Monomial::from_key(k), std::move(c));
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return SparsePoly<C>::from_sorted(f.nvars(), std::move(out), lim);
}

template <class C>
SparsePoly<C> pow(const SparsePoly<C>& f, unsigned exponent, std::optional<int> limit) {
  const auto lim = min_truncation(limit, f.truncation());
  SparsePoly<C> result = SparsePoly<C>::constant(f.nvars(), C(Rat(1)));
  if (lim) result = result.truncated(*lim);
  SparsePoly<C> base = lim ? f.truncated(*lim) : f;
  bool first = true;
  while (exponent > 0) {
    if (exponent & 1U) {
      result = first ? base : mul(result, base, lim);
      first = false;
    }
    exponent >>= 1;
    if (exponent > 0) base = mul(base, base, lim);
  }
  return result;
}

template <class C>
SparsePoly<C> partial_derivative(const SparsePoly<C>& f, int i) {
  if (i < 0 || i >= f.nvars()) throw Error(ErrorCode::VariableCountMismatch, "variable index out of range");
  auto trunc = f.truncation();
  if (trunc) trunc = *trunc - 1;
  const Monomial y = Monomial::var(i);
  std::vector<typename SparsePoly<C>::Term> out;
  for (const auto& [m, c] : f.terms()) {
    const int e = m.exponent(i);
    if (e == 0) continue;
    out.emplace_back(m / y, times_int(c, e));
  }
  // Dividing every term by the same monomial preserves the order.
  return SparsePoly<C>::from_sorted(f.nvars(), std::move(out), trunc);
}

template <class C>
SparsePoly<C> determinant(const std::vector<std::vector<SparsePoly<C>>>& m, std::optional<int> limit) {
  const std::size_t n = m.size();
  if (n == 0) throw Error(ErrorCode::DimensionMismatch, "empty matrix");
  if (n > 20) throw Error(ErrorCode::DimensionMismatch, "matrix too large for subset expansion");
  for (const auto& row : m)
    if (row.size() != n) throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
  const int nvars = m[0][0].nvars();

  // minors[S] = det of the rows n-|S|..n-1 restricted to the columns in S.
  std::vector<SparsePoly<C>> minors(std::size_t{1} << n);
  minors[0] = SparsePoly<C>::constant(nvars, C(Rat(1)));
  std::vector<std::uint32_t> order(minors.size());
  for (std::uint32_t s = 0; s < order.size(); ++s) order[s] = s;
  std::stable_sort(order.begin(), order.end(),
                   [](std::uint32_t a, std::uint32_t b) { return std::popcount(a) < std::popcount(b); });
  for (auto s : order) {
    if (s == 0) continue;
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(s));
    SparsePoly<C> acc(nvars, limit);
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s >> c & 1U)) continue;
      const auto& entry = m[row][c];
      const auto& minor = minors[s & ~(std::uint32_t{1} << c)];
      auto term = mul(entry, minor, limit);
      if (sign > 0) acc += term;
      else acc -= term;
      sign = -sign;
    }
    minors[s] = std::move(acc);
  }
  return std::move(minors.back());
}

template class SparsePoly<Rat>;
template class SparsePoly<ParamCoeff>;
template PolyQ mul(const PolyQ&, const PolyQ&, std::optional<int>);
template ParamPoly mul(const ParamPoly&, const ParamPoly&, std::optional<int>);
template PolyQ pow(const PolyQ&, unsigned, std::optional<int>);
template ParamPoly pow(const ParamPoly&, unsigned, std::optional<int>);
template PolyQ partial_derivative(const PolyQ&, int);
template ParamPoly partial_derivative(const ParamPoly&, int);
template PolyQ determinant(const std::vector<std::vector<PolyQ>>&, std::optional<int>);
template ParamPoly determinant(const std::vector<std::vector<ParamPoly>>&, std::optional<int>);

// ---------------------------------------------------------------------------

ParamPoly lift(const PolyQ& f) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) terms.emplace_back(m, ParamCoeff(c));
  return ParamPoly::from_sorted(f.nvars(), std::move(terms), f.truncation());
}

ParamPoly substitute(const ParamPoly& f, const std::map<int, Rat>& values) {
  std::vector<ParamPoly::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    auto v = c.is_constant() ? c : c.substitute(values);
    if (!v.is_zero()) terms.emplace_back(m, std::move(v));
  }
  return ParamPoly::from_sorted(f.nvars(), std::move(terms), f.truncation());
}

std::optional<PolyQ> to_polyq(const ParamPoly& f) {
  std::vector<PolyQ::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    if (!c.is_constant()) return std::nullopt;
    terms.emplace_back(m, c.constant());
  }
  return PolyQ::from_sorted(f.nvars(), std::move(terms), f.truncation());
}

std::vector<int> parameters(const ParamPoly& f) {
  std::vector<int> out;
  for (const auto& [m, c] : f.terms()) {
    auto p = c.params();
    out.insert(out.end(), p.begin(), p.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

template <class C, class CoeffValue>
Rat evaluate_impl(const SparsePoly<C>& f, const RatVector& point, CoeffValue&& value) {
  if (f.truncation()) throw Error(ErrorCode::TruncatedEvaluation, "cannot evaluate a truncated polynomial");
  if (point.size() != static_cast<std::size_t>(f.nvars()))
    throw Error(ErrorCode::VariableCountMismatch, "point length differs from the variable count");
  const int n = f.nvars();
  std::vector<std::vector<Rat>> powers(n);
  for (int i = 0; i < n; ++i) {
    int maxe = 0;
    for (const auto& [m, c] : f.terms()) maxe = std::max(maxe, m.exponent(i));
    powers[i].resize(maxe + 1);
    powers[i][0] = 1;
    for (int e = 1; e <= maxe; ++e) powers[i][e] = powers[i][e - 1] * point[i];
  }
  Rat sum = 0, t;
  for (const auto& [m, c] : f.terms()) {
    t = value(c);
    for (int i = 0; i < n; ++i) {
      int e = m.exponent(i);
      if (e) t *= powers[i][e];
    }
    sum += t;
  }
  return sum;
}

}  // namespace

Rat evaluate(const PolyQ& f, const RatVector& point) {
  return evaluate_impl(f, point, [](const Rat& c) { return c; });
}

Rat evaluate(const ParamPoly& f, const RatVector& point, const RatVector& params) {
  return evaluate_impl(f, point, [&](const ParamCoeff& c) { return c.evaluate(params); });
}

namespace {
template <class C, class Fmt>
std::string poly_string(const SparsePoly<C>& f, Fmt&& fmt) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    std::string coeff = fmt(c);
    const bool negative = coeff[0] == '-';
    if (negative) coeff.erase(0, 1);
    if (!out.empty()) out += negative ? " - " : " + ";
    else if (negative) out += '-';
    if (m.degree() == 0) out += coeff;
    else if (coeff == "1") out += m.to_string(f.nvars());
    else out += coeff + '*' + m.to_string(f.nvars());
  }
  if (f.truncation()) out += " + O(deg " + std::to_string(*f.truncation() + 1) + ")";
  return out;
}
}  // namespace

std::string to_string(const PolyQ& f) {
  return poly_string(f, [](const Rat& c) { return to_string(c); });
}

std::string to_string(const ParamPoly& f) {
  return poly_string(f, [](const ParamCoeff& c) {
    return c.terms().size() > 1 ? "(" + c.to_string() + ")" : c.to_string();
  });
}

}  // namespace mapoly
