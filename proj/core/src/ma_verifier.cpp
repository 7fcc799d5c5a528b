#include "mapoly/ma_verifier.hpp"

#include <random>

#include "mapoly/error.hpp"

namespace mapoly {

namespace {

template <class C>
void require_constant_term(const SparsePoly<C>& p) {
  if (p.is_zero() || p.terms().front().first.degree() != 0)
    throw Error(ErrorCode::ZeroConstantTerm, "the polynomial needs a nonzero constant term");
}

template <class C>
std::vector<std::vector<SparsePoly<C>>> ma_entries(const SparsePoly<C>& p, std::optional<int> degree) {
  require_constant_term(p);
  const int n = p.nvars();
  SparsePoly<C> base = degree ? p.truncated(*degree + 1) : p;
  std::vector<SparsePoly<C>> first(n);
  for (int a = 0; a < n; ++a) first[a] = partial_derivative(base, a);
  std::vector<std::vector<SparsePoly<C>>> m(n, std::vector<SparsePoly<C>>(n));
  const auto inner = degree ? std::optional<int>(*degree - 1) : std::nullopt;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto second = partial_derivative(first[a], b);
      auto e = mul(base, second, inner) - mul(first[a], first[b], inner);
      e = e.times_var(a);
      if (a == b) e += mul(base, first[a], degree);
      if (degree) e = e.truncated(*degree);
      m[a][b] = std::move(e);
    }
  }
  return m;
}

template <class C>
SparsePoly<C> residual_impl(const SparsePoly<C>& p, std::optional<int> degree) {
  auto m = ma_entries(p, degree);
  const unsigned power = 2 * static_cast<unsigned>(p.nvars()) - 1;
  SparsePoly<C> base = degree ? p.truncated(*degree) : p;
  auto r = determinant(m, degree) - pow(base, power, degree);
  if (degree) r = r.truncated(*degree);
  return r;
}

}  // namespace

MAMatrix ma_matrix(const ParamPoly& p, std::optional<int> degree) { return {p, ma_entries(p, degree)}; }

ParamPoly residual(const ParamPoly& p, std::optional<int> degree) { return residual_impl(p, degree); }

PolyQ residual(const PolyQ& p) { return residual_impl(p, std::nullopt); }

std::string_view to_string(VerifyMode m) { return m == VerifyMode::Symbolic ? "symbolic" : "sampled"; }

RatVector sample_point(int nvars, std::uint64_t seed, int trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<std::uint64_t> dist(1, std::uint64_t{1} << 32);
  RatVector y(nvars);
  for (auto& v : y) {
    Int z;
    const auto x = dist(rng);
    mpz_set_ui(z.get_mpz_t(), static_cast<unsigned long>(x));
    v = Rat(z);
  }
  return y;
}

VerifyReport verify_solution(const PolyQ& p, const VerifyOptions& options) {
  require_constant_term(p);
  if (p.truncation()) throw Error(ErrorCode::TruncatedEvaluation, "cannot verify a truncated polynomial");
  const int n = p.nvars();
  VerifyReport report;
  report.mode = options.mode;
  report.seed = options.seed;
  report.degree_bound = (2 * n - 1) * p.degree();

  if (options.mode == VerifyMode::Symbolic) {
    report.trials = 0;
    report.solution = residual(p).is_zero();
    return report;
  }

  if (options.trials < 1) throw Error(ErrorCode::DimensionMismatch, "sampled verification needs at least one trial");
  std::vector<PolyQ> first(n);
  std::vector<std::vector<PolyQ>> second(n, std::vector<PolyQ>(n));
  for (int a = 0; a < n; ++a) first[a] = partial_derivative(p, a);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) second[a][b] = second[b][a] = partial_derivative(first[a], b);

  report.solution = true;
  for (int t = 0; t < options.trials; ++t) {
    ++report.trials;
    const RatVector y = sample_point(n, options.seed, t);
    const Rat pv = evaluate(p, y);
    RatVector d(n);
    for (int a = 0; a < n; ++a) d[a] = evaluate(first[a], y);
    RatMatrix m(n, RatVector(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        m[a][b] = (pv * evaluate(second[a][b], y) - d[a] * d[b]) * y[a];
        if (a == b) m[a][b] += pv * d[a];
      }
    Rat rhs = 1;
    for (int k = 0; k < 2 * n - 1; ++k) rhs *= pv;
    if (determinant(std::move(m)) != rhs) {
      report.solution = false;
      report.counterexample = y;
      break;
    }
  }
  return report;
}

Polytope support_polytope(const PolyQ& p) {
  std::vector<LatticePoint> pts;
  pts.reserve(p.size());
  for (const auto& [m, c] : p.terms()) {
    if (sgn(c) < 0) throw Error(ErrorCode::NegativeCoefficient, "coefficient of " + m.to_string(p.nvars()) + " is negative");
    LatticePoint e(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) e[i] = m.exponent(i) - 1;
    pts.push_back(std::move(e));
  }
  return facets_of(pts);
}

}  // namespace mapoly
