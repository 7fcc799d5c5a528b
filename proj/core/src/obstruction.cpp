#include "mapoly/obstruction.hpp"

#include <algorithm>
#include <optional>

#include "mapoly/error.hpp"

namespace mapoly {

std::string_view to_string(ObstructionKind k) {
  switch (k) {
    case ObstructionKind::Constant: return "constant";
    case ObstructionKind::Sign: return "sign";
    case ObstructionKind::NoAdmissibleRoot: return "no-admissible-root";
  }
  return "?";
}

std::string_view verdict_name(const Verdict& v) {
  struct Name {
    std::string_view operator()(const Solution&) const { return "Solution"; }
    std::string_view operator()(const RelationObstruction&) const { return "RelationObstruction"; }
    std::string_view operator()(const CoefficientObstruction&) const { return "CoefficientObstruction"; }
    std::string_view operator()(const Inconclusive&) const { return "Inconclusive"; }
  };
  return std::visit(Name{}, v);
}

VerdictKind verdict_kind(const Verdict& v) { return static_cast<VerdictKind>(v.index()); }

std::string_view to_string(VerdictKind k) {
  switch (k) {
    case VerdictKind::Solution: return "Solution";
    case VerdictKind::RelationObstruction: return "RelationObstruction";
    case VerdictKind::CoefficientObstruction: return "CoefficientObstruction";
    case VerdictKind::Inconclusive: return "Inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Univariate polynomials over Q, coefficients by ascending power.

namespace {

using UPoly = std::vector<Rat>;

void trim(UPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
  trim(d);
  return d;
}

UPoly rem(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1);
  while (a.size() >= b.size() && !a.empty()) {
    const Rat f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  trim(q);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

// Multiplicity of the root 0 and the distinct roots in (0, inf).
std::pair<int, int> root_profile(UPoly p) {
  trim(p);
  int zero = 0;
  while (!p.empty() && sgn(p.front()) == 0) {
    p.erase(p.begin());
    ++zero;
  }
  if (p.size() <= 1) return {zero, 0};
  std::vector<UPoly> seq{p, derivative(p)};
  while (seq.back().size() > 1) {
    auto r = rem(seq[seq.size() - 2], seq.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    seq.push_back(std::move(r));
  }
  std::vector<int> at0, atinf;
  for (const auto& s : seq) {
    at0.push_back(s.empty() ? 0 : sgn(s.front()));
    atinf.push_back(s.empty() ? 0 : sgn(s.back()));
  }
  return {zero, sign_changes(at0) - sign_changes(atinf)};
}

// Positive rational root of p when the candidate set of the rational root
// theorem is small enough to scan.
std::optional<Rat> positive_rational_root(const UPoly& p) {
  UPoly q = p;
  trim(q);
  while (!q.empty() && sgn(q.front()) == 0) q.erase(q.begin());
  if (q.size() < 2) return std::nullopt;
  if (q.size() == 2) {
    Rat r = -q[0] / q[1];
    if (sgn(r) > 0) return r;
    return std::nullopt;
  }
  Int den = 1;
  for (const auto& c : q) den = lcm(den, Int(c.get_den()));
  std::vector<Int> z;
  for (const auto& c : q) z.push_back(Int(c * den));
  Int a0 = abs(z.front()), an = abs(z.back());
  constexpr unsigned long kLimit = 1UL << 40;
  if (a0 > kLimit || an > kLimit) return std::nullopt;
  auto divisors = [](unsigned long v) {
    std::vector<unsigned long> d;
    for (unsigned long i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i != v / i) d.push_back(v / i);
      }
    return d;
  };
  for (auto num : divisors(a0.get_ui()))
    for (auto dd : divisors(an.get_ui())) {
      Rat r = make_rat(Int(num), Int(dd));
      Rat v = 0, pw = 1;
      for (const auto& c : q) {
        v += c * pw;
        pw *= r;
      }
      if (sgn(v) == 0) return r;
    }
  return std::nullopt;
}

UPoly as_univariate(const ParamCoeff& c, int param) {
  UPoly p;
  for (const auto& [m, v] : c.terms()) {
    const int e = m.empty() ? 0 : m[0].second;
    if (!m.empty() && m[0].first != param) throw std::logic_error("equation is not univariate");
    if (p.size() <= static_cast<std::size_t>(e)) p.resize(e + 1);
    p[e] += v;
  }
  trim(p);
  return p;
}

}  // namespace

int count_admissible_roots(const std::vector<Rat>& coeffs, bool strict) {
  auto [zero, positive] = root_profile(coeffs);
  return positive + (zero > 0 && !strict ? 1 : 0);
}

// ---------------------------------------------------------------------------

namespace {

struct Linear {
  Rat constant;
  std::map<int, Rat> coef;
};

Linear as_linear(const ParamCoeff& c) {
  Linear l;
  for (const auto& [m, v] : c.terms()) {
    if (m.empty()) l.constant = v;
    else l.coef[m[0].first] = v;
  }
  return l;
}

ParamCoeff from_linear(const Linear& l) {
  ParamCoeff c(l.constant);
  for (const auto& [id, v] : l.coef) {
    ParamCoeff t = ParamCoeff::param(id);
    t *= v;
    c += t;
  }
  return c;
}

enum class SignResult { Feasible, Infeasible, ForcesZero };

// Sign analysis of constant + sum coef_i a_i = 0 over a_i >= 0, with a_i > 0
// for the positive-required parameters.
SignResult sign_analysis(const Linear& l, const AnsatzTemplate& t) {
  if (l.coef.empty()) return sgn(l.constant) == 0 ? SignResult::Feasible : SignResult::Infeasible;
  int pos = 0, neg = 0;
  for (const auto& [id, v] : l.coef) (sgn(v) > 0 ? pos : neg)++;
  const int c = sgn(l.constant);
  if ((neg == 0 && c > 0) || (pos == 0 && c < 0)) return SignResult::Infeasible;
  if (c == 0 && (neg == 0 || pos == 0)) {
    for (const auto& [id, v] : l.coef)
      if (t.param_positive(id)) return SignResult::Infeasible;
    return SignResult::ForcesZero;
  }
  return SignResult::Feasible;
}

bool univariate_param(const ParamCoeff& c, int& param) {
  auto ps = c.params();
  if (ps.size() != 1) return false;
  param = ps[0];
  return true;
}

struct Equation {
  Monomial monomial;
  ParamCoeff value;
};

class Engine {
 public:
  Engine(const AnsatzTemplate& t, int max_degree) : t_(t), max_degree_(max_degree), p_(t.polynomial()) {}

  Verdict run() {
    const int np = static_cast<int>(t_.free().size());
    for (auto m : t_.positive_required()) {
      auto it = t_.fixed().find(m);
      if (it != t_.fixed().end() && sgn(it->second) <= 0) {
        Certificate c;
        c.monomial = m;
        c.kind = ObstructionKind::Sign;
        c.equation = ParamCoeff(it->second);
        return CoefficientObstruction{c, {}};
      }
    }
    std::vector<Equation> eqs;
    for (int d = 1; d <= max_degree_; ++d) {
      while (true) {
        eqs = equations(d);
        if (auto v = direct_obstruction(eqs, d)) return *v;
        std::map<int, Rat> found;
        force_zeros(eqs, d, found);
        if (found.empty())
          if (auto v = deduce(eqs, d, found)) return *v;
        if (found.empty()) break;
        for (const auto& [id, value] : found) determined_[id] = value;
      }
      if (static_cast<int>(determined_.size()) == np && !witness_checked_) {
        witness_checked_ = true;
        PolyQ w = t_.instantiate(determined_);
        VerifyOptions opts;
        if (t_.dim() <= 3) {
          opts.mode = VerifyMode::Symbolic;
        } else {
          opts.mode = VerifyMode::Sampled;
          opts.trials = 20;
          opts.seed = 1;
        }
        auto report = verify_solution(w, opts);
        if (report.solution) return Solution{std::move(w), report, deductions_};
      }
    }
    Inconclusive inc;
    inc.degree_reached = max_degree_;
    for (const auto& e : eqs)
      if (!e.value.is_zero()) inc.unresolved.push_back(e.value);
    inc.partial = determined_;
    inc.deductions = deductions_;
    return inc;
  }

 private:
  std::vector<Equation> equations(int d) const {
    const ParamPoly r = residual(substitute(p_, determined_), d);
    std::vector<Equation> out;
    for (const auto& [m, c] : r.terms()) out.push_back({m, c});
    return out;
  }

  Verdict obstruction(Monomial m, int d, ObstructionKind kind, std::vector<std::pair<Monomial, Rat>> combo,
                      ParamCoeff eq) const {
    Certificate c;
    c.monomial = m;
    c.degree = d;
    c.kind = kind;
    c.combination = std::move(combo);
    c.equation = std::move(eq);
    c.fixed_assignment = determined_;
    return CoefficientObstruction{std::move(c), deductions_};
  }

  std::optional<Verdict> direct_obstruction(const std::vector<Equation>& eqs, int d) const {
    for (const auto& e : eqs) {
      if (e.value.is_zero()) continue;
      std::vector<std::pair<Monomial, Rat>> combo{{e.monomial, Rat(1)}};
      if (e.value.is_constant()) return obstruction(e.monomial, d, ObstructionKind::Constant, combo, e.value);
      if (e.value.degree() == 1) {
        if (sign_analysis(as_linear(e.value), t_) == SignResult::Infeasible)
          return obstruction(e.monomial, d, ObstructionKind::Sign, combo, e.value);
        continue;
      }
      int param = 0;
      if (univariate_param(e.value, param) &&
          count_admissible_roots(as_univariate(e.value, param), t_.param_positive(param)) == 0)
        return obstruction(e.monomial, d, ObstructionKind::NoAdmissibleRoot, combo, e.value);
    }
    return std::nullopt;
  }

  void record(std::map<int, Rat>& found, int param, const Rat& v, int d, const char* rule) {
    if (found.count(param)) return;
    found[param] = v;
    deductions_.push_back({param, v, d, rule});
  }

  // A single equation c_1 a_1 + ... + c_k a_k = 0 with same-signed c_i has
  // a_i = 0 as its only admissible solution.
  void force_zeros(const std::vector<Equation>& eqs, int d, std::map<int, Rat>& found) {
    for (const auto& e : eqs) {
      if (e.value.is_zero() || e.value.degree() != 1) continue;
      const Linear l = as_linear(e.value);
      if (sign_analysis(l, t_) != SignResult::ForcesZero) continue;
      for (const auto& [id, v] : l.coef) record(found, id, Rat(0), d, "sign");
    }
  }

  // Exact elimination over the linear equations, then sign and root rules.
  std::optional<Verdict> deduce(const std::vector<Equation>& eqs, int d, std::map<int, Rat>& found) {
    std::vector<std::size_t> linear;
    std::vector<int> cols;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
      if (eqs[i].value.is_zero() || eqs[i].value.degree() != 1) continue;
      linear.push_back(i);
      for (int id : eqs[i].value.params()) cols.push_back(id);
    }
    std::sort(cols.begin(), cols.end());
    cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
    const std::size_t nc = cols.size(), nr = linear.size();

    // Row layout: [coefficients | constant], plus the combination of source equations.
    std::vector<RatVector> rows(nr, RatVector(nc + 1));
    std::vector<RatVector> combo(nr, RatVector(nr));
    for (std::size_t r = 0; r < nr; ++r) {
      const Linear l = as_linear(eqs[linear[r]].value);
      for (const auto& [id, v] : l.coef)
        rows[r][std::lower_bound(cols.begin(), cols.end(), id) - cols.begin()] = v;
      rows[r][nc] = l.constant;
      combo[r][r] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nc && rank < nr; ++c) {
      std::size_t piv = rank;
      while (piv < nr && sgn(rows[piv][c]) == 0) ++piv;
      if (piv == nr) continue;
      std::swap(rows[piv], rows[rank]);
      std::swap(combo[piv], combo[rank]);
      const Rat inv = 1 / rows[rank][c];
      for (auto& x : rows[rank]) x *= inv;
      for (auto& x : combo[rank]) x *= inv;
      for (std::size_t r = 0; r < nr; ++r) {
        if (r == rank || sgn(rows[r][c]) == 0) continue;
        const Rat f = rows[r][c];
        for (std::size_t k = c; k <= nc; ++k) rows[r][k] -= f * rows[rank][k];
        for (std::size_t k = 0; k < nr; ++k) combo[r][k] -= f * combo[rank][k];
      }
      ++rank;
    }

    auto combination = [&](std::size_t r) {
      std::vector<std::pair<Monomial, Rat>> out;
      for (std::size_t k = 0; k < nr; ++k)
        if (sgn(combo[r][k]) != 0) out.emplace_back(eqs[linear[k]].monomial, combo[r][k]);
      return out;
    };
    auto row_linear = [&](std::size_t r) {
      Linear l;
      l.constant = rows[r][nc];
      for (std::size_t c = 0; c < nc; ++c)
        if (sgn(rows[r][c]) != 0) l.coef[cols[c]] = rows[r][c];
      return l;
    };

    for (std::size_t r = 0; r < nr; ++r) {
      const Linear l = row_linear(r);
      if (l.coef.empty() && sgn(l.constant) == 0) continue;
      auto combo_r = combination(r);
      const Monomial lead = combo_r.front().first;
      if (l.coef.empty())
        return obstruction(lead, d, ObstructionKind::Constant, combo_r, ParamCoeff(l.constant));
      const auto s = sign_analysis(l, t_);
      if (s == SignResult::Infeasible) return obstruction(lead, d, ObstructionKind::Sign, combo_r, from_linear(l));
      if (s == SignResult::ForcesZero) {
        for (const auto& [id, v] : l.coef) record(found, id, Rat(0), d, "sign");
        continue;
      }
      if (l.coef.size() == 1) {
        const auto& [id, v] = *l.coef.begin();
        record(found, id, -l.constant / v, d, "linear");
      }
    }

    // Univariate nonlinear equations with a single admissible rational root.
    for (const auto& e : eqs) {
      if (e.value.is_zero() || e.value.degree() < 2) continue;
      int param = 0;
      if (!univariate_param(e.value, param) || found.count(param)) continue;
      const UPoly p = as_univariate(e.value, param);
      const bool strict = t_.param_positive(param);
      auto [zero, positive] = root_profile(p);
      const int total = positive + (zero > 0 && !strict ? 1 : 0);
      if (total != 1) continue;
      if (positive == 0) {
        record(found, param, Rat(0), d, "root");
        continue;
      }
      UPoly squarefree = quotient(p, gcd(p, derivative(p)));
      if (auto root = positive_rational_root(squarefree)) record(found, param, *root, d, "root");
    }
    return std::nullopt;
  }

  const AnsatzTemplate& t_;
  int max_degree_;
  ParamPoly p_;
  std::map<int, Rat> determined_;
  std::vector<Deduction> deductions_;
  bool witness_checked_ = false;
};

}  // namespace

Verdict obstruct(const AnsatzTemplate& t, int max_degree) {
  if (max_degree < 1) throw Error(ErrorCode::TemplateInconsistent, "maximum degree must be at least 1");
  return Engine(t, max_degree).run();
}

bool check_certificate(const AnsatzTemplate& t, const Certificate& c) {
  for (const auto& [id, v] : c.fixed_assignment) {
    if (id < 0 || id >= static_cast<int>(t.free().size())) return false;
    if (sgn(v) < 0 || (sgn(v) == 0 && t.param_positive(id))) return false;
  }
  if (c.combination.empty()) {
    // A vertex coefficient fixed to a non-positive value by the template.
    auto it = t.fixed().find(c.monomial);
    return c.kind == ObstructionKind::Sign && it != t.fixed().end() && sgn(it->second) <= 0 &&
           std::binary_search(t.positive_required().begin(), t.positive_required().end(), c.monomial);
  }
  const ParamPoly r = residual(substitute(t.polynomial(), c.fixed_assignment), c.degree);
  ParamCoeff eq;
  for (const auto& [m, mult] : c.combination) {
    ParamCoeff v = r.coefficient(m);
    v *= mult;
    eq += v;
  }
  if (!(eq == c.equation)) return false;
  switch (c.kind) {
    case ObstructionKind::Constant: return eq.is_constant() && !eq.is_zero();
    case ObstructionKind::Sign: return eq.degree() <= 1 && sign_analysis(as_linear(eq), t) == SignResult::Infeasible;
    case ObstructionKind::NoAdmissibleRoot: {
      int param = 0;
      if (!univariate_param(eq, param)) return false;
      return count_admissible_roots(as_univariate(eq, param), t.param_positive(param)) == 0;
    }
  }
  return false;
}

}  // namespace mapoly
