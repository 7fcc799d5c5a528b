#include "mapoly/classify.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <stdexcept>

#include "mapoly/error.hpp"
#include "mapoly/ma_verifier.hpp"

namespace mapoly {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Engine: return "engine";
    case Decision::ClosedForm: return "closed-form";
    case Decision::Factors: return "factors";
    case Decision::Factor: return "factor";
  }
  return "?";
}

namespace {

VerifyOptions strongest_mode(int n) {
  VerifyOptions o;
  if (n > 3) o.mode = VerifyMode::Sampled;
  return o;
}

bool is_standard_simplex(const Polytope& p) {
  const int n = p.dim();
  if (static_cast<int>(p.vertices().size()) != n + 1) return false;
  for (const auto& v : p.vertices()) {
    int big = 0;
    for (const auto& x : v) {
      if (x == n) ++big;
      else if (x != -1) return false;
    }
    if (big > 1) return false;
  }
  return true;
}

// Does w fit the template: fixed values agree, free coefficients agree with
// what the engine already determined, and no term lies outside the index set.
bool completes(const AnsatzTemplate& t, const PolyQ& w, const std::map<int, Rat>& partial) {
  for (const auto& [m, c] : w.terms()) {
    auto f = t.fixed().find(m);
    if (f != t.fixed().end()) {
      if (f->second != c) return false;
      continue;
    }
    auto id = t.param_of(m);
    if (!id) return false;
    auto it = partial.find(*id);
    if (it != partial.end() && it->second != c) return false;
  }
  for (const auto& [m, c] : t.fixed())
    if (sgn(c) != 0 && sgn(w.coefficient(m)) == 0) return false;
  for (std::size_t i = 0; i < t.free().size(); ++i) {
    const Rat c = w.coefficient(t.free()[i]);
    if (sgn(c) < 0 || (sgn(c) == 0 && t.param_positive(static_cast<int>(i)))) return false;
    auto it = partial.find(static_cast<int>(i));
    if (it != partial.end() && it->second != c) return false;
  }
  return true;
}

int rank_of(const Verdict& v) {
  switch (verdict_kind(v)) {
    case VerdictKind::Solution: return 0;
    case VerdictKind::CoefficientObstruction: return 1;
    case VerdictKind::Inconclusive: return 2;
    case VerdictKind::RelationObstruction: return 3;
  }
  return 4;
}

}  // namespace

Analysis analyze(const Polytope& p, const ClassifyOptions& options) {
  if (!is_reflexive(p)) throw Error(ErrorCode::NotReflexive, "polytope is not reflexive");
  if (!is_delzant(p)) throw Error(ErrorCode::NotReflexive, "polytope is not Delzant");
  for (const auto& x : barycenter(p))
    if (sgn(x) != 0) throw Error(ErrorCode::NotReflexive, "barycenter is not the origin");

  Analysis out{Inconclusive{}, Decision::Engine, {}, {}};
  const auto profiles = kh_feasible(p);
  if (profiles.empty()) {
    out.verdict = RelationObstruction{failed_relation(p).value_or(Relation::Rel1), axis_lengths(p), h_max(p)};
    return out;
  }
  const IntMatrix hm = h_max(p);
  bool have = false;
  for (const auto& profile : profiles) {
    if (profile.h != hm) out.discrepancies.push_back(profile);
    const AnsatzTemplate t = build_template(p, profile);
    Verdict v = obstruct(t, options.max_degree);
    Decision how = Decision::Engine;
    if (auto* inc = std::get_if<Inconclusive>(&v); inc && is_standard_simplex(p)) {
      PolyQ w = simplex_solution(p.dim());
      if (completes(t, w, inc->partial)) {
        VerifyReport report = verify_solution(w, strongest_mode(p.dim()));
        if (report.solution) {
          v = Solution{std::move(w), report, inc->deductions};
          how = Decision::ClosedForm;
        }
      }
    }
    if (!have || rank_of(v) < rank_of(out.verdict)) {
      out.verdict = std::move(v);
      out.decision = how;
      out.parameters.clear();
      for (std::size_t i = 0; i < t.free().size(); ++i) out.parameters.push_back(t.param_name(static_cast<int>(i)));
      have = true;
    }
    if (verdict_kind(out.verdict) == VerdictKind::Solution) break;
  }
  return out;
}

ClassificationReport classify(int n, const ClassifyOptions& options) {
  if (n < 1 || n > 6) throw Error(ErrorCode::UnsupportedDimension, "classification covers dimensions 1..6, got " + std::to_string(n));
  using clock = std::chrono::steady_clock;

  // Undecomposable entries of every dimension up to n, in catalog order.
  std::vector<CatalogEntry> pool;
  for (int d = 1; d <= n; ++d) {
    auto part = builtin_catalog(d);
    pool.insert(pool.end(), part.begin(), part.end());
  }

  struct Timed {
    Analysis analysis;
    double seconds;
  };
  auto run = [&options](const CatalogEntry& e) {
    const auto start = clock::now();
    Analysis a = analyze(e.polytope(), options);
    if (decompose(e.polytope()).size() != 1) throw std::logic_error(e.id + " is decomposable");
    return Timed{std::move(a), std::chrono::duration<double>(clock::now() - start).count()};
  };
  std::vector<Timed> done;
  if (options.parallel) {
    std::vector<std::future<Timed>> jobs;
    for (const auto& e : pool) jobs.push_back(std::async(std::launch::async, run, std::cref(e)));
    for (auto& j : jobs) done.push_back(j.get());
  } else {
    for (const auto& e : pool) done.push_back(run(e));
  }

  ClassificationReport report;
  report.dim = n;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    const CatalogEntry& e = pool[i];
    report.timings[e.id] = done[i].seconds;
    if (e.dim != n) continue;
    CandidateResult c;
    c.id = e.id;
    c.factors = {e.id};
    c.dim = n;
    c.verdict_dim = n;
    c.verdict = done[i].analysis.verdict;
    c.decision = done[i].analysis.decision;
    c.discrepancies = done[i].analysis.discrepancies;
    c.parameters = done[i].analysis.parameters;
    c.expected = verdict_kind(c.verdict) == e.expected_verdict;
    report.entries.push_back(std::move(c));
  }

  // Products: multisets of at least two lower-dimensional entries, factors
  // listed by decreasing dimension and then catalog order.
  std::vector<std::vector<std::size_t>> products;
  std::vector<std::size_t> stack;
  std::function<void(int, std::size_t)> extend = [&](int remaining, std::size_t from) {
    if (remaining == 0) {
      if (stack.size() > 1) products.push_back(stack);
      return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
      if (pool[i].dim >= n || pool[i].dim > remaining) continue;
      stack.push_back(i);
      extend(remaining - pool[i].dim, i);
      stack.pop_back();
    }
  };
  // Lower-dimensional entries, highest dimension first.
  std::vector<std::size_t> order(pool.size());
  {
    std::size_t k = 0;
    for (int d = n - 1; d >= 1; --d)
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (pool[i].dim == d) order[k++] = i;
    order.resize(k);
  }
  std::vector<CatalogEntry> ordered;
  std::vector<const Timed*> ordered_done;
  for (std::size_t i : order) {
    ordered.push_back(pool[i]);
    ordered_done.push_back(&done[i]);
  }
  pool.swap(ordered);
  extend(n, 0);

  struct ProductJob {
    CandidateResult result;
    double seconds = 0;
  };
  auto build = [&](const std::vector<std::size_t>& idx) {
    const auto start = clock::now();
    CandidateResult c;
    c.dim = n;
    c.verdict_dim = n;
    c.decision = Decision::Factors;
    for (std::size_t i : idx) {
      c.factors.push_back(pool[i].id);
      c.id += (c.id.empty() ? "" : " x ") + pool[i].id;
    }
    for (std::size_t i : idx) {
      const Verdict& fv = ordered_done[i]->analysis.verdict;
      if (verdict_kind(fv) != VerdictKind::Solution) {
        c.verdict = fv;
        c.parameters = ordered_done[i]->analysis.parameters;
        c.verdict_dim = pool[i].dim;
        c.decision = Decision::Factor;
        c.via = pool[i].id;
        break;
      }
    }
    if (c.decision == Decision::Factors) {
      PolyQ w = std::get<Solution>(ordered_done[idx[0]]->analysis.verdict).witness;
      for (std::size_t k = 1; k < idx.size(); ++k)
        w = product_solution(w, std::get<Solution>(ordered_done[idx[k]]->analysis.verdict).witness);
      VerifyReport r = verify_solution(w, strongest_mode(n));
      if (!r.solution) throw std::logic_error("product of solutions failed verification: " + c.id);
      c.verdict = Solution{std::move(w), r, {}};
    }
    bool all_simplices = true;
    for (std::size_t i : idx) all_simplices = all_simplices && pool[i].is_simplex();
    c.expected = (verdict_kind(c.verdict) == VerdictKind::Solution) == all_simplices;
    return ProductJob{std::move(c), std::chrono::duration<double>(clock::now() - start).count()};
  };
  std::vector<ProductJob> built;
  if (options.parallel) {
    std::vector<std::future<ProductJob>> jobs;
    for (const auto& idx : products) jobs.push_back(std::async(std::launch::async, build, std::cref(idx)));
    for (auto& j : jobs) built.push_back(j.get());
  } else {
    for (const auto& idx : products) built.push_back(build(idx));
  }
  for (auto& b : built) {
    report.timings[b.result.id] = b.seconds;
    report.entries.push_back(std::move(b.result));
  }

  std::size_t rejected = 0, unresolved = 0;
  for (const auto& c : report.entries) {
    switch (verdict_kind(c.verdict)) {
      case VerdictKind::Solution:
        report.solution_ids.push_back(c.id);
        report.solutions.push_back(std::get<Solution>(c.verdict).witness);
        break;
      case VerdictKind::Inconclusive: ++unresolved; break;
      default: ++rejected;
    }
  }
  report.summary = "dimension " + std::to_string(n) + ": " + std::to_string(report.entries.size()) + " candidates, " +
                   std::to_string(report.solutions.size()) + " solutions, " + std::to_string(rejected) + " rejected, " +
                   std::to_string(unresolved) + " inconclusive";
  return report;
}

}  // namespace mapoly
