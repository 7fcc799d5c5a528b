// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "mapoly/catalog.hpp"
#include "mapoly/classify.hpp"
#include "mapoly/ma_verifier.hpp"
#include "mapoly/obstruction.hpp"
#include "oracles.hpp"
#include "properties.hpp"

using namespace mapoly;

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point t) {
  return std::chrono::duration<double>(clock_type::now() - t).count();
}

VerifyOptions mode_for(int n) {
  VerifyOptions o;
  if (n > 3) o.mode = VerifyMode::Sampled;
  return o;
}

CatalogEntry entry(const std::string& id) {
  for (auto& e : full_catalog())
    if (e.id == id) return e;
  throw std::runtime_error("missing catalog entry " + id);
}

AnsatzTemplate template_of(const Polytope& p) { return build_template(p, kh_feasible(p).at(0)); }

bool simplex_solutions(std::ostream& note) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const auto t = clock_type::now();
    const VerifyReport r = verify_solution(simplex_solution(n), mode_for(n));
    ok = ok && r.solution && (n <= 3 || r.trials == 20);
    note << " n=" << n << (r.mode == VerifyMode::Symbolic ? " symbolic " : " sampled ") << (r.solution ? "ok" : "FAILED") << " ("
         << seconds_since(t) << "s)";
  }
  return ok;
}

// Every multiset of at least two simplex dimensions with sum <= 6.
bool product_closure(std::ostream& note) {
  std::vector<std::vector<int>> parts;
  std::vector<int> stack;
  std::function<void(int, int)> extend = [&](int left, int largest) {
    if (stack.size() > 1) parts.push_back(stack);
    for (int d = std::min(left, largest); d >= 1; --d) {
      stack.push_back(d);
      extend(left - d, d);
      stack.pop_back();
    }
  };
  extend(6, 6);
  int passed = 0;
  for (const auto& dims : parts) {
    PolyQ w = simplex_solution(dims[0]);
    int n = dims[0];
    for (std::size_t i = 1; i < dims.size(); ++i) {
      w = product_solution(w, simplex_solution(dims[i]));
      n += dims[i];
    }
    if (verify_solution(w, mode_for(n)).solution) ++passed;
  }
  note << " " << passed << "/" << parts.size() << " products verified";
  return passed == static_cast<int>(parts.size());
}

bool hexagon_obstruction(std::ostream& note) {
  const auto t = clock_type::now();
  const AnsatzTemplate tmpl = template_of(entry("T2.1").polytope());
  const Verdict v = obstruct(tmpl, 4);
  const double s = seconds_since(t);
  const auto* ob = std::get_if<CoefficientObstruction>(&v);
  if (!ob) {
    note << " verdict " << verdict_name(v);
    return false;
  }
  const Certificate& c = ob->certificate;
  note << " monomial " << c.monomial.to_string(2) << ", value " << to_string(c.equation.constant()) << ", " << s << "s";
  return c.monomial.degree() == 2 && c.equation.is_constant() && sgn(c.equation.constant()) != 0 &&
         check_certificate(tmpl, c) && s < 1.0;
}

bool relation_gates(std::ostream& note) {
  bool ok = true;
  int checked = 0, table5 = 0;
  for (const auto& e : full_catalog()) {
    if (e.is_simplex() || e.table < 3) continue;
    const bool feasible = !kh_feasible(e.polytope()).empty();
    const bool expect = e.id == "T4.1" || e.id == "T6.1";
    ok = ok && feasible == expect;
    ++checked;
    if (e.table == 5) ++table5;
  }
  note << " " << checked << " entries of tables 3-6 (" << table5 << " in table 5), feasible exactly on T4.1 and T6.1";
  return ok && table5 > 0;
}

bool deep_obstructions(std::ostream& note) {
  bool ok = true;
  {
    const AnsatzTemplate t = template_of(entry("T4.1").polytope());
    const Verdict v = obstruct(t, 4);
    const auto* ob = std::get_if<CoefficientObstruction>(&v);
    ok = ok && ob && ob->certificate.degree <= 2 && check_certificate(t, ob->certificate);
    if (ob) note << " T4.1 at " << ob->certificate.monomial.to_string(4) << " degree " << ob->certificate.degree << ";";
  }
  {
    const auto start = clock_type::now();
    const AnsatzTemplate t = template_of(entry("T6.1").polytope());
    const Verdict v = obstruct(t, 4);
    const auto* ob = std::get_if<CoefficientObstruction>(&v);
    const double s = seconds_since(start);
    if (!ob) {
      note << " T6.1 verdict " << verdict_name(v);
      return false;
    }
    // the deductions pin down a single value for every parameter they touch
    std::map<int, Rat> seen;
    bool unique = !ob->deductions.empty();
    for (const auto& d : ob->deductions) {
      auto [it, fresh] = seen.emplace(d.param, d.value);
      unique = unique && (fresh || it->second == d.value) && d.degree <= ob->certificate.degree;
    }
    ok = ok && unique && ob->certificate.degree <= 3 && check_certificate(t, ob->certificate) && s < 300;
    note << " T6.1 at " << ob->certificate.monomial.to_string(6) << " degree " << ob->certificate.degree << " after "
         << ob->deductions.size() << " forced parameters (" << s << "s)";
  }
  return ok;
}

bool classification(std::ostream& note) {
  bool ok = true;
  for (int n = 1; n <= 6; ++n) {
    const ClassificationReport r = classify(n);
    int sols = 0;
    for (const auto& c : r.entries) {
      const bool simplices = std::all_of(c.factors.begin(), c.factors.end(),
                                         [](const std::string& f) { return f.rfind("simplex-", 0) == 0; });
      const VerdictKind k = verdict_kind(c.verdict);
      if (k == VerdictKind::Solution) {
        ++sols;
        ok = ok && simplices && std::get<Solution>(c.verdict).report.solution;
      } else {
        ok = ok && !simplices && (k == VerdictKind::CoefficientObstruction || k == VerdictKind::RelationObstruction);
      }
      if (const auto* ob = std::get_if<CoefficientObstruction>(&c.verdict); ob && !c.is_product())
        ok = ok && check_certificate(template_of(entry(c.id).polytope()), ob->certificate);
    }
    ok = ok && sols == oracle::partitions(n);
    note << " " << sols;
  }
  return ok;
}

bool geometric_gates(std::ostream& note) {
  bool ok = true;
  int n = 0;
  for (const auto& e : full_catalog()) {
    const Polytope p = e.polytope();
    ok = ok && is_reflexive(p) && is_delzant(p) && barycenter(p) == RatVector(e.dim, Rat(0)) &&
         axis_lengths(p) == e.expected_k && h_max(p) == e.expected_h;
    ++n;
  }
  note << " " << n << " fixtures";
  return ok;
}

bool polygon_census(std::ostream& note) {
  const auto t = clock_type::now();
  const PolygonCensus c = enumerate_smooth_reflexive_2d();
  const double s = seconds_since(t);
  note << " " << c.classes.size() << " classes, " << c.barycentric.size() << " with barycenter 0 (" << s << "s)";
  return c.classes.size() == 5 && c.barycentric.size() == 3 && s < 60;
}

bool property_suites(std::ostream& note) {
  const props::Outcome all[] = {props::ring_laws(1000, 1), props::truncation_consistency(1000, 2),
                                props::determinant_vs_cofactor(1000, 3), props::support_round_trip(1000, 4)};
  bool ok = true;
  for (const auto& o : all) {
    note << " " << o.cases - o.failures << "/" << o.cases;
    ok = ok && o.cases >= 1000 && o.failures == 0;
    if (o.failures) note << " [" << o.first << "]";
  }
  return ok;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    bool (*run)(std::ostream&);
  };
  const Criterion criteria[] = {
      {"simplex solutions verify", simplex_solutions},
      {"products of simplex solutions verify", product_closure},
      {"hexagon coefficient obstruction", hexagon_obstruction},
      {"relation gates", relation_gates},
      {"deep obstructions", deep_obstructions},
      {"classification n=1..6, solution counts", classification},
      {"geometric gates and k/H on every fixture", geometric_gates},
      {"smooth reflexive polygon census", polygon_census},
      {"property suites", property_suites},
  };
  int failed = 0, index = 0;
  for (const auto& c : criteria) {
    ++index;
    std::ostringstream note;
    bool ok = false;
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      note << " exception: " << e.what();
    }
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " " << index << " " << c.name << ":" << note.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
