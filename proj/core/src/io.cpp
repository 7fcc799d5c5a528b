#include "mapoly/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mapoly/error.hpp"

namespace mapoly {
namespace {

using json = nlohmann::ordered_json;

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream in{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; in >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return out;
}

std::int64_t parse_integer(const std::string& tok, int line) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || p != tok.data() + tok.size())
    throw Error(ErrorCode::ParseError, "expected an integer, got '" + tok + "'", line);
  return v;
}

Rat parse_rational(const std::string& tok, int line) {
  try {
    return parse_rat(tok);
  } catch (const Error&) {
    throw Error(ErrorCode::ParseError, "expected a rational, got '" + tok + "'", line);
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

json rat_json(const Rat& r) { return to_string(r); }

json vector_json(const RatVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_json(x));
  return a;
}

json int_matrix_json(const IntMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(row);
  return a;
}

json polynomial_json(const PolyQ& f) {
  json terms = json::array();
  for (const auto& [m, c] : f.terms()) terms.push_back({rat_json(c), m.exponents(f.nvars())});
  return terms;
}

std::function<std::string(int)> namer(const std::vector<std::string>& names) {
  return [&names](int id) {
    if (id >= 0 && id < static_cast<int>(names.size())) return names[id];
    return "a" + std::to_string(id);
  };
}

// {param-monomial: rational}
json coeff_json(const ParamCoeff& c, const std::vector<std::string>& names) {
  auto name = namer(names);
  json out = json::object();
  for (const auto& [mono, v] : c.terms()) {
    std::string key;
    for (const auto& [id, e] : mono) {
      if (!key.empty()) key += '*';
      key += name(id);
      if (e > 1) key += "^" + std::to_string(e);
    }
    out[key.empty() ? "1" : key] = rat_json(v);
  }
  return out;
}

json assignment_json(const std::map<int, Rat>& values, const std::vector<std::string>& names) {
  auto name = namer(names);
  json out = json::object();
  for (const auto& [id, v] : values) out[name(id)] = rat_json(v);
  return out;
}

json deductions_json(const std::vector<Deduction>& ds, const std::vector<std::string>& names) {
  auto name = namer(names);
  json out = json::array();
  for (const auto& d : ds)
    out.push_back({{"parameter", name(d.param)}, {"value", rat_json(d.value)}, {"degree", d.degree}, {"rule", d.rule}});
  return out;
}

json report_json(const VerifyReport& r) {
  json out;
  out["solution"] = r.solution;
  out["mode"] = std::string(to_string(r.mode));
  if (r.mode == VerifyMode::Sampled) {
    out["trials"] = r.trials;
    out["seed"] = r.seed;
  }
  out["degree_bound"] = r.degree_bound;
  out["certificate"] = r.counterexample ? vector_json(*r.counterexample) : json(nullptr);
  return out;
}

json verdict_object(const Verdict& v, const std::vector<std::string>& names, int nvars) {
  json out;
  out["verdict"] = std::string(verdict_name(v));
  if (auto* s = std::get_if<Solution>(&v)) {
    out["witness"] = to_string(s->witness);
    out["terms"] = polynomial_json(s->witness);
    out["verification"] = report_json(s->report);
    out["deductions"] = deductions_json(s->deductions, names);
  } else if (auto* r = std::get_if<RelationObstruction>(&v)) {
    out["failed"] = std::string(to_string(r->failed));
    out["k"] = r->k;
    out["h_max"] = int_matrix_json(r->h_max);
  } else if (auto* c = std::get_if<CoefficientObstruction>(&v)) {
    const Certificate& cert = c->certificate;
    json jc;
    jc["monomial"] = cert.monomial.to_string(nvars);
    jc["exponents"] = cert.monomial.exponents(nvars);
    jc["degree"] = cert.degree;
    jc["kind"] = std::string(to_string(cert.kind));
    jc["equation"] = coeff_json(cert.equation, names);
    json combo = json::array();
    for (const auto& [m, mult] : cert.combination) combo.push_back({m.to_string(nvars), rat_json(mult)});
    jc["combination"] = combo;
    jc["fixed_assignment"] = assignment_json(cert.fixed_assignment, names);
    out["certificate"] = jc;
    out["deductions"] = deductions_json(c->deductions, names);
  } else if (auto* i = std::get_if<Inconclusive>(&v)) {
    out["degree_reached"] = i->degree_reached;
    json un = json::array();
    for (const auto& e : i->unresolved) un.push_back(coeff_json(e, names));
    out["unresolved"] = un;
    out["partial"] = assignment_json(i->partial, names);
    out["deductions"] = deductions_json(i->deductions, names);
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string describe(const CandidateResult& c) {
  const Verdict& v = c.verdict;
  std::string out;
  if (auto* s = std::get_if<Solution>(&v)) {
    out = std::to_string(s->witness.size()) + " terms of degree <= " + std::to_string(s->witness.degree()) + ", verified " +
          std::string(to_string(s->report.mode));
    if (s->report.mode == VerifyMode::Sampled) out += " at " + std::to_string(s->report.trials) + " points";
  } else if (auto* r = std::get_if<RelationObstruction>(&v)) {
    out = std::string(to_string(r->failed)) + " fails for k = " + to_string(to_rat(r->k));
  } else if (auto* co = std::get_if<CoefficientObstruction>(&v)) {
    const Certificate& cert = co->certificate;
    out = cert.monomial.to_string(c.verdict_dim) + " at degree " + std::to_string(cert.degree) + " (" +
          std::string(to_string(cert.kind)) + "): " + cert.equation.to_string(namer(c.parameters)) + " = 0";
    if (!cert.fixed_assignment.empty()) out += " after " + std::to_string(cert.fixed_assignment.size()) + " forced values";
  } else if (auto* i = std::get_if<Inconclusive>(&v)) {
    out = std::to_string(i->unresolved.size()) + " unresolved equations at degree " + std::to_string(i->degree_reached);
  }
  if (c.decision == Decision::Factor) out = "via " + c.via + ": " + out;
  if (c.decision == Decision::ClosedForm) out += " (closed form)";
  return out;
}

}  // namespace

Polytope parse_polytope(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty polytope description", 1);
  const Line& head = lines[0];
  if (head.tokens.size() != 2 || head.tokens[0] != "dim")
    throw Error(ErrorCode::ParseError, "expected 'dim <n>'", head.number);
  const std::int64_t n = parse_integer(head.tokens[1], head.number);
  if (n < 1 || n > 7) throw Error(ErrorCode::ParseError, "dimension must lie in 1..7", head.number);
  if (lines.size() < 2) throw Error(ErrorCode::ParseError, "missing 'hrep', 'hrep-b' or 'vrep'", head.number);
  const Line& mode_line = lines[1];
  const std::string mode = mode_line.tokens[0];
  if (mode_line.tokens.size() != 1 || (mode != "hrep" && mode != "hrep-b" && mode != "vrep"))
    throw Error(ErrorCode::ParseError, "expected 'hrep', 'hrep-b' or 'vrep'", mode_line.number);
  if (lines.size() < 3) throw Error(ErrorCode::ParseError, "no rows after '" + mode + "'", mode_line.number);

  const std::size_t width = static_cast<std::size_t>(n) + (mode == "hrep-b" ? 1 : 0);
  IntMatrix a;
  RatVector b;
  std::vector<RatVector> points;
  for (std::size_t k = 2; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (mode == "vrep") {
      RatVector p;
      for (const auto& tok : l.tokens) p.push_back(parse_rational(tok, l.number));
      if (p.size() != width)
        throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(width) + " entries", l.number);
      points.push_back(std::move(p));
      continue;
    }
    IntVector row;
    for (const auto& tok : l.tokens) row.push_back(parse_integer(tok, l.number));
    if (row.size() != width)
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(width) + " entries", l.number);
    if (mode == "hrep-b") {
      b.push_back(Rat(static_cast<long>(row.back())));
      row.pop_back();
    } else {
      b.push_back(Rat(1));
    }
    a.push_back(std::move(row));
  }
  if (mode == "vrep") return facets_of(std::move(points));
  return vertices_of(HalfspaceSystem(static_cast<int>(n), std::move(a), std::move(b), false));
}

Polytope load_polytope(const std::string& path) { return parse_polytope(read_file(path)); }

PolyQ parse_polynomial(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw Error(ErrorCode::ParseError, "empty polynomial", 1);
  const std::size_t nvars = lines[0].tokens.size() - 1;
  if (nvars < 1) throw Error(ErrorCode::ParseError, "expected a coefficient and an exponent vector", lines[0].number);
  std::vector<PolyQ::Term> terms;
  for (const auto& l : lines) {
    if (l.tokens.size() != nvars + 1)
      throw Error(ErrorCode::DimensionMismatch, "expected " + std::to_string(nvars) + " exponents", l.number);
    const Rat c = parse_rational(l.tokens[0], l.number);
    std::vector<int> e;
    for (std::size_t i = 1; i < l.tokens.size(); ++i) {
      const std::int64_t x = parse_integer(l.tokens[i], l.number);
      if (x < 0 || x > 255) throw Error(ErrorCode::ParseError, "exponent out of range", l.number);
      e.push_back(static_cast<int>(x));
    }
    try {
      terms.emplace_back(Monomial::from_exponents(e), c);
    } catch (const Error& err) {
      throw Error(ErrorCode::ParseError, err.what(), l.number);
    }
  }
  return PolyQ(static_cast<int>(nvars), std::move(terms));
}

PolyQ load_polynomial(const std::string& path) { return parse_polynomial(read_file(path)); }

std::string format_polynomial(const PolyQ& f) {
  std::string out;
  for (const auto& [m, c] : f.terms()) {
    out += to_string(c);
    for (int e : m.exponents(f.nvars())) out += " " + std::to_string(e);
    out += "\n";
  }
  return out;
}

std::string polytope_json(const Polytope& p) {
  json out;
  out["dim"] = p.dim();
  json vs = json::array();
  for (const auto& v : p.vertices()) vs.push_back(vector_json(v));
  out["vertices"] = vs;
  out["facets_A"] = int_matrix_json(p.facets().a());
  out["facets_b"] = vector_json(p.facets().b());
  return dump(out);
}

std::string verify_json(const VerifyReport& r) { return dump(report_json(r)); }

std::string verdict_json(const Verdict& v, int dim, const std::vector<std::string>& names) {
  return dump(verdict_object(v, names, dim));
}

std::string emit_report(const ClassificationReport& r, ReportFormat format, bool timings) {
  if (format == ReportFormat::Text) {
    std::ostringstream out;
    out << "dimension " << r.dim << "\n";
    std::size_t width = 0;
    for (const auto& c : r.entries) width = std::max(width, c.id.size());
    for (const auto& c : r.entries) {
      out << c.id << std::string(width + 2 - c.id.size(), ' ');
      const std::string kind(verdict_name(c.verdict));
      out << kind << std::string(24 - std::min<std::size_t>(kind.size(), 23), ' ') << describe(c) << "\n";
    }
    if (timings) {
      out << "timings (s)\n";
      for (const auto& [id, t] : r.timings) out << "  " << id << " " << t << "\n";
    }
    out << r.summary << "\n";
    return out.str();
  }
  json out;
  out["dim"] = r.dim;
  json entries = json::array();
  for (const auto& c : r.entries) {
    json e;
    e["id"] = c.id;
    e["factors"] = c.factors;
    e["decision"] = std::string(to_string(c.decision));
    if (c.decision == Decision::Factor) e["via"] = c.via;
    json v = verdict_object(c.verdict, c.parameters, c.verdict_dim);
    for (auto it = v.begin(); it != v.end(); ++it) e[it.key()] = it.value();
    if (!c.discrepancies.empty()) {
      json d = json::array();
      for (const auto& p : c.discrepancies) d.push_back({{"k", p.k}, {"H", int_matrix_json(p.h)}});
      e["discrepancies"] = d;
    }
    entries.push_back(e);
  }
  out["entries"] = entries;
  json sols = json::array();
  for (std::size_t i = 0; i < r.solutions.size(); ++i)
    sols.push_back({{"id", r.solution_ids[i]}, {"witness", to_string(r.solutions[i])}});
  out["solutions"] = sols;
  out["summary"] = r.summary;
  if (timings) {
    json t = json::object();
    for (const auto& [id, s] : r.timings) t[id] = s;
    out["timings"] = t;
  }
  return dump(out);
}

}  // namespace mapoly
