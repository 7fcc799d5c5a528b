#include "mapoly/rational.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "mapoly/error.hpp"

namespace mapoly {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundedSystem: return "UnboundedSystem";
    case ErrorCode::EmptyOrLowerDimensional: return "EmptyOrLowerDimensional";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::NotReflexive: return "NotReflexive";
    case ErrorCode::VariableCountMismatch: return "VariableCountMismatch";
    case ErrorCode::TruncatedEvaluation: return "TruncatedEvaluation";
    case ErrorCode::ZeroConstantTerm: return "ZeroConstantTerm";
    case ErrorCode::NegativeCoefficient: return "NegativeCoefficient";
    case ErrorCode::MissingBaseVertex: return "MissingBaseVertex";
    case ErrorCode::InconsistentConstraints: return "InconsistentConstraints";
    case ErrorCode::TemplateInconsistent: return "TemplateInconsistent";
    case ErrorCode::UnsupportedDimension: return "UnsupportedDimension";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
  }
  return "Unknown";
}

namespace {
std::string decorate(ErrorCode code, const std::string& message, std::optional<int> line) {
  std::ostringstream os;
  os << to_string(code);
  if (line) os << " (line " << *line << ")";
  os << ": " << message;
  return os.str();
}
}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<int> line)
    : std::runtime_error(decorate(code, message, line)), code_(code), line_(line) {}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {
bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') return false;
  return true;
}

Int parse_int(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return Int(std::string(s), 10);
}
}  // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!valid_integer(num)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(parse_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!valid_integer(den)) throw Error(ErrorCode::ParseError, "bad rational '" + std::string(text) + "'");
  return make_rat(parse_int(num), parse_int(den));
}

std::string to_string(const Rat& value) { return value.get_str(); }

Int floor(const Rat& value) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

Int ceil(const Rat& value) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return q;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

std::int64_t to_int64(const Int& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer exceeds int64 range");
  return value.get_si();
}

RatVector to_rat(const IntVector& v) {
  RatVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

std::string to_string(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += to_string(v[i]);
  }
  return s + ")";
}

int rank(RatMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      Rat f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

Rat determinant(RatMatrix m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rat f = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
    }
  }
  return det;
}

bool solve(RatMatrix a, RatVector b, RatVector& x) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[pivot], a[c]);
    std::swap(b[pivot], b[c]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rat f = a[i][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[i][k] -= f * a[c][k];
      b[i] -= f * b[c];
    }
  }
  x.resize(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return true;
}

}  // namespace mapoly
