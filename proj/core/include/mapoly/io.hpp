#pragma once

#include <string>
#include <string_view>

#include "mapoly/ansatz.hpp"
#include "mapoly/classify.hpp"
#include "mapoly/ma_verifier.hpp"
#include "mapoly/obstruction.hpp"
#include "mapoly/polytope.hpp"

namespace mapoly {

/// Line-oriented polytope description:
///
///   dim 2
///   hrep          # rows a with a.y <= 1
///   -1 0
///   ...
///
/// `hrep-b` rows carry n integers and the right-hand side, `vrep` rows are
/// n rationals. Text after '#' is ignored. Throws ParseError with the line
/// number, or DimensionMismatch for rows of the wrong length.
Polytope parse_polytope(std::string_view text);
Polytope load_polytope(const std::string& path);

/// One term per line: `p/q e_1 ... e_n`.
PolyQ parse_polynomial(std::string_view text);
PolyQ load_polynomial(const std::string& path);
std::string format_polynomial(const PolyQ& f);

enum class ReportFormat { Json, Text };

std::string polytope_json(const Polytope& p);
std::string verify_json(const VerifyReport& r);
/// `names` maps parameter ids to their printed names; a<id> when empty.
std::string verdict_json(const Verdict& v, int dim, const std::vector<std::string>& names = {});
/// Byte-identical for identical reports; timings only when asked for.
std::string emit_report(const ClassificationReport& r, ReportFormat format, bool timings = false);

}  // namespace mapoly
