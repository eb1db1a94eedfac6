#pragma once

#include <string>
#include <vector>

#include "sbd/matrix.hpp"
#include "sbd/types.hpp"

namespace sbd {

struct NamedSet {
  int n = 0;
  std::vector<std::string> names;
  std::vector<Matrix> mats;
};

// Input schema:
//   {"n": int, "matrices": [{"name": str, "re": [[...]], "im": [[...]]?}]}
// Grids must be exactly n-by-n; omitted "im" means a real matrix; names must
// be unique. Throws ParseError / DimensionMismatch / DuplicateName.
NamedSet parse_matrix_set(const std::string& path);
NamedSet parse_matrix_set_text(const std::string& content,
                               const std::string& origin);

// Deterministic report serialization (complex entries as [re, im] pairs).
std::string report_to_json(const DecompositionReport& r,
                           const std::vector<std::string>& names);
std::string report_to_text(const DecompositionReport& r,
                           const std::vector<std::string>& names);

struct ParsedReport {
  DecompositionReport report;
  std::vector<std::string> names;  // order of the "transformed"/"residuals" maps
};

ParsedReport parse_report(const std::string& path);

}  // namespace sbd
