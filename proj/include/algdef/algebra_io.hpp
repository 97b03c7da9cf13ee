#pragma once

// Algebra files: one JSON object with `name`, `dim`, `field` ("rational") and a
// `table` of {"i","j","l","c"} records (0-based indices, "p/q" coefficients).
// Triples absent from the table are zero. The writer emits one record per line.

#include <iosfwd>
#include <string>
#include <string_view>

#include "algdef/mul_table.hpp"

namespace algdef {

std::string serialize_algebra(const NamedAlgebra& algebra);

/// Throws ParseError naming the line and field of the first problem.
NamedAlgebra parse_algebra(std::string_view text);

NamedAlgebra read_algebra_file(const std::string& path);

}  // namespace algdef
