#pragma once

// Text formats.
//
// Algebra files are line oriented:
//
//     vertices: 2
//     arrow a1: 1 -> 2
//     arrow b1: 2 -> 1
//     loewy_bound: 3
//
// loewy_bound is L in J^{L+1} = 0. Blank lines and '#' comments are
// ignored. Errors carry line/column positions.
//
// Layerings are semicolon-separated layers, each a comma-separated list of
// vertex:multiplicity entries; zero layers are empty segments, e.g.
// "1:1;2:1;1:1;2:1". Dimension vectors are comma-separated integers in
// vertex order, e.g. "2,2".

#include <string>

#include "repvar/layers.hpp"
#include "repvar/quiver.hpp"

namespace repvar {

TruncatedAlgebra parse_algebra(const std::string& text);
TruncatedAlgebra load_algebra_file(const std::string& path);

std::string format_algebra(const TruncatedAlgebra& a);

DimVector parse_dim_vector(const std::string& text, int expected_size);

// Inverse of layering_to_string; layer count must be loewy_bound+1 and
// vertices must fit the given count.
SemisimpleSequence parse_layering(const std::string& text, int vertex_count,
                                  int loewy_bound);

}  // namespace repvar
