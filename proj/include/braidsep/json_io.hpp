#pragma once

#include <string>

#include "braidsep/matrix.hpp"
#include "braidsep/representation.hpp"
#include "braidsep/separation.hpp"

namespace braidsep {

// Matrix JSON: {"rows": N, "cols": N, "entries": [[re, im], ...]} row-major.
std::string matrix_to_json(const Mat3& m);
std::string matrix_to_json(const Mat6& m);
Mat3 mat3_from_json(const std::string& text);
Mat6 mat6_from_json(const std::string& text);

// Rep JSON: {"sigma1": <matrix>, "sigma2": <matrix>, "provenance": {...},
// "residual": x}. Import re-runs the full validation (block equations,
// invertibility, braid relation) and checks that sigma2 carries the sign
// pattern implied by sigma1's blocks.
std::string rep_to_json(const Rep& r);
Rep rep_from_json(const std::string& text);

std::string gap_table_to_json(const GapTable& table);
std::string gap_table_to_csv(const GapTable& table);

}  // namespace braidsep
