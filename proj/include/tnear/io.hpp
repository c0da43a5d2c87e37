#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "tnear/banded_toeplitz.hpp"

namespace tnear {

// Matrix file format, whitespace separated:
//   n k
//   sigma_1 ... sigma_k
//   delta
//   tau_1 ... tau_k
// Lines 2 and 4 are empty when k == 0.

/// `digits` significant digits; 17 round-trips every double.
[[nodiscard]] std::string format_double(double value, int digits = 17);

[[nodiscard]] std::string format_matrix(const BandedToeplitz& t);
void write_matrix(std::ostream& os, const BandedToeplitz& t);

/// Throws ParseError with the offending line and field.
[[nodiscard]] BandedToeplitz parse_matrix(std::string_view text);
[[nodiscard]] BandedToeplitz load_matrix(const std::filesystem::path& path);

}  // namespace tnear
