#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "monospec/matrix.hpp"
#include "monospec/reduction.hpp"
#include "monospec/spectra.hpp"

namespace monospec::io {

/// 17 significant digits, or 6 when pretty. Negative zero prints as 0.
std::string format_number(double v, bool pretty = false);

/// Parses the text format (n, then n rows) or the JSON format {"n": .., "rows": ..};
/// JSON is detected by a leading '{'. Lines starting with '#' are comments.
/// No stochastic validation. Throws ParseError.
Matrix parse_matrix(std::string_view text);

/// Reads a whole file, "-" meaning stdin. Throws ParseError when unreadable.
std::string read_source(const std::string& path);

Matrix read_matrix(const std::string& path);
StochasticMatrix read_stochastic(const std::string& path, double tol = kDefaultTol);

void write_matrix(std::ostream& os, const Matrix& m, bool pretty = false);
void write_matrix_json(std::ostream& os, const Matrix& m);

void write_spectrum_json(std::ostream& os, const Spectrum& s);
void write_reduction_json(std::ostream& os, const ReductionResult& r);

}  // namespace monospec::io
