#ifndef RCDS_IO_HPP
#define RCDS_IO_HPP

#include "rcds/matrix.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace rcds {

enum class MatrixFormat { plain, json };

// Plain format: whitespace-separated tokens, one matrix row per line.
// Tokens are integers, a/b fractions, or finite decimals (parsed exactly).
// JSON format: {"n": int, "rows": [["1/2", ...], ...]}.

RatMatrix parse_matrix(std::string_view text, MatrixFormat format);
RatMatrix parse_matrix(std::istream& in, MatrixFormat format);

std::string serialize_matrix(const RatMatrix& X, MatrixFormat format);

/// Rows of 0/1 characters, optionally whitespace-separated.
Pattern parse_pattern(std::string_view text);
Pattern parse_pattern(std::istream& in);

std::string serialize_pattern(const Pattern& A);

/// Heuristic: text whose first non-space byte is '{' is treated as JSON.
MatrixFormat sniff_format(std::string_view text);

} // namespace rcds

#endif
