#pragma once

// Text serialization of matrices and weights, and list parsing for the CLI.

#include "polydiff/any_matrix.hpp"

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace polydiff {

enum class MatrixFormat { csv, json };

MatrixFormat parse_format(std::string_view name);

/// Splits "a,b,c". A leading '@' reads the items from that file instead,
/// separated by commas or whitespace.
std::vector<std::string> split_list(std::string_view text);

/// Bare rows, comma separated, no header.
std::string matrix_to_csv(const AnyMatrix& m);

/// {"basis", "dimension", "field", "entries"}; rationals as "p/q" strings,
/// complex as "a+bi" strings, finite reals as numbers.
std::string matrix_to_json(const AnyMatrix& m, std::string_view basis);

void write_matrix(std::ostream& out, const AnyMatrix& m, std::string_view basis, MatrixFormat format);

}  // namespace polydiff
