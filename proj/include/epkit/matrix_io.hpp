#pragma once

#include <string>

#include "epkit/matrix.hpp"

namespace epkit::io {

/// {"rows": n, "cols": m, "entries": [[scalar, ...], ...]} with scalars as
/// strings in the Gaussian-rational grammar (bare JSON integers accepted).
/// Throws ParseError on malformed input or mismatched dimensions.
MatrixQ parse_matrix_json(const std::string& text);

/// Throws ParseError when the file cannot be read.
MatrixQ read_matrix_file(const std::string& path);

/// Canonical form: two-space indent, one matrix row per line, trailing newline.
std::string write_matrix_json(const MatrixQ& m);

}  // namespace epkit::io
