#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "cubemax/matrix.hpp"

namespace cubemax {

/// Matrix plus the optional metadata carried by the JSON envelope.
struct MatrixDocument {
  TestMatrix matrix;
  std::optional<std::string> name;
  std::optional<std::string> beta_closed_form;
};

enum class MatrixFormat { Text, Json };

/// Accepts either plain text (one row per line, whitespace-separated
/// decimals; blank lines and lines starting with '#' are ignored) or the JSON
/// envelope {"n": int, "rows": [[...]], "name"?: str, "beta_closed_form"?: str}.
/// The format is detected from the first non-blank character.
/// Throws ParseError on malformed input, ragged or non-square shapes and
/// non-finite values.
MatrixDocument parse_matrix(std::string_view text);

MatrixDocument read_matrix_file(const std::filesystem::path& path);

/// Plain rows, 17 significant digits, LF line endings.
std::string format_matrix_text(const TestMatrix& m);

std::string format_matrix_json(const MatrixDocument& doc);

void write_matrix_file(const std::filesystem::path& path, const MatrixDocument& doc,
                       MatrixFormat format);

}  // namespace cubemax
