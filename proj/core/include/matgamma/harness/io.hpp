#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "matgamma/matrix.hpp"

namespace matgamma::harness {

/// {"n": n, "name": "...", "entries": [[[re, im], ...], ...]}
struct MatrixDocument {
  std::string name;
  ComplexMatrix matrix;
};

enum class MatrixFormat { Json, Csv };

MatrixFormat parse_format(std::string_view text);
/// ".csv" selects CSV, anything else JSON.
MatrixFormat format_from_path(const std::filesystem::path& path);

MatrixDocument parse_matrix_json(std::string_view text);
std::string to_json(const MatrixDocument& doc);

/// Rows of n reals, or of 2n values read as (re, im) pairs.
MatrixDocument parse_matrix_csv(std::string_view text);
/// Rows of 2n values: re, im, re, im, ...
std::string to_csv(const ComplexMatrix& a);

std::string format_matrix(const MatrixDocument& doc, MatrixFormat format);

MatrixDocument read_matrix_file(const std::filesystem::path& path,
                                std::optional<MatrixFormat> format = std::nullopt);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace matgamma::harness
