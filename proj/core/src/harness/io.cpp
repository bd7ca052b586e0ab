#include "matgamma/harness/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "matgamma/error.hpp"

namespace matgamma::harness {
namespace {

using nlohmann::json;

double read_number(const json& v, const std::string& where) {
  if (!v.is_number()) fail(ErrorCode::MalformedInput, where + ": expected a number");
  return v.get<double>();
}

std::string shortest(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    std::string cell(line.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                          : comma - start));
    const auto b = cell.find_first_not_of(" \t\r");
    const auto e = cell.find_last_not_of(" \t\r");
    cells.push_back(b == std::string::npos ? std::string() : cell.substr(b, e - b + 1));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return cells;
}

double parse_cell(const std::string& cell, std::size_t row) {
  double v = 0.0;
  const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (cell.empty() || res.ec != std::errc() || res.ptr != cell.data() + cell.size())
    fail(ErrorCode::MalformedInput,
         "csv row " + std::to_string(row + 1) + ": '" + cell + "' is not a number");
  return v;
}

}  // namespace

MatrixFormat parse_format(std::string_view text) {
  if (text == "json") return MatrixFormat::Json;
  if (text == "csv") return MatrixFormat::Csv;
  fail(ErrorCode::MalformedInput, "unknown format '" + std::string(text) + "' (expected json or csv)");
}

MatrixFormat format_from_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? MatrixFormat::Csv : MatrixFormat::Json;
}

MatrixDocument parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::MalformedInput, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("entries"))
    fail(ErrorCode::MalformedInput, "matrix JSON needs an object with an \"entries\" field");
  const json& rows = doc["entries"];
  if (!rows.is_array() || rows.empty())
    fail(ErrorCode::MalformedInput, "\"entries\" must be a nonempty array of rows");
  const std::size_t n = rows.size();
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(n))
      fail(ErrorCode::DimensionMismatch, "\"n\" does not match the number of rows");
  }
  std::vector<std::vector<Complex>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != n)
      fail(ErrorCode::DimensionMismatch, "row " + std::to_string(i) + " does not have " +
                                             std::to_string(n) + " entries");
    for (std::size_t j = 0; j < n; ++j) {
      const json& cell = row[j];
      const std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (cell.is_number()) {
        out[i].emplace_back(cell.get<double>(), 0.0);
      } else if (cell.is_array() && cell.size() == 2) {
        out[i].emplace_back(read_number(cell[0], where), read_number(cell[1], where));
      } else {
        fail(ErrorCode::MalformedInput, where + ": expected [re, im]");
      }
    }
  }
  MatrixDocument result;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) fail(ErrorCode::MalformedInput, "\"name\" must be a string");
    result.name = doc["name"].get<std::string>();
  }
  try {
    result.matrix = ComplexMatrix::from_rows(out);
  } catch (const Error& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
  return result;
}

std::string to_json(const MatrixDocument& doc) {
  const ComplexMatrix& a = doc.matrix;
  json rows = json::array();
  for (std::size_t i = 0; i < a.order(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.order(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  json out = {{"n", a.order()}};
  if (!doc.name.empty()) out["name"] = doc.name;
  out["entries"] = std::move(rows);
  return out.dump() + "\n";
}

MatrixDocument parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> values;
    for (const auto& cell : split_csv_line(line)) values.push_back(parse_cell(cell, rows.size()));
    rows.push_back(std::move(values));
  }
  const std::size_t n = rows.size();
  if (n == 0) fail(ErrorCode::MalformedInput, "csv matrix is empty");
  std::vector<std::vector<Complex>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() == n) {
      for (double v : rows[i]) out[i].emplace_back(v, 0.0);
    } else if (rows[i].size() == 2 * n) {
      for (std::size_t j = 0; j < n; ++j) out[i].emplace_back(rows[i][2 * j], rows[i][2 * j + 1]);
    } else {
      fail(ErrorCode::DimensionMismatch, "csv row " + std::to_string(i + 1) + " has " +
                                             std::to_string(rows[i].size()) + " values, expected " +
                                             std::to_string(n) + " or " + std::to_string(2 * n));
    }
  }
  MatrixDocument doc;
  try {
    doc.matrix = ComplexMatrix::from_rows(out);
  } catch (const Error& e) {
    fail(ErrorCode::MalformedInput, e.what());
  }
  return doc;
}

std::string to_csv(const ComplexMatrix& a) {
  std::string out;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (j > 0) out += ',';
      out += shortest(a(i, j).real());
      out += ',';
      out += shortest(a(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix(const MatrixDocument& doc, MatrixFormat format) {
  return format == MatrixFormat::Json ? to_json(doc) : to_csv(doc.matrix);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::MalformedInput, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(ErrorCode::MalformedInput, "cannot write '" + path.string() + "'");
  out << text;
}

MatrixDocument read_matrix_file(const std::filesystem::path& path,
                                std::optional<MatrixFormat> format) {
  const std::string text = read_text_file(path);
  const MatrixFormat f = format.value_or(format_from_path(path));
  return f == MatrixFormat::Json ? parse_matrix_json(text) : parse_matrix_csv(text);
}

}  // namespace matgamma::harness
