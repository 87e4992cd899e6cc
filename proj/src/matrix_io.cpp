#include "cubemax/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "cubemax/error.hpp"

namespace cubemax {

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v'; }

double parse_number(std::string_view token, std::size_t line_no) {
  std::string_view body = token;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec != std::errc() || ptr != body.data() + body.size()) {
    throw Error(ErrorKind::ParseError,
                "line " + std::to_string(line_no) + ": not a number: '" + std::string(token) + "'");
  }
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": non-finite value");
  }
  return value;
}

TestMatrix build(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw Error(ErrorKind::ParseError, "no matrix rows found");
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      throw Error(ErrorKind::ParseError, "row " + std::to_string(i) + " has " +
                                             std::to_string(rows[i].size()) + " entries, expected " +
                                             std::to_string(n));
    }
  }
  return TestMatrix::from_rows(rows);
}

MatrixDocument parse_text(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    std::vector<double> row;
    std::size_t pos = 0;
    while (pos < line.size()) {
      while (pos < line.size() && is_space(line[pos])) ++pos;
      if (pos >= line.size()) break;
      if (row.empty() && line[pos] == '#') break;
      std::size_t end = pos;
      while (end < line.size() && !is_space(line[end])) ++end;
      row.push_back(parse_number(line.substr(pos, end - pos), line_no));
      pos = end;
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return MatrixDocument{build(rows), std::nullopt, std::nullopt};
}

MatrixDocument parse_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("rows") || !j["rows"].is_array()) {
    throw Error(ErrorKind::ParseError, "JSON matrix must be an object with a \"rows\" array");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& r : j["rows"]) {
    if (!r.is_array()) throw Error(ErrorKind::ParseError, "each entry of \"rows\" must be an array");
    std::vector<double> row;
    for (const auto& v : r) {
      if (!v.is_number()) throw Error(ErrorKind::ParseError, "matrix entries must be numbers");
      const double d = v.get<double>();
      if (!std::isfinite(d)) throw Error(ErrorKind::ParseError, "non-finite value");
      row.push_back(d);
    }
    rows.push_back(std::move(row));
  }
  if (j.contains("n")) {
    if (!j["n"].is_number_integer() || j["n"].get<long long>() != static_cast<long long>(rows.size())) {
      throw Error(ErrorKind::ParseError, "\"n\" does not match the number of rows");
    }
  }
  MatrixDocument doc{build(rows), std::nullopt, std::nullopt};
  if (j.contains("name") && !j["name"].is_null()) {
    if (!j["name"].is_string()) throw Error(ErrorKind::ParseError, "\"name\" must be a string");
    doc.name = j["name"].get<std::string>();
  }
  if (j.contains("beta_closed_form") && !j["beta_closed_form"].is_null()) {
    if (!j["beta_closed_form"].is_string()) {
      throw Error(ErrorKind::ParseError, "\"beta_closed_form\" must be a string");
    }
    doc.beta_closed_form = j["beta_closed_form"].get<std::string>();
  }
  return doc;
}

}  // namespace

MatrixDocument parse_matrix(std::string_view text) {
  std::size_t first = 0;
  while (first < text.size() && is_space(text[first])) ++first;
  if (first < text.size() && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

MatrixDocument read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

std::string format_matrix_text(const TestMatrix& m) {
  std::string out;
  char buf[32];
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
      if (j) out += ' ';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

std::string format_matrix_json(const MatrixDocument& doc) {
  nlohmann::ordered_json j;
  j["n"] = doc.matrix.dim();
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < doc.matrix.dim(); ++i) {
    const auto r = doc.matrix.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  j["rows"] = std::move(rows);
  if (doc.name) j["name"] = *doc.name;
  if (doc.beta_closed_form) j["beta_closed_form"] = *doc.beta_closed_form;
  return j.dump(2) + "\n";
}

void write_matrix_file(const std::filesystem::path& path, const MatrixDocument& doc,
                       MatrixFormat format) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << (format == MatrixFormat::Json ? format_matrix_json(doc) : format_matrix_text(doc.matrix));
}

}  // namespace cubemax
