#include "monospec/io.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "json.hpp"

namespace monospec::io {

namespace {

[[noreturn]] void parse_error(const std::string& msg) { throw Error(ErrorKind::Parse, msg); }

Matrix parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    parse_error(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    parse_error("JSON matrix needs a \"rows\" array");
  }
  std::vector<std::vector<double>> rows;
  for (const auto& row : doc["rows"]) {
    if (!row.is_array()) parse_error("JSON matrix rows must be arrays");
    auto& out = rows.emplace_back();
    for (const auto& v : row) {
      if (!v.is_number()) parse_error("JSON matrix entries must be numbers");
      out.push_back(v.get<double>());
    }
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != rows.size()) {
      parse_error("JSON field \"n\" does not match the row count");
    }
  }
  if (rows.empty()) parse_error("empty matrix");
  return Matrix::from_rows(rows);
}

Matrix parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string token;
  if (!(in >> token)) parse_error("empty input");
  std::size_t n = 0;
  std::size_t used = 0;
  try {
    const long long v = std::stoll(token, &used);
    if (v < 0) parse_error("negative dimension");
    n = static_cast<std::size_t>(v);
  } catch (const std::logic_error&) {
    parse_error("first token must be the dimension, got '" + token + "'");
  }
  if (used != token.size()) parse_error("first token must be the dimension, got '" + token + "'");
  if (n == 0) parse_error("dimension must be positive");
  if (n > kMaxDim) throw Error(ErrorKind::Dimension, "dimension " + std::to_string(n) + " exceeds 32");
  Matrix m(n, n);
  for (std::size_t i = 0; i < n * n; ++i) {
    if (!(in >> token)) parse_error("expected " + std::to_string(n * n) + " entries");
    try {
      m(i / n, i % n) = std::stod(token, &used);
    } catch (const std::logic_error&) {
      parse_error("bad number '" + token + "'");
    }
    if (used != token.size()) parse_error("bad number '" + token + "'");
  }
  if (in >> token) parse_error("trailing data '" + token + "'");
  return m;
}

void write_complex(std::ostream& os, Complex z) {
  os << "{\"re\":" << format_number(z.real()) << ",\"im\":" << format_number(z.imag()) << '}';
}

void write_values(std::ostream& os, std::span<const Complex> vs) {
  os << '[';
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (k) os << ',';
    write_complex(os, vs[k]);
  }
  os << ']';
}

}  // namespace

std::string format_number(double v, bool pretty) {
  if (v == 0.0) v = 0.0;  // drop negative zero
  char buf[40];
  std::snprintf(buf, sizeof buf, pretty ? "%.6g" : "%.17g", v);
  return buf;
}

Matrix parse_matrix(std::string_view text) {
  std::string body;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto line = text.substr(pos, end - pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] != '#') {
      body.append(line);
      body.push_back('\n');
    }
    pos = end + 1;
  }
  const auto first = body.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) parse_error("empty input");
  return body[first] == '{' ? parse_json(body) : parse_text(body);
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) parse_error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Matrix read_matrix(const std::string& path) { return parse_matrix(read_source(path)); }

StochasticMatrix read_stochastic(const std::string& path, double tol) {
  return validate_stochastic(read_matrix(path), tol);
}

void write_matrix(std::ostream& os, const Matrix& m, bool pretty) {
  os << m.rows() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ' ';
      os << format_number(m(i, j), pretty);
    }
    os << '\n';
  }
}

void write_matrix_json(std::ostream& os, const Matrix& m) {
  os << "{\"n\":" << m.rows() << ",\"rows\":[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << format_number(m(i, j));
    os << ']';
  }
  os << "]}";
}

void write_spectrum_json(std::ostream& os, const Spectrum& s) {
  os << "{\"values\":";
  write_values(os, s.values);
  os << ",\"trivial_included\":" << (s.trivial_included ? "true" : "false") << '}';
}

void write_reduction_json(std::ostream& os, const ReductionResult& r) {
  os << "{\"dominance\":";
  write_matrix_json(os, r.dominance);
  os << ",\"blocks\":[";
  for (std::size_t k = 0; k < r.blocks.size(); ++k) {
    const auto& blk = r.blocks[k];
    os << (k ? "," : "") << "{\"indices\":[";
    for (std::size_t i = 0; i < blk.indices.size(); ++i) os << (i ? "," : "") << blk.indices[i];
    os << "],\"r\":" << format_number(blk.r) << ",\"degenerate\":" << (blk.degenerate ? "true" : "false");
    os << ",\"S\":";
    if (blk.s) {
      write_matrix_json(os, blk.s->entries());
    } else {
      os << "null";
    }
    os << ",\"row_sum_error\":" << format_number(blk.row_sum_error) << ",\"lambda\":";
    write_values(os, blk.lambda.values);
    os << ",\"mu\":";
    write_values(os, blk.mu.values);
    os << '}';
  }
  os << "],\"lambda_map\":[";
  for (std::size_t k = 0; k < r.lambda_map.size(); ++k) {
    const auto& lm = r.lambda_map[k];
    os << (k ? "," : "") << "{\"block\":" << lm.block << ",\"lambda\":";
    write_complex(os, lm.lambda);
    os << ",\"mu\":";
    write_complex(os, lm.mu);
    os << '}';
  }
  os << "],\"degenerate\":[";
  for (std::size_t k = 0; k < r.degenerate.size(); ++k) os << (k ? "," : "") << r.degenerate[k];
  os << "],\"nontrivial_spectrum\":";
  write_values(os, r.nontrivial_spectrum());
  os << "}\n";
}

}  // namespace monospec::io
