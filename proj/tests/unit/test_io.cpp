#include "doctest.h"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "monospec/io.hpp"
#include "monospec/sampler.hpp"
#include "support.hpp"

using namespace monospec;
using testsupport::kind_of;

TEST_CASE("format_number") {
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(0.1, true) == "0.1");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(1.0) == "1");
  CHECK(io::format_number(-0.5) == "-0.5");
}

TEST_CASE("text and JSON formats parse to the same matrix") {
  const Matrix expect = Matrix::from_rows({{0.3, 0.7, 0.0}, {0.2, 0.7, 0.1}, {0.1, 0.7, 0.2}});
  CHECK(io::parse_matrix("3\n0.3 0.7 0\n0.2 0.7 0.1\n0.1 0.7 0.2\n") == expect);
  CHECK(io::parse_matrix("3 0.3 0.7 0 0.2 0.7 0.1 0.1 0.7 0.2") == expect);
  CHECK(io::parse_matrix("# witness m11=0.3 m33=0.2\n3\n0.3 0.7 0\n  # inline\n0.2 0.7 0.1\n0.1 0.7 0.2") == expect);
  CHECK(io::parse_matrix(R"({"n": 3, "rows": [[0.3, 0.7, 0], [0.2, 0.7, 0.1], [0.1, 0.7, 0.2]]})") == expect);
  CHECK(io::parse_matrix(R"(  {"rows": [[1]]})") == Matrix::identity(1));
}

TEST_CASE("malformed input is a parse error") {
  for (const char* bad : {"", "# only a comment\n", "x", "2\n1 0\n0", "2\n1 0\n0 1\n5", "2\n1 0\n0 one",
                          "-2\n", "0\n", "2.5\n1 0 0 1", "{\"rows\": 3}", "{\"rows\": [[1, \"a\"]]}",
                          "{\"n\": 2, \"rows\": [[1]]}", "{\"rows\": []}", "{bad json"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { io::parse_matrix(bad); }) == ErrorKind::Parse);
  }
  CHECK(kind_of([] { io::parse_matrix("33\n"); }) == ErrorKind::Dimension);
  CHECK(kind_of([] { io::read_matrix("/nonexistent/matrix.txt"); }) == ErrorKind::Parse);
}

TEST_CASE("17-digit output round-trips exactly") {
  for (std::uint64_t i = 0; i < 500; ++i) {
    const Matrix m = sample_one(2 + i % 8, 13, i).entries();
    std::ostringstream text, json;
    io::write_matrix(text, m);
    io::write_matrix_json(json, m);
    CHECK(io::parse_matrix(text.str()) == m);
    CHECK(io::parse_matrix(json.str()) == m);
  }
}

TEST_CASE("spectrum JSON parses back") {
  const Spectrum s = spectrum_of_matrix(Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  std::ostringstream os;
  io::write_spectrum_json(os, s);
  const auto doc = nlohmann::json::parse(os.str());
  REQUIRE(doc["values"].size() == 3);
  for (std::size_t k = 0; k < 3; ++k) {
    const Complex z{doc["values"][k]["re"].get<double>(), doc["values"][k]["im"].get<double>()};
    CHECK(z == s.values[k]);
  }
  CHECK(doc["trivial_included"].is_boolean());
}

TEST_CASE("reduction JSON parses back") {
  const auto m = validate_monotone(validate_stochastic(
      Matrix::from_rows({{0.3, 0.7, 0.0}, {0.2, 0.7, 0.1}, {0.1, 0.7, 0.2}})));
  const auto r = reduce(m);
  std::ostringstream os;
  io::write_reduction_json(os, r);
  const auto doc = nlohmann::json::parse(os.str());
  CHECK(doc["dominance"]["n"] == 2);
  REQUIRE(doc["blocks"].size() == 1);
  const auto& blk = doc["blocks"][0];
  CHECK(blk["r"].get<double>() == r.blocks[0].r);
  CHECK(blk["degenerate"] == false);
  CHECK(blk["S"]["rows"].size() == 2);
  CHECK(doc["lambda_map"].size() == 2);
  CHECK(doc["nontrivial_spectrum"].size() == 2);
  CHECK(doc["degenerate"].empty());

  const auto flat = reduce(validate_monotone(validate_stochastic(Matrix::from_rows({{0.5, 0.5}, {0.5, 0.5}}))));
  std::ostringstream fs;
  io::write_reduction_json(fs, flat);
  const auto fdoc = nlohmann::json::parse(fs.str());
  CHECK(fdoc["blocks"][0]["S"].is_null());
  CHECK(fdoc["degenerate"].size() == 1);
}
