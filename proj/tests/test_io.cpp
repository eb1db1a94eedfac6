#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fixtures.hpp"
#include "helpers.hpp"
#include "sbd/commutant.hpp"
#include "sbd/errors.hpp"
#include "sbd/io.hpp"
#include "sbd/verify.hpp"

using sbd::cd;
using sbd::Matrix;

namespace {

const char* kIntroJson = R"({
  "n": 3,
  "matrices": [
    {"name": "A1", "re": [[1,0,0],[2,2,0],[1,1,1]]},
    {"name": "A2", "re": [[0,0,0],[2,1,0],[0,1,0]]}
  ]
})";

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name, const std::string& content)
      : path(std::string("sbd_io_test_") + name) {
    std::ofstream out(path, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("parsing a real pair applies zero imaginary parts") {
  TempFile f("intro.json", kIntroJson);
  const sbd::NamedSet set = sbd::parse_matrix_set(f.path);
  CHECK(set.n == 3);
  REQUIRE(set.mats.size() == 2);
  CHECK(set.names[0] == "A1");
  CHECK((set.mats[0] - fixtures::pair_bd21()[0]).max_abs() == 0.0);
  CHECK((set.mats[1] - fixtures::pair_bd21()[1]).max_abs() == 0.0);
}

TEST_CASE("a 1x1 set parses but the algorithms reject it") {
  TempFile f("one.json", R"({"n": 1, "matrices": [{"name": "A", "re": [[2]]}]})");
  const sbd::NamedSet set = sbd::parse_matrix_set(f.path);
  CHECK(set.n == 1);
  CHECK_THROWS_AS(sbd::block_diagonalize_invertible(set.mats, {}, {}),
                  sbd::DimensionMismatch);
}

TEST_CASE("imaginary grids are honored") {
  TempFile f("cplx.json", R"({
    "n": 1,
    "matrices": [{"name": "z", "re": [[2]], "im": [[-3]]}]
  })");
  const sbd::NamedSet set = sbd::parse_matrix_set(f.path);
  CHECK(set.mats[0](0, 0) == cd(2, -3));
}

TEST_CASE("shape errors carry the offending field") {
  TempFile f("bad.json", R"({
    "n": 3,
    "matrices": [{"name": "A", "re": [[1,2,3],[4,5,6]]}]
  })");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f.path), sbd::DimensionMismatch);
  try {
    sbd::parse_matrix_set(f.path);
  } catch (const sbd::DimensionMismatch& e) {
    CHECK(std::string(e.what()).find("matrices[0].re") != std::string::npos);
  }
}

TEST_CASE("duplicate names are rejected") {
  TempFile f("dup.json", R"({
    "n": 1,
    "matrices": [{"name": "A", "re": [[1]]}, {"name": "A", "re": [[2]]}]
  })");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f.path), sbd::DuplicateName);
}

TEST_CASE("malformed JSON raises a parse error with context") {
  TempFile f("broken.json", "{\"n\": 3, ");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f.path), sbd::ParseError);
}

TEST_CASE("missing fields raise parse errors") {
  TempFile f1("nomat.json", R"({"n": 2})");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f1.path), sbd::ParseError);
  TempFile f2("noname.json", R"({"n": 1, "matrices": [{"re": [[1]]}]})");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f2.path), sbd::ParseError);
  TempFile f3("nan.json", R"({"n": 1, "matrices": [{"name":"A","re": [["x"]]}]})");
  CHECK_THROWS_AS(sbd::parse_matrix_set(f3.path), sbd::ParseError);
}

TEST_CASE("report serialization is deterministic and round-trips") {
  const auto omega = fixtures::pair_bd21();
  const std::vector<std::string> names = {"A1", "A2"};
  const sbd::Tolerances tol;
  const sbd::SearchConfig cfg;
  const auto report1 = sbd::block_diagonalize_invertible(omega, cfg, tol);
  const auto report2 = sbd::block_diagonalize_invertible(omega, cfg, tol);
  const std::string json1 = sbd::report_to_json(report1, names);
  const std::string json2 = sbd::report_to_json(report2, names);
  CHECK(json1 == json2);

  TempFile f("report.json", json1);
  const sbd::ParsedReport parsed = sbd::parse_report(f.path);
  CHECK(parsed.report.partition.sizes == report1.partition.sizes);
  CHECK(parsed.report.transform.unitary == report1.transform.unitary);
  CHECK((parsed.report.transform.s - report1.transform.s).max_abs() == 0.0);
  CHECK((parsed.report.transform.s_inv - report1.transform.s_inv).max_abs() ==
        0.0);
  // the round-tripped report still validates against the original set
  CHECK(sbd::validate_report(omega, parsed.report, tol).pass);
}

TEST_CASE("text rendering carries the partition and residuals") {
  const auto omega = fixtures::pair_bd21();
  const auto report =
      sbd::block_diagonalize_invertible(omega, sbd::SearchConfig{},
                                        sbd::Tolerances{});
  const std::string text = sbd::report_to_text(report, {"A1", "A2"});
  CHECK(text.find("BD(") != std::string::npos);
  CHECK(text.find("A1") != std::string::npos);
  CHECK(text.find("algorithm: C") != std::string::npos);
}
