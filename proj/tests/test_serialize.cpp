#include <doctest.h>

#include <cmath>
#include <limits>
#include <sstream>

#include "kspectral/serialize.hpp"

using namespace kspectral;

TEST_CASE("matrix JSON round trip") {
  Matrix A(2, 2);
  A << cplx{1.0, -0.5}, 0.1, cplx{0.0, 3.0}, 1.0 / 3.0;
  const Json j = matrix_to_json(A);
  CHECK(j["dim"] == 2);
  CHECK(matrix_from_json(j) == A);
  CHECK(matrix_from_json(Json::parse(j.dump())) == A);
}

TEST_CASE("malformed matrices are rejected") {
  const char* bad[] = {
      R"({"rows": [[[1, 0]]]})",
      R"({"dim": 2, "rows": [[[1, 0]]]})",
      R"({"dim": 1, "rows": [[[1]]]})",
      R"({"dim": 1, "rows": [[["a", 0]]]})",
      R"({"dim": 0, "rows": []})",
      R"([1, 2])",
  };
  for (const char* text : bad) {
    try {
      matrix_from_json(Json::parse(text));
      FAIL("accepted " << text);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::MalformedInput);
    }
  }
  CHECK_THROWS_AS(read_matrix_file("/nonexistent/matrix.json"), Error);
}

TEST_CASE("function JSON round trip") {
  const LaurentFunction f({{-2, cplx{0.5, 1.0}}, {1, -2.0}});
  const Json j = function_to_json(f);
  CHECK(function_from_json(j) == f);
  CHECK_THROWS_AS(function_from_json(Json::parse("[[1, 2]]")), Error);
}

TEST_CASE("class report keeps infinities as null") {
  Matrix A = Matrix::Zero(2, 2);
  A(0, 0) = 1.0;
  const Json j = to_json(classify(A, 2.0));
  CHECK(j["inv_op_norm"].is_null());
  CHECK(j["quantum_member"] == false);
}

TEST_CASE("format_double round trips") {
  for (double x : {0.1, 1.0 / 3.0, 2.18322, 1e-300, 123456789.0, -0.0}) {
    CHECK(std::strtod(format_double(x).c_str(), nullptr) == x);
  }
  CHECK(format_double(2.0) == "2");
}

TEST_CASE("scan CSV header and row count") {
  std::vector<ScanRow> rows(2, ScanRow{2.0, 2, 0, OperatorClass::Quantum, 1.0, 0.5, 0.25, 1.5, 2.18, 0.1, 0.2, "ok"});
  rows[1].index = 1;
  std::ostringstream out;
  write_scan_csv(out, rows);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == kScanHeader);
  std::getline(in, line);
  CHECK(line == "2,2,0,Quantum,1,0.5,0.25,1.5,2.18,0.1,0.2,ok");
}
