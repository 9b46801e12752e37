#include "kspectral/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>

#include "kspectral/errors.hpp"

namespace kspectral {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::MalformedInput, what); }

Json complex_pair(cplx c) { return Json::array({c.real(), c.imag()}); }

double finite_number(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) malformed(std::string(what) + " must be finite");
  return x;
}

Json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    malformed(path + ": " + e.what());
  }
}

// JSON has no infinity; infinite values are written as null.
Json number_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

}  // namespace

Json matrix_to_json(const Matrix& A) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < A.cols(); ++j) row.push_back(complex_pair(A(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"dim", A.rows()}, {"rows", std::move(rows)}};
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_object()) malformed("matrix must be a JSON object");
  if (!j.contains("dim") || !j["dim"].is_number_integer()) malformed("matrix needs an integer \"dim\"");
  const auto dim = j["dim"].get<long long>();
  if (dim < 1) malformed("matrix dim must be positive");
  if (!j.contains("rows") || !j["rows"].is_array()) malformed("matrix needs a \"rows\" array");
  const Json& rows = j["rows"];
  if (static_cast<long long>(rows.size()) != dim) malformed("matrix needs dim rows");
  Matrix A(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const Json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<long long>(row.size()) != dim) malformed("each row needs dim entries");
    for (long long k = 0; k < dim; ++k) {
      const Json& entry = row[static_cast<std::size_t>(k)];
      if (!entry.is_array() || entry.size() != 2) malformed("matrix entries are [re, im] pairs");
      A(i, k) = {finite_number(entry[0], "real part"), finite_number(entry[1], "imaginary part")};
    }
  }
  return A;
}

Matrix read_matrix_file(const std::string& path) { return matrix_from_json(parse_file(path)); }

Json function_to_json(const LaurentFunction& f) {
  Json out = Json::array();
  for (int k = f.k_min(); k <= f.k_max(); ++k) {
    const cplx c = f.coeff(k);
    out.push_back(Json::array({k, c.real(), c.imag()}));
  }
  return out;
}

LaurentFunction function_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) malformed("function must be a non-empty array of [k, re, im] triples");
  int lo = std::numeric_limits<int>::max();
  int hi = std::numeric_limits<int>::min();
  std::vector<std::pair<int, cplx>> terms;
  for (const Json& t : j) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer()) malformed("terms are [k, re, im] triples");
    const int k = t[0].get<int>();
    lo = std::min(lo, k);
    hi = std::max(hi, k);
    terms.emplace_back(k, cplx{finite_number(t[1], "real part"), finite_number(t[2], "imaginary part")});
  }
  std::vector<cplx> coeffs(static_cast<std::size_t>(hi - lo + 1));
  for (const auto& [k, c] : terms) coeffs[static_cast<std::size_t>(k - lo)] += c;
  return LaurentFunction(lo, std::move(coeffs));
}

LaurentFunction read_function_file(const std::string& path) { return function_from_json(parse_file(path)); }

std::string_view class_name(OperatorClass cls) { return cls == OperatorClass::Quantum ? "Quantum" : "Numerical"; }

Json to_json(const ClassReport& report) {
  return Json{{"op_norm", report.op_norm},
              {"inv_op_norm", number_or_null(report.inv_op_norm)},
              {"num_radius", report.num_radius},
              {"inv_num_radius", number_or_null(report.inv_num_radius)},
              {"quantum_member", report.quantum_member},
              {"numerical_member", report.numerical_member},
              {"quantum_margin", number_or_null(report.quantum_margin)},
              {"numerical_margin", number_or_null(report.numerical_margin)}};
}

Json to_json(const BoundReport& report) {
  return Json{{"gamma", complex_pair(report.gamma)},
              {"gamma1", complex_pair(report.gamma1)},
              {"c1", complex_pair(report.c1)},
              {"c2", complex_pair(report.c2)},
              {"a", report.a},
              {"b", report.b},
              {"k_upper_eq10", report.k_upper_eq10},
              {"k_upper_closed", report.k_upper_closed},
              {"class_used", class_name(report.class_used)}};
}

Json to_json(const SearchResult& result) {
  return Json{{"k_lower", result.k_lower},
              {"best_f", function_to_json(result.best_f)},
              {"iterations_used", result.iterations_used},
              {"seed", result.seed}};
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buffer[32];
  for (int precision = 1; precision <= 17; ++precision) {
    std::snprintf(buffer, sizeof buffer, "%.*g", precision, x);
    if (std::strtod(buffer, nullptr) == x) break;
  }
  return buffer;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows) {
  out << kScanHeader << '\n';
  for (const auto& row : rows) {
    out << format_double(row.R) << ',' << row.dim << ',' << row.index << ',' << class_name(row.cls) << ','
        << format_double(row.k_lower) << ',' << format_double(row.a) << ',' << format_double(row.b) << ','
        << format_double(row.k_upper_eq10) << ',' << format_double(row.k_upper_closed) << ','
        << format_double(row.quantum_margin) << ',' << format_double(row.numerical_margin) << ',' << row.status
        << '\n';
  }
}

}  // namespace kspectral
