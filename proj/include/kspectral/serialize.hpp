#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "kspectral/bounds.hpp"
#include "kspectral/classes.hpp"
#include "kspectral/functions.hpp"
#include "kspectral/search.hpp"

namespace kspectral {

using Json = nlohmann::ordered_json;

// Matrix interchange: {"dim": d, "rows": [[[re, im], ...], ...]}
Json matrix_to_json(const Matrix& A);
/// Throws MalformedInput on any schema violation.
Matrix matrix_from_json(const Json& j);
Matrix read_matrix_file(const std::string& path);

// Laurent coefficients: [[k, re, im], ...]
Json function_to_json(const LaurentFunction& f);
LaurentFunction function_from_json(const Json& j);
LaurentFunction read_function_file(const std::string& path);

std::string_view class_name(OperatorClass cls);

Json to_json(const ClassReport& report);
Json to_json(const BoundReport& report);
Json to_json(const SearchResult& result);

inline constexpr std::string_view kScanHeader =
    "R,dim,index,class,k_lower,a,b,k_upper_eq10,k_upper_closed,quantum_margin,numerical_margin,status";

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

void write_scan_csv(std::ostream& out, const std::vector<ScanRow>& rows);

}  // namespace kspectral
