#pragma once

#include "json.hpp"

#include "cyl/diagnostics.hpp"
#include "cyl/sgh.hpp"

namespace cyl {

using Json = nlohmann::json;

/// {num, den}; int64 values where they fit, decimal strings beyond that.
Json rational_to_json(const Rational& r);
Json bigint_to_json(const BigInt& n);
Json complex_rational_to_json(const ComplexRational& z);
Json grid_to_json(const CylinderGrid& g);

/// {verdict, method, witness|null, gap|null, normal_form|null, notes[]}.
Json sgh_report_to_json(const SghReport& r);

/// {type, N, beta, C, argmax_k, argmax_xi_index, grid}. The two argmax
/// fields always hold (row, column); for torus certificates the column is
/// an x index and for line certificates the row is a t index.
Json certificate_to_json(const DecayCertificate& c);

} // namespace cyl
