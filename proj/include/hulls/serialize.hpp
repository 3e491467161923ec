#pragma once

#include <string>

#include "json.hpp"

#include "hulls/code.hpp"
#include "hulls/eaqecc.hpp"
#include "hulls/field.hpp"
#include "hulls/matrix.hpp"

namespace hulls {

using nlohmann::json;

const char* distance_class_name(DistanceClass cls);
const char* form_name(Form form);

/// {p, m, modulus: [c_0 .. c_m, 1], theta: encoding}; the round trip rebuilds
/// the identical exp/log tables via the explicit constructor.
json field_to_json(const Field& f);
FieldPtr field_from_json(const json& j);

/// {rows, cols, entries: [...]} with each entry the theta exponent of a
/// nonzero element, or the string "0" for zero.
json mat_to_json(const Mat& m);
Mat mat_from_json(const FieldPtr& f, const json& j);

/// {field, gen} plus a summary block {n, k, d_class, hull_E, hull_H}. The
/// Hermitian entries are null for codes over non-quadratic fields.
json code_to_json(const LinearCode& code,
                  std::uint64_t budget = kDefaultSubsetBudget);
LinearCode code_from_json(const json& j);

json eaqecc_to_json(const EaqeccParams& p, const BoundsReport& b);
json sweep_to_json(const SweepTable& table);

/// CSV writers. Headers and rows are newline-free; callers join them.
std::string code_summary_csv_header();
std::string code_summary_csv_row(const LinearCode& code,
                                 std::uint64_t budget = kDefaultSubsetBudget);

std::string construction_csv_header();
std::string construction_csv_row(const std::string& theorem, std::uint32_t q,
                                 const LinearCode& code, DistanceClass cls,
                                 Form form, int hull, bool verified);

std::string eaqecc_csv_header();
std::string eaqecc_csv_row(const EaqeccParams& p, const BoundsReport& b);
std::string sweep_to_csv(const SweepTable& table);

}  // namespace hulls
