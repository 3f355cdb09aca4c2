#pragma once

// Internal JSON plumbing shared by json_io.cpp and experiments.cpp. The
// vendored nlohmann header stays out of the installed public headers.

#include <json.hpp>

#include "cml/measure_sum.hpp"

namespace cml::detail {

using OrderedJson = nlohmann::ordered_json;

/// Deterministic serialization: fixed (insertion) field order, floats
/// rendered with 17 significant digits, 2-space indentation.
std::string dump_deterministic(const OrderedJson& j);

MeasureSum measure_from_json(const nlohmann::json& j);
RieszProductSpec riesz_spec_from_json(const nlohmann::json& j);

OrderedJson measure_to_json(const MeasureSum& m);

/// Rational as {"num": ..., "den": ...}; throws on out-of-range values.
Rational rational_from_json(const nlohmann::json& j, const char* num_key, const char* den_key,
                            long long default_num = 0, long long default_den = 1);

OrderedJson rational_to_json(const Rational& r);

}  // namespace cml::detail
