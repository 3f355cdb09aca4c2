#pragma once

#include <string>

#include "cml/measure_sum.hpp"

namespace cml {

/// Parses the shared measure description format:
/// {"atoms": [{"p","q","re_num","re_den","im_num","im_den"}, ...],
///  "float_atoms": [{"angle","re","im","err"}, ...],
///  "trigpoly": [{"n","re_num","re_den","im_num","im_den"}, ...],
///  "riesz": [<riesz spec>, ...]}
/// All sections are optional; a missing section is empty.
MeasureSum measure_from_json_text(const std::string& text);

/// Parses a Riesz product spec:
/// {"base": {"kind":"power","b":4,"K":13} | {"kind":"list","terms":[...]},
///  "coeffs": {"kind":"constant","num","den"} | {"kind":"indicator","indices",["infinite"]}
///          | {"kind":"list","values":[{"num","den"},...]}
///          | {"kind":"geometric","first_num","first_den","ratio_num","ratio_den"},
///  "K": <truncation>}
RieszProductSpec riesz_spec_from_json_text(const std::string& text);

std::string measure_to_json_text(const MeasureSum& m);

}  // namespace cml
