#pragma once

#include <string>
#include <vector>

#include "troploc/location.hpp"
#include "troploc/spectral.hpp"

namespace troploc::io {

/// Fixed 12-significant-digit rendering used for every number the tool
/// emits, so repeated runs are byte-identical.
std::string format_number(double v);

/// Instance document: {"dimension": n, "points": [[...], ...],
/// "weights": [...]?, "caps": [...]?}.  Throws ParseError naming the
/// offending key; the result is already validated.
LocationInstance parse_instance(const std::string& text);
LocationInstance load_instance(const std::string& path);

/// Matrix document: array of rows; entries are numbers or the string
/// "-inf" for the bottom element.
TropMatrix parse_matrix(const std::string& text);
TropMatrix load_matrix(const std::string& path);

std::string solution_json(const LocationSolution& sol,
                          const std::vector<SegmentSample>* samples);
std::string spectral_json(const SpectralResult& result, bool include_cross);
std::string samples_csv(const std::vector<SegmentSample>& samples,
                        bool header);

}  // namespace troploc::io
