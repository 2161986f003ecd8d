#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace edmnet {

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double v);
/// Fixed-point rendering with `places` decimals; negative zero prints as zero.
std::string format_fixed(double v, int places);

std::vector<std::string> split(std::string_view text, char sep);
std::string_view trim(std::string_view s);
bool parse_double(std::string_view text, double& out);

}  // namespace edmnet
