#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace analogcast::text {

std::vector<std::string> split(std::string_view s, char sep);
std::string trim(std::string_view s);
std::optional<double> parse_double(std::string_view s);
std::optional<std::int64_t> parse_int(std::string_view s);

// Shortest representation that round-trips to the same double.
std::string format_double(double v);

} // namespace analogcast::text
