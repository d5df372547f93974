#pragma once

#include <string>
#include <string_view>

#include "splitplane/double_number.hpp"

namespace splitplane {

/// Canonical text form "t+xj" / "t-xj" using the shortest round-trip
/// representation of each component.
std::string to_string(const DoubleNumber& h);

/// Accepts the canonical text form (also "3j", "j", "-j", "2", "1+j") and
/// the JSON object form {"t": number, "x": number}.
DoubleNumber parse_double_number(std::string_view text);

/// Shortest representation that parses back to the same double.
std::string format_shortest(double v);

/// Fixed 17-significant-digit representation used by every export writer.
std::string format_fixed17(double v);

}  // namespace splitplane
