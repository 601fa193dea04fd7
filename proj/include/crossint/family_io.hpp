#pragma once

#include <iosfwd>
#include <string>

#include "crossint/set_family.hpp"

namespace crossint {

/// Text format: first line "n=<int> k=<int>", then one member per line as
/// comma-separated ascending elements, members in lexicographic order.
/// Round-trips exactly.
std::string family_to_text(const SetFamily& family);
SetFamily family_from_text(const std::string& text);
SetFamily family_from_stream(std::istream& in);
SetFamily family_from_file(const std::string& path);
void family_to_file(const SetFamily& family, const std::string& path);

}  // namespace crossint
