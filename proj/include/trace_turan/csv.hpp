#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace trace_turan {

/// Quotes a field if it contains a comma, quote, CR or LF; quotes are doubled.
std::string csv_field(std::string_view field);

/// Fields joined by commas, no line terminator.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace trace_turan
