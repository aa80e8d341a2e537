#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace pdem {

std::string_view trim(std::string_view s) noexcept;

/// Locale-independent parse of a whole string as a finite double.
double parse_number(std::string_view text);

/// Comma-separated finite doubles, e.g. "-0.25,-0.5,-0.25".
std::vector<double> parse_number_list(std::string_view text);

/// 12 significant digits, '.' decimal point, no locale.
std::string format_number(double value);

}  // namespace pdem
