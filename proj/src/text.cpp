#include "pdem/text.hpp"

#include <charconv>
#include <cmath>

#include <fmt/format.h>

#include "pdem/errors.hpp"

namespace pdem {

std::string_view trim(std::string_view s) noexcept {
    constexpr std::string_view ws = " \t\r\n";
    const auto first = s.find_first_not_of(ws);
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(ws);
    return s.substr(first, last - first + 1);
}

double parse_number(std::string_view text) {
    const std::string_view t = trim(text);
    std::string_view digits = t;
    // from_chars rejects a leading '+'.
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (t.empty() || ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw ParseError("invalid number '" + std::string(t) + "'", 0);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite number '" + std::string(t) + "'", 0);
    }
    return value;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_number(text.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_number(double value) {
    if (std::isnan(value)) return "nan";
    if (value == 0.0) return "0";  // folds -0
    return fmt::format("{:.12g}", value);
}

}  // namespace pdem
