#include "text.hpp"

#include <fmt/format.h>

#include <cerrno>
#include <cstdlib>

#include "ringjsa/errors.hpp"

namespace ringjsa::detail {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_csv(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) {
            return out;
        }
        start = comma + 1;
    }
}

double parse_double(std::string_view field, std::size_t line, std::size_t column) {
    const std::string text = trim(field);
    if (text.empty()) {
        throw ParseError(line, fmt::format("field {} is empty", column));
    }
    // strtod rather than from_chars: it also accepts "nan", "inf" and a leading '+'.
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size() || errno == ERANGE) {
        throw ParseError(line, fmt::format("field {} ('{}') is not a number", column, text));
    }
    return value;
}

}  // namespace ringjsa::detail
