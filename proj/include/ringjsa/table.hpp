#pragma once

#include <string>
#include <vector>

namespace ringjsa {

/// Rectangular numeric table with named columns.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

}  // namespace ringjsa
