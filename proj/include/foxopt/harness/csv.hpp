#pragma once

#include <string>
#include <vector>

namespace foxopt::harness {

/// Shortest-exact formatting: the printed text parses back to the identical
/// double, which keeps persisted tables recomputable bit-for-bit.
std::string format_double(double v);

/// strtod without the out_of_range throw std::stod adds: subnormal readings
/// are legitimate values in converged traces.
double parse_double(const std::string& text);

std::vector<std::string> split_csv_line(const std::string& line);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

CsvTable read_csv(const std::string& path);

} // namespace foxopt::harness
