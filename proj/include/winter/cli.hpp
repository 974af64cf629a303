#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace winter::cli {

struct SpectrumRow {
    double z = 0.0;
    std::string label;
    double k = 0.0;
    std::string method;

    friend bool operator==(const SpectrumRow&, const SpectrumRow&) = default;
};

struct CompareRow {
    double z = 0.0;
    int order = 0;
    double percent_error = 0.0;

    friend bool operator==(const CompareRow&, const CompareRow&) = default;
};

// steps points from z_min to z_max. A point that is exactly zero (decided on the
// decimal strings, not on rounded doubles) is moved to half a step above zero.
std::vector<double> make_z_grid(const std::string& z_min, const std::string& z_max, int steps);

// Re-read the "rows" array of a JSON document written by the spectrum / compare commands.
std::vector<SpectrumRow> parse_spectrum_json(const std::string& text);
std::vector<CompareRow> parse_compare_json(const std::string& text);

// Runs one command line (without the program name). Output goes to `out` unless
// --output names a file. Exit codes: 0 ok, 2 configuration error, 3 numerical failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace winter::cli
