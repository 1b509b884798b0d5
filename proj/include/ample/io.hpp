#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "ample/ample.hpp"
#include "ample/convexity.hpp"
#include "ample/signs.hpp"

namespace ample {

// Input error with the 1-based line it occurred on.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Family text format: one vector per line, characters '+', '-' (leftmost
// character = coordinate 0); blank lines and lines starting with '#' are
// ignored. All vectors must have the same length.
SignFamily parse_family(std::string_view text);
SignFamily load_family(const std::string& path);
std::string format_family(const SignFamily& L);

// Point cloud formats: CSV (one point per row, n columns) and a JSON array
// of arrays of numbers.
PointCloud parse_cloud_csv(std::string_view text);
PointCloud parse_cloud_json(std::string_view text);
// Dispatches on the ".json" extension, CSV otherwise.
PointCloud load_cloud(const std::string& path);

// DOT renderings (byte-stable): the 1-skeleton G(L) with edges between
// vertices at l1-distance 2, and the grid graph on Baryc(L) with unit edges.
std::string dot_skeleton(const SignFamily& L);
std::string dot_barycentric(const SignFamily& L);

// The JSON report for a cross-check:
// { "n", "family", "verdicts", "witnesses", "agree", "dress_pajor",
//   "vc_dimension" }.
std::string report_json(const SignFamily& L, const CharacterizationReport& report);

}  // namespace ample
