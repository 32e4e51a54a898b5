#pragma once

#include <stdexcept>
#include <string>

#include "alpharm/bounds.hpp"
#include "alpharm/landau.hpp"
#include "alpharm/solution.hpp"

namespace alpharm {

// Input and parse failures, kept distinct from std::domain_error so the CLI
// can map them onto separate exit codes.  Numeric preconditions inside
// parsed values (say alpha <= -1 in an otherwise well-formed document) still
// surface as domain errors.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Shortest decimal string that parses back to exactly the same double.
// Every writer below goes through this, which is what makes repeated runs
// byte-identical.
std::string format_double(double v);

// Solution document:
//   {"alpha": <number>, "order": <int>, "coeffs": [{"k": <int>, "re":
//   <number>, "im": <number>}, ...]}
// Keys are exactly these; unknown or missing keys, wrong types, duplicate k
// entries, or |k| > order are rejected.  Indices absent from the array get a
// zero coefficient.
SeriesSolution parse_solution_json(const std::string& text);
SeriesSolution load_solution(const std::string& path);
std::string solution_to_json(const SeriesSolution& sol);

// Boundary samples as CSV with header "theta,re,im" and one row per uniform
// node theta_j = 2 pi j / n, j = 0..n-1 in order (checked to 1e-9; n >= 16).
BoundaryData parse_boundary_csv(const std::string& text);
BoundaryData load_boundary(const std::string& path);

// BoundReport streams as JSON lines or CSV rows with identical field order.
std::string report_to_json_line(const BoundReport& r);
std::string report_csv_header();
std::string report_to_csv_row(const BoundReport& r);

std::string landau_to_json(const LandauResult& r);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace alpharm
