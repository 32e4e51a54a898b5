#include "alpharm/io.hpp"

#include <charconv>
#include <climits>
#include <cmath>
#include <complex>
#include <fstream>
#include <map>
#include <numbers>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace alpharm {

namespace {

using nlohmann::json;

constexpr double kThetaGridTol = 1e-9;

[[noreturn]] void fail(const std::string& what) { throw IoError(what); }

// Fields may be labels we generate (plain ASCII) but quote defensively.
std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out += "\"";
  return out;
}

void require_keys(const json& obj, std::initializer_list<const char*> keys,
                  const char* where) {
  for (const char* k : keys)
    if (!obj.contains(k))
      fail(std::string(where) + ": missing key \"" + k + "\"");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known)
      fail(std::string(where) + ": unknown key \"" + item.key() + "\"");
  }
}

double number_field(const json& obj, const char* key, const char* where) {
  const json& v = obj.at(key);
  if (!v.is_number())
    fail(std::string(where) + ": \"" + key + "\" must be a number");
  return v.get<double>();
}

int int_field(const json& obj, const char* key, const char* where) {
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    fail(std::string(where) + ": \"" + key + "\" must be an integer");
  const long long raw = v.get<long long>();
  if (raw < INT_MIN || raw > INT_MAX)
    fail(std::string(where) + ": \"" + key + "\" out of range");
  return static_cast<int>(raw);
}

double parse_field_double(const std::string& field, int line_no) {
  double out = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [p, ec] = std::from_chars(first, last, out);
  if (ec != std::errc() || p != last)
    fail("boundary csv: line " + std::to_string(line_no) +
         ": malformed number \"" + field + "\"");
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

SeriesSolution parse_solution_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(std::string("solution json: ") + e.what());
  }
  if (!doc.is_object()) fail("solution json: top level must be an object");
  require_keys(doc, {"alpha", "order", "coeffs"}, "solution json");
  const double alpha = number_field(doc, "alpha", "solution json");
  const int order = int_field(doc, "order", "solution json");
  const json& arr = doc.at("coeffs");
  if (!arr.is_array()) fail("solution json: \"coeffs\" must be an array");

  std::map<int, std::complex<double>> coeffs;
  for (const json& entry : arr) {
    if (!entry.is_object())
      fail("solution json: coefficient entries must be objects");
    require_keys(entry, {"k", "re", "im"}, "solution json coeff");
    const int k = int_field(entry, "k", "solution json coeff");
    if (coeffs.count(k))
      fail("solution json: duplicate coefficient k=" + std::to_string(k));
    if (std::abs(k) > order)
      fail("solution json: coefficient k=" + std::to_string(k) +
           " outside order " + std::to_string(order));
    coeffs[k] = {number_field(entry, "re", "solution json coeff"),
                 number_field(entry, "im", "solution json coeff")};
  }
  return SeriesSolution(alpha, order, coeffs);
}

SeriesSolution load_solution(const std::string& path) {
  return parse_solution_json(read_text_file(path));
}

std::string solution_to_json(const SeriesSolution& sol) {
  std::string out = "{\"alpha\": " + format_double(sol.alpha()) +
                    ", \"order\": " + std::to_string(sol.order()) +
                    ", \"coeffs\": [";
  bool first = true;
  for (int k = -sol.order(); k <= sol.order(); ++k) {
    const std::complex<double> c = sol.coeff(k);
    if (c == std::complex<double>{0.0, 0.0}) continue;
    if (!first) out += ", ";
    first = false;
    out += "{\"k\": " + std::to_string(k) +
           ", \"re\": " + format_double(c.real()) +
           ", \"im\": " + format_double(c.imag()) + "}";
  }
  out += "]}\n";
  return out;
}

BoundaryData parse_boundary_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail("boundary csv: empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "theta,re,im")
    fail("boundary csv: header must be exactly \"theta,re,im\"");

  std::vector<double> thetas;
  std::vector<std::complex<double>> samples;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;  // tolerate a trailing blank line
    const size_t c1 = line.find(',');
    const size_t c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        line.find(',', c2 + 1) != std::string::npos)
      fail("boundary csv: line " + std::to_string(line_no) +
           ": expected three comma-separated fields");
    thetas.push_back(parse_field_double(line.substr(0, c1), line_no));
    samples.emplace_back(
        parse_field_double(line.substr(c1 + 1, c2 - c1 - 1), line_no),
        parse_field_double(line.substr(c2 + 1), line_no));
  }

  const int n = static_cast<int>(samples.size());
  for (int j = 0; j < n; ++j) {
    const double want = 2.0 * std::numbers::pi * j / n;
    if (std::fabs(thetas[static_cast<size_t>(j)] - want) > kThetaGridTol)
      fail("boundary csv: row " + std::to_string(j + 1) +
           ": theta off the uniform grid (want " + format_double(want) + ")");
  }
  return BoundaryData(std::move(samples));
}

BoundaryData load_boundary(const std::string& path) {
  return parse_boundary_csv(read_text_file(path));
}

std::string report_to_json_line(const BoundReport& r) {
  return "{\"label\": \"" + json_escape(r.label) +
         "\", \"lhs\": " + format_double(r.lhs) +
         ", \"rhs\": " + format_double(r.rhs) +
         ", \"slack\": " + format_double(r.slack) +
         ", \"satisfied\": " + (r.satisfied ? "true" : "false") + "}\n";
}

std::string report_csv_header() { return "label,lhs,rhs,slack,satisfied\n"; }

std::string report_to_csv_row(const BoundReport& r) {
  return csv_quote(r.label) + "," + format_double(r.lhs) + "," +
         format_double(r.rhs) + "," + format_double(r.slack) + "," +
         (r.satisfied ? "true" : "false") + "\n";
}

std::string landau_to_json(const LandauResult& r) {
  return "{\"gamma0\": " + format_double(r.gamma0) +
         ", \"mstar\": " + format_double(r.mstar) +
         ", \"rho0\": " + format_double(r.rho0) +
         ", \"r0_lower\": " + format_double(r.r0_lower) +
         ", \"univalence_radius\": " + format_double(r.univalence_radius) +
         ", \"covering_radius\": " + format_double(r.covering_radius) + "}\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) fail("read failure: " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail("cannot open file for writing: " + path);
  out << content;
  out.flush();
  if (!out) fail("write failure: " + path);
}

}  // namespace alpharm
