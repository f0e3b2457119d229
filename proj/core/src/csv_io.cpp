#include "nfw/csv_io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace nfw {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool parse_double(const std::string& text, double& out) {
  const std::string t = trim(text);
  if (t.empty()) return false;
  char* end = nullptr;
  errno = 0;
  out = std::strtod(t.c_str(), &end);
  return errno == 0 && end == t.c_str() + t.size() && std::isfinite(out);
}

bool parse_row(const std::string& line, std::vector<double>& fields) {
  fields.clear();
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    double v = 0.0;
    if (!parse_double(cell, v)) return false;
    fields.push_back(v);
  }
  return !fields.empty();
}

// True when no cell of the row parses as a number.
bool is_header(const std::string& line) {
  std::stringstream ss(line);
  std::string cell;
  double v = 0.0;
  while (std::getline(ss, cell, ',')) {
    if (parse_double(cell, v)) return false;
  }
  return true;
}

// Calls fn(line_number, fields) for each data row; an all-text first row is a header.
template <class Fn>
void for_each_row(std::istream& in, const std::string& source, Fn fn) {
  std::string line;
  std::size_t number = 0;
  bool first = true;
  std::vector<double> fields;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    if (!parse_row(line, fields)) {
      if (first && is_header(line)) {
        first = false;
        continue;
      }
      throw CsvError(source, number, "cannot parse '" + trim(line) + "'");
    }
    first = false;
    fn(number, fields);
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CsvError(path, 0, "cannot open file");
  return in;
}

bool is_integral(double x) { return x == std::round(x); }

}  // namespace

CsvError::CsvError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? source + ": " + what : source + ":" + std::to_string(line) + ": " + what),
      line_(line) {}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

NodeSet read_nodes(std::istream& in, const std::string& source) {
  NodeSet nodes;
  for_each_row(in, source, [&](std::size_t line, const std::vector<double>& f) {
    if (f.size() != 1) throw CsvError(source, line, "expected one value per line");
    if (!(f[0] >= -0.5 && f[0] < 0.5)) {
      throw CsvError(source, line, "node " + format_double(f[0]) + " outside [-1/2, 1/2)");
    }
    nodes.nodes.push_back(f[0]);
  });
  return nodes;
}

TrigPolynomial read_coefficients(std::istream& in, int N, const std::string& source) {
  TrigPolynomial poly = TrigPolynomial::zeros(N);
  std::vector<bool> seen(static_cast<std::size_t>(N), false);
  for_each_row(in, source, [&](std::size_t line, const std::vector<double>& f) {
    if (f.size() != 3) throw CsvError(source, line, "expected k,re,im");
    if (!is_integral(f[0]) || f[0] < -N / 2 || f[0] >= N / 2) {
      throw CsvError(source, line, "index " + format_double(f[0]) + " outside I_N");
    }
    const auto k = static_cast<std::int64_t>(f[0]);
    const auto slot = static_cast<std::size_t>(k + N / 2);
    if (seen[slot]) throw CsvError(source, line, "duplicate index " + std::to_string(k));
    seen[slot] = true;
    poly.coeff(k) = Complex(f[1], f[2]);
  });
  return poly;
}

std::vector<Complex> read_values(std::istream& in, const std::string& source) {
  std::vector<Complex> values;
  std::vector<std::pair<std::int64_t, Complex>> indexed;
  int columns = 0;
  for_each_row(in, source, [&](std::size_t line, const std::vector<double>& f) {
    if (f.size() != 2 && f.size() != 3) throw CsvError(source, line, "expected j,re,im or re,im");
    if (columns == 0) columns = static_cast<int>(f.size());
    if (static_cast<int>(f.size()) != columns) throw CsvError(source, line, "inconsistent column count");
    if (columns == 2) {
      values.emplace_back(f[0], f[1]);
      return;
    }
    if (!is_integral(f[0]) || f[0] < 0) throw CsvError(source, line, "index must be a nonnegative integer");
    indexed.emplace_back(static_cast<std::int64_t>(f[0]), Complex(f[1], f[2]));
  });
  if (columns == 3) {
    values.assign(indexed.size(), Complex(0.0, 0.0));
    std::vector<bool> seen(indexed.size(), false);
    for (const auto& [j, v] : indexed) {
      if (j >= static_cast<std::int64_t>(indexed.size()) || seen[static_cast<std::size_t>(j)]) {
        throw CsvError(source, 0, "indices must be 0 .. M-1, each exactly once");
      }
      seen[static_cast<std::size_t>(j)] = true;
      values[static_cast<std::size_t>(j)] = v;
    }
  }
  return values;
}

void write_values(std::ostream& out, const std::vector<Complex>& values) {
  out << "j,re,im\n";
  for (std::size_t j = 0; j < values.size(); ++j) {
    out << j << ',' << format_double(values[j].real()) << ',' << format_double(values[j].imag()) << '\n';
  }
}

void write_coefficients(std::ostream& out, const std::vector<Complex>& coeffs) {
  const auto half = static_cast<std::int64_t>(coeffs.size() / 2);
  out << "k,re,im\n";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out << static_cast<std::int64_t>(i) - half << ',' << format_double(coeffs[i].real()) << ','
        << format_double(coeffs[i].imag()) << '\n';
  }
}

NodeSet read_nodes_file(const std::string& path) {
  auto in = open_input(path);
  return read_nodes(in, path);
}

TrigPolynomial read_coefficients_file(const std::string& path, int N) {
  auto in = open_input(path);
  return read_coefficients(in, N, path);
}

std::vector<Complex> read_values_file(const std::string& path) {
  auto in = open_input(path);
  return read_values(in, path);
}

}  // namespace nfw
