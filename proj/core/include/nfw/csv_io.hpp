#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "nfw/transform.hpp"

namespace nfw {

class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& source, std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// %.17g.
std::string format_double(double x);

// One node per line, optional header, each in [-1/2, 1/2).
NodeSet read_nodes(std::istream& in, const std::string& source = "nodes");
// Lines "k,re,im" with k in I_N; absent k are zero.
TrigPolynomial read_coefficients(std::istream& in, int N, const std::string& source = "coefficients");
// Lines "j,re,im" (j = 0 .. M-1, each once) or "re,im" in order.
std::vector<Complex> read_values(std::istream& in, const std::string& source = "values");

// "j,re,im" with j = 0 .. M-1.
void write_values(std::ostream& out, const std::vector<Complex>& values);
// "k,re,im" for k = -N/2 .. N/2-1; values in natural order.
void write_coefficients(std::ostream& out, const std::vector<Complex>& coeffs);

NodeSet read_nodes_file(const std::string& path);
TrigPolynomial read_coefficients_file(const std::string& path, int N);
std::vector<Complex> read_values_file(const std::string& path);

}  // namespace nfw
