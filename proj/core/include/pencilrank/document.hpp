#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "pencilrank/errors.hpp"
#include "pencilrank/pencil.hpp"
#include "pencilrank/polynomial_ranks.hpp"

namespace pencilrank {

// Text format, one item per line, '#' starts a comment line:
//
//   pencil <m> <n>
//   entries rational|float        (default rational)
//   tolerance <t>                 (optional)
//   degree <d>                    (optional, number of coefficients, default 2)
//   A
//   <m rows of n entries>
//   B
//   <m rows of n entries>
//   A3 ... A<d>                   (when d > 2)
//
// Rational entries are integers or p/q; float entries are decimals. Comment lines are kept only
// before the header; writing a parsed document reproduces its tokens.

class DocumentError : public InputError {
 public:
  DocumentError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

enum class EntryMode { rational, floating };

struct PencilDocument {
  int m = 0;
  int n = 0;
  EntryMode mode = EntryMode::rational;
  std::optional<double> tolerance;
  std::string tolerance_text;  // as written; regenerated when empty
  std::vector<std::string> comments;  // leading comment lines, without '#'
  /// tokens[k][i][j]: entry (i, j) of coefficient k as written.
  std::vector<std::vector<std::vector<std::string>>> tokens;

  int degree() const { return static_cast<int>(tokens.size()); }
  /// Exact value; decimal text is converted exactly.
  MatrixQ coefficient(int k) const;
  Eigen::MatrixXd coefficient_float(int k) const;
  /// Requires degree 2.
  Pencil pencil() const;
  FloatPencil float_pencil(double default_tolerance = 1e-8) const;
  MatrixPolynomial polynomial() const;

  static PencilDocument from_pencil(const Pencil& p);
  static PencilDocument from_float(const FloatPencil& p);
  static PencilDocument from_polynomial(const MatrixPolynomial& p);
};

/// Coefficient section names: A, B, A3, A4, ...
std::string section_name(int k);

PencilDocument parse_document(const std::string& text);
PencilDocument read_document(std::istream& in);
std::string write_document(const PencilDocument& doc);

}  // namespace pencilrank
