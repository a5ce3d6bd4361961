#pragma once

#include <string_view>
#include <vector>

#include "pfmsf/pfaffian.hpp"
#include "pfmsf/poly.hpp"

namespace pfmsf {

enum class EntryRing { kRational, kPolynomial };

enum class MatrixLayout {
  kColoured,         // "n p q" then blocks a, b, c
  kAlternating,      // "full 2m"
  kAntiAlternating,  // "anti 2n"
};

/// Contents of a matrix file. Rational entries are stored as constant
/// polynomials.
struct MatrixFile {
  MatrixLayout layout = MatrixLayout::kColoured;
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t q = 0;
  Matrix<MultiPoly> a;  // coloured: the p x q block; otherwise the full matrix
  std::vector<MultiPoly> b_upper;
  std::vector<MultiPoly> c_upper;
};

/// Line-oriented format. Blank lines and lines starting with '#' are skipped.
///
///   n p q          full 2m          anti 2n
///   a              <2m rows>        <2n rows>
///   <p rows of q>
///   b
///   <p-1 rows, row i holding b[i,i+1..p]>
///   c
///   <q-1 rows, row j holding c[j,j+1..q]>
///
/// Block labels may be left out for empty blocks. Throws ParseError with
/// line and column for malformed text and ShapeError for inconsistent sizes.
MatrixFile parse_matrix_file(std::string_view text, EntryRing ring);

/// The alternating matrix whose Pfaffian the file denotes: X J for coloured
/// and anti-alternating input, the matrix itself for "full". Throws
/// ShapeError naming the first offending cell.
AlternatingMatrix<MultiPoly> alternating_from_file(const MatrixFile& file);

/// Same, with every entry required to be constant.
AlternatingMatrix<Rational> rational_alternating_from_file(const MatrixFile& file);

}  // namespace pfmsf
