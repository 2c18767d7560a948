#ifndef EKLOC_CYC_MATRIX_HPP
#define EKLOC_CYC_MATRIX_HPP

#include <vector>

#include "ekloc/cyclotomic.hpp"

namespace ekloc {

/** Dense matrix over the cyclotomic numbers; all arithmetic is exact. */
class CycMatrix {
 public:
  CycMatrix() : _rows(0), _cols(0) {}
  CycMatrix(int rows, int cols) : _rows(rows), _cols(cols), _a(rows * cols) {}

  static CycMatrix identity(int n);

  int rows() const { return _rows; }
  int cols() const { return _cols; }
  Cyclotomic& at(int i, int j) { return _a[i * _cols + j]; }
  const Cyclotomic& at(int i, int j) const { return _a[i * _cols + j]; }

  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix scaled(const Cyclotomic& c) const;
  CycMatrix pow(long e) const;
  Cyclotomic trace() const;

  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }
  bool is_identity() const;

  std::string to_string() const;

 private:
  int _rows, _cols;
  std::vector<Cyclotomic> _a;
};

/** Row rank by exact Gaussian elimination. */
int mat_rank(CycMatrix a);

/** Basis of the right nullspace {v : A v = 0}, as columns of the result. */
CycMatrix mat_nullspace(const CycMatrix& a);

/**
 * The unique X with A X = B for A of full column rank; throws if the system
 * is inconsistent or underdetermined.
 */
CycMatrix mat_solve(const CycMatrix& a, const CycMatrix& b);

/** Horizontal stack [A | B]. */
CycMatrix mat_hstack(const CycMatrix& a, const CycMatrix& b);
/** Vertical stack [A ; B]. */
CycMatrix mat_vstack(const CycMatrix& a, const CycMatrix& b);

}  // namespace ekloc

#endif
