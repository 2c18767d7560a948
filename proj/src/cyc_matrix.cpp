#include "ekloc/cyc_matrix.hpp"

#include <sstream>

namespace ekloc {

CycMatrix CycMatrix::identity(int n) {
  CycMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Cyclotomic(1);
  return m;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (_cols != o._rows) throw error("matrix product shape mismatch");
  CycMatrix out(_rows, o._cols);
  for (int i = 0; i < _rows; ++i)
    for (int k = 0; k < _cols; ++k) {
      const Cyclotomic& aik = at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 0; j < o._cols; ++j) {
        if (!o.at(k, j).is_zero()) out.at(i, j) += aik * o.at(k, j);
      }
    }
  return out;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  if (_rows != o._rows || _cols != o._cols) throw error("matrix sum shape mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < _a.size(); ++i) out._a[i] += o._a[i];
  return out;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  if (_rows != o._rows || _cols != o._cols) throw error("matrix difference shape mismatch");
  CycMatrix out = *this;
  for (size_t i = 0; i < _a.size(); ++i) out._a[i] -= o._a[i];
  return out;
}

CycMatrix CycMatrix::scaled(const Cyclotomic& c) const {
  CycMatrix out = *this;
  for (auto& x : out._a) x *= c;
  return out;
}

CycMatrix CycMatrix::pow(long e) const {
  if (_rows != _cols) throw error("matrix power of non-square matrix");
  if (e < 0) throw error("negative matrix power");
  CycMatrix base = *this, out = identity(_rows);
  while (e > 0) {
    if (e & 1) out = out * base;
    base = base * base;
    e >>= 1;
  }
  return out;
}

Cyclotomic CycMatrix::trace() const {
  if (_rows != _cols) throw error("trace of non-square matrix");
  Cyclotomic t;
  for (int i = 0; i < _rows; ++i) t += at(i, i);
  return t;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (_rows != o._rows || _cols != o._cols) return false;
  for (size_t i = 0; i < _a.size(); ++i)
    if (_a[i] != o._a[i]) return false;
  return true;
}

bool CycMatrix::is_identity() const {
  return _rows == _cols && *this == identity(_rows);
}

std::string CycMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < _rows; ++i) {
    os << "[";
    for (int j = 0; j < _cols; ++j) os << (j ? ", " : "") << at(i, j).to_string();
    os << "]" << (i + 1 < _rows ? "\n" : "");
  }
  return os.str();
}

namespace {

// Row echelon form in place; returns pivot column indices.
std::vector<int> echelonize(CycMatrix& a) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
    int p = -1;
    for (int i = row; i < a.rows(); ++i) {
      if (!a.at(i, col).is_zero()) {
        p = i;
        break;
      }
    }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(row, j));
    Cyclotomic inv = a.at(row, col).inverse();
    for (int j = col; j < a.cols(); ++j) a.at(row, j) *= inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == row || a.at(i, col).is_zero()) continue;
      Cyclotomic f = a.at(i, col);
      for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int mat_rank(CycMatrix a) { return static_cast<int>(echelonize(a).size()); }

CycMatrix mat_nullspace(const CycMatrix& a) {
  CycMatrix e = a;
  std::vector<int> pivots = echelonize(e);
  std::vector<bool> is_pivot(a.cols(), false);
  for (int p : pivots) is_pivot[p] = true;
  std::vector<int> free_cols;
  for (int j = 0; j < a.cols(); ++j)
    if (!is_pivot[j]) free_cols.push_back(j);
  CycMatrix basis(a.cols(), static_cast<int>(free_cols.size()));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = Cyclotomic(1);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(k)) = -e.at(static_cast<int>(r), fc);
  }
  return basis;
}

CycMatrix mat_solve(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows()) throw error("solve: shape mismatch");
  CycMatrix aug = mat_hstack(a, b);
  std::vector<int> pivots = echelonize(aug);
  for (int p : pivots)
    if (p >= a.cols()) throw error("solve: inconsistent system");
  if (static_cast<int>(pivots.size()) != a.cols())
    throw error("solve: matrix does not have full column rank");
  CycMatrix x(a.cols(), b.cols());
  for (int r = 0; r < a.cols(); ++r)
    for (int j = 0; j < b.cols(); ++j) x.at(pivots[r], j) = aug.at(r, a.cols() + j);
  return x;
}

CycMatrix mat_hstack(const CycMatrix& a, const CycMatrix& b) {
  if (a.rows() != b.rows()) throw error("hstack shape mismatch");
  CycMatrix out(a.rows(), a.cols() + b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (int j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

CycMatrix mat_vstack(const CycMatrix& a, const CycMatrix& b) {
  if (a.cols() != b.cols()) throw error("vstack shape mismatch");
  CycMatrix out(a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

}  // namespace ekloc
