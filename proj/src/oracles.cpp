#include "ekloc/oracles.hpp"

#include <algorithm>

namespace ekloc {
namespace oracles {

namespace {

void monomials_of_degree(int nvars, int d, int var, Monomial& current,
                         LaurentPoly& out) {
  if (var == nvars - 1) {
    current[var] = d;
    out.add_term(current, Cyclotomic(1));
    return;
  }
  for (int e = 0; e <= d; ++e) {
    current[var] = e;
    monomials_of_degree(nvars, d - e, var + 1, current, out);
  }
}

// Fills the tableau cell by cell (row major), keeping rows weakly and
// columns strictly increasing, and accumulates x^(content) per completion.
void fill_tableau(const std::vector<int>& shape, int nvars, size_t row, size_t col,
                  std::vector<std::vector<int>>& cells, LaurentPoly& out) {
  if (row == shape.size()) {
    Monomial m(nvars, 0);
    for (const auto& r : cells)
      for (int entry : r) m[entry - 1] += 1;
    out.add_term(m, Cyclotomic(1));
    return;
  }
  if (col == static_cast<size_t>(shape[row])) {
    fill_tableau(shape, nvars, row + 1, 0, cells, out);
    return;
  }
  int lo = 1;
  if (col > 0) lo = std::max(lo, cells[row][col - 1]);
  if (row > 0) lo = std::max(lo, cells[row - 1][col] + 1);
  for (int entry = lo; entry <= nvars; ++entry) {
    cells[row].push_back(entry);
    fill_tableau(shape, nvars, row, col + 1, cells, out);
    cells[row].pop_back();
  }
}

}  // namespace

LaurentPoly complete_homogeneous(int nvars, int d) {
  if (nvars <= 0) throw error("need at least one variable");
  if (d < 0) return LaurentPoly(nvars);
  LaurentPoly out(nvars);
  Monomial current(nvars, 0);
  monomials_of_degree(nvars, d, 0, current, out);
  return out;
}

LaurentPoly schur_polynomial(int nvars, const std::vector<int>& lambda) {
  if (nvars <= 0) throw error("need at least one variable");
  std::vector<int> shape;
  for (size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0 || (i > 0 && lambda[i] > lambda[i - 1]))
      throw error("shape must be weakly decreasing and nonnegative");
    if (lambda[i] > 0) shape.push_back(lambda[i]);
  }
  LaurentPoly out(nvars);
  if (shape.empty()) {
    out.add_term(Monomial(nvars, 0), Cyclotomic(1));
    return out;
  }
  if (static_cast<int>(shape.size()) > nvars) return out;  // no tableaux
  std::vector<std::vector<int>> cells(shape.size());
  fill_tableau(shape, nvars, 0, 0, cells, out);
  return out;
}

Rational gl_dimension(const std::vector<int>& lambda) {
  for (size_t i = 1; i < lambda.size(); ++i)
    if (lambda[i] > lambda[i - 1]) throw error("weight must be weakly decreasing");
  Rational dim(1);
  int n = static_cast<int>(lambda.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) dim *= rat(lambda[i] - lambda[j] + j - i, j - i);
  return dim;
}

}  // namespace oracles
}  // namespace ekloc
