#include <algorithm>

#include "birat/errors.hpp"
#include "birat/polymat.hpp"

namespace birat {

namespace {

// Fraction-free forward elimination over the integers. Each row is first
// scaled to integer entries; every division below is exact.
std::vector<std::vector<Integer>> integer_echelon(const ScalarMatrix& m, std::vector<std::size_t>& pivots) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) scale = lcm(scale, Integer(m(r, c).get_den()));
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m(r, c).get_num() * (scale / m(r, c).get_den());
    }
  }

  Integer previous = 1;
  std::size_t k = 0;
  for (std::size_t c = 0; c < m.cols() && k < m.rows(); ++c) {
    std::size_t pivot = m.rows();
    for (std::size_t r = k; r < m.rows(); ++r) {
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[k]);
    for (std::size_t i = k + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        Integer v = a[k][c] * a[i][j] - a[i][c] * a[k][j];
        Integer q;
        mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        a[i][j] = std::move(q);
      }
      a[i][c] = 0;
    }
    previous = a[k][c];
    pivots.push_back(c);
    ++k;
  }
  a.resize(k);
  return a;
}

}  // namespace

ScalarMatrix rref(const ScalarMatrix& m, std::vector<std::size_t>* pivot_columns) {
  std::vector<std::size_t> pivots;
  const auto echelon = integer_echelon(m, pivots);
  ScalarMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    const Integer& lead = echelon[r][pivots[r]];
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(echelon[r][c], lead);
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c).canonicalize();
  }
  // Back substitution clears the entries above each pivot.
  for (std::size_t r = echelon.size(); r-- > 0;) {
    const std::size_t pc = pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      const Rational factor = out(i, pc);
      if (factor == 0) continue;
      for (std::size_t c = pc; c < m.cols(); ++c) out(i, c) -= factor * out(r, c);
    }
  }
  if (pivot_columns != nullptr) *pivot_columns = std::move(pivots);
  return out;
}

std::vector<RationalVector> nullspace_rational(const ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  const ScalarMatrix reduced = rref(m, &pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(m.cols());
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ScalarMatrix& m) {
  std::vector<std::size_t> pivots;
  integer_echelon(m, pivots);
  return pivots.size();
}

}  // namespace birat
