#include "regmeasure/linear.hpp"

#include <stdexcept>
#include <utility>

namespace regmeasure {

RationalMatrix solve_exact(IntMatrix a, RationalMatrix rhs) {
  const std::size_t n = a.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_exact: dimension mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_exact: matrix is not square");
  const std::size_t cols = n == 0 ? 0 : rhs.front().size();

  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) throw std::domain_error("solve_exact: singular system");
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      std::swap(rhs[pivot], rhs[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      // rows with a zero in the pivot column still get rescaled by pivot/prev
      const BigInt factor = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - factor * a[k][j]) / prev;
      for (std::size_t c = 0; c < cols; ++c)
        rhs[i][c] = (Rational(a[k][k]) * rhs[i][c] - Rational(factor) * rhs[k][c]) / Rational(prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  RationalMatrix x(n, std::vector<Rational>(cols));
  for (std::size_t ii = n; ii-- > 0;) {
    for (std::size_t c = 0; c < cols; ++c) {
      Rational acc = rhs[ii][c];
      for (std::size_t j = ii + 1; j < n; ++j)
        if (a[ii][j] != 0) acc -= Rational(a[ii][j]) * x[j][c];
      x[ii][c] = acc / Rational(a[ii][ii]);
    }
  }
  return x;
}

std::vector<Rational> solve_exact(IntMatrix a, const std::vector<Rational>& rhs) {
  RationalMatrix b(rhs.size(), std::vector<Rational>(1));
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i][0] = rhs[i];
  RationalMatrix x = solve_exact(std::move(a), std::move(b));
  std::vector<Rational> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::move(x[i][0]);
  return out;
}

}  // namespace regmeasure
