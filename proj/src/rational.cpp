#include "schubert/rational.hpp"

#include <cstddef>
#include <utility>

namespace schubert {

namespace {

// Reduced row echelon form in place; returns pivot column of each pivot row.
std::vector<std::size_t> row_reduce(RationalMatrix& a)
{
  std::vector<std::size_t> pivots;
  if (a.empty())
    return pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == Rational(0))
      ++p;
    if (p == rows)
      continue;
    std::swap(a[p], a[r]);
    const Rational lead = a[r][c];
    for (auto& x : a[r])
      x /= lead;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == Rational(0))
        continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j)
        a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace

std::optional<std::vector<Rational>> solve(RationalMatrix a, std::vector<Rational> b)
{
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    a[i].push_back(b[i]);
  const auto pivots = row_reduce(a);
  if (pivots.size() < n || pivots.back() >= n)
    return std::nullopt;
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i)
    x[i] = a[i][n];
  return x;
}

std::vector<std::vector<Rational>> kernel(RationalMatrix a)
{
  if (a.empty())
    return {};
  const std::size_t cols = a[0].size();
  const auto pivots = row_reduce(a);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots)
    is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -a[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(RationalMatrix a)
{
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == Rational(0))
      ++p;
    if (p == n)
      return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j)
        a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

} // namespace schubert
