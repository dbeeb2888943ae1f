#include "titsarr/linalg.hpp"

namespace titsarr {

std::size_t rref(RatMat& m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (!m[r][col].is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    Rational inv = Rational(1) / m[rank][col];
    for (std::size_t c = col; c < cols; ++c) m[rank][c] *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

std::vector<RatVec> nullspace(const RatMat& m, std::size_t cols) {
  RatMat r = m;
  for (auto& row : r) row.resize(cols, Rational(0));
  std::vector<std::size_t> pivots;
  std::size_t rank = rref(r, &pivots);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivots) is_pivot[p] = true;

  std::vector<RatVec> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RatVec v(cols, Rational(0));
    v[free] = Rational(1);
    for (std::size_t i = 0; i < rank; ++i) v[pivots[i]] = -r[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RatVec> solve(RatMat m, const RatVec& b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t r = 0; r < rows; ++r) m[r].push_back(b[r]);
  std::vector<std::size_t> pivots;
  std::size_t rank = rref(m, &pivots);
  // A pivot in the augmented column means the system is inconsistent.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rational(0));
  for (std::size_t i = 0; i < rank; ++i) x[pivots[i]] = m[i][cols];
  return x;
}

std::vector<Int> primitive_integer(const RatVec& v) {
  Int m = 1;
  for (const auto& r : v) m = lcm(m, r.den());
  std::vector<Int> out;
  out.reserve(v.size());
  for (const auto& r : v) out.push_back(r.num() * (m / r.den()));
  Int g = 0;
  for (const auto& x : out) g = gcd(g, abs(x));
  if (g == 0) fail(Errc::invalid_argument, "primitive_integer of zero vector");
  if (g > 1)
    for (auto& x : out) x /= g;
  for (const auto& x : out) {
    if (x == 0) continue;
    if (x < 0)
      for (auto& y : out) y = -y;
    break;
  }
  return out;
}

}  // namespace titsarr
