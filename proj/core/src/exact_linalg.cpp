#include "sdesign/exact_linalg.hpp"

#include <stdexcept>

namespace sdesign {

std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();
  for (const auto& r : m) {
    if (r.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows; ++c) {
    std::size_t best = rows;
    for (std::size_t r = lead; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      if (best == rows || abs(m[r][c]) > abs(m[best][c])) best = r;
    }
    if (best == rows) continue;
    std::swap(m[lead], m[best]);
    Rational inv = 1 / m[lead][c];
    for (auto& v : m[lead]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[r][j] -= f * m[lead][j];
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(RationalMatrix m) { return row_reduce(m).size(); }

std::optional<std::vector<Rational>> solve(const RationalMatrix& a, const std::vector<Rational>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: row count mismatch");
  std::size_t n = a.empty() ? 0 : a.front().size();
  RationalMatrix aug = a;
  for (std::size_t r = 0; r < aug.size(); ++r) aug[r].push_back(b[r]);
  auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
  return x;
}

}  // namespace sdesign
