#include "linalg.hpp"

namespace ffrec {

std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target) {
  const std::size_t k = vectors.size();
  const std::size_t dim = target.size();
  if (k == 0) {
    for (const Rat& t : target)
      if (t != 0) return std::nullopt;
    return std::vector<Rat>{};
  }
  // augmented system: columns are the vectors, rhs is target
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(k + 1, Rat(0)));
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < dim; ++i) m[i][j] = vectors[j][i];
  for (std::size_t i = 0; i < dim; ++i) m[i][k] = target[i];

  std::vector<std::size_t> pivot_col_of_row;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < dim; ++col) {
    std::size_t sel = row;
    while (sel < dim && m[sel][col] == 0) ++sel;
    if (sel == dim) continue;
    std::swap(m[sel], m[row]);
    Rat inv = Rat(1) / m[row][col];
    for (std::size_t j = col; j <= k; ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < dim; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (std::size_t j = col; j <= k; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col_of_row.push_back(col);
    ++row;
  }
  // consistency: no pivot in the rhs column
  for (std::size_t i = row; i < dim; ++i)
    if (m[i][k] != 0) return std::nullopt;
  std::vector<Rat> solution(k, Rat(0));
  for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
    solution[pivot_col_of_row[i]] = m[i][k];
  return solution;
}

std::vector<std::vector<Rat>> ratfunc_coordinates(std::span<const RatFunc> fs) {
  Poly common{Rat(1)};
  for (const RatFunc& f : fs)
    if (!f.is_zero()) common = lcm(common, f.den());
  std::vector<Poly> cleared;
  std::size_t dim = 1;
  for (const RatFunc& f : fs) {
    Poly p = f.is_zero() ? Poly{} : f.num() * exact_div(common, f.den());
    if (!p.is_zero()) dim = std::max(dim, p.degree() + 1);
    cleared.push_back(std::move(p));
  }
  std::vector<std::vector<Rat>> rows;
  rows.reserve(fs.size());
  for (const Poly& p : cleared) {
    std::vector<Rat> row(dim, Rat(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) row[i] = p.coeff(i);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace ffrec
