#include <optional>

#include "tauforge/matrix.hpp"

namespace tauforge {

std::vector<std::vector<QScalar>> nullspace(const QMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  // Sparse rows keep the systems from intertwiner equations cheap: most entries vanish.
  std::vector<std::map<std::size_t, QScalar>> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::map<std::size_t, QScalar> row;
    for (std::size_t k = 0; k < n; ++k)
      if (!a(i, k).is_zero()) row.emplace(k, a(i, k));
    if (!row.empty()) rows.push_back(std::move(row));
  }

  std::vector<std::optional<std::size_t>> pivot_row_of(n);
  std::vector<bool> used(rows.size(), false);
  for (std::size_t col = 0; col < n; ++col) {
    std::optional<std::size_t> best;
    int best_size = 0;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (used[r]) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      // Prefer short rows, then small coefficients.
      const int size = static_cast<int>(rows[r].size()) * 64 + it->second.degree_span();
      if (!best || size < best_size) {
        best = r;
        best_size = size;
      }
    }
    if (!best) continue;
    used[*best] = true;
    pivot_row_of[col] = *best;
    auto& prow = rows[*best];
    const QScalar inv = prow.at(col).inverse();
    for (auto& [k, v] : prow) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == *best) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      const QScalar factor = it->second;
      for (const auto& [k, v] : prow) {
        auto [jt, inserted] = rows[r].try_emplace(k, -(factor * v));
        if (!inserted) {
          jt->second -= factor * v;
          if (jt->second.is_zero()) rows[r].erase(jt);
        }
      }
    }
  }

  std::vector<std::vector<QScalar>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_row_of[free]) continue;
    std::vector<QScalar> v(n);
    v[free] = QScalar(1L);
    for (std::size_t col = 0; col < n; ++col) {
      if (!pivot_row_of[col]) continue;
      const auto& row = rows[*pivot_row_of[col]];
      auto it = row.find(free);
      if (it != row.end()) v[col] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

QMatrix reshape(const std::vector<QScalar>& flat, std::size_t rows, std::size_t cols) {
  if (flat.size() != rows * cols) throw PreconditionError("reshape size mismatch");
  QMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) out(i, k) = flat[i * cols + k];
  return out;
}

}  // namespace tauforge
