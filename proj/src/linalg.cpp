#include "fqg/linalg.hpp"

namespace fqg {

namespace {

// row -= c * pivot_row over the given range
void axpy(const BaseField& F, Vector& row, const Vector& pivot_row, Coeff c) {
  if (c == 0) return;
  const Coeff nc = F.neg(c);
  for (std::size_t j = 0; j < row.size(); ++j)
    if (pivot_row[j] != 0) row[j] = F.add(row[j], F.mul(nc, pivot_row[j]));
}

}  // namespace

std::size_t rank(const BaseField& F, std::vector<Vector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const Coeff inv = F.inv(rows[r][c]);
    for (auto& x : rows[r]) x = F.mul(x, inv);
#pragma omp parallel for schedule(static) if (rows.size() > 128)
    for (std::size_t i = r + 1; i < rows.size(); ++i) axpy(F, rows[i], rows[r], rows[i][c]);
    ++r;
  }
  return r;
}

std::optional<Vector> LinearSpan::insert(const Vector& v) {
  const BaseField& F = *F_;
  Vector w = v;
  Vector combo(count_ + 1, 0);
  combo[count_] = F.one();
  for (const Row& row : rows_) {
    const Coeff c = w[row.pivot];
    if (c == 0) continue;
    axpy(F, w, row.v, c);
    Vector rc = row.combo;
    rc.resize(count_ + 1, 0);
    axpy(F, combo, rc, c);
  }
  std::size_t pivot = 0;
  while (pivot < dim_ && w[pivot] == 0) ++pivot;
  if (pivot == dim_) {
    // 0 = combo . (inserted..., v)  =>  v = -combo[0..count) / combo[count]
    const Coeff lead = combo[count_];
    const Coeff scale = F.neg(F.inv(lead));
    Vector out(count_);
    for (std::size_t i = 0; i < count_; ++i) out[i] = F.mul(combo[i], scale);
    return out;
  }
  const Coeff inv = F.inv(w[pivot]);
  for (auto& x : w) x = F.mul(x, inv);
  for (auto& x : combo) x = F.mul(x, inv);
  rows_.push_back({std::move(w), std::move(combo), pivot});
  ++count_;
  return std::nullopt;
}

std::vector<Vector> left_kernel(const BaseField& F, const std::vector<Vector>& rows) {
  const std::size_t m = rows.size();
  if (m == 0) return {};
  const std::size_t cols = rows.front().size();
  // [rows | I], eliminate on the left block
  std::vector<Vector> aug(m, Vector(cols + m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    std::copy(rows[i].begin(), rows[i].end(), aug[i].begin());
    aug[i][cols + i] = F.one();
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m; ++c) {
    std::size_t p = r;
    while (p < m && aug[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(aug[r], aug[p]);
    const Coeff inv = F.inv(aug[r][c]);
    for (auto& x : aug[r]) x = F.mul(x, inv);
    for (std::size_t i = 0; i < m; ++i)
      if (i != r) axpy(F, aug[i], aug[r], aug[i][c]);
    ++r;
  }
  std::vector<Vector> out;
  for (std::size_t i = r; i < m; ++i) out.emplace_back(aug[i].begin() + static_cast<std::ptrdiff_t>(cols), aug[i].end());
  return out;
}

}  // namespace fqg
