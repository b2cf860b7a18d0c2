#include "qfrob/torus.hpp"

namespace qfrob {

SkewForm::SkewForm(IMat m) : m_(std::move(m)) {
  const std::size_t n = m_.size();
  if (n > static_cast<std::size_t>(kMaxRank)) throw std::invalid_argument("SkewForm: too many indices");
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw std::invalid_argument("SkewForm: matrix is not square");
    for (std::size_t j = 0; j < n; ++j) {
      if (m_[i][j] != -m_[j][i]) throw std::invalid_argument("SkewForm: matrix is not skew-symmetric");
    }
  }
}

long SkewForm::eval(const ExpVec& a, const ExpVec& b) const {
  if (a.size() != size() || b.size() != size()) throw std::invalid_argument("SkewForm: dimension mismatch");
  return dot(row(a), b);
}

std::vector<long> SkewForm::row(const ExpVec& a) const {
  const int n = size();
  std::vector<long> r(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < n; ++j) r[j] += static_cast<long>(a[i]) * m_[i][j];
  }
  return r;
}

}  // namespace qfrob
