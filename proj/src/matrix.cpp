#include "fcat/matrix.hpp"

namespace fcat {

CMat CMat::identity(std::size_t n) {
  CMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Cyclo(1);
  return m;
}

CMat CMat::operator*(const CMat& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
  CMat r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Cyclo& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

CMat CMat::transpose() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

CMat CMat::conj_transpose() const {
  CMat r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j).conj();
  return r;
}

CMat CMat::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  CMat a = *this;
  CMat inv = identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a.at(piv, col).is_zero()) ++piv;
    if (piv == n) throw SingularMatrix();
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    }
    const Cyclo pinv = a.at(col, col).inv();
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) = pinv * a.at(col, j);
      inv.at(col, j) = pinv * inv.at(col, j);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      const Cyclo f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

Cyclo CMat::det() const {
  if (rows_ != cols_) throw std::invalid_argument("det of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Cyclo(1);
  CMat a = *this;
  Cyclo prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && a.at(piv, k).is_zero()) ++piv;
      if (piv == n) return Cyclo();
      for (std::size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(k, j));
      sign = -sign;
    }
    const Cyclo prev_inv = prev.inv();
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: every division here is exact.
        a.at(i, j) = (a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j)) * prev_inv;
      }
      a.at(i, k) = Cyclo();
    }
    prev = a.at(k, k);
  }
  Cyclo d = a.at(n - 1, n - 1);
  return sign < 0 ? -d : d;
}

}  // namespace fcat
