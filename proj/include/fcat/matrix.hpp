#pragma once

#include "fcat/cyclo.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fcat {

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("singular matrix") {}
};

/// Dense matrix over the cyclotomic field; all operations are exact.
class CMat {
 public:
  CMat() = default;
  CMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static CMat identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Cyclo& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Cyclo& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const CMat& o) const = default;

  CMat operator*(const CMat& o) const;
  CMat transpose() const;
  CMat conj_transpose() const;

  /// Exact inverse; throws SingularMatrix. Pre: square.
  CMat inverse() const;
  /// Exact determinant via the Bareiss fraction-free schema. Pre: square.
  Cyclo det() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Cyclo> a_;
};

inline CMat mat_inverse(const CMat& m) { return m.inverse(); }

}  // namespace fcat
