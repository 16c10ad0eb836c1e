#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcat/matrix.hpp"

#include <random>

using namespace fcat;

namespace {

CMat fib_f_block() {
  // Fibonacci F-matrix in the catalog gauge: [[1/phi, 1], [1/phi, -1/phi]].
  const Cyclo phi = -Cyclo::root(5, 2) - Cyclo::root(5, 3);
  const Cyclo inv_phi = phi.inv();
  CMat k(2, 2);
  k.at(0, 0) = inv_phi;
  k.at(0, 1) = Cyclo(1);
  k.at(1, 0) = inv_phi;
  k.at(1, 1) = -inv_phi;
  return k;
}

}  // namespace

TEST_CASE("identity inverts to itself") {
  CMat id = CMat::identity(3);
  CHECK(mat_inverse(id) == id);
}

TEST_CASE("Fibonacci F-block is an involution") {
  CMat k = fib_f_block();
  CHECK(k * k == CMat::identity(2));
  CHECK(mat_inverse(k) == k);
}

TEST_CASE("singular matrix is rejected") {
  CMat m(2, 2);
  m.at(0, 0) = m.at(0, 1) = m.at(1, 0) = m.at(1, 1) = Cyclo(1);
  CHECK_THROWS_AS(mat_inverse(m), SingularMatrix);
  CHECK(m.det() == Cyclo());
}

TEST_CASE("determinants") {
  CMat s(2, 2);
  s.at(0, 0) = Cyclo(1);
  s.at(0, 1) = Cyclo(1);
  s.at(1, 0) = Cyclo(1);
  s.at(1, 1) = Cyclo(-1);
  CHECK(s.det() == Cyclo(-2));

  CMat k = fib_f_block();
  // det of an involutive 2x2 with trace 0 is -1
  CHECK(k.det() == Cyclo(-1));
}

TEST_CASE("random matrices invert exactly") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = 1 + rng() % 3;
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        unsigned ord = 1 + rng() % 8;
        m.at(i, j) = Cyclo(Rational(static_cast<long>(rng() % 5) - 2)) *
                     Cyclo::root(ord, static_cast<long long>(rng() % ord));
      }
    try {
      CMat inv = mat_inverse(m);
      CHECK(m * inv == CMat::identity(n));
      CHECK(inv * m == CMat::identity(n));
      CHECK(!m.det().is_zero());
    } catch (const SingularMatrix&) {
      CHECK(m.det().is_zero());
    }
  }
}

TEST_CASE("conjugate transpose") {
  CMat m(1, 2);
  m.at(0, 0) = Cyclo::root(4, 1);
  m.at(0, 1) = Cyclo(2);
  CMat h = m.conj_transpose();
  CHECK(h.rows() == 2);
  CHECK(h.at(0, 0) == -Cyclo::root(4, 1));
  CHECK(h.at(1, 0) == Cyclo(2));
}
