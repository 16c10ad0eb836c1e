#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fcat/ring.hpp"
#include "fixtures.hpp"

#include <algorithm>
#include <cmath>

using namespace fcat;

TEST_CASE("validation accepts the census rings and derives duals") {
  FusionRing z2 = fixtures::z2();
  CHECK(z2.dual(2) == 2);

  FusionRing z3 = fixtures::z3();
  CHECK(z3.dual(2) == 3);
  CHECK(z3.dual(3) == 2);

  FusionRing z4 = fixtures::z4();
  CHECK(z4.dual(2) == 2);
  CHECK(z4.dual(3) == 4);

  FusionRing ty = fixtures::ty_z3();
  CHECK(ty.dual(4) == 4);
  CHECK(ty.commutative());

  FusionRing so16 = fixtures::adj_so16_2();
  CHECK(so16.dual(5) == 5);
  CHECK(so16.commutative());
}

TEST_CASE("validation rejects broken tables") {
  // unit row broken
  CHECK_THROWS_AS(fixtures::make_ring({{{1}, {2}}, {{1}, {1}}}), RingError);
  // no dual for element 2 (N_{2,2}^1 removed)
  CHECK_THROWS_AS(fixtures::make_ring({{{1}, {2}}, {{2}, {2}}}), RingError);
  // associativity failure: 2x2 = 3 but 2x3 = 3 in a would-be Z3
  CHECK_THROWS_AS(fixtures::make_ring({{{1}, {2}, {3}}, {{2}, {3}, {3}}, {{3}, {1}, {2}}}),
                  RingError);
  // multiplicity 2 is out of scope
  std::vector<std::uint8_t> t = {1, 0, 0, 1, 0, 1, 2, 0};
  CHECK_THROWS_AS(validate_ring(2, t), RingError);
  // non-cubical input
  CHECK_THROWS_AS(validate_ring(2, std::vector<std::uint8_t>(7, 0)), RingError);
}

TEST_CASE("Frobenius-Perron dimensions") {
  auto close = [](double a, double b) { return std::abs(a - b) < 1e-9; };

  for (auto ring : {fixtures::z2(), fixtures::z3(), fixtures::z5(), fixtures::z7()}) {
    for (double d : fp_dims(ring)) CHECK(close(d, 1.0));
  }

  auto fib = fp_dims(fixtures::fib());
  CHECK(close(fib[0], 1.0));
  CHECK(close(fib[1], (1.0 + std::sqrt(5.0)) / 2.0));

  auto ising = fp_dims(fixtures::ising());
  CHECK(close(ising[0], 1.0));
  CHECK(close(ising[1], 1.0));
  CHECK(close(ising[2], std::sqrt(2.0)));

  // eigen-equation residual: sum_c N_{a,b}^c d_c = d_a d_b
  for (auto ring : {fixtures::rep_d3(), fixtures::psu2_5(), fixtures::adj_so16_2()}) {
    auto d = fp_dims(ring);
    for (int a = 1; a <= ring.rank(); ++a)
      for (int b = 1; b <= ring.rank(); ++b) {
        double s = 0;
        for (int c = 1; c <= ring.rank(); ++c)
          if (ring.n(a, b, c)) s += d[c - 1];
        CHECK(std::abs(s - d[a - 1] * d[b - 1]) < 1e-10);
      }
  }
}

TEST_CASE("automorphism counts match the census") {
  CHECK(automorphisms(fixtures::trivial()).size() == 1);
  CHECK(automorphisms(fixtures::z2()).size() == 1);
  CHECK(automorphisms(fixtures::fib()).size() == 1);
  CHECK(automorphisms(fixtures::ising()).size() == 1);
  CHECK(automorphisms(fixtures::rep_d3()).size() == 1);
  CHECK(automorphisms(fixtures::psu2_5()).size() == 1);
  CHECK(automorphisms(fixtures::z3()).size() == 2);
  CHECK(automorphisms(fixtures::z2z2()).size() == 6);
  CHECK(automorphisms(fixtures::z4()).size() == 2);
  CHECK(automorphisms(fixtures::z5()).size() == 4);
  CHECK(automorphisms(fixtures::z6()).size() == 2);
  CHECK(automorphisms(fixtures::z7()).size() == 6);
  CHECK(automorphisms(fixtures::rep_d9()).size() == 24);
  CHECK(automorphisms(fixtures::ty_z3()).size() == 2);
  CHECK(automorphisms(fixtures::adj_so16_2()).size() == 4);
}

TEST_CASE("specific automorphisms from the paper") {
  auto z3_autos = automorphisms(fixtures::z3()).elements;
  CHECK(std::count(z3_autos.begin(), z3_autos.end(), std::vector<int>{1, 3, 2}) == 1);

  auto z4_autos = automorphisms(fixtures::z4()).elements;
  CHECK(std::count(z4_autos.begin(), z4_autos.end(), std::vector<int>{1, 2, 4, 3}) == 1);

  auto so16 = automorphisms(fixtures::adj_so16_2()).elements;
  // S = {(), (2 3), (5 7), (2 3)(5 7)}
  CHECK(std::count(so16.begin(), so16.end(), std::vector<int>{1, 3, 2, 4, 5, 6, 7}) == 1);
  CHECK(std::count(so16.begin(), so16.end(), std::vector<int>{1, 2, 3, 4, 7, 6, 5}) == 1);
  CHECK(std::count(so16.begin(), so16.end(), std::vector<int>{1, 3, 2, 4, 7, 6, 5}) == 1);
}

TEST_CASE("automorphism groups are closed and preserve duality") {
  for (auto ring : {fixtures::z3(), fixtures::z2z2(), fixtures::z5(), fixtures::rep_d9()}) {
    auto group = automorphisms(ring).elements;
    std::vector<int> id(ring.rank());
    for (int i = 0; i < ring.rank(); ++i) id[i] = i + 1;
    CHECK(std::count(group.begin(), group.end(), id) == 1);
    for (const auto& s1 : group) {
      CHECK(std::count(group.begin(), group.end(), inverse_perm(s1)) == 1);
      for (const auto& s2 : group)
        CHECK(std::count(group.begin(), group.end(), compose(s1, s2)) == 1);
      for (int a = 1; a <= ring.rank(); ++a)
        CHECK(s1[ring.dual(a) - 1] == ring.dual(s1[a - 1]));
    }
  }
}
