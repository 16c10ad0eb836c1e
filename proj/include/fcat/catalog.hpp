#pragma once

#include "fcat/skeleton.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcat {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Square root of a nonnegative integer as an exact cyclotomic (Gauss sums).
Cyclo sqrt_uint(unsigned n);

/// Pointed Z_n category from the standard 3-cocycle representative
/// omega_q(a,b,c) = zeta_n^{q * a * floor((b+c)/n)}, with elements labelled
/// in the census order for that n. F-symbols only.
SkeletalData build_pointed_cyclic(int n, int q);

/// Rank-2 Fibonacci data in the gauge where the nontrivial F-block K
/// satisfies K^2 = I; f_class 1 has [F_2^{222}]_2^2 = (1-sqrt5)/2, f_class 2
/// is its Galois conjugate.
SkeletalData build_fib(int f_class);

/// Rank-3 Ising-type data; the two classes are separated by the sign of
/// [F_1^{323}]_3^3 [F_3^{333}]_2^2 = -+ 1/sqrt2 (class 1 gives -1/sqrt2).
SkeletalData build_ising(int f_class);

/// Tambara-Yamagami data over Z_n with bicharacter chi(x^j, x^k) =
/// zeta_n^{bichar * j * k} (gcd(bichar, n) = 1) and sign = +-1.
SkeletalData build_ty(int n, int bichar, int sign);

/// All braidings with R-values roots of unity of order dividing max_order,
/// found by propagation through the hexagon equations plus seeded
/// enumeration. Results are sorted and exact; each passes check_hexagon.
std::vector<RMap> solve_braidings(const SkeletalData& data, unsigned max_order = 240,
                                  std::uint64_t budget = 2'000'000);

/// All pivotal structures (Eqs. 13-15), found by exact propagation through
/// the multiplicative constraint system.
std::vector<std::vector<Cyclo>> solve_pivotals(const SkeletalData& data);

struct CatalogSpec {
  std::string family;  // "pointed" | "fib" | "ising" | "ty"
  std::vector<int> params;
  std::optional<int> braiding;  // 1-based index into solve_braidings
  std::optional<int> pivotal;   // 1-based index into solve_pivotals
};

/// Builds the family datum and optionally attaches the chosen braiding and
/// pivotal structure.
SkeletalData build_catalog(const CatalogSpec& spec);

}  // namespace fcat
