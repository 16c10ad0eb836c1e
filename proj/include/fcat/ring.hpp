#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace fcat {

struct RingError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Multiplicity-free fusion ring: rank, 0/1 structure constants, and the
/// duality involution derived from them. Labels are 1-based to match the
/// census tables; 1 is the unit.
class FusionRing {
 public:
  FusionRing() = default;

  int rank() const { return rank_; }
  /// N_{a,b}^c, 1-based labels.
  bool n(int a, int b, int c) const { return table_[idx(a, b, c)] != 0; }
  int dual(int a) const { return dual_[a - 1]; }

  /// Labels c with N_{a,b}^c = 1.
  std::vector<int> product(int a, int b) const;
  bool commutative() const;

  bool operator==(const FusionRing& o) const {
    return rank_ == o.rank_ && table_ == o.table_;
  }

  friend FusionRing validate_ring(int rank, const std::vector<std::uint8_t>& table);

 private:
  int rank_ = 0;
  std::vector<std::uint8_t> table_;  // rank^3 entries, idx(a,b,c)
  std::vector<int> dual_;

  std::size_t idx(int a, int b, int c) const {
    return (static_cast<std::size_t>(a - 1) * rank_ + (b - 1)) * rank_ + (c - 1);
  }
};

/// Checks Eqs. (1)-(4): unit behaviour, duality involution, associativity.
/// `table` holds rank^3 entries in (a,b,c) row-major order; values must be
/// 0 or 1 (multiplicity >= 2 is rejected). Throws RingError naming the
/// offending index tuple.
FusionRing validate_ring(int rank, const std::vector<std::uint8_t>& table);

/// Frobenius-Perron dimension per element: the largest real eigenvalue of
/// the left multiplication matrix, by (shifted) power iteration to absolute
/// tolerance `tol`.
std::vector<double> fp_dims(const FusionRing& ring, double tol = 1e-12);

/// Permutations given as 1-based image vectors; element 0 is the identity.
struct RingAutomorphismGroup {
  std::vector<std::vector<int>> elements;

  std::size_t size() const { return elements.size(); }
};

/// All permutations fixing 1 that preserve the structure constants, found by
/// pruned exhaustive search (duality classes and FP-dimension classes).
RingAutomorphismGroup automorphisms(const FusionRing& ring);

bool is_automorphism(const FusionRing& ring, const std::vector<int>& sigma);

std::vector<int> compose(const std::vector<int>& s1, const std::vector<int>& s2);
std::vector<int> inverse_perm(const std::vector<int>& s);

}  // namespace fcat
