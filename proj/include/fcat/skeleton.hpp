#pragma once

#include "fcat/cyclo.hpp"
#include "fcat/matrix.hpp"
#include "fcat/ring.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fcat {

struct NotApplicable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InvalidData : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using FKey = std::array<int, 6>;  // a, b, c, d, e, f for [F_d^{abc}]_f^e
using RKey = std::array<int, 3>;  // a, b, c for R_c^{ab}

using FMap = std::map<FKey, Cyclo>;
using RMap = std::map<RKey, Cyclo>;

struct Counterexample {
  std::vector<int> index;
  std::string lhs, rhs;
};

struct VerificationReport {
  std::string check;
  bool pass = true;
  std::vector<Counterexample> counterexamples;

  void fail(std::vector<int> index, std::string lhs, std::string rhs) {
    pass = false;
    counterexamples.push_back({std::move(index), std::move(lhs), std::move(rhs)});
  }
};

enum class Unitary { yes_in_given_gauge, no_in_given_gauge, not_applicable };

struct PropertyFlags {
  bool pivotal = false;
  bool braided = false;
  bool spherical = false;
  bool ribbon = false;
  bool modular = false;
  Unitary unitary = Unitary::not_applicable;
};

/// A fusion ring together with its F-symbols and optional R-symbols and
/// pivotal coefficients. Construction enforces the container invariants:
/// the F-association covers exactly the admissible index set, R-symbols (if
/// any) cover exactly the nonzero structure constants and are nonzero, and
/// the ring must be commutative for R-symbols to make sense.
class SkeletalData {
 public:
  static SkeletalData make(FusionRing ring, FMap f, std::optional<RMap> r = std::nullopt,
                           std::optional<std::vector<Cyclo>> pivotal = std::nullopt);

  const FusionRing& ring() const { return ring_; }

  /// Value of [F_d^{abc}]_f^e with out-of-block symbols read as 0.
  const Cyclo& f(int a, int b, int c, int d, int e, int ff) const;
  const FMap& f_symbols() const { return f_; }

  bool has_r() const { return r_.has_value(); }
  const RMap& r_symbols() const;
  const Cyclo& r(int a, int b, int c) const;

  bool has_pivotal() const { return p_.has_value(); }
  const std::vector<Cyclo>& pivotal() const;
  const Cyclo& p(int a) const;

  SkeletalData with_r(RMap r) const;
  SkeletalData with_pivotal(std::vector<Cyclo> p) const;
  SkeletalData without_r() const;

  /// The admissible F-index set of a ring, in lexicographic order.
  static std::vector<FKey> admissible_f(const FusionRing& ring);
  static bool f_admissible(const FusionRing& ring, const FKey& k);

 private:
  FusionRing ring_;
  FMap f_;
  std::optional<RMap> r_;
  std::optional<std::vector<Cyclo>> p_;
};

/// Eqs. (5)-(8) plus vacuum R-symbols: every F-symbol with a unit among
/// a, b, c equals 1, [F_a^{a a* a}]_1^1 is nonzero, and R_b^{1b} = R_b^{b1} = 1.
VerificationReport check_vacuum(const SkeletalData& data);

/// Eq. (9) over all index tuples, with out-of-block symbols read as 0.
VerificationReport check_pentagon(const SkeletalData& data);

/// Eqs. (17) and (18). Throws NotApplicable without R-symbols or when the
/// pentagon check has not passed.
VerificationReport check_hexagon(const SkeletalData& data);

/// Eqs. (13)-(15). Throws NotApplicable without pivotal coefficients or when
/// the pentagon check has not passed.
VerificationReport check_pivotal(const SkeletalData& data);

/// Left quantum dimensions d_a = p_a / [F_{a*}^{a* a a*}]_1^1 (Eq. 16).
std::vector<Cyclo> quantum_dims(const SkeletalData& data);

/// d_{a*} = d_a for all a, exactly.
bool is_spherical(const SkeletalData& data);

/// The S-matrix of Eq. (19), from exact F-block inverses. Throws
/// NotApplicable unless the data is spherical and braided.
CMat s_matrix(const SkeletalData& data);

PropertyFlags classify_properties(const SkeletalData& data);

}  // namespace fcat
