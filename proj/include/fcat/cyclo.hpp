#pragma once

#include "fcat/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fcat {

struct ParseError : std::runtime_error {
  std::size_t offset;
  ParseError(std::string msg, std::size_t off)
      : std::runtime_error(std::move(msg)), offset(off) {}
};

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

/// Axis-aligned box guaranteed to contain the exact complex value.
/// Endpoints are exact rationals (dyadic after rounding), so containment
/// tests are themselves exact.
struct ComplexInterval {
  Rational re_lo, re_hi, im_lo, im_hi;

  Rational re_width() const { return re_hi - re_lo; }
  Rational im_width() const { return im_hi - im_lo; }
  bool contains(const ComplexInterval& inner) const {
    return re_lo <= inner.re_lo && inner.re_hi <= re_hi && im_lo <= inner.im_lo &&
           inner.im_hi <= im_hi;
  }
  bool contains_zero() const {
    return re_lo <= 0 && 0 <= re_hi && im_lo <= 0 && 0 <= im_hi;
  }
};

/// An element of a cyclotomic field Q(zeta_N), kept in canonical form:
/// the conductor is minimal for the value (1 or >= 3, never 2 mod 4) and
/// the support lies in the Zumbroich basis of Q(zeta_N), so equality of
/// values is equality of representations.
class Cyclo {
 public:
  using Term = std::pair<unsigned, Rational>;

  Cyclo() = default;  // zero
  Cyclo(long v);
  explicit Cyclo(Rational v);
  explicit Cyclo(const Integer& v);

  /// zeta_n^k. Throws std::invalid_argument for n = 0.
  static Cyclo root(unsigned n, long long k = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return n_ == 1; }
  /// Pre: is_rational().
  Rational rational_value() const;

  unsigned conductor() const { return n_; }
  const std::vector<Term>& terms() const { return terms_; }

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& o) { return *this = *this + o; }
  Cyclo& operator-=(const Cyclo& o) { return *this = *this - o; }
  Cyclo& operator*=(const Cyclo& o) { return *this = *this * o; }

  friend Cyclo operator+(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator-(const Cyclo& x, const Cyclo& y);
  friend Cyclo operator*(const Cyclo& x, const Cyclo& y);

  /// Multiplicative inverse. Throws DivisionByZero on zero.
  Cyclo inv() const;
  Cyclo operator/(const Cyclo& y) const { return *this * y.inv(); }

  /// The automorphism zeta_N -> zeta_N^j; pre: gcd(j, conductor) = 1.
  Cyclo galois(unsigned j) const;
  /// Complex conjugation (zeta -> zeta^-1).
  Cyclo conj() const;
  Cyclo pow(long long e) const;

  bool operator==(const Cyclo& o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const Cyclo& o) const { return !(*this == o); }
  /// Deterministic total order (representation order, not numeric).
  bool operator<(const Cyclo& o) const;

  bool is_real() const { return conj() == *this; }
  /// Pre: is_real(). Exact zero test first, then adaptive interval refinement.
  int sign_real() const;

  /// Enclosing box of width < 10^-digits per component. For fixed digits the
  /// result is deterministic, and boxes for increasing digits are nested.
  ComplexInterval to_complex(unsigned digits) const;

  std::string str() const;
  static Cyclo parse(const std::string& text);

 private:
  unsigned n_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients

  static Cyclo make(unsigned n, std::vector<Term> reduced_terms);
  friend struct CycloInternals;
};

inline Cyclo operator*(const Rational& c, const Cyclo& x) { return Cyclo(c) * x; }

/// Exact real and imaginary parts, as real cyclotomic numbers.
Cyclo real_part(const Cyclo& x);
Cyclo imag_part(const Cyclo& x);

/// If x is a root of unity, returns (m, j) with x = zeta_m^j, m minimal.
std::optional<std::pair<unsigned, unsigned>> as_root_of_unity(const Cyclo& x);

/// Paper-style decimal rendering: round-half-even at `digits` decimals,
/// trailing zeros stripped for rational components, "a + bi" combined form.
std::string format_numeric(const Cyclo& x, unsigned digits);

}  // namespace fcat
