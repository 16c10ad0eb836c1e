#include "fcat/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <sstream>

namespace fcat {

namespace {

struct PrimePower {
  unsigned p;
  unsigned nu;
  unsigned pnu;     // p^nu
  unsigned pnum1;   // p^(nu-1)
};

std::vector<PrimePower> factorize(unsigned n) {
  std::vector<PrimePower> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      PrimePower pp{p, 0, 1, 1};
      while (n % p == 0) {
        n /= p;
        ++pp.nu;
        pp.pnum1 = pp.pnu;
        pp.pnu *= p;
      }
      out.push_back(pp);
    }
  }
  if (n > 1) out.push_back(PrimePower{n, 1, n, 1});
  return out;
}

// Zumbroich basis membership: per odd prime the coarsest digit of the
// exponent's p-part is nonzero, per p = 2 it is zero.
bool in_basis(unsigned k, const PrimePower& pp) {
  unsigned digit = (k % pp.pnu) / pp.pnum1;
  return pp.p == 2 ? digit == 0 : digit != 0;
}

using RawMap = std::map<unsigned, Rational>;

// Rewrites all exponents into the Zumbroich basis of Q(zeta_n). One pass per
// prime suffices: the rewrite for p only changes the coarsest p-digit and
// leaves every other digit (of p and of the other primes) untouched.
void reduce_raw(unsigned n, RawMap& m) {
  const auto factors = factorize(n);
  for (const auto& pp : factors) {
    RawMap next;
    for (auto& [k, c] : m) {
      if (c == 0) continue;
      if (in_basis(k, pp)) {
        next[k] += c;
      } else if (pp.p == 2) {
        next[(k + n / 2) % n] -= c;
      } else {
        for (unsigned i = 1; i < pp.p; ++i) next[(k + i * (n / pp.p)) % n] -= c;
      }
    }
    m = std::move(next);
  }
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

std::vector<unsigned> basis_exponents(unsigned n) {
  const auto factors = factorize(n);
  std::vector<unsigned> out;
  for (unsigned k = 0; k < n; ++k) {
    bool ok = true;
    for (const auto& pp : factors) ok = ok && in_basis(k, pp);
    if (ok) out.push_back(k);
  }
  return out;
}

unsigned gcd_u(unsigned a, unsigned b) { return std::gcd(a, b); }

unsigned lcm_u(unsigned a, unsigned b) { return a / gcd_u(a, b) * b; }

}  // namespace

struct CycloInternals {
  // Raw (basis) coefficients of x lifted to conductor m (n | m), reduced at m.
  static RawMap lift(const Cyclo& x, unsigned m) {
    RawMap raw;
    const unsigned scale = m / x.n_;
    for (const auto& [k, c] : x.terms_) raw[(static_cast<unsigned long long>(k) * scale) % m] += c;
    reduce_raw(m, raw);
    return raw;
  }

  static Cyclo from_raw(unsigned n, RawMap raw) {
    reduce_raw(n, raw);
    std::vector<Cyclo::Term> terms(raw.begin(), raw.end());
    return minimize(n, std::move(terms));
  }

  // Applies zeta -> zeta^j at conductor n without minimizing.
  static std::vector<Cyclo::Term> apply_galois(unsigned n, const std::vector<Cyclo::Term>& terms,
                                               unsigned j) {
    RawMap raw;
    for (const auto& [k, c] : terms) raw[(static_cast<unsigned long long>(k) * j) % n] += c;
    reduce_raw(n, raw);
    return {raw.begin(), raw.end()};
  }

  // Re-expresses `terms` (canonical at conductor n, known to lie in
  // Q(zeta_d), d | n) in the Zumbroich basis of Q(zeta_d).
  static std::vector<Cyclo::Term> rebase(unsigned n, const std::vector<Cyclo::Term>& terms,
                                         unsigned d) {
    const auto bn = basis_exponents(n);
    const auto bd = basis_exponents(d);
    std::map<unsigned, std::size_t> row_of;
    for (std::size_t i = 0; i < bn.size(); ++i) row_of[bn[i]] = i;

    const std::size_t rows = bn.size(), cols = bd.size();
    // Augmented matrix [A | rhs]; column j is zeta_d^{bd[j]} expressed at n.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
    for (std::size_t j = 0; j < cols; ++j) {
      RawMap raw;
      raw[(static_cast<unsigned long long>(bd[j]) * (n / d)) % n] = 1;
      reduce_raw(n, raw);
      for (const auto& [k, c] : raw) a[row_of.at(k)][j] = c;
    }
    for (const auto& [k, c] : terms) a[row_of.at(k)][cols] = c;

    // Gauss-Jordan; the system is consistent with a unique solution since
    // the lifted basis roots are linearly independent.
    std::vector<std::size_t> pivot_row(cols);
    std::vector<bool> row_used(rows, false);
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t piv = rows;
      for (std::size_t i = 0; i < rows; ++i)
        if (!row_used[i] && a[i][j] != 0) {
          piv = i;
          break;
        }
      if (piv == rows) throw std::logic_error("cyclo rebase: singular lift matrix");
      row_used[piv] = true;
      pivot_row[j] = piv;
      const Rational p = a[piv][j];
      for (std::size_t jj = j; jj <= cols; ++jj) a[piv][jj] /= p;
      for (std::size_t i = 0; i < rows; ++i) {
        if (i == piv || a[i][j] == 0) continue;
        const Rational f = a[i][j];
        for (std::size_t jj = j; jj <= cols; ++jj) a[i][jj] -= f * a[piv][jj];
      }
    }
    std::vector<Rational> sol(cols);
    for (std::size_t j = 0; j < cols; ++j) sol[j] = a[pivot_row[j]][cols];

    std::vector<Cyclo::Term> out;
    for (std::size_t j = 0; j < cols; ++j)
      if (sol[j] != 0) out.emplace_back(bd[j], sol[j]);
    return out;
  }

  // Descends to the minimal conductor; input terms must be canonical at n.
  static Cyclo minimize(unsigned n, std::vector<Cyclo::Term> terms) {
    if (terms.empty()) {
      Cyclo z;
      return z;
    }
    bool descended = true;
    while (n > 1 && descended) {
      descended = false;
      for (const auto& pp : factorize(n)) {
        unsigned d;
        if (pp.p == 2) {
          if (pp.nu <= 2) {
            d = n / 4;  // skip conductor 2 mod 4
          } else {
            d = n / 2;
          }
        } else {
          d = n / pp.p;
        }
        if (d == 0) continue;
        // x lies in Q(zeta_d) iff it is fixed by every sigma_j, j = 1 mod d.
        bool fixed = true;
        for (unsigned j = 1 + d; j < n && fixed; j += d) {
          if (gcd_u(j, n) != 1) continue;
          fixed = apply_galois(n, terms, j) == terms;
        }
        if (fixed) {
          terms = rebase(n, terms, std::max(1u, d));
          n = std::max(1u, d);
          descended = true;
          break;
        }
      }
    }
    Cyclo out;
    out.n_ = n;
    out.terms_ = std::move(terms);
    return out;
  }
};

Cyclo Cyclo::make(unsigned n, std::vector<Term> reduced_terms) {
  return CycloInternals::minimize(n, std::move(reduced_terms));
}

Cyclo::Cyclo(long v) {
  if (v != 0) terms_.emplace_back(0u, Rational(v));
}

Cyclo::Cyclo(Rational v) {
  if (v != 0) terms_.emplace_back(0u, std::move(v));
}

Cyclo::Cyclo(const Integer& v) {
  if (v != 0) terms_.emplace_back(0u, Rational(v));
}

Rational Cyclo::rational_value() const {
  if (n_ != 1) throw std::logic_error("rational_value on irrational cyclotomic");
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

Cyclo Cyclo::root(unsigned n, long long k) {
  if (n == 0) throw std::invalid_argument("root of unity with order 0");
  long long kk = k % static_cast<long long>(n);
  if (kk < 0) kk += n;
  unsigned ku = static_cast<unsigned>(kk);
  unsigned g = std::gcd(ku == 0 ? n : ku, n);
  n /= g;
  ku /= g;
  bool negate = false;
  if (n % 4 == 2) {
    // zeta_{2m}^k = (-1)^k * zeta_m^{k(m+1)/2} for odd m
    const unsigned m = n / 2;
    negate = (ku % 2) == 1;
    ku = static_cast<unsigned>((static_cast<unsigned long long>(ku) * ((m + 1) / 2)) % m);
    n = m;
  }
  RawMap raw;
  raw[ku % n] = negate ? Rational(-1) : Rational(1);
  return CycloInternals::from_raw(n, std::move(raw));
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

Cyclo operator+(const Cyclo& x, const Cyclo& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const unsigned m = lcm_u(x.n_, y.n_);
  RawMap raw = CycloInternals::lift(x, m);
  for (const auto& [k, c] : CycloInternals::lift(y, m)) raw[k] += c;
  return CycloInternals::from_raw(m, std::move(raw));
}

Cyclo operator-(const Cyclo& x, const Cyclo& y) { return x + (-y); }

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (x.is_zero() || y.is_zero()) return Cyclo();
  // Scaling by a nonzero rational keeps the support and the minimal conductor.
  if (x.n_ == 1) {
    Cyclo out = y;
    for (auto& [k, c] : out.terms_) c *= x.terms_[0].second;
    return out;
  }
  if (y.n_ == 1) return y * x;
  const unsigned m = lcm_u(x.n_, y.n_);
  const RawMap xs = CycloInternals::lift(x, m);
  const RawMap ys = CycloInternals::lift(y, m);
  RawMap raw;
  for (const auto& [k1, c1] : xs)
    for (const auto& [k2, c2] : ys) raw[(k1 + k2) % m] += c1 * c2;
  return CycloInternals::from_raw(m, std::move(raw));
}

Cyclo Cyclo::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return Cyclo(Rational(1) / terms_[0].second);
  if (terms_.size() == 1) {
    // c * zeta^k inverts term-wise.
    const auto& [k, c] = terms_[0];
    return Cyclo(Rational(1) / c) * root(n_, static_cast<long long>(n_) - k);
  }
  // 1/x = (prod of nontrivial conjugates) / norm, with the norm rational.
  Cyclo prod(1);
  for (unsigned j = 2; j < n_; ++j) {
    if (gcd_u(j, n_) != 1) continue;
    prod *= galois(j);
  }
  Cyclo norm = *this * prod;
  if (!norm.is_rational() || norm.is_zero())
    throw std::logic_error("cyclo inverse: norm computation failed");
  return Cyclo(Rational(1) / norm.rational_value()) * prod;
}

Cyclo Cyclo::galois(unsigned j) const {
  j %= n_;
  if (gcd_u(j == 0 ? n_ : j, n_) != 1) throw std::invalid_argument("galois: j not coprime");
  if (n_ == 1 || j == 1) return *this;
  return CycloInternals::minimize(n_, CycloInternals::apply_galois(n_, terms_, j));
}

Cyclo Cyclo::conj() const { return n_ == 1 ? *this : galois(n_ - 1); }

Cyclo Cyclo::pow(long long e) const {
  if (e == 0) return Cyclo(1);
  Cyclo base = e < 0 ? inv() : *this;
  unsigned long long k = e < 0 ? -(unsigned long long)e : (unsigned long long)e;
  Cyclo acc(1);
  while (k) {
    if (k & 1) acc *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return acc;
}

bool Cyclo::operator<(const Cyclo& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  const std::size_t m = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first;
    if (terms_[i].second != o.terms_[i].second) return terms_[i].second < o.terms_[i].second;
  }
  return terms_.size() < o.terms_.size();
}

Cyclo real_part(const Cyclo& x) { return Rational(1, 2) * (x + x.conj()); }

Cyclo imag_part(const Cyclo& x) {
  // (x - conj(x)) / (2i) = -i/2 * (x - conj(x))
  return Rational(-1, 2) * (Cyclo::root(4, 1) * (x - x.conj()));
}

std::optional<std::pair<unsigned, unsigned>> as_root_of_unity(const Cyclo& x) {
  if (x.is_zero()) return std::nullopt;
  if (x * x.conj() != Cyclo(1)) return std::nullopt;
  // Roots of unity in Q(zeta_n) form the cyclic group of order lcm(2, n).
  const unsigned L = lcm_u(2, x.conductor());
  if (x.pow(L) != Cyclo(1)) return std::nullopt;
  unsigned order = L;
  for (unsigned da = 1; da * da <= L; ++da) {
    if (L % da != 0) continue;
    for (unsigned d : {da, L / da})
      if (d < order && x.pow(d) == Cyclo(1)) order = d;
  }
  Cyclo pw(1);
  const Cyclo zeta = Cyclo::root(order);
  for (unsigned j = 0; j < order; ++j) {
    if (pw == x) return std::make_pair(order, j);
    pw *= zeta;
  }
  return std::nullopt;  // unreachable
}

// ---------------------------------------------------------------------------
// Certified numeric evaluation: exact rational interval arithmetic with
// alternating-series bounds for pi, sin, and cos.

namespace {

struct RatInterval {
  Rational lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rational v) : lo(v), hi(v) {}
  RatInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {}

  RatInterval operator+(const RatInterval& o) const { return {lo + o.lo, hi + o.hi}; }
  RatInterval operator-(const RatInterval& o) const { return {lo - o.hi, hi - o.lo}; }
  RatInterval operator*(const RatInterval& o) const {
    Rational a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
    return {std::min(std::min(a, b), std::min(c, d)), std::max(std::max(a, b), std::max(c, d))};
  }
  RatInterval operator-() const { return {-hi, -lo}; }
  Rational mag() const { return std::max(abs(lo), abs(hi)); }
};

Rational round_dir(const Rational& q, unsigned bits, bool up) {
  const Integer scale = Integer(1) << bits;
  Integer scaled_num = num(q) * scale;
  Integer d = den(q);  // always positive
  Integer quot = scaled_num / d, rem = scaled_num % d;
  if (rem != 0 && (up ? scaled_num > 0 : scaled_num < 0)) quot += up ? 1 : -1;
  return Rational(quot, scale);
}

// Shrinks endpoint representations without shrinking the interval.
RatInterval round_out(const RatInterval& iv, unsigned bits) {
  return {round_dir(iv.lo, bits, false), round_dir(iv.hi, bits, true)};
}

Rational pow2_neg(unsigned bits) { return Rational(1, Integer(1) << bits); }

// atan(1/x) for integer x >= 2, enclosed via the alternating Leibniz series.
RatInterval atan_inv(unsigned x, unsigned bits) {
  const Rational eps = pow2_neg(bits + 4);
  Rational term(1, x), sum(0);
  Rational x2(static_cast<long>(x) * x);
  unsigned k = 0;
  while (true) {
    Rational contrib = (k % 2 == 0) ? term : -term;
    sum += contrib;
    term /= x2;
    term = term * Rational(2 * k + 1, 2 * k + 3);
    ++k;
    if (term < eps) break;
  }
  // Alternating with decreasing terms: the remainder has the sign of the
  // next term (index k) and magnitude below it.
  if (k % 2 == 0) return {sum, sum + term};
  return {sum - term, sum};
}

RatInterval pi_interval(unsigned bits) {
  // Machin: pi = 16 atan(1/5) - 4 atan(1/239)
  RatInterval a = atan_inv(5, bits + 6), b = atan_inv(239, bits + 6);
  RatInterval r = RatInterval(Rational(16)) * a - RatInterval(Rational(4)) * b;
  return round_out(r, bits);
}

// cos/sin on an interval contained in [-1, 1], by Taylor partial sums with a
// rigorous tail bound.
RatInterval cos_enc(const RatInterval& t, unsigned bits) {
  const Rational eps = pow2_neg(bits + 4);
  RatInterval t2 = round_out(t * t, bits + 16);
  RatInterval acc(Rational(1));
  RatInterval pw(Rational(1));
  Rational bound(1);
  unsigned k = 0;
  while (true) {
    pw = round_out(pw * t2, bits + 16);
    k += 2;
    pw = pw * RatInterval(Rational(1, static_cast<long>(k) * (k - 1)));
    bound /= static_cast<long>(k) * (k - 1);
    acc = (k / 2) % 2 == 1 ? acc - pw : acc + pw;
    if (bound < eps) break;
  }
  acc = acc + RatInterval(-bound, bound);
  return round_out(acc, bits);
}

RatInterval sin_enc(const RatInterval& t, unsigned bits) {
  const Rational eps = pow2_neg(bits + 4);
  RatInterval t2 = round_out(t * t, bits + 16);
  RatInterval acc = t;
  RatInterval pw = t;
  Rational bound = t.mag();
  unsigned k = 1;
  while (true) {
    pw = round_out(pw * t2, bits + 16);
    k += 2;
    pw = pw * RatInterval(Rational(1, static_cast<long>(k) * (k - 1)));
    bound /= static_cast<long>(k) * (k - 1);
    acc = (k / 2) % 2 == 1 ? acc - pw : acc + pw;
    if (bound < eps) break;
  }
  acc = acc + RatInterval(-bound, bound);
  return round_out(acc, bits);
}

// Enclosure of exp(2 pi i k / n) at roughly `bits` of precision.
std::pair<RatInterval, RatInterval> root_enclosure(unsigned n, unsigned k, unsigned bits) {
  const Rational u(k, n);  // in [0, 1)
  // Octant split: u = q/4 + w with |w| <= 1/8, angle = q * pi/2 + 2 pi w.
  Integer qi = num(u * 4 * 2 + 1) / den(u * 4 * 2 + 1) / 2;  // round(4u)
  long q = static_cast<long>(qi);
  Rational w = u - Rational(q, 4);
  RatInterval pi = pi_interval(bits + 8);
  RatInterval phi = pi * RatInterval(2 * w);
  RatInterval c = cos_enc(phi, bits), s = sin_enc(phi, bits);
  switch (((q % 4) + 4) % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

ComplexInterval eval_box(const Cyclo& x, unsigned bits) {
  RatInterval re, im;
  for (const auto& [k, coef] : x.terms()) {
    auto [c, s] = root_enclosure(x.conductor(), k, bits);
    re = round_out(re + RatInterval(coef) * c, bits + 8);
    im = round_out(im + RatInterval(coef) * s, bits + 8);
  }
  return ComplexInterval{re.lo, re.hi, im.lo, im.hi};
}

}  // namespace

ComplexInterval Cyclo::to_complex(unsigned digits) const {
  if (digits == 0) digits = 1;
  if (is_zero()) return ComplexInterval{0, 0, 0, 0};
  // Nested refinement: each tier's box is intersected with the previous one,
  // so results for higher `digits` are contained in those for lower.
  Rational target = 1;
  for (unsigned i = 0; i < digits; ++i) target /= 10;
  ComplexInterval acc;
  bool first = true;
  for (unsigned tier = 0;; ++tier) {
    // The bit ladder must not depend on `digits`: all calls walk the same
    // nested chain of boxes, so higher-digit results are contained in
    // lower-digit ones.
    const unsigned bits = 32 + 32 * tier;
    ComplexInterval box = eval_box(*this, bits);
    if (first) {
      acc = box;
      first = false;
    } else {
      acc.re_lo = std::max(acc.re_lo, box.re_lo);
      acc.re_hi = std::min(acc.re_hi, box.re_hi);
      acc.im_lo = std::max(acc.im_lo, box.im_lo);
      acc.im_hi = std::min(acc.im_hi, box.im_hi);
    }
    if (acc.re_width() < target && acc.im_width() < target) return acc;
  }
}

int Cyclo::sign_real() const {
  if (is_zero()) return 0;
  if (is_rational()) return rational_value() > 0 ? 1 : -1;
  for (unsigned digits = 6;; digits *= 2) {
    ComplexInterval box = to_complex(digits);
    if (box.re_lo > 0) return 1;
    if (box.re_hi < 0) return -1;
  }
}

// ---------------------------------------------------------------------------
// Text form. Grammar:
//   expr  := term (('+' | '-') term)*
//   term  := coeff ('*' root)? | root
//   coeff := int ('/' posint)?
//   root  := 'E(' posint ')' ('^' int)?

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  bool accept(char c) {
    if (peek(c)) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
  }

  Integer integer(bool allow_sign) {
    skip_ws();
    bool neg = false;
    if (allow_sign && pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      neg = s[pos] == '-';
      ++pos;
      skip_ws();
    }
    std::size_t digits_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits_start) throw ParseError("expected integer", digits_start);
    Integer v(s.substr(digits_start, pos - digits_start));
    return neg ? Integer(-v) : v;
  }

  Rational coeff() {
    Integer n = integer(true);
    if (accept('/')) {
      Integer d = integer(false);
      if (d == 0) throw ParseError("zero denominator", pos);
      return Rational(n, d);
    }
    return Rational(n);
  }

  Cyclo root() {
    skip_ws();
    std::size_t start = pos;
    if (pos >= s.size() || s[pos] != 'E') throw ParseError("expected 'E('", start);
    ++pos;
    expect('(');
    Integer n = integer(false);
    if (n <= 0 || n > 1000000) throw ParseError("root order out of range", start);
    expect(')');
    long long k = 1;
    if (accept('^')) {
      Integer e = integer(true);
      Integer nn(static_cast<unsigned long>(static_cast<unsigned>(n)));
      Integer m = e % nn;
      if (m < 0) m += nn;
      k = static_cast<long long>(m);
    }
    return Cyclo::root(static_cast<unsigned>(n), k);
  }

  Cyclo term() {
    skip_ws();
    if (pos < s.size() && s[pos] == 'E') return root();
    Rational c = coeff();
    if (accept('*')) return Cyclo(c) * root();
    return Cyclo(c);
  }

  // A leading sign in front of the first term ("-E(8) + ...") is accepted so
  // that canonical formatting round-trips.
  Cyclo signed_term() {
    skip_ws();
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      std::size_t save = pos;
      const bool neg = s[pos] == '-';
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == 'E') {
        Cyclo r = root();
        return neg ? -r : r;
      }
      pos = save;
    }
    return term();
  }

  Cyclo expr() {
    Cyclo acc = signed_term();
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (s[pos] == '+') {
        ++pos;
        acc += term();
      } else if (s[pos] == '-') {
        ++pos;
        // Sign belongs to the operator; the term's own coeff must be unsigned
        // here, but we reuse term() and negate, accepting "a - -b" as a - (-b).
        acc -= term();
      } else {
        throw ParseError("unexpected character", pos);
      }
    }
    return acc;
  }
};

std::string coeff_str(const Rational& c) {
  std::ostringstream os;
  os << c;
  return os.str();
}

}  // namespace

Cyclo Cyclo::parse(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  if (p.pos >= text.size()) throw ParseError("empty expression", 0);
  return p.expr();
}

std::string Cyclo::str() const {
  if (is_zero()) return "0";
  if (n_ == 1) return coeff_str(terms_[0].second);
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const bool neg = c < 0;
    const Rational mag = neg ? Rational(-c) : c;
    std::string piece;
    if (k == 0) {
      piece = coeff_str(mag);
    } else {
      std::string root = "E(" + std::to_string(n_) + ")";
      if (k != 1) root += "^" + std::to_string(k);
      piece = (mag == 1) ? root : coeff_str(mag) + "*" + root;
    }
    if (first) {
      out = neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decimal rendering.

namespace {

// Rounds a real cyclotomic to `digits` decimals, half-even. Returns the
// scaled integer value v with x ~ v / 10^digits.
Integer round_decimal(const Cyclo& x, unsigned digits) {
  Integer scale = 1;
  for (unsigned i = 0; i < digits; ++i) scale *= 10;
  if (x.is_rational()) {
    const Rational v = x.rational_value() * scale;
    Integer fl = num(v) / den(v);
    if (v < 0 && fl * den(v) != num(v)) fl -= 1;  // floor
    const Rational frac = v - fl;
    if (frac > Rational(1, 2)) return fl + 1;
    if (frac < Rational(1, 2)) return fl;
    return (fl % 2 == 0) ? fl : fl + 1;  // half-even
  }
  for (unsigned d = digits + 6;; d *= 2) {
    const ComplexInterval box = x.to_complex(d);
    const Rational lo = box.re_lo * scale, hi = box.re_hi * scale;
    Integer fl_lo = num(lo) / den(lo);
    if (lo < 0 && fl_lo * den(lo) != num(lo)) fl_lo -= 1;
    // Candidate rounding boundaries are half-integers; check that the whole
    // interval rounds the same way.
    const Rational half(1, 2);
    Integer cand_lo = (lo - fl_lo > half) ? fl_lo + 1 : fl_lo;
    Integer fl_hi = num(hi) / den(hi);
    if (hi < 0 && fl_hi * den(hi) != num(hi)) fl_hi -= 1;
    Integer cand_hi = (hi - fl_hi > half) ? fl_hi + 1 : fl_hi;
    // An irrational value never sits exactly on a boundary, so refinement
    // eventually separates it from every half-integer.
    if (cand_lo == cand_hi && lo - fl_lo != half && hi - fl_hi != half) return cand_lo;
  }
}

std::string decimal_str(const Integer& scaled, unsigned digits, bool strip) {
  Integer v = scaled;
  const bool neg = v < 0;
  if (neg) v = -v;
  std::string s = v.str();
  if (s.size() <= digits) s = std::string(digits + 1 - s.size(), '0') + s;
  std::string ip = s.substr(0, s.size() - digits);
  std::string fp = s.substr(s.size() - digits);
  if (strip) {
    while (!fp.empty() && fp.back() == '0') fp.pop_back();
  }
  std::string out = ip + (fp.empty() ? "" : "." + fp);
  if (neg && out.find_first_not_of("0.") != std::string::npos) out = "-" + out;
  return out;
}

}  // namespace

std::string format_numeric(const Cyclo& x, unsigned digits) {
  const Cyclo re = real_part(x), im = imag_part(x);
  const std::string re_s = decimal_str(round_decimal(re, digits), digits, re.is_rational());
  if (im.is_zero()) return re_s;
  const Integer im_scaled = round_decimal(im, digits);
  std::string im_s = decimal_str(im_scaled < 0 ? Integer(-im_scaled) : im_scaled, digits,
                                 im.is_rational());
  if (im_s == "1") im_s.clear();
  const std::string im_part = im_s + "i";
  if (re.is_zero()) return (im_scaled < 0 ? "-" : "") + im_part;
  return re_s + (im_scaled < 0 ? " - " : " + ") + im_part;
}

// parse_rational / format_rational -------------------------------------------

Rational parse_rational(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip();
  std::size_t start = pos;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) ++pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == start) throw std::invalid_argument("bad rational: " + text);
  Integer n(text.substr(start, pos - start));
  skip();
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    skip();
    std::size_t dstart = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == dstart) throw std::invalid_argument("bad rational: " + text);
    Integer d(text.substr(dstart, pos - dstart));
    if (d == 0) throw std::invalid_argument("zero denominator");
    skip();
    if (pos != text.size()) throw std::invalid_argument("bad rational: " + text);
    return Rational(n, d);
  }
  skip();
  if (pos != text.size()) throw std::invalid_argument("bad rational: " + text);
  return Rational(n);
}

std::string format_rational(const Rational& q) { return coeff_str(q); }

}  // namespace fcat
