#include "fcat/ring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fcat {

namespace {

std::string tuple_str(std::initializer_list<int> ix) {
  std::string s = "(";
  bool first = true;
  for (int v : ix) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + ")";
}

}  // namespace

std::vector<int> FusionRing::product(int a, int b) const {
  std::vector<int> out;
  for (int c = 1; c <= rank_; ++c)
    if (n(a, b, c)) out.push_back(c);
  return out;
}

bool FusionRing::commutative() const {
  for (int a = 1; a <= rank_; ++a)
    for (int b = a + 1; b <= rank_; ++b)
      for (int c = 1; c <= rank_; ++c)
        if (n(a, b, c) != n(b, a, c)) return false;
  return true;
}

FusionRing validate_ring(int rank, const std::vector<std::uint8_t>& table) {
  if (rank < 1) throw RingError("rank must be positive");
  if (table.size() != static_cast<std::size_t>(rank) * rank * rank)
    throw RingError("table is not rank^3");
  FusionRing ring;
  ring.rank_ = rank;
  ring.table_ = table;

  for (std::size_t i = 0; i < table.size(); ++i) {
    if (table[i] > 1) {
      const int a = static_cast<int>(i / (rank * rank)) + 1;
      const int b = static_cast<int>((i / rank) % rank) + 1;
      const int c = static_cast<int>(i % rank) + 1;
      throw RingError("multiplicity N" + tuple_str({a, b, c}) +
                      " exceeds 1: only multiplicity-free rings are supported");
    }
  }

  // Eq. (2): a x 1 = 1 x a = a.
  for (int a = 1; a <= rank; ++a)
    for (int b = 1; b <= rank; ++b) {
      const bool want = a == b;
      if (ring.n(a, 1, b) != want)
        throw RingError("unit axiom fails at N" + tuple_str({a, 1, b}));
      if (ring.n(1, a, b) != want)
        throw RingError("unit axiom fails at N" + tuple_str({1, a, b}));
    }

  // Eq. (3): N_{a,b}^1 = delta_{b*}^a for an involution * with 1* = 1.
  ring.dual_.assign(rank, 0);
  for (int b = 1; b <= rank; ++b) {
    int star = 0;
    for (int a = 1; a <= rank; ++a) {
      if (!ring.n(a, b, 1)) continue;
      if (star != 0)
        throw RingError("duality axiom fails: both N" + tuple_str({star, b, 1}) + " and N" +
                        tuple_str({a, b, 1}) + " are 1");
      star = a;
    }
    if (star == 0) throw RingError("duality axiom fails: no a with N(a," + std::to_string(b) + ",1)=1");
    ring.dual_[b - 1] = star;
  }
  if (ring.dual_[0] != 1) throw RingError("duality axiom fails: 1* != 1");
  for (int a = 1; a <= rank; ++a) {
    if (ring.dual(ring.dual(a)) != a)
      throw RingError("duality is not an involution at element " + std::to_string(a));
    // N_{a,b}^1 must also vanish unless b = a*.
    for (int b = 1; b <= rank; ++b)
      if (ring.n(a, b, 1) != (ring.dual(a) == b))
        throw RingError("duality axiom fails at N" + tuple_str({a, b, 1}));
  }

  // Eq. (4): associativity.
  for (int a = 1; a <= rank; ++a)
    for (int b = 1; b <= rank; ++b)
      for (int c = 1; c <= rank; ++c)
        for (int d = 1; d <= rank; ++d) {
          int lhs = 0, rhs = 0;
          for (int e = 1; e <= rank; ++e) {
            lhs += ring.n(a, b, e) && ring.n(e, c, d) ? 1 : 0;
            rhs += ring.n(a, e, d) && ring.n(b, c, e) ? 1 : 0;
          }
          if (lhs != rhs)
            throw RingError("associativity fails at (a,b,c,d)=" + tuple_str({a, b, c, d}) +
                            ": " + std::to_string(lhs) + " != " + std::to_string(rhs));
        }

  return ring;
}

std::vector<double> fp_dims(const FusionRing& ring, double tol) {
  const int r = ring.rank();
  std::vector<double> dims(r);
  for (int a = 1; a <= r; ++a) {
    // Power iteration on N_a + I; the shift makes the iteration converge for
    // periodic (e.g. permutation) matrices as well.
    std::vector<double> x(r, 1.0), y(r);
    double lambda = 0.0;
    for (int it = 0; it < 100000; ++it) {
      for (int b = 1; b <= r; ++b) {
        double s = x[b - 1];
        for (int c = 1; c <= r; ++c)
          if (ring.n(a, b, c)) s += x[c - 1];
        y[b - 1] = s;
      }
      double num = 0.0, den = 0.0;
      for (int i = 0; i < r; ++i) {
        num += y[i] * x[i];
        den += x[i] * x[i];
      }
      const double next = num / den - 1.0;
      double norm = 0.0;
      for (double v : y) norm += v * v;
      norm = std::sqrt(norm);
      for (int i = 0; i < r; ++i) x[i] = y[i] / norm;
      if (it > 0 && std::abs(next - lambda) < tol) {
        lambda = next;
        break;
      }
      lambda = next;
    }
    dims[a - 1] = lambda;
  }
  return dims;
}

bool is_automorphism(const FusionRing& ring, const std::vector<int>& sigma) {
  const int r = ring.rank();
  if (static_cast<int>(sigma.size()) != r || sigma[0] != 1) return false;
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      for (int c = 1; c <= r; ++c)
        if (ring.n(sigma[a - 1], sigma[b - 1], sigma[c - 1]) != ring.n(a, b, c)) return false;
  return true;
}

RingAutomorphismGroup automorphisms(const FusionRing& ring) {
  const int r = ring.rank();
  const std::vector<double> dims = fp_dims(ring, 1e-9);

  // Candidate images: same self-duality class and same FP dimension.
  auto compatible = [&](int a, int b) {
    const bool sa = ring.dual(a) == a, sb = ring.dual(b) == b;
    return sa == sb && std::abs(dims[a - 1] - dims[b - 1]) < 1e-6;
  };

  RingAutomorphismGroup group;
  std::vector<int> sigma(r, 0);
  std::vector<bool> used(r + 1, false);
  sigma[0] = 1;
  used[1] = true;

  auto search = [&](auto&& self, int a) -> void {
    if (a > r) {
      if (is_automorphism(ring, sigma)) group.elements.push_back(sigma);
      return;
    }
    for (int img = 1; img <= r; ++img) {
      if (used[img] || !compatible(a, img)) continue;
      // The image of a* is forced to img*.
      sigma[a - 1] = img;
      used[img] = true;
      self(self, a + 1);
      used[img] = false;
      sigma[a - 1] = 0;
    }
  };
  search(search, 2);

  std::sort(group.elements.begin(), group.elements.end());
  return group;
}

std::vector<int> compose(const std::vector<int>& s1, const std::vector<int>& s2) {
  std::vector<int> out(s1.size());
  for (std::size_t i = 0; i < s1.size(); ++i) out[i] = s1[s2[i] - 1];
  return out;
}

std::vector<int> inverse_perm(const std::vector<int>& s) {
  std::vector<int> out(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out[s[i] - 1] = static_cast<int>(i) + 1;
  return out;
}

}  // namespace fcat
