#include "fcat/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

namespace fcat {

namespace {

int legendre(int a, int p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  int result = 1;
  // Euler's criterion by repeated squaring mod p.
  long long base = a, e = (p - 1) / 2, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  result = acc == 1 ? 1 : -1;
  return result;
}

Cyclo gauss_sqrt_prime(unsigned p) {
  if (p == 2) return Cyclo::root(8, 1) - Cyclo::root(8, 3);
  Cyclo g;
  for (unsigned k = 1; k < p; ++k)
    g += Cyclo(legendre(static_cast<int>(k), static_cast<int>(p))) * Cyclo::root(p, k);
  // g = sqrt(p) for p = 1 mod 4, i*sqrt(p) for p = 3 mod 4.
  if (p % 4 == 1) return g;
  return -Cyclo::root(4, 1) * g;
}

}  // namespace

Cyclo sqrt_uint(unsigned n) {
  if (n == 0) return Cyclo();
  Cyclo out(1);
  for (unsigned p = 2; p * p <= n; ++p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) out *= Cyclo(static_cast<long>(p));
    if (e % 2) out *= gauss_sqrt_prime(p);
  }
  if (n > 1) out *= gauss_sqrt_prime(n);
  return out;
}

namespace {

// Census element orderings for pointed Z_n: label index (0-based) -> group
// exponent.
const std::vector<int>& pointed_exponents(int n) {
  static const std::map<int, std::vector<int>> orders = {
      {2, {0, 1}},          {3, {0, 1, 2}},          {4, {0, 2, 1, 3}},
      {5, {0, 1, 4, 3, 2}}, {6, {0, 3, 1, 5, 2, 4}}, {7, {0, 1, 6, 4, 3, 5, 2}},
  };
  auto it = orders.find(n);
  if (it == orders.end())
    throw std::invalid_argument("pointed cyclic constructor supports n = 2..7");
  return it->second;
}

FusionRing pointed_ring(int n, const std::vector<int>& exps, std::vector<int>& label_of_exp) {
  label_of_exp.assign(n, 0);
  for (int i = 0; i < n; ++i) label_of_exp[exps[i]] = i + 1;
  std::vector<std::uint8_t> table(static_cast<std::size_t>(n) * n * n, 0);
  auto set = [&](int a, int b, int c) {
    table[(static_cast<std::size_t>(a - 1) * n + (b - 1)) * n + (c - 1)] = 1;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) set(a, b, label_of_exp[(exps[a - 1] + exps[b - 1]) % n]);
  return validate_ring(n, table);
}

FMap f_map_from(const FusionRing& ring,
                const std::function<Cyclo(int, int, int)>& value_of_abc) {
  FMap f;
  for (const auto& k : SkeletalData::admissible_f(ring)) f[k] = value_of_abc(k[0], k[1], k[2]);
  return f;
}

}  // namespace

SkeletalData build_pointed_cyclic(int n, int q) {
  const auto& exps = pointed_exponents(n);
  if (q < 0 || q >= n) throw std::invalid_argument("cocycle class q must lie in 0..n-1");
  std::vector<int> label_of_exp;
  FusionRing ring = pointed_ring(n, exps, label_of_exp);
  // omega_q(a,b,c) = zeta_n^(q * ea * floor((eb+ec)/n))
  FMap f = f_map_from(ring, [&](int a, int b, int c) {
    const int ea = exps[a - 1], eb = exps[b - 1], ec = exps[c - 1];
    return Cyclo::root(n, static_cast<long long>(q) * ea * ((eb + ec) / n));
  });
  return SkeletalData::make(std::move(ring), std::move(f));
}

SkeletalData build_fib(int f_class) {
  if (f_class != 1 && f_class != 2) throw std::invalid_argument("fib class must be 1 or 2");
  FusionRing ring = validate_ring(2, {1, 0, 0, 1, 0, 1, 1, 1});
  const Cyclo phi = -Cyclo::root(5, 2) - Cyclo::root(5, 3);       // (1+sqrt5)/2
  const Cyclo phi_bar = Cyclo(1) + Cyclo::root(5, 2) + Cyclo::root(5, 3);
  const Cyclo u = (f_class == 1 ? phi : phi_bar).inv();  // 1/phi resp. 1/phi_bar
  FMap f;
  for (const auto& k : SkeletalData::admissible_f(ring)) {
    if (k[0] == 1 || k[1] == 1 || k[2] == 1) {
      f[k] = Cyclo(1);
    } else if (k[3] == 1) {
      f[k] = Cyclo(1);  // [F_1^{222}]_2^2
    } else {
      // [F_2^{222}] = [[u, 1], [u, -u]] over (e,f) in {1,2}^2; K^2 = I.
      const int e = k[4], ff = k[5];
      if (e == 1 && ff == 1) f[k] = u;
      if (e == 1 && ff == 2) f[k] = Cyclo(1);
      if (e == 2 && ff == 1) f[k] = u;
      if (e == 2 && ff == 2) f[k] = -u;
    }
  }
  return SkeletalData::make(std::move(ring), std::move(f));
}

SkeletalData build_ising(int f_class) {
  if (f_class != 1 && f_class != 2) throw std::invalid_argument("ising class must be 1 or 2");
  // labels: 1 = vacuum, 2 = fermion, 3 = sigma
  FusionRing ring = validate_ring(
      3, {1, 0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1, 1, 0});
  const Cyclo kappa(f_class == 1 ? 1 : -1);
  const Cyclo inv_sqrt2 = sqrt_uint(2).inv();
  FMap f;
  for (const auto& k : SkeletalData::admissible_f(ring)) {
    if (k[0] == 1 || k[1] == 1 || k[2] == 1) {
      f[k] = Cyclo(1);
      continue;
    }
    const FKey abc{k[0], k[1], k[2]};
    if (abc == FKey{2, 3, 2} || abc == FKey{3, 2, 3}) {
      // [F_3^{232}]_3^3 = [F_2^{323}]_3^3 = -1; the d = 1 block of (3,2,3)
      // stays +1.
      f[k] = k[3] == 1 ? Cyclo(1) : Cyclo(-1);
    } else if (abc == FKey{3, 3, 3}) {
      const int e = k[4], ff = k[5];
      f[k] = kappa * inv_sqrt2 * Cyclo(e == 2 && ff == 2 ? -1 : 1);
    } else {
      f[k] = Cyclo(1);
    }
  }
  return SkeletalData::make(std::move(ring), std::move(f));
}

SkeletalData build_ty(int n, int bichar, int sign) {
  if (n < 2 || n > 5) throw std::invalid_argument("TY constructor supports n = 2..5");
  if (std::gcd(bichar, n) != 1)
    throw std::invalid_argument("bicharacter index must be invertible mod n");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +-1");
  const auto& exps = pointed_exponents(n);
  const int m = n + 1;  // the self-dual object
  std::vector<int> label_of_exp(n, 0);
  for (int i = 0; i < n; ++i) label_of_exp[exps[i]] = i + 1;

  std::vector<std::uint8_t> table(static_cast<std::size_t>(m) * m * m, 0);
  auto set = [&](int a, int b, int c) {
    table[(static_cast<std::size_t>(a - 1) * m + (b - 1)) * m + (c - 1)] = 1;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) set(a, b, label_of_exp[(exps[a - 1] + exps[b - 1]) % n]);
  for (int a = 1; a <= n; ++a) {
    set(a, m, m);
    set(m, a, m);
    set(m, m, a);
  }
  FusionRing ring = validate_ring(m, table);

  auto chi = [&](int a, int b) {
    return Cyclo::root(n, static_cast<long long>(bichar) * exps[a - 1] * exps[b - 1]);
  };
  const Cyclo fm = Cyclo(sign) * sqrt_uint(static_cast<unsigned>(n)).inv();

  FMap f;
  for (const auto& k : SkeletalData::admissible_f(ring)) {
    const int a = k[0], b = k[1], c = k[2];
    if (a == m && b != m && c == m) {
      f[k] = chi(b, k[3]);  // [F_d^{m a m}] = chi(a, d)
    } else if (a != m && b == m && c != m) {
      f[k] = chi(a, c);  // [F_m^{a m b}] = chi(a, b)
    } else if (a == m && b == m && c == m) {
      f[k] = fm * chi(k[4], k[5]).inv();  // [F_m^{mmm}]_f^e = sign/sqrt(n) * chi(e,f)^-1
    } else {
      f[k] = Cyclo(1);
    }
  }
  return SkeletalData::make(std::move(ring), std::move(f));
}

// ---------------------------------------------------------------------------
// Braiding solver: DFS over R-slot assignments with propagation through the
// hexagon instances.

namespace {

struct HexInstance {
  int family;  // 1 = Eq.(17), 2 = Eq.(18)
  int a, b, c, d, e, g;
};

std::vector<HexInstance> hexagon_instances(const FusionRing& ring) {
  std::vector<HexInstance> out;
  const int r = ring.rank();
  for (int a = 1; a <= r; ++a)
    for (int c = 1; c <= r; ++c)
      for (int e = 1; e <= r; ++e) {
        if (!ring.n(a, c, e)) continue;
        for (int b = 1; b <= r; ++b)
          for (int d = 1; d <= r; ++d) {
            if (!ring.n(e, b, d)) continue;
            for (int g = 1; g <= r; ++g) {
              if (!ring.n(a, g, d) || !ring.n(c, b, g)) continue;
              out.push_back({1, a, b, c, d, e, g});
              out.push_back({2, a, b, c, d, e, g});
            }
          }
      }
  return out;
}

struct BraidingSearch {
  const SkeletalData& data;
  const FusionRing& ring;
  unsigned max_order;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  // An instance compiled against the fixed F-data:
  //   family 1:  v(l1) * mid * v(l2)       = sum_i coef_i * v(slot_i)
  //   family 2:  v(l1)^-1 * mid * v(l2)^-1 = sum_i coef_i * v(slot_i)^-1
  struct Compiled {
    int family;
    RKey l1, l2;
    Cyclo mid;
    std::vector<std::pair<RKey, Cyclo>> rhs;  // (slot, t1*t3)
  };

  std::vector<RKey> slots;           // non-vacuum slots, sorted
  std::map<RKey, Cyclo> assignment;  // includes vacuum slots fixed at 1
  std::vector<Compiled> instances;
  std::vector<RMap> solutions;

  BraidingSearch(const SkeletalData& d, unsigned mo, std::uint64_t b)
      : data(d), ring(d.ring()), max_order(mo), budget(b) {
    for (int a = 1; a <= ring.rank(); ++a)
      for (int b2 = 1; b2 <= ring.rank(); ++b2)
        for (int c = 1; c <= ring.rank(); ++c) {
          if (!ring.n(a, b2, c)) continue;
          if (a == 1 || b2 == 1)
            assignment[{a, b2, c}] = Cyclo(1);
          else
            slots.push_back({a, b2, c});
        }
    for (const auto& in : hexagon_instances(ring)) {
      Compiled ci;
      ci.family = in.family;
      ci.l1 = in.family == 1 ? RKey{in.c, in.a, in.e} : RKey{in.a, in.c, in.e};
      ci.l2 = in.family == 1 ? RKey{in.c, in.b, in.g} : RKey{in.b, in.c, in.g};
      ci.mid = data.f(in.a, in.c, in.b, in.d, in.e, in.g);
      for (int f = 1; f <= ring.rank(); ++f) {
        if (!ring.n(in.c, f, in.d) || !ring.n(in.a, in.b, f)) continue;
        const Cyclo& t1 = data.f(in.c, in.a, in.b, in.d, in.e, f);
        if (t1.is_zero()) continue;
        const Cyclo& t3 = data.f(in.a, in.b, in.c, in.d, f, in.g);
        if (t3.is_zero()) continue;
        const RKey slot = in.family == 1 ? RKey{in.c, f, in.d} : RKey{f, in.c, in.d};
        ci.rhs.emplace_back(slot, t1 * t3);
      }
      if (ci.mid.is_zero() && ci.rhs.empty()) continue;  // vacuously 0 = 0
      instances.push_back(std::move(ci));
    }
  }

  const Cyclo* value(const RKey& k) const {
    auto it = assignment.find(k);
    return it == assignment.end() ? nullptr : &it->second;
  }

  bool order_ok(const Cyclo& v) const {
    auto root = as_root_of_unity(v);
    return root && max_order % root->first == 0;
  }

  // Evaluates one instance against the partial assignment. Returns false on
  // a definite contradiction. If exactly one slot occurrence is unassigned,
  // solves for it and appends to `derived`.
  bool inspect(const Compiled& in, std::vector<std::pair<RKey, Cyclo>>& derived) const {
    const Cyclo* v1 = value(in.l1);
    const Cyclo* v2 = value(in.l2);
    int unknown_lhs = (v1 ? 0 : 1) + (v2 ? 0 : 1);
    if (in.l1 == in.l2) unknown_lhs = v1 ? 0 : 2;

    Cyclo rhs_known;
    int unknown_rhs = -1;
    int n_unknown_rhs = 0;
    for (std::size_t i = 0; i < in.rhs.size(); ++i) {
      if (const Cyclo* v = value(in.rhs[i].first)) {
        rhs_known += in.rhs[i].second * (in.family == 1 ? *v : v->inv());
      } else {
        unknown_rhs = static_cast<int>(i);
        ++n_unknown_rhs;
      }
    }

    const int total_unknown = unknown_lhs + n_unknown_rhs;
    if (total_unknown == 0) {
      const Cyclo lhs = in.family == 1 ? *v1 * in.mid * *v2 : v1->inv() * in.mid * v2->inv();
      return lhs == rhs_known;
    }
    if (total_unknown != 1) return true;  // nothing to derive yet

    if (unknown_lhs == 1) {
      // exactly one of l1, l2 unassigned (and l1 != l2)
      const RKey u = v1 ? in.l2 : in.l1;
      const Cyclo& known = v1 ? *v1 : *v2;
      const Cyclo factor = in.family == 1 ? known * in.mid : known.inv() * in.mid;
      if (factor.is_zero()) return rhs_known.is_zero();
      const Cyclo solved = rhs_known * factor.inv();
      if (solved.is_zero()) return false;  // R-symbols are nonzero
      derived.emplace_back(u, in.family == 1 ? solved : solved.inv());
      return true;
    }
    if (unknown_lhs == 0) {
      const auto& ref = in.rhs[unknown_rhs];
      const Cyclo lhs = in.family == 1 ? *v1 * in.mid * *v2 : v1->inv() * in.mid * v2->inv();
      const Cyclo solved = (lhs - rhs_known) * ref.second.inv();
      if (solved.is_zero()) return false;
      derived.emplace_back(ref.first, in.family == 1 ? solved : solved.inv());
      return true;
    }
    return true;  // quadratic in one slot; handled by seeding
  }

  // Candidate pool for a seed slot: exact square roots from a quadratic
  // instance when available, otherwise all roots of unity of order dividing
  // max_order.
  std::vector<Cyclo> seed_pool(const RKey& seed) const {
    for (const auto& in : instances) {
      if (!(in.l1 == seed && in.l2 == seed)) continue;
      if (in.mid.is_zero()) continue;
      Cyclo rhs;
      bool rhs_ok = true;
      for (const auto& [slot, coef] : in.rhs) {
        const Cyclo* v = value(slot);
        if (!v) {
          rhs_ok = false;
          break;
        }
        rhs += coef * (in.family == 1 ? *v : v->inv());
      }
      if (!rhs_ok) continue;
      Cyclo sq = rhs * in.mid.inv();  // s^2 (family 1) or s^-2 (family 2)
      if (sq.is_zero()) continue;
      if (in.family == 2) sq = sq.inv();
      const auto root = as_root_of_unity(sq);
      if (!root) return {};
      const auto [m, j] = *root;
      std::vector<Cyclo> pool;
      for (unsigned t = 0; t < 2; ++t) {
        Cyclo cand = Cyclo::root(2 * m, j + m * t);
        if (order_ok(cand)) pool.push_back(cand);
      }
      return pool;
    }
    std::vector<Cyclo> pool;
    for (unsigned t = 0; t < max_order; ++t) pool.push_back(Cyclo::root(max_order, t));
    return pool;
  }

  void search() {
    if (++nodes > budget)
      throw BudgetExceeded("braiding search exceeded budget of " + std::to_string(budget) +
                           " nodes");
    // propagate to fixpoint
    std::vector<RKey> added;
    while (true) {
      std::vector<std::pair<RKey, Cyclo>> derived;
      bool consistent = true;
      for (const auto& in : instances) {
        if (!inspect(in, derived)) {
          consistent = false;
          break;
        }
        if (!derived.empty()) break;
      }
      if (!consistent) {
        for (auto it = added.rbegin(); it != added.rend(); ++it) assignment.erase(*it);
        return;
      }
      if (derived.empty()) break;
      const auto& [slot, val] = derived.front();
      if (!order_ok(val)) {
        for (auto it = added.rbegin(); it != added.rend(); ++it) assignment.erase(*it);
        return;
      }
      assignment[slot] = val;
      added.push_back(slot);
    }

    // pick a seed
    const RKey* seed = nullptr;
    for (const auto& s : slots) {
      if (!assignment.count(s)) {
        seed = &s;
        break;
      }
    }
    if (!seed) {
      RMap full(assignment.begin(), assignment.end());
      solutions.push_back(std::move(full));
    } else {
      for (const Cyclo& cand : seed_pool(*seed)) {
        assignment[*seed] = cand;
        search();
        assignment.erase(*seed);
      }
    }
    for (auto it = added.rbegin(); it != added.rend(); ++it) assignment.erase(*it);
  }
};

}  // namespace

std::vector<RMap> solve_braidings(const SkeletalData& data, unsigned max_order,
                                  std::uint64_t budget) {
  if (!data.ring().commutative())
    throw NotApplicable("braidings require a commutative fusion ring");
  if (!check_pentagon(data).pass)
    throw NotApplicable("braiding search requires a passing pentagon check");
  BraidingSearch search(data, max_order, budget);
  search.search();

  std::vector<RMap> out;
  std::set<RMap> seen;
  for (auto& sol : search.solutions) {
    if (!seen.insert(sol).second) continue;
    if (check_hexagon(data.with_r(sol)).pass) out.push_back(sol);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Pivotal solver: the constraint system p_a p_b / p_c = V(a,b,c) is
// multiplicative, so integer row reduction plus exact k-th roots enumerates
// every solution in phases.

namespace {

struct MultRelation {
  std::vector<int> exps;  // exponent per unknown p_2..p_r
  Cyclo rhs;
};

}  // namespace

std::vector<std::vector<Cyclo>> solve_pivotals(const SkeletalData& data) {
  if (!check_pentagon(data).pass)
    throw NotApplicable("pivotal search requires a passing pentagon check");
  const auto& ring = data.ring();
  const int r = ring.rank();
  const int m = r - 1;  // unknowns p_2..p_r

  std::vector<MultRelation> rels;
  auto add_rel = [&](std::vector<int> exps, Cyclo rhs) {
    bool nontrivial = false;
    for (int e : exps) nontrivial = nontrivial || e != 0;
    if (!nontrivial) {
      if (rhs != Cyclo(1)) rels.push_back({std::move(exps), std::move(rhs)});  // contradiction
      return;
    }
    rels.push_back({std::move(exps), std::move(rhs)});
  };

  // Eq. (14): p_a p_{a*} = 1.
  for (int a = 2; a <= r; ++a) {
    std::vector<int> exps(m, 0);
    exps[a - 2] += 1;
    if (ring.dual(a) != 1) exps[ring.dual(a) - 2] += 1;
    add_rel(std::move(exps), Cyclo(1));
  }
  // Eq. (15): p_a p_b p_c^-1 = V(a,b,c).
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      for (int c = 1; c <= r; ++c) {
        if (!ring.n(a, b, c)) continue;
        const int as = ring.dual(a), bs = ring.dual(b), cs = ring.dual(c);
        const Cyclo v = data.f(a, b, cs, 1, c, as) * data.f(b, cs, a, 1, as, bs) *
                        data.f(cs, a, b, 1, bs, c);
        if (v.is_zero()) return {};  // Eq. (15) cannot hold
        std::vector<int> exps(m, 0);
        if (a != 1) exps[a - 2] += 1;
        if (b != 1) exps[b - 2] += 1;
        if (c != 1) exps[c - 2] -= 1;
        add_rel(std::move(exps), v);
      }

  // Integer row echelon: after this, pivot_rel[j] is the relation solving
  // unknown j in terms of later unknowns.
  std::vector<int> pivot_of(m, -1);
  std::vector<MultRelation> echelon;
  for (int col = 0; col < m; ++col) {
    // reduce all relations against existing echelon rows first
    int best = -1;
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (rels[i].exps.empty()) continue;
      if (rels[i].exps[col] != 0) {
        if (best < 0 || std::abs(rels[i].exps[col]) < std::abs(rels[best].exps[col])) {
          best = static_cast<int>(i);
        }
      }
    }
    if (best < 0) continue;
    // gcd-style elimination of column col from all other relations
    bool changed = true;
    while (changed) {
      changed = false;
      int piv = -1;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (rels[i].exps.empty() || rels[i].exps[col] == 0) continue;
        if (piv < 0 || std::abs(rels[i].exps[col]) < std::abs(rels[piv].exps[col]))
          piv = static_cast<int>(i);
      }
      if (piv < 0) break;
      for (std::size_t i = 0; i < rels.size(); ++i) {
        if (static_cast<int>(i) == piv || rels[i].exps.empty() || rels[i].exps[col] == 0)
          continue;
        const int q = rels[i].exps[col] / rels[piv].exps[col];
        if (q != 0) {
          for (int j = 0; j < m; ++j) rels[i].exps[j] -= q * rels[piv].exps[j];
          rels[i].rhs = rels[i].rhs * rels[piv].rhs.pow(-q);
          changed = true;
        }
      }
      if (!changed) {
        // move pivot relation to echelon
        pivot_of[col] = static_cast<int>(echelon.size());
        echelon.push_back(rels[piv]);
        rels[piv].exps.clear();
      }
    }
  }
  // Remaining nonempty relations have no pivot column: they must be trivial.
  for (const auto& rel : rels) {
    if (rel.exps.empty()) continue;
    bool zero = true;
    for (int e : rel.exps) zero = zero && e == 0;
    if (zero && rel.rhs != Cyclo(1)) return {};
    if (!zero) throw std::logic_error("pivotal solver: unreduced relation");
  }
  for (int j = 0; j < m; ++j)
    if (pivot_of[j] < 0)
      throw std::logic_error("pivotal solver: unconstrained coefficient, non-phase solutions");

  // Back-substitute from the last unknown, enumerating exact k-th roots.
  std::vector<std::vector<Cyclo>> solutions;
  std::vector<Cyclo> partial(m);
  auto assign = [&](auto&& self, int col) -> void {
    if (col < 0) {
      std::vector<Cyclo> p(r);
      p[0] = Cyclo(1);
      for (int j = 0; j < m; ++j) p[j + 1] = partial[j];
      solutions.push_back(std::move(p));
      return;
    }
    const MultRelation& rel = echelon[pivot_of[col]];
    // rel: p_col^k * prod_{j>col} p_j^{e_j} = rhs
    Cyclo rhs = rel.rhs;
    for (int j = col + 1; j < m; ++j)
      if (rel.exps[j] != 0) rhs = rhs * partial[j].pow(-rel.exps[j]);
    int k = rel.exps[col];
    if (k < 0) {
      k = -k;
      rhs = rhs.inv();
    }
    const auto root = as_root_of_unity(rhs);
    if (!root) return;  // no phase solution through this branch
    const auto [ord, j0] = *root;
    for (int t = 0; t < k; ++t) {
      partial[col] = Cyclo::root(static_cast<unsigned>(k) * ord,
                                 static_cast<long long>(j0) + static_cast<long long>(ord) * t);
      self(self, col - 1);
    }
  };
  assign(assign, m - 1);

  // Final oracle pass: keep exactly the assignments passing Eqs. (13)-(15).
  std::vector<std::vector<Cyclo>> out;
  std::set<std::vector<std::string>> seen;
  for (auto& p : solutions) {
    std::vector<std::string> keyv;
    for (const auto& v : p) keyv.push_back(v.str());
    if (!seen.insert(keyv).second) continue;
    if (check_pivotal(data.with_pivotal(p)).pass) out.push_back(p);
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != y[i]) return x[i] < y[i];
    }
    return false;
  });
  return out;
}

SkeletalData build_catalog(const CatalogSpec& spec) {
  SkeletalData data = [&] {
    if (spec.family == "pointed") {
      if (spec.params.size() != 2) throw std::invalid_argument("pointed needs params n, q");
      return build_pointed_cyclic(spec.params[0], spec.params[1]);
    }
    if (spec.family == "fib") {
      if (spec.params.size() != 1) throw std::invalid_argument("fib needs param class");
      return build_fib(spec.params[0]);
    }
    if (spec.family == "ising") {
      if (spec.params.size() != 1) throw std::invalid_argument("ising needs param class");
      return build_ising(spec.params[0]);
    }
    if (spec.family == "ty") {
      if (spec.params.size() != 3)
        throw std::invalid_argument("ty needs params n, bicharacter, sign");
      return build_ty(spec.params[0], spec.params[1], spec.params[2]);
    }
    throw std::invalid_argument("unknown catalog family: " + spec.family);
  }();
  if (spec.braiding) {
    const auto braidings = solve_braidings(data);
    if (*spec.braiding < 1 || *spec.braiding > static_cast<int>(braidings.size()))
      throw std::invalid_argument("braiding index out of range; found " +
                                  std::to_string(braidings.size()));
    data = data.with_r(braidings[*spec.braiding - 1]);
  }
  if (spec.pivotal) {
    const auto pivotals = solve_pivotals(data);
    if (*spec.pivotal < 1 || *spec.pivotal > static_cast<int>(pivotals.size()))
      throw std::invalid_argument("pivotal index out of range; found " +
                                  std::to_string(pivotals.size()));
    data = data.with_pivotal(pivotals[*spec.pivotal - 1]);
  }
  return data;
}

}  // namespace fcat
