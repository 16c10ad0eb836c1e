// Shared ring fixtures, transcribed from the census multiplication tables.
#pragma once

#include "fcat/ring.hpp"

#include <initializer_list>
#include <vector>

namespace fixtures {

using Products = std::vector<std::vector<std::vector<int>>>;

inline fcat::FusionRing make_ring(const Products& prod) {
  const int r = static_cast<int>(prod.size());
  std::vector<std::uint8_t> table(static_cast<std::size_t>(r) * r * r, 0);
  for (int a = 1; a <= r; ++a)
    for (int b = 1; b <= r; ++b)
      for (int c : prod[a - 1][b - 1])
        table[(static_cast<std::size_t>(a - 1) * r + (b - 1)) * r + (c - 1)] = 1;
  return fcat::validate_ring(r, table);
}

inline fcat::FusionRing trivial() { return make_ring({{{1}}}); }

inline fcat::FusionRing z2() { return make_ring({{{1}, {2}}, {{2}, {1}}}); }

inline fcat::FusionRing fib() { return make_ring({{{1}, {2}}, {{2}, {1, 2}}}); }

inline fcat::FusionRing ising() {
  return make_ring({{{1}, {2}, {3}}, {{2}, {1}, {3}}, {{3}, {3}, {1, 2}}});
}

inline fcat::FusionRing rep_d3() {
  return make_ring({{{1}, {2}, {3}}, {{2}, {1}, {3}}, {{3}, {3}, {1, 2, 3}}});
}

inline fcat::FusionRing psu2_5() {
  return make_ring({{{1}, {2}, {3}}, {{2}, {1, 3}, {2, 3}}, {{3}, {2, 3}, {1, 2, 3}}});
}

inline fcat::FusionRing z3() {
  return make_ring({{{1}, {2}, {3}}, {{2}, {3}, {1}}, {{3}, {1}, {2}}});
}

inline fcat::FusionRing z2z2() {
  return make_ring({{{1}, {2}, {3}, {4}},
                    {{2}, {1}, {4}, {3}},
                    {{3}, {4}, {1}, {2}},
                    {{4}, {3}, {2}, {1}}});
}

inline fcat::FusionRing z4() {
  return make_ring({{{1}, {2}, {3}, {4}},
                    {{2}, {1}, {4}, {3}},
                    {{3}, {4}, {2}, {1}},
                    {{4}, {3}, {1}, {2}}});
}

inline fcat::FusionRing ty_z3() {
  return make_ring({{{1}, {2}, {3}, {4}},
                    {{2}, {3}, {1}, {4}},
                    {{3}, {1}, {2}, {4}},
                    {{4}, {4}, {4}, {1, 2, 3}}});
}

inline fcat::FusionRing z5() {
  return make_ring({{{1}, {2}, {3}, {4}, {5}},
                    {{2}, {5}, {1}, {3}, {4}},
                    {{3}, {1}, {4}, {5}, {2}},
                    {{4}, {3}, {5}, {2}, {1}},
                    {{5}, {4}, {2}, {1}, {3}}});
}

inline fcat::FusionRing z6() {
  return make_ring({{{1}, {2}, {3}, {4}, {5}, {6}},
                    {{2}, {1}, {6}, {5}, {4}, {3}},
                    {{3}, {6}, {5}, {1}, {2}, {4}},
                    {{4}, {5}, {1}, {6}, {3}, {2}},
                    {{5}, {4}, {2}, {3}, {6}, {1}},
                    {{6}, {3}, {4}, {2}, {1}, {5}}});
}

inline fcat::FusionRing z7() {
  return make_ring({{{1}, {2}, {3}, {4}, {5}, {6}, {7}},
                    {{2}, {7}, {1}, {6}, {4}, {3}, {5}},
                    {{3}, {1}, {6}, {5}, {7}, {4}, {2}},
                    {{4}, {6}, {5}, {2}, {1}, {7}, {3}},
                    {{5}, {4}, {7}, {1}, {3}, {2}, {6}},
                    {{6}, {3}, {4}, {7}, {2}, {5}, {1}},
                    {{7}, {5}, {2}, {3}, {6}, {1}, {4}}});
}

inline fcat::FusionRing rep_d9() {
  return make_ring({{{1}, {2}, {3}, {4}, {5}, {6}},
                    {{2}, {1}, {3}, {4}, {5}, {6}},
                    {{3}, {3}, {1, 2, 3}, {5, 6}, {4, 6}, {4, 5}},
                    {{4}, {4}, {5, 6}, {1, 2, 4}, {3, 6}, {3, 5}},
                    {{5}, {5}, {4, 6}, {3, 6}, {1, 2, 5}, {3, 4}},
                    {{6}, {6}, {4, 5}, {3, 5}, {3, 4}, {1, 2, 6}}});
}

inline fcat::FusionRing adj_so16_2() {
  return make_ring({{{1}, {2}, {3}, {4}, {5}, {6}, {7}},
                    {{2}, {1}, {4}, {3}, {7}, {6}, {5}},
                    {{3}, {4}, {1}, {2}, {7}, {6}, {5}},
                    {{4}, {3}, {2}, {1}, {5}, {6}, {7}},
                    {{5}, {7}, {7}, {5}, {1, 4, 6}, {5, 7}, {2, 3, 6}},
                    {{6}, {6}, {6}, {6}, {5, 7}, {1, 2, 3, 4}, {5, 7}},
                    {{7}, {5}, {5}, {7}, {2, 3, 6}, {5, 7}, {1, 4, 6}}});
}

}  // namespace fixtures
