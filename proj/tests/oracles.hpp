#pragma once

// Brute-force reference implementations used to cross-check the library.
// They only read a lattice's element count and cover pairs and rebuild
// everything else (order, meets, joins, linearity, congruences, lattice
// enumeration) from first principles, trading speed for obviousness.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "endolat/lattice.hpp"

namespace oracle {

using endolat::Element;
using endolat::Lattice;
using Map = std::vector<Element>;

struct Order {
  int n = 0;
  std::vector<std::vector<char>> le;  // le[x][y]: x <= y

  bool leq(int x, int y) const { return le[x][y] != 0; }

  int bottom() const {
    for (int x = 0; x < n; ++x) {
      bool all = true;
      for (int y = 0; y < n; ++y) all = all && leq(x, y);
      if (all) return x;
    }
    return -1;
  }
  int top() const {
    for (int x = 0; x < n; ++x) {
      bool all = true;
      for (int y = 0; y < n; ++y) all = all && leq(y, x);
      if (all) return x;
    }
    return -1;
  }
  // Least upper bound, or -1.
  int join(int x, int y) const {
    for (int z = 0; z < n; ++z) {
      if (!leq(x, z) || !leq(y, z)) continue;
      bool least = true;
      for (int w = 0; w < n && least; ++w) {
        if (leq(x, w) && leq(y, w)) least = leq(z, w);
      }
      if (least) return z;
    }
    return -1;
  }
  int meet(int x, int y) const {
    for (int z = 0; z < n; ++z) {
      if (!leq(z, x) || !leq(z, y)) continue;
      bool greatest = true;
      for (int w = 0; w < n && greatest; ++w) {
        if (leq(w, x) && leq(w, y)) greatest = leq(w, z);
      }
      if (greatest) return z;
    }
    return -1;
  }
};

// Reflexive-transitive closure of the cover pairs (Floyd-Warshall).
inline Order order_of(Lattice const& L) {
  Order o;
  o.n = L.size();
  o.le.assign(o.n, std::vector<char>(o.n, 0));
  for (int x = 0; x < o.n; ++x) o.le[x][x] = 1;
  for (auto [x, y] : L.covers()) o.le[x][y] = 1;
  for (int k = 0; k < o.n; ++k) {
    for (int i = 0; i < o.n; ++i) {
      for (int j = 0; j < o.n; ++j) {
        if (o.le[i][k] && o.le[k][j]) o.le[i][j] = 1;
      }
    }
  }
  return o;
}

inline bool complements(Order const& o, int x, int y) {
  return o.meet(x, y) == o.bottom() && o.join(x, y) == o.top();
}

// x essential in [lo, hi]: meets every element above lo nontrivially.
inline bool essential_in(Order const& o, int x, int lo, int hi) {
  for (int y = 0; y < o.n; ++y) {
    if (y != lo && o.leq(lo, y) && o.leq(y, hi) && o.meet(x, y) == lo) return false;
  }
  return true;
}

// x superfluous in [lo, hi]: x v y = hi forces y = hi.
inline bool superfluous_in(Order const& o, int x, int lo, int hi) {
  for (int y = 0; y < o.n; ++y) {
    if (o.leq(lo, y) && o.leq(y, hi) && y != hi && o.join(x, y) == hi) return false;
  }
  return true;
}

// Linearity straight from the definition: some k with f(x) = f(x v k) for
// all x, and f restricted to [k, 1] an order isomorphism onto [0, f(1)].
inline bool is_linear(Order const& o, Map const& f) {
  int const bot = o.bottom(), top = o.top();
  int const img = f[top];
  for (int k = 0; k < o.n; ++k) {
    bool ok = true;
    for (int x = 0; x < o.n && ok; ++x) ok = f[x] == f[o.join(x, k)];
    if (!ok) continue;
    std::vector<int> up, down;
    for (int x = 0; x < o.n; ++x) {
      if (o.leq(k, x)) up.push_back(x);
      if (o.leq(bot, x) && o.leq(x, img)) down.push_back(x);
    }
    if (up.size() != down.size()) continue;
    std::set<int> hit;
    for (int x : up) {
      if (!o.leq(f[x], img)) ok = false;
      hit.insert(f[x]);
    }
    if (!ok || hit.size() != up.size()) continue;
    for (int x : up) {
      for (int y : up) ok = ok && (o.leq(x, y) == o.leq(f[x], f[y]));
    }
    if (ok) return true;
  }
  return false;
}

// Every total map L -> L that is linear, in lexicographic order.
inline std::vector<Map> brute_endomorphisms(Lattice const& L) {
  Order o = order_of(L);
  std::vector<Map> out;
  Map f(o.n, 0);
  while (true) {
    if (is_linear(o, f)) out.push_back(f);
    int i = o.n - 1;
    while (i >= 0 && f[i] == o.n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

// Scans all 5-element subsets for a pentagon sublattice.
inline bool has_pentagon(Lattice const& L) {
  Order o = order_of(L);
  int const n = o.n;
  for (int z = 0; z < n; ++z) {
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a == b || a == z || b == z || !o.leq(a, b) || !o.leq(z, a)) continue;
        for (int c = 0; c < n; ++c) {
          if (c == a || c == b || c == z) continue;
          int i = o.join(a, c);
          if (i == a || i == b || i == c || i == z) continue;
          if (o.join(b, c) == i && o.meet(a, c) == z && o.meet(b, c) == z) return true;
        }
      }
    }
  }
  return false;
}

// Congruences straight from their definitions, over a list of maps.
inline std::vector<std::vector<char>> delta_relation(Lattice const& L,
                                                     std::vector<Map> const& ms) {
  Order o = order_of(L);
  int const k = static_cast<int>(ms.size());
  std::vector<std::vector<char>> r(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int x = 0; x < o.n && !r[i][j]; ++x) {
        if (!essential_in(o, x, o.bottom(), o.top())) continue;
        bool agree = true;
        for (int y = 0; y < o.n && agree; ++y) {
          if (o.leq(y, x)) agree = ms[i][y] == ms[j][y];
        }
        r[i][j] = agree;
      }
    }
  }
  return r;
}

inline std::vector<std::vector<char>> nabla_relation(Lattice const& L,
                                                     std::vector<Map> const& ms) {
  Order o = order_of(L);
  int const k = static_cast<int>(ms.size());
  std::vector<std::vector<char>> r(k, std::vector<char>(k, 0));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      for (int x = 0; x < o.n && !r[i][j]; ++x) {
        if (!superfluous_in(o, x, o.bottom(), o.top())) continue;
        bool agree = true;
        for (int a = 0; a < o.n && agree; ++a) {
          agree = o.join(ms[i][a], x) == o.join(ms[j][a], x);
        }
        r[i][j] = agree;
      }
    }
  }
  return r;
}

// -- naive lattice enumeration -------------------------------------------------
//
// Every partial order on n labeled points with 0 least and n - 1 greatest,
// kept when all pairs have joins, deduplicated by trying every relabeling
// of the inner points.  Exponential, meant for n <= 7.

struct SmallLattice {
  int n = 0;
  std::vector<std::pair<int, int>> strict;  // x < y
};

inline std::vector<SmallLattice> naive_lattices(int n) {
  if (n == 1) return {SmallLattice{1, {}}};
  int const k = n - 2;
  std::vector<std::pair<int, int>> slots;  // ordered pairs of inner points
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) slots.push_back({i, j});
    }
  }
  std::set<std::vector<char>> seen;
  std::vector<SmallLattice> out;
  std::vector<int> perm(k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<char>> lt(k, std::vector<char>(k, 0));
    bool ok = true;
    for (std::size_t s = 0; s < slots.size(); ++s) {
      if (mask >> s & 1) lt[slots[s].first][slots[s].second] = 1;
    }
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < k && ok; ++j) {
        if (lt[i][j] && lt[j][i]) ok = false;
        for (int l = 0; l < k && ok; ++l) {
          if (lt[i][j] && lt[j][l] && !lt[i][l]) ok = false;
        }
      }
    }
    if (!ok) continue;
    Order o;
    o.n = n;
    o.le.assign(n, std::vector<char>(n, 0));
    for (int x = 0; x < n; ++x) {
      o.le[0][x] = 1;
      o.le[x][n - 1] = 1;
      o.le[x][x] = 1;
    }
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (lt[i][j]) o.le[i + 1][j + 1] = 1;
      }
    }
    for (int x = 0; x < n && ok; ++x) {
      for (int y = x + 1; y < n && ok; ++y) ok = o.join(x, y) >= 0;
    }
    if (!ok) continue;
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> best;
    do {
      std::vector<char> code(k * k);
      for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) code[perm[i] * k + perm[j]] = lt[i][j];
      }
      if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!seen.insert(best).second) continue;
    SmallLattice s;
    s.n = n;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        if (x != y && o.leq(x, y)) s.strict.push_back({x, y});
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

inline endolat::LatticePtr to_lattice(SmallLattice const& s, std::string name) {
  std::vector<std::string> names;
  for (int i = 0; i < s.n; ++i) names.push_back("p" + std::to_string(i));
  return Lattice::build(std::move(name), std::move(names), s.strict);
}

}  // namespace oracle
