#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "endolat/corpus.hpp"

namespace endolat {

namespace {

struct Poset {
  int n = 0;
  std::vector<ElementSet> down, up, lower, upper;
};

Poset make_poset(std::vector<ElementSet> const& down) {
  Poset p;
  p.n = static_cast<int>(down.size());
  p.down = down;
  p.up.assign(p.n, ElementSet{});
  p.lower.assign(p.n, ElementSet{});
  p.upper.assign(p.n, ElementSet{});
  for (Element x = 0; x < p.n; ++x) {
    for (Element y : down[x]) p.up[y].insert(x);
  }
  for (Element x = 0; x < p.n; ++x) {
    ElementSet strict = down[x] - ElementSet{x};
    ElementSet covered = strict;
    for (Element y : strict) covered = covered - (down[y] - ElementSet{y});
    p.lower[x] = covered;
    for (Element y : covered) p.upper[y].insert(x);
  }
  return p;
}

// Longest chain below each element (heights), computed from lower covers.
std::vector<int> heights(Poset const& p, bool from_bottom) {
  std::vector<int> h(p.n, -1);
  std::function<int(Element)> go = [&](Element x) {
    if (h[x] >= 0) return h[x];
    int best = 0;
    for (Element y : from_bottom ? p.lower[x] : p.upper[x]) {
      best = std::max(best, go(y) + 1);
    }
    return h[x] = best;
  };
  for (Element x = 0; x < p.n; ++x) go(x);
  return h;
}

// Isomorphism-invariant ranks, refined by the ranks of neighbours until
// the number of classes stabilises.
std::vector<int> invariant_ranks(Poset const& p) {
  std::vector<int> up_h = heights(p, true), down_h = heights(p, false);
  using Key = std::vector<int>;
  std::vector<Key> keys(p.n);
  for (Element x = 0; x < p.n; ++x) {
    keys[x] = {up_h[x], down_h[x], p.down[x].size(), p.up[x].size(),
               p.lower[x].size(), p.upper[x].size()};
  }
  auto rank_of = [&](std::vector<Key> const& ks) {
    std::vector<Key> sorted = ks;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> r(p.n);
    for (Element x = 0; x < p.n; ++x) {
      r[x] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), ks[x]) - sorted.begin());
    }
    return std::make_pair(r, static_cast<int>(sorted.size()));
  };
  auto [rank, classes] = rank_of(keys);
  while (true) {
    std::vector<Key> next(p.n);
    for (Element x = 0; x < p.n; ++x) {
      Key k = {rank[x]};
      std::vector<int> lo, hi;
      for (Element y : p.lower[x]) lo.push_back(rank[y]);
      for (Element y : p.upper[x]) hi.push_back(rank[y]);
      std::sort(lo.begin(), lo.end());
      std::sort(hi.begin(), hi.end());
      k.push_back(-1);
      k.insert(k.end(), lo.begin(), lo.end());
      k.push_back(-2);
      k.insert(k.end(), hi.begin(), hi.end());
      next[x] = std::move(k);
    }
    auto [r2, c2] = rank_of(next);
    if (c2 == classes) break;
    rank = std::move(r2);
    classes = c2;
  }
  return rank;
}

// Branch and bound for the labeling with the lexicographically least
// relation code, restricted to labelings that list ranks in order.
class Labeler {
 public:
  explicit Labeler(Poset const& p) : _p(p), _rank(invariant_ranks(p)) {
    _slot_rank = _rank;
    std::sort(_slot_rank.begin(), _slot_rank.end());
  }

  std::vector<Element> run() {
    _placed.clear();
    _code.clear();
    dfs(0, _best.empty());
    return _best_order;
  }

 private:
  void dfs(int pos, bool less) {
    if (pos == _p.n) {
      if (less) {
        _best = _code;
        _best_order = _placed;
      }
      return;
    }
    for (Element e = 0; e < _p.n; ++e) {
      if (_rank[e] != _slot_rank[pos]) continue;
      if (std::find(_placed.begin(), _placed.end(), e) != _placed.end()) continue;
      std::size_t mark = _code.size();
      for (Element q : _placed) {
        _code.push_back(static_cast<std::uint8_t>(
            (_p.down[e].contains(q) ? 2 : 0) + (_p.down[q].contains(e) ? 1 : 0)));
      }
      bool now_less = less;
      bool prune = false;
      if (!less) {
        for (std::size_t i = mark; i < _code.size(); ++i) {
          if (_code[i] != _best[i]) {
            if (_code[i] < _best[i]) now_less = true;
            else prune = true;
            break;
          }
        }
      }
      if (!prune) {
        _placed.push_back(e);
        dfs(pos + 1, now_less);
        _placed.pop_back();
      }
      _code.resize(mark);
    }
  }

  Poset const& _p;
  std::vector<int> _rank, _slot_rank;
  std::vector<Element> _placed, _best_order;
  std::vector<std::uint8_t> _code, _best;
};

}  // namespace

std::vector<Element> canonical_order(std::vector<ElementSet> const& down) {
  Poset p = make_poset(down);
  if (p.n == 0) return {};
  return Labeler(p).run();
}

CanonicalForm canonical_form(std::vector<ElementSet> const& down) {
  Poset p = make_poset(down);
  std::vector<Element> order = canonical_order(down);
  std::vector<int> pos(p.n);
  for (int k = 0; k < p.n; ++k) pos[order[k]] = k;
  std::vector<std::pair<int, int>> covers;
  for (Element x = 0; x < p.n; ++x) {
    for (Element y : p.lower[x]) covers.push_back({pos[y], pos[x]});
  }
  std::sort(covers.begin(), covers.end());
  CanonicalForm f;
  f.bytes.push_back(static_cast<std::uint8_t>(p.n));
  for (auto [a, b] : covers) {
    f.bytes.push_back(static_cast<std::uint8_t>(a));
    f.bytes.push_back(static_cast<std::uint8_t>(b));
  }
  return f;
}

CanonicalForm canonical_form(Lattice const& L) {
  std::vector<ElementSet> down(L.size());
  for (Element x = 0; x < L.size(); ++x) down[x] = L.down_set(x);
  return canonical_form(down);
}

bool are_isomorphic(Lattice const& a, Lattice const& b) {
  return a.size() == b.size() && canonical_form(a) == canonical_form(b);
}

}  // namespace endolat
