#include "endolat/lattice.hpp"

#include <algorithm>
#include <set>

#include "endolat/error.hpp"

namespace endolat {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::kCycleDetected: return "CycleDetected";
    case ErrorKind::kNoUniqueBound: return "NoUniqueBound";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kNotComparable: return "NotComparable";
    case ErrorKind::kPrecondition: return "PreconditionViolation";
    case ErrorKind::kNoKernel: return "NoKernel";
    case ErrorKind::kNotConstantOnKernelCosets:
      return "NotConstantOnKernelCosets";
    case ErrorKind::kNotIntervalIso: return "NotIntervalIso";
    case ErrorKind::kNotComplementPair: return "NotComplementPair";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kNotInvariant: return "NotInvariant";
    case ErrorKind::kNotClosed: return "NotClosed";
    case ErrorKind::kNotModular: return "NotModular";
    case ErrorKind::kShortcutMismatch: return "ShortcutMismatch";
    case ErrorKind::kIllDefined: return "IllDefined";
    case ErrorKind::kInternalInvariantViolation:
      return "InternalInvariantViolation";
    case ErrorKind::kEquivalenceViolation: return "EquivalenceViolation";
    case ErrorKind::kOrderBound: return "OrderBound";
    case ErrorKind::kParse: return "ParseError";
    case ErrorKind::kTheoremViolated: return "TheoremViolated";
  }
  return "Unknown";
}

LatticePtr Lattice::build(std::string name, std::vector<std::string> elements,
                          std::vector<std::pair<Element, Element>> covers) {
  int const n = static_cast<int>(elements.size());
  if (n == 0) {
    throw Error(ErrorKind::kPrecondition, "lattice '" + name + "' is empty");
  }
  if (n > kMaxElements) {
    throw Error(ErrorKind::kTooLarge,
                "lattice '" + name + "' has " + std::to_string(n) +
                    " elements (limit " + std::to_string(kMaxElements) + ")");
  }
  {
    std::set<std::string> seen;
    for (auto const& e : elements) {
      if (!seen.insert(e).second) {
        throw Error(ErrorKind::kPrecondition, "duplicate element '" + e + "'");
      }
    }
  }

  std::vector<ElementSet> reach(n);
  for (auto [x, y] : covers) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      throw Error(ErrorKind::kUnknownElement, "cover references unknown id");
    }
    if (x == y) {
      throw Error(ErrorKind::kCycleDetected,
                  "element '" + elements[x] + "' covers itself");
    }
    reach[x].insert(y);
  }
  // Warshall on bitsets.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (reach[i].contains(k)) reach[i] |= reach[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if (reach[i].contains(i)) {
      throw Error(ErrorKind::kCycleDetected,
                  "order relation has a cycle through '" + elements[i] + "'");
    }
  }

  std::shared_ptr<Lattice> L(new Lattice());
  L->_name = std::move(name);
  L->_names = std::move(elements);
  L->_up.resize(n);
  L->_down.resize(n);
  L->_upper_covers.resize(n);
  L->_lower_covers.resize(n);
  for (int x = 0; x < n; ++x) {
    L->_up[x] = reach[x];
    L->_up[x].insert(x);
  }
  for (int x = 0; x < n; ++x) {
    for (Element y : L->_up[x]) L->_down[y].insert(x);
  }
  for (int x = 0; x < n; ++x) {
    ElementSet strict_up = reach[x];
    for (Element y : strict_up) {
      ElementSet strict_down_y = L->_down[y];
      strict_down_y.erase(y);
      ElementSet between = strict_up & strict_down_y;
      if (between.empty()) {
        L->_covers.emplace_back(x, y);
        L->_upper_covers[x].insert(y);
        L->_lower_covers[y].insert(x);
      }
    }
  }
  std::sort(L->_covers.begin(), L->_covers.end());

  std::vector<Element> minimal, maximal;
  for (int x = 0; x < n; ++x) {
    if (L->_down[x].size() == 1) minimal.push_back(x);
    if (L->_up[x].size() == 1) maximal.push_back(x);
  }
  auto const& nm = L->_names;
  if (minimal.size() != 1) {
    throw Error(ErrorKind::kNoUniqueBound,
                "no unique bottom: minimal elements '" + nm[minimal[0]] +
                    "' and '" + nm[minimal[1]] + "'");
  }
  if (maximal.size() != 1) {
    throw Error(ErrorKind::kNoUniqueBound,
                "no unique top: maximal elements '" + nm[maximal[0]] +
                    "' and '" + nm[maximal[1]] + "'");
  }
  L->_bottom = minimal[0];
  L->_top = maximal[0];

  L->_meet.assign(n * n, kNone);
  L->_join.assign(n * n, kNone);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      ElementSet lower = L->_down[x] & L->_down[y];
      ElementSet upper = L->_up[x] & L->_up[y];
      Element glb = kNone, lub = kNone;
      for (Element z : lower) {
        if (lower.is_subset_of(L->_down[z])) {
          glb = z;
          break;
        }
      }
      for (Element z : upper) {
        if (upper.is_subset_of(L->_up[z])) {
          lub = z;
          break;
        }
      }
      if (glb == kNone || lub == kNone) {
        throw Error(ErrorKind::kNotALattice,
                    "'" + nm[x] + "' and '" + nm[y] + "' have no " +
                        (glb == kNone ? "greatest lower" : "least upper") +
                        " bound");
      }
      L->_meet[x * n + y] = L->_meet[y * n + x] = glb;
      L->_join[x * n + y] = L->_join[y * n + x] = lub;
    }
  }
  return L;
}

std::optional<Element> Lattice::find(std::string const& element_name) const {
  auto it = std::find(_names.begin(), _names.end(), element_name);
  if (it == _names.end()) return std::nullopt;
  return static_cast<Element>(it - _names.begin());
}

Element Lattice::big_meet(ElementSet s) const {
  Element acc = _top;
  for (Element x : s) acc = meet(acc, x);
  return acc;
}

Element Lattice::big_join(ElementSet s) const {
  Element acc = _bottom;
  for (Element x : s) acc = join(acc, x);
  return acc;
}

LatticePtr build_lattice(
    std::string name, std::vector<std::string> const& elements,
    std::vector<std::pair<std::string, std::string>> const& covers) {
  auto id_of = [&](std::string const& s) -> Element {
    auto it = std::find(elements.begin(), elements.end(), s);
    if (it == elements.end()) {
      throw Error(ErrorKind::kUnknownElement,
                  "cover references undeclared element '" + s + "'");
    }
    return static_cast<Element>(it - elements.begin());
  };
  std::vector<std::pair<Element, Element>> ids;
  ids.reserve(covers.size());
  for (auto const& [x, y] : covers) ids.emplace_back(id_of(x), id_of(y));
  return Lattice::build(std::move(name), elements, std::move(ids));
}

// -- intervals ---------------------------------------------------------------

IntervalView::IntervalView(LatticePtr parent, Element lo, Element hi)
    : _parent(std::move(parent)), _lo(lo), _hi(hi) {
  if (!_parent->leq(lo, hi)) {
    throw Error(ErrorKind::kNotComparable,
                "interval bounds '" + _parent->element_name(lo) + "' and '" +
                    _parent->element_name(hi) + "' are not ordered");
  }
  _elements = _parent->up_set(lo) & _parent->down_set(hi);
}

IntervalView IntervalView::whole(LatticePtr parent) {
  Element lo = parent->bottom(), hi = parent->top();
  return IntervalView(std::move(parent), lo, hi);
}

IntervalView interval(LatticePtr const& L, Element lo, Element hi) {
  return IntervalView(L, lo, hi);
}

std::pair<LatticePtr, std::vector<Element>> interval_lattice(
    IntervalView const& I) {
  Lattice const& P = I.lattice();
  std::vector<Element> back = I.elements().to_vector();
  std::vector<Element> to_new(P.size(), kNone);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < back.size(); ++i) {
    to_new[back[i]] = static_cast<Element>(i);
    names.push_back(P.element_name(back[i]));
  }
  std::vector<std::pair<Element, Element>> covers;
  for (auto [x, y] : P.covers()) {
    if (I.contains(x) && I.contains(y)) covers.emplace_back(to_new[x], to_new[y]);
  }
  auto L = Lattice::build(P.name() + "[" + P.element_name(I.lo()) + "," +
                              P.element_name(I.hi()) + "]",
                          std::move(names), std::move(covers));
  return {std::move(L), std::move(back)};
}

// -- order-theoretic checks ---------------------------------------------------

ModularityResult check_modular(Lattice const& L) {
  int const n = L.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b : L.up_set(a)) {
      for (Element x = 0; x < n; ++x) {
        if (L.join(a, L.meet(x, b)) != L.meet(L.join(a, x), b)) {
          return {false, std::array<Element, 3>{a, b, x}};
        }
      }
    }
  }
  return {};
}

bool is_modular(Lattice const& L) { return check_modular(L).modular; }

bool is_distributive(Lattice const& L) {
  int const n = L.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_boolean(Lattice const& L) {
  return is_distributive(L) && complemented_elements(L) == L.all();
}

ElementSet complements_of(Lattice const& L, Element x) {
  ElementSet out;
  for (Element y = 0; y < L.size(); ++y) {
    if (L.meet(x, y) == L.bottom() && L.join(x, y) == L.top()) out.insert(y);
  }
  return out;
}

ElementSet complemented_elements(Lattice const& L) {
  ElementSet out;
  for (Element x = 0; x < L.size(); ++x) {
    if (!complements_of(L, x).empty()) out.insert(x);
  }
  return out;
}

bool is_essential(Element x, IntervalView const& I) {
  for (Element y : I.elements()) {
    if (y != I.lo() && I.meet(x, y) == I.lo()) return false;
  }
  return true;
}

bool is_superfluous(Element x, IntervalView const& I) {
  for (Element y : I.elements()) {
    if (y != I.hi() && I.join(x, y) == I.hi()) return false;
  }
  return true;
}

bool is_essential(Lattice const& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    if (y != L.bottom() && L.meet(x, y) == L.bottom()) return false;
  }
  return true;
}

bool is_superfluous(Lattice const& L, Element x) {
  for (Element y = 0; y < L.size(); ++y) {
    if (y != L.top() && L.join(x, y) == L.top()) return false;
  }
  return true;
}

ElementSet essential_elements(Lattice const& L) {
  ElementSet out;
  for (Element x = 0; x < L.size(); ++x) {
    if (is_essential(L, x)) out.insert(x);
  }
  return out;
}

ElementSet superfluous_elements(Lattice const& L) {
  ElementSet out;
  for (Element x = 0; x < L.size(); ++x) {
    if (is_superfluous(L, x)) out.insert(x);
  }
  return out;
}

Element min_essential(Lattice const& L) {
  ElementSet ess = essential_elements(L);
  Element m = L.big_meet(ess);
  if (!is_essential(L, m) || !ess.contains(m)) {
    throw Error(ErrorKind::kInternalInvariantViolation,
                "meet of essential elements is not essential in '" + L.name() +
                    "'");
  }
  return m;
}

Element max_superfluous(Lattice const& L) {
  ElementSet sup = superfluous_elements(L);
  Element m = L.big_join(sup);
  if (!is_superfluous(L, m) || !sup.contains(m)) {
    throw Error(ErrorKind::kInternalInvariantViolation,
                "join of superfluous elements is not superfluous in '" +
                    L.name() + "'");
  }
  return m;
}

ElementSet atoms(Lattice const& L) { return L.upper_covers(L.bottom()); }
ElementSet coatoms(Lattice const& L) { return L.lower_covers(L.top()); }
Element radical(Lattice const& L) { return L.big_meet(coatoms(L)); }
Element socle(Lattice const& L) { return L.big_join(atoms(L)); }

bool is_independent(Lattice const& L, std::vector<Element> const& family) {
  for (Element x : family) {
    if (x == L.bottom()) {
      throw Error(ErrorKind::kPrecondition,
                  "independent family contains the bottom element");
    }
  }
  // x ^ J <= x ^ (join of all others) for every sub-join J, so checking the
  // full join of the remaining members covers every finite sub-join.
  for (std::size_t i = 0; i < family.size(); ++i) {
    Element rest = L.bottom();
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (j != i) rest = L.join(rest, family[j]);
    }
    if (L.meet(family[i], rest) != L.bottom()) return false;
  }
  return true;
}

LatticePtr dual(Lattice const& L) {
  std::vector<std::pair<Element, Element>> covers;
  for (auto [x, y] : L.covers()) covers.emplace_back(y, x);
  return Lattice::build(L.name() + "_dual", L.element_names(),
                        std::move(covers));
}

bool is_self_dual(LatticePtr const& L) {
  return are_isomorphic_intervals(IntervalView::whole(L),
                                  IntervalView::whole(dual(*L)));
}

ElementSet compact_elements(Lattice const& L) {
  // c is compact iff c <= join(S) implies c <= join(F) for a finite F in S.
  // Every S here is finite, so F = S always works.
  return L.all();
}

// -- interval isomorphisms ----------------------------------------------------

namespace {

struct Invariant {
  int height, depth, up, down;
  auto operator<=>(Invariant const&) const = default;
};

std::vector<Invariant> invariants(IntervalView const& I) {
  Lattice const& L = I.lattice();
  std::vector<Element> order = I.elements().to_vector();
  // Sizes of down-sets give a linear extension.
  std::sort(order.begin(), order.end(), [&](Element a, Element b) {
    int da = L.down_set(a).size(), db = L.down_set(b).size();
    return da != db ? da < db : a < b;
  });
  std::vector<Invariant> inv(L.size(), Invariant{0, 0, 0, 0});
  for (Element x : order) {
    int h = 0;
    for (Element y : I.lower_covers(x)) h = std::max(h, inv[y].height + 1);
    inv[x].height = h;
    inv[x].up = I.upper_covers(x).size();
    inv[x].down = I.lower_covers(x).size();
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int d = 0;
    for (Element y : I.upper_covers(*it)) d = std::max(d, inv[y].depth + 1);
    inv[*it].depth = d;
  }
  return inv;
}

}  // namespace

void for_each_interval_isomorphism(
    IntervalView const& I1, IntervalView const& I2,
    std::function<bool(ElementMap const&)> const& visit) {
  if (I1.size() != I2.size()) return;
  auto inv1 = invariants(I1);
  auto inv2 = invariants(I2);
  std::vector<Element> src = I1.elements().to_vector();
  std::vector<Element> dst = I2.elements().to_vector();
  {
    std::vector<Invariant> a, b;
    for (Element x : src) a.push_back(inv1[x]);
    for (Element y : dst) b.push_back(inv2[y]);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
  }
  Lattice const& L1 = I1.lattice();
  Lattice const& L2 = I2.lattice();
  ElementMap map(L1.size(), kNone);
  ElementSet used;
  bool stop = false;

  std::function<void(std::size_t)> extend = [&](std::size_t depth) {
    if (stop) return;
    if (depth == src.size()) {
      if (!visit(map)) stop = true;
      return;
    }
    Element x = src[depth];
    for (Element c : dst) {
      if (used.contains(c) || inv1[x] != inv2[c]) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        Element u = src[k];
        Element fu = map[u];
        ok = L1.leq(u, x) == L2.leq(fu, c) && L1.leq(x, u) == L2.leq(c, fu);
      }
      if (!ok) continue;
      map[x] = c;
      used.insert(c);
      extend(depth + 1);
      used.erase(c);
      map[x] = kNone;
      if (stop) return;
    }
  };
  extend(0);
}

std::vector<ElementMap> interval_isomorphisms(IntervalView const& I1,
                                              IntervalView const& I2) {
  std::vector<ElementMap> out;
  for_each_interval_isomorphism(I1, I2, [&](ElementMap const& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::optional<ElementMap> first_interval_isomorphism(IntervalView const& I1,
                                                     IntervalView const& I2) {
  std::optional<ElementMap> out;
  for_each_interval_isomorphism(I1, I2, [&](ElementMap const& m) {
    out = m;
    return false;
  });
  return out;
}

bool are_isomorphic_intervals(IntervalView const& I1, IntervalView const& I2) {
  return first_interval_isomorphism(I1, I2).has_value();
}

}  // namespace endolat
