#include "endolat/monoid.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

#include "endolat/error.hpp"

namespace endolat {

RegularityResult is_regular(CayleyTable const& t) {
  RegularityResult r;
  r.witness.assign(t.order, -1);
  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j) {
      if (t.at(t.at(i, j), i) == i) {
        r.witness[i] = j;
        break;
      }
    }
    if (r.witness[i] < 0 && r.regular) {
      r.regular = false;
      r.failing = i;
    }
  }
  return r;
}

std::vector<int> idempotents(CayleyTable const& t) {
  std::vector<int> out;
  for (int i = 0; i < t.order; ++i) {
    if (t.at(i, i) == i) out.push_back(i);
  }
  return out;
}

bool is_central(CayleyTable const& t, int e) {
  for (int x = 0; x < t.order; ++x) {
    if (t.at(e, x) != t.at(x, e)) return false;
  }
  return true;
}

Check check_abelian(CayleyTable const& t) {
  for (int e : idempotents(t)) {
    for (int x = 0; x < t.order; ++x) {
      if (t.at(e, x) != t.at(x, e)) return {false, {{"idempotent", {e}}, {"other", {x}}}};
    }
  }
  return {};
}

bool is_abelian(CayleyTable const& t) { return check_abelian(t).holds; }

std::optional<int> inverse_of(CayleyTable const& t, int i) {
  for (int j = 0; j < t.order; ++j) {
    if (t.at(i, j) == t.identity && t.at(j, i) == t.identity) return j;
  }
  return std::nullopt;
}

std::optional<std::array<int, 3>> associativity_violation(
    CayleyTable const& t) {
  auto bad = [&](int i, int j, int k) {
    return t.at(t.at(i, j), k) != t.at(i, t.at(j, k));
  };
  if (t.order <= 64) {
    for (int i = 0; i < t.order; ++i) {
      for (int j = 0; j < t.order; ++j) {
        for (int k = 0; k < t.order; ++k) {
          if (bad(i, j, k)) return std::array<int, 3>{i, j, k};
        }
      }
    }
    return std::nullopt;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<int> pick(0, t.order - 1);
  for (int s = 0; s < 200000; ++s) {
    int i = pick(rng), j = pick(rng), k = pick(rng);
    if (bad(i, j, k)) return std::array<int, 3>{i, j, k};
  }
  return std::nullopt;
}

// -- EndoMonoid -------------------------------------------------------------

namespace {

int find_sorted(std::vector<LinearMorphism> const& sorted,
                ElementMap const& values) {
  auto it = std::lower_bound(
      sorted.begin(), sorted.end(), values,
      [](LinearMorphism const& f, ElementMap const& v) {
        return f.values() < v;
      });
  if (it == sorted.end() || it->values() != values) return -1;
  return static_cast<int>(it - sorted.begin());
}

bool fill_row(std::vector<LinearMorphism> const& sorted, int i,
              std::vector<int>& cells) {
  int const n = static_cast<int>(sorted.size());
  bool ok = true;
  for (int j = 0; j < n; ++j) {
    int k = find_sorted(sorted,
                        compose_values(sorted[i].values(), sorted[j].values()));
    cells[i * n + j] = k;
    ok = ok && k >= 0;
  }
  return ok;
}

}  // namespace

CayleyTable cayley_table(std::vector<LinearMorphism> const& sorted,
                         Exec exec) {
  int const n = static_cast<int>(sorted.size());
  CayleyTable t;
  t.order = n;
  t.cells.assign(n * n, -1);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) fill_row(sorted, i, t.cells);
  } else {
    for (int i = 0; i < n; ++i) fill_row(sorted, i, t.cells);
  }
  for (int i = 0; i < n; ++i) {
    bool id = true;
    for (Element x = 0; x < static_cast<int>(sorted[i].values().size()); ++x)
      id = id && sorted[i](x) == x;
    if (id) t.identity = i;
    if (sorted[i].image() == sorted[i].codomain().lo()) t.zero = i;
  }
  return t;
}

EndoMonoid EndoMonoid::from_elements(LatticePtr L, std::string name,
                                     std::vector<LinearMorphism> elements,
                                     Exec exec) {
  for (auto const& f : elements) {
    if (!f.is_endomorphism() || f.domain().parent() != L) {
      throw Error(ErrorKind::kDomainMismatch,
                  "monoid members must be endomorphisms of '" + L->name() +
                      "'");
    }
  }
  std::sort(elements.begin(), elements.end(),
            [](LinearMorphism const& f, LinearMorphism const& g) {
              return f.values() < g.values();
            });
  elements.erase(std::unique(elements.begin(), elements.end(),
                             [](LinearMorphism const& f,
                                LinearMorphism const& g) {
                               return f.values() == g.values();
                             }),
                 elements.end());
  EndoMonoid m;
  m._lattice = std::move(L);
  m._name = std::move(name);
  m._elements = std::move(elements);
  m._table = cayley_table(m._elements, exec);
  if (m._table.identity < 0 || m._table.zero < 0) {
    throw Error(ErrorKind::kNotClosed,
                "monoid '" + m._name + "' lacks the identity or the zero map");
  }
  auto missing = std::find(m._table.cells.begin(), m._table.cells.end(), -1);
  if (missing != m._table.cells.end()) {
    int pos = static_cast<int>(missing - m._table.cells.begin());
    throw Error(ErrorKind::kNotClosed,
                "composite of members " + std::to_string(pos / m.order()) +
                    " and " + std::to_string(pos % m.order()) +
                    " is not in '" + m._name + "'");
  }
  if (auto v = associativity_violation(m._table)) {
    throw Error(ErrorKind::kInternalInvariantViolation,
                "Cayley table is not associative at (" +
                    std::to_string((*v)[0]) + "," + std::to_string((*v)[1]) +
                    "," + std::to_string((*v)[2]) + ")");
  }
  return m;
}

std::optional<int> EndoMonoid::index_of(ElementMap const& values) const {
  int k = find_sorted(_elements, values);
  if (k < 0) return std::nullopt;
  return k;
}

EndoMonoid full_endo_monoid(LatticePtr const& L, Exec exec) {
  return EndoMonoid::from_elements(L, "End(" + L->name() + ")",
                                   enumerate_endomorphisms(L, exec), exec);
}

EndoMonoid generate_submonoid(LatticePtr const& L,
                              std::vector<LinearMorphism> const& generators,
                              std::string name, Exec exec) {
  std::set<ElementMap> seen;
  std::vector<LinearMorphism> members;
  std::deque<LinearMorphism> queue;
  auto add = [&](LinearMorphism const& f) {
    if (seen.insert(f.values()).second) {
      members.push_back(f);
      queue.push_back(f);
    }
  };
  add(identity_morphism(L));
  add(zero_morphism(IntervalView::whole(L), IntervalView::whole(L)));
  for (auto const& g : generators) {
    if (!g.is_endomorphism() || g.domain().parent() != L) {
      throw Error(ErrorKind::kDomainMismatch,
                  "generators must be endomorphisms of '" + L->name() + "'");
    }
  }
  while (!queue.empty()) {
    LinearMorphism s = queue.front();
    queue.pop_front();
    for (auto const& g : generators) {
      ElementMap v = compose_values(s.values(), g.values());
      if (!seen.count(v)) add(endomorphism(L, std::move(v)));
    }
  }
  if (name.empty()) name = "<" + std::to_string(generators.size()) + " gens>";
  return EndoMonoid::from_elements(L, std::move(name), std::move(members),
                                   exec);
}

// -- complements and projections --------------------------------------------

Check closed_under_complements(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  ElementSet comp = complemented_elements(L);
  for (int i = 0; i < m.order(); ++i) {
    LinearMorphism const& phi = m[i];
    for (Element x : comp) {
      Element y = phi(x);
      if (!comp.contains(y)) continue;
      ElementSet src = L.down_set(x);
      ElementSet dst = L.down_set(y);
      if (src.size() != dst.size()) continue;
      ElementMap inverse(L.size(), kNone);
      bool iso = true;
      for (Element v : src) {
        Element w = phi(v);
        if (inverse[w] != kNone) {
          iso = false;
          break;
        }
        inverse[w] = v;
      }
      for (Element v : src) {
        for (Element u : src) {
          iso = iso && L.leq(v, u) == L.leq(phi(v), phi(u));
        }
      }
      if (!iso) continue;
      for (Element y_prime : complements_of(L, y)) {
        ElementMap psi = hat_values(L, inverse, y, y_prime);
        if (!m.contains(psi)) {
          return {false,
                  {{"phi", {i}}, {"x", {x}}, {"y", {y}}, {"y_prime", {y_prime}}}};
        }
      }
    }
  }
  return {};
}

Check contains_all_projections(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  for (Element x : complemented_elements(L)) {
    for (Element x_prime : complements_of(L, x)) {
      if (!m.contains(projection_values(L, x, x_prime))) {
        return {false, {{"x", {x}}, {"x_prime", {x_prime}}}};
      }
    }
  }
  return {};
}

// -- ideals ------------------------------------------------------------------

MonoidIdeal make_ideal(CayleyTable const& t, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  std::vector<char> in(t.order, 0);
  for (int a : members) in[a] = 1;
  MonoidIdeal ideal;
  ideal.left = ideal.right = true;
  ideal.contains_zero = t.zero >= 0 && in[t.zero];
  for (int a : members) {
    for (int x = 0; x < t.order; ++x) {
      ideal.left = ideal.left && in[t.at(x, a)];
      ideal.right = ideal.right && in[t.at(a, x)];
    }
  }
  ideal.members = std::move(members);
  return ideal;
}

MonoidIdeal delta_ideal(EndoMonoid const& m) {
  std::vector<int> members;
  for (int i = 0; i < m.order(); ++i) {
    if (is_essential(*m.lattice(), m[i].kernel())) members.push_back(i);
  }
  return make_ideal(m.table(), std::move(members));
}

MonoidIdeal nabla_ideal(EndoMonoid const& m) {
  std::vector<int> members;
  for (int i = 0; i < m.order(); ++i) {
    if (is_superfluous(*m.lattice(), m[i].image())) members.push_back(i);
  }
  return make_ideal(m.table(), std::move(members));
}

}  // namespace endolat
