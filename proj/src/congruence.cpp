#include <algorithm>
#include <functional>

#include "endolat/error.hpp"
#include "endolat/monoid.hpp"

namespace endolat {

namespace {

using PairTest = std::function<bool(int, int)>;

// Symmetric predicate evaluated on unordered pairs, rows spread over threads.
Relation pair_matrix(int n, PairTest const& related, Exec exec) {
  Relation r{n, std::vector<std::uint8_t>(n * n, 0)};
  auto row = [&](int i) {
    r.cells[i * n + i] = 1;
    for (int j = i + 1; j < n; ++j) r.cells[i * n + j] = related(i, j) ? 1 : 0;
  };
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) row(i);
  } else {
    for (int i = 0; i < n; ++i) row(i);
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) r.cells[i * n + j] = r.cells[j * n + i];
  }
  return r;
}

void require_modular(EndoMonoid const& m) {
  if (!is_modular(*m.lattice())) {
    throw Error(ErrorKind::kNotModular,
                "congruences need a modular lattice; '" + m.lattice()->name() +
                    "' is not");
  }
}

bool agree_below(EndoMonoid const& m, int i, int j, Element x) {
  for (Element y : m.lattice()->down_set(x)) {
    if (m[i](y) != m[j](y)) return false;
  }
  return true;
}

bool agree_modulo(EndoMonoid const& m, int i, int j, Element x) {
  Lattice const& L = *m.lattice();
  for (Element a = 0; a < L.size(); ++a) {
    if (L.join(m[i](a), x) != L.join(m[j](a), x)) return false;
  }
  return true;
}

Relation resolve(EndoMonoid const& m, CongruenceMethod method, Exec exec,
                 PairTest const& definition, PairTest const& shortcut,
                 char const* label) {
  if (method == CongruenceMethod::kDefinition) {
    return pair_matrix(m.order(), definition, exec);
  }
  Relation fast = pair_matrix(m.order(), shortcut, exec);
  if (method == CongruenceMethod::kShortcut) return fast;
  Relation slow = pair_matrix(m.order(), definition, exec);
  if (fast != slow) {
    for (int i = 0; i < m.order(); ++i) {
      for (int j = 0; j < m.order(); ++j) {
        if (fast.at(i, j) != slow.at(i, j)) {
          throw Error(ErrorKind::kShortcutMismatch,
                      std::string(label) + " shortcut and definition disagree "
                      "on members " + std::to_string(i) + " and " +
                          std::to_string(j) + " of '" + m.name() + "'");
        }
      }
    }
  }
  return fast;
}

}  // namespace

Relation delta_relation(EndoMonoid const& m, CongruenceMethod method,
                        Exec exec) {
  require_modular(m);
  Lattice const& L = *m.lattice();
  std::vector<Element> essentials = essential_elements(L).to_vector();
  Element floor = min_essential(L);
  return resolve(
      m, method, exec,
      [&](int i, int j) {
        for (Element x : essentials) {
          if (agree_below(m, i, j, x)) return true;
        }
        return false;
      },
      [&](int i, int j) { return agree_below(m, i, j, floor); }, "delta");
}

Relation nabla_relation(EndoMonoid const& m, CongruenceMethod method,
                        Exec exec) {
  require_modular(m);
  Lattice const& L = *m.lattice();
  std::vector<Element> small = superfluous_elements(L).to_vector();
  Element ceiling = max_superfluous(L);
  return resolve(
      m, method, exec,
      [&](int i, int j) {
        for (Element x : small) {
          if (agree_modulo(m, i, j, x)) return true;
        }
        return false;
      },
      [&](int i, int j) { return agree_modulo(m, i, j, ceiling); }, "nabla");
}

std::optional<Witness> congruence_violation(CayleyTable const& t,
                                            Relation const& r) {
  int const n = t.order;
  for (int i = 0; i < n; ++i) {
    if (!r.at(i, i)) return Witness{{"reflexive", {i}}};
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (r.at(i, j) != r.at(j, i)) return Witness{{"symmetric", {i, j}}};
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (!r.at(i, j)) continue;
      for (int k = 0; k < n; ++k) {
        if (r.at(j, k) && !r.at(i, k)) {
          return Witness{{"transitive", {i, j, k}}};
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!r.at(i, j)) continue;
      for (int c = 0; c < n; ++c) {
        if (!r.at(t.at(c, i), t.at(c, j))) {
          return Witness{{"left_compatible", {i, j, c}}};
        }
        if (!r.at(t.at(i, c), t.at(j, c))) {
          return Witness{{"right_compatible", {i, j, c}}};
        }
      }
    }
  }
  return std::nullopt;
}

Congruence make_congruence(CayleyTable const& t, Relation const& r) {
  if (auto w = congruence_violation(t, r)) {
    throw Error(ErrorKind::kInternalInvariantViolation,
                "relation fails the " + w->begin()->first + " law");
  }
  Congruence c;
  c.class_of.assign(t.order, -1);
  for (int i = 0; i < t.order; ++i) {
    if (c.class_of[i] >= 0) continue;
    int id = static_cast<int>(c.classes.size());
    c.classes.emplace_back();
    for (int j = i; j < t.order; ++j) {
      if (r.at(i, j)) {
        c.class_of[j] = id;
        c.classes.back().push_back(j);
      }
    }
  }
  return c;
}

Congruence discrete_congruence(int n) {
  Congruence c;
  for (int i = 0; i < n; ++i) {
    c.class_of.push_back(i);
    c.classes.push_back({i});
  }
  return c;
}

Congruence congruence_delta(EndoMonoid const& m, CongruenceMethod method,
                            Exec exec) {
  return make_congruence(m.table(), delta_relation(m, method, exec));
}

Congruence congruence_nabla(EndoMonoid const& m, CongruenceMethod method,
                            Exec exec) {
  return make_congruence(m.table(), nabla_relation(m, method, exec));
}

QuotientMonoid quotient(CayleyTable const& t, Congruence const& c) {
  QuotientMonoid q;
  q.congruence = c;
  int const k = static_cast<int>(c.classes.size());
  for (auto const& cls : c.classes) q.representatives.push_back(cls.front());
  q.table.order = k;
  q.table.cells.assign(k * k, -1);
  for (int i = 0; i < t.order; ++i) {
    for (int j = 0; j < t.order; ++j) {
      int a = c.class_of[i], b = c.class_of[j];
      int product = c.class_of[t.at(i, j)];
      int& cell = q.table.cells[a * k + b];
      if (cell >= 0 && cell != product) {
        throw Error(ErrorKind::kIllDefined,
                    "class product depends on representatives " +
                        std::to_string(i) + " and " + std::to_string(j));
      }
      cell = product;
    }
  }
  q.table.identity = c.class_of[t.identity];
  q.table.zero = c.class_of[t.zero];
  return q;
}

}  // namespace endolat
