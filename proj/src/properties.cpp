#include "endolat/properties.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include "endolat/error.hpp"
#include "endolat/monoid_checks.hpp"

namespace endolat {

namespace {

IntervalView below(LatticePtr const& L, Element x) {
  return IntervalView(L, L->bottom(), x);
}

LatticePtr shared(EndoMonoid const& m) { return m.lattice(); }

}  // namespace

// -- lattice-only ------------------------------------------------------------

Check is_vnr_lattice(Lattice const& L) {
  ElementSet comp = complemented_elements(L);
  for (Element c : compact_elements(L)) {
    if (!comp.contains(c)) return {false, {{"x", {c}}}};
  }
  return {};
}

Check satisfies_C1(Lattice const& L) {
  ElementSet comp = complemented_elements(L);
  // The bottom's down-set is the whole interval [0,c] for c = x, so we scan
  // the complemented elements above x and test essentiality in [0,c].
  for (Element x = 0; x < L.size(); ++x) {
    bool found = false;
    for (Element c : comp & L.up_set(x)) {
      bool essential = true;
      for (Element y : L.down_set(c)) {
        if (y != L.bottom() && L.meet(x, y) == L.bottom()) {
          essential = false;
          break;
        }
      }
      if (essential) {
        found = true;
        break;
      }
    }
    if (!found) return {false, {{"x", {x}}}};
  }
  return {};
}

Check satisfies_C3(Lattice const& L) {
  ElementSet comp = complemented_elements(L);
  for (Element x : comp) {
    for (Element y : comp) {
      if (L.meet(x, y) == L.bottom() && !comp.contains(L.join(x, y))) {
        return {false, {{"x", {x}}, {"y", {y}}}};
      }
    }
  }
  return {};
}

Check complements_boolean(Lattice const& L) {
  ElementSet comp = complemented_elements(L);
  for (Element x : comp) {
    for (Element y : comp) {
      if (!comp.contains(L.meet(x, y)) || !comp.contains(L.join(x, y))) {
        return {false, {{"x", {x}}, {"y", {y}}}};
      }
    }
  }
  for (Element x : comp) {
    for (Element y : comp) {
      for (Element z : comp) {
        if (L.meet(x, L.join(y, z)) !=
            L.join(L.meet(x, y), L.meet(x, z))) {
          return {false, {{"x", {x}}, {"y", {y}}, {"z", {z}}}};
        }
      }
    }
  }
  return {};
}

bool is_indecomposable(Lattice const& L) {
  ElementSet comp = complemented_elements(L);
  comp.erase(L.bottom());
  comp.erase(L.top());
  return comp.empty();
}

// -- kernels and images ------------------------------------------------------

Check is_m_rickart(EndoMonoid const& m) {
  ElementSet comp = complemented_elements(*m.lattice());
  for (int i = 0; i < m.order(); ++i) {
    if (!comp.contains(m[i].kernel())) return {false, {{"phi", {i}}}};
  }
  return {};
}

Check is_dual_m_rickart(EndoMonoid const& m) {
  ElementSet comp = complemented_elements(*m.lattice());
  for (int i = 0; i < m.order(); ++i) {
    if (!comp.contains(m[i].image())) return {false, {{"phi", {i}}}};
  }
  return {};
}

Check kernels_and_images_complemented(EndoMonoid const& m) {
  Check c = is_m_rickart(m);
  if (!c.holds) return c;
  return is_dual_m_rickart(m);
}

Check kernel_image_pairs(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  for (int i = 0; i < m.order(); ++i) {
    Element k = m[i].kernel(), img = m[i].image();
    if (L.meet(k, img) != L.bottom() || L.join(k, img) != L.top()) {
      return {false, {{"phi", {i}}}};
    }
  }
  return {};
}

Check is_m_endoregular(EndoMonoid const& m, std::string* note) {
  RegularityResult r = is_regular(m.table());
  Check verdict;
  if (!r.regular) {
    verdict = {false, {{"phi", {r.failing}}}};
  }
  bool criterion = kernels_and_images_complemented(m).holds;
  if (criterion != verdict.holds) {
    std::string msg = "regularity of '" + m.name() + "' is " +
                      (verdict.holds ? "true" : "false") +
                      " but the kernel/image criterion says " +
                      (criterion ? "true" : "false");
    if (is_modular(*m.lattice()) && closed_under_complements(m).holds) {
      throw Error(ErrorKind::kEquivalenceViolation, msg);
    }
    if (note) *note = "outside theorem scope: " + msg;
  }
  return verdict;
}

Check is_m_abelian_endoregular(EndoMonoid const& m, std::string* note) {
  Check verdict = is_m_endoregular(m, note);
  if (verdict.holds) {
    Check ab = check_abelian(m.table());
    if (!ab.holds) verdict = ab;
  }
  bool criterion = kernel_image_pairs(m).holds;
  if (criterion != verdict.holds) {
    std::string msg = "abelian-endoregularity of '" + m.name() + "' is " +
                      (verdict.holds ? "true" : "false") +
                      " but the kernel/image pair criterion says " +
                      (criterion ? "true" : "false");
    if (is_modular(*m.lattice()) && closed_under_complements(m).holds) {
      throw Error(ErrorKind::kEquivalenceViolation, msg);
    }
    if (note) *note = "outside theorem scope: " + msg;
  }
  return verdict;
}

// -- C2 / D2 -------------------------------------------------------------------

Check satisfies_C2(EndoMonoid const& m) {
  LatticePtr L = shared(m);
  ElementSet comp = complemented_elements(*L);
  // Only a non-complemented target a can violate the condition.
  ElementSet targets = L->all() - comp;
  for (Element x : comp) {
    for (Element x_prime : complements_of(*L, x)) {
      for (Element a : targets) {
        Check found;
        for_each_interval_isomorphism(
            below(L, x), below(L, a), [&](ElementMap const& theta) {
              ElementMap v = hat_values(*L, theta, x, x_prime);
              if (m.contains(v)) {
                found = {false,
                         {{"x", {x}}, {"x_prime", {x_prime}}, {"a", {a}},
                          {"map", v}}};
                return false;
              }
              return true;
            });
        if (!found.holds) return found;
      }
    }
  }
  return {};
}

Check satisfies_D2(EndoMonoid const& m) {
  LatticePtr L = shared(m);
  ElementSet comp = complemented_elements(*L);
  ElementSet sources = L->all() - comp;
  for (Element a : sources) {
    for (Element x : comp) {
      Check found;
      for_each_interval_isomorphism(
          IntervalView(L, a, L->top()), below(L, x),
          [&](ElementMap const& theta) {
            ElementMap v(L->size());
            for (Element y = 0; y < L->size(); ++y) v[y] = theta[L->join(a, y)];
            if (m.contains(v)) {
              found = {false, {{"a", {a}}, {"x", {x}}, {"map", v}}};
              return false;
            }
            return true;
          });
      if (!found.holds) return found;
    }
  }
  return {};
}

// -- extending / lifting -----------------------------------------------------

namespace {

std::optional<Element> essential_closure(LatticePtr const& L, Element k,
                                         ElementSet comp) {
  for (Element c : comp & L->up_set(k)) {
    if (is_essential(k, below(L, c))) return c;
  }
  return std::nullopt;
}

std::optional<std::pair<Element, Element>> lifting_pair(LatticePtr const& L,
                                                        Element img,
                                                        ElementSet comp) {
  for (Element c : comp & L->down_set(img)) {
    for (Element c_prime : complements_of(*L, c)) {
      if (is_superfluous(L->meet(img, c_prime), below(L, c_prime))) {
        return std::make_pair(c, c_prime);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Check is_K_extending(EndoMonoid const& m) {
  LatticePtr L = shared(m);
  ElementSet comp = complemented_elements(*L);
  Check out;
  std::vector<int> closures;
  for (int i = 0; i < m.order(); ++i) {
    auto c = essential_closure(L, m[i].kernel(), comp);
    if (!c) return {false, {{"phi", {i}}}};
    closures.push_back(*c);
  }
  out.witness["c"] = std::move(closures);
  return out;
}

Check is_T_lifting(EndoMonoid const& m) {
  LatticePtr L = shared(m);
  ElementSet comp = complemented_elements(*L);
  Check out;
  std::vector<int> cs, cps;
  for (int i = 0; i < m.order(); ++i) {
    auto p = lifting_pair(L, m[i].image(), comp);
    if (!p) return {false, {{"phi", {i}}}};
    cs.push_back(p->first);
    cps.push_back(p->second);
  }
  out.witness["c"] = std::move(cs);
  out.witness["c_prime"] = std::move(cps);
  return out;
}

Check is_K_nonsingular(EndoMonoid const& m) {
  for (int i : delta_ideal(m).members) {
    if (i != m.zero_index()) return {false, {{"phi", {i}}}};
  }
  return {};
}

Check is_T_nonsingular(EndoMonoid const& m) {
  for (int i : nabla_ideal(m).members) {
    if (i != m.zero_index()) return {false, {{"phi", {i}}}};
  }
  return {};
}

Check is_hopfian(EndoMonoid const& m) {
  for (int i = 0; i < m.order(); ++i) {
    if (is_injective(m[i]) && !is_isomorphism(m[i])) {
      return {false, {{"phi", {i}}}};
    }
  }
  return {};
}

Check is_cohopfian(EndoMonoid const& m) {
  for (int i = 0; i < m.order(); ++i) {
    if (is_surjective(m[i]) && !is_isomorphism(m[i])) {
      return {false, {{"phi", {i}}}};
    }
  }
  return {};
}

// -- generated and invariant elements ------------------------------------------

bool is_L_generated(EndoMonoid const& m, Element a) {
  Lattice const& L = *m.lattice();
  Element acc = L.bottom();
  for (auto const& f : m.elements()) {
    if (L.leq(f.image(), a)) acc = L.join(acc, f.image());
  }
  return acc == a;
}

ElementSet L_generated_elements(EndoMonoid const& m) {
  ElementSet out;
  for (Element a = 0; a < m.lattice()->size(); ++a) {
    if (is_L_generated(m, a)) out.insert(a);
  }
  return out;
}

ElementSet fully_invariant_elements(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  ElementSet out;
  for (Element a = 0; a < L.size(); ++a) {
    bool inv = std::all_of(m.elements().begin(), m.elements().end(),
                           [&](LinearMorphism const& f) {
                             return L.leq(f(a), a);
                           });
    if (inv) out.insert(a);
  }
  return out;
}

Check all_compacts_generated(EndoMonoid const& m) {
  ElementSet gen = L_generated_elements(m);
  for (Element c : compact_elements(*m.lattice())) {
    if (!gen.contains(c)) return {false, {{"a", {c}}}};
  }
  return {};
}

bool is_full_monoid(EndoMonoid const& m) {
  return static_cast<int>(enumerate_endomorphisms(m.lattice(), Exec::kSerial)
                              .size()) == m.order();
}

// -- registry ------------------------------------------------------------------

namespace {

using Evaluator = std::function<PropertyValue(EndoMonoid const&)>;

PropertyValue from_check(Check c, std::string note = {}) {
  return {c.holds, std::move(c.witness), std::nullopt, std::move(note)};
}

PropertyValue from_bool(bool b) { return {b, {}, std::nullopt, {}}; }

std::vector<std::pair<std::string, Evaluator>> const& registry() {
  static auto const* table = new std::vector<std::pair<std::string, Evaluator>>{
      {"modular",
       [](EndoMonoid const& m) {
         ModularityResult r = check_modular(*m.lattice());
         PropertyValue v = from_bool(r.modular);
         if (r.witness) {
           v.witness["a_b_x"] = {(*r.witness)[0], (*r.witness)[1],
                                 (*r.witness)[2]};
         }
         return v;
       }},
      {"boolean",
       [](EndoMonoid const& m) { return from_bool(is_boolean(*m.lattice())); }},
      {"c_boolean",
       [](EndoMonoid const& m) {
         return from_check(complements_boolean(*m.lattice()));
       }},
      {"indecomposable",
       [](EndoMonoid const& m) {
         return from_bool(is_indecomposable(*m.lattice()));
       }},
      {"nontrivial",
       [](EndoMonoid const& m) {
         return from_bool(!m.lattice()->is_trivial());
       }},
      {"vnr",
       [](EndoMonoid const& m) {
         return from_check(is_vnr_lattice(*m.lattice()));
       }},
      {"c1",
       [](EndoMonoid const& m) {
         return from_check(satisfies_C1(*m.lattice()),
                           "standard lattice formulation");
       }},
      {"c3",
       [](EndoMonoid const& m) {
         return from_check(satisfies_C3(*m.lattice()),
                           "standard lattice formulation");
       }},
      {"m_is_full",
       [](EndoMonoid const& m) { return from_bool(is_full_monoid(m)); }},
      {"closed_under_complements",
       [](EndoMonoid const& m) {
         return from_check(closed_under_complements(m));
       }},
      {"contains_all_projections",
       [](EndoMonoid const& m) {
         return from_check(contains_all_projections(m));
       }},
      {"m_rickart",
       [](EndoMonoid const& m) { return from_check(is_m_rickart(m)); }},
      {"dual_m_rickart",
       [](EndoMonoid const& m) { return from_check(is_dual_m_rickart(m)); }},
      {"m_endoregular",
       [](EndoMonoid const& m) {
         std::string note;
         Check c = is_m_endoregular(m, &note);
         return from_check(c, note);
       }},
      {"m_abelian",
       [](EndoMonoid const& m) { return from_check(check_abelian(m.table())); }},
      {"m_abelian_endoregular",
       [](EndoMonoid const& m) {
         std::string note;
         Check c = is_m_abelian_endoregular(m, &note);
         return from_check(c, note);
       }},
      {"m_c2", [](EndoMonoid const& m) { return from_check(satisfies_C2(m)); }},
      {"m_d2", [](EndoMonoid const& m) { return from_check(satisfies_D2(m)); }},
      {"k_extending",
       [](EndoMonoid const& m) { return from_check(is_K_extending(m)); }},
      {"t_lifting",
       [](EndoMonoid const& m) { return from_check(is_T_lifting(m)); }},
      {"k_nonsingular",
       [](EndoMonoid const& m) {
         return from_check(is_K_nonsingular(m), "inferred definition");
       }},
      {"t_nonsingular",
       [](EndoMonoid const& m) {
         return from_check(is_T_nonsingular(m), "inferred definition");
       }},
      {"hopfian",
       [](EndoMonoid const& m) { return from_check(is_hopfian(m)); }},
      {"cohopfian",
       [](EndoMonoid const& m) { return from_check(is_cohopfian(m)); }},
      {"all_compacts_generated",
       [](EndoMonoid const& m) { return from_check(all_compacts_generated(m)); }},
      {"pointwise_join_semiring",
       [](EndoMonoid const& m) {
         PointwiseJoin pj = pointwise_join_addition(m);
         PropertyValue v;
         v.value = pj.linear && pj.closed;
         v.witness = pj.witness;
         if (v.value) {
           CheckReport s = validate_semiring(m.table(), *pj.table);
           if (!s.passed) {
             throw Error(ErrorKind::kInternalInvariantViolation,
                         "pointwise join fails the semiring laws: " +
                             s.reason);
           }
         }
         return v;
       }},
  };
  return *table;
}

}  // namespace

std::vector<std::string> const& property_ids() {
  static std::vector<std::string> const ids = [] {
    std::vector<std::string> out;
    for (auto const& [id, _] : registry()) out.push_back(id);
    return out;
  }();
  return ids;
}

bool is_property_id(std::string const& id) {
  auto const& ids = property_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

PropertyValue evaluate_property(std::string const& id, EndoMonoid const& m) {
  for (auto const& [key, eval] : registry()) {
    if (key == id) return eval(m);
  }
  throw Error(ErrorKind::kPrecondition, "unknown property id '" + id + "'");
}

PropertyReport analyze(EndoMonoid const& m,
                       std::vector<std::string> const& ids) {
  if (!is_modular(*m.lattice())) {
    throw Error(ErrorKind::kNotModular,
                "analysis needs a modular lattice; '" + m.lattice()->name() +
                    "' is not");
  }
  PropertyReport report;
  report.lattice = m.lattice()->name();
  report.monoid = m.name();
  report.degenerate = m.lattice()->is_trivial();
  std::vector<std::string> const& wanted = ids.empty() ? property_ids() : ids;
  for (auto const& id : wanted) {
    if (report.values.count(id)) continue;
    auto start = std::chrono::steady_clock::now();
    report.values[id] = evaluate_property(id, m);
    std::chrono::duration<double, std::milli> took =
        std::chrono::steady_clock::now() - start;
    report.millis[id] = took.count();
  }
  return report;
}

// -- replay --------------------------------------------------------------------

namespace {

// Re-checks a counterexample witness; nullopt when the witness carries no
// replayable structure for this property.
std::optional<bool> replay_counterexample(std::string const& id,
                                          EndoMonoid const& m,
                                          Witness const& w) {
  LatticePtr L = m.lattice();
  auto one = [&](char const* key) -> std::optional<int> {
    auto it = w.find(key);
    if (it == w.end() || it->second.size() != 1) return std::nullopt;
    return it->second[0];
  };
  ElementSet comp = complemented_elements(*L);
  auto phi = one("phi");
  if (phi && (*phi < 0 || *phi >= m.order())) return std::nullopt;
  if (id == "m_rickart" && phi) return comp.contains(m[*phi].kernel());
  if (id == "dual_m_rickart" && phi) return comp.contains(m[*phi].image());
  if ((id == "m_endoregular") && phi) {
    for (int j = 0; j < m.order(); ++j) {
      if (m.compose(m.compose(*phi, j), *phi) == *phi) return true;
    }
    return false;
  }
  if (id == "k_extending" && phi) {
    return essential_closure(L, m[*phi].kernel(), comp).has_value();
  }
  if (id == "t_lifting" && phi) {
    return lifting_pair(L, m[*phi].image(), comp).has_value();
  }
  if (id == "k_nonsingular" && phi) {
    return *phi == m.zero_index() || !is_essential(*L, m[*phi].kernel());
  }
  if (id == "t_nonsingular" && phi) {
    return *phi == m.zero_index() || !is_superfluous(*L, m[*phi].image());
  }
  if (id == "hopfian" && phi) {
    return !is_injective(m[*phi]) || is_isomorphism(m[*phi]);
  }
  if (id == "cohopfian" && phi) {
    return !is_surjective(m[*phi]) || is_isomorphism(m[*phi]);
  }
  if (id == "m_c2" || id == "m_d2") {
    auto map = w.find("map");
    auto a = one("a");
    if (map == w.end() || !a) return std::nullopt;
    return !m.contains(map->second) || comp.contains(*a);
  }
  if (id == "vnr" || id == "c1") {
    auto x = one("x");
    if (!x) return std::nullopt;
    if (id == "vnr") return comp.contains(*x);
    return essential_closure(L, *x, comp).has_value();
  }
  if (id == "c3") {
    auto x = one("x"), y = one("y");
    if (!x || !y) return std::nullopt;
    return !(comp.contains(*x) && comp.contains(*y) &&
             L->meet(*x, *y) == L->bottom()) ||
           comp.contains(L->join(*x, *y));
  }
  if (id == "m_abelian") {
    auto e = one("idempotent"), x = one("other");
    if (!e || !x) return std::nullopt;
    return m.compose(*e, *x) == m.compose(*x, *e) ||
           m.compose(*e, *e) != *e;
  }
  if (id == "all_compacts_generated") {
    auto a = one("a");
    if (!a) return std::nullopt;
    return is_L_generated(m, *a);
  }
  if (id == "contains_all_projections") {
    auto x = one("x"), xp = one("x_prime");
    if (!x || !xp) return std::nullopt;
    return m.contains(projection_values(*L, *x, *xp));
  }
  return std::nullopt;
}

}  // namespace

bool replay(std::string const& id, EndoMonoid const& m,
            PropertyValue const& v) {
  if (v.skipped_reason) return v.value;
  if (!v.value && !v.witness.empty()) {
    if (auto r = replay_counterexample(id, m, v.witness)) return *r;
  }
  if (v.value && (id == "k_extending" || id == "t_lifting") &&
      !v.witness.empty()) {
    LatticePtr L = m.lattice();
    ElementSet comp = complemented_elements(*L);
    auto const& cs = v.witness.at("c");
    if (static_cast<int>(cs.size()) != m.order()) return false;
    for (int i = 0; i < m.order(); ++i) {
      Element c = cs[i];
      if (!comp.contains(c)) return false;
      if (id == "k_extending") {
        if (!L->leq(m[i].kernel(), c) || !is_essential(m[i].kernel(), below(L, c)))
          return false;
      } else {
        Element cp = v.witness.at("c_prime")[i];
        Element img = m[i].image();
        if (!L->leq(c, img) || L->meet(c, cp) != L->bottom() ||
            L->join(c, cp) != L->top() ||
            !is_superfluous(L->meet(img, cp), below(L, cp)))
          return false;
      }
    }
    return true;
  }
  return evaluate_property(id, m).value;
}

}  // namespace endolat
