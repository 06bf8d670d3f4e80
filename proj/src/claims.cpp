#include "endolat/claims.hpp"

#include <algorithm>
#include <exception>
#include <set>

#include "endolat/error.hpp"
#include "endolat/monoid_checks.hpp"

namespace endolat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass:
      return "pass";
    case Verdict::kFail:
      return "fail";
    case Verdict::kHypothesesNotMet:
      return "hypotheses_not_met";
  }
  return "?";
}

// -- context -------------------------------------------------------------------

PropertyValue const& ClaimContext::property(std::string const& id) {
  auto it = _props.find(id);
  if (it == _props.end()) it = _props.emplace(id, evaluate_property(id, _m)).first;
  return it->second;
}

Congruence const& ClaimContext::delta() {
  if (!_delta) _delta = congruence_delta(_m, CongruenceMethod::kBoth, Exec::kSerial);
  return *_delta;
}

Congruence const& ClaimContext::nabla() {
  if (!_nabla) _nabla = congruence_nabla(_m, CongruenceMethod::kBoth, Exec::kSerial);
  return *_nabla;
}

EndoMonoid const& ClaimContext::full_end() {
  if (!_full) _full = full_endo_monoid(_m.lattice(), Exec::kSerial);
  return *_full;
}

// -- helpers -------------------------------------------------------------------

namespace {

ClaimOutcome ok() { return {}; }

ClaimOutcome bad(Witness w, std::string note = {}) {
  return {false, std::move(w), std::move(note)};
}

int b2i(bool b) { return b ? 1 : 0; }

IntervalView below(LatticePtr const& L, Element x) {
  return IntervalView(L, L->bottom(), x);
}

// theta : [0,x] -> [0,y] as a parent-indexed map; returns the inverse.
ElementMap invert(Lattice const& L, ElementMap const& theta, Element x) {
  ElementMap inv(L.size(), kNone);
  for (Element v : L.down_set(x)) inv[theta[v]] = v;
  return inv;
}

bool regular_and_abelian(CayleyTable const& t) {
  return is_regular(t).regular && is_abelian(t);
}

// Any complement choice x' making iota_y theta pi_x a member of m.
bool some_hat_in(EndoMonoid const& m, ElementMap const& theta, Element x) {
  Lattice const& L = *m.lattice();
  for (Element x_prime : complements_of(L, x)) {
    if (m.contains(hat_values(L, theta, x, x_prime))) return true;
  }
  return false;
}

// Independent families of nonzero elements with join = top, found in id
// order and capped.
std::vector<std::vector<Element>> spanning_families(Lattice const& L,
                                                    ElementSet allowed,
                                                    int max_size,
                                                    std::size_t cap) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> pool = (allowed - ElementSet{L.bottom()}).to_vector();
  std::vector<Element> family;
  std::function<void(std::size_t, Element)> grow = [&](std::size_t from,
                                                       Element joined) {
    if (out.size() >= cap) return;
    if (!family.empty() && joined == L.top()) {
      out.push_back(family);
      return;
    }
    if (static_cast<int>(family.size()) >= max_size) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      Element a = pool[i];
      if (L.meet(a, joined) != L.bottom()) continue;
      family.push_back(a);
      if (is_independent(L, family)) grow(i + 1, L.join(joined, a));
      family.pop_back();
    }
  };
  grow(0, L.bottom());
  return out;
}

bool interval_regular(LatticePtr const& L, Element a, bool abelian_too) {
  auto [sub, _] = interval_lattice(below(L, a));
  EndoMonoid end = full_endo_monoid(sub, Exec::kSerial);
  return abelian_too ? regular_and_abelian(end.table())
                     : is_regular(end.table()).regular;
}

// -- section: regularity ---------------------------------------------------------

ClaimOutcome prop_reg(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  Lattice const& L = ctx.lattice();
  ElementSet comp = complemented_elements(L);
  for (int i = 0; i < m.order(); ++i) {
    bool left = comp.contains(m[i].kernel()) && comp.contains(m[i].image());
    bool right = false;
    for (int j = 0; j < m.order(); ++j) {
      if (m.compose(m.compose(i, j), i) != i) continue;
      right = true;
      // psi.phi(1) complements ker(phi); ker(phi.psi) complements phi(1).
      Element a = m[m.compose(j, i)].image();
      Element k = m[i].kernel();
      if (L.meet(a, k) != L.bottom() || L.join(a, k) != L.top()) {
        return bad({{"phi", {i}}, {"psi", {j}}, {"clause", {1}}});
      }
      Element kk = m[m.compose(i, j)].kernel();
      Element img = m[i].image();
      if (L.meet(kk, img) != L.bottom() || L.join(kk, img) != L.top()) {
        return bad({{"phi", {i}}, {"psi", {j}}, {"clause", {2}}});
      }
    }
    if (left != right) {
      return bad({{"phi", {i}}, {"complemented", {b2i(left)}},
                  {"inner_inverse", {b2i(right)}}});
    }
  }
  return ok();
}

ClaimOutcome thm_kerimgsumm(ClaimContext& ctx) {
  bool a = is_regular(ctx.monoid().table()).regular;
  bool b = ctx.holds("m_rickart") && ctx.holds("m_c2");
  bool c = ctx.holds("dual_m_rickart") && ctx.holds("m_d2");
  bool d = kernels_and_images_complemented(ctx.monoid()).holds;
  if (a == b && b == c && c == d) return ok();
  return bad({{"a", {b2i(a)}}, {"b", {b2i(b)}}, {"c", {b2i(c)}}, {"d", {b2i(d)}}});
}

ClaimOutcome cor_endoreg_rickart(ClaimContext& ctx) {
  bool a = is_regular(ctx.monoid().table()).regular;
  bool b = ctx.holds("m_rickart") && ctx.holds("dual_m_rickart");
  if (a == b) return ok();
  return bad({{"regular", {b2i(a)}}, {"rickart_both", {b2i(b)}}});
}

ClaimOutcome cor_indec_endoreg(ClaimContext& ctx) {
  CayleyTable const& t = ctx.monoid().table();
  bool a = is_regular(t).regular;
  bool b = true;
  int witness = -1;
  for (int i = 0; i < t.order && b; ++i) {
    if (i != t.zero && !inverse_of(t, i)) {
      b = false;
      witness = i;
    }
  }
  if (a == b) return ok();
  return bad({{"regular", {b2i(a)}}, {"units", {b2i(b)}}, {"phi", {witness}}});
}

ClaimOutcome rickart_kext(ClaimContext& ctx) {
  bool a = ctx.holds("m_rickart");
  bool b = ctx.holds("k_extending") && ctx.holds("k_nonsingular");
  if (a == b) return ok();
  return bad({{"rickart", {b2i(a)}}, {"kext_knonsing", {b2i(b)}}});
}

ClaimOutcome dualrickart_tlift(ClaimContext& ctx) {
  bool a = ctx.holds("dual_m_rickart");
  bool b = ctx.holds("t_lifting") && ctx.holds("t_nonsingular");
  if (a == b) return ok();
  return bad({{"dual_rickart", {b2i(a)}}, {"tlift_tnonsing", {b2i(b)}}});
}

// -- section: abelian ------------------------------------------------------------

ClaimOutcome prop_ker_img(ClaimContext& ctx) {
  bool a = ctx.holds("m_rickart") && ctx.holds("dual_m_rickart") &&
           ctx.holds("m_abelian");
  bool b = kernel_image_pairs(ctx.monoid()).holds;
  if (a == b) return ok();
  return bad({{"rickart_dual_abelian", {b2i(a)}}, {"pairs", {b2i(b)}}});
}

ClaimOutcome prop_cbool(ClaimContext& ctx) {
  CayleyTable const& t = ctx.monoid().table();
  std::vector<int> idem = idempotents(t);
  bool commute = true;
  for (int e : idem) {
    for (int f : idem) commute = commute && t.at(e, f) == t.at(f, e);
  }
  bool boolean = ctx.holds("c_boolean");
  if (commute == boolean) return ok();
  return bad({{"idempotents_commute", {b2i(commute)}},
              {"c_boolean", {b2i(boolean)}}});
}

ClaimOutcome cor_cbool_semiring(ClaimContext& ctx) {
  if (ctx.holds("m_abelian")) return ok();
  return bad(ctx.property("m_abelian").witness);
}

ClaimOutcome lemma_pife(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  Lattice const& L = ctx.lattice();
  CayleyTable const& t = m.table();
  for (int e : idempotents(t)) {
    bool central = is_central(t, e);
    // pi onto ker(e) along e(1).
    ElementMap pi = projection_values(L, m[e].kernel(), m[e].image());
    bool vanishes = true;
    int culprit = -1;
    for (int f = 0; f < m.order() && vanishes; ++f) {
      ElementMap v = compose_values(pi, compose_values(m[f].values(), m[e].values()));
      for (Element a = 0; a < L.size(); ++a) {
        if (v[a] != L.bottom()) {
          vanishes = false;
          culprit = f;
          break;
        }
      }
    }
    if (central != vanishes) {
      return bad({{"epsilon", {e}}, {"central", {b2i(central)}},
                  {"phi", {culprit}}});
    }
  }
  return ok();
}

ClaimOutcome prop_abendofi(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  Lattice const& L = ctx.lattice();
  bool regular = is_regular(m.table()).regular;
  bool a = regular && is_abelian(m.table());
  bool fixes = true;
  for (Element g : L_generated_elements(m)) {
    for (int i = 0; i < m.order(); ++i) fixes = fixes && L.leq(m[i](g), g);
  }
  bool b = regular && fixes;
  if (a == b) return ok();
  return bad({{"abelian_endoregular", {b2i(a)}}, {"endoregular_fixing", {b2i(b)}}});
}

ClaimOutcome lemma_regsp(ClaimContext& ctx) {
  CheckReport r = nilpotent_left_ideal_check(ctx.monoid().table());
  if (r.passed) return {true, {}, r.reason};
  return bad(r.witness, r.reason);
}

ClaimOutcome lemma_abendocompiq(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  LatticePtr const& L = ctx.lattice_ptr();
  ElementSet comp = complemented_elements(*L);
  for (Element a : comp) {
    for (Element b : comp) {
      if (a == b) continue;
      ClaimOutcome out;
      for_each_interval_isomorphism(below(L, a), below(L, b),
                                    [&](ElementMap const& theta) {
        if (some_hat_in(m, theta, a) &&
            some_hat_in(m, invert(*L, theta, a), b)) {
          out = bad({{"a", {a}}, {"b", {b}}, {"theta", theta}});
          return false;
        }
        return true;
      });
      if (!out.holds) return out;
    }
  }
  return ok();
}

// (b) and (c) with every morphism required to come from m through complement
// choices.
ClaimOutcome prop_xyig(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  LatticePtr const& L = ctx.lattice_ptr();
  ElementSet comp = complemented_elements(*L);
  ElementSet gen = L_generated_elements(m);
  bool a = is_abelian(m.table());

  bool b = true;
  Witness bw;
  for (Element x : gen & comp) {
    for (Element y : gen & comp) {
      if (x == y || !b) continue;
      for_each_interval_isomorphism(below(L, x), below(L, y),
                                    [&](ElementMap const& theta) {
        if (some_hat_in(m, theta, x) &&
            some_hat_in(m, invert(*L, theta, x), y)) {
          b = false;
          bw = {{"x", {x}}, {"y", {y}}};
          return false;
        }
        return true;
      });
    }
  }

  bool c = true;
  Witness cw;
  for (Element x : gen & comp) {
    for (Element y : gen) {
      if (L->meet(x, y) != L->bottom() || !c) continue;
      for (int i = 0; i < m.order() && c; ++i) {
        if (i == m.zero_index() || !L->leq(m[i].image(), y)) continue;
        for (Element x_prime : complements_of(*L, x)) {
          if (compose_values(m[i].values(), projection_values(*L, x, x_prime)) ==
              m[i].values()) {
            c = false;
            cw = {{"x", {x}}, {"y", {y}}, {"psi", {i}}};
            break;
          }
        }
      }
    }
  }
  if (a == b && b == c) return ok();
  Witness w = {{"a", {b2i(a)}}, {"b", {b2i(b)}}, {"c", {b2i(c)}}};
  w.insert(bw.begin(), bw.end());
  for (auto& [k, v] : cw) w["c_" + k] = v;
  return bad(w);
}

// (b) and (c) over all interval morphisms, meaningful for m = End(L).
ClaimOutcome prop_xyig_unrestricted(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  LatticePtr const& L = ctx.lattice_ptr();
  ElementSet gen = L_generated_elements(m);
  bool a = is_abelian(m.table());
  bool b = true;
  Witness bw;
  for (Element x : gen) {
    for (Element y : gen) {
      if (x != y && b && are_isomorphic_intervals(below(L, x), below(L, y))) {
        b = false;
        bw = {{"x", {x}}, {"y", {y}}};
      }
    }
  }
  bool c = true;
  Witness cw;
  for (Element x : gen) {
    for (Element y : gen) {
      if (!c || L->meet(x, y) != L->bottom()) continue;
      // A nonzero linear [0,x] -> [0,y] exists iff some [k,x] with k < x is
      // isomorphic to some [0,a'] with 0 < a' <= y.
      for (Element k : L->down_set(x)) {
        if (k == x || !c) continue;
        for (Element ap : L->down_set(y)) {
          if (ap == L->bottom()) continue;
          if (are_isomorphic_intervals(IntervalView(L, k, x), below(L, ap))) {
            c = false;
            cw = {{"c_x", {x}}, {"c_y", {y}}, {"c_kernel", {k}}, {"c_image", {ap}}};
            break;
          }
        }
      }
    }
  }
  if (a == b && b == c) return ok();
  Witness w = {{"a", {b2i(a)}}, {"b", {b2i(b)}}, {"c", {b2i(c)}}};
  w.insert(bw.begin(), bw.end());
  w.insert(cw.begin(), cw.end());
  return bad(w);
}

ClaimOutcome cor_hopf(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  for (int i = 0; i < m.order(); ++i) {
    bool inj = is_injective(m[i]), iso = is_isomorphism(m[i]),
         sur = is_surjective(m[i]);
    if (inj != iso || iso != sur) {
      return bad({{"phi", {i}}, {"injective", {b2i(inj)}},
                  {"isomorphism", {b2i(iso)}}, {"surjective", {b2i(sur)}}});
    }
  }
  return ok();
}

ClaimOutcome cor_atoms(ClaimContext& ctx) {
  Lattice const& L = ctx.lattice();
  ElementSet at = atoms(L);
  if (at.size() > 1) return bad({{"atoms", at.to_vector()}});
  if (at.size() == 1) {
    Element a = at.first();
    for (Element c : complements_of(L, a)) {
      if ((at & L.down_set(c)).empty()) return ok();
    }
    return bad({{"atom", {a}}}, "no complement of the atom has zero socle");
  }
  return ok();
}

ClaimOutcome cor_two_element(ClaimContext& ctx) {
  bool a = ctx.holds("m_abelian_endoregular");
  bool b = ctx.lattice().size() == 2;
  if (a == b) return ok();
  return bad({{"abelian_endoregular", {b2i(a)}}, {"two_element", {b2i(b)}}});
}

// -- section: decompositions ---------------------------------------------------

constexpr int kFamilyMaxSize = 4;
constexpr std::size_t kFamilyCap = 200;
constexpr std::size_t kDecompositionCap = 4000;

ClaimOutcome lemma_compdecomp(ClaimContext& ctx) {
  Lattice const& L = ctx.lattice();
  std::size_t checked = 0;
  for (auto const& family :
       spanning_families(L, L.all(), kFamilyMaxSize, kFamilyCap)) {
    // Splittings (b_i, c_i) of each [0, a_i].
    std::vector<std::vector<std::pair<Element, Element>>> splits;
    for (Element a : family) {
      std::vector<std::pair<Element, Element>> s;
      for (Element b : L.down_set(a)) {
        for (Element c : L.down_set(a)) {
          if (L.meet(b, c) == L.bottom() && L.join(b, c) == a) s.push_back({b, c});
        }
      }
      splits.push_back(std::move(s));
    }
    std::vector<std::size_t> pick(family.size(), 0);
    while (checked < kDecompositionCap) {
      Element bj = L.bottom(), cj = L.bottom();
      for (std::size_t i = 0; i < family.size(); ++i) {
        bj = L.join(bj, splits[i][pick[i]].first);
        cj = L.join(cj, splits[i][pick[i]].second);
      }
      ++checked;
      if (L.meet(bj, cj) != L.bottom() || L.join(bj, cj) != L.top()) {
        return bad({{"family", family}, {"b_join", {bj}}, {"c_join", {cj}}});
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == splits[i].size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
  }
  return {true, {}, "checked " + std::to_string(checked) + " decompositions"};
}

ClaimOutcome prop_compendo(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  LatticePtr const& L = ctx.lattice_ptr();
  bool whole = is_regular(m.table()).regular;
  for (auto const& family : spanning_families(*L, fully_invariant_elements(m),
                                              kFamilyMaxSize, kFamilyCap)) {
    bool parts = std::all_of(family.begin(), family.end(), [&](Element a) {
      return interval_regular(L, a, false);
    });
    if (parts != whole) {
      return bad({{"family", family}, {"whole", {b2i(whole)}},
                  {"parts", {b2i(parts)}}});
    }
  }
  return ok();
}

ClaimOutcome cor_compabendo(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  LatticePtr const& L = ctx.lattice_ptr();
  bool whole = regular_and_abelian(m.table());
  ElementSet invariant = fully_invariant_elements(m);
  for (auto const& family :
       spanning_families(*L, L->all(), kFamilyMaxSize, kFamilyCap)) {
    bool parts = std::all_of(family.begin(), family.end(), [&](Element a) {
      return invariant.contains(a) && interval_regular(L, a, true);
    });
    if (parts != whole) {
      return bad({{"family", family}, {"whole", {b2i(whole)}},
                  {"parts", {b2i(parts)}}});
    }
  }
  return ok();
}

// -- section: von Neumann ------------------------------------------------------

ClaimOutcome prop_vnl(ClaimContext& ctx) {
  bool a = ctx.holds("vnr");
  bool b = ctx.holds("dual_m_rickart") && ctx.holds("all_compacts_generated");
  if (a == b) return ok();
  return bad({{"vnr", {b2i(a)}}, {"dual_generated", {b2i(b)}}});
}

ClaimOutcome cor_vnlendo(ClaimContext& ctx) {
  bool gen = ctx.holds("all_compacts_generated");
  bool a = ctx.holds("vnr") && ctx.holds("m_d2");
  bool b = ctx.holds("m_rickart") && ctx.holds("dual_m_rickart") && gen;
  bool c = is_regular(ctx.monoid().table()).regular && gen;
  if (a == b && b == c) return ok();
  return bad({{"a", {b2i(a)}}, {"b", {b2i(b)}}, {"c", {b2i(c)}}});
}

// -- section: congruences ------------------------------------------------------

ClaimOutcome lemma_imginvess(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  Lattice const& L = ctx.lattice();
  ElementSet ess = essential_elements(L);
  ElementSet sup = superfluous_elements(L);
  for (int i = 0; i < m.order(); ++i) {
    for (Element x : ess) {
      Element w = L.bottom();
      for (Element a = 0; a < L.size(); ++a) {
        if (L.leq(m[i](a), x)) w = L.join(w, a);
      }
      if (!ess.contains(w)) return bad({{"phi", {i}}, {"x", {x}}, {"w", {w}}});
    }
    for (Element x : sup) {
      if (!sup.contains(m[i](x))) return bad({{"phi", {i}}, {"x", {x}}});
    }
  }
  return ok();
}

ClaimOutcome lemma_congru(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  auto d = congruence_violation(
      m.table(), delta_relation(m, CongruenceMethod::kDefinition, Exec::kSerial));
  if (d) return bad(*d, "delta");
  auto n = congruence_violation(
      m.table(), nabla_relation(m, CongruenceMethod::kDefinition, Exec::kSerial));
  if (n) return bad(*n, "nabla");
  return ok();
}

ClaimOutcome lemma_zero_class(ClaimContext& ctx) {
  CheckReport r = class_of_zero_check(ctx.monoid());
  if (r.passed) return ok();
  return bad(r.witness, r.reason);
}

ClaimOutcome lemma_ideals(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  std::set<int> idem;
  for (int e : idempotents(m.table())) idem.insert(e);
  for (auto [ideal, label] : {std::pair{delta_ideal(m), "delta"},
                              std::pair{nabla_ideal(m), "nabla"}}) {
    if (!ideal.two_sided()) return bad({}, std::string(label) + " is not an ideal");
    for (int i : ideal.members) {
      if (i != m.zero_index() && idem.count(i)) {
        return bad({{"phi", {i}}},
                   std::string(label) + " holds a nonzero idempotent");
      }
    }
  }
  return ok();
}

ClaimOutcome lemma_one_class_delta(ClaimContext& ctx) {
  CheckReport r = identity_class_delta(ctx.monoid());
  if (r.passed) return ok();
  return bad(r.witness, r.reason);
}

ClaimOutcome lemma_one_class_nabla(ClaimContext& ctx) {
  CheckReport r = identity_class_nabla(ctx.monoid());
  if (r.passed) return ok();
  return bad(r.witness, r.reason);
}

ClaimOutcome quotient_regular(ClaimContext& ctx, Congruence const& c) {
  QuotientMonoid q = quotient(ctx.monoid().table(), c);
  RegularityResult r = is_regular(q.table);
  if (r.regular) return ok();
  return bad({{"class", {r.failing}}});
}

ClaimOutcome thm_delta(ClaimContext& ctx) { return quotient_regular(ctx, ctx.delta()); }
ClaimOutcome thm_nabla(ClaimContext& ctx) { return quotient_regular(ctx, ctx.nabla()); }

ClaimOutcome indecomposable_chain(ClaimContext& ctx, Congruence const& c,
                                  bool lifting_side) {
  EndoMonoid const& m = ctx.monoid();
  CayleyTable const& t = m.table();
  int zero_class = c.class_of[t.zero];
  bool one = true;
  for (int i = 0; i < t.order; ++i) {
    if (c.class_of[i] != zero_class && !inverse_of(t, i)) one = false;
  }
  QuotientMonoid q = quotient(t, c);
  bool two = true;
  for (int k = 0; k < q.table.order; ++k) {
    if (k != q.table.zero && !inverse_of(q.table, k)) two = false;
  }
  bool three = ctx.holds(lifting_side ? "t_lifting" : "k_extending");
  bool upgrade = ctx.holds(lifting_side ? "cohopfian" : "hopfian");
  Witness w = {{"one", {b2i(one)}}, {"two", {b2i(two)}}, {"three", {b2i(three)}}};
  if (one && !two) return bad(w, "(1) does not give (2)");
  if (two && !three) return bad(w, "(2) does not give (3)");
  if (upgrade && three && !one) return bad(w, "(3) does not give (1)");
  return {true, {}, upgrade ? "equivalence checked" : "chain checked"};
}

ClaimOutcome cor_indec_delta(ClaimContext& ctx) {
  return indecomposable_chain(ctx, ctx.delta(), false);
}

ClaimOutcome cor_indec_nabla(ClaimContext& ctx) {
  return indecomposable_chain(ctx, ctx.nabla(), true);
}

// -- section: idempotents ------------------------------------------------------

ClaimOutcome idempotent_basics(ClaimContext& ctx) {
  EndoMonoid const& m = ctx.monoid();
  Lattice const& L = ctx.lattice();
  std::vector<int> idem = idempotents(m.table());
  for (int e : idem) {
    Element k = m[e].kernel(), img = m[e].image();
    if (L.meet(k, img) != L.bottom() || L.join(k, img) != L.top()) {
      return bad({{"epsilon", {e}}}, "kernel and image are not complements");
    }
    if (projection_values(L, img, k) != m[e].values()) {
      return bad({{"epsilon", {e}}}, "idempotent is not the projection on its image");
    }
  }
  if (ctx.holds("m_is_full")) {
    int pairs = 0;
    for (Element x : complemented_elements(L)) pairs += complements_of(L, x).size();
    if (pairs != static_cast<int>(idem.size())) {
      return bad({{"idempotents", {static_cast<int>(idem.size())}},
                  {"pairs", {pairs}}});
    }
  }
  return ok();
}

ClaimOutcome rem_cuc_proj(ClaimContext& ctx) {
  if (ctx.holds("contains_all_projections")) return ok();
  return bad(ctx.property("contains_all_projections").witness);
}

}  // namespace

// -- registry ------------------------------------------------------------------

std::vector<Claim> const& claims() {
  static std::vector<Claim> const table = {
      {"prop_reg",
       "For each member phi: kernel and image are complemented exactly when "
       "phi has an inner inverse psi in m; every such psi makes psi.phi(1) a "
       "complement of ker(phi) and ker(phi.psi) a complement of phi(1).",
       {"modular", "closed_under_complements"}, prop_reg},
      {"thm_kerimgsumm",
       "Regular m; Rickart with C2; dual-Rickart with D2; all kernels and "
       "images complemented: these four agree.",
       {"modular", "closed_under_complements"}, thm_kerimgsumm},
      {"cor_endoreg_rickart",
       "m is regular exactly when the lattice is both m-Rickart and dual "
       "m-Rickart.",
       {"modular", "closed_under_complements"}, cor_endoreg_rickart},
      {"cor_indec_endoreg",
       "With only trivial complements, m is regular exactly when every nonzero "
       "member is invertible in m.",
       {"modular", "indecomposable"}, cor_indec_endoreg},
      {"rickart_kext",
       "m-Rickart is equivalent to K-extending together with K-nonsingular.",
       {"modular", "contains_all_projections"}, rickart_kext},
      {"dualrickart_tlift",
       "Dual m-Rickart is equivalent to T-lifting together with T-nonsingular.",
       {"modular", "contains_all_projections"}, dualrickart_tlift},
      {"prop_ker_img",
       "Rickart, dual-Rickart and abelian together hold exactly when each "
       "member's kernel and image are complements of each other.",
       {"modular", "closed_under_complements"}, prop_ker_img},
      {"prop_cbool",
       "For regular m, idempotents of m pairwise commute exactly when the "
       "complemented elements form a Boolean sublattice.",
       {"modular", "closed_under_complements", "m_endoregular"}, prop_cbool},
      {"cor_cbool_semiring",
       "If pointwise join makes m a semiring, m is regular and C(L) is "
       "Boolean, then every idempotent of m is central.",
       {"modular", "closed_under_complements", "m_endoregular", "c_boolean",
        "pointwise_join_semiring"},
       cor_cbool_semiring},
      {"lemma_pife",
       "For regular m containing all projections, an idempotent e is central "
       "exactly when projecting "
       "phi.e onto ker(e) along e(1) gives zero for every phi in m.",
       {"modular", "m_endoregular", "contains_all_projections"}, lemma_pife},
      {"prop_abendofi",
       "Abelian and regular is the same as regular with every member keeping "
       "each m-generated element below itself.",
       {"modular", "closed_under_complements"}, prop_abendofi},
      {"lemma_regsp",
       "In a regular monoid with zero, a left ideal with zero square is zero.",
       {"modular", "m_endoregular"}, lemma_regsp},
      {"lemma_abendocompiq",
       "Abelian regular m: complemented a, b joined by an isomorphism whose "
       "extensions both ways lie in m must coincide.",
       {"modular", "m_abelian_endoregular"}, lemma_abendocompiq},
      {"prop_xyig",
       "For regular m containing all projections: abelian; isomorphic "
       "m-generated complemented elements linked through m coincide; no "
       "nonzero member of m maps a generated complemented x into a generated "
       "y disjoint from it. All three agree.",
       {"modular", "m_endoregular", "contains_all_projections"}, prop_xyig},
      {"prop_xyig_unrestricted",
       "For regular End(L): abelian; generated elements with isomorphic "
       "down-sets coincide; disjoint generated elements admit no nonzero "
       "linear morphism between their down-sets. All three agree.",
       {"modular", "m_endoregular", "m_is_full"}, prop_xyig_unrestricted},
      {"cor_hopf",
       "In an abelian regular m, injective, bijective and surjective members "
       "coincide.",
       {"modular", "m_abelian_endoregular"}, cor_hopf},
      {"cor_atoms",
       "A nontrivial abelian endoregular lattice has at most one atom, and an "
       "atom has a complement with no atoms beneath it.",
       {"modular", "m_is_full", "m_abelian_endoregular", "nontrivial"},
       cor_atoms},
      {"cor_two_element",
       "A nontrivial finite modular lattice is abelian endoregular exactly "
       "when it has two elements.",
       {"modular", "m_is_full", "nontrivial"}, cor_two_element},
      {"lemma_compdecomp",
       "If independent a_i join to the top and each a_i splits as b_i, c_i, "
       "the joins of the b_i and of the c_i are complements.",
       {"modular"}, lemma_compdecomp},
      {"prop_compendo",
       "For an independent spanning family of fully invariant elements, L is "
       "endoregular exactly when every [0,a_i] is.",
       {"modular", "m_is_full"}, prop_compendo},
      {"cor_compabendo",
       "For an independent spanning family, L is abelian endoregular exactly "
       "when every [0,a_i] is and every a_i is fully invariant.",
       {"modular", "m_is_full"}, cor_compabendo},
      {"prop_vnl",
       "Every element complemented is equivalent to dual m-Rickart with every "
       "element m-generated.",
       {"modular", "closed_under_complements"}, prop_vnl},
      {"cor_vnlendo",
       "Complemented with D2; Rickart, dual-Rickart and generated; regular and "
       "generated: these three agree.",
       {"modular", "closed_under_complements"}, cor_vnlendo},
      {"lemma_imginvess",
       "The join of everything a member sends under an essential element is "
       "essential, and members send superfluous elements to superfluous ones.",
       {"modular"}, lemma_imginvess},
      {"lemma_congru",
       "The delta and nabla relations, computed from their definitions, are "
       "congruences on m.",
       {"modular"}, lemma_congru},
      {"lemma_zero_class",
       "The class of zero is the set of members with essential kernel (delta) "
       "or superfluous image (nabla).",
       {"modular"}, lemma_zero_class},
      {"lemma_ideals",
       "Delta and nabla within m are two-sided ideals without nonzero "
       "idempotents.",
       {"modular"}, lemma_ideals},
      {"lemma_one_class_delta",
       "Under C2, injective members with essential image and all members "
       "delta-equivalent to the identity are isomorphisms.",
       {"modular", "m_c2"}, lemma_one_class_delta},
      {"lemma_one_class_nabla",
       "Under D2, surjective members with superfluous kernel and all members "
       "nabla-equivalent to the identity are isomorphisms.",
       {"modular", "m_d2"}, lemma_one_class_nabla},
      {"thm_delta",
       "K-extending with C2 makes the quotient of m by delta regular.",
       {"modular", "closed_under_complements", "k_extending", "m_c2"},
       thm_delta},
      {"thm_nabla",
       "T-lifting with D2 makes the quotient of m by nabla regular.",
       {"modular", "closed_under_complements", "t_lifting", "m_d2"}, thm_nabla},
      {"cor_indec_delta",
       "Indecomposable L: members outside delta invertible, then the delta "
       "quotient has nonzero units only, then K-extending; with Hopfian L "
       "the last implies the first.",
       {"modular", "m_is_full", "indecomposable"}, cor_indec_delta},
      {"cor_indec_nabla",
       "Indecomposable L: members outside nabla invertible, then the nabla "
       "quotient has nonzero units only, then T-lifting; with cohopfian L "
       "the last implies the first.",
       {"modular", "m_is_full", "indecomposable"}, cor_indec_nabla},
      {"idempotent_basics",
       "Each idempotent is the projection on its image along its kernel; for "
       "End(L) they match ordered complement pairs one to one.",
       {"modular"}, idempotent_basics},
      {"rem_cuc_proj",
       "A monoid closed under complements contains every projection.",
       {"modular", "closed_under_complements"}, rem_cuc_proj},
  };
  return table;
}

Claim const* find_claim(std::string const& id) {
  for (auto const& c : claims()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

ClaimCheck run_claim(Claim const& claim, ClaimContext& ctx) {
  ClaimCheck out;
  out.id = claim.id;
  try {
    for (auto const& h : claim.hypotheses) {
      bool value = ctx.holds(h);
      out.hypotheses.push_back({h, value});
      if (!value) {
        out.verdict = Verdict::kHypothesesNotMet;
        out.unmet = h;
        return out;
      }
    }
    ClaimOutcome r = claim.conclude(ctx);
    out.verdict = r.holds ? Verdict::kPass : Verdict::kFail;
    out.witness = std::move(r.witness);
    out.note = std::move(r.note);
  } catch (Error const& e) {
    out.verdict = Verdict::kFail;
    out.note = e.what();
  }
  return out;
}

namespace {

std::vector<Claim const*> select_claims(std::vector<std::string> const& ids) {
  std::vector<Claim const*> selected;
  if (ids.empty()) {
    for (auto const& c : claims()) selected.push_back(&c);
  } else {
    for (auto const& id : ids) {
      Claim const* c = find_claim(id);
      if (!c) throw Error(ErrorKind::kPrecondition, "unknown claim id '" + id + "'");
      selected.push_back(c);
    }
  }
  return selected;
}

ClaimCheck gated_on_modularity(Claim const& c) {
  ClaimCheck out;
  out.id = c.id;
  out.hypotheses = {{"modular", false}};
  out.verdict = Verdict::kHypothesesNotMet;
  out.unmet = "modular";
  return out;
}

}  // namespace

std::vector<ClaimCheck> non_modular_checks(std::vector<std::string> const& ids) {
  std::vector<ClaimCheck> out;
  for (Claim const* c : select_claims(ids)) out.push_back(gated_on_modularity(*c));
  return out;
}

std::vector<ClaimCheck> run_all(EndoMonoid const& m,
                                std::vector<std::string> const& ids) {
  std::vector<Claim const*> selected = select_claims(ids);
  ClaimContext ctx(m);
  std::vector<ClaimCheck> out;
  for (Claim const* c : selected) out.push_back(run_claim(*c, ctx));
  return out;
}

// -- sweep ---------------------------------------------------------------------

std::vector<EndoMonoid> sweep_monoids(LatticePtr const& L, int k, Exec exec) {
  EndoMonoid const end = full_endo_monoid(L, exec);
  std::vector<EndoMonoid> out{end};
  std::set<std::vector<ElementMap>> seen;
  auto signature = [](EndoMonoid const& m) {
    std::vector<ElementMap> s;
    for (auto const& f : m.elements()) s.push_back(f.values());
    return s;
  };
  seen.insert(signature(end));
  std::vector<int> pool;
  for (int i = 0; i < end.order(); ++i) {
    if (i != end.zero_index() && !is_isomorphism(end[i])) pool.push_back(i);
  }
  auto add = [&](std::vector<int> const& gens) {
    std::vector<LinearMorphism> g;
    std::string name = end.name() + "<";
    for (std::size_t t = 0; t < gens.size(); ++t) {
      g.push_back(end[gens[t]]);
      name += (t ? "," : "") + std::to_string(gens[t]);
    }
    name += ">";
    EndoMonoid m = generate_submonoid(L, g, name, exec);
    if (seen.insert(signature(m)).second) out.push_back(std::move(m));
  };
  if (k >= 1) {
    for (int i : pool) add({i});
  }
  if (k >= 2) {
    for (std::size_t a = 0; a < pool.size(); ++a) {
      for (std::size_t b = a + 1; b < pool.size(); ++b) add({pool[a], pool[b]});
    }
  }
  return out;
}

namespace {

struct LatticeSweep {
  int monoids = 0;
  std::vector<SweepRecord> records;
};

LatticeSweep sweep_one(LatticePtr const& L, SweepSpec const& spec,
                       std::vector<Claim const*> const& selected) {
  LatticeSweep out;
  // Linear maps on a non-modular lattice need not compose, so there is no
  // monoid to build; every claim is gated on modularity instead.
  if (!is_modular(*L)) {
    for (Claim const* c : selected) {
      out.records.push_back({L->name(), L->size(), "-", 0, gated_on_modularity(*c)});
    }
    return out;
  }
  for (EndoMonoid const& m : sweep_monoids(L, spec.generators, Exec::kSerial)) {
    ++out.monoids;
    ClaimContext ctx(m);
    for (Claim const* c : selected) {
      out.records.push_back(
          {L->name(), L->size(), m.name(), m.order(), run_claim(*c, ctx)});
    }
  }
  return out;
}

}  // namespace

SweepReport counterexample_search(SweepSpec const& spec,
                                  std::vector<LatticePtr> const& corpus,
                                  bool keep_records) {
  std::vector<Claim const*> selected = select_claims(spec.claims);
  std::vector<LatticePtr> chosen;
  for (auto const& L : corpus) {
    if (L->size() < spec.min_n || L->size() > spec.max_n) continue;
    if (spec.modular_only && !is_modular(*L)) continue;
    chosen.push_back(L);
  }
  int const n = static_cast<int>(chosen.size());
  std::vector<LatticeSweep> parts(n);
  std::vector<std::exception_ptr> errors(n);
  auto work = [&](int i) {
    try {
      parts[i] = sweep_one(chosen[i], spec, selected);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };
  if (spec.exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n; ++i) work(i);
  } else {
    for (int i = 0; i < n; ++i) work(i);
  }
  for (auto const& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  SweepReport report;
  report.lattices = n;
  for (auto& part : parts) {
    report.monoids += part.monoids;
    for (auto& r : part.records) {
      ++report.tally[r.check.id][r.check.verdict];
      if (r.check.verdict == Verdict::kFail) report.failures.push_back(r);
      if (keep_records) report.records.push_back(std::move(r));
    }
  }
  return report;
}

void raise_if_violated(SweepReport const& report) {
  if (report.failures.empty()) return;
  SweepRecord const& r = report.failures.front();
  std::string msg = "claim " + r.check.id + " fails on lattice '" + r.lattice +
                    "' with monoid '" + r.monoid + "'";
  if (!r.check.note.empty()) msg += ": " + r.check.note;
  throw Error(ErrorKind::kTheoremViolated, msg);
}

}  // namespace endolat
