#include "endolat/monoid_checks.hpp"

#include <set>

#include "endolat/error.hpp"
#include "endolat/properties.hpp"

namespace endolat {

namespace {

std::vector<int> class_of(Congruence const& c, int member) {
  return c.classes[c.class_of[member]];
}

CheckReport fail(std::string reason, Witness w) {
  CheckReport r;
  r.passed = false;
  r.reason = std::move(reason);
  r.witness = std::move(w);
  return r;
}

}  // namespace

CheckReport class_of_zero_check(EndoMonoid const& m) {
  std::vector<int> delta_class = class_of(congruence_delta(m), m.zero_index());
  std::vector<int> delta_members = delta_ideal(m).members;
  if (delta_class != delta_members) {
    return fail("[0] under delta differs from the essential-kernel members",
                {{"class", delta_class}, {"ideal", delta_members}});
  }
  std::vector<int> nabla_class = class_of(congruence_nabla(m), m.zero_index());
  std::vector<int> nabla_members = nabla_ideal(m).members;
  if (nabla_class != nabla_members) {
    return fail("[0] under nabla differs from the superfluous-image members",
                {{"class", nabla_class}, {"ideal", nabla_members}});
  }
  return {};
}

CheckReport identity_class_delta(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  for (int i = 0; i < m.order(); ++i) {
    LinearMorphism const& f = m[i];
    if (is_injective(f) && is_essential(L, f.image()) && !is_isomorphism(f)) {
      return fail("injective member with essential image is not onto",
                  {{"phi", {i}}});
    }
  }
  for (int i : class_of(congruence_delta(m), m.identity_index())) {
    if (!is_isomorphism(m[i])) {
      return fail("member of [id] under delta is not an isomorphism",
                  {{"phi", {i}}});
    }
  }
  return {};
}

CheckReport identity_class_nabla(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  for (int i = 0; i < m.order(); ++i) {
    LinearMorphism const& f = m[i];
    if (is_surjective(f) && is_superfluous(L, f.kernel()) &&
        !is_isomorphism(f)) {
      return fail("surjective member with superfluous kernel is not injective",
                  {{"phi", {i}}});
    }
  }
  for (int i : class_of(congruence_nabla(m), m.identity_index())) {
    if (!is_isomorphism(m[i])) {
      return fail("member of [id] under nabla is not an isomorphism",
                  {{"phi", {i}}});
    }
  }
  return {};
}

CheckReport class_of_identity_check(EndoMonoid const& m) {
  CheckReport out;
  std::vector<std::string> skipped;
  if (satisfies_C2(m).holds) {
    CheckReport d = identity_class_delta(m);
    if (!d.passed) return d;
  } else {
    skipped.push_back("delta half: C2 fails");
  }
  if (satisfies_D2(m).holds) {
    CheckReport n = identity_class_nabla(m);
    if (!n.passed) return n;
  } else {
    skipped.push_back("nabla half: D2 fails");
  }
  out.skipped = skipped.size() == 2;
  for (auto const& s : skipped) {
    out.reason += (out.reason.empty() ? "" : "; ") + s;
  }
  return out;
}

CheckReport nilpotent_left_ideal_check(CayleyTable const& t) {
  if (!is_regular(t).regular) {
    CheckReport r;
    r.skipped = true;
    r.reason = "monoid is not regular";
    return r;
  }
  for (int phi = 0; phi < t.order; ++phi) {
    if (phi == t.zero) continue;
    std::set<int> ideal;
    for (int x = 0; x < t.order; ++x) ideal.insert(t.at(x, phi));
    MonoidIdeal check = make_ideal(t, {ideal.begin(), ideal.end()});
    if (!check.left || !check.contains_zero) {
      throw Error(ErrorKind::kInternalInvariantViolation,
                  "principal left ideal is not a left ideal");
    }
    auto nonzero_product = [&] {
      for (int a : ideal) {
        for (int b : ideal) {
          if (t.at(a, b) != t.zero) return true;
        }
      }
      return false;
    };
    if (!nonzero_product()) {
      return fail("nonzero left ideal with zero square", {{"phi", {phi}}});
    }
  }
  return {};
}

CheckReport validate_semiring(CayleyTable const& mult,
                              AdditionTable const& add) {
  int const n = mult.order;
  if (add.order != n) {
    throw Error(ErrorKind::kPrecondition, "addition table has the wrong order");
  }
  for (int a = 0; a < n; ++a) {
    if (add.at(a, mult.zero) != a) {
      return fail("zero is not additive identity", {{"a", {a}}});
    }
    for (int b = 0; b < n; ++b) {
      if (add.at(a, b) != add.at(b, a)) {
        return fail("addition not commutative", {{"a", {a}}, {"b", {b}}});
      }
      for (int c = 0; c < n; ++c) {
        if (add.at(add.at(a, b), c) != add.at(a, add.at(b, c))) {
          return fail("addition not associative",
                      {{"a", {a}}, {"b", {b}}, {"c", {c}}});
        }
        if (mult.at(a, add.at(b, c)) != add.at(mult.at(a, b), mult.at(a, c))) {
          return fail("left distributivity fails",
                      {{"a", {a}}, {"b", {b}}, {"c", {c}}});
        }
        if (mult.at(add.at(b, c), a) != add.at(mult.at(b, a), mult.at(c, a))) {
          return fail("right distributivity fails",
                      {{"a", {a}}, {"b", {b}}, {"c", {c}}});
        }
      }
    }
  }
  return {};
}

PointwiseJoin pointwise_join_addition(EndoMonoid const& m) {
  Lattice const& L = *m.lattice();
  PointwiseJoin out;
  AdditionTable table{m.order(), std::vector<int>(m.order() * m.order(), -1)};
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i; j < m.order(); ++j) {
      ElementMap v(L.size());
      for (Element a = 0; a < L.size(); ++a) v[a] = L.join(m[i](a), m[j](a));
      try {
        endomorphism(m.lattice(), v);
      } catch (Error const&) {
        out.linear = false;
        out.closed = false;
        out.witness = {{"phi", {i}}, {"psi", {j}}};
        return out;
      }
      auto k = m.index_of(v);
      if (!k) {
        if (out.closed) out.witness = {{"phi", {i}}, {"psi", {j}}};
        out.closed = false;
        continue;
      }
      table.cells[i * m.order() + j] = table.cells[j * m.order() + i] = *k;
    }
  }
  if (out.closed) out.table = std::move(table);
  return out;
}

}  // namespace endolat
