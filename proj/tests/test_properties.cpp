#include "doctest.h"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "endolat/properties.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace endolat;
using testing::el;
using testing::map_of;
using testing::set_of;

namespace {

bool prop(EndoMonoid const& m, std::string const& id) {
  return evaluate_property(id, m).value;
}

EndoMonoid diamond_abelian_sub() {
  auto L = named_example("m2");
  auto phi = map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "0"}, {"1", "a"}});
  auto psi = map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "b"}, {"1", "b"}});
  return generate_submonoid(L, {endomorphism(L, phi), endomorphism(L, psi)}, "m");
}

// C1 read directly: each x is essential in [0, c] for a complemented c >= x.
bool oracle_c1(Lattice const& L) {
  oracle::Order o = oracle::order_of(L);
  for (int x = 0; x < o.n; ++x) {
    bool found = false;
    for (int c = 0; c < o.n && !found; ++c) {
      bool complemented = false;
      for (int d = 0; d < o.n; ++d) complemented = complemented || oracle::complements(o, c, d);
      found = complemented && o.leq(x, c) && oracle::essential_in(o, x, o.bottom(), c);
    }
    if (!found) return false;
  }
  return true;
}

bool oracle_c3(Lattice const& L) {
  oracle::Order o = oracle::order_of(L);
  auto complemented = [&](int c) {
    for (int d = 0; d < o.n; ++d) {
      if (oracle::complements(o, c, d)) return true;
    }
    return false;
  };
  for (int x = 0; x < o.n; ++x) {
    for (int y = 0; y < o.n; ++y) {
      if (complemented(x) && complemented(y) && o.meet(x, y) == o.bottom() &&
          !complemented(o.join(x, y))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("diamond with full End") {
  EndoMonoid m = full_endo_monoid(named_example("m2"));
  CHECK(prop(m, "m_endoregular"));
  CHECK_FALSE(prop(m, "m_abelian"));
  CHECK_FALSE(prop(m, "m_abelian_endoregular"));
  CHECK(prop(m, "m_rickart"));
  CHECK(prop(m, "dual_m_rickart"));
  CHECK(prop(m, "boolean"));
  CHECK(prop(m, "c_boolean"));
  CHECK(prop(m, "vnr"));
  CHECK(prop(m, "m_c2"));
  CHECK(prop(m, "m_d2"));
  CHECK(prop(m, "all_compacts_generated"));
  CHECK(is_L_generated(m, el(*m.lattice(), "a")));
  CHECK(fully_invariant_elements(m) == set_of(*m.lattice(), {"0", "1"}));
}

TEST_CASE("diamond with the idempotent submonoid") {
  EndoMonoid m = diamond_abelian_sub();
  CHECK(prop(m, "m_abelian_endoregular"));
  CHECK(prop(m, "closed_under_complements"));
  CHECK(prop(m, "contains_all_projections"));
  CHECK_FALSE(prop(m, "m_is_full"));
  CHECK(fully_invariant_elements(m) == m.lattice()->all());
}

TEST_CASE("n_c1 separates extending from Rickart") {
  EndoMonoid m = full_endo_monoid(named_example("n_c1"));
  CHECK(prop(m, "k_extending"));
  CHECK_FALSE(prop(m, "k_nonsingular"));
  CHECK_FALSE(prop(m, "m_rickart"));
  CHECK(prop(m, "t_lifting"));
  CHECK_FALSE(prop(m, "t_nonsingular"));
  CHECK_FALSE(prop(m, "dual_m_rickart"));
  CHECK_FALSE(prop(m, "c1"));
  CHECK_FALSE(prop(m, "vnr"));
  CHECK(prop(m, "indecomposable"));
}

TEST_CASE("qc6 is quasi-continuous") {
  auto L = named_example("qc6");
  CHECK(satisfies_C1(*L).holds);
  CHECK(satisfies_C3(*L).holds);
  CHECK_FALSE(is_indecomposable(*L));
}

TEST_CASE("two-element chain") {
  EndoMonoid m = full_endo_monoid(named_example("chain2"));
  for (auto const& id : property_ids()) {
    CAPTURE(id);
    PropertyValue v = evaluate_property(id, m);
    if (id == "boolean" || id == "pointwise_join_semiring" || v.skipped_reason) continue;
    CHECK(v.value);
  }
}

TEST_CASE("C1 and C3 agree with direct readings") {
  for (auto const& L : lattice_corpus(7, true, Exec::kSerial)) {
    CAPTURE(L->name());
    CHECK(satisfies_C1(*L).holds == oracle_c1(*L));
    CHECK(satisfies_C3(*L).holds == oracle_c3(*L));
  }
}

TEST_CASE("regularity agrees with kernels and images being complemented") {
  for (auto const& L : lattice_corpus(6, true, Exec::kSerial)) {
    EndoMonoid m = full_endo_monoid(L, Exec::kSerial);
    CHECK(is_m_endoregular(m).holds == kernels_and_images_complemented(m).holds);
  }
}

TEST_CASE("analyze") {
  EndoMonoid m = full_endo_monoid(named_example("m2"));
  PropertyReport r = analyze(m);
  CHECK(r.values.size() == property_ids().size());
  CHECK_FALSE(r.degenerate);
  CHECK(r.values.at("m_endoregular").value);
  CHECK_FALSE(r.values.at("m_abelian").value);

  PropertyReport t = analyze(full_endo_monoid(named_example("trivial")));
  CHECK(t.degenerate);

  auto n5 = named_example("n5");
  auto id = identity_morphism(n5);
  auto zero = zero_morphism(IntervalView::whole(n5), IntervalView::whole(n5));
  EndoMonoid small = EndoMonoid::from_elements(n5, "{id,0}", {id, zero});
  try {
    analyze(small);
    FAIL("non-modular input accepted");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::kNotModular);
  }
  CHECK_THROWS_AS(evaluate_property("no_such_property", m), Error);
}

TEST_CASE("stored verdicts replay") {
  for (auto const& name : {"m2", "n_c1", "qc6", "chain_1", "m3"}) {
    EndoMonoid m = full_endo_monoid(named_example(name));
    for (auto const& id : property_ids()) {
      CAPTURE(name);
      CAPTURE(id);
      PropertyValue v = evaluate_property(id, m);
      CHECK(replay(id, m, v) == v.value);
    }
  }
}

TEST_CASE("property ids are stable") {
  auto const& ids = property_ids();
  CHECK(ids.front() == "modular");
  CHECK(is_property_id("k_extending"));
  CHECK(is_property_id("m_rickart"));
  CHECK_FALSE(is_property_id("rickart"));
}
