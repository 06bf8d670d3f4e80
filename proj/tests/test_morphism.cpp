#include <set>

#include "doctest.h"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "endolat/morphism.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace endolat;
using testing::el;
using testing::map_of;

namespace {

std::set<ElementMap> value_set(std::vector<LinearMorphism> const& fs) {
  std::set<ElementMap> s;
  for (auto const& f : fs) s.insert(f.values());
  return s;
}

// Every total map pushed through validate_linear.
std::set<ElementMap> validate_filter(LatticePtr const& L) {
  int const n = L->size();
  std::set<ElementMap> out;
  ElementMap f(n, 0);
  while (true) {
    try {
      out.insert(endomorphism(L, f).values());
    } catch (Error const&) {
    }
    int i = n - 1;
    while (i >= 0 && f[i] == n - 1) f[i--] = 0;
    if (i < 0) break;
    ++f[i];
  }
  return out;
}

}  // namespace

TEST_CASE("End of the diamond is the seven printed maps") {
  auto L = named_example("m2");
  auto tau = map_of(*L, {{"0", "0"}, {"a", "b"}, {"b", "a"}, {"1", "1"}});
  auto phi = map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "0"}, {"1", "a"}});
  auto psi = map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "b"}, {"1", "b"}});
  auto id = map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"1", "1"}});
  auto zero = map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"1", "0"}});
  std::set<ElementMap> expected = {id,  zero, tau, phi, psi, compose_values(tau, phi),
                                   compose_values(phi, tau)};
  CHECK(expected.size() == 7);
  CHECK(value_set(enumerate_endomorphisms(L)) == expected);
}

TEST_CASE("End of n_c1 is the five printed maps") {
  auto L = named_example("n_c1");
  std::set<ElementMap> expected = {
      map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"c", "0"}, {"1", "0"}}),
      map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "b"}, {"c", "c"}, {"1", "1"}}),
      map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"c", "0"}, {"1", "a"}}),
      map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "0"}, {"c", "0"}, {"1", "b"}}),
      map_of(*L, {{"0", "0"}, {"a", "b"}, {"b", "a"}, {"c", "c"}, {"1", "1"}}),
  };
  CHECK(value_set(enumerate_endomorphisms(L)) == expected);
}

TEST_CASE("the two-element chain has only zero and the identity") {
  CHECK(enumerate_endomorphisms(named_example("chain2")).size() == 2);
}

TEST_CASE("enumeration matches both brute-force filters up to five elements") {
  for (auto const& L : lattice_corpus(5, false, Exec::kSerial)) {
    CAPTURE(L->name());
    auto fast = value_set(enumerate_endomorphisms(L, Exec::kSerial));
    CHECK(fast == validate_filter(L));
    auto brute = oracle::brute_endomorphisms(*L);
    CHECK(fast == std::set<ElementMap>(brute.begin(), brute.end()));
  }
}

TEST_CASE("kernels and images of enumerated maps") {
  auto L = named_example("n_c1");
  for (auto const& f : enumerate_endomorphisms(L)) {
    CHECK(f(f.kernel()) == L->bottom());
    CHECK(f(L->top()) == f.image());
    for (Element x = 0; x < L->size(); ++x) CHECK(f(x) == f(L->join(x, f.kernel())));
  }
}

TEST_CASE("non-linear maps are rejected") {
  auto L = named_example("m2");
  // Constant a: 0 must map to 0.
  CHECK_THROWS_AS(endomorphism(L, map_of(*L, {{"0", "a"}, {"a", "a"}, {"b", "a"}, {"1", "a"}})),
                  Error);
  // Collapses a and b without a kernel that explains it.
  CHECK_THROWS_AS(endomorphism(L, map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "a"}, {"1", "a"}})),
                  Error);
}

TEST_CASE("projections") {
  auto L = named_example("qc6");
  Element a = el(*L, "a"), d = el(*L, "d");
  LinearMorphism p = projection(L, a, d);
  CHECK(is_idempotent(p));
  CHECK(p.image() == a);
  CHECK(p.kernel() == d);
  CHECK(p.values() == projection_values(*L, a, d));
  CHECK_THROWS_AS(projection(L, a, el(*L, "b")), Error);
}

TEST_CASE("composition") {
  auto L = named_example("m2");
  auto tau = endomorphism(L, map_of(*L, {{"0", "0"}, {"a", "b"}, {"b", "a"}, {"1", "1"}}));
  auto phi = endomorphism(L, map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "0"}, {"1", "a"}}));
  LinearMorphism tp = compose(tau, phi);
  LinearMorphism pt = compose(phi, tau);
  CHECK(tp.values() == map_of(*L, {{"0", "0"}, {"a", "b"}, {"b", "0"}, {"1", "b"}}));
  CHECK(pt.values() == map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "a"}, {"1", "a"}}));
  CHECK(is_isomorphism(tau));
  CHECK(is_injective(tau));
  CHECK(is_surjective(tau));
  CHECK_FALSE(is_injective(phi));
}

TEST_CASE("inclusion, quotient map and restriction") {
  auto L = named_example("qc6");
  Element c = el(*L, "c");
  LinearMorphism inc = inclusion(L, c);
  CHECK(inc.kernel() == inc.domain().lo());
  CHECK(is_injective(inc));
  LinearMorphism q = quotient_map(L, el(*L, "b"));
  CHECK(q.kernel() == el(*L, "b"));
  CHECK(is_surjective(q));
  CHECK_THROWS_AS(compose(inc, q), Error);

  auto p = projection(L, el(*L, "a"), el(*L, "d"));
  IntervalView below_c(L, L->bottom(), c);
  // p maps [0, c] into [0, a], which lies inside [0, c].
  LinearMorphism r = restrict(p, below_c);
  CHECK(r(c) == el(*L, "a"));
}

TEST_CASE("extending an interval isomorphism through a projection") {
  auto L = named_example("qc6");
  Element a = el(*L, "a"), b = el(*L, "b"), d = el(*L, "d");
  IntervalView from(L, L->bottom(), a), to(L, L->bottom(), b);
  auto isos = interval_isomorphisms(from, to);
  REQUIRE(isos.size() == 1);
  auto hat = hat_values(*L, isos[0], a, d);
  LinearMorphism f = endomorphism(L, hat);
  CHECK(f(a) == b);
  CHECK(f.kernel() == d);
  CHECK(f.image() == b);
  // f moves [0, a] onto [0, b], so [0, a] is not invariant.
  CHECK_THROWS_AS(restrict(f, from), Error);
  CHECK(restrict(f, from, to)(a) == b);
}

TEST_CASE("keys identify maps") {
  auto L = named_example("m2");
  std::set<MorphismKey> keys;
  for (auto const& f : enumerate_endomorphisms(L)) keys.insert(key_of(f));
  CHECK(keys.size() == 7);
}

TEST_CASE("format_values lists every element") {
  auto L = named_example("chain2");
  CHECK(format_values(*L, identity_morphism(L).values()) == "{0->0, 1->1}");
}
