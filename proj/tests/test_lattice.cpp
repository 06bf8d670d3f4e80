#include "doctest.h"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "endolat/lattice.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace endolat;
using testing::el;
using testing::set_of;

namespace {

ErrorKind build_error(std::vector<std::string> const& elements,
                      std::vector<std::pair<std::string, std::string>> const& covers) {
  try {
    build_lattice("bad", elements, covers);
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected the build to throw");
  return ErrorKind::kInternalInvariantViolation;
}

}  // namespace

TEST_CASE("construction rejects malformed orders") {
  CHECK(build_error({"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"1", "0"}}) ==
        ErrorKind::kCycleDetected);
  CHECK(build_error({"a", "b", "1"}, {{"a", "1"}, {"b", "1"}}) ==
        ErrorKind::kNoUniqueBound);
  // Bowtie: a and b have two minimal upper bounds.
  CHECK(build_error({"0", "a", "b", "c", "d", "1"},
                    {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"},
                     {"b", "d"}, {"c", "1"}, {"d", "1"}}) == ErrorKind::kNotALattice);
  CHECK(build_error({"0", "1"}, {{"0", "x"}}) == ErrorKind::kUnknownElement);

  std::vector<std::string> many;
  for (int i = 0; i < kMaxElements + 1; ++i) many.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> chain;
  for (int i = 0; i + 1 < kMaxElements + 1; ++i) chain.push_back({many[i], many[i + 1]});
  CHECK(build_error(many, chain) == ErrorKind::kTooLarge);
}

TEST_CASE("redundant cover pairs are reduced to the Hasse diagram") {
  auto L = build_lattice("c3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}, {"0", "1"}});
  CHECK(L->covers().size() == 2);
  CHECK(L->leq(el(*L, "0"), el(*L, "1")));
}

TEST_CASE("meets and joins in the diamond") {
  auto L = named_example("m2");
  Element a = el(*L, "a"), b = el(*L, "b");
  CHECK(L->meet(a, b) == L->bottom());
  CHECK(L->join(a, b) == L->top());
  CHECK(L->big_join(set_of(*L, {"a", "b"})) == L->top());
  CHECK(L->big_meet(ElementSet{}) == L->top());
  CHECK(L->big_join(ElementSet{}) == L->bottom());
}

TEST_CASE("modularity and distributivity on the standard examples") {
  CHECK(is_modular(*named_example("m3")));
  CHECK_FALSE(is_distributive(*named_example("m3")));
  CHECK(is_boolean(*named_example("m2")));
  auto n5 = named_example("n5");
  ModularityResult r = check_modular(*n5);
  REQUIRE_FALSE(r.modular);
  auto [a, b, x] = *r.witness;
  CHECK(n5->leq(a, b));
  CHECK(n5->join(a, n5->meet(x, b)) != n5->meet(n5->join(a, x), b));
}

TEST_CASE("complements") {
  auto qc6 = named_example("qc6");
  CHECK(complemented_elements(*qc6) == set_of(*qc6, {"0", "1", "a", "d"}));
  CHECK(complements_of(*qc6, el(*qc6, "a")) == set_of(*qc6, {"d"}));
  auto m3 = named_example("m3");
  CHECK(complements_of(*m3, el(*m3, "a")) == set_of(*m3, {"b", "c"}));
}

TEST_CASE("essential and superfluous elements") {
  auto nc1 = named_example("n_c1");
  CHECK(essential_elements(*nc1) == set_of(*nc1, {"c", "1"}));
  CHECK(superfluous_elements(*nc1) == set_of(*nc1, {"0", "a", "b", "c"}));
  CHECK(min_essential(*nc1) == el(*nc1, "c"));
  CHECK(max_superfluous(*nc1) == el(*nc1, "c"));

  auto m2 = named_example("m2");
  CHECK(min_essential(*m2) == m2->top());
  CHECK(max_superfluous(*m2) == m2->bottom());

  auto chain = named_example("chain2");
  CHECK(min_essential(*chain) == chain->top());
  CHECK(max_superfluous(*chain) == chain->bottom());
}

TEST_CASE("qc6 essential closures and superfluous parts") {
  auto L = named_example("qc6");
  auto in = [&](char const* lo, char const* hi) {
    return IntervalView(L, el(*L, lo), el(*L, hi));
  };
  CHECK(is_essential(el(*L, "a"), in("0", "a")));
  CHECK(is_essential(el(*L, "b"), in("0", "d")));
  CHECK(is_essential(el(*L, "c"), in("0", "1")));
  CHECK(is_essential(el(*L, "d"), in("0", "d")));
  CHECK(is_superfluous(el(*L, "0"), in("0", "a")));
  CHECK(is_superfluous(el(*L, "b"), in("0", "d")));
  CHECK(are_isomorphic_intervals(in("0", "a"), in("b", "d")));
  CHECK(are_isomorphic_intervals(in("0", "a"), in("0", "b")));
  CHECK_FALSE(are_isomorphic_intervals(in("0", "a"), in("0", "d")));
}

TEST_CASE("essential and superfluous agree with the oracle everywhere") {
  for (auto const& L : lattice_corpus(6, false, Exec::kSerial)) {
    oracle::Order o = oracle::order_of(*L);
    for (Element lo = 0; lo < L->size(); ++lo) {
      for (Element hi = 0; hi < L->size(); ++hi) {
        if (!L->leq(lo, hi)) continue;
        IntervalView I(L, lo, hi);
        for (Element x : I.elements()) {
          CHECK(is_essential(x, I) == oracle::essential_in(o, x, lo, hi));
          CHECK(is_superfluous(x, I) == oracle::superfluous_in(o, x, lo, hi));
        }
      }
    }
  }
}

TEST_CASE("meet and join tables agree with the oracle") {
  for (auto const& L : lattice_corpus(6, false, Exec::kSerial)) {
    oracle::Order o = oracle::order_of(*L);
    for (Element x = 0; x < L->size(); ++x) {
      for (Element y = 0; y < L->size(); ++y) {
        CHECK(L->meet(x, y) == o.meet(x, y));
        CHECK(L->join(x, y) == o.join(x, y));
      }
    }
  }
}

TEST_CASE("intervals") {
  auto L = named_example("qc6");
  CHECK_THROWS_AS(interval(L, el(*L, "a"), el(*L, "d")), Error);
  IntervalView I = interval(L, el(*L, "b"), el(*L, "1"));
  CHECK(I.elements() == set_of(*L, {"b", "c", "d", "1"}));
  auto [sub, back] = interval_lattice(I);
  CHECK(sub->size() == 4);
  CHECK(is_boolean(*sub));
  CHECK(back[sub->bottom()] == el(*L, "b"));
}

TEST_CASE("interval isomorphisms of the diamond") {
  auto L = named_example("m2");
  auto whole = IntervalView::whole(L);
  CHECK(interval_isomorphisms(whole, whole).size() == 2);
  auto m3 = named_example("m3");
  auto w3 = IntervalView::whole(m3);
  CHECK(interval_isomorphisms(w3, w3).size() == 6);
}

TEST_CASE("duality") {
  CHECK(is_self_dual(named_example("qc6")));
  CHECK(is_self_dual(named_example("m2")));
  CHECK_FALSE(is_self_dual(named_example("n_c1")));
  auto d = dual(*named_example("n_c1"));
  CHECK(d->size() == 5);
  CHECK(d->upper_covers(d->bottom()).size() == 1);
}

TEST_CASE("atoms, radical and socle") {
  auto L = named_example("n_c1");
  CHECK(atoms(*L) == set_of(*L, {"a", "b"}));
  CHECK(coatoms(*L) == set_of(*L, {"c"}));
  CHECK(radical(*L) == el(*L, "c"));
  CHECK(socle(*L) == el(*L, "c"));
}

TEST_CASE("independence") {
  auto L = named_example("m3");
  CHECK(is_independent(*L, {el(*L, "a"), el(*L, "b")}));
  CHECK_FALSE(is_independent(*L, {el(*L, "a"), el(*L, "b"), el(*L, "c")}));
  CHECK_THROWS_AS(is_independent(*L, {L->bottom()}), Error);
}

TEST_CASE("every element of a finite lattice is compact") {
  for (auto const& L : named_examples()) CHECK(compact_elements(*L) == L->all());
}

TEST_CASE("the one-element lattice is accepted and flagged") {
  auto L = named_example("trivial");
  CHECK(L->is_trivial());
  CHECK(is_modular(*L));
}
