#include <algorithm>
#include <map>

#include "doctest.h"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace endolat;

namespace {

ErrorKind subgroup_error(std::string const& spec) {
  try {
    subgroup_lattice(spec);
  } catch (Error const& e) {
    return e.kind();
  }
  FAIL("expected " << spec << " to be rejected");
  return ErrorKind::kInternalInvariantViolation;
}

// The same poset with its element list reversed.
LatticePtr reversed(Lattice const& L) {
  std::vector<std::string> names;
  for (Element x = L.size() - 1; x >= 0; --x) names.push_back(L.element_name(x));
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [x, y] : L.covers()) covers.push_back({L.element_name(x), L.element_name(y)});
  std::reverse(covers.begin(), covers.end());
  return build_lattice(L.name() + "_rev", names, covers);
}

}  // namespace

TEST_CASE("lattice counts for small sizes") {
  int const expected[] = {1, 1, 1, 2, 5, 15, 53, 222};
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(enumerate_lattices(n).size()) == expected[n - 1]);
  }
  int const modular[] = {1, 1, 1, 2, 4, 8, 16, 34};
  auto corpus = lattice_corpus(8, true);
  for (int n = 1; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(std::count_if(corpus.begin(), corpus.end(),
                        [&](LatticePtr const& L) { return L->size() == n; }) ==
          modular[n - 1]);
  }
}

TEST_CASE("generator agrees with naive enumeration up to seven elements") {
  for (int n = 1; n <= 7; ++n) {
    CAPTURE(n);
    auto generated = enumerate_lattices(n, Exec::kSerial);
    auto naive = oracle::naive_lattices(n);
    REQUIRE(generated.size() == naive.size());
    std::map<CanonicalForm, LatticePtr> by_form;
    for (auto const& L : generated) {
      CHECK(L->size() == n);
      CHECK(by_form.emplace(canonical_form(*L), L).second);
    }
    for (auto const& s : naive) {
      auto L = oracle::to_lattice(s, "naive");
      auto it = by_form.find(canonical_form(*L));
      REQUIRE(it != by_form.end());
      // Independent of canonical forms: an explicit order isomorphism exists.
      CHECK(are_isomorphic_intervals(IntervalView::whole(L), IntervalView::whole(it->second)));
    }
  }
}

TEST_CASE("generated lattices are named in sequence and modularity matches the pentagon test") {
  auto all = lattice_corpus(7, false, Exec::kSerial);
  CHECK(all.front()->name() == "L1_01");
  auto five = enumerate_lattices(5);
  for (std::size_t i = 0; i < five.size(); ++i) {
    CHECK(five[i]->name() == "L5_0" + std::to_string(i + 1));
  }
  CHECK(enumerate_lattices(7).back()->name() == "L7_53");
  for (auto const& L : all) {
    CAPTURE(L->name());
    CHECK(is_modular(*L) == !oracle::has_pentagon(*L));
  }
}

TEST_CASE("canonical forms ignore labels") {
  for (auto const& L : named_examples()) {
    CAPTURE(L->name());
    auto R = reversed(*L);
    CHECK(canonical_form(*L) == canonical_form(*R));
    CHECK(are_isomorphic(*L, *R));
  }
  auto m2 = named_example("m2");
  auto chain4 = enumerate_lattices(4)[1];
  CHECK_FALSE(are_isomorphic(*m2, *chain4));
  auto qc6 = named_example("qc6");
  CHECK(are_isomorphic(*qc6, *dual(*qc6)));
  CHECK_FALSE(are_isomorphic(*named_example("n_c1"), *dual(*named_example("n_c1"))));
}

TEST_CASE("named examples") {
  auto names = named_example_names();
  CHECK(names.size() == named_examples().size());
  CHECK(named_example("m2")->size() == 4);
  CHECK(named_example("n_c1")->size() == 5);
  CHECK(named_example("qc6")->size() == 6);
  CHECK(named_example("chain2")->size() == 2);
  CHECK(named_example("trivial")->size() == 1);
  // chain_k: k + 1 elements a_k < ... < a_0 below the diamond on b, c.
  for (int k = 0; k <= 3; ++k) CHECK(named_example("chain_" + std::to_string(k))->size() == k + 5);
  CHECK(is_modular(*named_example("chain_3")));
  CHECK_FALSE(is_modular(*named_example("n5")));
  CHECK_THROWS_AS(named_example("m7"), Error);
}

TEST_CASE("subgroup lattices") {
  auto klein = subgroup_lattice("Z2xZ2");
  CHECK(klein->name() == "Sub(Z2xZ2)");
  CHECK(are_isomorphic(*klein, *named_example("m3")));
  auto z4 = subgroup_lattice("Z4");
  CHECK(z4->size() == 3);
  CHECK(is_distributive(*z4));
  CHECK(subgroup_lattice("Z6")->size() == 4);
  CHECK(is_boolean(*subgroup_lattice("Z6")));
  CHECK(subgroup_lattice("Z3xZ3")->size() == 6);
  CHECK(subgroup_lattice("Z2xZ4")->size() == 8);
  CHECK(subgroup_lattice("Z2xZ2xZ2")->size() == 16);
  CHECK(is_self_dual(subgroup_lattice("Z2xZ4")));
  CHECK(subgroup_lattice("Z1")->size() == 1);

  CHECK(subgroup_error("") == ErrorKind::kParse);
  CHECK(subgroup_error("Z") == ErrorKind::kParse);
  CHECK(subgroup_error("Z2x") == ErrorKind::kParse);
  CHECK(subgroup_error("Y2") == ErrorKind::kParse);
  CHECK(subgroup_error("Z0") == ErrorKind::kParse);
  CHECK(subgroup_error("Z128") == ErrorKind::kOrderBound);
  // Order 32 but far more than 64 subgroups.
  CHECK(subgroup_error("Z2xZ2xZ2xZ2xZ2") == ErrorKind::kOrderBound);
}
