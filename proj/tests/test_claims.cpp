#include <set>

#include "doctest.h"
#include "endolat/claims.hpp"
#include "endolat/corpus.hpp"
#include "endolat/error.hpp"
#include "helpers.hpp"

using namespace endolat;
using testing::el;
using testing::map_of;

namespace {

ClaimCheck const& check_for(std::vector<ClaimCheck> const& checks, std::string const& id) {
  for (auto const& c : checks) {
    if (c.id == id) return c;
  }
  FAIL("claim missing from results: " << id);
  return checks.front();
}

EndoMonoid diamond_idempotents() {
  auto L = named_example("m2");
  auto phi = map_of(*L, {{"0", "0"}, {"a", "a"}, {"b", "0"}, {"1", "a"}});
  auto psi = map_of(*L, {{"0", "0"}, {"a", "0"}, {"b", "b"}, {"1", "b"}});
  return generate_submonoid(L, {endomorphism(L, phi), endomorphism(L, psi)}, "m");
}

// Two projections of M3 onto b, one along a and one along c.  The monoid
// {0, id, e, f} is regular, and e is not central (e f = f, f e = e), yet
// projecting phi e onto ker(e) along e(1) kills every phi in it.
EndoMonoid m3_two_projections() {
  auto L = named_example("m3");
  Element a = el(*L, "a"), b = el(*L, "b"), c = el(*L, "c");
  return generate_submonoid(L, {projection(L, b, a), projection(L, b, c)}, "{e,f}");
}

void expect_no_failures(std::vector<ClaimCheck> const& checks) {
  for (auto const& c : checks) {
    CAPTURE(c.id);
    CAPTURE(c.note);
    CHECK(c.verdict != Verdict::kFail);
  }
}

}  // namespace

TEST_CASE("claim registry is well formed") {
  std::set<std::string> ids;
  for (auto const& c : claims()) {
    CAPTURE(c.id);
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.statement.empty());
    CHECK(static_cast<bool>(c.conclude));
    for (auto const& h : c.hypotheses) {
      CAPTURE(h);
      CHECK(is_property_id(h));
    }
  }
  CHECK(ids.size() == 35);
  CHECK(find_claim("lemma_pife") != nullptr);
  CHECK(find_claim("nope") == nullptr);
}

TEST_CASE("every claim holds on the worked examples") {
  for (auto const& name : named_example_names()) {
    CAPTURE(name);
    auto L = named_example(name);
    if (!is_modular(*L)) continue;
    expect_no_failures(run_all(full_endo_monoid(L)));
  }
}

TEST_CASE("the diamond under its idempotent submonoid") {
  EndoMonoid m = diamond_idempotents();
  REQUIRE(m.order() == 4);
  auto checks = run_all(m);
  expect_no_failures(checks);
  CHECK(check_for(checks, "prop_xyig").verdict == Verdict::kPass);
  // The unrestricted form quantifies over all of End and is gated.
  ClaimCheck const& u = check_for(checks, "prop_xyig_unrestricted");
  CHECK(u.verdict == Verdict::kHypothesesNotMet);
  CHECK(u.unmet == "m_is_full");
}

TEST_CASE("central idempotent test needs every projection in the monoid") {
  EndoMonoid m = m3_two_projections();
  REQUIRE(m.order() == 4);
  CHECK(is_regular(m.table()).regular);
  CHECK_FALSE(contains_all_projections(m).holds);

  Claim const* c = find_claim("lemma_pife");
  REQUIRE(c != nullptr);
  ClaimContext ctx(m);
  ClaimCheck gated = run_claim(*c, ctx);
  CHECK(gated.verdict == Verdict::kHypothesesNotMet);
  CHECK(gated.unmet == "contains_all_projections");

  // Without the gate the equivalence really breaks here.
  ClaimContext raw(m);
  CHECK_FALSE(c->conclude(raw).holds);

  // With all of End(M3) it holds again.
  auto full = run_all(full_endo_monoid(named_example("m3")), {"lemma_pife"});
  REQUIRE(full.size() == 1);
  CHECK(full[0].verdict == Verdict::kPass);
}

TEST_CASE("hypothesis lists stop at the first unmet one") {
  EndoMonoid m = full_endo_monoid(named_example("n_c1"));
  for (auto const& c : run_all(m)) {
    CAPTURE(c.id);
    if (c.verdict == Verdict::kHypothesesNotMet) {
      REQUIRE(c.unmet.has_value());
      REQUIRE_FALSE(c.hypotheses.empty());
      CHECK(c.hypotheses.back() == std::make_pair(*c.unmet, false));
      for (std::size_t i = 0; i + 1 < c.hypotheses.size(); ++i) CHECK(c.hypotheses[i].second);
    } else {
      for (auto const& [h, ok] : c.hypotheses) CHECK(ok);
    }
  }
  // n_c1 is not regular, and both sides of the equivalence are false.
  auto all = run_all(m);
  CHECK(check_for(all, "cor_endoreg_rickart").verdict == Verdict::kPass);
  ClaimCheck const& indec = check_for(all, "cor_indec_endoreg");
  CHECK(indec.verdict == Verdict::kPass);
}

TEST_CASE("non-modular lattices are gated rather than evaluated") {
  auto checks = non_modular_checks({"prop_reg", "thm_delta"});
  REQUIRE(checks.size() == 2);
  for (auto const& c : checks) {
    CHECK(c.verdict == Verdict::kHypothesesNotMet);
    CHECK(c.unmet == "modular");
  }
  CHECK(non_modular_checks().size() == claims().size());
  CHECK_THROWS_AS(non_modular_checks({"bogus"}), Error);
  CHECK_THROWS_AS(run_all(diamond_idempotents(), {"bogus"}), Error);
}

TEST_CASE("sweep over small lattices, modular or not") {
  SweepSpec spec;
  spec.max_n = 6;
  spec.modular_only = false;
  spec.generators = 1;
  spec.exec = Exec::kSerial;
  auto corpus = lattice_corpus(6, false, Exec::kSerial);
  SweepReport r = counterexample_search(spec, corpus, true);
  CHECK(r.lattices == static_cast<int>(corpus.size()));
  CHECK(r.failures.empty());
  CHECK_NOTHROW(raise_if_violated(r));
  bool saw_gated_n5 = false;
  for (auto const& rec : r.records) {
    if (rec.monoid == "-") {
      saw_gated_n5 = true;
      CHECK(rec.check.unmet == "modular");
    }
  }
  CHECK(saw_gated_n5);
}

TEST_CASE("raise_if_violated names the failing claim") {
  SweepReport r;
  SweepRecord rec;
  rec.lattice = "L";
  rec.monoid = "End";
  rec.check.id = "prop_reg";
  rec.check.verdict = Verdict::kFail;
  r.failures.push_back(rec);
  try {
    raise_if_violated(r);
    FAIL("expected a throw");
  } catch (Error const& e) {
    CHECK(e.kind() == ErrorKind::kTheoremViolated);
    CHECK(std::string(e.what()).find("prop_reg") != std::string::npos);
  }
}

TEST_CASE("serial and parallel sweeps agree") {
  SweepSpec spec;
  spec.max_n = 6;
  spec.generators = 1;
  auto corpus = lattice_corpus(6, true, Exec::kSerial);
  spec.exec = Exec::kSerial;
  SweepReport a = counterexample_search(spec, corpus, true);
  spec.exec = Exec::kParallel;
  SweepReport b = counterexample_search(spec, corpus, true);
  CHECK(a.monoids == b.monoids);
  CHECK(a.tally == b.tally);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].lattice == b.records[i].lattice);
    CHECK(a.records[i].monoid == b.records[i].monoid);
    CHECK(a.records[i].check.id == b.records[i].check.id);
    CHECK(a.records[i].check.verdict == b.records[i].check.verdict);
  }
}
