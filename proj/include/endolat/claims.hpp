#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endolat/monoid.hpp"
#include "endolat/parallel.hpp"
#include "endolat/properties.hpp"

namespace endolat {

enum class Verdict { kPass, kFail, kHypothesesNotMet };
std::string to_string(Verdict v);

struct ClaimCheck {
  std::string id;
  // Hypotheses in evaluation order, up to and including the first unmet one.
  std::vector<std::pair<std::string, bool>> hypotheses;
  Verdict verdict = Verdict::kPass;
  Witness witness;
  std::string note;
  std::optional<std::string> unmet;
};

// Lazily evaluated facts about one (L, m) pair, shared by all claims.
class ClaimContext {
 public:
  explicit ClaimContext(EndoMonoid const& m) : _m(m) {}

  EndoMonoid const& monoid() const { return _m; }
  Lattice const& lattice() const { return *_m.lattice(); }
  LatticePtr const& lattice_ptr() const { return _m.lattice(); }

  PropertyValue const& property(std::string const& id);
  bool holds(std::string const& id) { return property(id).value; }

  Congruence const& delta();
  Congruence const& nabla();
  // End(L) itself, built once on demand.
  EndoMonoid const& full_end();

 private:
  EndoMonoid const& _m;
  std::map<std::string, PropertyValue> _props;
  std::optional<Congruence> _delta, _nabla;
  std::optional<EndoMonoid> _full;
};

struct ClaimOutcome {
  bool holds = true;
  Witness witness;
  std::string note;
};

struct Claim {
  std::string id;
  std::string statement;
  std::vector<std::string> hypotheses;  // property ids
  std::function<ClaimOutcome(ClaimContext&)> conclude;
};

std::vector<Claim> const& claims();
Claim const* find_claim(std::string const& id);

ClaimCheck run_claim(Claim const& claim, ClaimContext& ctx);
// All registered claims by default; unknown ids throw kPrecondition.
std::vector<ClaimCheck> run_all(EndoMonoid const& m,
                                std::vector<std::string> const& ids = {});

// What run_all reports for a non-modular lattice, where End(L) need not be
// a monoid: every selected claim gated on "modular".
std::vector<ClaimCheck> non_modular_checks(std::vector<std::string> const& ids = {});

// -- corpus-wide search --------------------------------------------------------

struct SweepSpec {
  int min_n = 1;
  int max_n = 6;
  bool modular_only = true;
  // 0: full End only.  k > 0: also every submonoid generated by at most k
  // non-invertible nonzero members of End.
  int generators = 0;
  std::vector<std::string> claims;  // empty = all
  Exec exec = Exec::kParallel;
};

struct SweepRecord {
  std::string lattice;
  int lattice_size = 0;
  std::string monoid;
  int monoid_order = 0;
  ClaimCheck check;
};

struct SweepReport {
  int lattices = 0;
  int monoids = 0;
  std::map<std::string, std::map<Verdict, int>> tally;  // claim -> counts
  std::vector<SweepRecord> records;  // only kept when requested
  std::vector<SweepRecord> failures;
};

// End(L) plus the distinct submonoids generated by up to k non-invertible
// nonzero members, in a deterministic order.
std::vector<EndoMonoid> sweep_monoids(LatticePtr const& L, int k,
                                      Exec exec = Exec::kSerial);

// Runs the claims over each lattice in `corpus` (already filtered by the
// caller or by spec.modular_only / size bounds).  Lattices are processed in
// parallel and merged in corpus order.
SweepReport counterexample_search(SweepSpec const& spec,
                                  std::vector<LatticePtr> const& corpus,
                                  bool keep_records = false);

// Throws kTheoremViolated naming the first failure, if any.
void raise_if_violated(SweepReport const& report);

}  // namespace endolat
