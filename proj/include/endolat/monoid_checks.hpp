#pragma once

#include <optional>
#include <string>
#include <vector>

#include "endolat/monoid.hpp"

namespace endolat {

struct CheckReport {
  bool passed = true;
  bool skipped = false;
  std::string reason;
  Witness witness;
};

// [0] under each congruence equals the members with essential kernel
// (resp. superfluous image).  Needs a modular lattice.
CheckReport class_of_zero_check(EndoMonoid const& m);

// Injective members with essential image, and all of [id] under delta, are
// isomorphisms.  The nabla half uses surjective members with superfluous
// kernel and [id] under nabla.  No gating here.
CheckReport identity_class_delta(EndoMonoid const& m);
CheckReport identity_class_nabla(EndoMonoid const& m);
// Runs each half only when its C2 / D2 hypothesis holds.
CheckReport class_of_identity_check(EndoMonoid const& m);

// For regular m: no principal left ideal m.phi with phi != 0 squares to
// zero.  A union of left ideals squares to zero only if each part does, so
// principals suffice.  Skipped when m is not regular.
CheckReport nilpotent_left_ideal_check(CayleyTable const& t);

struct AdditionTable {
  int order = 0;
  std::vector<int> cells;
  int at(int i, int j) const { return cells[i * order + j]; }
};

// (m, +) a commutative monoid and composition distributing over + on both
// sides.
CheckReport validate_semiring(CayleyTable const& mult, AdditionTable const& add);

struct PointwiseJoin {
  bool linear = true;  // every pointwise join is a linear endomorphism
  bool closed = true;  // ... and lies in m
  std::optional<AdditionTable> table;
  Witness witness;
};
// (phi + psi)(a) = phi(a) v psi(a).
PointwiseJoin pointwise_join_addition(EndoMonoid const& m);

}  // namespace endolat
