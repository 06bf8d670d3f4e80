#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endolat/lattice.hpp"
#include "endolat/monoid.hpp"

namespace endolat {

// -- lattice-only ------------------------------------------------------------

// Every compact element complemented (all elements are compact here).
Check is_vnr_lattice(Lattice const& L);
// Every x is essential in [0,c] for some complemented c >= x.
Check satisfies_C1(Lattice const& L);
// Complemented x, y with x ^ y = 0 have complemented join.
Check satisfies_C3(Lattice const& L);
// C(L) is a sublattice that is distributive (hence Boolean).
Check complements_boolean(Lattice const& L);
bool is_indecomposable(Lattice const& L);

// -- relative to a monoid ------------------------------------------------------

Check is_m_rickart(EndoMonoid const& m);
Check is_dual_m_rickart(EndoMonoid const& m);
// Every kernel and every image complemented.
Check kernels_and_images_complemented(EndoMonoid const& m);
// Every kernel and image form a complement pair.
Check kernel_image_pairs(EndoMonoid const& m);

// Regularity of m.  When the lattice is modular and m is closed under
// complements the result is cross-checked against the kernel/image
// criterion and a disagreement throws kEquivalenceViolation; otherwise a
// disagreement is only noted.
Check is_m_endoregular(EndoMonoid const& m, std::string* note = nullptr);
Check is_m_abelian_endoregular(EndoMonoid const& m,
                               std::string* note = nullptr);

Check satisfies_C2(EndoMonoid const& m);
Check satisfies_D2(EndoMonoid const& m);
Check is_K_extending(EndoMonoid const& m);
Check is_T_lifting(EndoMonoid const& m);
// Read as: no nonzero member has an essential kernel / superfluous image.
Check is_K_nonsingular(EndoMonoid const& m);
Check is_T_nonsingular(EndoMonoid const& m);
Check is_hopfian(EndoMonoid const& m);
Check is_cohopfian(EndoMonoid const& m);

// Join of the images below a equals a.
bool is_L_generated(EndoMonoid const& m, Element a);
ElementSet L_generated_elements(EndoMonoid const& m);
ElementSet fully_invariant_elements(EndoMonoid const& m);
Check all_compacts_generated(EndoMonoid const& m);
bool is_full_monoid(EndoMonoid const& m);

// -- reports -------------------------------------------------------------------

struct PropertyValue {
  bool value = true;
  Witness witness;
  std::optional<std::string> skipped_reason;
  std::string note;
};

struct PropertyReport {
  std::string lattice;
  std::string monoid;
  bool degenerate = false;
  std::map<std::string, PropertyValue> values;
  std::map<std::string, double> millis;
};

std::vector<std::string> const& property_ids();
bool is_property_id(std::string const& id);

// Throws kPrecondition for an unknown id.
PropertyValue evaluate_property(std::string const& id, EndoMonoid const& m);

// Runs the listed properties (all by default).  Throws kNotModular for a
// non-modular lattice.
PropertyReport analyze(EndoMonoid const& m,
                       std::vector<std::string> const& ids = {});

// Re-checks a stored verdict: a counterexample witness must still violate
// the property, an existential witness must still satisfy it, and a bare
// verdict is recomputed.  Returns the replayed boolean.
bool replay(std::string const& id, EndoMonoid const& m, PropertyValue const& v);

}  // namespace endolat
