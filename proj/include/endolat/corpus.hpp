#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "endolat/lattice.hpp"
#include "endolat/parallel.hpp"

namespace endolat {

// -- named examples ------------------------------------------------------------

// m2, n_c1, qc6, chain2, chain_0 .. chain_3, n5, m3, trivial.
std::vector<LatticePtr> named_examples();
// Throws kPrecondition for an unknown name.
LatticePtr named_example(std::string const& name);
std::vector<std::string> named_example_names();

// -- canonical forms -----------------------------------------------------------

// A labeling-independent encoding: the element count followed by the cover
// pairs under a canonical numbering.  Equal forms iff isomorphic posets.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;
  auto operator<=>(CanonicalForm const&) const = default;
};

// Poset given by strict-or-equal down-sets (down[x] contains x).
CanonicalForm canonical_form(std::vector<ElementSet> const& down);
// The canonical numbering itself: order[k] is the element placed k-th.
std::vector<Element> canonical_order(std::vector<ElementSet> const& down);
CanonicalForm canonical_form(Lattice const& L);
bool are_isomorphic(Lattice const& a, Lattice const& b);

// -- generation ----------------------------------------------------------------

// All lattices with exactly n elements up to isomorphism, ordered by the
// canonical form of the meet-semilattice left after removing the top, so
// the order does not depend on the thread count.  Elements are named 0, 1
// and x1, x2, ...; lattices are named "L<n>_<index>".
std::vector<LatticePtr> enumerate_lattices(int n, Exec exec = Exec::kParallel);

// Lattices of sizes 1..max_n (optionally modular only), in size order.
std::vector<LatticePtr> lattice_corpus(int max_n, bool modular_only,
                                       Exec exec = Exec::kParallel);

// -- subgroup lattices ---------------------------------------------------------

// Subgroup lattice of a finite abelian group written as cyclic factors, e.g.
// "Z4", "Z2xZ4", "Z3xZ3".  Throws kParse for bad specs and kOrderBound when
// the group or its lattice exceeds the element cap.
LatticePtr subgroup_lattice(std::string const& spec);

}  // namespace endolat
