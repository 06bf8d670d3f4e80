#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "endolat/element_set.hpp"

namespace endolat {

class Lattice;
using LatticePtr = std::shared_ptr<Lattice const>;

// A finite bounded lattice.  Element ids are dense and follow input order;
// the order relation is stored as up/down bitsets and the meet/join tables
// are filled once at construction.  Instances are immutable.
class Lattice {
 public:
  // Validates and builds.  `covers` may contain redundant (transitive)
  // pairs; the stored Hasse diagram is the transitive reduction.
  static LatticePtr build(std::string name, std::vector<std::string> elements,
                          std::vector<std::pair<Element, Element>> covers);

  std::string const& name() const { return _name; }
  int size() const { return static_cast<int>(_names.size()); }
  std::string const& element_name(Element x) const { return _names[x]; }
  std::vector<std::string> const& element_names() const { return _names; }
  std::optional<Element> find(std::string const& element_name) const;

  Element bottom() const { return _bottom; }
  Element top() const { return _top; }
  // One-element lattices are accepted but flagged.
  bool is_trivial() const { return _bottom == _top; }

  bool leq(Element x, Element y) const { return _up[x].contains(y); }
  bool less(Element x, Element y) const { return x != y && leq(x, y); }
  ElementSet up_set(Element x) const { return _up[x]; }
  ElementSet down_set(Element x) const { return _down[x]; }
  ElementSet upper_covers(Element x) const { return _upper_covers[x]; }
  ElementSet lower_covers(Element x) const { return _lower_covers[x]; }
  std::vector<std::pair<Element, Element>> const& covers() const {
    return _covers;
  }
  ElementSet all() const { return ElementSet::full(size()); }

  Element meet(Element x, Element y) const { return _meet[x * size() + y]; }
  Element join(Element x, Element y) const { return _join[x * size() + y]; }
  Element big_meet(ElementSet s) const;
  Element big_join(ElementSet s) const;

 private:
  Lattice() = default;

  std::string _name;
  std::vector<std::string> _names;
  std::vector<std::pair<Element, Element>> _covers;
  std::vector<ElementSet> _up, _down, _upper_covers, _lower_covers;
  std::vector<Element> _meet, _join;
  Element _bottom = kNone;
  Element _top = kNone;
};

// Builds from element identifiers and named cover pairs (x covered by y).
LatticePtr build_lattice(std::string name,
                         std::vector<std::string> const& elements,
                         std::vector<std::pair<std::string, std::string>> const&
                             covers);

// -- [a, b] ---------------------------------------------------------------

class IntervalView {
 public:
  IntervalView(LatticePtr parent, Element lo, Element hi);

  static IntervalView whole(LatticePtr parent);

  LatticePtr const& parent() const { return _parent; }
  Lattice const& lattice() const { return *_parent; }
  Element lo() const { return _lo; }
  Element hi() const { return _hi; }
  ElementSet elements() const { return _elements; }
  int size() const { return _elements.size(); }
  bool contains(Element x) const { return _elements.contains(x); }
  bool is_whole() const {
    return _lo == _parent->bottom() && _hi == _parent->top();
  }

  Element meet(Element x, Element y) const { return _parent->meet(x, y); }
  Element join(Element x, Element y) const { return _parent->join(x, y); }
  bool leq(Element x, Element y) const { return _parent->leq(x, y); }
  // Covers of x inside the interval (intervals are convex, so these are
  // exactly the parent's covers restricted).
  ElementSet upper_covers(Element x) const {
    return _parent->upper_covers(x) & _elements;
  }
  ElementSet lower_covers(Element x) const {
    return _parent->lower_covers(x) & _elements;
  }

  bool operator==(IntervalView const& o) const {
    return _parent == o._parent && _lo == o._lo && _hi == o._hi;
  }

  // True if this interval is contained in `o` (same parent lattice).
  bool is_within(IntervalView const& o) const {
    return _parent == o._parent && _elements.is_subset_of(o._elements);
  }

 private:
  LatticePtr _parent;
  Element _lo, _hi;
  ElementSet _elements;
};

// Throws Error(kNotComparable) unless lo <= hi.
IntervalView interval(LatticePtr const& L, Element lo, Element hi);

// Copies an interval into a standalone lattice (element names preserved).
// The second member maps new ids back to parent ids.
std::pair<LatticePtr, std::vector<Element>> interval_lattice(
    IntervalView const& I);

// -- order-theoretic checks --------------------------------------------------

struct ModularityResult {
  bool modular = true;
  // First violating (a, b, x) with a <= b and a v (x ^ b) != (a v x) ^ b.
  std::optional<std::array<Element, 3>> witness;
};
ModularityResult check_modular(Lattice const& L);
bool is_modular(Lattice const& L);
bool is_distributive(Lattice const& L);
bool is_boolean(Lattice const& L);

ElementSet complements_of(Lattice const& L, Element x);
ElementSet complemented_elements(Lattice const& L);

bool is_essential(Element x, IntervalView const& I);
bool is_superfluous(Element x, IntervalView const& I);
bool is_essential(Lattice const& L, Element x);
bool is_superfluous(Lattice const& L, Element x);
ElementSet essential_elements(Lattice const& L);
ElementSet superfluous_elements(Lattice const& L);
// Meet of all essential elements / join of all superfluous elements; both
// re-verified before returning.
Element min_essential(Lattice const& L);
Element max_superfluous(Lattice const& L);

ElementSet atoms(Lattice const& L);
ElementSet coatoms(Lattice const& L);
Element radical(Lattice const& L);
Element socle(Lattice const& L);

// Independent family: each member meets the join of the others at bottom.
// Throws kPrecondition if the family contains the bottom element.
bool is_independent(Lattice const& L, std::vector<Element> const& family);

LatticePtr dual(Lattice const& L);
bool is_self_dual(LatticePtr const& L);

// All elements whose every join-cover has a finite subcover.
ElementSet compact_elements(Lattice const& L);

// -- interval isomorphisms ---------------------------------------------------

// An isomorphism between intervals, stored as a map indexed by ids of the
// source parent lattice (kNone outside the source interval).
using ElementMap = std::vector<Element>;

// Visits order-isomorphisms I1 -> I2 in deterministic order until the
// visitor returns false.
void for_each_interval_isomorphism(
    IntervalView const& I1, IntervalView const& I2,
    std::function<bool(ElementMap const&)> const& visit);

std::vector<ElementMap> interval_isomorphisms(IntervalView const& I1,
                                              IntervalView const& I2);
std::optional<ElementMap> first_interval_isomorphism(IntervalView const& I1,
                                                     IntervalView const& I2);
bool are_isomorphic_intervals(IntervalView const& I1, IntervalView const& I2);

}  // namespace endolat
