#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "endolat/lattice.hpp"
#include "endolat/morphism.hpp"
#include "endolat/parallel.hpp"

namespace endolat {

// Structured witness: named lists of element ids or monoid indices.
using Witness = std::map<std::string, std::vector<int>>;

struct Check {
  bool holds = true;
  Witness witness;
};

// Composition table of a finite monoid: at(i, j) is element i after j.
struct CayleyTable {
  int order = 0;
  std::vector<int> cells;
  int identity = -1;
  int zero = -1;

  int at(int i, int j) const { return cells[i * order + j]; }
};

struct RegularityResult {
  bool regular = true;
  // witness[i] is the first j with i j i = i, or -1.
  std::vector<int> witness;
  int failing = -1;
};
RegularityResult is_regular(CayleyTable const& t);
std::vector<int> idempotents(CayleyTable const& t);
bool is_central(CayleyTable const& t, int e);
// Fails with {idempotent, other} for the first non-commuting pair.
Check check_abelian(CayleyTable const& t);
bool is_abelian(CayleyTable const& t);
// Two-sided inverse inside the table, if any.
std::optional<int> inverse_of(CayleyTable const& t, int i);
// Associativity over all triples up to order 64, seeded samples above.
std::optional<std::array<int, 3>> associativity_violation(CayleyTable const& t);

class EndoMonoid {
 public:
  // Sorts `elements` canonically and builds the table.  Throws kNotClosed
  // if the set is not closed under composition or lacks identity or zero.
  static EndoMonoid from_elements(LatticePtr L, std::string name,
                                  std::vector<LinearMorphism> elements,
                                  Exec exec = Exec::kParallel);

  LatticePtr const& lattice() const { return _lattice; }
  std::string const& name() const { return _name; }
  int order() const { return static_cast<int>(_elements.size()); }
  std::vector<LinearMorphism> const& elements() const { return _elements; }
  LinearMorphism const& operator[](int i) const { return _elements[i]; }
  CayleyTable const& table() const { return _table; }
  int compose(int i, int j) const { return _table.at(i, j); }
  int identity_index() const { return _table.identity; }
  int zero_index() const { return _table.zero; }

  std::optional<int> index_of(ElementMap const& values) const;
  bool contains(ElementMap const& values) const {
    return index_of(values).has_value();
  }

 private:
  EndoMonoid() = default;

  LatticePtr _lattice;
  std::string _name;
  std::vector<LinearMorphism> _elements;
  CayleyTable _table;
};

// Composition table for canonically sorted endomorphisms; rows in parallel
// or serially.
CayleyTable cayley_table(std::vector<LinearMorphism> const& sorted,
                         Exec exec = Exec::kParallel);

EndoMonoid full_endo_monoid(LatticePtr const& L, Exec exec = Exec::kParallel);
EndoMonoid generate_submonoid(LatticePtr const& L,
                              std::vector<LinearMorphism> const& generators,
                              std::string name = "",
                              Exec exec = Exec::kParallel);

// For every phi, complemented x with phi|[0,x] an isomorphism onto
// [0, phi(x)] = [0,y] with y complemented, and every complement y' of y,
// the map iota_x (phi|x)^-1 pi_y must lie in m.
Check closed_under_complements(EndoMonoid const& m);
Check contains_all_projections(EndoMonoid const& m);

struct MonoidIdeal {
  std::vector<int> members;
  bool left = false;   // m A inside A
  bool right = false;  // A m inside A
  bool contains_zero = false;
  bool two_sided() const { return left && right && contains_zero; }
};
MonoidIdeal make_ideal(CayleyTable const& t, std::vector<int> members);
// Members with essential kernel / superfluous image.
MonoidIdeal delta_ideal(EndoMonoid const& m);
MonoidIdeal nabla_ideal(EndoMonoid const& m);

// Dense boolean relation on monoid indices.
struct Relation {
  int n = 0;
  std::vector<std::uint8_t> cells;
  bool at(int i, int j) const { return cells[i * n + j] != 0; }
  bool operator==(Relation const&) const = default;
};

enum class CongruenceMethod { kDefinition, kShortcut, kBoth };

// Definition: some essential x with phi = psi on [0,x].  Shortcut: x is
// the least essential element.  kBoth computes both and throws
// kShortcutMismatch if they differ.  Require a modular lattice.
Relation delta_relation(EndoMonoid const& m,
                        CongruenceMethod method = CongruenceMethod::kBoth,
                        Exec exec = Exec::kParallel);
// Definition: some superfluous x with phi(a) v x = psi(a) v x for all a.
// Shortcut: x is the largest superfluous element.
Relation nabla_relation(EndoMonoid const& m,
                        CongruenceMethod method = CongruenceMethod::kBoth,
                        Exec exec = Exec::kParallel);

// First failure of reflexivity, symmetry, transitivity or two-sided
// compatibility, as a witness naming the failing law.
std::optional<Witness> congruence_violation(CayleyTable const& t,
                                            Relation const& r);

struct Congruence {
  std::vector<int> class_of;
  // Classes sorted internally; ordered by their least member.
  std::vector<std::vector<int>> classes;
};
// Throws kInternalInvariantViolation unless r is a congruence on t.
Congruence make_congruence(CayleyTable const& t, Relation const& r);
Congruence discrete_congruence(int n);
Congruence congruence_delta(EndoMonoid const& m,
                            CongruenceMethod method = CongruenceMethod::kBoth,
                            Exec exec = Exec::kParallel);
Congruence congruence_nabla(EndoMonoid const& m,
                            CongruenceMethod method = CongruenceMethod::kBoth,
                            Exec exec = Exec::kParallel);

struct QuotientMonoid {
  Congruence congruence;
  std::vector<int> representatives;  // least member of each class
  CayleyTable table;
};
// Re-verifies well-definedness over all pairs; throws kIllDefined.
QuotientMonoid quotient(CayleyTable const& t, Congruence const& c);

}  // namespace endolat
