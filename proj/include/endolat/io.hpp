#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "endolat/lattice.hpp"
#include "endolat/monoid.hpp"
#include "endolat/morphism.hpp"

namespace endolat {

// -- lattices ------------------------------------------------------------------
//
//   lattice <name>
//   elements <id> <id> ...
//   cover <x> <y>          # x is covered by y
//
// Several blocks may follow each other.  Input starting with '{' or '[' is
// read as JSON instead: an object with keys name/elements/covers (covers as
// [x, y] pairs), or an array of such objects.
//
// Malformed input throws kParse with "<source>:<line>: ..." in the message;
// well-formed input that is not a lattice throws the builder's error.

std::vector<LatticePtr> parse_lattices(std::string_view text,
                                       std::string const& source = "<input>");
// Exactly one lattice expected.
LatticePtr parse_lattice(std::string_view text,
                         std::string const& source = "<input>");
std::vector<LatticePtr> read_lattice_file(std::string const& path);

std::string format_lattice(Lattice const& L);
std::string format_lattice_json(Lattice const& L);

// Manifest line followed by one block per lattice.
std::string format_corpus(std::vector<LatticePtr> const& corpus, int max_n,
                          bool modular_only);

// -- morphisms -----------------------------------------------------------------
//
//   morphism <name> : <lattice> { x->y, ... }
//
// Every element of the lattice must appear exactly once on the left.  The
// literal may span lines.

struct NamedMorphism {
  std::string name;
  LinearMorphism morphism;
};

// The lattice name in each literal must match L's name (kDomainMismatch).
std::vector<NamedMorphism> parse_morphisms(std::string_view text,
                                           LatticePtr const& L,
                                           std::string const& source = "<input>");
std::vector<NamedMorphism> read_morphism_file(std::string const& path,
                                              LatticePtr const& L);

std::string format_morphism(std::string const& name, LinearMorphism const& f);

// -- monoid dumps --------------------------------------------------------------

// "monoid <name> order <n>", one legend line per element, then n rows of
// n indices where row i, column j holds the index of i after j.
std::string format_cayley(EndoMonoid const& m);
std::string format_cayley(std::string const& name, CayleyTable const& t,
                          std::vector<std::string> const& legend);

// One class per line, least member (the representative) first.
std::string format_congruence(Congruence const& c);

std::string read_text_file(std::string const& path);

}  // namespace endolat
