#pragma once

#include <initializer_list>
#include <string>
#include <utility>

#include "doctest.h"
#include "endolat/lattice.hpp"
#include "endolat/monoid.hpp"

namespace testing {

inline endolat::Element el(endolat::Lattice const& L, std::string const& name) {
  auto e = L.find(name);
  REQUIRE_MESSAGE(e.has_value(), "no element " << name);
  return *e;
}

inline endolat::ElementSet set_of(endolat::Lattice const& L,
                                  std::initializer_list<char const*> names) {
  endolat::ElementSet s;
  for (auto n : names) s.insert(el(L, n));
  return s;
}

// Value vector from "x->y" pairs; every element must be listed.
inline endolat::ElementMap map_of(
    endolat::Lattice const& L,
    std::initializer_list<std::pair<char const*, char const*>> pairs) {
  endolat::ElementMap v(L.size(), endolat::kNone);
  for (auto [x, y] : pairs) v[el(L, x)] = el(L, y);
  for (auto y : v) REQUIRE(y != endolat::kNone);
  return v;
}

inline int index_in(endolat::EndoMonoid const& m, endolat::ElementMap const& v) {
  auto i = m.index_of(v);
  REQUIRE(i.has_value());
  return *i;
}

}  // namespace testing
