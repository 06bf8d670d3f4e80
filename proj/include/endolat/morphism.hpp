#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "endolat/lattice.hpp"
#include "endolat/parallel.hpp"

namespace endolat {

// The (kernel, image, iso) triple an endomorphism was enumerated from.
struct MorphismOrigin {
  Element kernel = kNone;
  Element image = kNone;
  int iso_index = 0;
};

// A certified linear morphism between intervals.  The value vector is the
// source of truth and is indexed by parent ids of the domain lattice, with
// kNone outside the domain interval.
class LinearMorphism {
 public:
  IntervalView const& domain() const { return _domain; }
  IntervalView const& codomain() const { return _codomain; }
  ElementMap const& values() const { return _values; }
  Element operator()(Element x) const { return _values[x]; }
  Element kernel() const { return _kernel; }
  Element image() const { return _image; }

  bool is_endomorphism() const {
    return _domain.is_whole() && _codomain.is_whole() &&
           _domain.parent() == _codomain.parent();
  }

  std::optional<MorphismOrigin> const& origin() const { return _origin; }
  LinearMorphism with_origin(MorphismOrigin o) const {
    LinearMorphism copy = *this;
    copy._origin = o;
    return copy;
  }

  bool operator==(LinearMorphism const& o) const {
    return _domain == o._domain && _codomain == o._codomain &&
           _values == o._values;
  }

 private:
  friend LinearMorphism validate_linear(IntervalView, IntervalView,
                                        ElementMap);
  LinearMorphism(IntervalView d, IntervalView c, ElementMap v, Element k,
                 Element img)
      : _domain(std::move(d)),
        _codomain(std::move(c)),
        _values(std::move(v)),
        _kernel(k),
        _image(img) {}

  IntervalView _domain;
  IntervalView _codomain;
  ElementMap _values;
  Element _kernel;
  Element _image;
  std::optional<MorphismOrigin> _origin;
};

// Kernel, image and the values on [kernel, top]: equal keys iff equal maps.
struct MorphismKey {
  Element kernel;
  Element image;
  std::vector<Element> fingerprint;
  auto operator<=>(MorphismKey const&) const = default;
};
MorphismKey key_of(LinearMorphism const& f);

// Infers the kernel and certifies both linearity clauses.  `values` is
// indexed by parent ids of the domain (entries outside it are ignored).
LinearMorphism validate_linear(IntervalView domain, IntervalView codomain,
                               ElementMap values);

// Convenience for endomorphisms given as a full value vector.
LinearMorphism endomorphism(LatticePtr const& L, ElementMap values);

LinearMorphism zero_morphism(IntervalView domain, IntervalView codomain);
LinearMorphism identity_morphism(LatticePtr const& L);

// a -> (a v x') ^ x.  Throws kNotComplementPair.
LinearMorphism projection(LatticePtr const& L, Element x, Element x_prime);
ElementMap projection_values(Lattice const& L, Element x, Element x_prime);

LinearMorphism inclusion(LatticePtr const& L, Element x);
LinearMorphism quotient_map(LatticePtr const& L, Element a);

// g after f.  Requires codomain(f) inside domain(g), else kDomainMismatch.
LinearMorphism compose(LinearMorphism const& g, LinearMorphism const& f);

// Pointwise composition of endomorphism value vectors (g after f).
ElementMap compose_values(ElementMap const& g, ElementMap const& f);

// iota_y . phi . pi_x for phi : [0,x] -> [0,y] and a chosen complement x'.
LinearMorphism extend_hat(LinearMorphism const& phi, Element x,
                          Element x_prime, Element y);
// Same construction from a raw interval map theta (indexed by parent ids).
ElementMap hat_values(Lattice const& L, ElementMap const& theta, Element x,
                      Element x_prime);

// All linear endomorphisms, sorted by value vector.
std::vector<LinearMorphism> enumerate_endomorphisms(
    LatticePtr const& L, Exec exec = Exec::kParallel);

bool is_injective(LinearMorphism const& f);
bool is_surjective(LinearMorphism const& f);
bool is_isomorphism(LinearMorphism const& f);
bool is_idempotent(LinearMorphism const& f);

// Restriction to I with codomain J (J defaults to I).  Throws kNotInvariant
// when f(I) is not inside J.
LinearMorphism restrict(LinearMorphism const& f, IntervalView const& I,
                        std::optional<IntervalView> const& J = std::nullopt);

// Renders "{0->0, a->b, ...}" over the domain elements.
std::string format_values(Lattice const& L, ElementMap const& values);

}  // namespace endolat
