#include "endolat/morphism.hpp"

#include <algorithm>

#include "endolat/error.hpp"

namespace endolat {

namespace {

std::string pair_text(Lattice const& L, Element x, Element y) {
  return "'" + L.element_name(x) + "' and '" + L.element_name(y) + "'";
}

void require_complement_pair(Lattice const& L, Element x, Element x_prime) {
  if (L.meet(x, x_prime) != L.bottom() || L.join(x, x_prime) != L.top()) {
    throw Error(ErrorKind::kNotComplementPair,
                pair_text(L, x, x_prime) + " are not complements");
  }
}

}  // namespace

MorphismKey key_of(LinearMorphism const& f) {
  MorphismKey key{f.kernel(), f.image(), {}};
  IntervalView upper(f.domain().parent(), f.kernel(), f.domain().hi());
  for (Element x : upper.elements()) key.fingerprint.push_back(f(x));
  return key;
}

LinearMorphism validate_linear(IntervalView domain, IntervalView codomain,
                               ElementMap values) {
  Lattice const& D = domain.lattice();
  Lattice const& C = codomain.lattice();
  if (static_cast<int>(values.size()) != D.size()) {
    throw Error(ErrorKind::kPrecondition,
                "value vector has " + std::to_string(values.size()) +
                    " entries, domain lattice has " + std::to_string(D.size()));
  }
  for (Element x = 0; x < D.size(); ++x) {
    if (!domain.contains(x)) {
      values[x] = kNone;
      continue;
    }
    if (values[x] < 0 || values[x] >= C.size() ||
        !codomain.contains(values[x])) {
      throw Error(ErrorKind::kPrecondition,
                  "'" + D.element_name(x) + "' is not sent into the codomain");
    }
  }

  ElementSet zero_fiber;
  for (Element x : domain.elements()) {
    if (values[x] == codomain.lo()) zero_fiber.insert(x);
  }
  Element kernel = kNone;
  for (Element k : zero_fiber) {
    if (zero_fiber.is_subset_of(D.down_set(k))) {
      kernel = k;
      break;
    }
  }
  if (kernel == kNone) {
    throw Error(ErrorKind::kNoKernel,
                "the elements sent to bottom have no largest member");
  }

  for (Element x : domain.elements()) {
    Element xk = D.join(x, kernel);
    if (values[x] != values[xk]) {
      throw Error(ErrorKind::kNotConstantOnKernelCosets,
                  "'" + D.element_name(x) + "' and '" + D.element_name(xk) +
                      "' have different images");
    }
  }

  Element image = values[domain.hi()];
  if (!C.leq(codomain.lo(), image)) {
    throw Error(ErrorKind::kNotIntervalIso, "image lies outside codomain");
  }
  IntervalView upper(domain.parent(), kernel, domain.hi());
  IntervalView target(codomain.parent(), codomain.lo(), image);
  ElementSet hit;
  for (Element x : upper.elements()) {
    if (!target.contains(values[x]) || hit.contains(values[x])) {
      throw Error(ErrorKind::kNotIntervalIso,
                  "map on [" + D.element_name(kernel) + ", " +
                      D.element_name(domain.hi()) +
                      "] is not a bijection onto [" +
                      C.element_name(codomain.lo()) + ", " +
                      C.element_name(image) + "]");
    }
    hit.insert(values[x]);
  }
  if (hit != target.elements()) {
    throw Error(ErrorKind::kNotIntervalIso, "map above the kernel is not onto");
  }
  for (Element x : upper.elements()) {
    for (Element y : upper.elements()) {
      if (D.leq(x, y) != C.leq(values[x], values[y])) {
        throw Error(ErrorKind::kNotIntervalIso,
                    "order between " + pair_text(D, x, y) +
                        " is not preserved and reflected");
      }
    }
  }

  // Implied by the two clauses; kept as an independent assertion.
  for (Element x : domain.elements()) {
    for (Element y : D.up_set(x) & domain.elements()) {
      if (!C.leq(values[x], values[y])) {
        throw Error(ErrorKind::kInternalInvariantViolation,
                    "certified morphism is not monotone at " +
                        pair_text(D, x, y));
      }
    }
  }
  return LinearMorphism(std::move(domain), std::move(codomain),
                        std::move(values), kernel, image);
}

LinearMorphism endomorphism(LatticePtr const& L, ElementMap values) {
  return validate_linear(IntervalView::whole(L), IntervalView::whole(L),
                         std::move(values));
}

LinearMorphism zero_morphism(IntervalView domain, IntervalView codomain) {
  ElementMap v(domain.lattice().size(), kNone);
  for (Element x : domain.elements()) v[x] = codomain.lo();
  return validate_linear(std::move(domain), std::move(codomain), std::move(v));
}

LinearMorphism identity_morphism(LatticePtr const& L) {
  ElementMap v(L->size());
  for (Element x = 0; x < L->size(); ++x) v[x] = x;
  return endomorphism(L, std::move(v));
}

ElementMap projection_values(Lattice const& L, Element x, Element x_prime) {
  require_complement_pair(L, x, x_prime);
  ElementMap v(L.size());
  for (Element a = 0; a < L.size(); ++a) {
    v[a] = L.meet(L.join(a, x_prime), x);
  }
  return v;
}

LinearMorphism projection(LatticePtr const& L, Element x, Element x_prime) {
  return endomorphism(L, projection_values(*L, x, x_prime));
}

LinearMorphism inclusion(LatticePtr const& L, Element x) {
  IntervalView dom(L, L->bottom(), x);
  ElementMap v(L->size(), kNone);
  for (Element y : dom.elements()) v[y] = y;
  return validate_linear(std::move(dom), IntervalView::whole(L), std::move(v));
}

LinearMorphism quotient_map(LatticePtr const& L, Element a) {
  ElementMap v(L->size());
  for (Element y = 0; y < L->size(); ++y) v[y] = L->join(a, y);
  return validate_linear(IntervalView::whole(L), IntervalView(L, a, L->top()),
                         std::move(v));
}

ElementMap compose_values(ElementMap const& g, ElementMap const& f) {
  ElementMap out(f.size(), kNone);
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] != kNone) out[x] = g[f[x]];
  }
  return out;
}

LinearMorphism compose(LinearMorphism const& g, LinearMorphism const& f) {
  if (!f.codomain().is_within(g.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "codomain of the inner morphism is not inside the domain of "
                "the outer one");
  }
  return validate_linear(f.domain(), g.codomain(),
                         compose_values(g.values(), f.values()));
}

ElementMap hat_values(Lattice const& L, ElementMap const& theta, Element x,
                      Element x_prime) {
  require_complement_pair(L, x, x_prime);
  ElementMap v(L.size());
  for (Element a = 0; a < L.size(); ++a) {
    v[a] = theta[L.meet(L.join(a, x_prime), x)];
  }
  return v;
}

LinearMorphism extend_hat(LinearMorphism const& phi, Element x,
                          Element x_prime, Element y) {
  LatticePtr const& L = phi.domain().parent();
  if (phi.codomain().parent() != L ||
      !(phi.domain() == IntervalView(L, L->bottom(), x)) ||
      !phi.codomain().is_within(IntervalView(L, L->bottom(), y))) {
    throw Error(ErrorKind::kDomainMismatch,
                "inner morphism must map [0,x] into [0,y] of one lattice");
  }
  return endomorphism(L, hat_values(*L, phi.values(), x, x_prime));
}

namespace {

std::vector<LinearMorphism> endos_for_pair(LatticePtr const& L, Element k,
                                           Element a) {
  std::vector<LinearMorphism> out;
  IntervalView upper(L, k, L->top());
  IntervalView lower(L, L->bottom(), a);
  if (upper.size() != lower.size()) return out;
  int index = 0;
  for_each_interval_isomorphism(upper, lower, [&](ElementMap const& theta) {
    ElementMap v(L->size());
    for (Element x = 0; x < L->size(); ++x) v[x] = theta[L->join(x, k)];
    out.push_back(endomorphism(L, std::move(v))
                      .with_origin(MorphismOrigin{k, a, index++}));
    return true;
  });
  return out;
}

}  // namespace

std::vector<LinearMorphism> enumerate_endomorphisms(LatticePtr const& L,
                                                    Exec exec) {
  int const n = L->size();
  int const pairs = n * n;
  std::vector<std::vector<LinearMorphism>> slots(pairs);
  if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
    for (int p = 0; p < pairs; ++p) slots[p] = endos_for_pair(L, p / n, p % n);
  } else {
    for (int p = 0; p < pairs; ++p) slots[p] = endos_for_pair(L, p / n, p % n);
  }
  std::vector<LinearMorphism> all;
  for (auto& s : slots) {
    for (auto& f : s) all.push_back(std::move(f));
  }
  std::sort(all.begin(), all.end(),
            [](LinearMorphism const& f, LinearMorphism const& g) {
              return f.values() < g.values();
            });
  for (std::size_t i = 1; i < all.size(); ++i) {
    if (all[i - 1].values() == all[i].values()) {
      throw Error(ErrorKind::kInternalInvariantViolation,
                  "two enumeration triples produced the same map " +
                      format_values(*L, all[i].values()));
    }
  }
  return all;
}

bool is_injective(LinearMorphism const& f) {
  return f.kernel() == f.domain().lo();
}

bool is_surjective(LinearMorphism const& f) {
  return f.image() == f.codomain().hi();
}

bool is_isomorphism(LinearMorphism const& f) {
  return is_injective(f) && is_surjective(f);
}

bool is_idempotent(LinearMorphism const& f) {
  if (!f.codomain().is_within(f.domain())) return false;
  return compose_values(f.values(), f.values()) == f.values();
}

LinearMorphism restrict(LinearMorphism const& f, IntervalView const& I,
                        std::optional<IntervalView> const& J) {
  IntervalView target = J.value_or(I);
  if (!I.is_within(f.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "restriction interval is not inside the domain");
  }
  Lattice const& L = f.domain().lattice();
  ElementMap v(L.size(), kNone);
  for (Element x : I.elements()) {
    if (target.parent() != f.codomain().parent() || !target.contains(f(x))) {
      throw Error(ErrorKind::kNotInvariant,
                  "'" + L.element_name(x) + "' is sent outside the codomain");
    }
    v[x] = f(x);
  }
  return validate_linear(I, target, std::move(v));
}

std::string format_values(Lattice const& L, ElementMap const& values) {
  std::string out = "{";
  bool first = true;
  for (Element x = 0; x < static_cast<int>(values.size()); ++x) {
    if (values[x] == kNone) continue;
    if (!first) out += ", ";
    first = false;
    out += L.element_name(x) + "->" + L.element_name(values[x]);
  }
  return out + "}";
}

}  // namespace endolat
