#include <algorithm>
#include <cctype>
#include <map>

#include "endolat/corpus.hpp"
#include "endolat/error.hpp"

namespace endolat {

namespace {

std::vector<int> parse_factors(std::string const& spec) {
  std::vector<int> factors;
  std::size_t i = 0;
  auto fail = [&](std::string const& why) {
    throw Error(ErrorKind::kParse, "group spec '" + spec + "': " + why);
  };
  if (spec.empty()) fail("empty");
  while (i < spec.size()) {
    if (spec[i] != 'Z') fail("expected 'Z' at position " + std::to_string(i));
    ++i;
    std::size_t start = i;
    while (i < spec.size() && std::isdigit(static_cast<unsigned char>(spec[i]))) ++i;
    if (start == i) fail("missing order after 'Z'");
    if (i - start > 3) fail("factor order too large");
    int order = std::stoi(spec.substr(start, i - start));
    if (order < 1) fail("factor order must be positive");
    factors.push_back(order);
    if (i < spec.size()) {
      if (spec[i] != 'x') fail("expected 'x' at position " + std::to_string(i));
      ++i;
      if (i == spec.size()) fail("trailing 'x'");
    }
  }
  return factors;
}

// Elements of Z_{n1} x ... x Z_{nk} as mixed-radix integers.
struct Group {
  std::vector<int> factors;
  int order = 1;

  std::vector<int> digits(int g) const {
    std::vector<int> d(factors.size());
    for (std::size_t i = factors.size(); i-- > 0;) {
      d[i] = g % factors[i];
      g /= factors[i];
    }
    return d;
  }
  int encode(std::vector<int> const& d) const {
    int g = 0;
    for (std::size_t i = 0; i < factors.size(); ++i) g = g * factors[i] + d[i];
    return g;
  }
  int add(int a, int b) const {
    auto da = digits(a), db = digits(b);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      da[i] = (da[i] + db[i]) % factors[i];
    }
    return encode(da);
  }
  std::string label(int g) const {
    auto d = digits(g);
    std::string s;
    for (std::size_t i = 0; i < d.size(); ++i) {
      if (i) s += '.';
      s += std::to_string(d[i]);
    }
    return s;
  }
};

ElementSet cyclic(Group const& G, int g) {
  ElementSet h{0};
  for (int x = g; x != 0; x = G.add(x, g)) h.insert(x);
  return h;
}

// H + K, which in an abelian group is the subgroup generated by H and K.
ElementSet sum(Group const& G, ElementSet h, ElementSet k) {
  ElementSet s;
  for (Element a : h) {
    for (Element b : k) s.insert(G.add(a, b));
  }
  return s;
}

}  // namespace

LatticePtr subgroup_lattice(std::string const& spec) {
  Group G;
  G.factors = parse_factors(spec);
  long long order = 1;
  for (int f : G.factors) {
    order *= f;
    if (order > kMaxElements) {
      throw Error(ErrorKind::kOrderBound,
                  "group " + spec + " has more than " +
                      std::to_string(kMaxElements) + " elements");
    }
  }
  G.order = static_cast<int>(order);

  // Subgroups keyed by member bits, each with the generator list that found
  // it first (breadth first, so generator lists are as short as possible).
  std::map<std::uint64_t, std::vector<int>> found;
  std::vector<ElementSet> queue;
  for (int g = 0; g < G.order; ++g) {
    ElementSet h = cyclic(G, g);
    if (found.emplace(h.bits(), std::vector<int>{g}).second) queue.push_back(h);
  }
  std::vector<ElementSet> cyclics = queue;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (ElementSet c : cyclics) {
      ElementSet s = sum(G, queue[i], c);
      if (found.count(s.bits())) continue;
      std::vector<int> gens = found[queue[i].bits()];
      gens.push_back(found[c.bits()].front());
      found.emplace(s.bits(), std::move(gens));
      queue.push_back(s);
      if (static_cast<int>(found.size()) > kMaxElements) {
        throw Error(ErrorKind::kOrderBound,
                    "subgroup lattice of " + spec + " exceeds " +
                        std::to_string(kMaxElements) + " elements");
      }
    }
  }

  // Order subgroups by size, then by member bits, so the trivial group is
  // first and the whole group last.
  std::vector<ElementSet> subs;
  for (auto const& [bits, _] : found) subs.push_back(ElementSet(bits));
  std::stable_sort(subs.begin(), subs.end(), [](ElementSet a, ElementSet b) {
    return a.size() < b.size();
  });
  std::vector<std::string> names;
  for (ElementSet h : subs) {
    if (h.size() == 1) {
      names.push_back("0");
    } else if (h.size() == G.order) {
      names.push_back("1");
    } else {
      // <g1>+<g2> for a subgroup first reached from two cyclic ones.
      std::string n;
      auto const& gens = found[h.bits()];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) n += '+';
        n += "<" + G.label(gens[i]) + ">";
      }
      names.push_back(n);
    }
  }
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = 0; j < subs.size(); ++j) {
      if (i != j && subs[i].is_subset_of(subs[j])) {
        covers.push_back({static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
  }
  LatticePtr L = Lattice::build("Sub(" + spec + ")", std::move(names),
                                std::move(covers));
  if (!is_modular(*L)) {
    throw Error(ErrorKind::kInternalInvariantViolation,
                "subgroup lattice of an abelian group is not modular");
  }
  return L;
}

}  // namespace endolat
