#include "endolat/corpus.hpp"

#include <map>

#include "endolat/error.hpp"

namespace endolat {

// -- named examples ------------------------------------------------------------

namespace {

using Pairs = std::vector<std::pair<std::string, std::string>>;

// 1 > {b, c} > a0 > a1 > ... > ak > 0
LatticePtr chain_truncation(int k) {
  std::vector<std::string> names = {"0"};
  for (int i = k; i >= 0; --i) names.push_back("a" + std::to_string(i));
  names.insert(names.end(), {"b", "c", "1"});
  Pairs covers = {{"0", "a" + std::to_string(k)}};
  for (int i = k; i > 0; --i) {
    covers.push_back({"a" + std::to_string(i), "a" + std::to_string(i - 1)});
  }
  covers.insert(covers.end(), {{"a0", "b"}, {"a0", "c"}, {"b", "1"}, {"c", "1"}});
  return build_lattice("chain_" + std::to_string(k), names, covers);
}

}  // namespace

std::vector<LatticePtr> named_examples() {
  std::vector<LatticePtr> out;
  out.push_back(build_lattice("m2", {"0", "a", "b", "1"},
                              {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}));
  out.push_back(build_lattice(
      "n_c1", {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}}));
  out.push_back(build_lattice("qc6", {"0", "a", "b", "c", "d", "1"},
                              {{"0", "a"},
                               {"0", "b"},
                               {"a", "c"},
                               {"b", "c"},
                               {"b", "d"},
                               {"c", "1"},
                               {"d", "1"}}));
  out.push_back(build_lattice("chain2", {"0", "1"}, {{"0", "1"}}));
  for (int k = 0; k <= 3; ++k) out.push_back(chain_truncation(k));
  out.push_back(build_lattice(
      "n5", {"0", "a", "b", "c", "1"},
      {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}}));
  out.push_back(build_lattice("m3", {"0", "a", "b", "c", "1"},
                              {{"0", "a"},
                               {"0", "b"},
                               {"0", "c"},
                               {"a", "1"},
                               {"b", "1"},
                               {"c", "1"}}));
  out.push_back(build_lattice("trivial", {"0"}, {}));
  return out;
}

std::vector<std::string> named_example_names() {
  std::vector<std::string> out;
  for (auto const& L : named_examples()) out.push_back(L->name());
  return out;
}

LatticePtr named_example(std::string const& name) {
  for (auto const& L : named_examples()) {
    if (L->name() == name) return L;
  }
  throw Error(ErrorKind::kPrecondition, "no named example '" + name + "'");
}

// -- generation ----------------------------------------------------------------
//
// A lattice with n >= 2 elements minus its top is a meet-semilattice with
// n - 1 elements, and every finite meet-semilattice gains a lattice by
// adjoining a top.  Meet-semilattices grow one maximal element at a time:
// the new element's strict down-set D must be a down-set such that D meets
// every principal down-set in a set with a largest element.

namespace {

using Semi = std::vector<ElementSet>;  // down-sets, reflexive

bool is_down_closed(Semi const& s, ElementSet d) {
  for (Element x : d) {
    if (!s[x].is_subset_of(d)) return false;
  }
  return true;
}

bool has_max(Semi const& s, ElementSet t) {
  for (Element z : t) {
    if (t.is_subset_of(s[z])) return true;
  }
  return false;
}

std::vector<Semi> children(Semi const& s) {
  int const k = static_cast<int>(s.size());
  std::vector<Semi> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
    ElementSet d(bits);
    if (!is_down_closed(s, d)) continue;
    bool ok = true;
    for (Element y = 0; y < k && ok; ++y) ok = has_max(s, d & s[y]);
    if (!ok) continue;
    Semi child = s;
    ElementSet own = d;
    own.insert(k);
    child.push_back(own);
    out.push_back(std::move(child));
  }
  return out;
}

// Relabels a semilattice into canonical order.
Semi canonical_relabel(Semi const& s) {
  std::vector<Element> order = canonical_order(s);
  std::vector<int> pos(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = static_cast<int>(i);
  Semi out(s.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    ElementSet d;
    for (Element y : s[order[i]]) d.insert(pos[y]);
    out[i] = d;
  }
  return out;
}

// Level k holds the meet-semilattices with k elements, keyed by form.
std::vector<std::vector<Semi>> semilattice_levels(int max_k, Exec exec) {
  std::vector<std::vector<Semi>> levels(std::max(max_k, 1) + 1);
  levels[1] = {Semi{ElementSet{0}}};
  for (int k = 2; k <= max_k; ++k) {
    std::vector<Semi> const& parents = levels[k - 1];
    int const np = static_cast<int>(parents.size());
    std::vector<std::vector<std::pair<CanonicalForm, Semi>>> found(np);
    auto expand = [&](int i) {
      for (Semi& c : children(parents[i])) {
        found[i].push_back({canonical_form(c), std::move(c)});
      }
    };
    if (exec == Exec::kParallel) {
#pragma omp parallel for schedule(dynamic)
      for (int i = 0; i < np; ++i) expand(i);
    } else {
      for (int i = 0; i < np; ++i) expand(i);
    }
    std::map<CanonicalForm, Semi> unique;
    for (auto& list : found) {
      for (auto& [form, semi] : list) unique.emplace(form, std::move(semi));
    }
    for (auto& [_, semi] : unique) levels[k].push_back(canonical_relabel(semi));
  }
  return levels;
}

LatticePtr lattice_from(Semi const& s, std::string name) {
  int const k = static_cast<int>(s.size());
  std::vector<std::string> names;
  for (int i = 0; i < k; ++i) names.push_back(i == 0 ? "0" : "x" + std::to_string(i));
  names.push_back("1");
  std::vector<std::pair<Element, Element>> covers;
  for (Element x = 0; x < k; ++x) {
    for (Element y : s[x]) {
      if (y != x) covers.push_back({y, x});
    }
    covers.push_back({x, k});
  }
  return Lattice::build(std::move(name), std::move(names), std::move(covers));
}

std::string lattice_name(int n, std::size_t index) {
  std::string idx = std::to_string(index + 1);
  if (idx.size() < 2) idx = "0" + idx;
  return "L" + std::to_string(n) + "_" + idx;
}

std::vector<LatticePtr> lattices_of_size(
    int n, std::vector<std::vector<Semi>> const& levels) {
  if (n == 1) return {Lattice::build(lattice_name(1, 0), {"0"}, {})};
  std::vector<LatticePtr> out;
  auto const& level = levels[n - 1];
  for (std::size_t i = 0; i < level.size(); ++i) {
    out.push_back(lattice_from(level[i], lattice_name(n, i)));
  }
  return out;
}

}  // namespace

std::vector<LatticePtr> enumerate_lattices(int n, Exec exec) {
  if (n < 1) throw Error(ErrorKind::kPrecondition, "lattice size must be >= 1");
  if (n > kMaxElements) {
    throw Error(ErrorKind::kTooLarge, "lattice size exceeds the element cap");
  }
  return lattices_of_size(n, semilattice_levels(n - 1, exec));
}

std::vector<LatticePtr> lattice_corpus(int max_n, bool modular_only, Exec exec) {
  if (max_n < 1) return {};
  auto levels = semilattice_levels(max_n - 1, exec);
  std::vector<LatticePtr> out;
  for (int n = 1; n <= max_n; ++n) {
    for (auto& L : lattices_of_size(n, levels)) {
      if (!modular_only || is_modular(*L)) out.push_back(std::move(L));
    }
  }
  return out;
}

}  // namespace endolat
