#include "toric/subsys.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

IntMatrix coordinate_rows(const RootSystem& phi, const RootSet& roots) {
  IntMatrix m(roots.size(), static_cast<std::size_t>(phi.rank()));
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (int j = 0; j < phi.rank(); ++j) m(i, static_cast<std::size_t>(j)) = phi.root(roots[i])[j];
  return m;
}

// Integer vectors annihilating a span, as machine integers.
using Annihilator = std::vector<std::vector<long long>>;

Annihilator annihilator_of(const RootSystem& phi, const RootSet& basis) {
  const IntMatrix k = kernel(coordinate_rows(phi, basis));
  Annihilator out(k.rows(), std::vector<long long>(k.cols()));
  for (std::size_t i = 0; i < k.rows(); ++i)
    for (std::size_t j = 0; j < k.cols(); ++j) out[i][j] = static_cast<long long>(k(i, j));
  return out;
}

bool in_span(const Annihilator& ann, const RootVector& v) {
  for (const auto& y : ann) {
    long long dot = 0;
    for (std::size_t j = 0; j < y.size(); ++j) dot += y[j] * v[j];
    if (dot != 0) return false;
  }
  return true;
}

RootSet with_negatives(const RootSystem& phi, const RootSet& positives) {
  RootSet all = positives;
  for (auto r : positives) all.push_back(phi.negative_of(r));
  std::sort(all.begin(), all.end());
  return all;
}

// A flat is stored by its positive roots plus an independent basis among them.
struct Flat {
  RootSet positives;
  RootSet basis;
};

}  // namespace

RootSet Subsystem::positive_roots(const RootSystem& phi) const {
  RootSet out;
  for (auto r : roots)
    if (phi.is_positive(r)) out.push_back(r);
  return out;
}

bool is_closed(const RootSystem& phi, const RootSet& roots) {
  std::set<std::size_t> members(roots.begin(), roots.end());
  for (auto r : roots)
    if (!members.count(phi.negative_of(r))) return false;
  const int n = phi.rank();
  for (auto a : roots)
    for (auto b : roots) {
      RootVector sum(n);
      for (int j = 0; j < n; ++j) sum[j] = phi.root(a)[j] + phi.root(b)[j];
      auto idx = phi.find(sum);
      if (idx && !members.count(*idx)) return false;
    }
  return true;
}

RootSet simple_system(const RootSystem& phi, const RootSet& theta) {
  RootSet pos;
  for (auto r : theta)
    if (phi.is_positive(r)) pos.push_back(r);
  std::set<std::size_t> members(pos.begin(), pos.end());
  std::set<std::size_t> decomposable;
  const int n = phi.rank();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      RootVector sum(n);
      for (int k = 0; k < n; ++k) sum[k] = phi.root(pos[i])[k] + phi.root(pos[j])[k];
      auto idx = phi.find(sum);
      if (idx && members.count(*idx)) decomposable.insert(*idx);
    }
  RootSet simple;
  for (auto r : pos)
    if (!decomposable.count(r)) simple.push_back(r);
  return simple;
}

CartanType decompose_type(const RootSystem& phi, const RootSet& theta) {
  if (!is_closed(phi, theta)) throw DomainError("decompose_type: root set is not a closed subsystem");
  const RootSet simple = simple_system(phi, theta);
  CartanMatrix c(simple.size(), std::vector<int>(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j) c[i][j] = phi.pairing(simple[j], simple[i]);
  return identify_type(c);
}

Subsystem make_subsystem(const RootSystem& phi, RootSet roots) {
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (!is_closed(phi, roots)) throw DomainError("root set is not a closed subsystem");
  Subsystem s;
  s.roots = std::move(roots);
  const RootSet pos = s.positive_roots(phi);
  s.span_basis = pos.empty() ? IntMatrix(0, static_cast<std::size_t>(phi.rank()))
                             : saturate(coordinate_rows(phi, pos)).basis;
  s.rank = static_cast<int>(s.span_basis.rows());
  s.type = decompose_type(phi, s.roots);
  const auto ann = annihilator_of(phi, pos);
  std::size_t in_span_count = 0;
  for (std::size_t r = 0; r < phi.num_positive(); ++r)
    if (in_span(ann, phi.root(r))) ++in_span_count;
  s.complete = in_span_count == pos.size();
  return s;
}

Subsystem completion(const RootSystem& phi, const RootSet& generators) {
  for (auto r : generators)
    if (r >= phi.num_roots()) throw DomainError("completion: root index out of range");
  const auto ann = annihilator_of(phi, generators);
  RootSet pos;
  for (std::size_t r = 0; r < phi.num_positive(); ++r)
    if (in_span(ann, phi.root(r))) pos.push_back(r);
  return make_subsystem(phi, with_negatives(phi, pos));
}

void check_enumerable(const CartanType& type, const Limits& limits) {
  if (type.rank() <= limits.enumeration_rank) return;
  const bool all_a = std::all_of(type.factors().begin(), type.factors().end(),
                                 [](const TypeSymbol& t) { return t.family() == 'A'; });
  if (all_a && type.rank() <= limits.a_series_rank) return;
  if (limits.allow_e6 && type == CartanType(TypeSymbol('E', 6))) return;
  throw CapabilityError("complete-subsystem enumeration for " + type.str() +
                            " is outside the enumeration bound (rank <= " +
                            std::to_string(limits.enumeration_rank) + ", A_n with n <= " +
                            std::to_string(limits.a_series_rank) +
                            (limits.allow_e6 ? ", E6" : "") + ")",
                        "enumeration-rank");
}

namespace {

// Flats of the root arrangement, level r = rank r, for r = 0..max_rank.
std::vector<std::vector<Flat>> enumerate_flats(const RootSystem& phi, int max_rank) {
  std::vector<std::vector<Flat>> levels(1, std::vector<Flat>{Flat{}});
  for (int r = 0; r < max_rank; ++r) {
    std::map<RootSet, RootSet> next;  // positives -> basis
    for (const auto& flat : levels[r]) {
      std::vector<bool> covered(phi.num_positive(), false);
      for (auto p : flat.positives) covered[p] = true;
      for (std::size_t alpha = 0; alpha < phi.num_positive(); ++alpha) {
        if (covered[alpha]) continue;
        RootSet basis = flat.basis;
        basis.push_back(alpha);
        const auto ann = annihilator_of(phi, basis);
        RootSet members;
        for (std::size_t b = 0; b < phi.num_positive(); ++b)
          if (in_span(ann, phi.root(b))) {
            members.push_back(b);
            covered[b] = true;
          }
        next.emplace(std::move(members), std::move(basis));
      }
    }
    std::vector<Flat> level;
    level.reserve(next.size());
    for (auto& [positives, basis] : next) level.push_back(Flat{positives, basis});
    levels.push_back(std::move(level));
  }
  return levels;
}

CompleteFamily family_from_flats(const RootSystem& phi, const WeylGroup& w, int d,
                                 const std::vector<Flat>& flats) {
  CompleteFamily family;
  family.d = d;
  family.members.reserve(flats.size());
  for (const auto& f : flats) family.members.push_back(make_subsystem(phi, with_negatives(phi, f.positives)));
  std::sort(family.members.begin(), family.members.end(),
            [](const Subsystem& a, const Subsystem& b) { return a.roots < b.roots; });
  family.orbit_partition = w_orbit_census(w, family.members);
  return family;
}

}  // namespace

CompleteFamily enumerate_complete(const RootSystem& phi, int d, const Limits& limits) {
  const int n = phi.rank();
  if (d < 0 || d > n) throw DomainError("enumerate_complete: d must lie in 0..n");
  check_enumerable(phi.type(), limits);
  const auto levels = enumerate_flats(phi, n - d);
  return family_from_flats(phi, WeylGroup(phi), d, levels[static_cast<std::size_t>(n - d)]);
}

std::vector<CompleteFamily> enumerate_all_complete(const RootSystem& phi, const Limits& limits) {
  const int n = phi.rank();
  check_enumerable(phi.type(), limits);
  const auto levels = enumerate_flats(phi, n);
  const WeylGroup w(phi);
  std::vector<CompleteFamily> out;
  for (int d = 0; d <= n; ++d)
    out.push_back(family_from_flats(phi, w, d, levels[static_cast<std::size_t>(n - d)]));
  return out;
}

std::vector<OrbitClass> w_orbit_census(const WeylGroup& w, const std::vector<Subsystem>& members) {
  std::map<RootSet, std::size_t> index;
  for (std::size_t i = 0; i < members.size(); ++i) index.emplace(members[i].roots, i);
  std::vector<bool> assigned(members.size(), false);
  std::vector<OrbitClass> classes;
  for (std::size_t start = 0; start < members.size(); ++start) {
    if (assigned[start]) continue;
    std::vector<std::size_t> orbit{start};
    assigned[start] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& g : w.generators()) {
        auto it = index.find(g.apply(members[orbit[k]].roots));
        if (it == index.end()) throw Error("internal: W does not preserve the family");
        if (!assigned[it->second]) {
          assigned[it->second] = true;
          orbit.push_back(it->second);
        }
      }
    std::sort(orbit.begin(), orbit.end());
    // Members are sorted by root set, so the smallest index is the lexicographic minimum.
    classes.push_back(OrbitClass{orbit.front(), std::move(orbit)});
  }
  return classes;
}

}  // namespace toric
