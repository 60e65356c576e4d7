#include "toric/weyl.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <type_traits>
#include <unordered_set>

namespace toric {

WeylElement WeylElement::identity(std::size_t num_roots) {
  std::vector<std::uint16_t> p(num_roots);
  std::iota(p.begin(), p.end(), std::uint16_t{0});
  return WeylElement(std::move(p));
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  std::vector<std::uint16_t> out(rhs.perm_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = perm_[rhs.perm_[i]];
  return WeylElement(std::move(out));
}

WeylElement WeylElement::inverse() const {
  std::vector<std::uint16_t> out(perm_.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[perm_[i]] = static_cast<std::uint16_t>(i);
  return WeylElement(std::move(out));
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

int WeylElement::length(const RootSystem& phi) const {
  int len = 0;
  for (std::size_t i = 0; i < phi.num_positive(); ++i)
    if (!phi.is_positive(perm_[i])) ++len;
  return len;
}

std::vector<std::vector<int>> WeylElement::coroot_action(const RootSystem& phi) const {
  std::vector<std::vector<int>> cols;
  cols.reserve(phi.rank());
  for (int k = 0; k < phi.rank(); ++k) cols.push_back(phi.coroot(perm_[phi.simple_root(k)]));
  return cols;
}

std::vector<std::size_t> WeylElement::apply(const std::vector<std::size_t>& roots) const {
  std::vector<std::size_t> out;
  out.reserve(roots.size());
  for (auto r : roots) out.push_back(perm_[r]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t WeylElementHash::operator()(const WeylElement& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : w.permutation()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

WeylElement root_reflection(const RootSystem& phi, std::size_t beta) {
  const auto& b = phi.root(beta);
  std::vector<std::uint16_t> perm(phi.num_roots());
  for (std::size_t g = 0; g < phi.num_roots(); ++g) {
    const int k = phi.pairing(g, beta);
    RootVector image = phi.root(g);
    for (std::size_t j = 0; j < image.size(); ++j) image[j] -= k * b[j];
    perm[g] = static_cast<std::uint16_t>(phi.index_of(image));
  }
  return WeylElement(std::move(perm));
}

WeylElement simple_reflection(const RootSystem& phi, int i) {
  if (i < 1 || i > phi.rank())
    throw DomainError("simple reflection index " + std::to_string(i) + " outside 1.." +
                      std::to_string(phi.rank()));
  return root_reflection(phi, phi.simple_root(i - 1));
}

bool preserves_pairing(const RootSystem& phi, const WeylElement& w) {
  const auto& p = w.permutation();
  if (p.size() != phi.num_roots()) return false;
  std::vector<bool> hit(p.size(), false);
  for (auto x : p) {
    if (x >= p.size() || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t a = 0; a < phi.num_roots(); ++a)
    for (std::size_t b = 0; b < phi.num_roots(); ++b)
      if (phi.pairing(p[a], p[b]) != phi.pairing(a, b)) return false;
  return true;
}

WeylGroup::WeylGroup(RootSystem phi) : phi_(std::make_shared<const RootSystem>(std::move(phi))) {
  for (int i = 1; i <= phi_->rank(); ++i) generators_.push_back(simple_reflection(*phi_, i));
}

BigInt WeylGroup::order() const { return weyl_order(phi_->type()); }

std::vector<WeylElement> WeylGroup::enumerate(std::uint64_t max_order) const {
  std::vector<int> all(rank());
  std::iota(all.begin(), all.end(), 1);
  return enumerate_parabolic(all, max_order);
}

std::vector<WeylElement> WeylGroup::enumerate_parabolic(const std::vector<int>& simple,
                                                        std::uint64_t max_order) const {
  for (int i : simple) {
    if (i < 1 || i > rank()) throw DomainError("parabolic generator index out of range");
  }
  if (simple.size() == static_cast<std::size_t>(rank()) && order() > max_order)
    throw CapabilityError("Weyl group of " + phi_->type().str() + " has order " +
                              order().str() + ", above max-group-order " +
                              std::to_string(max_order),
                          "max-group-order");

  std::vector<WeylElement> elements{WeylElement::identity(phi_->num_roots())};
  std::unordered_set<WeylElement, WeylElementHash> seen(elements.begin(), elements.end());
  // Breadth-first with right multiplication: words are discovered in shortlex order.
  for (std::size_t k = 0; k < elements.size(); ++k) {
    for (int i : simple) {
      WeylElement next = elements[k] * generators_[static_cast<std::size_t>(i - 1)];
      if (seen.insert(next).second) {
        elements.push_back(std::move(next));
        if (elements.size() > max_order)
          throw CapabilityError("subgroup exceeds max-group-order " + std::to_string(max_order),
                                "max-group-order");
      }
    }
  }
  return elements;
}

namespace {

// Generic orbit with a Schreier transversal. `act(i, x)` applies generator i.
template <class Point, class Act>
OrbitStabilizer schreier_orbit(const WeylGroup& w, const Point& base, Act act, const Limits& limits,
                               std::type_identity_t<std::vector<Point>>* orbit_out) {
  const auto& gens = w.generators();
  const std::size_t nroots = w.roots().num_roots();
  std::vector<Point> points{base};
  std::vector<WeylElement> transversal{WeylElement::identity(nroots)};
  std::map<Point, std::size_t> index{{base, 0}};
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      Point next = act(gi, points[k]);
      if (index.emplace(next, points.size()).second) {
        points.push_back(next);
        transversal.push_back(gens[gi] * transversal[k]);
        if (points.size() > limits.max_group_order)
          throw CapabilityError("orbit exceeds max-group-order " +
                                    std::to_string(limits.max_group_order),
                                "max-group-order");
      }
    }
  }

  OrbitStabilizer out;
  out.orbit_size = points.size();
  const BigInt order = w.order();
  if (order % out.orbit_size != 0) throw Error("internal: orbit size does not divide |W|");
  out.stabilizer_order = order / out.orbit_size;

  std::set<WeylElement> schreier;
  for (std::size_t k = 0; k < points.size(); ++k)
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const std::size_t target = index.at(act(gi, points[k]));
      WeylElement s = transversal[target].inverse() * gens[gi] * transversal[k];
      if (!s.is_identity()) schreier.insert(std::move(s));
    }
  out.stabilizer_generators.assign(schreier.begin(), schreier.end());
  if (orbit_out) *orbit_out = std::move(points);
  return out;
}

}  // namespace

OrbitStabilizer orbit_and_stabilizer(const WeylGroup& w, const std::vector<std::size_t>& root_set,
                                     const Limits& limits) {
  std::vector<std::size_t> base = root_set;
  std::sort(base.begin(), base.end());
  return schreier_orbit(
      w, base,
      [&w](std::size_t g, const std::vector<std::size_t>& s) { return w.generators()[g].apply(s); },
      limits, nullptr);
}

namespace {

std::vector<std::vector<std::vector<int>>> generator_actions(const WeylGroup& w) {
  std::vector<std::vector<std::vector<int>>> actions;
  for (const auto& g : w.generators()) actions.push_back(g.coroot_action(w.roots()));
  return actions;
}

}  // namespace

OrbitStabilizer orbit_and_stabilizer(const WeylGroup& w, const TorusPoint& point,
                                     const Limits& limits) {
  if (point.rank() != w.rank()) throw DomainError("torus point rank mismatch");
  const auto actions = generator_actions(w);
  auto act = [&](std::size_t g, const TorusPoint& t) { return t.transform(actions[g]); };
  return schreier_orbit(w, point, act, limits, nullptr);
}

std::vector<TorusPoint> orbit(const WeylGroup& w, const TorusPoint& point, const Limits& limits) {
  if (point.rank() != w.rank()) throw DomainError("torus point rank mismatch");
  const auto actions = generator_actions(w);
  std::set<TorusPoint> seen{point};
  std::deque<TorusPoint> queue{point};
  while (!queue.empty()) {
    TorusPoint t = queue.front();
    queue.pop_front();
    for (const auto& a : actions) {
      TorusPoint next = t.transform(a);
      if (seen.insert(next).second) {
        queue.push_back(next);
        if (seen.size() > limits.max_group_order)
          throw CapabilityError("orbit exceeds max-group-order", "max-group-order");
      }
    }
  }
  return {seen.begin(), seen.end()};
}

WeylElement longest_element(const WeylGroup& w, std::optional<int> vertex) {
  const auto& phi = w.roots();
  if (vertex && (*vertex < 1 || *vertex > phi.rank()))
    throw DomainError("parabolic vertex must lie in 1..n");
  WeylElement x = WeylElement::identity(phi.num_roots());
  // Right-multiply by any s_i (i in J) with x(alpha_i) > 0; each step adds 1 to the length.
  for (bool grew = true; grew;) {
    grew = false;
    for (int i = 1; i <= phi.rank(); ++i) {
      if (vertex && i == *vertex) continue;
      if (phi.is_positive(x(phi.simple_root(i - 1)))) {
        x = x * w.generators()[static_cast<std::size_t>(i - 1)];
        grew = true;
      }
    }
  }
  return x;
}

std::vector<CenterElement> center_subgroup(const WeylGroup& w) {
  const auto& phi = w.roots();
  const auto diagram = affine_diagram(phi);
  const int size = diagram.num_vertices();
  std::vector<int> identity_perm(size);
  std::iota(identity_perm.begin(), identity_perm.end(), 0);

  std::vector<CenterElement> out;
  out.push_back({0, WeylElement::identity(phi.num_roots()), identity_perm});
  const WeylElement w0 = longest_element(w);
  for (int p = 1; p < size; ++p) {
    if (diagram.marks[p] != 1) continue;
    WeylElement z = longest_element(w, p) * w0;
    std::vector<int> perm(size, -1);
    for (int q = 0; q < size; ++q) {
      const std::size_t image = z(diagram.vertex_roots[q]);
      auto it = std::find(diagram.vertex_roots.begin(), diagram.vertex_roots.end(), image);
      if (it == diagram.vertex_roots.end())
        throw Error("internal: z_p does not permute the affine simple roots");
      perm[q] = static_cast<int>(it - diagram.vertex_roots.begin());
    }
    out.push_back({p, std::move(z), std::move(perm)});
  }
  return out;
}

}  // namespace toric
