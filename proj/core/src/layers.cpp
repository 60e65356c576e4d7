#include "toric/layers.hpp"

#include "toric/errors.hpp"
#include "toric/intlat.hpp"
#include "toric/weyl.hpp"

#include <algorithm>
#include <map>

namespace toric {

namespace {

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0 || a % b != 0) throw Error(std::string("internal: inexact division in ") + what);
  return a / b;
}

// Σ over points t of C_0 of an irreducible type, grouped by the type of Φ(t).
std::map<CartanType, BigInt> point_type_counts(const TypeSymbol& t) {
  std::map<CartanType, BigInt> out;
  for (const auto& rec : point_orbits(RootSystem::build(CartanType(t))).records)
    out[rec.point_type] += rec.orbit_size;
  return out;
}

// Multiset of Θ(t) types over t in C_0(Θ), via the product of its factors.
std::map<CartanType, BigInt> point_type_counts(const CartanType& type,
                                               std::map<TypeSymbol, std::map<CartanType, BigInt>>& cache) {
  std::map<CartanType, BigInt> acc{{CartanType(), BigInt(1)}};
  for (const auto& f : type.factors()) {
    auto it = cache.find(f);
    if (it == cache.end()) it = cache.emplace(f, point_type_counts(f)).first;
    std::map<CartanType, BigInt> next;
    for (const auto& [ta, ca] : acc)
      for (const auto& [tb, cb] : it->second) next[ta * tb] += ca * cb;
    acc = std::move(next);
  }
  return acc;
}

BigInt sign_power(int n) { return n % 2 == 0 ? BigInt(1) : BigInt(-1); }

}  // namespace

PointOrbits point_orbits(const RootSystem& phi) {
  const auto diagram = affine_diagram(phi);
  const auto aut = diagram_automorphisms(diagram);
  const BigInt order = weyl_order(phi.type());
  const auto center = center_subgroup(WeylGroup(phi));

  PointOrbits out;
  out.type = phi.type();
  out.aut_orbits = aut.orbits;
  out.total = 0;
  for (int p = 0; p < diagram.num_vertices(); ++p) {
    PointOrbitRecord rec;
    rec.vertex = p;
    rec.mark = diagram.marks[static_cast<std::size_t>(p)];
    rec.point_type = delete_vertex(diagram, p);
    rec.stabilizer_order = weyl_order(rec.point_type);
    rec.orbit_size = exact_div(order, rec.stabilizer_order, "point_orbits");
    rec.aut_stabilizer_order = aut.stabilizer_order(p);
    rec.center_stabilizer_order = static_cast<std::size_t>(std::count_if(
        center.begin(), center.end(), [p](const CenterElement& z) { return z.diagram_permutation[static_cast<std::size_t>(p)] == p; }));
    out.total += rec.orbit_size;
    out.records.push_back(std::move(rec));
  }
  out.total_by_aut_orbits = 0;
  for (const auto& q : out.aut_orbits)
    out.total_by_aut_orbits += BigInt(q.size()) * out.records[static_cast<std::size_t>(q.front())].orbit_size;
  return out;
}

BigInt count_points(const CartanType& type) {
  BigInt product = 1;
  for (const auto& f : type.factors()) product *= point_orbits(RootSystem::build(CartanType(f))).total;
  return product;
}

BigInt n_theta(const RootSystem& phi, const Subsystem& theta) {
  if (!theta.complete) throw DomainError("n_theta: subsystem is not complete");
  const RootSet simple = simple_system(phi, theta.roots);
  const std::size_t r = simple.size();
  if (r == 0) return 1;
  // Coordinates on h / S(Θ): values of the simple roots of Θ.
  IntMatrix theta_coroots(r, r);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < r; ++i) theta_coroots(j, i) = phi.pairing(simple[i], simple[j]);
  IntMatrix restricted(static_cast<std::size_t>(phi.rank()), r);
  for (int k = 0; k < phi.rank(); ++k)
    for (std::size_t i = 0; i < r; ++i)
      restricted(static_cast<std::size_t>(k), i) = phi.pairing(simple[i], phi.simple_root(k));
  return exact_div(quotient_torsion(theta_coroots), quotient_torsion(restricted), "n_theta");
}

BigInt count_layers(const RootSystem& phi, int d, const Limits& limits) {
  const auto family = enumerate_complete(phi, d, limits);
  BigInt total = 0;
  for (const auto& cls : family.orbit_partition) {
    const auto& theta = family.members[cls.representative];
    total += BigInt(cls.members.size()) *
             exact_div(count_points(theta.type), n_theta(phi, theta), "count_layers");
  }
  return total;
}

BigInt LayerCensus::layers_at(int d) const {
  BigInt total = 0;
  for (const auto& rec : records)
    if (rec.d == d) total += BigInt(rec.orbit_size) * rec.layer_count_per_theta;
  return total;
}

LayerCensus layer_census(const RootSystem& phi, const Limits& limits) {
  const auto families = enumerate_all_complete(phi, limits);
  std::map<TypeSymbol, std::map<CartanType, BigInt>> cache;
  LayerCensus census;
  census.type = phi.type();
  census.rank = phi.rank();
  for (const auto& family : families) {
    for (const auto& cls : family.orbit_partition) {
      const auto& theta = family.members[cls.representative];
      LayerClassRecord rec;
      rec.d = family.d;
      rec.tangent = theta;
      rec.orbit_size = cls.members.size();
      rec.n_theta = n_theta(phi, theta);
      rec.tangent_weyl_order = weyl_order(theta.type);
      rec.layer_count_per_theta = 0;
      for (const auto& [type, count] : point_type_counts(theta.type, cache)) {
        // Z(Θ) ∩ ker of the covering acts freely preserving Θ(t): each count divides.
        BigInt per = exact_div(count, rec.n_theta, "layer_census");
        rec.layer_count_per_theta += per;
        rec.phi_c_types.push_back({type, per});
      }
      census.records.push_back(std::move(rec));
    }
  }
  return census;
}

std::vector<BigInt> closed_form_weights(const RootSystem& phi, const Limits& limits) {
  const auto families = enumerate_all_complete(phi, limits);
  std::vector<BigInt> weights;
  for (const auto& family : families) {
    BigInt sum = 0;
    for (const auto& cls : family.orbit_partition) {
      const auto& theta = family.members[cls.representative];
      sum += BigInt(cls.members.size()) *
             exact_div(weyl_order(theta.type), n_theta(phi, theta), "closed_form_weights");
    }
    weights.push_back(sum);
  }
  return weights;
}

IntPolynomial poincare_from_weights(const std::vector<BigInt>& weights) {
  const int n = static_cast<int>(weights.size()) - 1;
  IntPolynomial p;
  for (int d = 0; d <= n; ++d)
    p += IntPolynomial::monomial(weights[static_cast<std::size_t>(d)], 0) * layer_weight(d, n - d);
  return p;
}

IntPolynomial poincare_from_census(const LayerCensus& census) {
  IntPolynomial p;
  for (const auto& rec : census.records) {
    BigInt contribution = 0;
    for (const auto& entry : rec.phi_c_types) contribution += entry.count * exponent_product(entry.type);
    contribution *= rec.orbit_size;
    p += IntPolynomial::monomial(contribution, 0) * layer_weight(rec.d, census.rank - rec.d);
  }
  return p;
}

IntPolynomial poincare(const RootSystem& phi, PoincareRoute route, const Limits& limits) {
  if (route == PoincareRoute::ClosedForm) return poincare_from_weights(closed_form_weights(phi, limits));
  return poincare_from_census(layer_census(phi, limits));
}

EulerCharacteristic euler_characteristic(const RootSystem& phi, const Limits& limits) {
  EulerCharacteristic e;
  const int n = phi.rank();
  e.closed_form = sign_power(n) * weyl_order(phi.type());
  BigInt points_sum = 1;
  for (const auto& f : phi.type().factors()) {
    BigInt factor_sum = 0;
    for (const auto& rec : point_orbits(RootSystem::build(CartanType(f))).records)
      factor_sum += rec.orbit_size * exponent_product(rec.point_type);
    points_sum *= factor_sum;
  }
  e.via_points = sign_power(n) * points_sum;
  try {
    check_enumerable(phi.type(), limits);
  } catch (const CapabilityError&) {
    return e;
  }
  e.poincare_available = true;
  e.via_poincare = poincare(phi, PoincareRoute::ClosedForm, limits).evaluate(-1);
  return e;
}

RegularCharacterMultiple equivariant_euler(const CartanType& type) {
  return {type.rank() % 2 == 0 ? 1 : -1};
}

DegreeIdentity verify_degree_identity(const TypeSymbol& type) {
  const auto diagram = affine_diagram(RootSystem::build(CartanType(type)));
  DegreeIdentity out;
  out.sum = 0;
  for (int p = 0; p < diagram.num_vertices(); ++p) {
    DegreeIdentityTerm term;
    term.vertex = p;
    term.type = delete_vertex(diagram, p);
    term.exponent_product = exponent_product(term.type);
    term.weyl_order = weyl_order(term.type);
    out.sum += BigRational(term.exponent_product, term.weyl_order);
    out.terms.push_back(std::move(term));
  }
  return out;
}

}  // namespace toric
