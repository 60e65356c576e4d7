#include "toric/aseries.hpp"
#include "toric/errors.hpp"
#include "toric/layers.hpp"

#include <gtest/gtest.h>

#include <map>

using namespace toric;

namespace {

RootSystem build(const std::string& s) { return RootSystem::build(CartanType::parse(s)); }

BigInt pow2(int n) { return BigInt(1) << n; }

std::vector<std::string> all_irreducible() {
  std::vector<std::string> out;
  for (int n = 1; n <= 8; ++n) out.push_back("A" + std::to_string(n));
  for (int n = 2; n <= 8; ++n) out.push_back("B" + std::to_string(n));
  for (int n = 3; n <= 8; ++n) out.push_back("C" + std::to_string(n));
  for (int n = 4; n <= 8; ++n) out.push_back("D" + std::to_string(n));
  for (const char* e : {"E6", "E7", "E8", "F4", "G2"}) out.push_back(e);
  return out;
}

std::map<std::string, BigInt> census_types(const LayerClassRecord& rec) {
  std::map<std::string, BigInt> out;
  for (const auto& e : rec.phi_c_types) out[e.type.str()] = e.count;
  return out;
}

const LayerClassRecord& record_of(const LayerCensus& c, int d, const std::string& type) {
  for (const auto& r : c.records)
    if (r.d == d && r.tangent.type.str() == type) return r;
  throw std::runtime_error("no record " + type);
}

}  // namespace

TEST(Points, ClassicalSeries) {
  for (int n = 1; n <= 8; ++n) EXPECT_EQ(count_points(CartanType::parse("A" + std::to_string(n))), n + 1);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(count_points(CartanType::parse("C" + std::to_string(n))), pow2(n));
  for (int n = 2; n <= 6; ++n)
    EXPECT_EQ(count_points(CartanType::parse("B" + std::to_string(n))), 2 * (pow2(n) - n));
  for (int n = 4; n <= 6; ++n)
    EXPECT_EQ(count_points(CartanType::parse("D" + std::to_string(n))), 2 * (pow2(n) - 2 * n));
}

TEST(Points, Exceptional) {
  EXPECT_EQ(count_points(CartanType::parse("F4")), 72);
  EXPECT_EQ(count_points(CartanType::parse("G2")), 6);
  EXPECT_EQ(count_points(CartanType::parse("A1xG2")), 12);
  EXPECT_EQ(count_points(CartanType()), 1);
}

TEST(Points, F4Summands) {
  const auto orbits = point_orbits(build("F4"));
  std::vector<BigInt> sizes;
  for (const auto& r : orbits.records) sizes.push_back(r.orbit_size);
  EXPECT_EQ(sizes, (std::vector<BigInt>{1, 12, 32, 24, 3}));
}

TEST(Points, B3Orbits) {
  const auto orbits = point_orbits(build("B3"));
  std::vector<BigInt> sizes;
  std::vector<std::string> types;
  for (const auto& r : orbits.records) {
    sizes.push_back(r.orbit_size);
    types.push_back(r.point_type.str());
  }
  EXPECT_EQ(sizes, (std::vector<BigInt>{1, 1, 6, 2}));
  EXPECT_EQ(types, (std::vector<std::string>{"B3", "B3", "A1xA1xA1", "A3"}));
  EXPECT_EQ(orbits.total, 10);
}

TEST(Points, AnSingletons) {
  for (int n = 1; n <= 6; ++n) {
    const auto orbits = point_orbits(build("A" + std::to_string(n)));
    EXPECT_EQ(orbits.records.size(), static_cast<std::size_t>(n + 1));
    for (const auto& r : orbits.records) EXPECT_EQ(r.orbit_size, 1);
    EXPECT_EQ(orbits.aut_orbits.size(), 1u);
  }
}

TEST(Points, CnBinomial) {
  for (int n = 3; n <= 6; ++n) {
    const auto orbits = point_orbits(build("C" + std::to_string(n)));
    BigInt binom = 1;
    for (int p = 0; p <= n; ++p) {
      EXPECT_EQ(orbits.records[static_cast<std::size_t>(p)].orbit_size, binom);
      binom = binom * (n - p) / (p + 1);
    }
  }
}

TEST(Points, EquationsOneAndTwoAgree) {
  for (const auto& name : all_irreducible()) {
    const auto orbits = point_orbits(build(name));
    EXPECT_EQ(orbits.total, orbits.total_by_aut_orbits) << name;
    for (const auto& r : orbits.records) EXPECT_EQ(r.orbit_size * r.stabilizer_order, weyl_order(orbits.type));
  }
}

TEST(NTheta, Examples) {
  const auto f4 = build("F4");
  for (const auto& family : enumerate_all_complete(f4))
    for (const auto& m : family.members)
      EXPECT_EQ(n_theta(f4, m), type_invariants(m.type).center_order) << m.type.str();

  for (const std::string name : {"A2", "B3", "G2"}) {
    const auto phi = build(name);
    EXPECT_EQ(n_theta(phi, enumerate_complete(phi, 0).members[0]), 1);
  }

  const auto b2 = build("B2");
  const auto a1a1 = make_subsystem(b2, {b2.index_of({1, 0}), b2.index_of({1, 2}), b2.negative_of(b2.index_of({1, 0})),
                                        b2.negative_of(b2.index_of({1, 2}))});
  EXPECT_THROW(n_theta(b2, a1a1), DomainError);
}

TEST(NTheta, ASeriesPartitionFormula) {
  for (int n = 2; n <= 5; ++n) {
    const auto phi = build("A" + std::to_string(n - 1));
    for (const auto& family : enumerate_all_complete(phi))
      for (const auto& m : family.members) {
        // Θ of partition λ has factors A_{λ_i - 1}; singletons are invisible.
        std::vector<int> parts;
        int covered = 0;
        for (const auto& f : m.type.factors()) {
          parts.push_back(f.rank() + 1);
          covered += f.rank() + 1;
        }
        for (; covered < n; ++covered) parts.push_back(1);
        BigInt product = 1, g = 0;
        for (int p : parts) {
          product *= p;
          g = boost::multiprecision::gcd(g, BigInt(p));
        }
        EXPECT_EQ(n_theta(phi, m), product / g);
      }
  }
}

TEST(NTheta, WInvariant) {
  for (const std::string name : {"B3", "C3", "D4", "B4", "C4"}) {
    const auto phi = build(name);
    for (const auto& family : enumerate_all_complete(phi))
      for (const auto& cls : family.orbit_partition) {
        const BigInt rep = n_theta(phi, family.members[cls.representative]);
        for (auto m : cls.members) EXPECT_EQ(n_theta(phi, family.members[m]), rep);
      }
  }
}

TEST(CountLayers, Examples) {
  const auto f4 = build("F4");
  EXPECT_EQ(count_layers(f4, 4), 1);
  EXPECT_EQ(count_layers(f4, 1), 204);
  EXPECT_EQ(count_layers(f4, 2), 140);
  EXPECT_EQ(count_layers(f4, 0), 72);
  for (const std::string name : {"A3", "B3", "C3", "G2", "D4", "B4", "C4"}) {
    const auto phi = build(name);
    EXPECT_EQ(count_layers(phi, 0), count_points(phi.type())) << name;
  }
}

TEST(Census, F4Records) {
  const auto census = layer_census(build("F4"));
  EXPECT_EQ(census_types(record_of(census, 2, "B2")), (std::map<std::string, BigInt>{{"A1xA1", 1}, {"B2", 1}}));
  EXPECT_EQ(census_types(record_of(census, 1, "B3")),
            (std::map<std::string, BigInt>{{"A1xA1xA1", 3}, {"A3", 1}, {"B3", 1}}));
  EXPECT_EQ(census_types(record_of(census, 1, "C3")), (std::map<std::string, BigInt>{{"A1xB2", 3}, {"C3", 1}}));
  EXPECT_EQ(census_types(record_of(census, 0, "F4")),
            (std::map<std::string, BigInt>{{"A1xA3", 24}, {"A1xC3", 12}, {"A2xA2", 32}, {"B4", 3}, {"F4", 1}}));
}

TEST(Census, SumsMatchCountLayers) {
  for (const std::string name : {"A1", "A3", "B2", "B3", "C3", "G2", "D4", "F4", "A1xA2"}) {
    const auto phi = build(name);
    const auto census = layer_census(phi);
    for (int d = 0; d <= phi.rank(); ++d) EXPECT_EQ(census.layers_at(d), count_layers(phi, d)) << name << d;
    for (const auto& r : census.records) {
      BigInt sum = 0;
      for (const auto& e : r.phi_c_types) {
        EXPECT_GT(e.count, 0);
        sum += e.count;
      }
      EXPECT_EQ(sum, r.layer_count_per_theta);
    }
  }
}

TEST(Poincare, Examples) {
  EXPECT_EQ(poincare(build("F4"), PoincareRoute::ClosedForm).str(), "2153q^4+1260q^3+286q^2+28q+1");
  EXPECT_EQ(poincare(build("A1"), PoincareRoute::ClosedForm).str(), "3q+1");
  EXPECT_EQ(poincare(build("A2"), PoincareRoute::ClosedForm).str(), "10q^2+5q+1");
  EXPECT_EQ(closed_form_weights(build("F4")), (std::vector<BigInt>{1152, 768, 208, 24, 1}));
}

TEST(Poincare, RoutesAgree) {
  for (const std::string name : {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "G2", "F4", "A1xB2"}) {
    const auto phi = build(name);
    const auto closed = poincare(phi, PoincareRoute::ClosedForm);
    const auto layers = poincare(phi, PoincareRoute::LayerSum);
    EXPECT_EQ(closed, layers) << name;
    EXPECT_EQ(closed.coefficient(0), 1);
    EXPECT_LE(closed.degree(), phi.rank());
    BigInt expanded = 0;
    for (const auto& w : closed_form_weights(phi)) expanded += w;
    EXPECT_EQ(closed.coefficient(phi.rank()), expanded) << name;
  }
}

TEST(Poincare, ProductIsMultiplicative) {
  const auto a1 = poincare(build("A1"), PoincareRoute::ClosedForm);
  const auto g2 = poincare(build("G2"), PoincareRoute::ClosedForm);
  EXPECT_EQ(poincare(build("A1xG2"), PoincareRoute::ClosedForm), a1 * g2);
}

TEST(Euler, Examples) {
  EXPECT_EQ(euler_characteristic(build("A1")).closed_form, -2);
  EXPECT_EQ(euler_characteristic(build("A2")).via_poincare, 6);
  const auto f4 = euler_characteristic(build("F4"));
  EXPECT_EQ(f4.via_poincare, 1152);
  EXPECT_TRUE(f4.agree());
  EXPECT_EQ(euler_characteristic(build("D4")).via_poincare, 192);
}

TEST(Euler, LargeTypesUsePoints) {
  for (const std::string name : {"E6", "E7", "E8", "B7", "D6"}) {
    const auto e = euler_characteristic(build(name));
    EXPECT_FALSE(e.poincare_available);
    EXPECT_EQ(e.closed_form, e.via_points) << name;
  }
}

TEST(Euler, Equivariant) {
  EXPECT_EQ(equivariant_euler(CartanType::parse("A1")).k, -1);
  EXPECT_EQ(equivariant_euler(CartanType::parse("F4")).k, 1);
  for (const char* t : {"A2", "B2", "G2", "A1xA1"}) EXPECT_EQ(equivariant_euler(CartanType::parse(t)).k, 1);
}

TEST(DegreeIdentity, AllTypes) {
  for (const auto& name : all_irreducible()) {
    const auto id = verify_degree_identity(TypeSymbol(name[0], std::stoi(name.substr(1))));
    EXPECT_TRUE(id.holds()) << name;
  }
  const auto a1 = verify_degree_identity(TypeSymbol('A', 1));
  ASSERT_EQ(a1.terms.size(), 2u);
  EXPECT_EQ(BigRational(a1.terms[0].exponent_product, a1.terms[0].weyl_order), BigRational(1, 2));
  const auto f4 = verify_degree_identity(TypeSymbol('F', 4));
  EXPECT_EQ(BigRational(f4.terms[0].exponent_product, f4.terms[0].weyl_order), BigRational(385, 1152));
}

TEST(ASeries, Census) {
  EXPECT_EQ(a_series_census(3, 0).layer_count, 3);
  EXPECT_EQ(a_series_census(3, 1).layer_count, 3);
  EXPECT_EQ(a_series_census(3, 2).layer_count, 1);
  const auto t = a_series_census(4, 1).terms;
  ASSERT_EQ(t.size(), 2u);
  EXPECT_EQ(t[0].parts, (std::vector<int>{3, 1}));
  EXPECT_EQ(t[1].parts, (std::vector<int>{2, 2}));
  EXPECT_EQ(t[1].b_lambda, 8);
  EXPECT_EQ(t[1].g_lambda, 2);
  EXPECT_EQ(t[1].layers, 6);
  EXPECT_THROW(a_series_census(1, 0), DomainError);
}

TEST(ASeries, MatchesGeneralMachinery) {
  for (int n = 2; n <= 6; ++n) {
    const auto phi = build("A" + std::to_string(n - 1));
    for (int d = 0; d < n; ++d) EXPECT_EQ(a_series_census(n, d).layer_count, count_layers(phi, d)) << n << d;
  }
  for (int n = 2; n <= 5; ++n)
    EXPECT_EQ(a_series_poincare(n), poincare(build("A" + std::to_string(n - 1)), PoincareRoute::ClosedForm));
  EXPECT_EQ(a_series_poincare(3).str(), "10q^2+5q+1");
}

TEST(ASeries, Partitions) {
  EXPECT_EQ(integer_partitions(4).size(), 5u);
  EXPECT_EQ(integer_partitions(10).size(), 42u);
  EXPECT_EQ(integer_partitions(0).size(), 1u);
}

TEST(Polynomial, Printing) {
  EXPECT_EQ(IntPolynomial().str(), "0");
  EXPECT_EQ(IntPolynomial(std::vector<BigInt>{1, -1, 0, 2}).str(), "2q^3-q+1");
  EXPECT_EQ(IntPolynomial(std::vector<BigInt>{0, 0, 0}).degree(), -1);
  EXPECT_EQ(layer_weight(2, 1).str(), "q^3+2q^2+q");
}
