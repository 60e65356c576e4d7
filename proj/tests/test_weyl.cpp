#include "toric/errors.hpp"
#include "toric/oracle.hpp"
#include "toric/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace toric;

namespace {

RootSystem build(const std::string& s) { return RootSystem::build(CartanType::parse(s)); }

std::size_t image(const RootSystem& phi, const WeylElement& w, const RootVector& root) {
  return w(phi.index_of(root));
}

const std::vector<std::string> kSmallTypes = {"A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3",
                                              "C4", "D4", "F4", "G2"};

}  // namespace

TEST(SimpleReflection, A1) {
  const auto phi = build("A1");
  const auto s = simple_reflection(phi, 1);
  EXPECT_EQ(s(0), phi.negative_of(0));
}

TEST(SimpleReflection, A2) {
  const auto phi = build("A2");
  EXPECT_EQ(image(phi, simple_reflection(phi, 1), {0, 1}), phi.index_of({1, 1}));
}

TEST(SimpleReflection, B2LongShort) {
  // In B2 the first simple root is long and the second short.
  const auto phi = build("C2");
  EXPECT_EQ(image(phi, simple_reflection(phi, 1), {0, 1}), phi.index_of({1, 1}));
  EXPECT_EQ(image(phi, simple_reflection(phi, 2), {1, 0}), phi.index_of({1, 2}));
}

TEST(SimpleReflection, InvolutionAndPairing) {
  for (const auto& name : kSmallTypes) {
    const auto phi = build(name);
    for (int i = 1; i <= phi.rank(); ++i) {
      const auto s = simple_reflection(phi, i);
      EXPECT_TRUE((s * s).is_identity());
      EXPECT_TRUE(preserves_pairing(phi, s));
      EXPECT_EQ(s(phi.simple_root(i - 1)), phi.negative_of(phi.simple_root(i - 1)));
      for (std::size_t r = 0; r < phi.num_roots(); ++r)
        if (phi.pairing(r, phi.simple_root(i - 1)) == 0) EXPECT_EQ(s(r), r);
    }
  }
  EXPECT_THROW(simple_reflection(build("A2"), 0), DomainError);
  EXPECT_THROW(simple_reflection(build("A2"), 3), DomainError);
}

TEST(WeylGroup, EnumerationShortlex) {
  const WeylGroup w(build("B3"));
  const auto elements = w.enumerate(60000);
  ASSERT_EQ(elements.size(), 48u);
  EXPECT_TRUE(elements.front().is_identity());
  for (std::size_t i = 1; i < elements.size(); ++i)
    EXPECT_LE(elements[i - 1].length(w.roots()), elements[i].length(w.roots()));
  std::set<WeylElement> distinct(elements.begin(), elements.end());
  EXPECT_EQ(distinct.size(), elements.size());
}

TEST(WeylGroup, CapabilityError) {
  const WeylGroup w(build("E7"));
  try {
    w.enumerate(60000);
    FAIL() << "expected a capability error";
  } catch (const CapabilityError& e) {
    EXPECT_EQ(e.bound(), "max-group-order");
  }
}

TEST(WeylGroup, Parabolic) {
  const WeylGroup w(build("A3"));
  EXPECT_EQ(w.enumerate_parabolic({1, 3}, 60000).size(), 4u);
  EXPECT_EQ(w.enumerate_parabolic({1, 2}, 60000).size(), 6u);
}

TEST(Orbit, HighestRootA2) {
  const auto phi = build("A2");
  const WeylGroup w(phi);
  std::size_t orbit = 0;
  const auto top = phi.highest_root();
  std::set<std::size_t> seen{top};
  std::vector<std::size_t> queue{top};
  while (!queue.empty()) {
    const auto r = queue.back();
    queue.pop_back();
    for (const auto& g : w.generators())
      if (seen.insert(g(r)).second) queue.push_back(g(r));
  }
  orbit = seen.size();
  EXPECT_EQ(orbit, 6u);
  const auto os = orbit_and_stabilizer(w, RootSet{top});
  EXPECT_EQ(os.orbit_size, 6u);
  EXPECT_EQ(os.stabilizer_order, 1);
}

TEST(Orbit, IdentityPointFixedByW) {
  for (const auto& name : kSmallTypes) {
    const WeylGroup w(build(name));
    const auto os = orbit_and_stabilizer(w, TorusPoint(w.rank()));
    EXPECT_EQ(os.orbit_size, 1u);
    EXPECT_EQ(os.stabilizer_order, w.order());
  }
}

TEST(Orbit, CnPointStabilizers) {
  // Points of C_n with p coordinates equal to -1 in the standard model have
  // stabilizer of order p!(n-p)! 2^n.
  for (int n = 2; n <= 4; ++n) {
    const auto phi = build("C" + std::to_string(n));
    const WeylGroup w(phi);
    std::map<BigInt, int> histogram;
    for (const auto& bp : brute_points(phi).points)
      histogram[orbit_and_stabilizer(w, bp.point).stabilizer_order] += 1;
    BigInt fact_n = 1;
    for (int i = 2; i <= n; ++i) fact_n *= i;
    std::map<BigInt, int> expected;
    for (int p = 0; p <= n; ++p) {
      BigInt fp = 1, fq = 1, binom = 1;
      for (int i = 2; i <= p; ++i) fp *= i;
      for (int i = 2; i <= n - p; ++i) fq *= i;
      binom = fact_n / (fp * fq);
      expected[fp * fq * (BigInt(1) << n)] += static_cast<int>(binom);
    }
    EXPECT_EQ(histogram, expected) << n;
  }
}

TEST(Orbit, SizeTimesStabilizer) {
  for (const auto& name : kSmallTypes) {
    const auto phi = build(name);
    const WeylGroup w(phi);
    for (std::size_t r = 0; r < phi.num_positive(); ++r) {
      const auto os = orbit_and_stabilizer(w, RootSet{r});
      EXPECT_EQ(BigInt(os.orbit_size) * os.stabilizer_order, w.order());
    }
  }
}

TEST(Orbit, StabilizerGeneratorsFix) {
  const auto phi = build("B3");
  const WeylGroup w(phi);
  const RootSet set{0, 1};
  const auto os = orbit_and_stabilizer(w, set);
  for (const auto& g : os.stabilizer_generators) EXPECT_EQ(g.apply(set), set);
}

TEST(Orbit, CapabilityOnTinyLimit) {
  const WeylGroup w(build("F4"));
  Limits tiny;
  tiny.max_group_order = 10;
  try {
    orbit_and_stabilizer(w, RootSet{0}, tiny);
    FAIL();
  } catch (const CapabilityError& e) {
    EXPECT_EQ(e.bound(), "max-group-order");
  }
}

TEST(LongestElement, Examples) {
  {
    const auto phi = build("A1");
    const WeylGroup w(phi);
    EXPECT_EQ(longest_element(w), simple_reflection(phi, 1));
  }
  {
    const auto phi = build("A2");
    const WeylGroup w(phi);
    const auto s1 = simple_reflection(phi, 1), s2 = simple_reflection(phi, 2);
    const auto w0 = longest_element(w);
    EXPECT_EQ(w0, s1 * s2 * s1);
    EXPECT_EQ(w0(phi.simple_root(0)), phi.negative_of(phi.simple_root(1)));
    EXPECT_EQ(w0.length(phi), 3);
  }
  {
    const auto phi = build("C2");
    const auto w0 = longest_element(WeylGroup(phi));
    for (std::size_t r = 0; r < phi.num_roots(); ++r) EXPECT_EQ(w0(r), phi.negative_of(r));
  }
}

TEST(LongestElement, MaximalLength) {
  for (const auto& name : kSmallTypes) {
    const auto phi = build(name);
    const WeylGroup w(phi);
    const auto w0 = longest_element(w);
    EXPECT_EQ(static_cast<std::size_t>(w0.length(phi)), phi.num_positive());
    for (int p = 1; p <= phi.rank(); ++p) {
      const auto wp = longest_element(w, p);
      for (int i = 1; i <= phi.rank(); ++i) {
        const auto a = phi.simple_root(i - 1);
        if (i == p) continue;
        EXPECT_FALSE(phi.is_positive(wp(a)));
      }
    }
  }
}

TEST(Center, IwahoriMatsumoto) {
  for (const auto& name : kSmallTypes) {
    const auto phi = build(name);
    const WeylGroup w(phi);
    const auto g = affine_diagram(phi);
    const auto aut = diagram_automorphisms(g);
    const auto center = center_subgroup(w);
    EXPECT_EQ(BigInt(center.size()), type_invariants(phi.type()).center_order) << name;
    for (const auto& z : center) {
      EXPECT_EQ(z.element(g.vertex_roots[0]), g.vertex_roots[static_cast<std::size_t>(z.vertex)]) << name;
      EXPECT_NE(std::find(aut.automorphisms.begin(), aut.automorphisms.end(), z.diagram_permutation),
                aut.automorphisms.end());
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::set<int> orbit;
      for (const auto& z : center) orbit.insert(z.diagram_permutation[static_cast<std::size_t>(v)]);
      const auto& q = aut.orbit_of(v);
      EXPECT_EQ(std::vector<int>(orbit.begin(), orbit.end()), q) << name << " vertex " << v;
    }
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center_subgroup(WeylGroup(build("A4"))).size(), 5u);
  EXPECT_EQ(center_subgroup(WeylGroup(build("F4"))).size(), 1u);
  const auto c3 = center_subgroup(WeylGroup(build("C3")));
  ASSERT_EQ(c3.size(), 2u);
  EXPECT_EQ(c3[1].diagram_permutation, (std::vector<int>{3, 2, 1, 0}));
}
