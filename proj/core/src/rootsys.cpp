#include "toric/rootsys.hpp"

#include "toric/errors.hpp"
#include "toric/intlat.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace toric {

namespace {

// d_i with d_i C[i][j] = d_j C[j][i], smallest positive integers per component.
std::vector<int> compute_symmetrizer(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  std::vector<BigRational> d(n, BigRational(0));
  std::vector<int> out(n, 0);
  for (int s = 0; s < n; ++s) {
    if (d[s] != 0) continue;
    std::vector<int> comp{s};
    d[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      const int i = comp[k];
      for (int j = 0; j < n; ++j) {
        if (j == i || c[i][j] == 0) continue;
        BigRational dj = d[i] * c[i][j] / c[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          comp.push_back(j);
        } else if (d[j] != dj) {
          throw DomainError("Cartan matrix is not symmetrizable");
        }
      }
    }
    BigInt lcm_den = 1;
    for (int i : comp) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(d[i]));
    BigInt g = 0;
    for (int i : comp) g = boost::multiprecision::gcd(g, numerator(BigRational(d[i] * lcm_den)));
    for (int i : comp) out[i] = static_cast<int>(numerator(BigRational(d[i] * lcm_den)) / g);
  }
  return out;
}

}  // namespace

RootSystem RootSystem::build(const CartanType& type) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = type.rank();
  rs.cartan_ = cartan_matrix(type);
  rs.symmetrizer_ = compute_symmetrizer(rs.cartan_);
  const int n = rs.rank_;
  const auto& c = rs.cartan_;

  std::vector<RootVector> positive;
  std::map<RootVector, std::size_t> seen;
  for (int i = 0; i < n; ++i) {
    RootVector e(n, 0);
    e[i] = 1;
    seen.emplace(e, positive.size());
    positive.push_back(e);
  }
  for (std::size_t k = 0; k < positive.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      const RootVector beta = positive[k];
      int pairing = 0;
      for (int j = 0; j < n; ++j) pairing += beta[j] * c[i][j];
      // p = length of the alpha_i-string below beta.
      int p = 0;
      RootVector down = beta;
      for (;;) {
        down[i] -= 1;
        if (!seen.count(down)) break;
        ++p;
      }
      if (p - pairing <= 0) continue;
      RootVector up = beta;
      up[i] += 1;
      if (!seen.count(up)) {
        seen.emplace(up, positive.size());
        positive.push_back(up);
      }
    }
  }

  auto height = [](const RootVector& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::sort(positive.begin(), positive.end(), [&](const RootVector& a, const RootVector& b) {
    const int ha = height(a);
    const int hb = height(b);
    if (ha != hb) return ha < hb;
    return a > b;
  });

  rs.roots_ = positive;
  for (const auto& r : positive) {
    RootVector neg(r.size());
    std::transform(r.begin(), r.end(), neg.begin(), [](int x) { return -x; });
    rs.roots_.push_back(neg);
  }
  for (std::size_t i = 0; i < rs.roots_.size(); ++i) rs.index_.emplace(rs.roots_[i], i);

  const auto& d = rs.symmetrizer_;
  rs.coroots_.reserve(rs.roots_.size());
  for (std::size_t idx = 0; idx < rs.roots_.size(); ++idx) {
    const auto& m = rs.roots_[idx];
    int twice_h = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) twice_h += m[i] * m[j] * d[i] * c[i][j];
    const int h = twice_h / 2;
    RootVector co(n);
    for (int j = 0; j < n; ++j) {
      if ((m[j] * d[j]) % h != 0) throw Error("internal: non-integral coroot");
      co[j] = m[j] * d[j] / h;
    }
    rs.coroots_.push_back(co);
  }
  return rs;
}

std::optional<std::size_t> RootSystem::find(const RootVector& coords) const {
  auto it = index_.find(coords);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RootSystem::index_of(const RootVector& coords) const {
  auto idx = find(coords);
  if (!idx) throw DomainError("vector is not a root");
  return *idx;
}

int RootSystem::pairing(std::size_t a, std::size_t b) const {
  const auto& m = roots_.at(a);
  const auto& co = coroots_.at(b);
  int value = 0;
  for (int k = 0; k < rank_; ++k) {
    if (co[k] == 0) continue;
    for (int j = 0; j < rank_; ++j) value += m[j] * co[k] * cartan_[k][j];
  }
  return value;
}

std::vector<int> RootSystem::weight_coordinates(std::size_t root) const {
  const auto& m = roots_.at(root);
  std::vector<int> w(rank_, 0);
  for (int k = 0; k < rank_; ++k)
    for (int j = 0; j < rank_; ++j) w[k] += m[j] * cartan_[k][j];
  return w;
}

int RootSystem::height(std::size_t i) const {
  const auto& r = roots_.at(i);
  return std::accumulate(r.begin(), r.end(), 0);
}

std::size_t RootSystem::highest_root() const {
  if (!irreducible()) throw DomainError("highest root requires an irreducible root system");
  return num_positive() - 1;
}

std::vector<int> RootSystem::marks() const { return roots_.at(highest_root()); }

AffineDiagram affine_diagram(const RootSystem& phi) {
  if (!phi.irreducible())
    throw DomainError("affine diagrams are defined per irreducible factor; got " +
                      phi.type().str());
  const int n = phi.rank();
  AffineDiagram g;
  g.vertex_roots.push_back(phi.negative_of(phi.highest_root()));
  for (int i = 0; i < n; ++i) g.vertex_roots.push_back(phi.simple_root(i));
  g.marks.push_back(1);
  for (int a : phi.marks()) g.marks.push_back(a);

  g.extended_cartan.assign(n + 1, std::vector<int>(n + 1, 0));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      g.extended_cartan[i][j] = phi.pairing(g.vertex_roots[j], g.vertex_roots[i]);

  const auto& a = g.extended_cartan;
  for (int u = 0; u <= n; ++u)
    for (int v = u + 1; v <= n; ++v) {
      if (a[u][v] == 0) continue;
      const int uv = std::abs(a[u][v]);
      const int vu = std::abs(a[v][u]);
      g.edges.push_back({u, v, std::max(uv, vu), uv > vu ? u : (vu > uv ? v : -1)});
    }
  return g;
}

CartanType delete_vertex(const AffineDiagram& diagram, int p) {
  const int size = diagram.num_vertices();
  if (p < 0 || p >= size) throw DomainError("vertex index out of range");
  std::vector<int> keep;
  for (int v = 0; v < size; ++v)
    if (v != p) keep.push_back(v);
  CartanMatrix sub(keep.size(), std::vector<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      sub[i][j] = diagram.extended_cartan[keep[i]][keep[j]];
  return identify_type(sub);
}

std::size_t DiagramAutomorphisms::stabilizer_order(int vertex) const {
  return static_cast<std::size_t>(std::count_if(
      automorphisms.begin(), automorphisms.end(),
      [vertex](const std::vector<int>& perm) { return perm[vertex] == vertex; }));
}

const std::vector<int>& DiagramAutomorphisms::orbit_of(int vertex) const {
  for (const auto& orbit : orbits)
    if (std::find(orbit.begin(), orbit.end(), vertex) != orbit.end()) return orbit;
  throw DomainError("vertex index out of range");
}

namespace {

void extend_automorphism(const AffineDiagram& g, std::vector<int>& perm, std::vector<bool>& used,
                         std::vector<std::vector<int>>& out) {
  const auto& a = g.extended_cartan;
  const int size = g.num_vertices();
  const int v = static_cast<int>(std::count_if(perm.begin(), perm.end(), [](int x) { return x >= 0; }));
  if (v == size) {
    out.push_back(perm);
    return;
  }
  for (int img = 0; img < size; ++img) {
    if (used[img] || g.marks[img] != g.marks[v]) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u)
      ok = a[v][u] == a[img][perm[u]] && a[u][v] == a[perm[u]][img];
    if (!ok) continue;
    perm[v] = img;
    used[img] = true;
    extend_automorphism(g, perm, used, out);
    perm[v] = -1;
    used[img] = false;
  }
}

}  // namespace

DiagramAutomorphisms diagram_automorphisms(const AffineDiagram& diagram) {
  const int size = diagram.num_vertices();
  DiagramAutomorphisms result;
  std::vector<int> perm(size, -1);
  std::vector<bool> used(size, false);
  extend_automorphism(diagram, perm, used, result.automorphisms);

  std::vector<int> orbit_id(size, -1);
  for (int v = 0; v < size; ++v) {
    if (orbit_id[v] >= 0) continue;
    std::vector<int> orbit;
    for (const auto& p : result.automorphisms) {
      if (orbit_id[p[v]] < 0) {
        orbit_id[p[v]] = static_cast<int>(result.orbits.size());
        orbit.push_back(p[v]);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    result.orbits.push_back(orbit);
  }
  return result;
}

TypeInvariants type_invariants(const CartanType& type) {
  TypeInvariants inv;
  inv.degrees = degrees(type);
  inv.weyl_order = weyl_order(type);
  inv.exponent_product = exponent_product(type);
  const auto c = cartan_matrix(type);
  inv.center_order = quotient_torsion(IntMatrix::from_rows(c, c.size()));
  return inv;
}

}  // namespace toric
