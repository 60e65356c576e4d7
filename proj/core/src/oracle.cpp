#include "toric/oracle.hpp"

#include "toric/errors.hpp"
#include "toric/intlat.hpp"
#include "toric/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace toric {

namespace {

std::int64_t to_i64(const BigInt& v) { return static_cast<std::int64_t>(v); }

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// Rank of a small integer matrix by fraction-free elimination.
int small_rank(std::vector<std::vector<std::int64_t>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int r = 0;
  for (std::size_t c = 0; c < cols && r < static_cast<int>(rows.size()); ++c) {
    std::size_t pivot = rows.size();
    for (std::size_t i = static_cast<std::size_t>(r); i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        pivot = i;
        break;
      }
    if (pivot == rows.size()) continue;
    std::swap(rows[static_cast<std::size_t>(r)], rows[pivot]);
    const auto& p = rows[static_cast<std::size_t>(r)];
    for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const std::int64_t a = p[c], b = rows[i][c];
      std::int64_t g = 0;
      for (std::size_t k = 0; k < cols; ++k) {
        rows[i][k] = rows[i][k] * a - p[k] * b;
        g = std::gcd(g, rows[i][k]);
      }
      if (g > 1)
        for (auto& v : rows[i]) v /= g;
    }
    ++r;
  }
  return r;
}

TorusPoint to_point(const std::vector<BigRational>& coords) {
  BigInt den = 1;
  for (const auto& c : coords) den = boost::multiprecision::lcm(den, BigInt(denominator(c)));
  std::vector<std::int64_t> num;
  for (const auto& c : coords) num.push_back(to_i64(numerator(c) * (den / denominator(c))));
  return TorusPoint(std::move(num), to_i64(den));
}

std::int64_t grid_modulus(const RootSystem& phi) {
  BigInt lcm_marks = 1;
  for (const auto& f : phi.type().factors()) {
    for (int a : RootSystem::build(CartanType(f)).marks()) lcm_marks = boost::multiprecision::lcm(lcm_marks, BigInt(a));
  }
  const auto n = static_cast<std::size_t>(phi.rank());
  const BigInt center_exponent = quotient_exponent(IntMatrix::from_rows(phi.cartan(), n));
  return to_i64(lcm_marks * center_exponent);
}

// Odometer over {0..m-1}^n; last coordinate fastest, so points come in lex order.
bool next_grid_point(std::vector<std::int64_t>& x, std::int64_t m) {
  for (std::size_t i = x.size(); i-- > 0;) {
    if (++x[i] < m) return true;
    x[i] = 0;
  }
  return false;
}

}  // namespace

std::vector<BigRational> fundamental_coweight(const RootSystem& phi, int k) {
  const auto n = static_cast<std::size_t>(phi.rank());
  if (k < 0 || static_cast<std::size_t>(k) >= n) throw DomainError("fundamental_coweight: index out of range");
  // ω_k^∨ = Σ c_i α_i^∨ with C^T c = e_k.
  const auto snf = smith_normal_form(IntMatrix::from_rows(phi.cartan(), n).transpose());
  std::vector<BigRational> u(n);
  for (std::size_t i = 0; i < n; ++i)
    u[i] = BigRational(snf.left(i, static_cast<std::size_t>(k)), snf.divisors[i]);
  std::vector<BigRational> c(n, BigRational(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i] += BigRational(snf.right(i, j)) * u[j];
  return c;
}

BruteResult brute_points(const RootSystem& phi, const Limits& limits) {
  const int n = phi.rank();
  if (n > limits.brute_rank)
    throw CapabilityError("rank " + std::to_string(n) + " exceeds brute-rank " + std::to_string(limits.brute_rank),
                          "brute-rank");
  BruteResult out;
  if (n == 0) {
    out.points.push_back({TorusPoint(0), {}, CartanType(), 1, 1, 0});
    return out;
  }
  const std::int64_t m = grid_modulus(phi);
  out.grid_modulus = m;

  const std::size_t np = phi.num_positive();
  std::vector<std::vector<int>> weights(np);
  for (std::size_t i = 0; i < np; ++i) weights[i] = phi.weight_coordinates(i);

  std::vector<TorusPoint> found;
  std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
  do {
    std::vector<std::vector<std::int64_t>> integral;
    for (std::size_t i = 0; i < np; ++i) {
      std::int64_t v = 0;
      for (std::size_t k = 0; k < x.size(); ++k) v += x[k] * weights[i][k];
      if (mod(v, m) == 0) integral.emplace_back(phi.root(i).begin(), phi.root(i).end());
    }
    if (static_cast<int>(integral.size()) >= n && small_rank(std::move(integral)) == n) found.emplace_back(x, m);
  } while (next_grid_point(x, m));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  const WeylGroup w(phi);
  const BigInt w_order = w.order();
  const BigInt z_order = quotient_torsion(IntMatrix::from_rows(phi.cartan(), static_cast<std::size_t>(n)));

  std::vector<std::vector<std::vector<int>>> actions;
  for (const auto& g : w.generators()) actions.push_back(g.coroot_action(phi));
  std::vector<TorusPoint> translations;
  for (int k = 0; k < n; ++k) translations.push_back(to_point(fundamental_coweight(phi, k)));

  std::map<TorusPoint, int> vertex_of;
  if (phi.irreducible()) {
    const auto marks = affine_diagram(phi).marks;
    for (int p = 0; p <= n; ++p) {
      TorusPoint t_p(n);
      if (p > 0) {
        auto c = fundamental_coweight(phi, p - 1);
        for (auto& v : c) v /= marks[static_cast<std::size_t>(p)];
        t_p = to_point(c);
      }
      for (const auto& t : orbit(w, t_p, limits)) vertex_of.emplace(t, p);
    }
  }

  for (const auto& t : found) {
    BrutePoint bp;
    bp.point = t;
    for (std::size_t i = 0; i < phi.num_roots(); ++i)
      if (t.character_trivial(phi.weight_coordinates(i))) bp.roots.push_back(i);
    bp.type = decompose_type(phi, bp.roots);
    bp.stabilizer_order = orbit_and_stabilizer(w, t, limits).stabilizer_order;

    std::set<TorusPoint> seen{t};
    std::deque<TorusPoint> queue{t};
    while (!queue.empty()) {
      const TorusPoint cur = queue.front();
      queue.pop_front();
      auto visit = [&](TorusPoint next) {
        if (seen.insert(next).second) queue.push_back(std::move(next));
      };
      for (const auto& a : actions) visit(cur.transform(a));
      for (const auto& z : translations) visit(cur + z);
      if (seen.size() > limits.max_group_order)
        throw CapabilityError("W x Z orbit exceeds max-group-order", "max-group-order");
    }
    bp.wz_stabilizer_order = w_order * z_order / BigInt(seen.size());

    if (phi.irreducible()) {
      auto it = vertex_of.find(t);
      if (it == vertex_of.end()) throw Error("internal: point outside every vertex orbit");
      bp.vertex = it->second;
    }
    out.points.push_back(std::move(bp));
  }
  return out;
}

BigInt kernel_component_count(const RootSystem& phi, const Subsystem& theta) {
  if (theta.roots.empty()) return 1;
  std::vector<std::vector<int>> rows;
  for (std::size_t i : theta.positive_roots(phi)) rows.push_back(phi.weight_coordinates(i));
  return quotient_torsion(IntMatrix::from_rows(rows, static_cast<std::size_t>(phi.rank())));
}

namespace {

// T / T_Θ has character lattice Sat = span_Q(Θ) ∩ X. Coordinates on it are
// the values of a basis of Sat; a coset x + T_Θ maps to u = S x mod 1.
struct QuotientScan {
  IntMatrix basis;  // S, r x n, rows in weight coordinates
  std::vector<std::vector<std::int64_t>> root_coords;  // positive roots of Θ in the basis of Sat
  std::int64_t modulus = 1;
  std::vector<TorusPoint> points;  // u with rank r worth of integral roots, sorted

  TorusPoint project(const TorusPoint& x) const {
    std::vector<std::int64_t> u(basis.rows(), 0);
    for (std::size_t i = 0; i < basis.rows(); ++i)
      for (std::size_t k = 0; k < basis.cols(); ++k) u[i] += to_i64(basis(i, k)) * x.numerators()[k];
    return TorusPoint(std::move(u), x.denominator());
  }
};

std::int64_t small_det(std::vector<std::vector<std::int64_t>> m) {
  BigInt det = determinant(IntMatrix::from_rows(
      [&] {
        std::vector<std::vector<BigInt>> rows;
        for (const auto& r : m) rows.emplace_back(r.begin(), r.end());
        return rows;
      }(),
      m.size()));
  return to_i64(abs(det));
}

// lcm of |det| over bases of Sat drawn from the roots: every point of the
// quotient arrangement has order dividing it.
std::int64_t quotient_modulus(const std::vector<std::vector<std::int64_t>>& coords, std::size_t r) {
  std::int64_t out = 1;
  std::vector<std::size_t> pick(r);
  auto recurse = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
    if (depth == r) {
      std::vector<std::vector<std::int64_t>> m;
      for (std::size_t i : pick) m.push_back(coords[i]);
      const std::int64_t det = small_det(std::move(m));
      if (det != 0) out = std::lcm(out, det);
      return;
    }
    for (std::size_t i = from; i < coords.size(); ++i) {
      pick[depth] = i;
      self(self, depth + 1, i + 1);
    }
  };
  recurse(recurse, 0, 0);
  return out;
}

QuotientScan scan_quotient(const RootSystem& phi, const Subsystem& theta) {
  if (!theta.complete) throw DomainError("component_count: subsystem is not complete");
  QuotientScan scan;
  const auto n = static_cast<std::size_t>(phi.rank());
  const auto r = static_cast<std::size_t>(theta.rank);
  if (r == 0) {
    scan.basis = IntMatrix(0, n);
    scan.points.emplace_back(0);
    return scan;
  }
  std::vector<std::vector<int>> rows;
  const RootSet positive = theta.positive_roots(phi);
  for (std::size_t i : positive) rows.push_back(phi.weight_coordinates(i));
  const IntMatrix g = IntMatrix::from_rows(rows, n);
  scan.basis = saturate(g).basis;

  // w R = (c L^{-1}, 0) where L S R = (I 0).
  const auto snf = smith_normal_form(scan.basis);
  const IntMatrix wr = g * snf.right;
  for (std::size_t b = 0; b < positive.size(); ++b) {
    std::vector<std::int64_t> c(r, 0);
    for (std::size_t i = 0; i < r; ++i) {
      BigInt v = 0;
      for (std::size_t j = 0; j < r; ++j) v += wr(b, j) * snf.left(j, i);
      c[i] = to_i64(v);
    }
    scan.root_coords.push_back(std::move(c));
  }

  scan.modulus = quotient_modulus(scan.root_coords, r);
  const std::int64_t m = scan.modulus;
  std::vector<std::int64_t> u(r, 0);
  do {
    std::vector<std::vector<std::int64_t>> integral;
    for (const auto& c : scan.root_coords) {
      std::int64_t v = 0;
      for (std::size_t i = 0; i < r; ++i) v += c[i] * u[i];
      if (mod(v, m) == 0) integral.push_back(c);
    }
    if (integral.size() >= r && small_rank(std::move(integral)) == static_cast<int>(r)) scan.points.emplace_back(u, m);
  } while (next_grid_point(u, m));
  std::sort(scan.points.begin(), scan.points.end());
  return scan;
}

}  // namespace

BigInt component_count(const RootSystem& phi, const Subsystem& theta) {
  return BigInt(scan_quotient(phi, theta).points.size());
}

std::size_t LayerPoset::count_at(int d) const {
  return static_cast<std::size_t>(
      std::count_if(elements.begin(), elements.end(), [d](const ExplicitLayer& e) { return e.d == d; }));
}

bool LayerPoset::is_partial_order() const {
  const std::size_t m = elements.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (!leq[i][i]) return false;
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && leq[i][j] && leq[j][i]) return false;
      if (!leq[i][j]) continue;
      for (std::size_t k = 0; k < m; ++k)
        if (leq[j][k] && !leq[i][k]) return false;
    }
  }
  return true;
}

LayerPoset build_poset(const RootSystem& phi, const Limits& limits) {
  const int n = phi.rank();
  if (n > limits.poset_rank)
    throw CapabilityError("rank " + std::to_string(n) + " exceeds poset-rank " + std::to_string(limits.poset_rank),
                          "poset-rank");
  LayerPoset poset;
  poset.type = phi.type();
  poset.rank = n;
  std::vector<const QuotientScan*> scans;
  std::vector<QuotientScan> storage;
  std::vector<std::pair<int, Subsystem>> thetas;
  for (const auto& family : enumerate_all_complete(phi, limits))
    for (const auto& theta : family.members) thetas.emplace_back(family.d, theta);
  storage.reserve(thetas.size());

  for (const auto& [d, theta] : thetas) {
    storage.push_back(scan_quotient(phi, theta));
    const QuotientScan& scan = storage.back();
    const std::int64_t m = scan.modulus;
    const std::set<TorusPoint> wanted(scan.points.begin(), scan.points.end());
    std::map<TorusPoint, TorusPoint> base;
    std::vector<std::int64_t> x(static_cast<std::size_t>(n), 0);
    do {
      TorusPoint t(x, m);
      TorusPoint u = scan.project(t);
      if (wanted.count(u)) base.emplace(std::move(u), std::move(t));
      if (base.size() == wanted.size()) break;
    } while (next_grid_point(x, m));
    if (base.size() != wanted.size()) throw Error("internal: layer without a grid point");
    std::vector<ExplicitLayer> layers;
    for (auto& [u, point] : base) {
      RootSet integral;
      for (auto r : theta.roots)
        if (point.character_trivial(phi.weight_coordinates(r))) integral.push_back(r);
      CartanType type = decompose_type(phi, integral);
      layers.push_back({d, theta, point, u, std::move(integral), std::move(type)});
    }
    std::sort(layers.begin(), layers.end(),
              [](const ExplicitLayer& a, const ExplicitLayer& b) { return a.base_point < b.base_point; });
    for (auto& layer : layers) {
      poset.elements.push_back(std::move(layer));
      scans.push_back(&scan);
    }
  }

  const std::size_t count = poset.elements.size();
  poset.leq.assign(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    const auto& lower = poset.elements[i];
    for (std::size_t j = 0; j < count; ++j) {
      const auto& upper = poset.elements[j];
      if (lower.d > upper.d) continue;
      if (!std::includes(lower.theta.roots.begin(), lower.theta.roots.end(), upper.theta.roots.begin(),
                         upper.theta.roots.end()))
        continue;
      poset.leq[i][j] = scans[j]->project(lower.base_point) == upper.label;
    }
  }
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < count; ++j) {
      if (i == j || !poset.leq[i][j]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < count && covered; ++k)
        if (k != i && k != j && poset.leq[i][k] && poset.leq[k][j]) covered = false;
      if (covered) poset.covers.emplace_back(i, j);
    }
  return poset;
}

}  // namespace toric
