#include "toric/types.hpp"

#include "toric/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace toric {

namespace {

void check_rank(char family, int rank) {
  auto fail = [&](const std::string& constraint) {
    throw DomainError("invalid type " + std::string(1, family) + std::to_string(rank) + ": " +
                      constraint);
  };
  switch (family) {
    case 'A':
      if (rank < 1) fail("A requires rank >= 1");
      break;
    case 'B':
    case 'C':
      if (rank < 1) fail(std::string(1, family) + " requires rank >= 2");
      break;
    case 'D':
      if (rank < 3) fail("D requires rank >= 3");
      break;
    case 'E':
      if (rank < 6 || rank > 8) fail("E requires rank in {6,7,8}");
      break;
    case 'F':
      if (rank != 4) fail("F requires rank 4");
      break;
    case 'G':
      if (rank != 2) fail("G requires rank 2");
      break;
    default:
      throw DomainError(std::string("unknown family '") + family + "'");
  }
}

}  // namespace

TypeSymbol::TypeSymbol(char family, int rank) : family_(family), rank_(rank) {
  check_rank(family, rank);
  if ((family_ == 'B' || family_ == 'C') && rank_ == 1) family_ = 'A';
  if (family_ == 'C' && rank_ == 2) family_ = 'B';
  if (family_ == 'D' && rank_ == 3) family_ = 'A';
}

std::string TypeSymbol::str() const { return std::string(1, family_) + std::to_string(rank_); }

CartanType::CartanType(std::vector<TypeSymbol> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

CartanType::CartanType(TypeSymbol single) : factors_{single} {}

CartanType CartanType::parse(std::string_view text) {
  std::vector<TypeSymbol> factors;
  std::size_t pos = 0;
  auto malformed = [&] { throw DomainError("malformed type string '" + std::string(text) + "'"); };
  while (pos < text.size()) {
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (family < 'A' || family > 'G') malformed();
    ++pos;
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos || pos - start > 3) malformed();
    factors.emplace_back(family, std::stoi(std::string(text.substr(start, pos - start))));
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X' && text[pos] != '*') malformed();
    ++pos;
    if (pos == text.size()) malformed();
  }
  if (factors.empty()) malformed();
  return CartanType(std::move(factors));
}

int CartanType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

std::string CartanType::str() const {
  if (factors_.empty()) return "A0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += 'x';
    out += factors_[i].str();
  }
  return out;
}

CartanType CartanType::operator*(const CartanType& other) const {
  auto all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return CartanType(std::move(all));
}

CartanMatrix cartan_matrix(const TypeSymbol& t) {
  const int n = t.rank();
  CartanMatrix c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (t.family()) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;
      break;
    case 'G':  // alpha_1 short
      c[0][1] = -3;
      c[1][0] = -1;
      break;
  }
  return c;
}

CartanMatrix cartan_matrix(const CartanType& t) {
  const int n = t.rank();
  CartanMatrix c(n, std::vector<int>(n, 0));
  int offset = 0;
  for (const auto& f : t.factors()) {
    const auto block = cartan_matrix(f);
    for (int i = 0; i < f.rank(); ++i)
      for (int j = 0; j < f.rank(); ++j) c[offset + i][offset + j] = block[i][j];
    offset += f.rank();
  }
  return c;
}

std::vector<int> degrees(const TypeSymbol& t) {
  const int n = t.rank();
  std::vector<int> d;
  switch (t.family()) {
    case 'A':
      for (int i = 2; i <= n + 1; ++i) d.push_back(i);
      break;
    case 'B':
    case 'C':
      for (int i = 1; i <= n; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i < n; ++i) d.push_back(2 * i);
      d.push_back(n);
      break;
    case 'E':
      if (n == 6) d = {2, 5, 6, 8, 9, 12};
      if (n == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (n == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'G':
      d = {2, 6};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

std::vector<int> degrees(const CartanType& t) {
  std::vector<int> d;
  for (const auto& f : t.factors()) {
    auto part = degrees(f);
    d.insert(d.end(), part.begin(), part.end());
  }
  return d;
}

BigInt weyl_order(const CartanType& t) {
  BigInt order = 1;
  for (int d : degrees(t)) order *= d;
  return order;
}

BigInt exponent_product(const CartanType& t) {
  BigInt product = 1;
  for (int d : degrees(t)) product *= d - 1;
  return product;
}

namespace {

[[noreturn]] void not_finite(const std::string& why) {
  throw DomainError("Cartan matrix is not of finite type: " + why);
}

TypeSymbol identify_component(const CartanMatrix& c, const std::vector<int>& verts) {
  const int r = static_cast<int>(verts.size());
  if (r == 1) return {'A', 1};

  std::vector<std::vector<int>> adj(r);
  int edges = 0;
  int triple = 0;
  std::vector<std::pair<int, int>> doubles;
  for (int a = 0; a < r; ++a)
    for (int b = a + 1; b < r; ++b) {
      const int prod = c[verts[a]][verts[b]] * c[verts[b]][verts[a]];
      if (prod == 0) continue;
      if (prod > 3) not_finite("bond of weight " + std::to_string(prod));
      adj[a].push_back(b);
      adj[b].push_back(a);
      ++edges;
      if (prod == 2) doubles.emplace_back(a, b);
      if (prod == 3) ++triple;
    }
  if (edges != r - 1) not_finite("Dynkin graph has a cycle");
  if (triple) {
    if (r != 2) not_finite("triple bond in a component of rank > 2");
    return {'G', 2};
  }
  if (doubles.size() > 1) not_finite("more than one double bond");

  std::vector<int> branch;
  for (int v = 0; v < r; ++v) {
    if (adj[v].size() > 3) not_finite("vertex of degree > 3");
    if (adj[v].size() == 3) branch.push_back(v);
  }

  if (doubles.empty()) {
    if (branch.empty()) return {'A', r};
    if (branch.size() > 1) not_finite("more than one branch vertex");
    std::vector<int> arms;
    for (int start : adj[branch[0]]) {
      int len = 1;
      int prev = branch[0];
      int cur = start;
      while (adj[cur].size() == 2) {
        const int next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return {'D', r};
    if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', r};
    not_finite("unknown branched diagram");
  }

  if (!branch.empty()) not_finite("double bond on a branched diagram");
  if (r == 2) return {'B', 2};
  auto [u, v] = doubles.front();
  const bool u_end = adj[u].size() == 1;
  const bool v_end = adj[v].size() == 1;
  if (!u_end && !v_end) {
    if (r == 4) return {'F', 4};
    not_finite("interior double bond outside rank 4");
  }
  const int leaf = u_end ? u : v;
  const int other = u_end ? v : u;
  // The short root's row carries the -2.
  const bool leaf_short = c[verts[leaf]][verts[other]] == -2;
  return {leaf_short ? 'B' : 'C', r};
}

}  // namespace

CartanType identify_type(const CartanMatrix& c) {
  const int n = static_cast<int>(c.size());
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) throw DomainError("Cartan matrix is not square");
    if (c[i][i] != 2) not_finite("diagonal entry != 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (c[i][j] > 0) not_finite("positive off-diagonal entry");
      if ((c[i][j] == 0) != (c[j][i] == 0)) not_finite("asymmetric zero pattern");
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<TypeSymbol> factors;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> verts{s};
    comp[s] = s;
    for (std::size_t k = 0; k < verts.size(); ++k)
      for (int j = 0; j < n; ++j)
        if (comp[j] < 0 && c[verts[k]][j] != 0) {
          comp[j] = s;
          verts.push_back(j);
        }
    std::sort(verts.begin(), verts.end());
    factors.push_back(identify_component(c, verts));
  }
  return CartanType(std::move(factors));
}

}  // namespace toric
