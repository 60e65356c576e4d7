#include "cli.hpp"

#include "toric/aseries.hpp"
#include "toric/errors.hpp"
#include "toric/layers.hpp"
#include "toric/oracle.hpp"
#include "toric/weyl.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#ifndef TORIC_VERSION
#define TORIC_VERSION "0.0.0"
#endif

namespace toric::cli {

namespace {

using json = nlohmann::json;

const std::map<std::string, std::set<std::string>> kFormats = {
    {"points", {"json", "text", "csv"}},   {"layers", {"json", "text", "csv"}},
    {"census", {"json", "text", "csv"}},   {"poincare", {"json", "text"}},
    {"euler", {"json", "text"}},           {"identity", {"json", "text"}},
    {"poset", {"json", "text", "csv", "dot"}}, {"verify", {"json", "text"}},
};

struct Output {
  json results = json::object();
  std::string text;
  std::string csv;
  std::string dot;
  int status = kOk;
};

std::string s(const BigInt& v) { return v.str(); }
std::string s(std::size_t v) { return std::to_string(v); }

json root_list(const RootSystem& phi, const RootSet& roots) {
  json out = json::array();
  for (auto r : roots) out.push_back(phi.root(r));
  return out;
}

std::string csv_field(const std::string& v) {
  if (v.find_first_of(",\"\n") == std::string::npos) return v;
  std::string q = "\"";
  for (char c : v) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

// ---------------------------------------------------------------- points

Output cmd_points(const CartanType& type) {
  Output o;
  o.results["total"] = s(count_points(type));
  json records = json::array();
  json aut = json::array();
  std::ostringstream text, csv;
  text << "points: " << count_points(type) << "\n";
  text << std::left << std::setw(8) << "factor" << std::setw(8) << "vertex" << std::setw(6) << "mark"
       << std::setw(14) << "point_type" << std::setw(12) << "orbit_size" << std::setw(12) << "|W_p|"
       << std::setw(14) << "|Stab_Aut p|" << "|Stab_Z p|\n";
  csv << "factor,vertex,mark,point_type,orbit_size,stabilizer_order,aut_stabilizer_order,center_stabilizer_order\n";
  for (const auto& f : type.factors()) {
    const auto po = point_orbits(RootSystem::build(CartanType(f)));
    for (const auto& r : po.records) {
      records.push_back({{"factor", f.str()},
                         {"vertex", r.vertex},
                         {"mark", r.mark},
                         {"point_type", r.point_type.str()},
                         {"orbit_size", s(r.orbit_size)},
                         {"stabilizer_order", s(r.stabilizer_order)},
                         {"aut_stabilizer_order", s(r.aut_stabilizer_order)},
                         {"center_stabilizer_order", s(r.center_stabilizer_order)}});
      text << std::left << std::setw(8) << f.str() << std::setw(8) << r.vertex << std::setw(6) << r.mark
           << std::setw(14) << r.point_type.str() << std::setw(12) << r.orbit_size << std::setw(12)
           << r.stabilizer_order << std::setw(14) << r.aut_stabilizer_order << r.center_stabilizer_order << "\n";
      csv << f.str() << ',' << r.vertex << ',' << r.mark << ',' << r.point_type.str() << ',' << r.orbit_size << ','
          << r.stabilizer_order << ',' << r.aut_stabilizer_order << ',' << r.center_stabilizer_order << "\n";
    }
    aut.push_back({{"factor", f.str()}, {"orbits", po.aut_orbits}, {"total", s(po.total_by_aut_orbits)}});
  }
  o.results["records"] = records;
  o.results["aut_orbits"] = aut;
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

// ---------------------------------------------------------------- layers

Output cmd_layers(const RootSystem& phi, const Limits& limits) {
  Output o;
  check_enumerable(phi.type(), limits);
  json counts = json::array();
  std::ostringstream text, csv;
  csv << "dim,count\n";
  BigInt total = 0;
  for (int d = 0; d <= phi.rank(); ++d) {
    const BigInt c = count_layers(phi, d, limits);
    total += c;
    counts.push_back({{"dim", d}, {"count", s(c)}});
    text << "dim " << d << ": " << c << "\n";
    csv << d << ',' << c << "\n";
  }
  text << "total: " << total << "\n";
  o.results["counts"] = counts;
  o.results["total"] = s(total);
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

// ---------------------------------------------------------------- census

Output cmd_census(const RootSystem& phi, const Limits& limits) {
  Output o;
  const auto census = layer_census(phi, limits);
  json records = json::array();
  std::ostringstream text, csv;
  csv << "dim,theta_type,theta_orbit_size,n_theta,phi_c_type,count\n";
  std::vector<BigInt> layers(static_cast<std::size_t>(phi.rank()) + 1, 0);
  std::vector<BigInt> spaces(layers.size(), 0);
  for (const auto& r : census.records) {
    json types = json::array();
    std::string listing;
    for (const auto& e : r.phi_c_types) {
      types.push_back({{"type", e.type.str()}, {"count", s(e.count)}});
      listing += (listing.empty() ? "" : ", ") + e.type.str() + ":" + e.count.str();
      csv << r.d << ',' << r.tangent.type.str() << ',' << r.orbit_size << ',' << r.n_theta << ','
          << e.type.str() << ',' << e.count << "\n";
    }
    records.push_back({{"dim", r.d},
                       {"theta_type", r.tangent.type.str()},
                       {"theta_orbit_size", s(r.orbit_size)},
                       {"n_theta", s(r.n_theta)},
                       {"tangent_weyl_order", s(r.tangent_weyl_order)},
                       {"layers_per_theta", s(r.layer_count_per_theta)},
                       {"representative", root_list(phi, r.tangent.positive_roots(phi))},
                       {"phi_c_types", types}});
    text << "dim " << r.d << "  " << std::left << std::setw(12) << r.tangent.type.str() << " spaces "
         << std::setw(6) << r.orbit_size << " n_theta " << std::setw(4) << r.n_theta << " layers/space "
         << std::setw(4) << r.layer_count_per_theta << " [" << listing << "]\n";
    layers[static_cast<std::size_t>(r.d)] += BigInt(r.orbit_size) * r.layer_count_per_theta;
    spaces[static_cast<std::size_t>(r.d)] += r.orbit_size;
  }
  json by_dim = json::array();
  for (std::size_t d = 0; d < layers.size(); ++d)
    by_dim.push_back({{"dim", d}, {"spaces", s(spaces[d])}, {"layers", s(layers[d])}});
  o.results["records"] = records;
  o.results["summary"] = by_dim;
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

// ---------------------------------------------------------------- poincare

Output cmd_poincare(const RootSystem& phi, const std::string& route, const Limits& limits) {
  Output o;
  std::ostringstream text;
  o.results["route"] = route;
  std::optional<IntPolynomial> closed, layered;
  if (route != "layers") {
    const auto weights = closed_form_weights(phi, limits);
    closed = poincare_from_weights(weights);
    json w = json::array();
    for (const auto& x : weights) w.push_back(s(x));
    o.results["closed_form"] = closed->str();
    o.results["weights"] = w;
    text << "closed-form: " << closed->str() << "\n";
  }
  if (route != "closed") {
    layered = poincare(phi, PoincareRoute::LayerSum, limits);
    o.results["layer_sum"] = layered->str();
    text << "layer-sum: " << layered->str() << "\n";
  }
  const IntPolynomial& p = closed ? *closed : *layered;
  json coeffs = json::array();
  for (int k = 0; k <= p.degree(); ++k) coeffs.push_back(s(p.coefficient(k)));
  o.results["coefficients"] = coeffs;
  o.results["polynomial"] = p.str();
  if (closed && layered) {
    const bool agree = *closed == *layered;
    o.results["routes_agree"] = agree;
    text << "routes agree: " << (agree ? "yes" : "no") << "\n";
    if (!agree) o.status = kMismatch;
  }
  o.text = text.str();
  return o;
}

// ---------------------------------------------------------------- euler

Output cmd_euler(const RootSystem& phi, const Limits& limits) {
  Output o;
  const auto e = euler_characteristic(phi, limits);
  o.results["closed_form"] = s(e.closed_form);
  o.results["via_points"] = s(e.via_points);
  o.results["via_poincare"] = e.poincare_available ? json(s(e.via_poincare)) : json(nullptr);
  o.results["agree"] = e.agree();
  o.results["equivariant_multiple"] = equivariant_euler(phi.type()).k;
  std::ostringstream text;
  text << "closed form (-1)^n |W|: " << e.closed_form << "\n";
  text << "via points: " << e.via_points << "\n";
  text << "via P(-1): " << (e.poincare_available ? e.via_poincare.str() : std::string("unavailable")) << "\n";
  text << "equivariant: " << equivariant_euler(phi.type()).k << " * regular character\n";
  text << "agree: " << (e.agree() ? "yes" : "no") << "\n";
  o.text = text.str();
  if (!e.agree()) o.status = kMismatch;
  return o;
}

// ---------------------------------------------------------------- identity

Output cmd_identity(const CartanType& type) {
  Output o;
  json factors = json::array();
  std::ostringstream text;
  bool all = true;
  for (const auto& f : type.factors()) {
    const auto id = verify_degree_identity(f);
    json terms = json::array();
    text << f.str() << ":\n";
    for (const auto& t : id.terms) {
      terms.push_back({{"vertex", t.vertex},
                       {"type", t.type.str()},
                       {"exponent_product", s(t.exponent_product)},
                       {"weyl_order", s(t.weyl_order)}});
      text << "  vertex " << t.vertex << "  " << std::left << std::setw(12) << t.type.str() << " "
           << to_string(BigRational(t.exponent_product, t.weyl_order)) << "\n";
    }
    text << "  sum = " << to_string(id.sum) << (id.holds() ? "  (holds)" : "  (FAILS)") << "\n";
    factors.push_back({{"type", f.str()}, {"sum", to_string(id.sum)}, {"holds", id.holds()}, {"terms", terms}});
    all = all && id.holds();
  }
  o.results["factors"] = factors;
  o.results["holds"] = all;
  o.text = text.str();
  if (!all) o.status = kMismatch;
  return o;
}

// ---------------------------------------------------------------- poset

Output cmd_poset(const RootSystem& phi, const Limits& limits) {
  Output o;
  const auto poset = build_poset(phi, limits);
  json elements = json::array();
  std::ostringstream text, csv, dot;
  csv << "id,dim,type,tangent_type,base_point\n";
  dot << "digraph layers {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    const auto& e = poset.elements[i];
    elements.push_back({{"id", i},
                        {"dim", e.d},
                        {"type", e.type.str()},
                        {"tangent_type", e.theta.type.str()},
                        {"base_point", e.base_point.str()}});
    text << std::setw(4) << i << "  dim " << e.d << "  " << std::left << std::setw(12) << e.type.str()
         << " tangent " << std::setw(12) << e.theta.type.str() << " base " << e.base_point.str() << std::right
         << "\n";
    csv << i << ',' << e.d << ',' << e.type.str() << ',' << e.theta.type.str() << ',' << csv_field(e.base_point.str())
        << "\n";
    dot << "  n" << i << " [label=\"" << e.type.str() << "@" << e.d << "\"];\n";
  }
  json covers = json::array();
  for (const auto& [lo, hi] : poset.covers) {
    covers.push_back({lo, hi});
    dot << "  n" << lo << " -> n" << hi << ";\n";
  }
  dot << "}\n";
  json counts = json::array();
  for (int d = 0; d <= phi.rank(); ++d) counts.push_back(s(poset.count_at(d)));
  text << "covers: " << poset.covers.size() << "\n";
  o.results["elements"] = elements;
  o.results["covers"] = covers;
  o.results["counts_by_dim"] = counts;
  o.results["partial_order"] = poset.is_partial_order();
  o.text = text.str();
  o.csv = csv.str();
  o.dot = dot.str();
  return o;
}

// ---------------------------------------------------------------- verify

struct Check {
  std::string name;
  std::string status;
  std::string detail;
};

template <class Fn>
Check attempt(const std::string& name, Fn fn) {
  try {
    auto [ok, detail] = fn();
    return {name, ok ? "pass" : "fail", detail};
  } catch (const CapabilityError& e) {
    return {name, "skipped", std::string("bound ") + e.bound() + ": " + e.what()};
  }
}

std::map<CartanType, BigInt> expected_point_types(const CartanType& type) {
  std::map<CartanType, BigInt> acc{{CartanType(), BigInt(1)}};
  for (const auto& f : type.factors()) {
    std::map<CartanType, BigInt> next;
    for (const auto& r : point_orbits(RootSystem::build(CartanType(f))).records)
      for (const auto& [t, c] : acc) next[t * r.point_type] += c * r.orbit_size;
    acc = std::move(next);
  }
  return acc;
}

Output cmd_verify(const RootSystem& phi, const Limits& limits) {
  const CartanType& type = phi.type();
  std::vector<Check> checks;

  checks.push_back(attempt("points.orbit_sums", [&] {
    BigInt product = 1;
    bool ok = true;
    for (const auto& f : type.factors()) {
      const auto po = point_orbits(RootSystem::build(CartanType(f)));
      ok = ok && po.total == po.total_by_aut_orbits;
      product *= po.total;
    }
    ok = ok && product == count_points(type);
    return std::pair{ok, "count_points = " + product.str()};
  }));

  checks.push_back(attempt("weyl.iwahori_matsumoto", [&] {
    bool ok = true;
    for (const auto& f : type.factors()) {
      const auto factor = RootSystem::build(CartanType(f));
      const auto g = affine_diagram(factor);
      const auto aut = diagram_automorphisms(g);
      const auto center = center_subgroup(WeylGroup(factor));
      ok = ok && BigInt(center.size()) == type_invariants(CartanType(f)).center_order;
      for (const auto& z : center) ok = ok && z.element(g.vertex_roots[0]) == g.vertex_roots[static_cast<std::size_t>(z.vertex)];
      for (int v = 0; v < g.num_vertices(); ++v) {
        std::set<int> orbit;
        for (const auto& z : center) orbit.insert(z.diagram_permutation[static_cast<std::size_t>(v)]);
        ok = ok && std::vector<int>(orbit.begin(), orbit.end()) == aut.orbit_of(v);
      }
    }
    return std::pair{ok, std::string("z_p.alpha_0 = alpha_p, |W_Z| = |Z|, orbits match")};
  }));

  checks.push_back(attempt("layers.degree_identity", [&] {
    bool ok = true;
    for (const auto& f : type.factors()) ok = ok && verify_degree_identity(f).holds();
    return std::pair{ok, std::string("sum over vertex deletions = 1")};
  }));

  checks.push_back(attempt("layers.euler", [&] {
    const auto e = euler_characteristic(phi, limits);
    return std::pair{e.agree(), "E = " + e.closed_form.str() + (e.poincare_available ? " (three routes)" : " (two routes)")};
  }));

  checks.push_back(attempt("oracle.brute_points", [&] {
    const auto brute = brute_points(phi, limits);
    std::map<CartanType, BigInt> types;
    for (const auto& p : brute.points) types[p.type] += 1;
    bool ok = BigInt(brute.points.size()) == count_points(type) && types == expected_point_types(type);
    if (phi.irreducible()) {
      const auto po = point_orbits(phi);
      for (const auto& p : brute.points) {
        const auto& rec = po.records.at(static_cast<std::size_t>(p.vertex));
        ok = ok && p.stabilizer_order == rec.stabilizer_order &&
             p.wz_stabilizer_order == rec.stabilizer_order * rec.center_stabilizer_order;
      }
    }
    return std::pair{ok, std::to_string(brute.points.size()) + " points on grid M = " +
                             std::to_string(brute.grid_modulus)};
  }));

  checks.push_back(attempt("layers.poincare_routes", [&] {
    const auto closed = poincare(phi, PoincareRoute::ClosedForm, limits);
    const auto layered = poincare(phi, PoincareRoute::LayerSum, limits);
    return std::pair{closed == layered && closed.coefficient(0) == 1, closed.str()};
  }));

  checks.push_back(attempt("layers.census_sums", [&] {
    const auto census = layer_census(phi, limits);
    bool ok = true;
    for (int d = 0; d <= phi.rank(); ++d) ok = ok && census.layers_at(d) == count_layers(phi, d, limits);
    ok = ok && count_layers(phi, 0, limits) == count_points(type);
    return std::pair{ok, std::to_string(census.records.size()) + " tangent classes"};
  }));

  checks.push_back(attempt("layers.n_theta_invariance", [&] {
    bool ok = true;
    for (const auto& family : enumerate_all_complete(phi, limits))
      for (const auto& cls : family.orbit_partition) {
        const BigInt rep = n_theta(phi, family.members[cls.representative]);
        for (auto m : cls.members) ok = ok && n_theta(phi, family.members[m]) == rep;
      }
    return std::pair{ok, std::string("n_theta constant on W-orbits")};
  }));

  checks.push_back(attempt("oracle.component_count", [&] {
    if (phi.rank() > limits.brute_rank)
      throw CapabilityError("rank exceeds brute-rank", "brute-rank");
    std::size_t instances = 0;
    bool ok = true;
    for (const auto& family : enumerate_all_complete(phi, limits))
      for (const auto& theta : family.members) {
        ++instances;
        ok = ok && component_count(phi, theta) * n_theta(phi, theta) == count_points(theta.type);
      }
    return std::pair{ok, std::to_string(instances) + " subsystems"};
  }));

  if (type.irreducible() && type.factors()[0].family() == 'A') {
    checks.push_back(attempt("layers.a_series", [&] {
      const int n = phi.rank() + 1;
      bool ok = true;
      for (int d = 0; d < n; ++d) ok = ok && a_series_census(n, d).layer_count == count_layers(phi, d, limits);
      ok = ok && a_series_poincare(n) == poincare(phi, PoincareRoute::ClosedForm, limits);
      return std::pair{ok, std::string("partition formulas")};
    }));
  }

  checks.push_back(attempt("oracle.poset", [&] {
    const auto poset = build_poset(phi, limits);
    bool ok = poset.is_partial_order();
    for (int d = 0; d <= phi.rank(); ++d) ok = ok && BigInt(poset.count_at(d)) == count_layers(phi, d, limits);
    std::set<TorusPoint> zero, brute;
    for (const auto& e : poset.elements)
      if (e.d == 0) zero.insert(e.base_point);
    for (const auto& p : brute_points(phi, limits).points) brute.insert(p.point);
    ok = ok && zero == brute;
    return std::pair{ok, std::to_string(poset.elements.size()) + " layers, " + std::to_string(poset.covers.size()) +
                             " covers"};
  }));

  Output o;
  json list = json::array();
  std::ostringstream text;
  bool passed = true;
  for (const auto& c : checks) {
    list.push_back({{"check", c.name}, {"status", c.status}, {"detail", c.detail}});
    std::string tag = c.status == "pass" ? "PASS" : c.status == "fail" ? "FAIL" : "SKIP";
    text << tag << "  " << c.name << "  " << c.detail << "\n";
    passed = passed && c.status != "fail";
  }
  text << (passed ? "all checks passed" : "verification FAILED") << "\n";
  o.results["checks"] = list;
  o.results["passed"] = passed;
  o.text = text.str();
  if (!passed) o.status = kMismatch;
  return o;
}

Output dispatch(const RunConfig& config, const CartanType& type) {
  const auto& cmd = config.command;
  if (cmd == "points") return cmd_points(type);
  if (cmd == "identity") return cmd_identity(type);
  const RootSystem phi = RootSystem::build(type);
  if (cmd == "layers") return cmd_layers(phi, config.limits);
  if (cmd == "census") return cmd_census(phi, config.limits);
  if (cmd == "poincare") return cmd_poincare(phi, config.route, config.limits);
  if (cmd == "euler") return cmd_euler(phi, config.limits);
  if (cmd == "poset") return cmd_poset(phi, config.limits);
  return cmd_verify(phi, config.limits);
}

}  // namespace

const char* tool_version() { return TORIC_VERSION; }

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const auto formats = kFormats.find(config.command);
  if (formats == kFormats.end()) {
    err << "error: unknown command '" << config.command << "'\n";
    return kUsage;
  }
  if (!formats->second.count(config.format)) {
    err << "error: format '" << config.format << "' is not available for " << config.command << "\n";
    return kUsage;
  }
  if (config.route != "closed" && config.route != "layers" && config.route != "both") {
    err << "error: route must be closed, layers or both\n";
    return kUsage;
  }
  const auto& lim = config.limits;
  if (lim.max_group_order == 0 || lim.brute_rank <= 0 || lim.poset_rank <= 0 || lim.enumeration_rank <= 0) {
    err << "error: bounds must be positive\n";
    return kUsage;
  }

  Output result;
  CartanType type;
  try {
    type = CartanType::parse(config.type);
    result = dispatch(config, type);
  } catch (const CapabilityError& e) {
    err << "capability error [" << e.bound() << "]: " << e.what() << "\n";
    return kCapability;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }

  std::string artifact;
  if (config.format == "json") {
    json doc = {{"type", type.str()},
                {"rank", type.rank()},
                {"command", config.command},
                {"results", result.results},
                {"tool_version", tool_version()}};
    artifact = doc.dump(2) + "\n";
  } else if (config.format == "csv") {
    artifact = result.csv;
  } else if (config.format == "dot") {
    artifact = result.dot;
  } else {
    artifact = "type " + type.str() + " (rank " + std::to_string(type.rank()) + ")\n" + result.text;
  }

  if (config.out.empty()) {
    out << artifact;
  } else {
    std::ofstream file(config.out, std::ios::binary);
    if (!file) {
      err << "error: cannot write " << config.out << "\n";
      return kUsage;
    }
    file << artifact;
  }
  return result.status;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Combinatorics of toric arrangements of root systems"};
  app.set_version_flag("--version", tool_version());
  app.require_subcommand(1);

  RunConfig config;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"points", "count points and list W-orbits by affine vertex"},
      {"layers", "number of layers in each dimension"},
      {"census", "layers grouped by tangent subsystem class"},
      {"poincare", "Poincare polynomial of the complement"},
      {"euler", "Euler characteristic"},
      {"identity", "degree identity over affine vertex deletions"},
      {"poset", "explicit poset of layers"},
      {"verify", "run formula against oracle checks"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--type", config.type, "root system type, e.g. F4 or A3xA1")->required();
    sub->add_option("--format", config.format, "json, csv, dot or text")
        ->check(CLI::IsMember({"json", "csv", "dot", "text"}));
    sub->add_option("--out", config.out, "write output to this path");
    sub->add_option("--max-group-order", config.limits.max_group_order, "largest group or orbit enumerated")
        ->check(CLI::PositiveNumber);
    sub->add_option("--brute-rank", config.limits.brute_rank, "largest rank for grid scans")
        ->check(CLI::PositiveNumber);
    sub->add_option("--poset-rank", config.limits.poset_rank, "largest rank for explicit posets")
        ->check(CLI::PositiveNumber);
    sub->add_option("--enumeration-rank", config.limits.enumeration_rank,
                    "largest rank for complete subsystem enumeration")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--allow-e6", config.limits.allow_e6, "enumerate complete subsystems of E6");
    sub->add_option("--route", config.route, "closed, layers or both")
        ->check(CLI::IsMember({"closed", "layers", "both"}));
    sub->callback([&config, name = name] { config.command = name; });
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::CallForVersion& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }
  return run(config, out, err);
}

}  // namespace toric::cli
