#include "pantsatlas/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "pantsatlas/errors.hpp"

namespace pantsatlas {

namespace {

using json = nlohmann::ordered_json;

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  require(!j.is_discarded(), Errc::parse_error, "malformed JSON");
  return j;
}

// Strict schemas: every listed key must be present, nothing else may appear.
void check_keys(const json& j, const std::vector<std::string>& required,
                const std::vector<std::string>& optional = {}) {
  require(j.is_object(), Errc::parse_error, "expected a JSON object");
  for (const std::string& key : required)
    require(j.contains(key), Errc::parse_error, "missing field \"" + key + "\"");
  for (const auto& item : j.items()) {
    const bool known = std::count(required.begin(), required.end(), item.key()) ||
                       std::count(optional.begin(), optional.end(), item.key());
    require(known, Errc::parse_error, "unknown field \"" + item.key() + "\"");
  }
}

int get_int(const json& j, const char* key) {
  require(j.at(key).is_number_integer(), Errc::parse_error,
          std::string("field \"") + key + "\" must be an integer");
  return j.at(key).get<int>();
}

std::vector<int> get_ints(const json& j, const char* key) {
  require(j.at(key).is_array(), Errc::parse_error,
          std::string("field \"") + key + "\" must be an array");
  std::vector<int> out;
  for (const json& v : j.at(key)) {
    require(v.is_number_integer(), Errc::parse_error,
            std::string("field \"") + key + "\" must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

std::vector<std::pair<int, int>> get_edges(const json& j, const char* key) {
  require(j.at(key).is_array(), Errc::parse_error,
          std::string("field \"") + key + "\" must be an array");
  std::vector<std::pair<int, int>> out;
  for (const json& v : j.at(key)) {
    require(v.is_array() && v.size() == 2 && v[0].is_number_integer() && v[1].is_number_integer(),
            Errc::parse_error, std::string("field \"") + key + "\" must hold [u,v] pairs");
    out.push_back({v[0].get<int>(), v[1].get<int>()});
  }
  return out;
}

json edges_json(const std::vector<std::pair<int, int>>& edges, bool normalize) {
  std::vector<std::pair<int, int>> rows = edges;
  if (normalize) {
    for (auto& [a, b] : rows)
      if (a > b) std::swap(a, b);
    std::sort(rows.begin(), rows.end());
  }
  json arr = json::array();
  for (const auto& [a, b] : rows) arr.push_back(json::array({a, b}));
  return arr;
}

Side side_from(const json& v) {
  require(v.is_string(), Errc::parse_error, "wiggle sides must be strings");
  const std::string s = v.get<std::string>();
  if (s == "above") return Side::Above;
  if (s == "below") return Side::Below;
  fail(Errc::parse_error, "wiggle side must be \"above\" or \"below\"");
}

json curve_json(const CurveCode& c) {
  json j;
  j["n"] = c.n;
  j["s"] = c.s;
  json f = json::object();
  for (const auto& [q, side] : c.f) f[std::to_string(q)] = side == Side::Above ? "above" : "below";
  j["f"] = f;
  return j;
}

CurveCode curve_from(const json& j) {
  check_keys(j, {"n", "s", "f"});
  const int n = get_int(j, "n");
  const std::vector<int> s = get_ints(j, "s");
  require(j.at("f").is_object(), Errc::parse_error, "field \"f\" must be an object");
  std::map<int, Side> f;
  for (const auto& item : j.at("f").items()) {
    int q = 0;
    try {
      size_t used = 0;
      q = std::stoi(item.key(), &used);
      require(used == item.key().size(), Errc::parse_error, "non-numeric wiggle key");
    } catch (const std::exception&) {
      fail(Errc::parse_error, "non-numeric wiggle key \"" + item.key() + "\"");
    }
    f[q] = side_from(item.value());
  }
  if (s.empty()) {
    require(f.empty(), Errc::parse_error, "bare codes cannot carry wiggles");
    require(n >= 0, Errc::parse_error, "negative puncture count");
    CurveCode bare;
    bare.n = n;
    return bare;
  }
  return make_code(n, s, f);
}

const char* flag_label(Flag f) {
  switch (f) {
    case Flag::Theta1: return "theta1";
    case Flag::Theta2: return "theta2";
    case Flag::Theta3: return "theta3";
    case Flag::Omega: return "omega";
  }
  return "?";
}

Flag flag_from(const json& v) {
  require(v.is_string(), Errc::parse_error, "flags must be strings");
  const std::string s = v.get<std::string>();
  if (s == "theta1") return Flag::Theta1;
  if (s == "theta2") return Flag::Theta2;
  if (s == "theta3") return Flag::Theta3;
  if (s == "omega") return Flag::Omega;
  fail(Errc::parse_error, "unknown flag \"" + s + "\"");
}

json concat_json(const ConcatCode& c) {
  json j = curve_json(c.planar);
  json flags = json::array();
  for (Flag f : c.flags) flags.push_back(flag_label(f));
  j["flags"] = flags;
  j["separating"] = c.separating();
  return j;
}

ConcatCode concat_from(const json& j) {
  check_keys(j, {"n", "s", "f", "flags", "separating"});
  json planar = j;
  planar.erase("flags");
  planar.erase("separating");
  ConcatCode out;
  out.planar = curve_from(planar);
  require(j.at("flags").is_array(), Errc::parse_error, "field \"flags\" must be an array");
  for (const json& v : j.at("flags")) out.flags.push_back(flag_from(v));
  require(std::is_sorted(out.flags.begin(), out.flags.end()) &&
              std::adjacent_find(out.flags.begin(), out.flags.end()) == out.flags.end(),
          Errc::parse_error, "flags must be sorted and unique");
  require(out.planar.s.size() >= 2 || !out.flags.empty(), Errc::parse_error,
          "codes without flags must enclose at least two punctures");
  require(j.at("separating").is_boolean(), Errc::parse_error,
          "field \"separating\" must be a boolean");
  require(j.at("separating").get<bool>() == out.separating(), Errc::parse_error,
          "separating bit contradicts the flag multiset");
  return out;
}

json interval_json(const CyclicInterval& a) {
  json j;
  j["n"] = a.n;
  j["i"] = a.i;
  j["j"] = a.j;
  return j;
}

CyclicInterval interval_from(const json& j) {
  check_keys(j, {"n", "i", "j"});
  CyclicInterval a;
  a.n = get_int(j, "n");
  a.i = get_int(j, "i");
  a.j = get_int(j, "j");
  require(a.n >= 3, Errc::parse_error, "intervals need n >= 3");
  require(a.i >= 1 && a.i <= a.n && a.j >= 1 && a.j <= a.n && a.i != a.j, Errc::parse_error,
          "interval endpoints must be distinct vertices in 1..n");
  return a;
}

json index_family_json(const IndexFamily& f) {
  json j;
  j["n"] = f.n;
  j["s"] = f.s;
  j["seed"] = f.seed;
  j["c"] = f.c;
  return j;
}

IndexFamily index_family_from(const json& j) {
  check_keys(j, {"n", "s", "seed", "c"});
  IndexFamily f;
  f.n = get_int(j, "n");
  f.s = get_ints(j, "s");
  require(j.at("seed").is_number_unsigned() || j.at("seed").is_number_integer(),
          Errc::parse_error, "field \"seed\" must be an integer");
  f.seed = j.at("seed").get<uint64_t>();
  require(j.at("c").is_number(), Errc::parse_error, "field \"c\" must be a number");
  f.c = j.at("c").get<double>();
  require(f.n >= 3, Errc::parse_error, "index families need n >= 3");
  for (int i : f.s)
    require(i >= 0 && i < f.n, Errc::parse_error, "index out of range");
  require(std::is_sorted(f.s.begin(), f.s.end()) &&
              std::adjacent_find(f.s.begin(), f.s.end()) == f.s.end(),
          Errc::parse_error, "indices must be sorted and unique");
  // Re-derive the clamp bit the sampler would have set for this n and c.
  f.clamped = f.c > 0 && f.c * std::cbrt(std::log(double(f.n))) / std::cbrt(double(f.n)) > 1;
  return f;
}

}  // namespace

std::string to_json(const CurveCode& c) { return curve_json(c).dump(); }

CurveCode curve_code_from_json(const std::string& text) { return curve_from(parse_text(text)); }

std::string to_json(const CyclicInterval& a) { return interval_json(a).dump(); }

CyclicInterval cyclic_interval_from_json(const std::string& text) {
  return interval_from(parse_text(text));
}

std::string to_json(const ChordGraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = edges_json(g.edges, true);
  return j.dump();
}

ChordGraph chord_graph_from_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"n", "edges"});
  return make_chord_graph(get_int(j, "n"), get_edges(j, "edges"));
}

std::string to_json(const ConcatCode& c) { return concat_json(c).dump(); }

ConcatCode concat_code_from_json(const std::string& text) {
  return concat_from(parse_text(text));
}

std::string to_json(const IndexFamily& f) { return index_family_json(f).dump(); }

IndexFamily index_family_from_json(const std::string& text) {
  return index_family_from(parse_text(text));
}

std::string to_json(const LabelledTree& t) {
  // Parent array rooted at the first internal vertex (or 0 for leaf-only data).
  const int root = t.n_leaves < int(t.adj.size()) ? t.n_leaves : 0;
  std::vector<int> parent(t.adj.size(), -2);
  std::vector<int> stack{root};
  parent[size_t(root)] = -1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : t.adj[size_t(u)])
      if (parent[size_t(w)] == -2) {
        parent[size_t(w)] = u;
        stack.push_back(w);
      }
  }
  json j;
  j["n_leaves"] = t.n_leaves;
  j["parent"] = parent;
  return j.dump();
}

LabelledTree labelled_tree_from_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"n_leaves", "parent"});
  LabelledTree t;
  t.n_leaves = get_int(j, "n_leaves");
  const std::vector<int> parent = get_ints(j, "parent");
  const int V = int(parent.size());
  require(t.n_leaves >= 0 && t.n_leaves <= V, Errc::parse_error, "leaf count out of range");
  t.adj.assign(size_t(V), {});
  int roots = 0;
  for (int v = 0; v < V; ++v) {
    if (parent[size_t(v)] == -1) {
      ++roots;
      continue;
    }
    require(parent[size_t(v)] >= 0 && parent[size_t(v)] < V && parent[size_t(v)] != v,
            Errc::parse_error, "parent index out of range");
    t.adj[size_t(v)].push_back(parent[size_t(v)]);
    t.adj[size_t(parent[size_t(v)])].push_back(v);
  }
  require(roots == 1, Errc::parse_error, "parent array needs exactly one root");
  // V-1 parent links + acyclic reachability = a tree; check connectivity.
  std::vector<char> seen(size_t(V), 0);
  std::vector<int> stack{0};
  if (V > 0) seen[0] = 1;
  int count = V > 0 ? 1 : 0;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w : t.adj[size_t(u)])
      if (!seen[size_t(w)]) {
        seen[size_t(w)] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  require(count == V, Errc::parse_error, "parent array does not describe a tree");
  return t;
}

std::string to_json(const MultiGraph& g) {
  json j;
  j["n"] = g.n;
  j["edges"] = edges_json(g.edges, true);
  return j.dump();
}

MultiGraph multigraph_from_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"n", "edges"});
  MultiGraph g;
  g.n = get_int(j, "n");
  g.edges = get_edges(j, "edges");
  require(g.n >= 1, Errc::parse_error, "graphs need at least one vertex");
  for (auto& [a, b] : g.edges) {
    require(a >= 0 && a < g.n && b >= 0 && b < g.n, Errc::parse_error,
            "edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string to_json(const DualGraph& g) {
  json j;
  j["m"] = g.m;
  j["vertices"] = g.vertices;
  j["edges"] = edges_json(g.edges, false);
  return j.dump();
}

DualGraph dual_graph_from_json(const std::string& text) {
  const json j = parse_text(text);
  check_keys(j, {"m", "vertices", "edges"});
  DualGraph g;
  g.m = get_int(j, "m");
  g.vertices = get_int(j, "vertices");
  g.edges = get_edges(j, "edges");
  require(g.m >= 0 && g.m <= g.vertices, Errc::parse_error, "leaf count out of range");
  for (const auto& [a, b] : g.edges)
    require(a >= 0 && a < g.vertices && b >= 0 && b < g.vertices, Errc::parse_error,
            "edge endpoint out of range");
  return g;
}

std::string to_json(const FamilyFile& f) {
  json j;
  j["kind"] = f.kind;
  j["n"] = f.n;
  if (f.kind == "closed") j["genus"] = f.genus;
  if (f.kind == "labelled_sphere" || f.kind == "closed") {
    json arr = json::array();
    for (const CurveCode& c : f.codes) arr.push_back(curve_json(c));
    j["codes"] = arr;
  }
  if (f.kind == "unlabelled_sphere") {
    require(f.index_meta.has_value(), Errc::bad_parameters,
            "unlabelled families carry index metadata");
    j["index_meta"] = index_family_json(*f.index_meta);
    json arr = json::array();
    for (const CyclicInterval& a : f.intervals) arr.push_back(interval_json(a));
    j["intervals"] = arr;
  }
  if (f.kind == "polygon") j["edges"] = edges_json(f.edges, true);
  if (f.kind == "genus1" || f.kind == "genus2") {
    json arr = json::array();
    for (const ConcatCode& c : f.concat_codes) arr.push_back(concat_json(c));
    j["concat_codes"] = arr;
  }
  return j.dump();
}

FamilyFile family_file_from_json(const std::string& text) {
  const json j = parse_text(text);
  require(j.is_object() && j.contains("kind") && j.at("kind").is_string(), Errc::parse_error,
          "family files need a \"kind\" string");
  FamilyFile f;
  f.kind = j.at("kind").get<std::string>();
  if (f.kind == "labelled_sphere") {
    check_keys(j, {"kind", "n", "codes"});
  } else if (f.kind == "unlabelled_sphere") {
    check_keys(j, {"kind", "n", "index_meta", "intervals"});
  } else if (f.kind == "polygon") {
    check_keys(j, {"kind", "n", "edges"});
  } else if (f.kind == "genus1" || f.kind == "genus2") {
    check_keys(j, {"kind", "n", "concat_codes"});
  } else if (f.kind == "closed") {
    check_keys(j, {"kind", "n", "genus", "codes"});
  } else {
    fail(Errc::parse_error, "unknown family kind \"" + f.kind + "\"");
  }
  f.n = get_int(j, "n");
  if (j.contains("genus")) f.genus = get_int(j, "genus");
  if (j.contains("codes"))
    for (const json& v : j.at("codes")) f.codes.push_back(curve_from(v));
  if (j.contains("intervals"))
    for (const json& v : j.at("intervals")) f.intervals.push_back(interval_from(v));
  if (j.contains("concat_codes"))
    for (const json& v : j.at("concat_codes")) f.concat_codes.push_back(concat_from(v));
  if (j.contains("index_meta")) f.index_meta = index_family_from(j.at("index_meta"));
  if (j.contains("edges")) f.edges = get_edges(j, "edges");
  return f;
}

std::string report_json(uint64_t total, uint64_t realized,
                        const std::vector<std::string>& failures) {
  json j;
  j["total"] = total;
  j["realized"] = realized;
  j["failures"] = failures;
  return j.dump();
}

std::string to_dot(const LabelledTree& t) {
  std::ostringstream out;
  out << "graph tree {\n";
  for (int v = 0; v < int(t.adj.size()); ++v) {
    if (t.is_leaf(v))
      out << "  v" << v << " [label=\"" << v + 1 << "\"];\n";
    else
      out << "  v" << v << " [shape=point];\n";
  }
  for (int v = 0; v < int(t.adj.size()); ++v)
    for (int w : t.adj[size_t(v)])
      if (w > v) out << "  v" << v << " -- v" << w << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const MultiGraph& g) {
  std::ostringstream out;
  out << "graph type {\n";
  for (int v = 0; v < g.n; ++v) out << "  v" << v << " [shape=point];\n";
  std::vector<std::pair<int, int>> rows = g.edges;
  for (auto& [a, b] : rows)
    if (a > b) std::swap(a, b);
  std::sort(rows.begin(), rows.end());
  for (const auto& [a, b] : rows) out << "  v" << a << " -- v" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const DualGraph& g) {
  std::ostringstream out;
  out << "graph dual {\n";
  for (int v = 0; v < g.vertices; ++v) {
    if (g.is_leaf(v))
      out << "  v" << v << " [label=\"" << v + 1 << "\"];\n";
    else
      out << "  v" << v << " [shape=point];\n";
  }
  for (const auto& [a, b] : g.edges)
    out << "  v" << std::min(a, b) << " -- v" << std::max(a, b) << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace pantsatlas
