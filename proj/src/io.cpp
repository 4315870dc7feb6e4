#include "badcycle/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "badcycle/rational.hpp"

namespace badcycle {

Rational parse_rational(const std::string& text) {
  auto fail = [&]() -> Rational { throw InputError("not a rational number: '" + text + "'"); };
  auto parse_int = [&](const std::string& s) -> std::int64_t {
    if (s.empty()) fail();
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) fail();
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
    }
    try {
      return std::stoll(s);
    } catch (const std::exception&) {
      fail();
    }
    return 0;
  };
  if (auto slash = text.find('/'); slash != std::string::npos) {
    std::int64_t q = parse_int(text.substr(slash + 1));
    if (q == 0) throw InputError("zero denominator in '" + text + "'");
    return Rational(parse_int(text.substr(0, slash)), q);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    std::string whole = text.substr(0, dot);
    std::string frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 15) fail();
    bool negative = !whole.empty() && whole[0] == '-';
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : parse_int(whole);
    std::int64_t f = parse_int(frac);
    if (frac[0] == '-' || frac[0] == '+') fail();
    Rational value = Rational(w < 0 ? -w : w) + Rational(f, scale);
    return negative ? -value : value;
  }
  return Rational(parse_int(text));
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

namespace {

void require_fields(const Json& j, const std::string& what,
                    std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw InputError(what + ": expected an object");
  std::set<std::string> allowed;
  for (const char* f : required) {
    allowed.insert(f);
    if (!j.contains(f)) throw InputError(what + ": missing field '" + f + "'");
  }
  for (const char* f : optional) allowed.insert(f);
  for (const auto& [key, value] : j.items()) {
    if (!allowed.contains(key)) throw InputError(what + ": unknown field '" + key + "'");
  }
}

const Json& array_field(const Json& j, const char* name, const std::string& what) {
  const Json& a = j.at(name);
  if (!a.is_array()) throw InputError(what + ": field '" + name + "' must be an array");
  return a;
}

std::string as_string(const Json& j, const std::string& what) {
  if (!j.is_string()) throw InputError(what + ": expected a string");
  return j.get<std::string>();
}

long as_integer(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw InputError(what + ": expected an integer");
  return j.get<long>();
}

std::vector<std::string> string_array(const Json& j, const std::string& what) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(as_string(x, what));
  return out;
}

StateId state_ref(const Machine& m, const Json& j, const std::string& what) {
  auto name = as_string(j, what);
  auto s = m.find_state(name);
  if (!s) throw InputError(what + ": unknown state '" + name + "'");
  return *s;
}

StatePosition element_ref(const Machine& m, const Json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2) throw InputError(what + ": expected [state, position]");
  StateId s = state_ref(m, j[0], what);
  long i = as_integer(j[1], what);
  if (i < 1 || i > m.k()) throw InputError(what + ": position " + std::to_string(i) +
                                           " outside [1," + std::to_string(m.k()) + "]");
  return {s, static_cast<Position>(i)};
}

Json element_json(const Machine& m, StatePosition sp) {
  return Json::array({m.state_name(sp.state), sp.position});
}

}  // namespace

Machine machine_from_json(const Json& j) {
  const std::string what = "machine";
  require_fields(j, what, {"k", "states", "transitions", "bad"}, {"deterministic"});
  long k = as_integer(j.at("k"), what + ".k");
  if (k < 1 || k > 64) throw InputError(what + ": k must lie in [1,64]");
  Machine m(static_cast<int>(k), string_array(array_field(j, "states", what), what + ".states"));
  for (const auto& t : array_field(j, "transitions", what)) {
    require_fields(t, what + ".transitions[]", {"from", "i", "j", "to"});
    StateId from = state_ref(m, t.at("from"), what + ".transitions[].from");
    long i = as_integer(t.at("i"), what + ".transitions[].i");
    long jj = as_integer(t.at("j"), what + ".transitions[].j");
    if (i < 1 || i > k || jj < 1 || jj > k) {
      throw InputError(what + ": transition position outside [1," + std::to_string(k) + "]");
    }
    if (!t.at("to").is_array()) throw InputError(what + ": transitions[].to must be an array");
    for (const auto& to : t.at("to")) {
      m.add_transition(from, static_cast<Position>(i), static_cast<Position>(jj),
                       state_ref(m, to, what + ".transitions[].to"));
    }
  }
  for (const auto& b : array_field(j, "bad", what)) {
    if (!b.is_array() || b.size() != 2) throw InputError(what + ": bad pairs need two states");
    m.add_bad(state_ref(m, b[0], what + ".bad"), state_ref(m, b[1], what + ".bad"));
  }
  if (j.contains("deterministic")) {
    if (!j.at("deterministic").is_boolean()) {
      throw InputError(what + ": deterministic must be a boolean");
    }
    m.declare_deterministic(j.at("deterministic").get<bool>());
  }
  return m;
}

Json machine_to_json(const Machine& m) {
  Json j;
  j["k"] = m.k();
  j["states"] = m.states();
  Json transitions = Json::array();
  for (const auto& [key, targets] : m.transitions()) {
    if (targets.empty()) continue;
    Json to = Json::array();
    for (StateId t : targets) to.push_back(m.state_name(t));
    transitions.push_back(
        Json{{"from", m.state_name(key.from)}, {"i", key.i}, {"j", key.j}, {"to", to}});
  }
  j["transitions"] = transitions;
  Json bad = Json::array();
  for (const auto& [s, t] : m.bad()) bad.push_back(Json::array({m.state_name(s), m.state_name(t)}));
  j["bad"] = bad;
  if (m.declared_deterministic()) j["deterministic"] = *m.declared_deterministic();
  return j;
}

DirectedHypergraph hypergraph_from_json(const Json& j) {
  const std::string what = "hypergraph";
  require_fields(j, what, {"k", "vertices", "edges"});
  long k = as_integer(j.at("k"), what + ".k");
  if (k < 1 || k > 64) throw InputError(what + ": k must lie in [1,64]");
  auto names = string_array(array_field(j, "vertices", what), what + ".vertices");
  std::set<std::string> unique(names.begin(), names.end());
  if (unique.size() != names.size()) throw InputError(what + ": repeated vertex name");
  DirectedHypergraph h(static_cast<int>(k), names);
  for (const auto& e : array_field(j, "edges", what)) {
    if (!e.is_array()) throw InputError(what + ": edges must be arrays");
    std::vector<VertexId> edge;
    for (const auto& v : e) {
      auto name = as_string(v, what + ".edges");
      auto id = h.find_vertex(name);
      if (!id) throw InputError(what + ": unknown vertex '" + name + "'");
      edge.push_back(*id);
    }
    h.add_edge(std::move(edge));
  }
  return h;
}

Json hypergraph_to_json(const DirectedHypergraph& h) {
  Json j;
  j["k"] = h.k();
  j["vertices"] = h.vertices();
  Json edges = Json::array();
  for (const auto& e : h.edges()) {
    Json row = Json::array();
    for (VertexId v : e) row.push_back(h.vertex_name(v));
    edges.push_back(row);
  }
  j["edges"] = edges;
  return j;
}

CompatibleOrder order_from_json(const Json& j, const Machine& m) {
  if (!j.is_array()) throw InputError("order: expected an array");
  CompatibleOrder order;
  for (const auto& x : j) order.push_back(element_ref(m, x, "order"));
  return order;
}

Json order_to_json(const CompatibleOrder& order, const Machine& m) {
  Json j = Json::array();
  for (const auto& sp : order) j.push_back(element_json(m, sp));
  return j;
}

OrderSystem order_system_from_json(const Json& j, const Machine& m) {
  const std::string what = "order system";
  require_fields(j, what, {"classes", "partial", "linear"});
  OrderSystem os;
  os.carrier_size = m.num_states() * static_cast<std::size_t>(m.k());
  for (const auto& cls : array_field(j, "classes", what)) {
    if (!cls.is_array()) throw InputError(what + ": classes must be arrays");
    std::vector<std::size_t> members;
    for (const auto& x : cls) {
      auto sp = element_ref(m, x, what);
      members.push_back(carrier_index(sp.state, sp.position, m.k()));
    }
    os.classes.push_back(std::move(members));
  }
  auto index = [&](const Json& x) {
    long v = as_integer(x, what + " class index");
    if (v < 0) throw InputError(what + ": negative class index");
    return static_cast<std::size_t>(v);
  };
  for (const auto& p : array_field(j, "partial", what)) {
    if (!p.is_array() || p.size() != 2) throw InputError(what + ": partial entries are pairs");
    os.partial.emplace_back(index(p[0]), index(p[1]));
  }
  for (const auto& c : array_field(j, "linear", what)) os.linear.push_back(index(c));
  return os;
}

Json order_system_to_json(const OrderSystem& os, const Machine& m) {
  Json j;
  Json classes = Json::array();
  for (const auto& cls : os.classes) {
    Json row = Json::array();
    for (std::size_t x : cls) row.push_back(element_json(m, carrier_element(x, m.k())));
    classes.push_back(row);
  }
  j["classes"] = classes;
  Json partial = Json::array();
  for (const auto& [a, b] : os.partial) partial.push_back(Json::array({a, b}));
  j["partial"] = partial;
  j["linear"] = os.linear;
  return j;
}

Json witness_to_json(const BadCycleWitness& w, const DirectedHypergraph& h,
                     const Machine& m) {
  Json j;
  Json vertices = Json::array();
  for (VertexId v : w.cycle.vertices) vertices.push_back(h.vertex_name(v));
  j["vertices"] = vertices;
  j["edges"] = w.cycle.edges;
  Json states = Json::array();
  for (StateId s : w.states) states.push_back(m.state_name(s));
  j["states"] = states;
  return j;
}

BadCycleWitness witness_from_json(const Json& j, const DirectedHypergraph& h,
                                  const Machine& m) {
  const std::string what = "witness";
  require_fields(j, what, {"vertices", "edges", "states"});
  BadCycleWitness w;
  for (const auto& v : array_field(j, "vertices", what)) {
    auto name = as_string(v, what + ".vertices");
    auto id = h.find_vertex(name);
    if (!id) throw InputError(what + ": unknown vertex '" + name + "'");
    w.cycle.vertices.push_back(*id);
  }
  for (const auto& e : array_field(j, "edges", what)) {
    long id = as_integer(e, what + ".edges");
    if (id < 0 || static_cast<std::size_t>(id) >= h.num_edges()) {
      throw InputError(what + ": edge index out of range");
    }
    w.cycle.edges.push_back(static_cast<EdgeId>(id));
  }
  for (const auto& s : array_field(j, "states", what)) {
    w.states.push_back(state_ref(m, s, what + ".states"));
  }
  return w;
}

Relation relation_from_json(const Json& j) {
  const std::string what = "relation";
  require_fields(j, what, {"n", "pairs"});
  long n = as_integer(j.at("n"), what + ".n");
  if (n < 1 || n > 8) throw InputError(what + ": n must lie in [1,8]");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& p : array_field(j, "pairs", what)) {
    if (!p.is_array() || p.size() != 2) throw InputError(what + ": pairs need two elements");
    long a = as_integer(p[0], what + ".pairs");
    long b = as_integer(p[1], what + ".pairs");
    if (a < 1 || a > n || b < 1 || b > n) throw InputError(what + ": element outside [1,n]");
    pairs.emplace_back(static_cast<int>(a - 1), static_cast<int>(b - 1));
  }
  return make_relation(static_cast<int>(n), pairs);
}

Json relation_to_json(const Relation& r) {
  Json j;
  j["n"] = r.n;
  Json pairs = Json::array();
  for (const auto& [a, b] : r.pairs()) pairs.push_back(Json::array({a + 1, b + 1}));
  j["pairs"] = pairs;
  return j;
}

CnfInstance cnf_from_json(const Json& j) {
  const std::string what = "cnf";
  require_fields(j, what, {"variables", "clauses"});
  CnfInstance phi;
  phi.variables = string_array(array_field(j, "variables", what), what + ".variables");
  for (const auto& v : phi.variables) {
    if (v.empty() || v[0] == '-') throw InputError(what + ": bad variable name '" + v + "'");
  }
  for (const auto& c : array_field(j, "clauses", what)) {
    if (!c.is_array() || c.size() != 3) {
      throw InputError(what + ": every clause needs exactly three literals");
    }
    std::array<Literal, 3> clause;
    for (std::size_t n = 0; n < 3; ++n) {
      auto text = as_string(c[n], what + ".clauses");
      bool negated = !text.empty() && text[0] == '-';
      std::string name = negated ? text.substr(1) : text;
      auto it = std::find(phi.variables.begin(), phi.variables.end(), name);
      if (it == phi.variables.end()) throw InputError(what + ": unknown variable '" + name + "'");
      clause[n] = {static_cast<std::size_t>(it - phi.variables.begin()), negated};
    }
    phi.clauses.push_back(clause);
  }
  validate_cnf(phi);
  return phi;
}

Json cnf_to_json(const CnfInstance& phi) {
  Json j;
  j["variables"] = phi.variables;
  Json clauses = Json::array();
  for (const auto& c : phi.clauses) {
    Json row = Json::array();
    for (const auto& l : c) row.push_back((l.negated ? "-" : "") + phi.variables[l.variable]);
    clauses.push_back(row);
  }
  j["clauses"] = clauses;
  return j;
}

CnfInstance parse_cnf(const std::string& text) {
  auto first = std::find_if(text.begin(), text.end(),
                            [](unsigned char c) { return !std::isspace(c); });
  if (first != text.end() && *first == '{') return cnf_from_json(parse_json(text, "cnf"));
  std::istringstream in(text);
  return parse_dimacs(in);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(origin + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) { return parse_json(read_text_file(path), path); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace badcycle
