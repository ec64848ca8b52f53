#include "shlie3/cli.hpp"

#include <set>
#include <tuple>

namespace shlie3::cli {

using nlohmann::json;

namespace {

struct MapShape {
  int arity, weight;
};

const std::map<std::string, MapShape>& shapes(Kind k) {
  static const std::map<std::string, MapShape> linf{{"l1", {1, -1}}, {"l2", {2, 0}}, {"l3", {3, 1}}, {"l4", {4, 2}}};
  static const std::map<std::string, MapShape> lie{{"l1", {1, -1}}, {"bracket", {2, 0}}, {"J", {3, 1}}, {"mu", {4, 2}}};
  static const std::map<std::string, MapShape> chain{{"l1", {1, -1}}};
  static const std::map<std::string, MapShape> none;
  switch (k) {
    case Kind::linfinity: return linf;
    case Kind::lie3: return lie;
    case Kind::chain: return chain;
    case Kind::simplicial: return none;
  }
  return none;
}

Kind parse_kind(const std::string& s) {
  if (s == "linfinity") return Kind::linfinity;
  if (s == "lie3") return Kind::lie3;
  if (s == "chain") return Kind::chain;
  if (s == "simplicial") return Kind::simplicial;
  throw SpecError("/kind", "unknown kind '" + s + "'");
}

std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

Rational parse_rational(const json& j, const std::string& where) {
  if (!j.is_string()) throw SpecError(where, "rational entries must be strings like \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SpecError(where, e.what());
  }
}

std::size_t parse_size(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw SpecError(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.contains(k)) throw SpecError(where + "/" + k, "unknown key");
}

MultiMap parse_map(const json& arr, const MapShape& shape, const GradedSpace& V, const std::string& where) {
  if (!arr.is_array()) throw SpecError(where, "a map is a list of entries");
  std::vector<RawEntry> raw;
  for (std::size_t e = 0; e < arr.size(); ++e) {
    const std::string at = ptr(where, e);
    const json& entry = arr[e];
    if (!entry.is_object()) throw SpecError(at, "entry must be an object with args and value");
    reject_unknown(entry, {"args", "value"}, at);
    if (!entry.contains("args") || !entry.contains("value")) throw SpecError(at, "entry needs args and value");
    const json& args = entry["args"];
    if (!args.is_array() || args.size() != static_cast<std::size_t>(shape.arity))
      throw SpecError(at + "/args", "expected " + std::to_string(shape.arity) + " arguments");
    RawEntry r;
    int total = shape.weight;
    for (std::size_t a = 0; a < args.size(); ++a) {
      const std::string aat = ptr(at + "/args", a);
      const json& b = args[a];
      if (!b.is_array() || b.size() != 2) throw SpecError(aat, "argument is [degree, index]");
      const std::size_t deg = parse_size(b[0], aat + "/0"), idx = parse_size(b[1], aat + "/1");
      if (!V.has_degree(static_cast<int>(deg)) || idx >= V.dim(static_cast<int>(deg)))
        throw SpecError(aat, "basis index out of range");
      r.args.push_back({static_cast<int>(deg), idx});
      total += static_cast<int>(deg);
    }
    const json& val = entry["value"];
    if (!V.has_degree(total)) throw SpecError(at, "output degree " + std::to_string(total) + " is outside the space");
    if (!val.is_array() || val.size() != V.dim(total))
      throw SpecError(at + "/value", "expected " + std::to_string(V.dim(total)) + " coordinates");
    for (std::size_t c = 0; c < val.size(); ++c) r.value.push_back(parse_rational(val[c], ptr(at + "/value", c)));
    raw.push_back(std::move(r));
  }
  try {
    return build_multimap(shape.arity, shape.weight, V, raw);
  } catch (const std::exception& e) {
    throw SpecError(where, e.what());
  }
}

// face/degeneracy name -> (is_face, level, index)
std::optional<std::tuple<bool, int, int>> matrix_name(const std::string& s) {
  if (s.size() < 4 || (s[0] != 'd' && s[0] != 's')) return std::nullopt;
  const auto us = s.find('_');
  if (us == std::string::npos) return std::nullopt;
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::string a = s.substr(1, us - 1), b = s.substr(us + 1);
    const int n = std::stoi(a, &p1), i = std::stoi(b, &p2);
    if (p1 != a.size() || p2 != b.size() || a.empty() || b.empty() || n < 0 || i < 0) return std::nullopt;
    if (std::to_string(n) != a || std::to_string(i) != b) return std::nullopt;
    return std::tuple{s[0] == 'd', n, i};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Matrix parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) throw SpecError(where, "expected " + std::to_string(rows) + " rows");
  Matrix M(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      throw SpecError(ptr(where, r), "expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) M(r, c) = parse_rational(row[c], ptr(ptr(where, r), c));
  }
  return M;
}

// duplicate object keys are rejected while parsing
json parse_json(const std::string& text) {
  std::vector<std::set<std::string>> seen;
  std::string dup;
  json::parser_callback_t cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) seen.emplace_back();
    else if (ev == json::parse_event_t::object_end) seen.pop_back();
    else if (ev == json::parse_event_t::key) {
      const std::string k = parsed.get<std::string>();
      if (!seen.back().insert(k).second && dup.empty()) dup = k;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text, cb);
  } catch (const json::parse_error& e) {
    throw SpecError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  if (!dup.empty()) throw SpecError("", "duplicate key '" + dup + "'");
  return j;
}

}  // namespace

std::string to_string(Kind k) {
  switch (k) {
    case Kind::linfinity: return "linfinity";
    case Kind::lie3: return "lie3";
    case Kind::chain: return "chain";
    case Kind::simplicial: return "simplicial";
  }
  return "?";
}

AlgebraSpecFile parse_spec(const std::string& text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw SpecError("", "top level must be an object");
  reject_unknown(j, {"kind", "dims", "maps", "name", "description"}, "");
  if (!j.contains("kind") || !j["kind"].is_string()) throw SpecError("/kind", "missing kind");
  AlgebraSpecFile s;
  s.kind = parse_kind(j["kind"].get<std::string>());
  if (!j.contains("dims") || !j["dims"].is_array() || j["dims"].empty()) throw SpecError("/dims", "missing dims");
  for (std::size_t i = 0; i < j["dims"].size(); ++i) s.dims.push_back(parse_size(j["dims"][i], ptr("/dims", i)));
  for (const char* key : {"name", "description"})
    if (j.contains(key)) {
      if (!j[key].is_string()) throw SpecError(std::string("/") + key, "must be a string");
      (key[0] == 'n' ? s.name : s.description) = j[key].get<std::string>();
    }
  const json maps = j.contains("maps") ? j["maps"] : json::object();
  if (!maps.is_object()) throw SpecError("/maps", "maps must be an object");

  if (s.kind == Kind::linfinity || s.kind == Kind::lie3) {
    if (s.dims.size() != 3) throw SpecError("/dims", "three degrees expected");
  } else if (s.kind == Kind::chain) {
    if (s.dims.size() < 2 || s.dims.size() > 3) throw SpecError("/dims", "chain specs have two or three degrees");
  }

  if (s.kind == Kind::simplicial) {
    const int N = static_cast<int>(s.dims.size()) - 1;
    for (const auto& [name, val] : maps.items()) {
      const auto parsed = matrix_name(name);
      if (!parsed) throw SpecError("/maps/" + name, "unknown key");
      const auto [is_face, n, i] = *parsed;
      const bool ok = is_face ? (n >= 1 && n <= N && i <= n) : (n < N && i <= n);
      if (!ok) throw SpecError("/maps/" + name, "operator outside the truncation");
      const std::size_t rows = s.dims[static_cast<std::size_t>(is_face ? n - 1 : n + 1)];
      s.matrices[name] = parse_matrix(val, rows, s.dims[static_cast<std::size_t>(n)], "/maps/" + name);
    }
    for (int n = 0; n <= N; ++n)
      for (int i = 0; i <= n; ++i) {
        if (n >= 1 && !s.matrices.contains("d" + std::to_string(n) + "_" + std::to_string(i)))
          throw SpecError("/maps", "missing face d" + std::to_string(n) + "_" + std::to_string(i));
        if (n < N && !s.matrices.contains("s" + std::to_string(n) + "_" + std::to_string(i)))
          throw SpecError("/maps", "missing degeneracy s" + std::to_string(n) + "_" + std::to_string(i));
      }
    return s;
  }

  const GradedSpace V(s.dims);
  const auto& known = shapes(s.kind);
  for (const auto& [name, val] : maps.items()) {
    const auto it = known.find(name);
    if (it == known.end()) throw SpecError("/maps/" + name, "unknown key");
    s.maps.emplace(name, parse_map(val, it->second, V, "/maps/" + name));
  }
  for (const auto& [name, shape] : known)
    if (!s.maps.contains(name)) s.maps.emplace(name, MultiMap(shape.arity, shape.weight, V));
  return s;
}

namespace {

json render_rational_list(const Coords& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json render_map(const MultiMap& m) {
  json out = json::array();
  for (const auto& e : m.entries()) {
    if (is_zero(e.value)) continue;
    json args = json::array();
    for (const auto& b : e.key) args.push_back({b.degree, b.index});
    out.push_back({{"args", std::move(args)}, {"value", render_rational_list(e.value)}});
  }
  return out;
}

}  // namespace

std::string render_spec(const AlgebraSpecFile& s) {
  // nlohmann::json sorts object keys, which gives the canonical key order
  json j;
  j["kind"] = to_string(s.kind);
  j["dims"] = s.dims;
  if (s.name) j["name"] = *s.name;
  if (s.description) j["description"] = *s.description;
  json maps = json::object();
  for (const auto& [name, m] : s.maps) maps[name] = render_map(m);
  for (const auto& [name, M] : s.matrices) {
    json rows = json::array();
    for (std::size_t r = 0; r < M.rows(); ++r) rows.push_back(render_rational_list(M.row(r)));
    maps[name] = std::move(rows);
  }
  j["maps"] = std::move(maps);
  return j.dump(2) + "\n";
}

namespace {

void require(const AlgebraSpecFile& s, Kind k) {
  if (s.kind != k) throw UsageError("expected a " + to_string(k) + " spec, got " + to_string(s.kind));
}

AlgebraSpecFile base(Kind k, const GradedSpace& V) {
  AlgebraSpecFile s;
  s.kind = k;
  s.dims = V.dims();
  return s;
}

}  // namespace

LInfinityData to_linfinity_data(const AlgebraSpecFile& s) {
  require(s, Kind::linfinity);
  return LInfinityData(GradedSpace(s.dims), s.maps.at("l1"), s.maps.at("l2"), s.maps.at("l3"), s.maps.at("l4"));
}

Lie3Data to_lie3_data(const AlgebraSpecFile& s) {
  require(s, Kind::lie3);
  const GradedSpace V(s.dims);
  return Lie3Data(LinearNCat(2, V, s.maps.at("l1")), s.maps.at("bracket"), s.maps.at("J"), s.maps.at("mu"));
}

LinearNCat to_category(const AlgebraSpecFile& s) {
  require(s, Kind::chain);
  const GradedSpace V(s.dims);
  return LinearNCat(static_cast<int>(s.dims.size()) - 1, V, s.maps.at("l1"));
}

SimplicialVS to_simplicial(const AlgebraSpecFile& s) {
  require(s, Kind::simplicial);
  SimplicialVS S;
  S.trunc = static_cast<int>(s.dims.size()) - 1;
  S.dims = s.dims;
  for (int n = 0; n <= S.trunc; ++n) {
    std::vector<Matrix> faces, degs;
    for (int i = 0; i <= n; ++i) {
      if (n >= 1) faces.push_back(s.matrices.at("d" + std::to_string(n) + "_" + std::to_string(i)));
      if (n < S.trunc) degs.push_back(s.matrices.at("s" + std::to_string(n) + "_" + std::to_string(i)));
    }
    S.faces.push_back(std::move(faces));
    if (n < S.trunc) S.degeneracies.push_back(std::move(degs));
  }
  return S;
}

AlgebraSpecFile spec_of(const LInfinityData& A) {
  AlgebraSpecFile s = base(Kind::linfinity, A.space());
  for (int k = 1; k <= 4; ++k) s.maps.emplace("l" + std::to_string(k), A.l(k));
  return s;
}

AlgebraSpecFile spec_of(const Lie3Data& D) {
  AlgebraSpecFile s = base(Kind::lie3, D.space());
  s.maps.emplace("l1", D.category().differential());
  s.maps.emplace("bracket", D.bracket());
  s.maps.emplace("J", D.jacobiator());
  s.maps.emplace("mu", D.identiator());
  return s;
}

AlgebraSpecFile spec_of(const LinearNCat& L) {
  AlgebraSpecFile s = base(Kind::chain, L.space());
  s.maps.emplace("l1", L.differential());
  return s;
}

AlgebraSpecFile spec_of(const SimplicialVS& S) {
  AlgebraSpecFile s;
  s.kind = Kind::simplicial;
  s.dims = S.dims;
  for (int n = 0; n <= S.trunc; ++n)
    for (int i = 0; i <= n; ++i) {
      if (n >= 1) s.matrices["d" + std::to_string(n) + "_" + std::to_string(i)] = S.d(n, i);
      if (n < S.trunc) s.matrices["s" + std::to_string(n) + "_" + std::to_string(i)] = S.s(n, i);
    }
  return s;
}

}  // namespace shlie3::cli
