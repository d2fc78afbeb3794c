#pragma once

// JSON (de)serialization for the diagram-space types, the graded monoids,
// homology reports, and the fixture corpus (operads / algebras / spans).
// Formats are deterministic: nlohmann::json keeps object keys sorted.

#include <json.hpp>

#include <dspace/diagspace.hpp>
#include <dspace/graded.hpp>
#include <dspace/operadfilt.hpp>
#include <dspace/smith.hpp>
#include <dspace/sset.hpp>

#include <fstream>
#include <memory>
#include <stdexcept>
#include <string>

namespace dspace {

using json = nlohmann::json;

// --- simplicial sets -------------------------------------------------------

inline json simplex_to_json(const FormalSimplex& x) {
  return json{{"base_dim", x.base_dim}, {"base_id", x.base_id}, {"theta", x.theta}};
}

inline FormalSimplex simplex_from_json(const json& j) {
  return FormalSimplex{j.at("base_dim").get<int>(), j.at("base_id").get<int>(),
                       j.at("theta").get<Monotone>()};
}

inline json sset_to_json(const FinSSet& X) {
  json faces = json::array();
  for (int d = 0; d <= X.dim_cap; ++d) {
    json per_dim = json::array();
    if (d >= 1)
      for (int id = 0; id < X.count(d); ++id) {
        json fs = json::array();
        for (int i = 0; i <= d; ++i) fs.push_back(simplex_to_json(X.face(d, id, i)));
        per_dim.push_back(fs);
      }
    faces.push_back(per_dim);
  }
  return json{{"dim_cap", X.dim_cap}, {"simplices", X.counts}, {"faces", faces}};
}

inline FinSSet sset_from_json(const json& j) {
  FinSSet X;
  X.dim_cap = j.at("dim_cap").get<int>();
  X.counts = j.at("simplices").get<std::vector<int>>();
  X.faces.assign(X.dim_cap + 1, {});
  const json& faces = j.at("faces");
  for (int d = 1; d <= X.dim_cap; ++d)
    for (const json& fs : faces.at(d)) {
      std::vector<FormalSimplex> row;
      for (const json& f : fs) row.push_back(simplex_from_json(f));
      X.faces[d].push_back(row);
    }
  validate_sset(X);
  return X;
}

inline json homology_to_json(const FinSSet& X, int up_to) {
  auto h = homology(X, up_to);
  json out = json::array();
  for (int d = 0; d < (int)h.size(); ++d) {
    json tor = json::array();
    for (auto& t : h[d].torsion) tor.push_back(t.str());
    out.push_back(json{{"dim", d}, {"rank", h[d].rank}, {"torsion", tor}});
  }
  return json{{"up_to", up_to}, {"groups", out}};
}

// --- diagram spaces --------------------------------------------------------

inline json mor_to_json(const Mor& m) {
  json j{{"cat", cat_name(m.cat)},
         {"b1", json{{"src", m.b1.src}, {"dst", m.b1.dst}, {"img", m.b1.img}}}};
  if (m.cat == CatId::J) {
    j["b2"] = json{{"src", m.b2.src}, {"dst", m.b2.dst}, {"img", m.b2.img}};
    j["sigma"] = m.sigma;
  }
  return j;
}

inline Mor mor_from_json(const json& j) {
  std::string cat = j.at("cat").get<std::string>();
  auto inj = [](const json& i) {
    return Inj{i.at("src").get<int>(), i.at("dst").get<int>(),
               i.at("img").get<std::vector<int>>()};
  };
  Mor m;
  if (cat == "I") m = mor_I(inj(j.at("b1")));
  else if (cat == "J")
    m = mor_J(inj(j.at("b1")), inj(j.at("b2")), j.at("sigma").get<std::vector<int>>());
  else if (cat == "Pt") m = identity(obj_Pt());
  else throw std::invalid_argument("mor_from_json: unknown category " + cat);
  m.validate();
  return m;
}

inline std::string mor_key(const Mor& m) {
  // a deterministic readable key for JSON objects
  std::string s = m.src().str() + "->" + m.dst().str() + ":[";
  for (int v : m.b1.img) s += std::to_string(v) + " ";
  s += "]";
  if (m.cat == CatId::J) {
    s += "[";
    for (int v : m.b2.img) s += std::to_string(v) + " ";
    s += "]s[";
    for (int v : m.sigma) s += std::to_string(v) + " ";
    s += "]";
  }
  return s;
}

inline json simplicial_map_to_json(const SimplicialMap& f) {
  json img = json::array();
  for (auto& per_dim : f.img) {
    json row = json::array();
    for (auto& x : per_dim) row.push_back(simplex_to_json(x));
    img.push_back(row);
  }
  return json{{"img", img}};
}

inline SimplicialMap simplicial_map_from_json(const json& j) {
  SimplicialMap f;
  for (const json& row : j.at("img")) {
    std::vector<FormalSimplex> per_dim;
    for (const json& x : row) per_dim.push_back(simplex_from_json(x));
    f.img.push_back(per_dim);
  }
  return f;
}

inline json diagspace_to_json(const DiagSpace& X) {
  json levels = json::object();
  for (auto& [o, L] : X.levels) levels[o.str()] = sset_to_json(L);
  json action = json::object();
  for (auto& [m, f] : X.action)
    action[mor_key(m)] =
        json{{"mor", mor_to_json(m)}, {"map", simplicial_map_to_json(f)}};
  return json{{"cat", cat_name(X.cat)},
              {"max_degree", X.max_degree},
              {"dim_cap", X.dim_cap},
              {"levels", levels},
              {"action", action}};
}

inline DiagSpace diagspace_from_json(const json& j) {
  DiagSpace X;
  std::string cat = j.at("cat").get<std::string>();
  if (cat == "I") X.cat = CatId::I;
  else if (cat == "J") X.cat = CatId::J;
  else if (cat == "Pt") X.cat = CatId::Pt;
  else throw std::invalid_argument("diagspace_from_json: unknown category " + cat);
  X.max_degree = j.at("max_degree").get<int>();
  X.dim_cap = j.at("dim_cap").get<int>();
  for (auto& o : X.objects()) {
    auto it = j.at("levels").find(o.str());
    if (it == j.at("levels").end())
      throw std::invalid_argument("diagspace_from_json: missing level " + o.str());
    X.levels[o] = sset_from_json(*it);
  }
  for (auto& [key, entry] : j.at("action").items()) {
    (void)key;
    Mor m = mor_from_json(entry.at("mor"));
    X.action[m] = simplicial_map_from_json(entry.at("map"));
  }
  validate_diagspace(X);
  return X;
}

// --- graded signed monoids -------------------------------------------------

inline json graded_to_json(const GradedSignedMonoid& M) {
  json carriers = json::object(), involution = json::object();
  for (auto& [t, n] : M.card) carriers[std::to_string(t)] = n;
  for (auto& [t, v] : M.neg) involution[std::to_string(t)] = v;
  json table = json::object();
  for (auto& [st, m] : M.mult)
    table[std::to_string(st.first) + "," + std::to_string(st.second)] = m;
  return json{{"degrees", M.degrees()},  {"carriers", carriers},
              {"involution", involution}, {"unit", M.unit},
              {"commutative", M.commutative}, {"multiplication", table}};
}

inline GradedSignedMonoid graded_from_json(const json& j) {
  GradedSignedMonoid M;
  M.unit = j.at("unit").get<int>();
  M.commutative = j.at("commutative").get<bool>();
  for (auto& [k, v] : j.at("carriers").items()) M.card[std::stoi(k)] = v.get<int>();
  for (auto& [k, v] : j.at("involution").items())
    M.neg[std::stoi(k)] = v.get<std::vector<int>>();
  for (auto& [k, v] : j.at("multiplication").items()) {
    auto comma = k.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("graded_from_json: bad table key " + k);
    M.mult[{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))}] =
        v.get<std::vector<std::vector<int>>>();
  }
  return M;
}

inline json graded_map_to_json(const GradedMonoidMap& f) {
  json at = json::object();
  for (auto& [t, v] : f.at) at[std::to_string(t)] = v;
  return json{{"at", at}};
}

inline GradedMonoidMap graded_map_from_json(const json& j) {
  GradedMonoidMap f;
  for (auto& [k, v] : j.at("at").items())
    f.at[std::stoi(k)] = v.get<std::vector<int>>();
  return f;
}

// --- fixture corpus: operads, algebras, spans, log structures --------------

// An operad is stored by explicit tables over its truncation window.
inline json operad_to_json(const SetOperad& op) {
  json act = json::object();
  for (int n = 0; n <= op.arity_cap; ++n)
    for (auto& rho : perms(n)) {
      std::vector<int> row(op.card[n]);
      for (int d = 0; d < op.card[n]; ++d) row[d] = op.act(n, rho, d);
      act[std::to_string(n) + ":" + std::to_string(perm_index(n, rho))] = row;
    }
  json gam = json::array();
  for (int k = 0; k <= op.arity_cap; ++k)
    for (int d = 0; d < op.card[k]; ++d)
      detail::for_each_args(op, k, op.arity_cap,
                            [&](const std::vector<std::pair<int, int>>& args) {
                              json a = json::array();
                              for (auto& [jj, c] : args) a.push_back({jj, c});
                              gam.push_back(json{{"k", k},
                                                 {"d", d},
                                                 {"args", a},
                                                 {"out", op.gam(k, d, args)}});
                            });
  return json{{"name", op.name}, {"arity_cap", op.arity_cap},
              {"card", op.card}, {"unit", op.unit},
              {"act", act},      {"gam", gam}};
}

inline SetOperad operad_from_json(const json& j) {
  SetOperad op;
  op.name = j.at("name").get<std::string>();
  op.arity_cap = j.at("arity_cap").get<int>();
  op.card = j.at("card").get<std::vector<int>>();
  op.unit = j.at("unit").get<int>();
  auto act = std::make_shared<std::map<std::pair<int, int>, std::vector<int>>>();
  for (auto& [k, v] : j.at("act").items()) {
    auto colon = k.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("operad_from_json: bad act key " + k);
    (*act)[{std::stoi(k.substr(0, colon)), std::stoi(k.substr(colon + 1))}] =
        v.get<std::vector<int>>();
  }
  using GamKey = std::tuple<int, int, std::vector<std::pair<int, int>>>;
  auto gam = std::make_shared<std::map<GamKey, int>>();
  for (const json& e : j.at("gam")) {
    std::vector<std::pair<int, int>> args;
    for (const json& a : e.at("args"))
      args.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
    (*gam)[{e.at("k").get<int>(), e.at("d").get<int>(), args}] =
        e.at("out").get<int>();
  }
  op.act = [act](int n, const Inj& rho, int d) {
    return act->at({n, perm_index(n, rho)}).at(d);
  };
  op.gam = [gam](int k, int d, const std::vector<std::pair<int, int>>& args) {
    auto it = gam->find({k, d, args});
    if (it == gam->end())
      throw std::invalid_argument("operad table: composition outside the window");
    return it->second;
  };
  return op;
}

// A finite-set span X1 <-f1- X0 -f2-> X2 with injective legs, stored as
// cardinalities plus image lists.
struct SpanFixture {
  std::string name;
  int x0 = 0, x1 = 0, x2 = 0;
  std::vector<int> f1, f2;  // 0-based images of the elements of x0
};

inline json span_to_json(const SpanFixture& s) {
  return json{{"name", s.name}, {"x0", s.x0}, {"x1", s.x1},
              {"x2", s.x2},     {"f1", s.f1}, {"f2", s.f2}};
}

inline SpanFixture span_from_json(const json& j) {
  SpanFixture s{j.at("name").get<std::string>(), j.at("x0").get<int>(),
                j.at("x1").get<int>(),           j.at("x2").get<int>(),
                j.at("f1").get<std::vector<int>>(),
                j.at("f2").get<std::vector<int>>()};
  auto check_leg = [&](const std::vector<int>& f, int dst, const char* which) {
    if ((int)f.size() != s.x0)
      throw std::invalid_argument("span " + s.name + ": " + which + " has wrong size");
    std::set<int> seen;
    for (int v : f)
      if (v < 0 || v >= dst || !seen.insert(v).second)
        throw std::invalid_argument("span " + s.name + ": " + which +
                                    " is not injective into its target");
  };
  check_leg(s.f1, s.x1, "f1");
  check_leg(s.f2, s.x2, "f2");
  return s;
}

// Algebra fixtures are parametric: they name a construction plus its sizes,
// since algebra structure maps are defined on monad representatives.
struct AlgebraFixture {
  std::string name;
  std::string kind;     // "saturating_sum" | "free"
  std::string operad;   // for kind == "free": "commutativity" | "associativity"
  int arity_cap = 0;
  int top = 0;          // saturating_sum
  int points = 0;       // free: size of the generating set
};

inline json algebra_to_json(const AlgebraFixture& a) {
  json j{{"name", a.name}, {"kind", a.kind}, {"arity_cap", a.arity_cap}};
  if (a.kind == "saturating_sum") j["top"] = a.top;
  else {
    j["operad"] = a.operad;
    j["points"] = a.points;
  }
  return j;
}

inline AlgebraFixture algebra_from_json(const json& j) {
  AlgebraFixture a;
  a.name = j.at("name").get<std::string>();
  a.kind = j.at("kind").get<std::string>();
  a.arity_cap = j.at("arity_cap").get<int>();
  if (a.kind == "saturating_sum") a.top = j.at("top").get<int>();
  else if (a.kind == "free") {
    a.operad = j.at("operad").get<std::string>();
    a.points = j.at("points").get<int>();
  } else
    throw std::invalid_argument("algebra fixture " + a.name + ": unknown kind " + a.kind);
  return a;
}

// A pre-log structure fixture: alpha: M -> R with the expected logification
// verdict recorded alongside.
struct LogFixture {
  std::string name;
  GradedSignedMonoid M, R;
  GradedMonoidMap alpha;
  bool factors_through_units = false;
  bool expect_trivial = false;
};

inline json log_to_json(const LogFixture& f) {
  return json{{"name", f.name},
              {"monoid", graded_to_json(f.M)},
              {"target", graded_to_json(f.R)},
              {"alpha", graded_map_to_json(f.alpha)},
              {"factors_through_units", f.factors_through_units},
              {"expect_trivial", f.expect_trivial}};
}

inline LogFixture log_from_json(const json& j) {
  LogFixture f;
  f.name = j.at("name").get<std::string>();
  f.M = graded_from_json(j.at("monoid"));
  f.R = graded_from_json(j.at("target"));
  f.alpha = graded_map_from_json(j.at("alpha"));
  f.factors_through_units = j.at("factors_through_units").get<bool>();
  f.expect_trivial = j.at("expect_trivial").get<bool>();
  return f;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open fixture file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument("malformed fixture " + path + ": " + e.what());
  }
  return j;
}

}  // namespace dspace
