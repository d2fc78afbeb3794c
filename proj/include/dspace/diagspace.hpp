#pragma once

// Diagram spaces: finitely supported functors from a truncated index category
// to finite simplicial sets, plus natural transformations between them.

#include <dspace/fincat.hpp>
#include <dspace/sset.hpp>

#include <functional>
#include <map>
#include <stdexcept>

namespace dspace {

struct DiagSpace {
  CatId cat = CatId::I;
  int max_degree = 0;
  int dim_cap = 0;
  std::map<Obj, FinSSet> levels;
  std::map<Mor, SimplicialMap> action;  // keyed by non-identity morphisms

  const FinSSet& level(const Obj& o) const { return levels.at(o); }
  SimplicialMap act(const Mor& m) const {
    if (m.is_identity()) return map_identity(level(m.src()));
    return action.at(m);
  }
  FormalSimplex apply(const Mor& m, const FormalSimplex& x) const {
    if (m.is_identity()) return x;
    return map_apply(action.at(m), level(m.dst()), x);
  }
  std::vector<Obj> objects() const { return enumerate_obj(cat, max_degree); }
};

inline DiagSpace make_diagspace(
    CatId cat, int max_degree, int dim_cap,
    const std::function<FinSSet(const Obj&)>& level_fn,
    const std::function<SimplicialMap(const Mor&)>& act_fn) {
  DiagSpace X;
  X.cat = cat;
  X.max_degree = max_degree;
  X.dim_cap = dim_cap;
  for (auto& o : enumerate_obj(cat, max_degree)) X.levels[o] = level_fn(o);
  for (auto& a : X.objects())
    for (auto& b : X.objects())
      for (auto& m : enumerate_mor(a, b))
        if (!m.is_identity()) X.action[m] = act_fn(m);
  return X;
}

// Full functoriality check: action maps are simplicial and compose exactly.
inline void validate_diagspace(const DiagSpace& X) {
  auto objs = X.objects();
  for (auto& [m, f] : X.action) validate_map(f, X.level(m.src()), X.level(m.dst()));
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& f : enumerate_mor(a, b))
        for (auto& c : objs)
          for (auto& g : enumerate_mor(b, c)) {
            SimplicialMap lhs = X.act(compose(g, f));
            SimplicialMap rhs = map_compose(X.act(g), X.level(c), X.act(f));
            if (lhs != rhs)
              throw std::logic_error("DiagSpace: functoriality failed at " +
                                     a.str() + "->" + b.str() + "->" + c.str());
          }
}

// The constant one-point diagram space.
inline DiagSpace constant_point_space(CatId cat, int max_degree, int dim_cap) {
  return make_diagspace(
      cat, max_degree, dim_cap,
      [&](const Obj&) { return sset_point(dim_cap); },
      [&](const Mor& m) {
        (void)m;
        SimplicialMap f;
        f.img.resize(dim_cap + 1);
        f.img[0].push_back(FormalSimplex{0, 0, {0}});
        return f;
      });
}

// A discrete diagram space described by level sizes and element actions.
inline DiagSpace discrete_diagspace(
    CatId cat, int max_degree, int dim_cap,
    const std::function<int(const Obj&)>& size_fn,
    const std::function<int(const Mor&, int)>& elem_fn) {
  return make_diagspace(
      cat, max_degree, dim_cap,
      [&](const Obj& o) { return sset_discrete(size_fn(o), dim_cap); },
      [&](const Mor& m) {
        SimplicialMap f;
        f.img.resize(dim_cap + 1);
        for (int e = 0; e < size_fn(m.src()); ++e)
          f.img[0].push_back(FormalSimplex{0, elem_fn(m, e), {0}});
        return f;
      });
}

// Levelwise disjoint union of diagram spaces over the same index category.
inline DiagSpace diag_disjoint_union(const std::vector<const DiagSpace*>& parts) {
  if (parts.empty()) throw std::invalid_argument("diag_disjoint_union: empty");
  DiagSpace out;
  out.cat = parts[0]->cat;
  out.max_degree = parts[0]->max_degree;
  out.dim_cap = parts[0]->dim_cap;
  std::map<Obj, std::vector<std::vector<int>>> offset;  // per part, per dim
  for (auto& o : parts[0]->objects()) {
    auto& off = offset[o];
    off.assign(parts.size(), std::vector<int>(out.dim_cap + 1, 0));
    std::vector<const FinSSet*> ls;
    for (auto* p : parts) ls.push_back(&p->level(o));
    for (int d = 0; d <= out.dim_cap; ++d) {
      int total = 0;
      for (size_t p = 0; p < parts.size(); ++p) {
        off[p][d] = total;
        total += ls[p]->count(d);
      }
    }
    out.levels[o] = sset_disjoint_union(ls).S;
  }
  for (auto& a : out.objects())
    for (auto& b : out.objects())
      for (auto& m : enumerate_mor(a, b)) {
        if (m.is_identity()) continue;
        SimplicialMap f;
        f.img.resize(out.dim_cap + 1);
        for (int d = 0; d <= out.dim_cap; ++d)
          for (size_t p = 0; p < parts.size(); ++p) {
            SimplicialMap pm = parts[p]->act(m);
            for (int id = 0; id < parts[p]->level(a).count(d); ++id) {
              FormalSimplex t = pm.img[d][id];
              t.base_id += offset.at(b)[p][t.base_dim];
              f.img[d].push_back(t);
            }
          }
        out.action[m] = std::move(f);
      }
  return out;
}

struct DiagMap {
  std::map<Obj, SimplicialMap> at;
};

inline void validate_diagmap(const DiagMap& f, const DiagSpace& X,
                             const DiagSpace& Y) {
  for (auto& o : X.objects()) validate_map(f.at.at(o), X.level(o), Y.level(o));
  for (auto& a : X.objects())
    for (auto& b : X.objects())
      for (auto& m : enumerate_mor(a, b)) {
        SimplicialMap lhs = map_compose(f.at.at(b), Y.level(b), X.act(m));
        SimplicialMap rhs = map_compose(Y.act(m), Y.level(b), f.at.at(a));
        if (lhs != rhs)
          throw std::logic_error("DiagMap: naturality failed at " + a.str() +
                                 "->" + b.str());
      }
}

inline DiagMap diag_identity(const DiagSpace& X) {
  DiagMap f;
  for (auto& [o, lv] : X.levels) f.at[o] = map_identity(lv);
  return f;
}

inline bool diagmap_is_iso(const DiagMap& f, const DiagSpace& X,
                           const DiagSpace& Y) {
  for (auto& o : X.objects())
    if (!is_isomorphism(f.at.at(o), X.level(o), Y.level(o))) return false;
  return true;
}

}  // namespace dspace
