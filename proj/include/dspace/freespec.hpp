#pragma once

// Symbolic free symmetric spectra on spheres: the contravariant action of J,
// the strong symmetric monoidal structure, and wedge-summand bookkeeping.
// Spheres are never realized; a sphere S^{m2} ^ S^{p-gamma} is represented by
// its finite index set and all maps are pure bijection algebra.

#include <dspace/diagspace.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

namespace dspace {

struct FreeSpec {
  int m1 = 0;  // subscript
  int m2 = 0;  // sphere exponent
  auto operator<=>(const FreeSpec&) const = default;
  std::string str() const {
    return "F_" + std::to_string(m1) + "(S^" + std::to_string(m2) + ")";
  }
};

// Index elements: {0, j} is the j-th smash coordinate of the sphere factor,
// {1, c} is the element c of the level complement p - gamma.
using IndexElem = std::pair<int, int>;
using IndexBij = std::map<IndexElem, IndexElem>;

// One wedge summand of the evaluation: gamma -> gamma o beta1 with the index
// bijection from n2 # (p - gamma) to m2 # (p - gamma beta1).
struct SummandMap {
  Inj src;  // gamma
  Inj dst;  // gamma o beta1
  IndexBij bij;
  auto operator<=>(const SummandMap&) const = default;
};

struct FreeSpecMap {
  FreeSpec source, target;  // the spectrum map goes source -> target
  Mor generator;            // J-morphism target-object -> source-object
  std::map<int, std::vector<SummandMap>> eval;  // per spectrum degree

  const SummandMap& at(int p, const Inj& gamma) const {
    for (auto& s : eval.at(p))
      if (s.src == gamma) return s;
    throw std::out_of_range("FreeSpecMap: no summand for this index");
  }
};

inline std::set<IndexElem> summand_index_set(int sphere, const Inj& gamma) {
  std::set<IndexElem> out;
  for (int j = 1; j <= sphere; ++j) out.insert({0, j});
  for (int c : complement(gamma)) out.insert({1, c});
  return out;
}

// Structural invariant: every stored bijection is a total bijection between
// the declared index sets, and summands enumerate I(n1, p) exactly.
inline void validate_freespec_map(const FreeSpecMap& F) {
  for (auto& [p, summands] : F.eval) {
    std::set<Inj> seen;
    for (auto& s : summands) {
      if (s.src.src != F.source.m1 || s.src.dst != p ||
          s.dst.src != F.target.m1 || s.dst.dst != p)
        throw std::logic_error("freespec: summand indices out of shape");
      if (!seen.insert(s.src).second)
        throw std::logic_error("freespec: duplicate summand");
      auto dom = summand_index_set(F.source.m2, s.src);
      auto cod = summand_index_set(F.target.m2, s.dst);
      std::set<IndexElem> hit;
      for (auto& [x, y] : s.bij) {
        if (!dom.count(x) || !cod.count(y) || !hit.insert(y).second)
          throw std::logic_error("freespec: index map is not a bijection");
      }
      if (s.bij.size() != dom.size() || hit.size() != cod.size())
        throw std::logic_error("freespec: index map is not total");
    }
    if ((int)summands.size() != (int)enumerate_inj(F.source.m1, p).size())
      throw std::logic_error("freespec: summand census wrong");
  }
}

// The contravariant action of f = (beta1, beta2, sigma): (m1,m2) -> (n1,n2),
// a map F_{n1}(S^{n2}) -> F_{m1}(S^{m2}).  The summand indexed by gamma goes
// to the summand indexed by gamma o beta1; a sphere coordinate of n2 pulls
// back through beta2 if hit, otherwise travels through sigma^{-1} into the
// complement of beta1 and then through gamma into the level complement.
inline FreeSpecMap induced_map(const Mor& f, int p_max) {
  if (f.cat != CatId::J)
    throw std::invalid_argument("induced_map: J-morphism expected");
  FreeSpecMap F;
  F.source = FreeSpec{f.dst().n1, f.dst().n2};
  F.target = FreeSpec{f.src().n1, f.src().n2};
  F.generator = f;
  auto comp_b1 = complement(f.b1);
  std::map<int, int> through;  // j in n2 - beta2  ->  c in n1 - beta1
  for (size_t i = 0; i < comp_b1.size(); ++i) through[f.sigma[i]] = comp_b1[i];
  for (int p = 0; p <= p_max; ++p)
    for (auto& gamma : enumerate_inj(F.source.m1, p)) {
      SummandMap s;
      s.src = gamma;
      s.dst = compose(gamma, f.b1);
      for (int j = 1; j <= F.source.m2; ++j) {
        int i = 0;
        for (int t = 1; t <= f.b2.src; ++t)
          if (f.b2(t) == j) i = t;
        if (i > 0)
          s.bij[{0, j}] = {0, i};
        else
          s.bij[{0, j}] = {1, gamma(through.at(j))};
      }
      for (int c : complement(gamma)) s.bij[{1, c}] = {1, c};
      F.eval[p].push_back(std::move(s));
    }
  validate_freespec_map(F);
  return F;
}

// Spectrum-level composition: first gs, then fs.
inline FreeSpecMap compose_freespec(const FreeSpecMap& gs,
                                    const FreeSpecMap& fs) {
  if (gs.target != fs.source)
    throw std::invalid_argument("compose_freespec: mismatch");
  FreeSpecMap out;
  out.source = gs.source;
  out.target = fs.target;
  out.generator = compose(gs.generator, fs.generator);
  for (auto& [p, summands] : gs.eval) {
    if (!fs.eval.count(p)) continue;
    for (auto& s1 : summands) {
      const SummandMap& s2 = fs.at(p, s1.dst);
      SummandMap s;
      s.src = s1.src;
      s.dst = s2.dst;
      for (auto& [x, y] : s1.bij) s.bij[x] = s2.bij.at(y);
      out.eval[p].push_back(std::move(s));
    }
  }
  return out;
}

inline bool freespec_equal(const FreeSpecMap& A, const FreeSpecMap& B,
                           std::vector<std::string>* wit = nullptr) {
  bool ok = A.source == B.source && A.target == B.target;
  if (!ok && wit) wit->push_back("endpoints differ");
  std::set<int> ps;
  for (auto& [p, v] : A.eval) ps.insert(p);
  for (auto& [p, v] : B.eval) ps.insert(p);
  for (int p : ps) {
    if (!A.eval.count(p) || !B.eval.count(p)) {
      ok = false;
      if (wit) wit->push_back("degree " + std::to_string(p) + ": missing");
      continue;
    }
    for (auto& sa : A.eval.at(p)) {
      const SummandMap* sb = nullptr;
      for (auto& s : B.eval.at(p))
        if (s.src == sa.src) sb = &s;
      if (!sb || sa.dst != sb->dst || sa.bij != sb->bij) {
        ok = false;
        if (wit) {
          std::string w = "degree " + std::to_string(p) + ", summand (";
          for (int v : sa.src.img) w += std::to_string(v) + " ";
          w += "): ";
          w += !sb ? "no counterpart"
                   : (sa.dst != sb->dst ? "summand images differ"
                                        : "index bijections differ");
          wit->push_back(w);
        }
      }
    }
  }
  return ok;
}

struct FreespecReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

// Functoriality: (g o f)^* = f^* o g^* degreewise, including index bijections.
inline FreespecReport compose_and_check(const Mor& g, const Mor& f, int p_max) {
  FreespecReport rep;
  FreeSpecMap lhs = induced_map(compose(g, f), p_max);
  FreeSpecMap rhs = compose_freespec(induced_map(g, p_max),
                                     induced_map(f, p_max));
  rep.ok = freespec_equal(lhs, rhs, &rep.witnesses);
  return rep;
}

// The restriction of the functor along the diagonal I -> J.
inline FreeSpecMap restrict_to_I(const Mor& f, int p_max) {
  return induced_map(diagonal_functor(f), p_max);
}

// ---------------------------------------------------------------------------
// The monoidal structure.  In spectrum degree p the smash product is a
// colimit over cells (k, k', alpha: k # k' -> p); a cell summand is a pair
// (beta: a1 -> k, beta': b1 -> k') and the structure iso sends it to the
// wedge summand indexed by alpha o (beta # beta').
//
// Cell index elements: {0,j} sphere of a, {1,j} sphere of b, {2,c} element of
// k - beta, {3,c} element of k' - beta', {4,e} element of p - alpha.

struct SmashCell {
  int k = 0, kp = 0;
  Inj alpha;
  auto operator<=>(const SmashCell&) const = default;
};

struct MonoidalSummand {
  SmashCell cell;
  Inj beta, betap;
  Inj delta;  // alpha o (beta # betap)
  IndexBij bij;
};

struct MonoidalIso {
  FreeSpec a, b;
  int p = 0;
  std::vector<MonoidalSummand> summands;
};

inline MonoidalIso monoidal_iso(FreeSpec a, FreeSpec b, int p) {
  MonoidalIso out;
  out.a = a;
  out.b = b;
  out.p = p;
  for (int k = 0; k <= p; ++k)
    for (int kp = 0; k + kp <= p; ++kp)
      for (auto& alpha : enumerate_inj(k + kp, p)) {
        SmashCell cell{k, kp, alpha};
        for (auto& beta : enumerate_inj(a.m1, k))
          for (auto& betap : enumerate_inj(b.m1, kp)) {
            MonoidalSummand s;
            s.cell = cell;
            s.beta = beta;
            s.betap = betap;
            s.delta = compose(alpha, concat(beta, betap));
            for (int j = 1; j <= a.m2; ++j) s.bij[{0, j}] = {0, j};
            for (int j = 1; j <= b.m2; ++j) s.bij[{1, j}] = {0, a.m2 + j};
            for (int c : complement(beta)) s.bij[{2, c}] = {1, alpha(c)};
            for (int c : complement(betap)) s.bij[{3, c}] = {1, alpha(k + c)};
            for (int e : complement(alpha)) s.bij[{4, e}] = {1, e};
            out.summands.push_back(std::move(s));
          }
      }
  return out;
}

struct MonoidalReport {
  bool well_defined = true;  // constant on colimit classes
  bool bijective = true;     // classes <-> target summands
  int classes = 0;
  std::vector<std::string> witnesses;
  bool ok() const { return well_defined && bijective; }
};

// Verify that the summand assignment descends to a bijection from the
// colimit classes of cell summands to the wedge summands I(a1 + b1, p).
inline MonoidalReport check_monoidal_iso(const MonoidalIso& iso) {
  MonoidalReport rep;
  std::map<std::tuple<SmashCell, Inj, Inj>, int> id;
  for (auto& s : iso.summands)
    id[{s.cell, s.beta, s.betap}] = (int)id.size();
  detail::UnionFind uf(id.size());
  // cell morphisms (gamma, gamma'): alpha = alpha'' o (gamma # gamma')
  for (auto& s : iso.summands)
    for (int l = s.cell.k; l <= iso.p; ++l)
      for (int lp = s.cell.kp; l + lp <= iso.p; ++lp)
        for (auto& alpha2 : enumerate_inj(l + lp, iso.p))
          for (auto& gamma : enumerate_inj(s.cell.k, l))
            for (auto& gammap : enumerate_inj(s.cell.kp, lp)) {
              if (compose(alpha2, concat(gamma, gammap)) != s.cell.alpha)
                continue;
              auto it = id.find({SmashCell{l, lp, alpha2},
                                 compose(gamma, s.beta),
                                 compose(gammap, s.betap)});
              if (it == id.end()) continue;
              uf.unite(id.at({s.cell, s.beta, s.betap}), it->second);
            }
  std::map<int, Inj> cls_delta;
  for (auto& s : iso.summands) {
    int r = uf.find(id.at({s.cell, s.beta, s.betap}));
    auto [it, fresh] = cls_delta.try_emplace(r, s.delta);
    if (!fresh && !(it->second == s.delta)) {
      rep.well_defined = false;
      rep.witnesses.push_back("summand image not constant on a class");
    }
  }
  rep.classes = (int)cls_delta.size();
  std::set<Inj> images;
  for (auto& [r, d] : cls_delta)
    if (!images.insert(d).second) {
      rep.bijective = false;
      rep.witnesses.push_back("two classes share a wedge summand");
    }
  if ((int)images.size() != (int)enumerate_inj(iso.a.m1 + iso.b.m1, iso.p).size()) {
    rep.bijective = false;
    rep.witnesses.push_back("class count differs from the summand census");
  }
  return rep;
}

// Naturality in both J-variables: conjugating the levelwise action of
// (f, g) through the iso equals the action of f # g on the free spectrum,
// checked on every cell summand (so the iso is also class-consistent at the
// index level).
inline FreespecReport check_monoidal_naturality(const Mor& f, const Mor& g,
                                                int p_max) {
  FreespecReport rep;
  FreeSpec a{f.dst().n1, f.dst().n2}, b{g.dst().n1, g.dst().n2};
  FreeSpec a2{f.src().n1, f.src().n2}, b2{g.src().n1, g.src().n2};
  FreeSpecMap big = induced_map(concat(f, g), p_max);
  FreeSpecMap fst = induced_map(f, p_max);
  FreeSpecMap gst = induced_map(g, p_max);
  auto fail = [&](int p, const std::string& why) {
    rep.ok = false;
    rep.witnesses.push_back("degree " + std::to_string(p) + ": " + why);
  };
  for (int p = 0; p <= p_max; ++p) {
    MonoidalIso iso = monoidal_iso(a, b, p);
    for (auto& s : iso.summands) {
      const SummandMap& route1 = big.at(p, s.delta);
      const SummandMap& sf = fst.at(s.cell.k, s.beta);
      const SummandMap& sg = gst.at(s.cell.kp, s.betap);
      // the image cell summand and its iso leg
      MonoidalSummand t;
      t.cell = s.cell;
      t.beta = sf.dst;
      t.betap = sg.dst;
      t.delta = compose(s.cell.alpha, concat(t.beta, t.betap));
      for (int j = 1; j <= a2.m2; ++j) t.bij[{0, j}] = {0, j};
      for (int j = 1; j <= b2.m2; ++j) t.bij[{1, j}] = {0, a2.m2 + j};
      for (int c : complement(t.beta)) t.bij[{2, c}] = {1, s.cell.alpha(c)};
      for (int c : complement(t.betap))
        t.bij[{3, c}] = {1, s.cell.alpha(s.cell.k + c)};
      for (int e : complement(s.cell.alpha)) t.bij[{4, e}] = {1, e};
      if (!(route1.dst == t.delta)) {
        fail(p, "summand images differ");
        continue;
      }
      // route 2 on an index element x of the big-source summand delta
      for (auto& [x, y1] : route1.bij) {
        // pull x back through the iso leg of s
        IndexElem cx{-1, -1};
        for (auto& [u, v] : s.bij)
          if (v == x) cx = u;
        // act by (f*, g*) inside the cell
        IndexElem cy;
        if (cx.first == 0 || cx.first == 2) {
          IndexElem z = sf.bij.at({cx.first == 0 ? 0 : 1, cx.second});
          cy = {z.first == 0 ? 0 : 2, z.second};
        } else if (cx.first == 1 || cx.first == 3) {
          IndexElem z = sg.bij.at({cx.first == 1 ? 0 : 1, cx.second});
          cy = {z.first == 0 ? 1 : 3, z.second};
        } else {
          cy = cx;
        }
        if (t.bij.at(cy) != y1) fail(p, "index bijections differ");
      }
    }
  }
  return rep;
}

// Compatibility with the symmetry: twisting the cell and applying the (b,a)
// iso equals post-composing the iso with the map that reindexes a wedge
// summand delta to delta o chi and swaps the two sphere blocks.
inline FreespecReport check_monoidal_symmetry(FreeSpec a, FreeSpec b,
                                              int p_max) {
  FreespecReport rep;
  Mor chi = symmetry(Obj{CatId::I, b.m1, 0}, Obj{CatId::I, a.m1, 0});
  for (int p = 0; p <= p_max; ++p) {
    MonoidalIso ab = monoidal_iso(a, b, p);
    MonoidalIso ba = monoidal_iso(b, a, p);
    for (auto& s : ab.summands) {
      Inj twisted_delta = compose(s.delta, chi.b1);
      // the twisted cell summand on the (b, a) side
      Mor cell_chi = symmetry(Obj{CatId::I, s.cell.kp, 0},
                              Obj{CatId::I, s.cell.k, 0});
      SmashCell tc{s.cell.kp, s.cell.k,
                   compose(s.cell.alpha, cell_chi.b1)};
      const MonoidalSummand* t = nullptr;
      for (auto& u : ba.summands)
        if (u.cell == tc && u.beta == s.betap && u.betap == s.beta) t = &u;
      if (!t) {
        rep.ok = false;
        rep.witnesses.push_back("degree " + std::to_string(p) +
                                ": twisted cell summand missing");
        continue;
      }
      if (!(t->delta == twisted_delta)) {
        rep.ok = false;
        rep.witnesses.push_back("degree " + std::to_string(p) +
                                ": summand reindexing mismatch");
        continue;
      }
      for (auto& [x, y] : s.bij) {
        // twist of cell index elements into the (b, a) cell
        IndexElem tx = x;
        if (x.first == 0) tx = {1, x.second};
        else if (x.first == 1) tx = {0, x.second};
        else if (x.first == 2) tx = {3, x.second};
        else if (x.first == 3) tx = {2, x.second};
        // sphere-block swap on the target side
        IndexElem ty = y;
        if (y.first == 0)
          ty = {0, y.second <= a.m2 ? b.m2 + y.second : y.second - a.m2};
        if (t->bij.at(tx) != ty) {
          rep.ok = false;
          rep.witnesses.push_back("degree " + std::to_string(p) +
                                  ": symmetry bijection mismatch");
        }
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Wedge-summand census of the spectrum associated to a discrete J-space:
// in spectrum degree n the k-th stage contributes the orbits of the
// permutation action on X(n, k).

inline std::vector<int> sj_level_census(const DiagSpace& X, int n, int k_max) {
  if (X.cat != CatId::J)
    throw std::invalid_argument("sj_level_census: J-space expected");
  std::vector<int> out;
  for (int k = 0; k <= std::min(k_max, X.max_degree); ++k) {
    Obj o = obj_J(n, k);
    int cnt = X.level(o).count(0);
    detail::UnionFind uf(cnt);
    for (auto& g : automorphisms(o)) {
      if (!g.b1.is_identity()) continue;
      for (int v = 0; v < cnt; ++v)
        uf.unite(v, X.act(g).img[0][v].base_id);
    }
    std::set<int> roots;
    for (int v = 0; v < cnt; ++v) roots.insert(uf.find(v));
    out.push_back((int)roots.size());
  }
  return out;
}

}  // namespace dspace
