#pragma once

// Day convolution on truncated diagram spaces: free and semi-free functors,
// the box-product as an exact colimit over the comma category of the monoidal
// sum, and monoid structure checking.

#include <dspace/diagspace.hpp>

#include <deque>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dspace {

// Compose a formal simplex with a further surjection (no renormalization
// needed: surjection . surjection is a surjection).
inline FormalSimplex formal_precompose(const FormalSimplex& x, const Monotone& s) {
  return FormalSimplex{x.base_dim, x.base_id, mono_compose(x.theta, s)};
}

// ---------------------------------------------------------------------------
// Free diagram spaces F_k(K) = K(k,-) x K.

struct FreeDiag {
  Obj k;
  DiagSpace space;
  std::map<Obj, std::vector<Mor>> homs;  // hom(k, l), enumeration order = copies

  // global nondegenerate id of (copy, local id) at level l
  int global_id(const Obj& l, int copy, int d, int local, int level_count) const {
    (void)l;
    (void)d;
    return copy * level_count + local;
  }
};

inline FreeDiag free_F(CatId cat, int max_degree, int dim_cap, const Obj& k,
                       const FinSSet& K) {
  FreeDiag F;
  F.k = k;
  F.space.cat = cat;
  F.space.max_degree = max_degree;
  F.space.dim_cap = dim_cap;
  for (auto& l : enumerate_obj(cat, max_degree)) {
    F.homs[l] = enumerate_mor(k, l);
    std::vector<const FinSSet*> copies(F.homs[l].size(), &K);
    if (copies.empty())
      F.space.levels[l] = sset_empty(dim_cap);
    else
      F.space.levels[l] = sset_disjoint_union(copies).S;
  }
  for (auto& a : F.space.objects())
    for (auto& b : F.space.objects())
      for (auto& g : enumerate_mor(a, b)) {
        if (g.is_identity()) continue;
        SimplicialMap f;
        f.img.resize(dim_cap + 1);
        // copy alpha goes identically onto copy g . alpha
        std::map<Mor, int> target_copy;
        for (size_t i = 0; i < F.homs[b].size(); ++i) target_copy[F.homs[b][i]] = (int)i;
        for (int d = 0; d <= dim_cap; ++d)
          for (size_t c = 0; c < F.homs[a].size(); ++c) {
            int tc = target_copy.at(compose(g, F.homs[a][c]));
            for (int local = 0; local < K.count(d); ++local)
              f.img[d].push_back(FormalSimplex{d, tc * K.count(d) + local,
                                               mono_identity(d)});
          }
        F.space.action[g] = std::move(f);
      }
  return F;
}

// A finite group action of the automorphisms of k on L.
struct GroupAction {
  Obj k;
  FinSSet L;
  std::map<Mor, SimplicialMap> act;  // for non-identity automorphisms of k

  SimplicialMap at(const Mor& g) const {
    if (g.is_identity()) return map_identity(L);
    return act.at(g);
  }
};

inline void validate_group_action(const GroupAction& A) {
  for (auto& [g, f] : A.act) validate_map(f, A.L, A.L);
  for (auto& g : automorphisms(A.k))
    for (auto& h : automorphisms(A.k))
      if (A.at(compose(g, h)) != map_compose(A.at(g), A.L, A.at(h)))
        throw std::logic_error("GroupAction: not a group action");
}

struct SemifreeDiag {
  Obj k;
  DiagSpace space;
  std::map<Obj, std::vector<Mor>> homs;
  std::map<Obj, Colimit> colims;
};

// G_k(L) = K(k,-) x_{K(k)} L: levelwise orbits (alpha gamma, x) ~ (alpha, gamma x).
inline SemifreeDiag semifree_G(CatId cat, int max_degree, int dim_cap,
                               const GroupAction& A) {
  validate_group_action(A);
  SemifreeDiag G;
  G.k = A.k;
  G.space.cat = cat;
  G.space.max_degree = max_degree;
  G.space.dim_cap = dim_cap;
  auto auts = automorphisms(A.k);
  std::deque<SimplicialMap> store;
  for (auto& l : enumerate_obj(cat, max_degree)) {
    G.homs[l] = enumerate_mor(A.k, l);
    std::map<Mor, int> idx;
    for (size_t i = 0; i < G.homs[l].size(); ++i) idx[G.homs[l][i]] = (int)i;
    std::vector<const FinSSet*> pieces(G.homs[l].size(), &A.L);
    std::vector<ColimArrow> arrows;
    for (size_t i = 0; i < G.homs[l].size(); ++i)
      for (auto& g : auts) {
        if (g.is_identity()) continue;
        store.push_back(A.at(g));
        arrows.push_back(ColimArrow{idx.at(compose(G.homs[l][i], g)), (int)i,
                                    &store.back()});
      }
    G.colims[l] = sset_colimit(pieces, arrows, dim_cap);
    G.space.levels[l] = G.colims[l].S;
  }
  for (auto& a : G.space.objects())
    for (auto& b : G.space.objects())
      for (auto& g : enumerate_mor(a, b)) {
        if (g.is_identity()) continue;
        std::map<Mor, int> tidx;
        for (size_t i = 0; i < G.homs[b].size(); ++i) tidx[G.homs[b][i]] = (int)i;
        bool ok = true;
        SimplicialMap f = map_out_of_colimit(
            G.colims.at(a), G.space.levels.at(b),
            [&](int piece, const FormalSimplex& x) {
              int tp = tidx.at(compose(g, G.homs.at(a)[piece]));
              return G.colims.at(b).key_formal[x.dim()].at({tp, x});
            },
            &ok);
        if (!ok) throw std::logic_error("semifree_G: action not well-defined");
        G.space.action[g] = std::move(f);
      }
  return G;
}

// ---------------------------------------------------------------------------
// Day convolution.

struct DayCell {
  Obj k, l;
  Mor mu;  // k # l -> n
  auto operator<=>(const DayCell&) const = default;
};

struct DayConv {
  CatId cat = CatId::I;
  int max_degree = 0;
  int dim_cap = 0;
  std::map<std::pair<Obj, Obj>, ProductSSet> prods;
  std::map<Obj, std::vector<DayCell>> cells;
  std::map<Obj, std::map<DayCell, int>> cell_index;
  std::map<Obj, Colimit> colims;
  DiagSpace space;

  const ProductSSet& prod(const Obj& k, const Obj& l) const {
    return prods.at({k, l});
  }
  // component formal simplices of a formal simplex of a product piece
  std::pair<FormalSimplex, FormalSimplex> components(const Obj& k, const Obj& l,
                                                     const FormalSimplex& x) const {
    const auto& pr = prod(k, l);
    const auto& [a, b] = pr.cells[x.base_dim][x.base_id];
    return {formal_precompose(a, x.theta), formal_precompose(b, x.theta)};
  }
};

inline DayConv day_convolve(const DiagSpace& X, const DiagSpace& Y) {
  if (X.cat != Y.cat || X.max_degree != Y.max_degree)
    throw std::invalid_argument("day_convolve: mismatched diagram categories");
  DayConv D;
  D.cat = X.cat;
  D.max_degree = X.max_degree;
  D.dim_cap = std::min(X.dim_cap, Y.dim_cap);
  D.space.cat = D.cat;
  D.space.max_degree = D.max_degree;
  D.space.dim_cap = D.dim_cap;
  auto objs = X.objects();

  // shared products and cached induced product maps
  for (auto& k : objs)
    for (auto& l : objs)
      D.prods.try_emplace({k, l}, sset_product(X.level(k), Y.level(l)));
  std::map<std::pair<Mor, Mor>, SimplicialMap> pmaps;
  for (auto& k : objs)
    for (auto& k2 : objs)
      for (auto& g1 : enumerate_mor(k, k2))
        for (auto& l : objs)
          for (auto& l2 : objs)
            for (auto& g2 : enumerate_mor(l, l2))
              pmaps.try_emplace(
                  {g1, g2},
                  product_map(D.prod(k, l), X.level(k2), Y.level(l2),
                              D.prod(k2, l2), X.act(g1), Y.act(g2)));

  for (auto& n : objs) {
    auto& cells = D.cells[n];
    auto& index = D.cell_index[n];
    for (auto& k : objs)
      for (auto& l : objs)
        for (auto& mu : enumerate_mor(concat(k, l), n)) {
          index[DayCell{k, l, mu}] = (int)cells.size();
          cells.push_back(DayCell{k, l, mu});
        }
    std::vector<const FinSSet*> pieces;
    for (auto& c : cells) pieces.push_back(&D.prod(c.k, c.l).S);
    std::vector<ColimArrow> arrows;
    for (size_t i = 0; i < cells.size(); ++i)
      for (size_t j = 0; j < cells.size(); ++j) {
        const auto& ci = cells[i];
        const auto& cj = cells[j];
        for (auto& g1 : enumerate_mor(ci.k, cj.k))
          for (auto& g2 : enumerate_mor(ci.l, cj.l))
            if (compose(cj.mu, concat(g1, g2)) == ci.mu)
              arrows.push_back(ColimArrow{(int)i, (int)j, &pmaps.at({g1, g2})});
      }
    D.colims[n] = sset_colimit(pieces, arrows, D.dim_cap);
    D.space.levels[n] = D.colims[n].S;
  }

  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        bool ok = true;
        SimplicialMap f = map_out_of_colimit(
            D.colims.at(a), D.space.levels.at(b),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D.cells.at(a)[piece];
              int tp = D.cell_index.at(b).at(DayCell{c.k, c.l, compose(nu, c.mu)});
              return D.colims.at(b).key_formal[x.dim()].at({tp, x});
            },
            &ok);
        if (!ok) throw std::logic_error("day_convolve: action not well-defined");
        D.space.action[nu] = std::move(f);
      }
  return D;
}

inline const FinSSet& day_convolution_level(const DayConv& D, const Obj& n) {
  return D.space.level(n);
}

struct IsoReport {
  bool well_defined = true;
  bool levelwise_iso = true;
  bool natural = true;
  std::vector<std::string> witnesses;

  bool ok() const { return well_defined && levelwise_iso && natural; }
};

namespace detail {
inline DiagMap collect_levels(
    const DiagSpace& src, const DiagSpace& dst,
    const std::function<SimplicialMap(const Obj&, bool*)>& mk, IsoReport& rep) {
  DiagMap out;
  for (auto& n : src.objects()) {
    bool ok = true;
    out.at[n] = mk(n, &ok);
    if (!ok) {
      rep.well_defined = false;
      rep.witnesses.push_back("not constant on gluing classes at level " + n.str());
    }
    if (!is_isomorphism(out.at[n], src.level(n), dst.level(n))) {
      rep.levelwise_iso = false;
      rep.witnesses.push_back("not a bijection at level " + n.str());
    }
  }
  if (rep.well_defined) {
    try {
      validate_diagmap(out, src, dst);
    } catch (const std::exception& e) {
      rep.natural = false;
      rep.witnesses.push_back(e.what());
    }
  }
  return out;
}
}  // namespace detail

// Unit law: (1_K box X)(n) ~= X(n), where 1_K = F_0(point).
inline IsoReport check_day_unit(const DiagSpace& X) {
  FreeDiag U = free_F(X.cat, X.max_degree, X.dim_cap, monoidal_unit(X.cat),
                      sset_point(X.dim_cap));
  DayConv D = day_convolve(U.space, X);
  IsoReport rep;
  detail::collect_levels(
      D.space, X,
      [&](const Obj& n, bool* ok) {
        return map_out_of_colimit(
            D.colims.at(n), X.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D.cells.at(n)[piece];
              auto [fa, fb] = D.components(c.k, c.l, x);
              const Mor& alpha = U.homs.at(c.k)[fa.base_id];
              Mor m = compose(c.mu, concat(alpha, identity(c.l)));
              return X.apply(m, fb);
            },
            ok);
      },
      rep);
  return rep;
}

// Symmetry: X box Y ~= Y box X via the twist built from chi.
inline IsoReport check_day_symmetry(const DiagSpace& X, const DiagSpace& Y) {
  DayConv D1 = day_convolve(X, Y);
  DayConv D2 = day_convolve(Y, X);
  IsoReport rep;
  detail::collect_levels(
      D1.space, D2.space,
      [&](const Obj& n, bool* ok) {
        return map_out_of_colimit(
            D1.colims.at(n), D2.space.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D1.cells.at(n)[piece];
              const auto& pr1 = D1.prod(c.k, c.l);
              const auto& [a, b] = pr1.cells[x.base_dim][x.base_id];
              const auto& pr2 = D2.prod(c.l, c.k);
              FormalSimplex sw{x.base_dim,
                               pr2.index[x.base_dim].at({b, a}), x.theta};
              DayCell c2{c.l, c.k, compose(c.mu, symmetry(c.l, c.k))};
              int tp = D2.cell_index.at(n).at(c2);
              return D2.colims.at(n).key_formal[x.dim()].at({tp, sw});
            },
            ok);
      },
      rep);
  return rep;
}

// Associativity: (X box Y) box Z ~= X box (Y box Z) via the canonical
// regrouping of comma data.
inline IsoReport check_day_associativity(const DiagSpace& X, const DiagSpace& Y,
                                         const DiagSpace& Z) {
  DayConv XY = day_convolve(X, Y);
  DayConv XY_Z = day_convolve(XY.space, Z);
  DayConv YZ = day_convolve(Y, Z);
  DayConv X_YZ = day_convolve(X, YZ.space);
  IsoReport rep;
  detail::collect_levels(
      XY_Z.space, X_YZ.space,
      [&](const Obj& n, bool* ok) {
        return map_out_of_colimit(
            XY_Z.colims.at(n), X_YZ.space.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& outer = XY_Z.cells.at(n)[piece];  // (p, m, nu)
              auto [fa, fb] = XY_Z.components(outer.k, outer.l, x);
              // resolve fa inside the inner convolution at level p
              const auto& inner_col = XY.colims.at(outer.k);
              auto [ip, irep] = inner_col.reps[fa.base_dim][fa.base_id];
              FormalSimplex ix = formal_precompose(irep, fa.theta);
              const auto& innerc = XY.cells.at(outer.k)[ip];  // (k, l, mu)
              auto [fx, fy] = XY.components(innerc.k, innerc.l, ix);
              // (fy, fb) as a simplex of (Y box Z)(l # m) at the identity cell
              Obj lm = concat(innerc.l, outer.l);
              DayCell idcell{innerc.l, outer.l, identity(lm)};
              const auto& pyz = YZ.prod(innerc.l, outer.l);
              FormalSimplex nya, nyb;
              Monotone tau;
              pair_normal_form(fy, fb, nya, nyb, tau);
              FormalSimplex pf{(int)tau.back(),
                               pyz.index[(int)tau.back()].at({nya, nyb}), tau};
              int yzp = YZ.cell_index.at(lm).at(idcell);
              FormalSimplex g =
                  YZ.colims.at(lm).key_formal[pf.dim()].at({yzp, pf});
              // (fx, g) as a simplex of X(k) x (Y box Z)(l # m)
              const auto& pxg = X_YZ.prod(innerc.k, lm);
              FormalSimplex nxa, nxb;
              pair_normal_form(fx, g, nxa, nxb, tau);
              FormalSimplex pf2{(int)tau.back(),
                                pxg.index[(int)tau.back()].at({nxa, nxb}), tau};
              Mor mu2 = compose(outer.mu, concat(innerc.mu, identity(outer.l)));
              int tp = X_YZ.cell_index.at(n).at(DayCell{innerc.k, lm, mu2});
              return X_YZ.colims.at(n).key_formal[pf2.dim()].at({tp, pf2});
            },
            ok);
      },
      rep);
  return rep;
}

// ---------------------------------------------------------------------------
// The Kan-shift description of F_k(*) box X.

struct KanShift {
  Obj k;
  DiagSpace space;
  std::map<Obj, CommaCat> commas;
  std::map<Obj, Colimit> colims;
};

inline KanShift kan_extension_shift(const Obj& k, const DiagSpace& X) {
  KanShift S;
  S.k = k;
  S.space.cat = X.cat;
  S.space.max_degree = X.max_degree;
  S.space.dim_cap = X.dim_cap;
  std::deque<SimplicialMap> store;
  for (auto& l : X.objects()) {
    auto& cc = S.commas[l] = comma_category(k, l);
    std::vector<const FinSSet*> pieces;
    for (auto& co : cc.objects) pieces.push_back(&X.level(co.n));
    std::vector<ColimArrow> arrows;
    for (auto& m : cc.morphisms) {
      store.push_back(X.act(m.gamma));
      arrows.push_back(ColimArrow{m.from, m.to, &store.back()});
    }
    S.colims[l] = sset_colimit(pieces, arrows, X.dim_cap);
    S.space.levels[l] = S.colims[l].S;
  }
  for (auto& a : X.objects())
    for (auto& b : X.objects())
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        const auto& cca = S.commas.at(a);
        const auto& ccb = S.commas.at(b);
        std::map<CommaObj, int> bidx;
        for (size_t i = 0; i < ccb.objects.size(); ++i) bidx[ccb.objects[i]] = (int)i;
        bool ok = true;
        SimplicialMap f = map_out_of_colimit(
            S.colims.at(a), S.space.levels.at(b),
            [&](int piece, const FormalSimplex& x) {
              const auto& co = cca.objects[piece];
              int tp = bidx.at(CommaObj{co.n, compose(nu, co.alpha)});
              return S.colims.at(b).key_formal[x.dim()].at({tp, x});
            },
            &ok);
        if (!ok) throw std::logic_error("kan_extension_shift: bad action");
        S.space.action[nu] = std::move(f);
      }
  return S;
}

// Oracle equality: F_k(*) box X agrees with the Kan shift, levelwise and
// naturally.
inline IsoReport check_kan_oracle(const Obj& k, const DiagSpace& X) {
  FreeDiag F = free_F(X.cat, X.max_degree, X.dim_cap, k, sset_point(X.dim_cap));
  DayConv D = day_convolve(F.space, X);
  KanShift S = kan_extension_shift(k, X);
  IsoReport rep;
  detail::collect_levels(
      D.space, S.space,
      [&](const Obj& n, bool* ok) {
        const auto& cc = S.commas.at(n);
        std::map<CommaObj, int> idx;
        for (size_t i = 0; i < cc.objects.size(); ++i) idx[cc.objects[i]] = (int)i;
        return map_out_of_colimit(
            D.colims.at(n), S.space.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D.cells.at(n)[piece];
              auto [fa, fb] = D.components(c.k, c.l, x);
              const Mor& alpha = F.homs.at(c.k)[fa.base_id];
              int tp = idx.at(
                  CommaObj{c.l, compose(c.mu, concat(alpha, identity(c.l)))});
              return S.colims.at(n).key_formal[fb.dim()].at({tp, fb});
            },
            ok);
      },
      rep);
  return rep;
}

// F_k(K) box F_k'(K') ~= F_{k#k'}(K x K').
inline IsoReport check_free_product_iso(CatId cat, int max_degree, int dim_cap,
                                        const Obj& k, const FinSSet& K,
                                        const Obj& k2, const FinSSet& K2) {
  FreeDiag F1 = free_F(cat, max_degree, dim_cap, k, K);
  FreeDiag F2 = free_F(cat, max_degree, dim_cap, k2, K2);
  DayConv D = day_convolve(F1.space, F2.space);
  ProductSSet P0 = sset_product(K, K2);
  FreeDiag T = free_F(cat, max_degree, dim_cap, concat(k, k2), P0.S);
  IsoReport rep;
  detail::collect_levels(
      D.space, T.space,
      [&](const Obj& n, bool* ok) {
        std::map<Mor, int> tcopy;
        for (size_t i = 0; i < T.homs.at(n).size(); ++i)
          tcopy[T.homs.at(n)[i]] = (int)i;
        return map_out_of_colimit(
            D.colims.at(n), T.space.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D.cells.at(n)[piece];
              auto [fa, fb] = D.components(c.k, c.l, x);
              int ka = K.count(fa.base_dim), kb = K2.count(fb.base_dim);
              int ca = fa.base_id / ka, la = fa.base_id % ka;
              int cb = fb.base_id / kb, lb = fb.base_id % kb;
              const Mor& alpha = F1.homs.at(c.k)[ca];
              const Mor& beta = F2.homs.at(c.l)[cb];
              int tc = tcopy.at(compose(c.mu, concat(alpha, beta)));
              // pair the local K and K' simplices inside K x K'
              FormalSimplex xa{fa.base_dim, la, fa.theta};
              FormalSimplex xb{fb.base_dim, lb, fb.theta};
              FormalSimplex na, nb;
              Monotone tau;
              pair_normal_form(xa, xb, na, nb, tau);
              int q = (int)tau.back();
              int pid = P0.index[q].at({na, nb});
              return FormalSimplex{q, tc * P0.S.count(q) + pid, tau};
            },
            ok);
      },
      rep);
  return rep;
}

// G_k(L) box G_k'(L') ~= G_{k#k'}(Aut(k#k') x_{Aut(k) x Aut(k')} (L x L')).
inline IsoReport check_semifree_product_iso(CatId cat, int max_degree,
                                            int dim_cap, const GroupAction& A,
                                            const GroupAction& A2) {
  SemifreeDiag G1 = semifree_G(cat, max_degree, dim_cap, A);
  SemifreeDiag G2 = semifree_G(cat, max_degree, dim_cap, A2);
  DayConv D = day_convolve(G1.space, G2.space);

  // induced automorphism space: copies of L x L' indexed by Aut(k#k'),
  // glued along the subgroup Aut(k) x Aut(k')
  Obj kk = concat(A.k, A2.k);
  auto big_auts = automorphisms(kk);
  std::map<Mor, int> ai;
  for (size_t i = 0; i < big_auts.size(); ++i) ai[big_auts[i]] = (int)i;
  ProductSSet P = sset_product(A.L, A2.L);
  std::vector<const FinSSet*> pieces(big_auts.size(), &P.S);
  std::deque<SimplicialMap> store;
  std::vector<ColimArrow> arrows;
  for (size_t i = 0; i < big_auts.size(); ++i)
    for (auto& g : automorphisms(A.k))
      for (auto& g2 : automorphisms(A2.k)) {
        if (g.is_identity() && g2.is_identity()) continue;
        store.push_back(product_map(P, A.L, A2.L, P, A.at(g), A2.at(g2)));
        arrows.push_back(ColimArrow{
            ai.at(compose(big_auts[i], concat(g, g2))), (int)i, &store.back()});
      }
  Colimit Mcol = sset_colimit(pieces, arrows, dim_cap);
  GroupAction big;
  big.k = kk;
  big.L = Mcol.S;
  for (auto& eta : big_auts) {
    if (eta.is_identity()) continue;
    bool ok = true;
    big.act[eta] = map_out_of_colimit(
        Mcol, Mcol.S,
        [&](int piece, const FormalSimplex& x) {
          return Mcol.key_formal[x.dim()].at(
              {ai.at(compose(eta, big_auts[piece])), x});
        },
        &ok);
    if (!ok) throw std::logic_error("semifree product: induced action bad");
  }
  SemifreeDiag T = semifree_G(cat, max_degree, dim_cap, big);
  int id_piece = ai.at(identity(kk));

  IsoReport rep;
  detail::collect_levels(
      D.space, T.space,
      [&](const Obj& n, bool* ok) {
        std::map<Mor, int> tcopy;
        for (size_t i = 0; i < T.homs.at(n).size(); ++i)
          tcopy[T.homs.at(n)[i]] = (int)i;
        return map_out_of_colimit(
            D.colims.at(n), T.space.level(n),
            [&](int piece, const FormalSimplex& x) {
              const auto& c = D.cells.at(n)[piece];
              auto [fa, fb] = D.components(c.k, c.l, x);
              auto [ca, ra] = G1.colims.at(c.k).reps[fa.base_dim][fa.base_id];
              auto [cb, rb] = G2.colims.at(c.l).reps[fb.base_dim][fb.base_id];
              FormalSimplex xa = formal_precompose(ra, fa.theta);
              FormalSimplex yb = formal_precompose(rb, fb.theta);
              const Mor& alpha = G1.homs.at(c.k)[ca];
              const Mor& beta = G2.homs.at(c.l)[cb];
              FormalSimplex na, nb;
              Monotone tau;
              pair_normal_form(xa, yb, na, nb, tau);
              FormalSimplex pf{(int)tau.back(),
                               P.index[(int)tau.back()].at({na, nb}), tau};
              FormalSimplex m = Mcol.key_formal[pf.dim()].at({id_piece, pf});
              int tc = tcopy.at(compose(c.mu, concat(alpha, beta)));
              return T.colims.at(n).key_formal[m.dim()].at({tc, m});
            },
            ok);
      },
      rep);
  return rep;
}

// The diagram map F_k(K) -> Z induced by phi: K -> Z(k) (the free adjunction).
inline DiagMap free_induced_map(const FreeDiag& F, const FinSSet& K,
                                const DiagSpace& Z, const SimplicialMap& phi) {
  DiagMap out;
  for (auto& l : Z.objects()) {
    SimplicialMap f;
    f.img.resize(Z.dim_cap + 1);
    // copy-major layout of the disjoint union matches id order
    for (size_t c = 0; c < F.homs.at(l).size(); ++c) {
      SimplicialMap comp = map_compose(Z.act(F.homs.at(l)[c]), Z.level(l), phi);
      for (int d = 0; d <= Z.dim_cap; ++d)
        for (int local = 0; local < K.count(d); ++local)
          f.img[d].push_back(comp.img[d][local]);
    }
    out.at[l] = std::move(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Monoid data and checks.

struct MonoidData {
  DiagSpace carrier;
  bool commutative = false;
  int unit_vertex = 0;  // vertex in carrier at the monoidal unit object
  std::map<std::pair<Obj, Obj>, ProductSSet> prods;
  std::map<std::pair<Obj, Obj>, SimplicialMap> mult;

  // object pairs whose sum stays within the truncation
  std::vector<std::pair<Obj, Obj>> mult_pairs() const {
    std::vector<std::pair<Obj, Obj>> out;
    for (auto& [kl, f] : mult) out.push_back(kl);
    return out;
  }
};

struct MonoidReport {
  bool maps_valid = true;
  bool natural = true;
  bool unital = true;
  bool associative = true;
  bool commutative_ok = true;  // only meaningful when flagged commutative
  std::vector<std::string> witnesses;

  bool ok(bool commutative) const {
    return maps_valid && natural && unital && associative &&
           (!commutative || commutative_ok);
  }
};

inline bool within(const DiagSpace& X, const Obj& o) {
  return X.levels.count(o) > 0;
}

inline MonoidReport check_monoid(const MonoidData& M) {
  MonoidReport rep;
  const DiagSpace& X = M.carrier;
  Obj u = monoidal_unit(X.cat);
  auto objs = X.objects();

  for (auto& [kl, f] : M.mult) {
    const auto& [k, l] = kl;
    try {
      validate_map(f, M.prods.at(kl).S, X.level(concat(k, l)));
    } catch (const std::exception& e) {
      rep.maps_valid = false;
      rep.witnesses.push_back("mult(" + k.str() + "," + l.str() + "): " + e.what());
    }
  }
  if (!rep.maps_valid) return rep;

  // naturality in both variables
  for (auto& [kl, f] : M.mult) {
    const auto& [k, l] = kl;
    for (auto& k2 : objs)
      for (auto& g1 : enumerate_mor(k, k2))
        for (auto& l2 : objs)
          for (auto& g2 : enumerate_mor(l, l2)) {
            if (!within(X, concat(k2, l2))) continue;
            SimplicialMap lhs = map_compose(X.act(concat(g1, g2)),
                                            X.level(concat(k2, l2)), f);
            SimplicialMap pm = product_map(M.prods.at(kl), X.level(k2),
                                           X.level(l2), M.prods.at({k2, l2}),
                                           X.act(g1), X.act(g2));
            SimplicialMap rhs = map_compose(M.mult.at({k2, l2}),
                                            X.level(concat(k2, l2)), pm);
            if (lhs != rhs) {
              rep.natural = false;
              rep.witnesses.push_back("naturality fails at (" + k.str() + "," +
                                      l.str() + ")->(" + k2.str() + "," +
                                      l2.str() + ")");
            }
          }
  }

  // unit laws
  for (auto& l : objs) {
    if (!M.mult.count({u, l})) continue;
    SimplicialMap cu = constant_map(X.level(l), M.unit_vertex);
    SimplicialMap lft = pair_into_product(X.level(l), X.level(u), X.level(l),
                                          M.prods.at({u, l}), cu,
                                          map_identity(X.level(l)));
    if (map_compose(M.mult.at({u, l}), X.level(l), lft) !=
        map_identity(X.level(l))) {
      rep.unital = false;
      rep.witnesses.push_back("left unit fails at " + l.str());
    }
    SimplicialMap rgt = pair_into_product(X.level(l), X.level(l), X.level(u),
                                          M.prods.at({l, u}),
                                          map_identity(X.level(l)), cu);
    if (map_compose(M.mult.at({l, u}), X.level(l), rgt) !=
        map_identity(X.level(l))) {
      rep.unital = false;
      rep.witnesses.push_back("right unit fails at " + l.str());
    }
  }

  // associativity
  for (auto& k : objs)
    for (auto& l : objs)
      for (auto& m : objs) {
        if (!within(X, concat(concat(k, l), m))) continue;
        Obj kl = concat(k, l), lm = concat(l, m), klm = concat(kl, m);
        ProductSSet T1 = sset_product(M.prods.at({k, l}).S, X.level(m));
        SimplicialMap s1 = product_map(T1, X.level(kl), X.level(m),
                                       M.prods.at({kl, m}), M.mult.at({k, l}),
                                       map_identity(X.level(m)));
        SimplicialMap lhs = map_compose(M.mult.at({kl, m}), X.level(klm), s1);
        // regroup T1 -> X(k) x (X(l) x X(m))
        const auto& pkl = M.prods.at({k, l});
        SimplicialMap a_part = map_compose(pkl.proj1, X.level(k), T1.proj1);
        SimplicialMap l_part = map_compose(pkl.proj2, X.level(l), T1.proj1);
        SimplicialMap b_part = pair_into_product(T1.S, X.level(l), X.level(m),
                                                 M.prods.at({l, m}), l_part,
                                                 T1.proj2);
        SimplicialMap rgn = map_compose(M.mult.at({l, m}), X.level(lm), b_part);
        SimplicialMap into = pair_into_product(T1.S, X.level(k), X.level(lm),
                                               M.prods.at({k, lm}), a_part, rgn);
        SimplicialMap rhs = map_compose(M.mult.at({k, lm}), X.level(klm), into);
        if (lhs != rhs) {
          rep.associative = false;
          rep.witnesses.push_back("associativity fails at (" + k.str() + "," +
                                  l.str() + "," + m.str() + ")");
        }
      }

  // commutativity square with the symmetry chi
  for (auto& [kl, f] : M.mult) {
    const auto& [k, l] = kl;
    SimplicialMap sw = pair_into_product(M.prods.at(kl).S, X.level(l),
                                         X.level(k), M.prods.at({l, k}),
                                         M.prods.at(kl).proj2,
                                         M.prods.at(kl).proj1);
    SimplicialMap lhs = map_compose(M.mult.at({l, k}), X.level(concat(l, k)), sw);
    SimplicialMap rhs = map_compose(X.act(symmetry(k, l)),
                                    X.level(concat(l, k)), f);
    if (lhs != rhs) {
      rep.commutative_ok = false;
      rep.witnesses.push_back("commutativity square fails at (" + k.str() +
                              "," + l.str() + ")");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// X^bullet: n |-> X^n for a pointed simplicial set X over I.

struct XBullet {
  MonoidData monoid;
  std::map<int, MultiProductSSet> powers;
};

inline XBullet x_bullet(const FinSSet& X, int basepoint, int max_degree,
                        int dim_cap) {
  XBullet B;
  DiagSpace& S = B.monoid.carrier;
  S.cat = CatId::I;
  S.max_degree = max_degree;
  S.dim_cap = dim_cap;
  for (int n = 0; n <= max_degree; ++n) {
    std::vector<const FinSSet*> fs(n, &X);
    B.powers.emplace(n, sset_multi_product(fs, dim_cap));
    S.levels[obj_I(n)] = B.powers.at(n).S;
  }
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; n <= max_degree; ++n)
      for (auto& a : enumerate_mor(obj_I(m), obj_I(n))) {
        if (a.is_identity()) continue;
        const auto& Pm = B.powers.at(m);
        const auto& Pn = B.powers.at(n);
        std::vector<SimplicialMap> comps(n);
        for (int i = 1; i <= n; ++i) {
          int j = 0;
          for (int t = 1; t <= m; ++t)
            if (a.b1(t) == i) { j = t; break; }
          comps[i - 1] = j ? Pm.proj[j - 1] : constant_map(Pm.S, basepoint);
        }
        std::vector<const FinSSet*> targets(n, &X);
        std::vector<const SimplicialMap*> cp;
        for (auto& c : comps) cp.push_back(&c);
        S.action[a] = tuple_into_product(Pm.S, targets, Pn, cp);
      }
  B.monoid.commutative = true;
  B.monoid.unit_vertex = 0;  // the empty product point
  for (int m = 0; m <= max_degree; ++m)
    for (int n = 0; m + n <= max_degree; ++n) {
      auto key = std::make_pair(obj_I(m), obj_I(n));
      B.monoid.prods.emplace(key, sset_product(S.level(obj_I(m)), S.level(obj_I(n))));
      const auto& P = B.monoid.prods.at(key);
      std::vector<SimplicialMap> comps;
      for (int i = 0; i < m; ++i)
        comps.push_back(map_compose(B.powers.at(m).proj[i], X, P.proj1));
      for (int i = 0; i < n; ++i)
        comps.push_back(map_compose(B.powers.at(n).proj[i], X, P.proj2));
      std::vector<const FinSSet*> targets(m + n, &X);
      std::vector<const SimplicialMap*> cp;
      for (auto& c : comps) cp.push_back(&c);
      B.monoid.mult[key] = tuple_into_product(P.S, targets, B.powers.at(m + n), cp);
    }
  return B;
}

}  // namespace dspace
