#pragma once

// Homotopy colimits of diagram spaces as the diagonal of the simplicial
// replacement, induced maps, and K-equivalence evidence at truncation.

#include <dspace/diagspace.hpp>

#include <map>
#include <string>
#include <vector>

namespace dspace {

// A p-cell of the diagonal: a length-p chain k_0 <- k_1 <- ... <- k_p
// (chain[j]: k_{j+1} -> k_j) together with a formal p-simplex of X(k_p).
struct HocolimCell {
  Obj o;  // k_p, the source end of the chain
  std::vector<Mor> chain;
  FormalSimplex x;
  auto operator<=>(const HocolimCell&) const = default;
};

namespace detail {

struct HocolimDense {
  using Cell = HocolimCell;
  const DiagSpace* X;
  std::vector<std::vector<std::pair<Obj, std::vector<Mor>>>> chains;  // per length

  explicit HocolimDense(const DiagSpace& Xs, int dim_cap) : X(&Xs) {
    chains.resize(dim_cap + 1);
    for (auto& o : X->objects()) chains[0].push_back({o, {}});
    for (int p = 1; p <= dim_cap; ++p)
      for (auto& [o, ch] : chains[p - 1])
        for (auto& src : X->objects())
          for (auto& m : enumerate_mor(src, o)) {
            auto ext = ch;
            ext.push_back(m);
            chains[p].push_back({src, ext});
          }
  }

  std::vector<Cell> cells(int p) const {
    std::vector<Cell> out;
    for (auto& [o, ch] : chains[p])
      for (auto& x : all_simplices(X->level(o), p))
        out.push_back(Cell{o, ch, x});
    return out;
  }
  Cell face(int p, const Cell& c, int i) const {
    Cell out;
    FormalSimplex y = apply_op(X->level(c.o), c.x, mono_face(p, i));
    if (i == 0) {
      out.o = c.o;
      out.chain.assign(c.chain.begin() + 1, c.chain.end());
      out.x = y;
    } else if (i < p) {
      out.o = c.o;
      out.chain = c.chain;
      out.chain[i - 1] = compose(out.chain[i - 1], out.chain[i]);
      out.chain.erase(out.chain.begin() + i);
      out.x = y;
    } else {
      out.o = c.chain[p - 1].dst();
      out.chain.assign(c.chain.begin(), c.chain.end() - 1);
      out.x = X->apply(c.chain[p - 1], y);
    }
    return out;
  }
  Cell degeneracy(int p, const Cell& c, int i) const {
    // k_i is the destination of chain[i] (or o itself at the source end)
    Obj ki = (i == p) ? c.o : c.chain[i].dst();
    Cell out;
    out.o = c.o;
    out.chain = c.chain;
    out.chain.insert(out.chain.begin() + i, identity(ki));
    out.x = apply_op(X->level(c.o), c.x, mono_degeneracy(p, i));
    return out;
  }
};

}  // namespace detail

struct Hocolim {
  FinSSet S;
  std::vector<std::map<HocolimCell, FormalSimplex>> formal;  // per dim
  std::vector<std::vector<HocolimCell>> nondeg;              // id -> cell
};

inline Hocolim hocolim(const DiagSpace& X, int dim_cap) {
  detail::HocolimDense D(X, dim_cap);
  auto ext = extract_sset(D, dim_cap);
  return Hocolim{std::move(ext.S), std::move(ext.formal), std::move(ext.nondeg)};
}

// The map of homotopy colimits induced by a natural transformation f: X -> Y.
inline SimplicialMap hocolim_map(const Hocolim& src, const Hocolim& dst,
                                 const DiagSpace& Y, const DiagMap& f) {
  SimplicialMap h;
  int cap = (int)src.nondeg.size() - 1;
  h.img.resize(cap + 1);
  for (int p = 0; p <= cap; ++p)
    for (auto& c : src.nondeg[p]) {
      HocolimCell t{c.o, c.chain,
                    map_apply(f.at.at(c.o), Y.level(c.o), c.x)};
      h.img[p].push_back(dst.formal[p].at(t));
    }
  return h;
}

// ---------------------------------------------------------------------------
// K-equivalence evidence: pi0 bijectivity plus acyclicity of the algebraic
// mapping cone of the induced map of homotopy colimits, up to a dimension.
// Truncated computation: this is evidence, not a proof.

// chain-level matrix of a simplicial map on normalized complexes
inline SparseMat chain_map_matrix(const SimplicialMap& f, const FinSSet& A,
                                  const FinSSet& B, int k) {
  SparseMat M;
  M.resize(A.count(k), B.count(k));
  for (int id = 0; id < A.count(k); ++id) {
    const auto& im = f.img[k][id];
    if (im.nondegenerate()) M.add(id, im.base_id, 1);
  }
  return M;
}

struct KEquivalenceReport {
  int up_to = 0;
  bool pi0_bijective = true;
  bool cone_acyclic = true;
  bool homology_groups_equal = true;
  std::vector<std::string> witnesses;
  std::string caveat = "evidence at truncation, not a proof";

  bool ok() const { return pi0_bijective && cone_acyclic && homology_groups_equal; }
};

inline KEquivalenceReport k_equivalence_evidence(const DiagMap& f,
                                                 const DiagSpace& X,
                                                 const DiagSpace& Y, int up_to) {
  int cap = std::min(X.dim_cap, Y.dim_cap);
  if (up_to >= cap)
    throw std::invalid_argument("k_equivalence_evidence: need dim_cap > up_to");
  Hocolim HX = hocolim(X, cap);
  Hocolim HY = hocolim(Y, cap);
  SimplicialMap h = hocolim_map(HX, HY, Y, f);
  KEquivalenceReport rep;
  rep.up_to = up_to;

  // pi0: the vertex map must induce a bijection of components
  auto cx = pi0_classes(HX.S);
  auto cy = pi0_classes(HY.S);
  int nx = cx.empty() ? 0 : 1 + *std::max_element(cx.begin(), cx.end());
  int ny = cy.empty() ? 0 : 1 + *std::max_element(cy.begin(), cy.end());
  std::vector<int> img(nx, -1);
  std::vector<int> hit(ny, 0);
  for (int v = 0; v < HX.S.count(0); ++v) {
    int t = cy[h.img[0][v].base_id];
    if (img[cx[v]] == -1) {
      img[cx[v]] = t;
      hit[t]++;
    } else if (img[cx[v]] != t) {
      // cannot happen for a simplicial map; defensive
      rep.pi0_bijective = false;
    }
  }
  if (nx != ny) rep.pi0_bijective = false;
  for (int t = 0; t < ny; ++t)
    if (hit[t] != 1) rep.pi0_bijective = false;
  if (!rep.pi0_bijective)
    rep.witnesses.push_back("pi0: " + std::to_string(nx) + " components map to " +
                            std::to_string(ny) + " non-bijectively");

  // homology groups agree
  auto hx = homology(HX.S, up_to);
  auto hy = homology(HY.S, up_to);
  for (int k = 0; k <= up_to; ++k)
    if (!(hx[k] == hy[k])) {
      rep.homology_groups_equal = false;
      rep.witnesses.push_back("H_" + std::to_string(k) + " differs");
    }

  // mapping cone: cone_k = Y_k + X_{k-1}, d(y,x) = (dy + h(x), -dx)
  std::vector<int> dims;
  for (int k = 0; k <= up_to + 1; ++k)
    dims.push_back(HY.S.count(k) + (k >= 1 ? HX.S.count(k - 1) : 0));
  std::vector<SparseMat> d(up_to + 2);
  for (int k = 1; k <= up_to + 1; ++k) {
    SparseMat dY = boundary_matrix(HY.S, k);
    SparseMat M;
    M.resize(dims[k], dims[k - 1]);
    for (int r = 0; r < dY.rows; ++r)
      for (auto& [c, v] : dY.row[r]) M.add(r, c, v);
    SparseMat hk = chain_map_matrix(h, HX.S, HY.S, k - 1);
    for (int r = 0; r < hk.rows; ++r)
      for (auto& [c, v] : hk.row[r]) M.add(dY.rows + r, c, v);
    if (k >= 2) {
      SparseMat dX = boundary_matrix(HX.S, k - 1);
      for (int r = 0; r < dX.rows; ++r)
        for (auto& [c, v] : dX.row[r]) M.add(dY.rows + r, HY.S.count(k - 1) + c, -v);
    }
    d[k] = std::move(M);
  }
  auto cone = chain_homology(dims, d, up_to);
  for (int k = 1; k <= up_to; ++k)  // cone H_0 sees pi0 only; handled above
    if (!cone[k].is_zero()) {
      rep.cone_acyclic = false;
      rep.witnesses.push_back("cone H_" + std::to_string(k) + " nonzero");
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Levelwise pullback of diagram spaces, with projections.

struct DiagPullback {
  DiagSpace space;
  std::map<Obj, PullbackSSet> pbs;
  DiagMap proj1, proj2;
};

inline DiagPullback diag_pullback(const DiagSpace& A, const DiagSpace& B,
                                  const DiagSpace& C, const DiagMap& f,
                                  const DiagMap& g) {
  DiagPullback P;
  P.space.cat = A.cat;
  P.space.max_degree = A.max_degree;
  P.space.dim_cap = A.dim_cap;
  for (auto& o : A.objects()) {
    P.pbs.emplace(o, sset_pullback(A.level(o), B.level(o), C.level(o),
                                   f.at.at(o), g.at.at(o)));
    P.space.levels[o] = P.pbs.at(o).S;
    P.proj1.at[o] = P.pbs.at(o).proj1;
    P.proj2.at[o] = P.pbs.at(o).proj2;
  }
  for (auto& a : A.objects())
    for (auto& b : A.objects())
      for (auto& m : enumerate_mor(a, b)) {
        if (m.is_identity()) continue;
        P.space.action[m] = pullback_map(P.pbs.at(a), A.level(b), B.level(b),
                                         P.pbs.at(b), A.act(m), B.act(m));
      }
  return P;
}

// Exactness check: hocolim of a levelwise pullback square is the pullback of
// the hocolims, via the canonical comparison map.
inline bool check_hocolim_preserves_pullback(const DiagSpace& A,
                                             const DiagSpace& B,
                                             const DiagSpace& C,
                                             const DiagMap& f, const DiagMap& g,
                                             int dim_cap) {
  DiagPullback P = diag_pullback(A, B, C, f, g);
  Hocolim HP = hocolim(P.space, dim_cap);
  Hocolim HA = hocolim(A, dim_cap);
  Hocolim HB = hocolim(B, dim_cap);
  Hocolim HC = hocolim(C, dim_cap);
  SimplicialMap hf = hocolim_map(HA, HC, C, f);
  SimplicialMap hg = hocolim_map(HB, HC, C, g);
  PullbackSSet Q = sset_pullback(HA.S, HB.S, HC.S, hf, hg);
  SimplicialMap p1 = hocolim_map(HP, HA, A, P.proj1);
  SimplicialMap p2 = hocolim_map(HP, HB, B, P.proj2);
  SimplicialMap cmp = pair_into_pullback(HP.S, Q, p1, p2);
  return is_isomorphism(cmp, HP.S, Q.S);
}

}  // namespace dspace
