#pragma once

// Operads in finite sets acting through discrete diagram spaces: the monad
// D(X) = || D(n) x_{Sigma_n} X^{box n}, the Q/P filtrations of monoidal powers
// of pushouts, the shifted functors U_k via coequalizers, and the filtration
// of U_k of an algebra pushout.  The two ambient monoidal categories are
// finite sets (diagram spaces over the one-object category) and discrete
// positive diagram spaces over I or J; everything is computed exactly at the
// configured truncations.

#include <dspace/cofib.hpp>
#include <dspace/dayconv.hpp>
#include <dspace/diagspace.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dspace {

// ---------------------------------------------------------------------------
// Permutation bookkeeping for operad structure maps.

inline const std::vector<Inj>& perms(int n) {
  static std::map<int, std::vector<Inj>> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, enumerate_inj(n, n)).first;
  return it->second;
}

inline int perm_index(int n, const Inj& p) {
  const auto& ps = perms(n);
  for (size_t i = 0; i < ps.size(); ++i)
    if (ps[i] == p) return (int)i;
  throw std::logic_error("perm_index: not a permutation of the right size");
}

// Block sum tau_1 + ... + tau_k acting blockwise.
inline Inj perm_sum(const std::vector<Inj>& taus) {
  Inj out = inj_identity(0);
  for (auto& t : taus) out = concat(out, t);
  return out;
}

// The block permutation rho<j_1,...,j_k>: moves the s-th block (of size
// sizes[s-1]) to the position rho assigns it.
inline Inj perm_block(const Inj& rho, const std::vector<int>& sizes) {
  int k = rho.src;
  int total = 0;
  for (int sz : sizes) total += sz;
  Inj out{total, total, std::vector<int>(total, 0)};
  int off = 0;
  for (int s = 1; s <= k; ++s) {
    int toff = 0;
    for (int u = 1; u <= k; ++u)
      if (rho(u) < rho(s)) toff += sizes[u - 1];
    for (int t = 1; t <= sizes[s - 1]; ++t) out.img[off + t - 1] = toff + t;
    off += sizes[s - 1];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Operads in finite sets.

struct SetOperad {
  std::string name;
  int arity_cap = 0;
  std::vector<int> card;  // card[n] = |D(n)|, n <= arity_cap
  int unit = 0;           // element of D(1)
  // left Sigma_n-action on D(n); (rho sigma) . d = rho . (sigma . d)
  std::function<int(int n, const Inj& rho, int d)> act;
  // structure map: d in D(k) and args = (j_s, c_s in D(j_s)) to D(j_1+..+j_k)
  std::function<int(int k, int d, const std::vector<std::pair<int, int>>& args)> gam;
};

inline SetOperad commutativity_operad(int arity_cap) {
  SetOperad op;
  op.name = "commutativity";
  op.arity_cap = arity_cap;
  op.card.assign(arity_cap + 1, 1);
  op.unit = 0;
  op.act = [](int, const Inj&, int) { return 0; };
  op.gam = [](int, int, const std::vector<std::pair<int, int>>&) { return 0; };
  return op;
}

// Arity-n set Sigma_n with block composition; the set-level shadow of the
// Barratt-Eccles operad.
inline SetOperad associativity_operad(int arity_cap) {
  SetOperad op;
  op.name = "associativity";
  op.arity_cap = arity_cap;
  for (int n = 0; n <= arity_cap; ++n) op.card.push_back((int)perms(n).size());
  op.unit = 0;
  op.act = [](int n, const Inj& rho, int d) {
    return perm_index(n, compose(perms(n)[d], inverse(rho)));
  };
  op.gam = [](int k, int d, const std::vector<std::pair<int, int>>& args) {
    std::vector<int> sizes;
    std::vector<Inj> taus;
    int total = 0;
    for (auto& [j, c] : args) {
      sizes.push_back(j);
      taus.push_back(perms(j)[c]);
      total += j;
    }
    return perm_index(total, compose(perm_block(perms(k)[d], sizes),
                                     perm_sum(taus)));
  };
  return op;
}

struct OperadReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

namespace detail {
inline void operad_fail(OperadReport& rep, const std::string& w) {
  rep.ok = false;
  if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
}

// all tuples (j_1..j_k, c_s in D(j_s)) with j_1+...+j_k <= total_cap
inline void for_each_args(const SetOperad& op, int k, int total_cap,
                          const std::function<void(const std::vector<std::pair<int, int>>&)>& fn) {
  std::vector<std::pair<int, int>> cur;
  auto rec = [&](auto&& self, int depth, int used) -> void {
    if (depth == k) {
      fn(cur);
      return;
    }
    for (int j = 0; j + used <= total_cap; ++j)
      for (int c = 0; c < op.card[j]; ++c) {
        cur.push_back({j, c});
        self(self, depth + 1, used + j);
        cur.pop_back();
      }
  };
  rec(rec, 0, 0);
}
}  // namespace detail

// May relations within the arity cap: unit laws, associativity of the
// structure map, equivariance in the outer and inner slots, D(0) a point.
inline OperadReport validate_operad(const SetOperad& op) {
  OperadReport rep;
  if (op.card.empty() || op.card[0] != 1)
    detail::operad_fail(rep, "arity-0 set is not a point");
  // action: left action by bijections
  for (int n = 0; n <= std::min(op.arity_cap, 3); ++n) {
    for (auto& rho : perms(n)) {
      std::set<int> img;
      for (int d = 0; d < op.card[n]; ++d) img.insert(op.act(n, rho, d));
      if ((int)img.size() != op.card[n])
        detail::operad_fail(rep, "action not bijective at arity " + std::to_string(n));
      for (auto& tau : perms(n))
        for (int d = 0; d < op.card[n]; ++d)
          if (op.act(n, compose(rho, tau), d) !=
              op.act(n, rho, op.act(n, tau, d)))
            detail::operad_fail(rep, "not a left action at arity " + std::to_string(n));
    }
  }
  // unit laws
  for (int n = 0; n <= op.arity_cap; ++n)
    for (int d = 0; d < op.card[n]; ++d) {
      if (op.gam(1, op.unit, {{n, d}}) != d)
        detail::operad_fail(rep, "left unit law fails at arity " + std::to_string(n));
      if (op.gam(n, d, std::vector<std::pair<int, int>>(n, {1, op.unit})) != d)
        detail::operad_fail(rep, "right unit law fails at arity " + std::to_string(n));
    }
  // associativity of gamma on small tuples
  for (int k = 0; k <= std::min(op.arity_cap, 2); ++k)
    for (int d = 0; d < op.card[k]; ++d)
      detail::for_each_args(op, k, std::min(op.arity_cap, 3), [&](const auto& mid) {
        int total_mid = 0;
        for (auto& [j, c] : mid) total_mid += j;
        detail::for_each_args(op, total_mid, op.arity_cap, [&](const auto& inner) {
          // route 1: compose outer with mid, then with inner
          int dm = op.gam(k, d, mid);
          int lhs = op.gam(total_mid, dm, inner);
          // route 2: compose each mid slot with its inner block first
          std::vector<std::pair<int, int>> collapsed;
          int pos = 0;
          for (auto& [j, c] : mid) {
            std::vector<std::pair<int, int>> block(inner.begin() + pos,
                                                   inner.begin() + pos + j);
            int total = 0;
            for (auto& [jj, cc] : block) total += jj;
            collapsed.push_back({total, op.gam(j, c, block)});
            pos += j;
          }
          if (lhs != op.gam(k, d, collapsed))
            detail::operad_fail(rep, "associativity of the structure map fails");
        });
      });
  // equivariance: inner slot s, gamma(d; .., tau.c_s, ..) = iota_s(tau).gamma
  for (int k = 1; k <= std::min(op.arity_cap, 2); ++k)
    for (int d = 0; d < op.card[k]; ++d)
      detail::for_each_args(op, k, op.arity_cap, [&](const auto& args) {
        std::vector<int> sizes;
        for (auto& [j, c] : args) sizes.push_back(j);
        int total = 0;
        for (int sz : sizes) total += sz;
        int base = op.gam(k, d, args);
        for (int s = 0; s < k; ++s)
          for (auto& tau : perms(sizes[s])) {
            auto twisted = args;
            twisted[s].second = op.act(sizes[s], tau, twisted[s].second);
            std::vector<Inj> blocks;
            for (int u = 0; u < k; ++u)
              blocks.push_back(u == s ? tau : inj_identity(sizes[u]));
            if (op.gam(k, d, twisted) != op.act(total, perm_sum(blocks), base))
              detail::operad_fail(rep, "inner equivariance fails");
          }
        // outer: gamma(rho.d; args permuted) = block(rho).gamma(d; args)
        for (auto& rho : perms(k)) {
          std::vector<std::pair<int, int>> permuted(k);
          for (int u = 1; u <= k; ++u) permuted[rho(u) - 1] = args[u - 1];
          if (op.gam(k, op.act(k, rho, d), permuted) !=
              op.act(total, perm_block(rho, sizes), base))
            detail::operad_fail(rep, "outer equivariance fails");
        }
      });
  return rep;
}

// ---------------------------------------------------------------------------
// Discrete diagram-space helpers shared by the filtration machinery.  A
// vertex-level map is described by a function on (object, vertex id).

inline int disc_apply(const DiagMap& f, const Obj& o, int v) {
  return f.at.at(o).img[0][v].base_id;
}

inline DiagMap disc_map(const DiagSpace& X, const DiagSpace& Y,
                        const std::function<int(const Obj&, int)>& fn) {
  DiagMap out;
  for (auto& o : X.objects()) {
    SimplicialMap m;
    m.img.resize(X.dim_cap + 1);
    for (int v = 0; v < X.level(o).count(0); ++v) {
      int w = fn(o, v);
      if (w < 0 || w >= Y.level(o).count(0))
        throw std::logic_error("disc_map: image vertex out of range");
      m.img[0].push_back(FormalSimplex{0, w, {0}});
    }
    out.at[o] = std::move(m);
  }
  return out;
}

inline bool disc_map_bijective(const DiagMap& f, const DiagSpace& X,
                               const DiagSpace& Y) {
  for (auto& o : X.objects()) {
    std::set<int> img;
    for (int v = 0; v < X.level(o).count(0); ++v) img.insert(disc_apply(f, o, v));
    if ((int)img.size() != X.level(o).count(0) ||
        X.level(o).count(0) != Y.level(o).count(0))
      return false;
  }
  return true;
}

// The block permutation as a morphism concat(ks permuted by rho) -> concat(ks)
// in the index category: the copy of ks[rho^{-1}(j)-1] sitting at slot j goes
// identically to its original block.
inline Mor block_permutation(CatId cat, const std::vector<Obj>& ks, const Inj& rho) {
  int n = (int)ks.size();
  std::vector<int> off1(n, 0), off2(n, 0);
  for (int u = 1; u < n; ++u) {
    off1[u] = off1[u - 1] + ks[u - 1].n1;
    off2[u] = off2[u - 1] + ks[u - 1].n2;
  }
  Inj rinv = n > 0 ? inverse(rho) : inj_identity(0);
  int t1 = n > 0 ? off1[n - 1] + ks[n - 1].n1 : 0;
  int t2 = n > 0 ? off2[n - 1] + ks[n - 1].n2 : 0;
  Inj b1{t1, t1, std::vector<int>(t1, 0)}, b2{t2, t2, std::vector<int>(t2, 0)};
  int p1 = 0, p2 = 0;
  for (int j = 1; j <= n; ++j) {
    int src = rinv(j) - 1;
    for (int t = 1; t <= ks[src].n1; ++t) b1.img[p1++] = off1[src] + t;
    for (int t = 1; t <= ks[src].n2; ++t) b2.img[p2++] = off2[src] + t;
  }
  if (cat == CatId::Pt) return Mor{CatId::Pt, {}, {}, {}};
  if (cat == CatId::J) return mor_J(b1, b2, {});
  return Mor{cat, b1, {}, {}};
}

// ---------------------------------------------------------------------------
// Colimits over subcategories of n-fold product shapes of the monoidal power.
// A slot shape lists the spaces indexed by the shape's states together with
// the state-advancing maps; a filtration stage restricts the allowed state
// vectors.

struct SlotShape {
  std::vector<DiagSpace> spaces;
  std::vector<std::tuple<int, int, DiagMap>> edges;  // (from-state, to-state, map)
};

// One node of the brute-force colimit: slot states, a monoidal cell
// (k_1..k_n, mu: k_1 # .. # k_n -> m), and a vertex of each factor.
struct BoxNode {
  std::vector<int> s;
  std::vector<Obj> ks;
  Mor mu;
  std::vector<int> elems;
  auto operator<=>(const BoxNode&) const = default;
};

struct FiltSpace {
  CatId cat = CatId::I;
  int max_degree = 0;
  int n = 0;
  SlotShape shape;
  std::function<bool(const std::vector<int>&)> allowed;
  std::map<Obj, std::map<BoxNode, int>> cls;
  std::map<Obj, std::vector<BoxNode>> rep;
  DiagSpace space;

  int class_of(const Obj& m, const BoxNode& node) const {
    auto it = cls.at(m).find(node);
    if (it == cls.at(m).end())
      throw std::logic_error("FiltSpace: node not in the enumeration");
    return it->second;
  }
};

// an additive budget on the slot entries, pruning the node enumeration; it
// must be invariant along the colimit relations
struct SlotBudget {
  std::function<int(int state, const Obj&, int elem)> cost;
  int budget = 0;
};

namespace detail {
inline void enumerate_box_nodes(const CatId cat, int max_degree,
                                const SlotShape& shape, int n,
                                const std::function<bool(const std::vector<int>&)>& allowed,
                                const Obj& m,
                                const std::function<void(const BoxNode&)>& fn,
                                const SlotBudget* budget = nullptr) {
  std::vector<int> s(n, 0);
  std::vector<Obj> ks(n, monoidal_unit(cat));
  auto objs = enumerate_obj(cat, max_degree);
  auto rec_elems = [&](auto&& self, const Mor& mu, std::vector<int>& elems,
                       int depth, int used) -> void {
    if (depth == n) {
      fn(BoxNode{s, ks, mu, elems});
      return;
    }
    int cnt = shape.spaces[s[depth]].level(ks[depth]).count(0);
    for (int v = 0; v < cnt; ++v) {
      int c = budget ? budget->cost(s[depth], ks[depth], v) : 0;
      if (budget && used + c > budget->budget) continue;
      elems.push_back(v);
      self(self, mu, elems, depth + 1, used + c);
      elems.pop_back();
    }
  };
  auto rec_cells = [&](auto&& self, int depth, const Obj& acc) -> void {
    if (depth == n) {
      for (auto& mu : enumerate_mor(acc, m)) {
        std::vector<int> elems;
        rec_elems(rec_elems, mu, elems, 0, 0);
      }
      return;
    }
    for (auto& k : objs) {
      if (shape.spaces[s[depth]].level(k).count(0) == 0) continue;
      Obj next = concat(acc, k);
      if (next.n1 > m.n1 || next.n2 > m.n2) continue;
      ks[depth] = k;
      self(self, depth + 1, next);
    }
  };
  auto rec_states = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (allowed(s)) rec_cells(rec_cells, 0, monoidal_unit(cat));
      return;
    }
    for (int st = 0; st < (int)shape.spaces.size(); ++st) {
      s[depth] = st;
      self(self, depth + 1);
    }
  };
  rec_states(rec_states, 0);
}
}  // namespace detail

inline FiltSpace filt_colim(CatId cat, int max_degree, const SlotShape& shape,
                            int n,
                            const std::function<bool(const std::vector<int>&)>& allowed,
                            const SlotBudget* budget = nullptr) {
  FiltSpace F;
  F.cat = cat;
  F.max_degree = max_degree;
  F.n = n;
  F.shape = shape;
  F.allowed = allowed;
  F.space.cat = cat;
  F.space.max_degree = max_degree;
  F.space.dim_cap = shape.spaces.empty() ? 0 : shape.spaces[0].dim_cap;
  auto objs = enumerate_obj(cat, max_degree);
  for (auto& m : objs) {
    std::map<BoxNode, int> id;
    std::vector<BoxNode> nodes;
    detail::enumerate_box_nodes(cat, max_degree, shape, n, allowed, m,
                                [&](const BoxNode& node) {
                                  if (id.emplace(node, (int)nodes.size()).second)
                                    nodes.push_back(node);
                                },
                                budget);
    detail::UnionFind uf(nodes.size());
    auto unite_if_present = [&](const BoxNode& from, const BoxNode& to) {
      auto it = id.find(to);
      if (it != id.end()) uf.unite(id.at(from), it->second);
    };
    for (auto& node : nodes) {
      // state-advancing morphisms one slot at a time
      for (auto& [from, to, f] : shape.edges)
        for (int j = 0; j < n; ++j) {
          if (node.s[j] != from) continue;
          BoxNode other = node;
          other.s[j] = to;
          if (!allowed(other.s)) continue;
          other.elems[j] = disc_apply(f, node.ks[j], node.elems[j]);
          unite_if_present(node, other);
        }
      // single-slot cell morphisms generate the product shape: for slot j and
      // g: k_j -> k', unite with any (ks', mu') satisfying mu = mu' o (1#g#1)
      for (int j = 0; j < n; ++j)
        for (auto& k2 : objs)
          for (auto& g : enumerate_mor(node.ks[j], k2)) {
            if (g.is_identity()) continue;
            BoxNode other = node;
            other.ks[j] = k2;
            other.elems[j] =
                shape.spaces[node.s[j]]
                    .apply(g, FormalSimplex{0, node.elems[j], {0}})
                    .base_id;
            Mor acc = identity(monoidal_unit(cat));
            for (int u = 0; u < n; ++u)
              acc = concat(acc, u == j ? g : identity(node.ks[u]));
            Obj tgt = monoidal_unit(cat);
            for (auto& k : other.ks) tgt = concat(tgt, k);
            for (auto& mu2 : enumerate_mor(tgt, m)) {
              if (!(compose(mu2, acc) == node.mu)) continue;
              other.mu = mu2;
              unite_if_present(node, other);
            }
          }
    }
    auto& cmap = F.cls[m];
    auto& reps = F.rep[m];
    std::map<int, int> root_cls;
    for (size_t i = 0; i < nodes.size(); ++i) {
      int r = uf.find((int)i);
      auto [it, fresh] = root_cls.try_emplace(r, (int)reps.size());
      if (fresh) reps.push_back(nodes[i]);
      cmap[nodes[i]] = it->second;
    }
    F.space.levels[m] = sset_discrete((int)reps.size(), F.space.dim_cap);
  }
  // the index-category action: post-compose the gluing morphism
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        SimplicialMap f;
        f.img.resize(F.space.dim_cap + 1);
        for (auto& node : F.rep.at(a)) {
          BoxNode moved = node;
          moved.mu = compose(nu, node.mu);
          f.img[0].push_back(FormalSimplex{0, F.class_of(b, moved), {0}});
        }
        F.space.action[nu] = std::move(f);
      }
  return F;
}

// The Sigma_n-action permuting the monoidal factors, on colimit classes.
inline int filt_act(const FiltSpace& F, const Obj& m, const Inj& rho, int c) {
  const BoxNode& node = F.rep.at(m)[c];
  int n = F.n;
  Inj rinv = inverse(rho);
  BoxNode moved;
  moved.s.resize(n);
  moved.ks.resize(n);
  moved.elems.resize(n);
  for (int j = 1; j <= n; ++j) {
    moved.s[j - 1] = node.s[rinv(j) - 1];
    moved.ks[j - 1] = node.ks[rinv(j) - 1];
    moved.elems[j - 1] = node.elems[rinv(j) - 1];
  }
  moved.mu = compose(node.mu, block_permutation(F.cat, node.ks, rho));
  return F.class_of(m, moved);
}

inline FiltSpace tensor_power(const DiagSpace& X, int n) {
  SlotShape shape;
  shape.spaces.push_back(X);
  return filt_colim(X.cat, X.max_degree, shape, n,
                    [](const std::vector<int>&) { return true; });
}

// Q^n_i(f): at most i slots advanced along f.
inline FiltSpace q_filtration(const DiagSpace& X0, const DiagSpace& X1,
                              const DiagMap& f, int n, int i) {
  SlotShape shape;
  shape.spaces.push_back(X0);
  shape.spaces.push_back(X1);
  shape.edges.push_back({0, 1, f});
  return filt_colim(X0.cat, X0.max_degree, shape, n, [i](const std::vector<int>& s) {
    int ones = 0;
    for (int v : s) ones += v == 1;
    return ones <= i;
  });
}

// P^n_i(f1,f2): at most i slots in the X1 corner of the span.
inline FiltSpace p_filtration(const DiagSpace& X0, const DiagSpace& X1,
                              const DiagSpace& X2, const DiagMap& f1,
                              const DiagMap& f2, int n, int i) {
  SlotShape shape;
  shape.spaces.push_back(X0);
  shape.spaces.push_back(X1);
  shape.spaces.push_back(X2);
  shape.edges.push_back({0, 1, f1});
  shape.edges.push_back({0, 2, f2});
  return filt_colim(X0.cat, X0.max_degree, shape, n, [i](const std::vector<int>& s) {
    int ones = 0;
    for (int v : s) ones += v == 1;
    return ones <= i;
  });
}

// The comparison from one stage to a later stage of the same shape.
inline DiagMap filt_stage_map(const FiltSpace& from, const FiltSpace& to) {
  return disc_map(from.space, to.space, [&](const Obj& m, int c) {
    return to.class_of(m, from.rep.at(m)[c]);
  });
}

// The monoidal product of two discrete diagram spaces as a two-slot colimit.
inline FiltSpace mixed_tensor(const DiagSpace& A, const DiagSpace& B) {
  SlotShape shape;
  shape.spaces.push_back(A);
  shape.spaces.push_back(B);
  return filt_colim(A.cat, A.max_degree, shape, 2,
                    [](const std::vector<int>& s) {
                      return s == std::vector<int>{0, 1};
                    });
}

// ---------------------------------------------------------------------------
// Pushout squares of discrete diagram spaces, checked levelwise.

struct SquareReport {
  bool commutes = true;
  bool pushout = true;
  std::vector<std::string> witnesses;
  bool ok() const { return commutes && pushout; }
};

// Is T, with legs u: L -> T and v: R -> T, the pushout of L <-a- M -b-> R?
inline SquareReport check_pushout_square(const DiagSpace& M, const DiagSpace& L,
                                         const DiagSpace& R, const DiagSpace& T,
                                         const DiagMap& a, const DiagMap& b,
                                         const DiagMap& u, const DiagMap& v) {
  SquareReport rep;
  auto fail = [&](bool& flag, const std::string& w) {
    flag = false;
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
  };
  for (auto& m : M.objects()) {
    int nl = L.level(m).count(0), nr = R.level(m).count(0);
    for (int w = 0; w < M.level(m).count(0); ++w)
      if (disc_apply(u, m, disc_apply(a, m, w)) !=
          disc_apply(v, m, disc_apply(b, m, w)))
        fail(rep.commutes, "square does not commute at " + m.str());
    detail::UnionFind uf(nl + nr);
    for (int w = 0; w < M.level(m).count(0); ++w)
      uf.unite(disc_apply(a, m, w), nl + disc_apply(b, m, w));
    std::map<int, int> value;  // root of the gluing -> element of T
    bool well = true;
    for (int x = 0; x < nl + nr; ++x) {
      int t = x < nl ? disc_apply(u, m, x) : disc_apply(v, m, x - nl);
      auto [it, fresh] = value.try_emplace(uf.find(x), t);
      if (!fresh && it->second != t) well = false;
    }
    if (!well) fail(rep.pushout, "comparison ill-defined at " + m.str());
    std::set<int> img;
    for (auto& [r, t] : value) img.insert(t);
    if ((int)img.size() != (int)value.size() ||
        (int)value.size() != T.level(m).count(0))
      fail(rep.pushout, "comparison to the corner not bijective at " + m.str() +
                            ": " + std::to_string(value.size()) + " classes vs " +
                            std::to_string(T.level(m).count(0)));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The iterated pushout product f box ... box f as the inclusion of the
// next-to-last stage of the advancing filtration into the full power.

struct PushoutProduct {
  FiltSpace dom;  // Q^n_{n-1}(f)
  FiltSpace cod;  // X1^{box n}
  DiagMap map;
};

inline PushoutProduct iterated_pushout_product(const DiagSpace& X0,
                                               const DiagSpace& X1,
                                               const DiagMap& f, int n) {
  PushoutProduct P;
  P.dom = q_filtration(X0, X1, f, n, n - 1);
  P.cod = tensor_power(X1, n);
  P.map = disc_map(P.dom.space, P.cod.space, [&P, &f, n](const Obj& m, int c) {
    BoxNode node = P.dom.rep.at(m)[c];
    for (int j = 0; j < n; ++j) {
      if (node.s[j] == 0)
        node.elems[j] = disc_apply(f, node.ks[j], node.elems[j]);
      node.s[j] = 0;  // the power has a single state
    }
    return P.cod.class_of(m, node);
  });
  return P;
}

// ---------------------------------------------------------------------------
// The equivariant pushout squares connecting consecutive stages of the span
// filtration: the i-th attaching square is built from the slots that have not
// reached the far corner, grouped by which i slots those are.

struct PushoutLemmaReport {
  bool ok = true;
  std::vector<std::string> witnesses;
};

namespace detail {
inline void lemma_fail(PushoutLemmaReport& rep, const std::string& w) {
  rep.ok = false;
  if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
}

inline long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}
}  // namespace detail

inline PushoutLemmaReport check_iterated_pushout_lemma(
    const DiagSpace& X0, const DiagSpace& X1, const DiagSpace& X2,
    const DiagMap& f1, const DiagMap& f2, int n) {
  PushoutLemmaReport rep;
  CatId cat = X0.cat;
  int md = X0.max_degree;
  SlotShape shape;
  shape.spaces.push_back(X0);
  shape.spaces.push_back(X1);
  shape.spaces.push_back(X2);
  shape.edges.push_back({0, 1, f1});
  shape.edges.push_back({0, 2, f2});
  auto count1 = [](const std::vector<int>& s) {
    int o = 0;
    for (int v : s) o += v == 1;
    return o;
  };
  auto countn2 = [](const std::vector<int>& s) {
    int o = 0;
    for (int v : s) o += v != 2;
    return o;
  };
  for (int i = 1; i <= n; ++i) {
    FiltSpace BL = p_filtration(X0, X1, X2, f1, f2, n, i - 1);
    FiltSpace BR = p_filtration(X0, X1, X2, f1, f2, n, i);
    // top corners: exactly i slots still moving, the rest parked at the far
    // corner; on the left at most i-1 of the moving slots have advanced
    FiltSpace TL = filt_colim(cat, md, shape, n,
                              [i, count1, countn2](const std::vector<int>& s) {
                                return countn2(s) == i && count1(s) <= i - 1;
                              });
    FiltSpace TR = filt_colim(cat, md, shape, n,
                              [i, count1, countn2](const std::vector<int>& s) {
                                return countn2(s) == i && count1(s) == i;
                              });
    auto advance = [&](BoxNode node) {
      for (int j = 0; j < n; ++j)
        if (node.s[j] == 0) {
          node.elems[j] = disc_apply(f1, node.ks[j], node.elems[j]);
          node.s[j] = 1;
        }
      return node;
    };
    DiagMap tl_tr = disc_map(TL.space, TR.space, [&](const Obj& m, int c) {
      return TR.class_of(m, advance(TL.rep.at(m)[c]));
    });
    DiagMap tl_bl = disc_map(TL.space, BL.space, [&](const Obj& m, int c) {
      return BL.class_of(m, TL.rep.at(m)[c]);
    });
    DiagMap tr_br = disc_map(TR.space, BR.space, [&](const Obj& m, int c) {
      return BR.class_of(m, TR.rep.at(m)[c]);
    });
    DiagMap bl_br = filt_stage_map(BL, BR);
    SquareReport sq = check_pushout_square(TL.space, TR.space, BL.space,
                                           BR.space, tl_tr, tl_bl, tr_br, bl_br);
    if (!sq.ok())
      for (auto& w : sq.witnesses)
        detail::lemma_fail(rep, "stage " + std::to_string(i) + ": " + w);
    // the square is equivariant for the factor permutations
    for (auto& rho : perms(n))
      for (auto& m : TL.space.objects()) {
        for (int c = 0; c < TL.space.level(m).count(0); ++c) {
          int d = filt_act(TL, m, rho, c);
          if (disc_apply(tl_tr, m, d) !=
              filt_act(TR, m, rho, disc_apply(tl_tr, m, c)))
            detail::lemma_fail(rep, "top map not equivariant at stage " +
                                        std::to_string(i));
          if (disc_apply(tl_bl, m, d) !=
              filt_act(BL, m, rho, disc_apply(tl_bl, m, c)))
            detail::lemma_fail(rep, "left map not equivariant at stage " +
                                        std::to_string(i));
        }
        for (int c = 0; c < BL.space.level(m).count(0); ++c)
          if (disc_apply(bl_br, m, filt_act(BL, m, rho, c)) !=
              filt_act(BR, m, rho, disc_apply(bl_br, m, c)))
            detail::lemma_fail(rep, "stage inclusion not equivariant at stage " +
                                        std::to_string(i));
      }
    // the left corner has the size of an induced construction: choosing which
    // i slots still move, times the far power tensored with the cube corner
    FiltSpace far = tensor_power(X2, n - i);
    FiltSpace corner = q_filtration(X0, X1, f1, i, i - 1);
    FiltSpace piece = mixed_tensor(far.space, corner.space);
    for (auto& m : TL.space.objects())
      if (TL.space.level(m).count(0) !=
          detail::binom(n, i) * piece.space.level(m).count(0))
        detail::lemma_fail(rep, "induced-size identity fails at stage " +
                                    std::to_string(i) + ", " + m.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The operadic monad on discrete diagram spaces, with a degree shift: the
// classes of (n, d in D(n+k), node in X^{box n}) under simultaneous
// permutation of d (through the first n letters) and the factors.  Everything
// is enumerated inside a weight window: n+k and the total leaf weight of the
// slots must stay within the arity cap, so that iterated structure maps of
// nested values remain expressible.

struct MonadRep {
  int n = 0;
  int d = 0;
  BoxNode node;
};

struct MonadValue {
  SetOperad op;
  int k = 0;
  DiagSpace carrier;
  std::function<int(const Obj&, int)> weight;
  DiagSpace space;
  std::map<Obj, std::vector<MonadRep>> rep;
  std::map<Obj, std::vector<int>> wt;  // per class: max(arity, leaf weight)
  std::map<Obj, std::map<std::tuple<int, int, int>, int>> cls;
  std::map<int, FiltSpace> pow;  // powers of the carrier by arity
  bool exact = false;

  int class_of(const Obj& m, int n, int d, const BoxNode& node) const {
    auto pit = pow.find(n);
    if (pit == pow.end())
      throw std::logic_error("monad: arity outside the truncation window");
    auto it = cls.at(m).find({n, d, pit->second.class_of(m, node)});
    if (it == cls.at(m).end())
      throw std::logic_error("monad: element outside the truncation window");
    return it->second;
  }
};

inline MonadValue monad_shifted_weighted(
    const SetOperad& op, const DiagSpace& X,
    const std::function<int(const Obj&, int)>& weight, int k) {
  if (k > op.arity_cap)
    throw std::invalid_argument("monad: arity cap smaller than the shift");
  MonadValue M;
  M.op = op;
  M.k = k;
  M.carrier = X;
  M.weight = weight;
  M.space.cat = X.cat;
  M.space.max_degree = X.max_degree;
  M.space.dim_cap = X.dim_cap;
  SlotShape power_shape;
  power_shape.spaces.push_back(X);
  SlotBudget window{[weight](int, const Obj& o, int e) { return weight(o, e); },
                    op.arity_cap - k};
  for (int n = 0; n + k <= op.arity_cap; ++n)
    M.pow.emplace(n, filt_colim(X.cat, X.max_degree, power_shape, n,
                                [](const std::vector<int>&) { return true; },
                                &window));
  auto objs = enumerate_obj(X.cat, X.max_degree);
  for (auto& m : objs) {
    std::vector<std::tuple<int, int, int>> items;
    std::map<std::tuple<int, int, int>, int> idx;
    for (auto& [n, P] : M.pow) {
      int cnt = P.space.level(m).count(0);
      for (int c = 0; c < cnt; ++c) {
        const BoxNode& node = P.rep.at(m)[c];
        int w = 0;
        for (int j = 0; j < n; ++j) w += weight(node.ks[j], node.elems[j]);
        if (w + k > op.arity_cap) continue;
        for (int d = 0; d < op.card[n + k]; ++d) {
          idx.emplace(std::make_tuple(n, d, c), (int)items.size());
          items.push_back({n, d, c});
        }
      }
    }
    detail::UnionFind uf((int)items.size());
    for (size_t i = 0; i < items.size(); ++i) {
      auto [n, d, c] = items[i];
      for (auto& rho : perms(n)) {
        int d2 = op.act(n + k, perm_sum({rho, inj_identity(k)}), d);
        int c2 = filt_act(M.pow.at(n), m, rho, c);
        uf.unite((int)i, idx.at({n, d2, c2}));
      }
    }
    auto& cmap = M.cls[m];
    auto& reps = M.rep[m];
    auto& wts = M.wt[m];
    std::map<int, int> root_cls;
    for (size_t i = 0; i < items.size(); ++i) {
      auto [n, d, c] = items[i];
      int r = uf.find((int)i);
      auto [it, fresh] = root_cls.try_emplace(r, (int)reps.size());
      if (fresh) {
        const BoxNode& node = M.pow.at(n).rep.at(m)[c];
        int w = 0;
        for (int j = 0; j < n; ++j) w += weight(node.ks[j], node.elems[j]);
        reps.push_back(MonadRep{n, d, node});
        wts.push_back(std::max(n, w));
      }
      cmap[items[i]] = it->second;
    }
    M.space.levels[m] = sset_discrete((int)reps.size(), M.space.dim_cap);
  }
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        SimplicialMap f;
        f.img.resize(M.space.dim_cap + 1);
        for (auto& r : M.rep.at(a)) {
          const FiltSpace& P = M.pow.at(r.n);
          int moved = P.space.apply(nu, FormalSimplex{0, P.class_of(a, r.node), {0}})
                          .base_id;
          f.img[0].push_back(
              FormalSimplex{0, M.cls.at(b).at({r.n, r.d, moved}), {0}});
        }
        M.space.action[nu] = std::move(f);
      }
  // on a positive carrier the window loses nothing: every arity that can
  // contribute at an enumerated level fits under the cap
  bool positive = true;
  for (auto& o : objs)
    if (o.n1 == 0 && X.level(o).count(0) > 0) positive = false;
  M.exact = positive && X.max_degree + k <= op.arity_cap;
  return M;
}

inline MonadValue monad_D(const SetOperad& op, const DiagSpace& X) {
  return monad_shifted_weighted(op, X, [](const Obj&, int) { return 1; }, 0);
}

inline MonadValue monad_shifted(const SetOperad& op, const DiagSpace& X, int k) {
  return monad_shifted_weighted(op, X, [](const Obj&, int) { return 1; }, k);
}

// slot weights for building the next nesting level on top of M's classes
inline std::function<int(const Obj&, int)> monad_weights(const MonadValue& M) {
  const MonadValue* p = &M;
  return [p](const Obj& o, int c) { return p->wt.at(o)[c]; };
}

// The unit X -> D(X): the one-slot value with the operadic unit.
inline DiagMap monad_eta(const MonadValue& M) {
  if (M.k != 0) throw std::logic_error("monad_eta: shifted values have no unit");
  return disc_map(M.carrier, M.space, [&M](const Obj& m, int v) {
    return M.class_of(m, 1, M.op.unit, BoxNode{{0}, {m}, identity(m), {v}});
  });
}

// Gamma-composition of a nested value: the slots of `node` hold classes of
// `inner`; the k shifted letters of the target receive units.
inline int monad_gamma_class(const MonadValue& target, const MonadValue& inner,
                             const Obj& m, int n, int d, const BoxNode& node) {
  const SetOperad& op = target.op;
  std::vector<std::pair<int, int>> args;
  std::vector<Obj> ks2;
  std::vector<int> elems2;
  Mor big = identity(monoidal_unit(target.carrier.cat));
  int total = 0;
  for (int j = 0; j < n; ++j) {
    const MonadRep& r = inner.rep.at(node.ks[j])[node.elems[j]];
    args.push_back({r.n, r.d});
    total += r.n;
    for (int u = 0; u < r.n; ++u) {
      ks2.push_back(r.node.ks[u]);
      elems2.push_back(r.node.elems[u]);
    }
    big = concat(big, r.node.mu);
  }
  for (int u = 0; u < target.k; ++u) args.push_back({1, op.unit});
  int dd = op.gam(n + target.k, d, args);
  BoxNode out{std::vector<int>(total, 0), ks2, compose(node.mu, big), elems2};
  return target.class_of(m, total, dd, out);
}

// The multiplication D(D(X),k) -> D(X,k) on classes.
inline DiagMap monad_mu(const MonadValue& target, const MonadValue& nested,
                        const MonadValue& inner) {
  return disc_map(nested.space, target.space, [&](const Obj& m, int c) {
    const MonadRep& r = nested.rep.at(m)[c];
    return monad_gamma_class(target, inner, m, r.n, r.d, r.node);
  });
}

// Apply f: X -> Y to the slot entries, D(X,k) -> D(Y,k).
inline DiagMap monad_slotwise(const MonadValue& src, const MonadValue& dst,
                              const DiagMap& f) {
  return disc_map(src.space, dst.space, [&](const Obj& m, int c) {
    const MonadRep& r = src.rep.at(m)[c];
    BoxNode node = r.node;
    for (int j = 0; j < r.n; ++j)
      node.elems[j] = disc_apply(f, node.ks[j], node.elems[j]);
    return dst.class_of(m, r.n, r.d, node);
  });
}

// Unit and associativity laws of the monad on the truncation.
inline OperadReport check_monad_laws(const SetOperad& op, const DiagSpace& X) {
  OperadReport rep;
  MonadValue DX = monad_D(op, X);
  MonadValue DD = monad_shifted_weighted(op, DX.space, monad_weights(DX), 0);
  MonadValue DDD = monad_shifted_weighted(op, DD.space, monad_weights(DD), 0);
  DiagMap eta = monad_eta(DX);
  DiagMap etaD = monad_eta(DD);
  DiagMap Deta = monad_slotwise(DX, DD, eta);
  DiagMap mu = monad_mu(DX, DD, DX);
  validate_diagmap(mu, DD.space, DX.space);
  for (auto& m : DX.space.objects())
    for (int c = 0; c < DX.space.level(m).count(0); ++c) {
      if (disc_apply(mu, m, disc_apply(Deta, m, c)) != c)
        detail::operad_fail(rep, "mu o D(eta) is not the identity at " + m.str());
      if (disc_apply(mu, m, disc_apply(etaD, m, c)) != c)
        detail::operad_fail(rep, "mu o eta is not the identity at " + m.str());
    }
  DiagMap muD = monad_mu(DD, DDD, DD);
  DiagMap Dmu = monad_slotwise(DDD, DD, mu);
  for (auto& m : DDD.space.objects())
    for (int c = 0; c < DDD.space.level(m).count(0); ++c)
      if (disc_apply(mu, m, disc_apply(muD, m, c)) !=
          disc_apply(mu, m, disc_apply(Dmu, m, c)))
        detail::operad_fail(rep, "mu is not associative at " + m.str());
  return rep;
}

// ---------------------------------------------------------------------------
// Algebras over the monad.

struct DAlgebra {
  SetOperad op;
  DiagSpace A;
  // the structure map on representatives of D(A): node lives over A
  std::function<int(const Obj&, int n, int d, const BoxNode&)> xi;
  // slot weight of a carrier entry: how much arity it contributes after
  // flattening (1 unless the carrier is itself operadic)
  std::function<int(const Obj&, int)> weight;
};

inline std::function<int(const Obj&, int)> algebra_weight(const DAlgebra& alg) {
  if (alg.weight) return alg.weight;
  return [](const Obj&, int) { return 1; };
}

inline DiagMap algebra_xi_map(const DAlgebra& alg, const MonadValue& DA) {
  return disc_map(DA.space, alg.A, [&](const Obj& m, int c) {
    const MonadRep& r = DA.rep.at(m)[c];
    return alg.xi(m, r.n, r.d, r.node);
  });
}

// unit and action laws for the structure map, within the truncation
inline OperadReport check_algebra(const DAlgebra& alg) {
  OperadReport rep;
  MonadValue DA = monad_shifted_weighted(alg.op, alg.A, algebra_weight(alg), 0);
  MonadValue DDA = monad_shifted_weighted(alg.op, DA.space, monad_weights(DA), 0);
  DiagMap xi = algebra_xi_map(alg, DA);
  DiagMap eta = monad_eta(DA);
  for (auto& m : alg.A.objects())
    for (int v = 0; v < alg.A.level(m).count(0); ++v)
      if (disc_apply(xi, m, disc_apply(eta, m, v)) != v)
        detail::operad_fail(rep, "xi o eta is not the identity at " + m.str());
  DiagMap mu = monad_mu(DA, DDA, DA);
  DiagMap Dxi = monad_slotwise(DDA, DA, xi);
  for (auto& m : DDA.space.objects())
    for (int c = 0; c < DDA.space.level(m).count(0); ++c)
      if (disc_apply(xi, m, disc_apply(mu, m, c)) !=
          disc_apply(xi, m, disc_apply(Dxi, m, c)))
        detail::operad_fail(rep, "xi does not respect the multiplication at " +
                                     m.str());
  return rep;
}

struct FreeAlgebra {
  MonadValue dx;
  DAlgebra alg;
};

inline FreeAlgebra free_algebra(const SetOperad& op, const DiagSpace& X) {
  auto dx = std::make_shared<MonadValue>(monad_D(op, X));
  FreeAlgebra F;
  F.dx = *dx;
  F.alg.op = op;
  F.alg.A = dx->space;
  F.alg.xi = [dx](const Obj& m, int n, int d, const BoxNode& node) {
    return monad_gamma_class(*dx, *dx, m, n, d, node);
  };
  F.alg.weight = [dx](const Obj& o, int c) { return dx->wt.at(o)[c]; };
  return F;
}

// {0,...,top} with saturating addition: an algebra for the commutativity
// operad on finite sets, on the nose
inline DAlgebra saturating_sum_algebra(int arity_cap, int top) {
  DAlgebra alg;
  alg.op = commutativity_operad(arity_cap);
  alg.A = discrete_diagspace(
      CatId::Pt, 0, 0, [top](const Obj&) { return top + 1; },
      [](const Mor&, int e) { return e; });
  alg.xi = [top](const Obj&, int n, int, const BoxNode& node) {
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += node.elems[j];
    return std::min(sum, top);
  };
  return alg;
}

// ---------------------------------------------------------------------------
// Split forks: a pair d0, d1: A -> B with e: B -> C and a contraction (s, t)
// exhibiting e as a coequalizer absolutely.

struct ForkReport {
  bool identities = true;
  bool forked = true;
  bool coequalizer = true;
  std::vector<std::string> witnesses;
  bool ok() const { return identities && forked && coequalizer; }
};

inline ForkReport split_fork_check(const DiagSpace& A, const DiagSpace& B,
                                   const DiagSpace& C, const DiagMap& d0,
                                   const DiagMap& d1, const DiagMap& e,
                                   const DiagMap& s, const DiagMap& t) {
  ForkReport rep;
  auto fail = [&](bool& flag, const std::string& w) {
    flag = false;
    if (rep.witnesses.size() < 8) rep.witnesses.push_back(w);
  };
  for (auto& m : C.objects())
    for (int c = 0; c < C.level(m).count(0); ++c)
      if (disc_apply(e, m, disc_apply(s, m, c)) != c)
        fail(rep.identities, "e o s is not the identity at " + m.str());
  for (auto& m : B.objects())
    for (int b = 0; b < B.level(m).count(0); ++b) {
      if (disc_apply(d0, m, disc_apply(t, m, b)) != b)
        fail(rep.identities, "d0 o t is not the identity at " + m.str());
      if (disc_apply(d1, m, disc_apply(t, m, b)) !=
          disc_apply(s, m, disc_apply(e, m, b)))
        fail(rep.identities, "d1 o t is not s o e at " + m.str());
    }
  for (auto& m : A.objects())
    for (int a = 0; a < A.level(m).count(0); ++a)
      if (disc_apply(e, m, disc_apply(d0, m, a)) !=
          disc_apply(e, m, disc_apply(d1, m, a)))
        fail(rep.forked, "e does not fork the pair at " + m.str());
  // e is the coequalizer computed independently
  for (auto& m : B.objects()) {
    detail::UnionFind uf(B.level(m).count(0));
    for (int a = 0; a < A.level(m).count(0); ++a)
      uf.unite(disc_apply(d0, m, a), disc_apply(d1, m, a));
    std::map<int, int> value;
    std::set<int> img;
    bool well = true;
    for (int b = 0; b < B.level(m).count(0); ++b) {
      int c = disc_apply(e, m, b);
      auto [it, fresh] = value.try_emplace(uf.find(b), c);
      if (fresh) img.insert(c);
      if (!fresh && it->second != c) well = false;
    }
    if (!well || (int)img.size() != (int)value.size() ||
        (int)value.size() != C.level(m).count(0))
      fail(rep.coequalizer, "e is not the coequalizer at " + m.str());
  }
  return rep;
}

// The canonical split fork of an algebra: the free resolution contracted by
// the units.
inline ForkReport algebra_split_fork(const DAlgebra& alg) {
  MonadValue DA = monad_shifted_weighted(alg.op, alg.A, algebra_weight(alg), 0);
  MonadValue DDA = monad_shifted_weighted(alg.op, DA.space, monad_weights(DA), 0);
  DiagMap xi = algebra_xi_map(alg, DA);
  DiagMap mu = monad_mu(DA, DDA, DA);
  DiagMap Dxi = monad_slotwise(DDA, DA, xi);
  DiagMap s = monad_eta(DA);
  DiagMap t = monad_eta(DDA);
  return split_fork_check(DDA.space, DA.space, alg.A, mu, Dxi, xi, s, t);
}

// ---------------------------------------------------------------------------
// The shifted functors U_k: the coequalizer of the shifted free resolution of
// an algebra, carrying a residual action of the k extra letters.

struct UkValue {
  SetOperad op;
  int k = 0;
  MonadValue dak;                       // the shifted free value on the carrier
  DiagSpace space;                      // the coequalizer classes
  std::map<Obj, std::vector<int>> rep;  // class -> representative dak class
  std::map<Obj, std::vector<int>> cls;  // dak class -> class
  std::map<Obj, std::vector<int>> to_operad;  // terminal projection to D(k)
};

// The optional carrier weight matters when the carrier is itself operadic:
// it must bound the arity a slot contributes after flattening, so that the
// relations stay inside the truncation window.
inline UkValue u_k(const DAlgebra& alg, int k,
                   std::function<int(const Obj&, int)> weight = {}) {
  if (alg.op.arity_cap < k + 1)
    throw std::invalid_argument(
        "u_k: arity cap cannot express the unit insertions of the shifted "
        "coequalizer");
  if (!weight) weight = algebra_weight(alg);
  UkValue U;
  U.op = alg.op;
  U.k = k;
  U.dak = monad_shifted_weighted(alg.op, alg.A, weight, k);
  MonadValue DA = monad_shifted_weighted(alg.op, alg.A, weight, 0);
  MonadValue bar = monad_shifted_weighted(alg.op, DA.space, monad_weights(DA), k);
  U.space.cat = alg.A.cat;
  U.space.max_degree = alg.A.max_degree;
  U.space.dim_cap = alg.A.dim_cap;
  auto objs = alg.A.objects();
  for (auto& m : objs) {
    detail::UnionFind uf(U.dak.space.level(m).count(0));
    for (auto& r : bar.rep.at(m)) {
      // evaluate the algebra structure in every slot
      BoxNode ev = r.node;
      for (int j = 0; j < r.n; ++j) {
        const MonadRep& inner = DA.rep.at(r.node.ks[j])[r.node.elems[j]];
        ev.elems[j] = alg.xi(r.node.ks[j], inner.n, inner.d, inner.node);
      }
      int c1 = U.dak.class_of(m, r.n, r.d, ev);
      // or flatten through the structure map of the operad
      int c0 = monad_gamma_class(U.dak, DA, m, r.n, r.d, r.node);
      uf.unite(c0, c1);
    }
    auto& cmap = U.cls[m];
    auto& reps = U.rep[m];
    std::map<int, int> root_cls;
    for (int c = 0; c < U.dak.space.level(m).count(0); ++c) {
      int r = uf.find(c);
      auto [it, fresh] = root_cls.try_emplace(r, (int)reps.size());
      if (fresh) reps.push_back(c);
      cmap.push_back(it->second);
    }
    U.space.levels[m] = sset_discrete((int)reps.size(), U.space.dim_cap);
  }
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        SimplicialMap f;
        f.img.resize(U.space.dim_cap + 1);
        for (int dc : U.rep.at(a)) {
          int moved =
              U.dak.space.apply(nu, FormalSimplex{0, dc, {0}}).base_id;
          f.img[0].push_back(FormalSimplex{0, U.cls.at(b)[moved], {0}});
        }
        U.space.action[nu] = std::move(f);
      }
  // the projection to D(k): collapse every slot and keep the shifted letters
  for (auto& m : objs) {
    std::vector<int> proj(U.dak.space.level(m).count(0));
    for (int dc = 0; dc < (int)proj.size(); ++dc) {
      const MonadRep& r = U.dak.rep.at(m)[dc];
      std::vector<std::pair<int, int>> args(r.n, {0, 0});
      for (int u = 0; u < k; ++u) args.push_back({1, alg.op.unit});
      proj[dc] = alg.op.gam(r.n + k, r.d, args);
    }
    auto& out = U.to_operad[m];
    out.assign(U.space.level(m).count(0), -1);
    for (int dc = 0; dc < (int)proj.size(); ++dc) {
      int c = U.cls.at(m)[dc];
      if (out[c] == -1) out[c] = proj[dc];
      if (out[c] != proj[dc])
        throw std::logic_error("u_k: terminal projection not constant on classes");
    }
  }
  return U;
}

// the action of the k shifted letters on the coequalizer classes
inline int uk_act(const UkValue& U, const Obj& m, const Inj& rho, int c) {
  const MonadRep& r = U.dak.rep.at(m)[U.rep.at(m)[c]];
  int d2 = U.op.act(r.n + U.k, perm_sum({inj_identity(r.n), rho}), r.d);
  return U.cls.at(m)[U.dak.class_of(m, r.n, d2, r.node)];
}

// U_0 forgets the shift: the structure map identifies it with the carrier.
inline OperadReport check_u0_forgetful(const DAlgebra& alg) {
  OperadReport rep;
  UkValue U = u_k(alg, 0);
  for (auto& m : alg.A.objects()) {
    std::map<int, int> value;
    std::set<int> img;
    for (int dc = 0; dc < U.dak.space.level(m).count(0); ++dc) {
      const MonadRep& r = U.dak.rep.at(m)[dc];
      int a = alg.xi(m, r.n, r.d, r.node);
      auto [it, fresh] = value.try_emplace(U.cls.at(m)[dc], a);
      if (fresh) img.insert(a);
      if (it->second != a)
        detail::operad_fail(rep, "structure map not constant on classes at " +
                                     m.str());
    }
    if ((int)img.size() != (int)value.size() ||
        (int)value.size() != alg.A.level(m).count(0))
      detail::operad_fail(rep, "U_0 does not recover the carrier at " + m.str());
  }
  return rep;
}

// On a free algebra the coequalizer collapses onto the shifted free value.
inline OperadReport check_uk_free(const SetOperad& op, const DiagSpace& X, int k) {
  OperadReport rep;
  FreeAlgebra F = free_algebra(op, X);
  UkValue U = u_k(F.alg, k, monad_weights(F.dx));
  MonadValue dxk = monad_shifted(op, X, k);
  for (auto& m : X.objects()) {
    std::map<int, int> value;
    std::set<int> img;
    for (int dc = 0; dc < U.dak.space.level(m).count(0); ++dc) {
      const MonadRep& r = U.dak.rep.at(m)[dc];
      int e = monad_gamma_class(dxk, F.dx, m, r.n, r.d, r.node);
      auto [it, fresh] = value.try_emplace(U.cls.at(m)[dc], e);
      if (fresh) img.insert(e);
      if (it->second != e)
        detail::operad_fail(rep, "flattening not constant on classes at " +
                                     m.str());
    }
    if ((int)img.size() != (int)value.size() ||
        (int)value.size() != dxk.space.level(m).count(0))
      detail::operad_fail(rep, "U_k of the free algebra is not the shifted "
                               "free value at " + m.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The filtration of the shifted functor of an algebra pushout along a free
// map: stage i lets at most i slots come from Y, the rest from the carrier or
// from X, and the relations either evaluate the algebra structure in a nested
// slot or flatten it through the operad.

struct UkStage {
  std::map<int, FiltSpace> pf;  // arity -> the span stage at this advance
  DiagSpace space;
  std::map<Obj, std::vector<std::tuple<int, int, int>>> rep;  // (n, d, class)
  std::map<Obj, std::map<std::tuple<int, int, int>, int>> cls;

  int class_of(const Obj& m, int n, int d, int pc) const {
    auto it = cls.at(m).find({n, d, pc});
    if (it == cls.at(m).end())
      throw std::logic_error("UkStage: element outside the truncation window");
    return it->second;
  }
};

struct UkFiltration {
  SetOperad op;
  int k = 0;
  std::vector<UkStage> stages;
  std::vector<DiagMap> steps;  // stages[i-1] -> stages[i]
};

inline UkFiltration structured_pushout_filtration(const DAlgebra& alg,
                                                  const DiagSpace& X,
                                                  const DiagSpace& Y,
                                                  const DiagMap& f,
                                                  const DiagMap& p, int k,
                                                  int top) {
  if (alg.op.arity_cap < k + 1)
    throw std::invalid_argument(
        "filtration: arity cap cannot express the shifted coequalizer");
  const SetOperad& op = alg.op;
  CatId cat = alg.A.cat;
  int md = alg.A.max_degree;
  auto w = algebra_weight(alg);
  MonadValue DA = monad_shifted_weighted(op, alg.A, w, 0);
  DiagMap xi = algebra_xi_map(alg, DA);
  DiagMap eta = monad_eta(DA);
  DiagMap etap = disc_map(X, DA.space, [&](const Obj& m, int v) {
    return disc_apply(eta, m, disc_apply(p, m, v));
  });
  SlotShape span;  // slots over X, Y, and the carrier
  span.spaces = {X, Y, alg.A};
  span.edges.push_back({0, 1, f});
  span.edges.push_back({0, 2, p});
  SlotShape bar_span;  // slots over X, Y, and the free value on the carrier
  bar_span.spaces = {X, Y, DA.space};
  bar_span.edges.push_back({0, 1, f});
  bar_span.edges.push_back({0, 2, etap});
  auto daw = monad_weights(DA);
  SlotBudget span_budget{
      [&w](int s, const Obj& o, int e) { return s == 2 ? w(o, e) : 1; },
      op.arity_cap - k};
  SlotBudget bar_budget{
      [&daw](int s, const Obj& o, int e) { return s == 2 ? daw(o, e) : 1; },
      op.arity_cap - k};
  auto allowed_ones = [](int i) {
    return std::function<bool(const std::vector<int>&)>(
        [i](const std::vector<int>& s) {
          int ones = 0;
          for (int v : s) ones += v == 1;
          return ones <= i;
        });
  };
  UkFiltration F;
  F.op = op;
  F.k = k;
  auto objs = alg.A.objects();
  for (int i = 0; i <= top; ++i) {
    UkStage st;
    std::map<int, FiltSpace> barpf;
    for (int n = 0; n + k <= op.arity_cap; ++n) {
      st.pf.emplace(n, filt_colim(cat, md, span, n, allowed_ones(i),
                                  &span_budget));
      barpf.emplace(n, filt_colim(cat, md, bar_span, n, allowed_ones(i),
                                  &bar_budget));
    }
    st.space.cat = cat;
    st.space.max_degree = md;
    st.space.dim_cap = alg.A.dim_cap;
    for (auto& m : objs) {
      std::vector<std::tuple<int, int, int>> items;
      std::map<std::tuple<int, int, int>, int> idx;
      for (auto& [n, P] : st.pf)
        for (int c = 0; c < P.space.level(m).count(0); ++c)
          for (int d = 0; d < op.card[n + k]; ++d) {
            idx.emplace(std::make_tuple(n, d, c), (int)items.size());
            items.push_back({n, d, c});
          }
      detail::UnionFind uf((int)items.size());
      // the diagonal permutation relation through the first n letters
      for (size_t t = 0; t < items.size(); ++t) {
        auto [n, d, c] = items[t];
        for (auto& rho : perms(n)) {
          int d2 = op.act(n + k, perm_sum({rho, inj_identity(k)}), d);
          int c2 = filt_act(st.pf.at(n), m, rho, c);
          uf.unite((int)t, idx.at({n, d2, c2}));
        }
      }
      // the two faces of the bar construction agree
      for (auto& [n, B] : barpf)
        for (auto& bn : B.rep.at(m))
          for (int d = 0; d < op.card[n + k]; ++d) {
            BoxNode ev = bn;
            for (int j = 0; j < n; ++j)
              if (bn.s[j] == 2)
                ev.elems[j] = disc_apply(xi, bn.ks[j], bn.elems[j]);
            int c1 = st.pf.at(n).class_of(m, ev);
            std::vector<std::pair<int, int>> args;
            std::vector<int> s2, elems2;
            std::vector<Obj> ks2;
            Mor big = identity(monoidal_unit(cat));
            for (int j = 0; j < n; ++j) {
              if (bn.s[j] != 2) {
                args.push_back({1, op.unit});
                s2.push_back(bn.s[j]);
                ks2.push_back(bn.ks[j]);
                elems2.push_back(bn.elems[j]);
                big = concat(big, identity(bn.ks[j]));
              } else {
                const MonadRep& r = DA.rep.at(bn.ks[j])[bn.elems[j]];
                args.push_back({r.n, r.d});
                for (int u = 0; u < r.n; ++u) {
                  s2.push_back(2);
                  ks2.push_back(r.node.ks[u]);
                  elems2.push_back(r.node.elems[u]);
                }
                big = concat(big, r.node.mu);
              }
            }
            for (int u = 0; u < k; ++u) args.push_back({1, op.unit});
            int d0 = op.gam(n + k, d, args);
            BoxNode node0{s2, ks2, compose(bn.mu, big), elems2};
            int c0 = st.pf.at((int)ks2.size()).class_of(m, node0);
            uf.unite(idx.at({n, d, c1}), idx.at({(int)ks2.size(), d0, c0}));
          }
      auto& cmap = st.cls[m];
      auto& reps = st.rep[m];
      std::map<int, int> root_cls;
      for (size_t t = 0; t < items.size(); ++t) {
        int r = uf.find((int)t);
        auto [it, fresh] = root_cls.try_emplace(r, (int)reps.size());
        if (fresh) reps.push_back(items[t]);
        cmap[items[t]] = it->second;
      }
      st.space.levels[m] = sset_discrete((int)reps.size(), st.space.dim_cap);
    }
    for (auto& a : objs)
      for (auto& b : objs)
        for (auto& nu : enumerate_mor(a, b)) {
          if (nu.is_identity()) continue;
          SimplicialMap sm;
          sm.img.resize(st.space.dim_cap + 1);
          for (auto& [n, d, pc] : st.rep.at(a)) {
            int moved = st.pf.at(n)
                            .space.apply(nu, FormalSimplex{0, pc, {0}})
                            .base_id;
            sm.img[0].push_back(
                FormalSimplex{0, st.cls.at(b).at({n, d, moved}), {0}});
          }
          st.space.action[nu] = std::move(sm);
        }
    F.stages.push_back(std::move(st));
    if (i > 0) {
      const UkStage& lo = F.stages[i - 1];
      const UkStage& hi = F.stages[i];
      F.steps.push_back(disc_map(lo.space, hi.space, [&](const Obj& m, int c) {
        auto [n, d, pc] = lo.rep.at(m)[c];
        const BoxNode& node = lo.pf.at(n).rep.at(m)[pc];
        return hi.class_of(m, n, d, hi.pf.at(n).class_of(m, node));
      }));
    }
  }
  return F;
}

// The bottom stage recovers the shifted functor of the unglued algebra.
inline OperadReport check_filtration_bottom(const UkFiltration& F,
                                            const UkValue& U) {
  OperadReport rep;
  const UkStage& S0 = F.stages[0];
  for (auto& m : S0.space.objects()) {
    std::map<int, int> value;
    std::set<int> img;
    for (int dc = 0; dc < U.dak.space.level(m).count(0); ++dc) {
      const MonadRep& r = U.dak.rep.at(m)[dc];
      BoxNode node{std::vector<int>(r.n, 2), r.node.ks, r.node.mu,
                   r.node.elems};
      int sc = S0.class_of(m, r.n, r.d, S0.pf.at(r.n).class_of(m, node));
      auto [it, fresh] = value.try_emplace(U.cls.at(m)[dc], sc);
      if (fresh) img.insert(sc);
      if (it->second != sc)
        detail::operad_fail(rep, "comparison not constant on classes at " +
                                     m.str());
    }
    if ((int)img.size() != (int)value.size() ||
        (int)value.size() != S0.space.level(m).count(0))
      detail::operad_fail(rep, "bottom stage does not match the shifted "
                               "functor at " + m.str());
  }
  return rep;
}

// The top stage matches an independent presentation of the shifted functor of
// the glued algebra, built from space-level pushouts.
inline OperadReport check_filtration_top(const UkFiltration& F,
                                         const DAlgebra& alg,
                                         const DiagSpace& X, const DiagSpace& Y,
                                         const DiagMap& f, const DiagMap& p) {
  OperadReport rep;
  const SetOperad& op = alg.op;
  int k = F.k;
  auto w = algebra_weight(alg);
  MonadValue DA = monad_shifted_weighted(op, alg.A, w, 0);
  DiagMap eta = monad_eta(DA);
  DiagMap etap = disc_map(X, DA.space, [&](const Obj& m, int v) {
    return disc_apply(eta, m, disc_apply(p, m, v));
  });
  DiagPushout AY = diag_pushout(X, Y, alg.A, f, p);
  DiagPushout DAY = diag_pushout(X, Y, DA.space, f, etap);
  auto daw = monad_weights(DA);
  // weights and preferred preimages on the pushouts
  std::map<Obj, std::vector<int>> ay_w, day_w, day_da, day_y;
  for (auto& m : alg.A.objects()) {
    ay_w[m].assign(AY.space.level(m).count(0), -1);
    day_w[m].assign(DAY.space.level(m).count(0), -1);
    day_da[m].assign(DAY.space.level(m).count(0), -1);
    day_y[m].assign(DAY.space.level(m).count(0), -1);
    for (int v = 0; v < Y.level(m).count(0); ++v) {
      ay_w[m][disc_apply(AY.from_first, m, v)] = 1;
      int dv = disc_apply(DAY.from_first, m, v);
      day_w[m][dv] = 1;
      day_y[m][dv] = v;
    }
    for (int a = 0; a < alg.A.level(m).count(0); ++a) {
      int v = disc_apply(AY.from_second, m, a);
      int wa = w(m, a);
      if (ay_w[m][v] != -1 && ay_w[m][v] != wa)
        throw std::logic_error("filtration: incompatible weights across the "
                               "gluing");
      ay_w[m][v] = wa;
    }
    for (int a = 0; a < DA.space.level(m).count(0); ++a) {
      int v = disc_apply(DAY.from_second, m, a);
      day_w[m][v] = daw(m, a);
      day_da[m][v] = a;
    }
  }
  MonadValue pres = monad_shifted_weighted(
      op, AY.space, [&](const Obj& o, int v) { return ay_w.at(o)[v]; }, k);
  MonadValue pres_bar = monad_shifted_weighted(
      op, DAY.space, [&](const Obj& o, int v) { return day_w.at(o)[v]; }, k);
  // coequalize the two faces over the glued carrier
  std::map<Obj, std::vector<int>> qcls;
  std::map<Obj, int> qcount;
  for (auto& m : alg.A.objects()) {
    detail::UnionFind uf(pres.space.level(m).count(0));
    for (auto& bn : pres_bar.rep.at(m)) {
      const BoxNode& node = bn.node;
      BoxNode ev = node;
      std::vector<std::pair<int, int>> args;
      std::vector<Obj> ks2;
      std::vector<int> elems2;
      Mor big = identity(monoidal_unit(alg.A.cat));
      for (int j = 0; j < bn.n; ++j) {
        int da = day_da.at(node.ks[j])[node.elems[j]];
        if (da >= 0) {
          const MonadRep& r = DA.rep.at(node.ks[j])[da];
          ev.elems[j] = disc_apply(
              AY.from_second, node.ks[j],
              alg.xi(node.ks[j], r.n, r.d, r.node));
          args.push_back({r.n, r.d});
          for (int u = 0; u < r.n; ++u) {
            ks2.push_back(r.node.ks[u]);
            elems2.push_back(
                disc_apply(AY.from_second, r.node.ks[u], r.node.elems[u]));
          }
          big = concat(big, r.node.mu);
        } else {
          int y = day_y.at(node.ks[j])[node.elems[j]];
          ev.elems[j] = disc_apply(AY.from_first, node.ks[j], y);
          args.push_back({1, op.unit});
          ks2.push_back(node.ks[j]);
          elems2.push_back(ev.elems[j]);
          big = concat(big, identity(node.ks[j]));
        }
      }
      for (int u = 0; u < k; ++u) args.push_back({1, op.unit});
      int c1 = pres.class_of(m, bn.n, bn.d, ev);
      BoxNode node0{std::vector<int>((int)ks2.size(), 0), ks2,
                    compose(node.mu, big), elems2};
      int c0 = pres.class_of(m, (int)ks2.size(), op.gam(bn.n + k, bn.d, args),
                             node0);
      uf.unite(c0, c1);
    }
    auto& cl = qcls[m];
    std::map<int, int> root_cls;
    for (int c = 0; c < pres.space.level(m).count(0); ++c) {
      auto [it, fresh] = root_cls.try_emplace(uf.find(c), (int)root_cls.size());
      cl.push_back(it->second);
    }
    qcount[m] = (int)root_cls.size();
  }
  // the canonical comparison from the last stage
  const UkStage& ST = F.stages.back();
  for (auto& m : ST.space.objects()) {
    std::map<int, int> value;
    std::set<int> img;
    for (auto& [item, sc] : ST.cls.at(m)) {
      auto [n, d, pc] = item;
      const BoxNode& node = ST.pf.at(n).rep.at(m)[pc];
      BoxNode glued = node;
      for (int j = 0; j < n; ++j) {
        if (node.s[j] == 0)
          glued.elems[j] = disc_apply(
              AY.from_first, node.ks[j],
              disc_apply(f, node.ks[j], node.elems[j]));
        else if (node.s[j] == 1)
          glued.elems[j] =
              disc_apply(AY.from_first, node.ks[j], node.elems[j]);
        else
          glued.elems[j] =
              disc_apply(AY.from_second, node.ks[j], node.elems[j]);
        glued.s[j] = 0;
      }
      int q = qcls.at(m)[pres.class_of(m, n, d, glued)];
      auto [it, fresh] = value.try_emplace(sc, q);
      if (fresh) img.insert(q);
      if (it->second != q)
        detail::operad_fail(rep, "comparison not constant on classes at " +
                                     m.str());
    }
    if ((int)img.size() != (int)value.size() ||
        (int)value.size() != qcount.at(m))
      detail::operad_fail(rep, "top stage does not match the presentation at " +
                                   m.str());
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The attaching square at stage i: the top corners balance the shifted
// functor at i extra letters against the cube corner and the full power.

struct BalancedSpace {
  FiltSpace mixed;
  DiagSpace space;
  std::map<Obj, std::vector<int>> rep;  // class -> mixed class
  std::map<Obj, std::vector<int>> cls;  // mixed class -> class
};

// rho permutes the first rho.src of the shifted letters
inline int uk_act_first(const UkValue& U, const Obj& m, const Inj& rho, int c) {
  return uk_act(U, m, perm_sum({rho, inj_identity(U.k - rho.src)}), c);
}

inline BalancedSpace balanced_product(const UkValue& U, const FiltSpace& W,
                                      int i) {
  BalancedSpace B;
  B.mixed = mixed_tensor(U.space, W.space);
  B.space.cat = B.mixed.space.cat;
  B.space.max_degree = B.mixed.space.max_degree;
  B.space.dim_cap = B.mixed.space.dim_cap;
  for (auto& m : B.mixed.space.objects()) {
    int cnt = B.mixed.space.level(m).count(0);
    detail::UnionFind uf(cnt);
    for (int c = 0; c < cnt; ++c) {
      const BoxNode& node = B.mixed.rep.at(m)[c];
      for (auto& rho : perms(i)) {
        BoxNode moved = node;
        moved.elems[0] = uk_act_first(U, node.ks[0], rho, node.elems[0]);
        moved.elems[1] = filt_act(W, node.ks[1], rho, node.elems[1]);
        uf.unite(c, B.mixed.class_of(m, moved));
      }
    }
    auto& cl = B.cls[m];
    auto& reps = B.rep[m];
    std::map<int, int> root_cls;
    for (int c = 0; c < cnt; ++c) {
      auto [it, fresh] = root_cls.try_emplace(uf.find(c), (int)reps.size());
      if (fresh) reps.push_back(c);
      cl.push_back(it->second);
    }
    B.space.levels[m] = sset_discrete((int)reps.size(), B.space.dim_cap);
  }
  for (auto& a : B.mixed.space.objects())
    for (auto& b : B.mixed.space.objects())
      for (auto& nu : enumerate_mor(a, b)) {
        if (nu.is_identity()) continue;
        SimplicialMap sm;
        sm.img.resize(B.space.dim_cap + 1);
        for (int mc : B.rep.at(a)) {
          int moved = B.mixed.space.apply(nu, FormalSimplex{0, mc, {0}}).base_id;
          sm.img[0].push_back(FormalSimplex{0, B.cls.at(b)[moved], {0}});
        }
        B.space.action[nu] = std::move(sm);
      }
  return B;
}

inline SquareReport check_filtration_square(const UkFiltration& F,
                                            const DAlgebra& alg,
                                            const DiagSpace& X,
                                            const DiagSpace& Y,
                                            const DiagMap& f, int i) {
  const UkStage& BL = F.stages[i - 1];
  const UkStage& BR = F.stages[i];
  UkValue U = u_k(alg, i + F.k);
  FiltSpace Q = q_filtration(X, Y, f, i, i - 1);
  FiltSpace Yp = tensor_power(Y, i);
  BalancedSpace TL = balanced_product(U, Q, i);
  BalancedSpace TR = balanced_product(U, Yp, i);
  auto combine = [&](const UkStage& S, const Obj& m, const BoxNode& mixnode,
                     bool fromQ) {
    const MonadRep& r =
        U.dak.rep.at(mixnode.ks[0])[U.rep.at(mixnode.ks[0])[mixnode.elems[0]]];
    const FiltSpace& W = fromQ ? Q : Yp;
    const BoxNode& qn = W.rep.at(mixnode.ks[1])[mixnode.elems[1]];
    BoxNode node;
    node.s.assign(r.n, 2);
    node.ks = r.node.ks;
    node.elems = r.node.elems;
    for (int j = 0; j < i; ++j) {
      node.s.push_back(fromQ ? qn.s[j] : 1);
      node.ks.push_back(qn.ks[j]);
      node.elems.push_back(qn.elems[j]);
    }
    node.mu = compose(mixnode.mu, concat(r.node.mu, qn.mu));
    int n = r.n + i;
    return S.class_of(m, n, r.d, S.pf.at(n).class_of(m, node));
  };
  DiagMap tl_bl = disc_map(TL.space, BL.space, [&](const Obj& m, int c) {
    return combine(BL, m, TL.mixed.rep.at(m)[TL.rep.at(m)[c]], true);
  });
  DiagMap tr_br = disc_map(TR.space, BR.space, [&](const Obj& m, int c) {
    return combine(BR, m, TR.mixed.rep.at(m)[TR.rep.at(m)[c]], false);
  });
  DiagMap tl_tr = disc_map(TL.space, TR.space, [&](const Obj& m, int c) {
    BoxNode node = TL.mixed.rep.at(m)[TL.rep.at(m)[c]];
    BoxNode qn = Q.rep.at(node.ks[1])[node.elems[1]];
    for (int j = 0; j < i; ++j) {
      if (qn.s[j] == 0)
        qn.elems[j] = disc_apply(f, qn.ks[j], qn.elems[j]);
      qn.s[j] = 0;
    }
    node.elems[1] = Yp.class_of(node.ks[1], qn);
    return TR.cls.at(m)[TR.mixed.class_of(m, node)];
  });
  return check_pushout_square(TL.space, TR.space, BL.space, BR.space, tl_tr,
                              tl_bl, tr_br, F.steps[i - 1]);
}

}  // namespace dspace
