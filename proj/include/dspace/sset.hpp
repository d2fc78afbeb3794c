#pragma once

// Finite simplicial sets stored by nondegenerate simplices.
//
// Every simplex is a FormalSimplex: a nondegenerate base plus a monotone
// surjection (the Eilenberg-Zilber normal form), which keeps the infinite
// degeneracy tower finite. Operators (monotone maps on vertices) act through
// epi-mono factorization and the stored face data.

#include <dspace/fincat.hpp>
#include <dspace/smith.hpp>

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace dspace {

// Monotone maps [m] -> [n] on vertices, stored as value sequences of length
// m+1 with entries in 0..n.
using Monotone = std::vector<int>;

inline Monotone mono_identity(int m) {
  Monotone f(m + 1);
  std::iota(f.begin(), f.end(), 0);
  return f;
}
inline bool mono_is_identity(const Monotone& f) {
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != (int)i) return false;
  return true;
}
// composite g . f
inline Monotone mono_compose(const Monotone& g, const Monotone& f) {
  Monotone h(f.size());
  for (size_t i = 0; i < f.size(); ++i) h[i] = g[f[i]];
  return h;
}
// elementary face delta_i: [m-1] -> [m] (skips vertex i)
inline Monotone mono_face(int m, int i) {
  Monotone f;
  for (int v = 0; v <= m; ++v)
    if (v != i) f.push_back(v);
  return f;
}
// elementary degeneracy sigma_i: [m+1] -> [m] (repeats vertex i)
inline Monotone mono_degeneracy(int m, int i) {
  Monotone f;
  for (int v = 0; v <= m; ++v) {
    f.push_back(v);
    if (v == i) f.push_back(v);
  }
  return f;
}
// epi-mono factorization f = delta . sigma with sigma surjective
inline void mono_factor(const Monotone& f, Monotone& delta, Monotone& sigma) {
  delta.clear();
  sigma.clear();
  for (int v : f) {
    if (delta.empty() || delta.back() != v) delta.push_back(v);
    sigma.push_back((int)delta.size() - 1);
  }
}
// all monotone surjections [m] -> [q]
inline std::vector<Monotone> mono_surjections(int m, int q) {
  std::vector<Monotone> out;
  if (q > m) return out;
  // a surjection is determined by the q-subset of steps where it increments
  std::vector<int> comb(q);
  std::iota(comb.begin(), comb.end(), 0);
  if (q == 0) {
    out.push_back(Monotone(m + 1, 0));
    return out;
  }
  for (;;) {
    Monotone f(m + 1, 0);
    for (int j = 0, v = 0, ci = 0; j < m; ++j) {
      if (ci < q && comb[ci] == j) {
        ++v;
        ++ci;
      }
      f[j + 1] = v;
    }
    out.push_back(f);
    int i = q - 1;
    while (i >= 0 && comb[i] == m - q + i) --i;
    if (i < 0) break;
    ++comb[i];
    for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
  }
  return out;
}

// A (possibly degenerate) simplex in normal form: nondegenerate base simplex
// plus a monotone surjection onto its vertices.
struct FormalSimplex {
  int base_dim = 0;
  int base_id = 0;
  Monotone theta;  // [dim] ->> [base_dim]

  int dim() const { return (int)theta.size() - 1; }
  bool nondegenerate() const { return dim() == base_dim; }
  auto operator<=>(const FormalSimplex&) const = default;
};

struct FinSSet {
  int dim_cap = 0;
  std::vector<int> counts;  // counts[d] = number of nondegenerate d-simplices
  // faces[d][id][i] = normal form of the i-th face, for 1 <= d <= dim_cap
  std::vector<std::vector<std::vector<FormalSimplex>>> faces;

  int count(int d) const { return (d >= 0 && d <= dim_cap) ? counts[d] : 0; }
  const FormalSimplex& face(int d, int id, int i) const { return faces[d][id][i]; }
  FormalSimplex simplex(int d, int id) const {
    return FormalSimplex{d, id, mono_identity(d)};
  }
  long total_cells() const {
    long t = 0;
    for (int c : counts) t += c;
    return t;
  }
};

// Normal form of base . g for a nondegenerate base and monotone g.
inline FormalSimplex normalize(const FinSSet& X, int base_dim, int base_id,
                               const Monotone& g) {
  Monotone delta, sigma;
  mono_factor(g, delta, sigma);
  if ((int)delta.size() == base_dim + 1)  // delta is the identity
    return FormalSimplex{base_dim, base_id, sigma};
  // peel one missing vertex i off delta and recurse through the stored face
  int i = base_dim;
  {
    std::vector<bool> hit(base_dim + 1, false);
    for (int v : delta) hit[v] = true;
    for (int v = base_dim; v >= 0; --v)
      if (!hit[v]) { i = v; break; }
  }
  Monotone delta2;  // delta with the gap at i closed: [k] -> [base_dim - 1]
  for (int v : delta) delta2.push_back(v > i ? v - 1 : v);
  const FormalSimplex& f = X.face(base_dim, base_id, i);
  Monotone g2 = mono_compose(f.theta, mono_compose(delta2, sigma));
  return normalize(X, f.base_dim, f.base_id, g2);
}

// x . op for a formal simplex x and monotone op into [x.dim()].
inline FormalSimplex apply_op(const FinSSet& X, const FormalSimplex& x,
                              const Monotone& op) {
  return normalize(X, x.base_dim, x.base_id, mono_compose(x.theta, op));
}

inline void validate_sset(const FinSSet& X) {
  for (int d = 1; d <= X.dim_cap; ++d)
    for (int id = 0; id < X.count(d); ++id) {
      if ((int)X.faces[d][id].size() != d + 1)
        throw std::logic_error("FinSSet: wrong number of faces");
      for (int i = 0; i <= d; ++i) {
        const auto& f = X.face(d, id, i);
        if (f.dim() != d - 1 || f.base_dim > f.dim() || f.base_id >= X.count(f.base_dim))
          throw std::logic_error("FinSSet: bad face reference");
      }
      if (d >= 2)
        for (int j = 1; j <= d; ++j)
          for (int i = 0; i < j; ++i)
            if (apply_op(X, X.face(d, id, j), mono_face(d - 1, i)) !=
                apply_op(X, X.face(d, id, i), mono_face(d - 1, j - 1)))
              throw std::logic_error("FinSSet: simplicial identity failed at d=" +
                                     std::to_string(d));
    }
}

// All formal d-simplices (degenerate ones included).
inline std::vector<FormalSimplex> all_simplices(const FinSSet& X, int d) {
  std::vector<FormalSimplex> out;
  for (int q = 0; q <= std::min(d, X.dim_cap); ++q)
    for (auto& theta : mono_surjections(d, q))
      for (int id = 0; id < X.count(q); ++id)
        out.push_back(FormalSimplex{q, id, theta});
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Basic constructors.

inline FinSSet sset_empty(int dim_cap) {
  FinSSet X;
  X.dim_cap = dim_cap;
  X.counts.assign(dim_cap + 1, 0);
  X.faces.assign(dim_cap + 1, {});
  return X;
}

inline FinSSet sset_discrete(int n, int dim_cap) {
  FinSSet X = sset_empty(dim_cap);
  X.counts[0] = n;
  return X;
}

inline FinSSet sset_point(int dim_cap) { return sset_discrete(1, dim_cap); }

// The simplicial circle: one vertex, one nondegenerate edge.
inline FinSSet sset_circle(int dim_cap) {
  FinSSet X = sset_discrete(1, dim_cap);
  if (dim_cap >= 1) {
    X.counts[1] = 1;
    X.faces[1] = {{FormalSimplex{0, 0, {0}}, FormalSimplex{0, 0, {0}}}};
  }
  return X;
}

// The standard n-simplex, truncated at dim_cap; nondegenerate d-simplices are
// the (d+1)-subsets of {0..n}, ordered lexicographically.
inline FinSSet sset_delta(int n, int dim_cap, bool boundary_only = false) {
  FinSSet X = sset_empty(dim_cap);
  std::vector<std::vector<std::vector<int>>> subsets(dim_cap + 1);
  std::map<std::vector<int>, int> index;
  for (int d = 0; d <= dim_cap; ++d) {
    if (d > n) break;
    std::vector<int> comb(d + 1);
    std::iota(comb.begin(), comb.end(), 0);
    for (;;) {
      if (!(boundary_only && d == n)) {
        index[comb] = (int)subsets[d].size();
        subsets[d].push_back(comb);
      }
      int i = d;
      while (i >= 0 && comb[i] == n - d + i) --i;
      if (i < 0) break;
      ++comb[i];
      for (int j = i + 1; j <= d; ++j) comb[j] = comb[j - 1] + 1;
    }
    X.counts[d] = (int)subsets[d].size();
    if (d >= 1) {
      X.faces[d].resize(subsets[d].size());
      for (size_t id = 0; id < subsets[d].size(); ++id)
        for (int i = 0; i <= d; ++i) {
          std::vector<int> f = subsets[d][id];
          f.erase(f.begin() + i);
          X.faces[d][id].push_back(
              FormalSimplex{d - 1, index.at(f), mono_identity(d - 1)});
        }
    }
  }
  return X;
}

// ---------------------------------------------------------------------------
// Simplicial maps.

struct SimplicialMap {
  // img[d][id] = image of nondegenerate d-simplex id, as a formal simplex of
  // the target of the same dimension d
  std::vector<std::vector<FormalSimplex>> img;

  auto operator<=>(const SimplicialMap&) const = default;
};

inline FormalSimplex map_apply(const SimplicialMap& f, const FinSSet& target,
                               const FormalSimplex& x) {
  const FormalSimplex& im = f.img[x.base_dim][x.base_id];
  return normalize(target, im.base_dim, im.base_id,
                   mono_compose(im.theta, x.theta));
}

inline SimplicialMap map_identity(const FinSSet& X) {
  SimplicialMap f;
  f.img.resize(X.dim_cap + 1);
  for (int d = 0; d <= X.dim_cap; ++d)
    for (int id = 0; id < X.count(d); ++id)
      f.img[d].push_back(X.simplex(d, id));
  return f;
}

inline SimplicialMap map_compose(const SimplicialMap& g, const FinSSet& gtarget,
                                 const SimplicialMap& f) {
  SimplicialMap h;
  h.img.resize(f.img.size());
  for (size_t d = 0; d < f.img.size(); ++d)
    for (auto& x : f.img[d]) h.img[d].push_back(map_apply(g, gtarget, x));
  return h;
}

inline void validate_map(const SimplicialMap& f, const FinSSet& src,
                         const FinSSet& dst) {
  for (int d = 0; d <= src.dim_cap; ++d) {
    if ((int)f.img[d].size() != src.count(d))
      throw std::logic_error("SimplicialMap: wrong domain size");
    for (int id = 0; id < src.count(d); ++id) {
      if (f.img[d][id].dim() != d) throw std::logic_error("SimplicialMap: dim shift");
      for (int i = 0; d >= 1 && i <= d; ++i)
        if (map_apply(f, dst, src.face(d, id, i)) !=
            apply_op(dst, f.img[d][id], mono_face(d, i)))
          throw std::logic_error("SimplicialMap: does not commute with faces");
    }
  }
}

// ---------------------------------------------------------------------------
// Disjoint unions.

struct DisjointUnion {
  FinSSet S;
  std::vector<SimplicialMap> inclusions;
};

inline DisjointUnion sset_disjoint_union(const std::vector<const FinSSet*>& parts) {
  if (parts.empty()) throw std::invalid_argument("disjoint union of nothing: pass caps");
  int cap = parts[0]->dim_cap;
  DisjointUnion out;
  out.S = sset_empty(cap);
  std::vector<std::vector<int>> offset(parts.size(),
                                       std::vector<int>(cap + 1, 0));
  for (int d = 0; d <= cap; ++d) {
    int total = 0;
    for (size_t p = 0; p < parts.size(); ++p) {
      offset[p][d] = total;
      total += parts[p]->count(d);
    }
    out.S.counts[d] = total;
  }
  for (int d = 1; d <= cap; ++d) {
    out.S.faces[d].resize(out.S.counts[d]);
    for (size_t p = 0; p < parts.size(); ++p)
      for (int id = 0; id < parts[p]->count(d); ++id)
        for (int i = 0; i <= d; ++i) {
          FormalSimplex f = parts[p]->face(d, id, i);
          f.base_id += offset[p][f.base_dim];
          out.S.faces[d][offset[p][d] + id].push_back(f);
        }
  }
  for (size_t p = 0; p < parts.size(); ++p) {
    SimplicialMap inc;
    inc.img.resize(cap + 1);
    for (int d = 0; d <= cap; ++d)
      for (int id = 0; id < parts[p]->count(d); ++id)
        inc.img[d].push_back(out.S.simplex(d, id + offset[p][d]));
    out.inclusions.push_back(std::move(inc));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dense simplicial sets and normal-form extraction.
//
// A Dense presentation supplies all p-cells (degenerate included) with face
// and degeneracy operators; extraction finds the nondegenerate cells and
// rebuilds a FinSSet plus the normal form of every cell.

template <class Dense>
struct Extracted {
  FinSSet S;
  std::vector<std::map<typename Dense::Cell, FormalSimplex>> formal;  // per dim
  std::vector<std::vector<typename Dense::Cell>> nondeg;              // id -> cell

  FormalSimplex formal_of(int p, const typename Dense::Cell& c) const {
    return formal[p].at(c);
  }
};

template <class Dense>
Extracted<Dense> extract_sset(const Dense& D, int dim_cap) {
  Extracted<Dense> out;
  out.S = sset_empty(dim_cap);
  out.formal.resize(dim_cap + 1);
  out.nondeg.resize(dim_cap + 1);
  for (int p = 0; p <= dim_cap; ++p) {
    auto cells = D.cells(p);
    std::sort(cells.begin(), cells.end());
    // mark degenerate cells: c = s_i(d_i c) for some i
    for (auto& c : cells) {
      bool degen = false;
      std::pair<int, typename Dense::Cell> wit;
      for (int i = 0; p >= 1 && i < p && !degen; ++i) {
        auto r = D.face(p, c, i);
        if (D.degeneracy(p - 1, r, i) == c) {
          degen = true;
          wit = {i, r};
        }
      }
      if (!degen) {
        int id = (int)out.nondeg[p].size();
        out.nondeg[p].push_back(c);
        out.formal[p][c] = FormalSimplex{p, id, mono_identity(p)};
      } else {
        const FormalSimplex& rf = out.formal[p - 1].at(wit.second);
        out.formal[p][c] = FormalSimplex{
            rf.base_dim, rf.base_id,
            mono_compose(rf.theta, mono_degeneracy(p - 1, wit.first))};
      }
    }
    out.S.counts[p] = (int)out.nondeg[p].size();
    if (p >= 1) {
      out.S.faces[p].resize(out.nondeg[p].size());
      for (size_t id = 0; id < out.nondeg[p].size(); ++id)
        for (int i = 0; i <= p; ++i)
          out.S.faces[p][id].push_back(
              out.formal[p - 1].at(D.face(p, out.nondeg[p][id], i)));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Products.

struct ProductSSet {
  FinSSet S;
  // per dim: the (jointly nondegenerate) component pair of each simplex
  std::vector<std::vector<std::pair<FormalSimplex, FormalSimplex>>> cells;
  std::vector<std::map<std::pair<FormalSimplex, FormalSimplex>, int>> index;
  SimplicialMap proj1, proj2;
};

// Normal form of a pair of formal p-simplices: split off the common
// degeneracy tau so that the remaining pair is jointly nondegenerate.
inline void pair_normal_form(const FormalSimplex& a, const FormalSimplex& b,
                             FormalSimplex& na, FormalSimplex& nb, Monotone& tau) {
  int p = a.dim();
  tau.clear();
  Monotone ta, tb;
  int v = 0;
  for (int j = 0; j <= p; ++j) {
    bool collapse = j > 0 && a.theta[j] == a.theta[j - 1] &&
                    b.theta[j] == b.theta[j - 1];
    if (!collapse && j > 0) ++v;
    tau.push_back(v);
    if (!collapse || j == 0) {
      ta.push_back(a.theta[j]);
      tb.push_back(b.theta[j]);
    }
  }
  na = FormalSimplex{a.base_dim, a.base_id, ta};
  nb = FormalSimplex{b.base_dim, b.base_id, tb};
}

inline ProductSSet sset_product(const FinSSet& A, const FinSSet& B) {
  int cap = std::min(A.dim_cap, B.dim_cap);
  ProductSSet P;
  P.S = sset_empty(cap);
  P.cells.resize(cap + 1);
  P.index.resize(cap + 1);
  P.proj1.img.resize(cap + 1);
  P.proj2.img.resize(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    auto as = all_simplices(A, p);
    auto bs = all_simplices(B, p);
    for (auto& a : as)
      for (auto& b : bs) {
        bool joint = true;
        for (int j = 1; j <= p && joint; ++j)
          if (a.theta[j] == a.theta[j - 1] && b.theta[j] == b.theta[j - 1])
            joint = false;
        if (!joint) continue;
        P.index[p][{a, b}] = (int)P.cells[p].size();
        P.cells[p].push_back({a, b});
        P.proj1.img[p].push_back(a);
        P.proj2.img[p].push_back(b);
      }
    P.S.counts[p] = (int)P.cells[p].size();
    if (p >= 1) {
      P.S.faces[p].resize(P.cells[p].size());
      for (size_t id = 0; id < P.cells[p].size(); ++id) {
        const auto& [a, b] = P.cells[p][id];
        for (int i = 0; i <= p; ++i) {
          FormalSimplex fa = apply_op(A, a, mono_face(p, i));
          FormalSimplex fb = apply_op(B, b, mono_face(p, i));
          FormalSimplex na, nb;
          Monotone tau;
          pair_normal_form(fa, fb, na, nb, tau);
          int q = (int)tau.back();
          P.S.faces[p][id].push_back(
              FormalSimplex{q, P.index[q].at({na, nb}), tau});
        }
      }
    }
  }
  return P;
}

// Functorial map A x B -> A' x B' induced by f: A -> A', g: B -> B'.
inline SimplicialMap product_map(const ProductSSet& P, const FinSSet& A2,
                                 const FinSSet& B2, const ProductSSet& Q,
                                 const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.img.resize(P.S.dim_cap + 1);
  for (int p = 0; p <= P.S.dim_cap; ++p)
    for (auto& [a, b] : P.cells[p]) {
      FormalSimplex fa = map_apply(f, A2, a);
      FormalSimplex fb = map_apply(g, B2, b);
      FormalSimplex na, nb;
      Monotone tau;
      pair_normal_form(fa, fb, na, nb, tau);
      int q = (int)tau.back();
      h.img[p].push_back(FormalSimplex{q, Q.index[q].at({na, nb}), tau});
    }
  return h;
}

// The pair map <f, g>: X -> A' x B' for f: X -> A', g: X -> B'.
inline SimplicialMap pair_into_product(const FinSSet& X, const FinSSet& A2,
                                       const FinSSet& B2, const ProductSSet& Q,
                                       const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.img.resize(X.dim_cap + 1);
  for (int p = 0; p <= X.dim_cap; ++p)
    for (int id = 0; id < X.count(p); ++id) {
      FormalSimplex na, nb;
      Monotone tau;
      pair_normal_form(f.img[p][id], g.img[p][id], na, nb, tau);
      int q = (int)tau.back();
      h.img[p].push_back(FormalSimplex{q, Q.index[q].at({na, nb}), tau});
    }
  return h;
}

// n-fold products, cells are jointly nondegenerate tuples. The empty product
// is the point.
struct MultiProductSSet {
  FinSSet S;
  std::vector<std::vector<std::vector<FormalSimplex>>> cells;  // per dim, per id
  std::vector<std::map<std::vector<FormalSimplex>, int>> index;
  std::vector<SimplicialMap> proj;
};

inline void tuple_normal_form(const std::vector<FormalSimplex>& xs,
                              std::vector<FormalSimplex>& nd, Monotone& tau) {
  int p = xs.empty() ? 0 : xs[0].dim();
  tau.clear();
  nd.assign(xs.size(), {});
  std::vector<Monotone> thetas(xs.size());
  int v = 0;
  for (int j = 0; j <= p; ++j) {
    bool collapse = j > 0;
    for (auto& x : xs)
      if (!(j > 0 && x.theta[j] == x.theta[j - 1])) { collapse = false; break; }
    if (!collapse && j > 0) ++v;
    tau.push_back(v);
    if (!collapse)
      for (size_t t = 0; t < xs.size(); ++t) thetas[t].push_back(xs[t].theta[j]);
  }
  for (size_t t = 0; t < xs.size(); ++t)
    nd[t] = FormalSimplex{xs[t].base_dim, xs[t].base_id, thetas[t]};
}

inline MultiProductSSet sset_multi_product(const std::vector<const FinSSet*>& fs,
                                           int dim_cap) {
  MultiProductSSet P;
  for (auto* f : fs) dim_cap = std::min(dim_cap, f->dim_cap);
  P.S = sset_empty(dim_cap);
  P.cells.resize(dim_cap + 1);
  P.index.resize(dim_cap + 1);
  P.proj.assign(fs.size(), {});
  for (auto& pr : P.proj) pr.img.resize(dim_cap + 1);
  for (int p = 0; p <= dim_cap; ++p) {
    std::vector<std::vector<FormalSimplex>> alls;
    for (auto* f : fs) alls.push_back(all_simplices(*f, p));
    std::vector<FormalSimplex> cur(fs.size());
    auto rec = [&](auto&& self, size_t t) -> void {
      if (t == fs.size()) {
        // jointly nondegenerate?
        for (int j = 1; j <= p; ++j) {
          bool all_collapse = !fs.empty();
          for (auto& x : cur)
            if (x.theta[j] != x.theta[j - 1]) { all_collapse = false; break; }
          if (all_collapse) return;
        }
        if (fs.empty() && p > 0) return;  // empty product: a single point
        P.index[p][cur] = (int)P.cells[p].size();
        P.cells[p].push_back(cur);
        for (size_t i = 0; i < fs.size(); ++i) P.proj[i].img[p].push_back(cur[i]);
        return;
      }
      for (auto& x : alls[t]) {
        cur[t] = x;
        self(self, t + 1);
      }
    };
    if (fs.empty()) {
      if (p == 0) {
        P.index[p][{}] = 0;
        P.cells[p].push_back({});
      }
    } else {
      rec(rec, 0);
    }
    P.S.counts[p] = (int)P.cells[p].size();
    if (p >= 1) {
      P.S.faces[p].resize(P.cells[p].size());
      for (size_t id = 0; id < P.cells[p].size(); ++id)
        for (int i = 0; i <= p; ++i) {
          std::vector<FormalSimplex> fx;
          for (size_t t = 0; t < fs.size(); ++t)
            fx.push_back(apply_op(*fs[t], P.cells[p][id][t], mono_face(p, i)));
          std::vector<FormalSimplex> nd;
          Monotone tau;
          if (fs.empty()) {
            tau = Monotone(p, 0);
            P.S.faces[p][id].push_back(FormalSimplex{0, 0, tau});
            continue;
          }
          tuple_normal_form(fx, nd, tau);
          int q = tau.back();
          P.S.faces[p][id].push_back(FormalSimplex{q, P.index[q].at(nd), tau});
        }
    }
  }
  return P;
}

// Map X -> prod_i B_i assembled from component maps f_i: X -> B_i.
inline SimplicialMap tuple_into_product(const FinSSet& X,
                                        const std::vector<const FinSSet*>& targets,
                                        const MultiProductSSet& Q,
                                        const std::vector<const SimplicialMap*>& f) {
  SimplicialMap h;
  h.img.resize(X.dim_cap + 1);
  for (int p = 0; p <= std::min(X.dim_cap, Q.S.dim_cap); ++p)
    for (int id = 0; id < X.count(p); ++id) {
      std::vector<FormalSimplex> xs;
      for (size_t t = 0; t < f.size(); ++t) xs.push_back(f[t]->img[p][id]);
      std::vector<FormalSimplex> nd;
      Monotone tau;
      if (f.empty()) {
        h.img[p].push_back(FormalSimplex{0, 0, Monotone(p + 1, 0)});
        continue;
      }
      tuple_normal_form(xs, nd, tau);
      int q = tau.back();
      h.img[p].push_back(FormalSimplex{q, Q.index[q].at(nd), tau});
    }
  return h;
}

// Constant map onto a vertex of the target.
inline SimplicialMap constant_map(const FinSSet& X, int vertex_id) {
  SimplicialMap f;
  f.img.resize(X.dim_cap + 1);
  for (int d = 0; d <= X.dim_cap; ++d)
    for (int id = 0; id < X.count(d); ++id)
      f.img[d].push_back(FormalSimplex{0, vertex_id, Monotone(d + 1, 0)});
  return f;
}

// Pullback A x_C B of f: A -> C, g: B -> C, as a subcomplex of the product.
struct PullbackSSet {
  FinSSet S;
  std::vector<std::vector<std::pair<FormalSimplex, FormalSimplex>>> cells;
  std::vector<std::map<std::pair<FormalSimplex, FormalSimplex>, int>> index;
  SimplicialMap proj1, proj2;
};

inline PullbackSSet sset_pullback(const FinSSet& A, const FinSSet& B,
                                  const FinSSet& C, const SimplicialMap& f,
                                  const SimplicialMap& g) {
  int cap = std::min(A.dim_cap, B.dim_cap);
  PullbackSSet P;
  P.S = sset_empty(cap);
  P.cells.resize(cap + 1);
  P.index.resize(cap + 1);
  P.proj1.img.resize(cap + 1);
  P.proj2.img.resize(cap + 1);
  for (int p = 0; p <= cap; ++p) {
    for (auto& a : all_simplices(A, p))
      for (auto& b : all_simplices(B, p)) {
        if (map_apply(f, C, a) != map_apply(g, C, b)) continue;
        bool joint = true;
        for (int j = 1; j <= p && joint; ++j)
          if (a.theta[j] == a.theta[j - 1] && b.theta[j] == b.theta[j - 1])
            joint = false;
        if (!joint) continue;
        P.index[p][{a, b}] = (int)P.cells[p].size();
        P.cells[p].push_back({a, b});
        P.proj1.img[p].push_back(a);
        P.proj2.img[p].push_back(b);
      }
    P.S.counts[p] = (int)P.cells[p].size();
    if (p >= 1) {
      P.S.faces[p].resize(P.cells[p].size());
      for (size_t id = 0; id < P.cells[p].size(); ++id) {
        const auto& [a, b] = P.cells[p][id];
        for (int i = 0; i <= p; ++i) {
          FormalSimplex fa = apply_op(A, a, mono_face(p, i));
          FormalSimplex fb = apply_op(B, b, mono_face(p, i));
          FormalSimplex na, nb;
          Monotone tau;
          pair_normal_form(fa, fb, na, nb, tau);
          int q = (int)tau.back();
          P.S.faces[p][id].push_back(
              FormalSimplex{q, P.index[q].at({na, nb}), tau});
        }
      }
    }
  }
  return P;
}

// Functorial map of pullbacks induced by compatible f: A -> A', g: B -> B'.
inline SimplicialMap pullback_map(const PullbackSSet& P, const FinSSet& A2,
                                  const FinSSet& B2, const PullbackSSet& Q,
                                  const SimplicialMap& f, const SimplicialMap& g) {
  SimplicialMap h;
  h.img.resize(P.S.dim_cap + 1);
  for (int p = 0; p <= P.S.dim_cap; ++p)
    for (auto& [a, b] : P.cells[p]) {
      FormalSimplex na, nb;
      Monotone tau;
      pair_normal_form(map_apply(f, A2, a), map_apply(g, B2, b), na, nb, tau);
      int q = (int)tau.back();
      h.img[p].push_back(FormalSimplex{q, Q.index[q].at({na, nb}), tau});
    }
  return h;
}

// The pair map <f, g>: X -> A' x_C B' when the composites to C agree.
inline SimplicialMap pair_into_pullback(const FinSSet& X, const PullbackSSet& Q,
                                        const SimplicialMap& f,
                                        const SimplicialMap& g) {
  SimplicialMap h;
  h.img.resize(X.dim_cap + 1);
  for (int p = 0; p <= X.dim_cap; ++p)
    for (int id = 0; id < X.count(p); ++id) {
      FormalSimplex na, nb;
      Monotone tau;
      pair_normal_form(f.img[p][id], g.img[p][id], na, nb, tau);
      int q = (int)tau.back();
      h.img[p].push_back(FormalSimplex{q, Q.index[q].at({na, nb}), tau});
    }
  return h;
}

// Is f: A -> B an isomorphism? (levelwise bijection on nondegenerate cells)
inline bool is_isomorphism(const SimplicialMap& f, const FinSSet& A,
                           const FinSSet& B) {
  for (int d = 0; d <= std::min(A.dim_cap, B.dim_cap); ++d) {
    if (A.count(d) != B.count(d)) return false;
    std::set<int> hit;
    for (int id = 0; id < A.count(d); ++id) {
      const auto& im = f.img[d][id];
      if (!im.nondegenerate()) return false;
      if (!hit.insert(im.base_id).second) return false;
    }
  }
  return true;
}

// Is f levelwise injective (an h-cofibration in the simplicial setting)?
inline bool is_injective(const SimplicialMap& f, const FinSSet& A,
                         const FinSSet& B) {
  for (int d = 0; d <= A.dim_cap; ++d) {
    std::set<FormalSimplex> hit;
    for (auto& x : all_simplices(A, d))
      if (!hit.insert(map_apply(f, B, x)).second) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Colimits of finite diagrams of simplicial sets (degreewise, by union-find
// on all formal simplices).

struct ColimArrow {
  int src = 0, dst = 0;
  const SimplicialMap* map = nullptr;
};

class ColimitDense {
 public:
  using Cell = int;  // class id within a dimension

  ColimitDense(std::vector<const FinSSet*> pieces, const std::vector<ColimArrow>& arrows,
               int dim_cap)
      : pieces_(std::move(pieces)), cap_(dim_cap) {
    keys_.resize(cap_ + 2);
    index_.resize(cap_ + 2);
    cls_.resize(cap_ + 2);
    classes_.resize(cap_ + 2);
    // one extra dimension so degeneracy at the cap stays representable
    for (int p = 0; p <= cap_ + 1; ++p) {
      for (size_t c = 0; c < pieces_.size(); ++c)
        for (auto& x : all_simplices(*pieces_[c], p)) {
          index_[p][{(int)c, x}] = (int)keys_[p].size();
          keys_[p].push_back({(int)c, x});
        }
      detail::UnionFind uf(keys_[p].size());
      for (auto& a : arrows)
        for (size_t c = 0; c < pieces_.size(); ++c) {
          if ((int)c != a.src) continue;
          for (auto& x : all_simplices(*pieces_[c], p)) {
            FormalSimplex y = map_apply(*a.map, *pieces_[a.dst], x);
            uf.unite(index_[p].at({(int)c, x}), index_[p].at({a.dst, y}));
          }
        }
      cls_[p].resize(keys_[p].size());
      std::map<int, int> root_to_class;
      for (size_t i = 0; i < keys_[p].size(); ++i) {
        int root = uf.find((int)i);
        auto [it, fresh] = root_to_class.try_emplace(root, (int)root_to_class.size());
        cls_[p][i] = it->second;
        if (fresh) classes_[p].push_back((int)i);  // representative key index
      }
    }
  }

  std::vector<Cell> cells(int p) const {
    std::vector<Cell> out(classes_[p].size());
    std::iota(out.begin(), out.end(), 0);
    return out;
  }
  Cell face(int p, const Cell& c, int i) const {
    auto [piece, x] = keys_[p][classes_[p][c]];
    FormalSimplex y = apply_op(*pieces_[piece], x, mono_face(p, i));
    return cls_[p - 1][index_[p - 1].at({piece, y})];
  }
  Cell degeneracy(int p, const Cell& c, int i) const {
    auto [piece, x] = keys_[p][classes_[p][c]];
    FormalSimplex y = apply_op(*pieces_[piece], x, mono_degeneracy(p, i));
    return cls_[p + 1][index_[p + 1].at({piece, y})];
  }
  Cell class_of(int p, int piece, const FormalSimplex& x) const {
    return cls_[p][index_[p].at({piece, x})];
  }
  std::pair<int, FormalSimplex> key_of(int p, const Cell& c) const {
    return keys_[p][classes_[p][c]];
  }

 private:
  std::vector<const FinSSet*> pieces_;
  int cap_;
  std::vector<std::vector<std::pair<int, FormalSimplex>>> keys_;  // per dim
  std::vector<std::map<std::pair<int, FormalSimplex>, int>> index_;
  std::vector<std::vector<int>> cls_;      // key index -> class
  std::vector<std::vector<int>> classes_;  // class -> representative key index
};

struct Colimit {
  FinSSet S;
  std::vector<SimplicialMap> projections;  // one per piece
  // per dim, per nondegenerate id: a representative (piece, formal simplex)
  std::vector<std::vector<std::pair<int, FormalSimplex>>> reps;
  // per dim: where every formal simplex of every piece lands
  std::vector<std::map<std::pair<int, FormalSimplex>, FormalSimplex>> key_formal;
};

inline Colimit sset_colimit(const std::vector<const FinSSet*>& pieces,
                            const std::vector<ColimArrow>& arrows, int dim_cap) {
  ColimitDense D(pieces, arrows, dim_cap);
  auto ext = extract_sset(D, dim_cap);
  Colimit out;
  out.S = std::move(ext.S);
  out.reps.resize(dim_cap + 1);
  out.key_formal.resize(dim_cap + 1);
  for (int p = 0; p <= dim_cap; ++p) {
    for (auto& cell : ext.nondeg[p]) out.reps[p].push_back(D.key_of(p, cell));
    for (size_t c = 0; c < pieces.size(); ++c)
      for (auto& x : all_simplices(*pieces[c], p))
        out.key_formal[p][{(int)c, x}] =
            ext.formal[p].at(D.class_of(p, (int)c, x));
  }
  for (size_t c = 0; c < pieces.size(); ++c) {
    SimplicialMap pr;
    pr.img.resize(dim_cap + 1);
    for (int p = 0; p <= dim_cap; ++p)
      for (int id = 0; id < pieces[c]->count(p); ++id)
        pr.img[p].push_back(
            ext.formal[p].at(D.class_of(p, (int)c, pieces[c]->simplex(p, id))));
    out.projections.push_back(std::move(pr));
  }
  return out;
}

// Assemble a map out of a colimit from a per-piece assignment, verifying that
// the assignment is constant on every gluing class (sets *ok accordingly).
inline SimplicialMap map_out_of_colimit(
    const Colimit& col, const FinSSet& target,
    const std::function<FormalSimplex(int piece, const FormalSimplex&)>& f,
    bool* ok = nullptr) {
  SimplicialMap h;
  int cap = (int)col.reps.size() - 1;
  h.img.resize(cap + 1);
  for (int p = 0; p <= cap; ++p)
    for (auto& [piece, x] : col.reps[p]) h.img[p].push_back(f(piece, x));
  if (ok) {
    *ok = true;
    for (int p = 0; p <= cap && *ok; ++p)
      for (auto& [key, formal] : col.key_formal[p])
        if (f(key.first, key.second) != map_apply(h, target, formal)) {
          *ok = false;
          break;
        }
  }
  return h;
}

// ---------------------------------------------------------------------------
// Finite categories and nerves.

struct FiniteCat {
  std::vector<Obj> objects;
  std::function<std::vector<Mor>(const Obj&, const Obj&)> hom;
};

inline FiniteCat truncated_cat(CatId cat, int max_degree) {
  FiniteCat C;
  C.objects = enumerate_obj(cat, max_degree);
  C.hom = [](const Obj& a, const Obj& b) { return enumerate_mor(a, b); };
  return C;
}

// Full subcategory of truncated J on one degree-difference component J_t.
inline FiniteCat truncated_J_component(int t, int max_degree) {
  FiniteCat C;
  for (int n1 = 0; n1 <= max_degree; ++n1)
    for (int n2 = 0; n2 <= max_degree; ++n2)
      if (n2 - n1 == t) C.objects.push_back(obj_J(n1, n2));
  C.hom = [](const Obj& a, const Obj& b) { return enumerate_mor(a, b); };
  return C;
}

struct Nerve {
  FinSSet S;
  // chains[d][id] = the d-chain of composable non-identity morphisms,
  // oriented k0 -> k1 -> ... -> kd
  std::vector<std::vector<std::vector<Mor>>> chains;
  std::vector<std::map<std::vector<Mor>, int>> index;
};

// Strip identity entries out of a chain, producing the surjection that
// collapses the corresponding vertices.
inline void normalize_chain(const std::vector<Mor>& chain,
                            std::vector<Mor>& nondeg, Monotone& theta) {
  nondeg.clear();
  theta.clear();
  theta.push_back(0);
  int v = 0;
  for (auto& m : chain) {
    if (!m.is_identity()) {
      nondeg.push_back(m);
      ++v;
    }
    theta.push_back(v);
  }
}

inline Nerve nerve(const FiniteCat& C, int dim_cap) {
  Nerve N;
  N.S = sset_empty(dim_cap);
  N.chains.resize(dim_cap + 1);
  N.index.resize(dim_cap + 1);
  // dimension 0: objects
  for (size_t i = 0; i < C.objects.size(); ++i) {
    N.chains[0].push_back({});
    // key chains by a dummy identity so different objects stay distinct
    N.index[0][{identity(C.objects[i])}] = (int)i;
  }
  N.S.counts[0] = (int)C.objects.size();
  // chain enumeration by extension
  std::vector<std::pair<Obj, std::vector<Mor>>> frontier;
  for (auto& o : C.objects) frontier.push_back({o, {}});
  for (int d = 1; d <= dim_cap; ++d) {
    std::vector<std::pair<Obj, std::vector<Mor>>> next;
    for (auto& [end, chain] : frontier)
      for (auto& o : C.objects)
        for (auto& m : C.hom(end, o)) {
          if (m.is_identity()) continue;
          auto c2 = chain;
          c2.push_back(m);
          next.push_back({o, std::move(c2)});
        }
    std::sort(next.begin(), next.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [end, chain] : next) {
      N.index[d][chain] = (int)N.chains[d].size();
      N.chains[d].push_back(chain);
    }
    N.S.counts[d] = (int)N.chains[d].size();
    frontier = std::move(next);
  }
  // faces
  auto chain_formal = [&](int d, const std::vector<Mor>& raw,
                          const Obj& start) -> FormalSimplex {
    std::vector<Mor> nd;
    Monotone theta;
    normalize_chain(raw, nd, theta);
    int q = (int)nd.size();
    int id;
    if (q == 0) {
      auto it = std::find(C.objects.begin(), C.objects.end(), start);
      id = (int)(it - C.objects.begin());
    } else {
      id = N.index[q].at(nd);
    }
    return FormalSimplex{q, id, theta};
  };
  for (int d = 1; d <= dim_cap; ++d) {
    N.S.faces[d].resize(N.chains[d].size());
    for (size_t id = 0; id < N.chains[d].size(); ++id) {
      const auto& chain = N.chains[d][id];
      for (int i = 0; i <= d; ++i) {
        std::vector<Mor> f;
        Obj start = chain[0].src();
        if (i == 0) {
          f.assign(chain.begin() + 1, chain.end());
          start = chain[0].dst();
        } else if (i == d) {
          f.assign(chain.begin(), chain.end() - 1);
        } else {
          f.assign(chain.begin(), chain.end());
          f[i - 1] = compose(chain[i], chain[i - 1]);
          f.erase(f.begin() + i);
        }
        N.S.faces[d][id].push_back(chain_formal(d - 1, f, start));
      }
    }
  }
  return N;
}

// Sound-but-incomplete contractibility certificate: an initial or terminal
// object makes the nerve contractible.
inline bool contractible_certificate(const FiniteCat& C) {
  for (auto& o : C.objects) {
    bool initial = true, terminal = true;
    for (auto& x : C.objects) {
      if (C.hom(o, x).size() != 1) initial = false;
      if (C.hom(x, o).size() != 1) terminal = false;
      if (!initial && !terminal) break;
    }
    if (initial || terminal) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// pi_0 and homology.

inline int pi0_count(const FinSSet& X) {
  detail::UnionFind uf(X.count(0));
  for (int id = 0; id < X.count(1); ++id)
    uf.unite(X.face(1, id, 0).base_id, X.face(1, id, 1).base_id);
  std::set<int> roots;
  for (int i = 0; i < X.count(0); ++i) roots.insert(uf.find(i));
  return (int)roots.size();
}

inline std::vector<int> pi0_classes(const FinSSet& X) {
  detail::UnionFind uf(X.count(0));
  for (int id = 0; id < X.count(1); ++id)
    uf.unite(X.face(1, id, 0).base_id, X.face(1, id, 1).base_id);
  std::vector<int> cls(X.count(0));
  std::map<int, int> root_to;
  for (int i = 0; i < X.count(0); ++i) {
    auto [it, fresh] = root_to.try_emplace(uf.find(i), (int)root_to.size());
    cls[i] = it->second;
  }
  return cls;
}

// Boundary matrix of the normalized chain complex: degenerate faces vanish.
inline SparseMat boundary_matrix(const FinSSet& X, int d) {
  SparseMat M;
  M.resize(X.count(d), X.count(d - 1));
  for (int id = 0; id < X.count(d); ++id)
    for (int i = 0; i <= d; ++i) {
      const auto& f = X.face(d, id, i);
      if (f.nondegenerate()) M.add(id, f.base_id, (i % 2 == 0) ? 1 : -1);
    }
  return M;
}

// Integral homology H_0..H_up_to; requires up_to < dim_cap so that the
// boundary out of dimension up_to + 1 is available.
inline std::vector<HomologyGroup> homology(const FinSSet& X, int up_to) {
  if (up_to >= X.dim_cap)
    throw std::invalid_argument("homology: need dim_cap > up_to");
  std::vector<int> dims;
  std::vector<SparseMat> d(up_to + 2);
  for (int k = 0; k <= up_to + 1; ++k) dims.push_back(X.count(k));
  for (int k = 1; k <= up_to + 1; ++k) d[k] = boundary_matrix(X, k);
  return chain_homology(dims, d, up_to);
}

}  // namespace dspace
