#pragma once

// Graded signed monoids: axiom checking, the graded pi_0 of a J-diagram
// monoid with its sign conventions, units and grouplike checks, and
// pre-log/log structures with logification at the monoid level.

#include <dspace/dayconv.hpp>
#include <dspace/hocolim.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

namespace dspace {

// ---------------------------------------------------------------------------
// Graded signed monoids: a finite {+-1}-set per degree, a unit in degree 0,
// and partial multiplication tables.  A table for (s,t) is present exactly
// when s, t and s+t all lie in the support; pairs whose sum falls outside
// the window are tracked as overflow, never silently dropped.

struct GradedSignedMonoid {
  std::map<int, int> card;                // degree -> carrier size (> 0)
  std::map<int, std::vector<int>> neg;    // involution per degree
  int unit = 0;                           // element id in degree 0
  bool commutative = false;
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> mult;

  bool operator==(const GradedSignedMonoid&) const = default;

  bool has(int t) const { return card.count(t) > 0; }
  int neg_of(int t, int a) const { return neg.at(t)[a]; }
  bool has_mult(int s, int t) const { return mult.count({s, t}) > 0; }
  int mul(int s, int t, int a, int b) const { return mult.at({s, t})[a][b]; }
  std::vector<int> degrees() const {
    std::vector<int> out;
    for (auto& [t, n] : card) out.push_back(t);
    return out;
  }
};

// A degreewise function; also used for inclusions of sub-monoids.
struct GradedMonoidMap {
  std::map<int, std::vector<int>> at;  // per degree of the source
  bool operator==(const GradedMonoidMap&) const = default;
};

struct GradedReport {
  bool structure = true;   // carriers, involution, unit, table shapes
  bool unital = true;
  bool associative = true;
  bool equivariant = true;
  bool commutative_ok = true;  // only meaningful when flagged commutative
  int overflow_pairs = 0;
  std::vector<std::string> witnesses;

  bool ok(bool commutative) const {
    return structure && unital && associative && equivariant &&
           (!commutative || commutative_ok);
  }
};

inline GradedReport check_axioms(const GradedSignedMonoid& M) {
  GradedReport rep;
  auto note = [&](bool& flag, const std::string& w) {
    flag = false;
    rep.witnesses.push_back(w);
  };

  for (auto& [t, n] : M.card) {
    if (n <= 0) note(rep.structure, "degree " + std::to_string(t) + ": empty carrier");
    if (!M.neg.count(t) || (int)M.neg.at(t).size() != n) {
      note(rep.structure, "degree " + std::to_string(t) + ": involution missing");
      continue;
    }
    for (int a = 0; a < n; ++a) {
      int b = M.neg_of(t, a);
      if (b < 0 || b >= n || M.neg_of(t, b) != a)
        note(rep.structure, "degree " + std::to_string(t) + ": not an involution");
    }
  }
  if (!M.has(0) || M.unit < 0 || M.unit >= M.card.at(0))
    note(rep.structure, "unit missing in degree 0");

  // table presence: required exactly on in-window pairs
  for (auto& [s, ns] : M.card)
    for (auto& [t, nt] : M.card) {
      if (!M.has(s + t)) {
        rep.overflow_pairs++;
        if (M.has_mult(s, t))
          note(rep.structure, "mult(" + std::to_string(s) + "," +
                                  std::to_string(t) + "): sum outside support");
        continue;
      }
      if (!M.has_mult(s, t)) {
        note(rep.structure, "mult(" + std::to_string(s) + "," +
                                std::to_string(t) + "): missing");
        continue;
      }
      auto& tab = M.mult.at({s, t});
      if ((int)tab.size() != ns) {
        note(rep.structure, "mult(" + std::to_string(s) + "," +
                                std::to_string(t) + "): bad shape");
        continue;
      }
      for (auto& row : tab) {
        if ((int)row.size() != nt)
          note(rep.structure, "mult(" + std::to_string(s) + "," +
                                  std::to_string(t) + "): bad shape");
        else
          for (int v : row)
            if (v < 0 || v >= M.card.at(s + t))
              note(rep.structure, "mult(" + std::to_string(s) + "," +
                                      std::to_string(t) + "): out of range");
      }
    }
  if (!rep.structure) return rep;

  for (auto& [t, n] : M.card) {
    if (M.has_mult(0, t))
      for (int a = 0; a < n; ++a)
        if (M.mul(0, t, M.unit, a) != a)
          note(rep.unital, "left unit fails in degree " + std::to_string(t));
    if (M.has_mult(t, 0))
      for (int a = 0; a < n; ++a)
        if (M.mul(t, 0, a, M.unit) != a)
          note(rep.unital, "right unit fails in degree " + std::to_string(t));
  }

  for (auto& [st, tab] : M.mult) {
    auto [s, t] = st;
    for (int a = 0; a < M.card.at(s); ++a)
      for (int b = 0; b < M.card.at(t); ++b) {
        int ab = M.mul(s, t, a, b);
        if (M.mul(s, t, M.neg_of(s, a), b) != M.neg_of(s + t, ab) ||
            M.mul(s, t, a, M.neg_of(t, b)) != M.neg_of(s + t, ab))
          note(rep.equivariant, "equivariance fails at (" + std::to_string(s) +
                                    "," + std::to_string(t) + ")");
      }
  }

  for (auto& [s, ns] : M.card)
    for (auto& [t, nt] : M.card)
      for (auto& [u, nu] : M.card) {
        if (!M.has_mult(s, t) || !M.has_mult(s + t, u) || !M.has_mult(t, u) ||
            !M.has_mult(s, t + u))
          continue;
        for (int a = 0; a < ns; ++a)
          for (int b = 0; b < nt; ++b)
            for (int c = 0; c < nu; ++c)
              if (M.mul(s + t, u, M.mul(s, t, a, b), c) !=
                  M.mul(s, t + u, a, M.mul(t, u, b, c)))
                note(rep.associative,
                     "associativity fails at (" + std::to_string(s) + "," +
                         std::to_string(t) + "," + std::to_string(u) + ")");
      }

  if (M.commutative)
    for (auto& [st, tab] : M.mult) {
      auto [s, t] = st;
      if (!M.has_mult(t, s)) continue;
      for (int a = 0; a < M.card.at(s); ++a)
        for (int b = 0; b < M.card.at(t); ++b) {
          int rhs = M.mul(t, s, b, a);
          if ((s * t) % 2 != 0) rhs = M.neg_of(s + t, rhs);
          if (M.mul(s, t, a, b) != rhs)
            note(rep.commutative_ok,
                 "graded commutativity fails at (" + std::to_string(s) + "," +
                     std::to_string(t) + ") elements (" + std::to_string(a) +
                     "," + std::to_string(b) + ")");
        }
    }
  return rep;
}

inline bool check_graded_map(const GradedMonoidMap& f,
                             const GradedSignedMonoid& M,
                             const GradedSignedMonoid& N,
                             std::vector<std::string>* wit = nullptr) {
  bool ok = true;
  auto note = [&](const std::string& w) {
    ok = false;
    if (wit) wit->push_back(w);
  };
  for (auto& [t, n] : M.card) {
    if (!f.at.count(t) || (int)f.at.at(t).size() != n || !N.has(t)) {
      note("degree " + std::to_string(t) + ": map missing");
      continue;
    }
    for (int v : f.at.at(t))
      if (v < 0 || v >= N.card.at(t))
        note("degree " + std::to_string(t) + ": out of range");
  }
  if (!ok) return false;
  if (f.at.at(0)[M.unit] != N.unit) note("unit not preserved");
  for (auto& [t, n] : M.card)
    for (int a = 0; a < n; ++a)
      if (f.at.at(t)[M.neg_of(t, a)] != N.neg_of(t, f.at.at(t)[a]))
        note("involution not preserved in degree " + std::to_string(t));
  for (auto& [st, tab] : M.mult) {
    auto [s, t] = st;
    if (!N.has_mult(s, t)) {
      note("target mult(" + std::to_string(s) + "," + std::to_string(t) +
           ") missing");
      continue;
    }
    for (int a = 0; a < M.card.at(s); ++a)
      for (int b = 0; b < M.card.at(t); ++b)
        if (f.at.at(s + t)[M.mul(s, t, a, b)] !=
            N.mul(s, t, f.at.at(s)[a], f.at.at(t)[b]))
          note("multiplication not preserved at (" + std::to_string(s) + "," +
               std::to_string(t) + ")");
  }
  return ok;
}

// Brute-force isomorphism search over per-degree bijections (small carriers).
inline std::optional<GradedMonoidMap> find_graded_iso(
    const GradedSignedMonoid& A, const GradedSignedMonoid& B) {
  if (A.card != B.card) return std::nullopt;
  std::vector<int> degs = A.degrees();
  GradedMonoidMap f;
  std::function<bool(size_t)> go = [&](size_t i) -> bool {
    if (i == degs.size()) return check_graded_map(f, A, B);
    int t = degs[i];
    std::vector<int> perm(A.card.at(t));
    for (int j = 0; j < (int)perm.size(); ++j) perm[j] = j;
    do {
      if (t == 0 && perm[A.unit] != B.unit) continue;
      bool neg_ok = true;
      for (int a = 0; a < A.card.at(t) && neg_ok; ++a)
        if (perm[A.neg_of(t, a)] != B.neg_of(t, perm[a])) neg_ok = false;
      if (!neg_ok) continue;
      f.at[t] = perm;
      if (go(i + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    f.at.erase(t);
    return false;
  };
  if (go(0)) return f;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Sub-monoids, units, grouplikes.

// Restrict to a degreewise subset (must be closed under unit, involution and
// the available multiplications).  incl gets the new-id -> old-id tables.
inline GradedSignedMonoid submonoid(const GradedSignedMonoid& M,
                                    const std::map<int, std::vector<char>>& keep,
                                    GradedMonoidMap* incl = nullptr) {
  GradedSignedMonoid S;
  S.commutative = M.commutative;
  std::map<int, std::vector<int>> old_of, new_of;
  for (auto& [t, mask] : keep) {
    std::vector<int> olds;
    std::vector<int> back(M.card.at(t), -1);
    for (int a = 0; a < M.card.at(t); ++a)
      if (mask[a]) {
        back[a] = (int)olds.size();
        olds.push_back(a);
      }
    if (olds.empty()) continue;
    S.card[t] = (int)olds.size();
    old_of[t] = olds;
    new_of[t] = back;
  }
  for (auto& [t, olds] : old_of) {
    std::vector<int> ng;
    for (int a : olds) {
      int b = new_of.at(t)[M.neg_of(t, a)];
      if (b < 0) throw std::logic_error("submonoid: not closed under involution");
      ng.push_back(b);
    }
    S.neg[t] = ng;
  }
  if (!S.has(0) || new_of.at(0)[M.unit] < 0)
    throw std::logic_error("submonoid: unit not kept");
  S.unit = new_of.at(0)[M.unit];
  for (auto& [s, os] : old_of)
    for (auto& [t, ot] : old_of) {
      if (!S.has(s + t) || !M.has_mult(s, t)) continue;
      std::vector<std::vector<int>> tab;
      for (int a : os) {
        std::vector<int> row;
        for (int b : ot) {
          int v = new_of.at(s + t)[M.mul(s, t, a, b)];
          if (v < 0) throw std::logic_error("submonoid: not closed under mult");
          row.push_back(v);
        }
        tab.push_back(row);
      }
      S.mult[{s, t}] = tab;
    }
  if (incl) {
    incl->at.clear();
    for (auto& [t, olds] : old_of) incl->at[t] = olds;
  }
  return S;
}

// a is invertible when some b has ab and ba in {e, -e}.
inline bool graded_invertible(const GradedSignedMonoid& M, int t, int a) {
  if (!M.has(-t) || !M.has_mult(t, -t) || !M.has_mult(-t, t)) return false;
  int e = M.unit, me = M.neg_of(0, M.unit);
  for (int b = 0; b < M.card.at(-t); ++b) {
    int ab = M.mul(t, -t, a, b);
    int ba = M.mul(-t, t, b, a);
    if ((ab == e || ab == me) && (ba == e || ba == me)) return true;
  }
  return false;
}

inline GradedSignedMonoid units(const GradedSignedMonoid& M,
                                GradedMonoidMap* incl = nullptr) {
  std::map<int, std::vector<char>> keep;
  for (auto& [t, n] : M.card) {
    std::vector<char> mask(n, 0);
    for (int a = 0; a < n; ++a) mask[a] = graded_invertible(M, t, a);
    keep[t] = mask;
  }
  return submonoid(M, keep, incl);
}

inline bool grouplike(const GradedSignedMonoid& M) {
  for (auto& [t, n] : M.card)
    for (int a = 0; a < n; ++a)
      if (!graded_invertible(M, t, a)) return false;
  return true;
}

// A map out of a grouplike monoid factors through units(M) exactly when its
// image consists of invertible elements.
inline bool factors_through_units(const GradedMonoidMap& f,
                                  const GradedSignedMonoid& N,
                                  const GradedSignedMonoid& M) {
  for (auto& [t, n] : N.card)
    for (int a = 0; a < n; ++a)
      if (!graded_invertible(M, t, f.at.at(t)[a])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Graded fixtures.

// Degrees 2k for k in [kmin, kmax], carrier {u^k, -u^k} with id 0 = +.
inline GradedSignedMonoid laurent_graded(int kmin, int kmax) {
  GradedSignedMonoid M;
  M.commutative = true;
  for (int k = kmin; k <= kmax; ++k) {
    M.card[2 * k] = 2;
    M.neg[2 * k] = {1, 0};
  }
  M.unit = 0;
  for (int j = kmin; j <= kmax; ++j)
    for (int k = kmin; k <= kmax; ++k) {
      if (j + k < kmin || j + k > kmax) continue;
      M.mult[{2 * j, 2 * k}] = {{0, 1}, {1, 0}};
    }
  return M;
}

// As above with an absorbing zero (id 2) in every degree.
inline GradedSignedMonoid laurent_graded_zero(int kmin, int kmax) {
  GradedSignedMonoid M;
  M.commutative = true;
  for (int k = kmin; k <= kmax; ++k) {
    M.card[2 * k] = 3;
    M.neg[2 * k] = {1, 0, 2};
  }
  M.unit = 0;
  for (int j = kmin; j <= kmax; ++j)
    for (int k = kmin; k <= kmax; ++k) {
      if (j + k < kmin || j + k > kmax) continue;
      M.mult[{2 * j, 2 * k}] = {{0, 1, 2}, {1, 0, 2}, {2, 2, 2}};
    }
  return M;
}

inline GradedSignedMonoid trivial_graded() {
  GradedSignedMonoid M;
  M.commutative = true;
  M.card[0] = 1;
  M.neg[0] = {0};
  M.unit = 0;
  M.mult[{0, 0}] = {{0}};
  return M;
}

// ---------------------------------------------------------------------------
// Signs of J-morphisms.

namespace detail {

inline int sgn_word(const std::vector<int>& w) {
  int s = 1;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) s = -s;
  return s;
}

}  // namespace detail

// Sign of a J-endomorphism: sgn(b2) * sgn(b1^{-1}).
inline int sgn_of_J_morphism(const Mor& f) {
  if (f.cat != CatId::J)
    throw std::invalid_argument("sgn_of_J_morphism: not a J-morphism");
  if (!f.b1.is_bijection() || !f.b2.is_bijection())
    throw std::invalid_argument("sgn_of_J_morphism: endomorphism required");
  return sgn(f.b2) * sgn(f.b1);
}

// Sign of an arbitrary J-morphism: extend each leg to a bijection, filling
// the first complement in ascending order and the second through sigma, and
// take the product of the two signs.  Multiplicative under composition.
inline int sgn_of_J_morphism_general(const Mor& f) {
  if (f.cat != CatId::J)
    throw std::invalid_argument("sgn_of_J_morphism_general: not a J-morphism");
  std::vector<int> w1 = f.b1.img;
  for (int c : complement(f.b1)) w1.push_back(c);
  std::vector<int> w2 = f.b2.img;
  for (int s : f.sigma) w2.push_back(s);
  return detail::sgn_word(w1) * detail::sgn_word(w2);
}

// ---------------------------------------------------------------------------
// Discrete J-monoid fixtures (vertex-level carriers and multiplications).

struct DiscreteMonoidSpec {
  int max_degree = 2;
  int dim_cap = 1;
  std::function<int(const Obj&)> size;
  std::function<int(const Mor&, int)> act;
  std::function<int(const Obj&, const Obj&, int, int)> mul;
  int unit_vertex = 0;
  bool commutative = false;
};

inline MonoidData discrete_monoid(CatId cat, const DiscreteMonoidSpec& sp) {
  MonoidData M;
  M.carrier =
      discrete_diagspace(cat, sp.max_degree, sp.dim_cap, sp.size, sp.act);
  M.commutative = sp.commutative;
  M.unit_vertex = sp.unit_vertex;
  for (auto& k : M.carrier.objects())
    for (auto& l : M.carrier.objects()) {
      if (!within(M.carrier, concat(k, l))) continue;
      ProductSSet P = sset_product(M.carrier.level(k), M.carrier.level(l));
      SimplicialMap f;
      f.img.resize(P.S.dim_cap + 1);
      for (auto& [a, b] : P.cells[0])
        f.img[0].push_back(
            FormalSimplex{0, sp.mul(k, l, a.base_id, b.base_id), {0}});
      M.prods.emplace(std::make_pair(k, l), std::move(P));
      M.mult[{k, l}] = std::move(f);
    }
  return M;
}

// The terminal J-monoid: a point in every level.
inline MonoidData terminal_J_monoid(int max_degree) {
  DiscreteMonoidSpec sp;
  sp.max_degree = max_degree;
  sp.size = [](const Obj&) { return 1; };
  sp.act = [](const Mor&, int) { return 0; };
  sp.mul = [](const Obj&, const Obj&, int, int) { return 0; };
  sp.commutative = true;
  return discrete_monoid(CatId::J, sp);
}

// One free sign orbit {+,-} on every level of even degree difference, with
// morphisms acting through their sign and multiplication by sign product.
inline MonoidData sign_orbit_J_monoid(int max_degree) {
  DiscreteMonoidSpec sp;
  sp.max_degree = max_degree;
  sp.size = [](const Obj& o) { return (o.n2 - o.n1) % 2 == 0 ? 2 : 0; };
  sp.act = [](const Mor& m, int e) {
    return sgn_of_J_morphism_general(m) < 0 ? 1 - e : e;
  };
  sp.mul = [](const Obj&, const Obj&, int a, int b) { return a ^ b; };
  sp.commutative = true;
  return discrete_monoid(CatId::J, sp);
}

// The monoidal unit as a monoid: levels are the hom sets out of (0,0), with
// multiplication by block sum.
inline MonoidData free_unit_J_monoid(int max_degree) {
  auto homs = std::make_shared<std::map<Obj, std::vector<Mor>>>();
  auto index = std::make_shared<std::map<Mor, int>>();
  Obj u = monoidal_unit(CatId::J);
  for (auto& o : enumerate_obj(CatId::J, max_degree)) {
    auto hs = enumerate_mor(u, o);
    for (size_t i = 0; i < hs.size(); ++i) (*index)[hs[i]] = (int)i;
    (*homs)[o] = hs;
  }
  DiscreteMonoidSpec sp;
  sp.max_degree = max_degree;
  sp.size = [homs](const Obj& o) { return (int)homs->at(o).size(); };
  sp.act = [homs, index](const Mor& m, int e) {
    return index->at(compose(m, homs->at(m.src())[e]));
  };
  sp.mul = [homs, index](const Obj& k, const Obj& l, int a, int b) {
    return index->at(concat(homs->at(k)[a], homs->at(l)[b]));
  };
  sp.commutative = true;
  return discrete_monoid(CatId::J, sp);
}

// ---------------------------------------------------------------------------
// Graded pi_0 of a J-diagram monoid.  Per degree-difference t the levels
// (n, n+t) form a chain under the one-element extensions, and the degree-t
// carrier is the colimit of their component sets, realized at the last stage
// within the truncation.  Stabilization means the last two chain maps are
// bijections; degrees too close to the truncation edge to have two chain
// maps are excluded from the reported support.

struct Pi0Chain {
  int t = 0;
  std::vector<Obj> stage_obj;
  std::vector<std::vector<int>> cls;     // per stage: vertex -> class
  std::vector<int> classes;              // per stage: class count
  std::vector<std::vector<int>> step;    // per stage but the last
  std::vector<std::vector<int>> to_end;  // per stage: class -> final class
  bool stabilized = false;
};

struct Pi0Report {
  GradedSignedMonoid M;
  int truncation = 0;
  std::map<int, Pi0Chain> chain;  // every |t| <= truncation
  std::map<int, bool> sign_defined;
  std::map<int, Obj> carrier_obj;
  std::map<int, std::vector<int>> carrier_rep;  // class -> vertex
  // sample product vertex per (s, t, a, b), before the sign twist
  std::map<std::tuple<int, int, int, int>, std::pair<Obj, int>> mult_witness;
  bool well_defined = true;
  bool all_stabilized = true;
  std::vector<std::string> witnesses;

  std::string state() const {
    return all_stabilized ? "STABILIZED" : "NOT-STABILIZED";
  }
};

// One-element extension (n, n+t) -> (n+1, n+t+1) with the unique complement
// bijection.
inline Mor chain_step_J(int n, int t) {
  std::vector<int> img1, img2;
  for (int i = 1; i <= n; ++i) img1.push_back(i);
  for (int i = 1; i <= n + t; ++i) img2.push_back(i);
  return mor_J(Inj{n, n + 1, img1}, Inj{n + t, n + t + 1, img2},
               {n + t + 1});
}

inline Pi0Report pi0_of_J_monoid(const MonoidData& A, int truncation) {
  const DiagSpace& X = A.carrier;
  if (X.cat != CatId::J)
    throw std::invalid_argument("pi0_of_J_monoid: carrier must be over J");
  int N = std::min(truncation, X.max_degree);
  Pi0Report rep;
  rep.truncation = N;
  rep.M.commutative = A.commutative;

  auto act0 = [&](const Mor& m, int v) { return X.act(m).img[0][v].base_id; };

  for (int t = -N; t <= N; ++t) {
    Pi0Chain C;
    C.t = t;
    int n0 = std::max(0, -t);
    for (int n = n0; n <= N - std::max(t, 0); ++n)
      C.stage_obj.push_back(obj_J(n, n + t));
    for (auto& o : C.stage_obj) {
      C.cls.push_back(pi0_classes(X.level(o)));
      int cnt = 0;
      for (int c : C.cls.back()) cnt = std::max(cnt, c + 1);
      C.classes.push_back(cnt);
    }
    for (size_t i = 0; i + 1 < C.stage_obj.size(); ++i) {
      Mor step = chain_step_J(n0 + (int)i, t);
      std::vector<int> f(C.classes[i], -1);
      for (int v = 0; v < X.level(C.stage_obj[i]).count(0); ++v)
        f[C.cls[i][v]] = C.cls[i + 1][act0(step, v)];
      C.step.push_back(f);
    }
    // compose forward to the final stage
    C.to_end.assign(C.stage_obj.size(), {});
    for (int i = (int)C.stage_obj.size() - 1; i >= 0; --i) {
      std::vector<int> f(C.classes[i]);
      for (int c = 0; c < C.classes[i]; ++c)
        f[c] = (i + 1 == (int)C.stage_obj.size())
                   ? c
                   : C.to_end[i + 1][C.step[i][c]];
      C.to_end[i] = f;
    }
    auto bijective = [&](size_t i) {
      if (C.classes[i] != C.classes[i + 1]) return false;
      std::set<int> hit(C.step[i].begin(), C.step[i].end());
      return (int)hit.size() == C.classes[i];
    };
    size_t steps = C.step.size();
    C.stabilized = steps >= 2 && bijective(steps - 1) && bijective(steps - 2);
    rep.chain[t] = std::move(C);
  }

  // reported support: degrees with at least two chain maps
  for (int t = -(N - 2); t <= N - 2; ++t) {
    const Pi0Chain& C = rep.chain.at(t);
    if (!C.stabilized) {
      rep.all_stabilized = false;
      rep.witnesses.push_back("degree " + std::to_string(t) +
                              ": chain not stabilized at truncation");
    }
    int sz = C.classes.back();
    if (sz == 0) continue;
    rep.M.card[t] = sz;
    Obj oe = C.stage_obj.back();
    rep.carrier_obj[t] = oe;
    std::vector<int> reps(sz, -1);
    for (int v = 0; v < X.level(oe).count(0); ++v)
      if (reps[C.cls.back()[v]] < 0) reps[C.cls.back()[v]] = v;
    rep.carrier_rep[t] = reps;

    // sign action: every odd endomorphism must induce one and the same
    // permutation, and even endomorphisms must act trivially
    std::vector<int> inv(sz);
    for (int c = 0; c < sz; ++c) inv[c] = c;
    bool defined = true, have_odd = false;
    for (auto& g : automorphisms(oe)) {
      std::vector<int> p(sz);
      for (int v = 0; v < X.level(oe).count(0); ++v)
        p[C.cls.back()[v]] = C.cls.back()[act0(g, v)];
      if (sgn_of_J_morphism(g) > 0) {
        for (int c = 0; c < sz; ++c)
          if (p[c] != c) defined = false;
      } else if (!have_odd) {
        have_odd = true;
        inv = p;
      } else if (p != inv) {
        defined = false;
      }
    }
    if (!defined) {
      rep.witnesses.push_back("degree " + std::to_string(t) +
                              ": sign action not well-defined at " + oe.str());
      for (int c = 0; c < sz; ++c) inv[c] = c;
    }
    rep.sign_defined[t] = defined;
    rep.M.neg[t] = inv;
  }

  if (rep.M.has(0)) {
    const Pi0Chain& C0 = rep.chain.at(0);
    rep.M.unit = C0.to_end[0][C0.cls[0][A.unit_vertex]];
  }

  // multiplication: push stage representatives together wherever the block
  // sum stays within the truncation, transport to the final stage, and twist
  // by (-1)^{m1 * t}
  for (auto& [s, ns] : rep.M.card)
    for (auto& [t, nt] : rep.M.card) {
      if (!rep.M.has(s + t)) continue;
      const Pi0Chain& Cs = rep.chain.at(s);
      const Pi0Chain& Ct = rep.chain.at(t);
      const Pi0Chain& Cu = rep.chain.at(s + t);
      std::vector<std::vector<int>> tab(ns, std::vector<int>(nt, -1));
      bool total = true;
      for (size_t i = 0; i < Cs.stage_obj.size(); ++i)
        for (size_t j = 0; j < Ct.stage_obj.size(); ++j) {
          Obj oi = Cs.stage_obj[i], oj = Ct.stage_obj[j];
          auto it = A.mult.find({oi, oj});
          if (it == A.mult.end()) continue;
          const ProductSSet& P = A.prods.at({oi, oj});
          Obj co = concat(oi, oj);
          int uidx = co.n1 - std::max(0, -(s + t));
          for (int v1 = 0; v1 < X.level(oi).count(0); ++v1)
            for (int v2 = 0; v2 < X.level(oj).count(0); ++v2) {
              int a = Cs.to_end[i][Cs.cls[i][v1]];
              int b = Ct.to_end[j][Ct.cls[j][v2]];
              int pid = P.index[0].at({FormalSimplex{0, v1, {0}},
                                       FormalSimplex{0, v2, {0}}});
              int w = it->second.img[0][pid].base_id;
              int c = Cu.to_end[uidx][Cu.cls[uidx][w]];
              if ((oi.n1 * t) % 2 != 0) c = rep.M.neg_of(s + t, c);
              if (tab[a][b] == -1) {
                tab[a][b] = c;
                rep.mult_witness[{s, t, a, b}] = {co, w};
              } else if (tab[a][b] != c) {
                rep.well_defined = false;
                rep.witnesses.push_back(
                    "mult(" + std::to_string(s) + "," + std::to_string(t) +
                    "): inconsistent across representatives");
              }
            }
        }
      for (auto& row : tab)
        for (int v : row)
          if (v == -1) total = false;
      if (total)
        rep.M.mult[{s, t}] = tab;
      else
        rep.witnesses.push_back("mult(" + std::to_string(s) + "," +
                                std::to_string(t) +
                                "): not computable within truncation");
    }
  return rep;
}

// ---------------------------------------------------------------------------
// Quotient comparison: per degree, the carrier modulo the sign action must
// biject with the components of the homotopy colimit lying over that degree,
// compatibly with the multiplication samples.

struct QuotientReport {
  bool fibers_ok = true;
  bool surjective = true;
  bool multiplicative = true;
  std::vector<std::string> witnesses;
  bool ok() const { return fibers_ok && surjective && multiplicative; }
};

inline QuotientReport check_pi0_quotient(const MonoidData& A,
                                         const Pi0Report& P) {
  QuotientReport rep;
  const DiagSpace& X = A.carrier;
  Hocolim H = hocolim(X, 1);
  std::vector<int> cls = pi0_classes(H.S);
  auto hclass = [&](const Obj& o, int v) {
    return cls[H.formal[0].at(HocolimCell{o, {}, FormalSimplex{0, v, {0}}})
                   .base_id];
  };
  for (auto& [t, sz] : P.M.card) {
    const Obj& oe = P.carrier_obj.at(t);
    std::map<int, std::set<int>> fiber;  // hocolim class -> carrier classes
    for (int a = 0; a < sz; ++a)
      fiber[hclass(oe, P.carrier_rep.at(t)[a])].insert(a);
    for (auto& [h, as] : fiber) {
      // each fiber must be exactly one sign orbit
      int a = *as.begin();
      std::set<int> orbit{a, P.M.neg_of(t, a)};
      if (as != orbit) {
        rep.fibers_ok = false;
        rep.witnesses.push_back("degree " + std::to_string(t) +
                                ": fiber is not a sign orbit");
      }
    }
    // every component over a degree-t level must be hit
    std::set<int> hit;
    for (auto& [h, as] : fiber) hit.insert(h);
    for (auto& C = P.chain.at(t); auto& o : C.stage_obj)
      for (int v = 0; v < X.level(o).count(0); ++v)
        if (!hit.count(hclass(o, v))) {
          rep.surjective = false;
          rep.witnesses.push_back("degree " + std::to_string(t) +
                                  ": unreached component at " + o.str());
        }
  }
  for (auto& [key, wit] : P.mult_witness) {
    auto [s, t, a, b] = key;
    if (!P.M.has_mult(s, t)) continue;
    int c = P.M.mul(s, t, a, b);
    if (hclass(wit.first, wit.second) !=
        hclass(P.carrier_obj.at(s + t), P.carrier_rep.at(s + t)[c])) {
      rep.multiplicative = false;
      rep.witnesses.push_back("mult(" + std::to_string(s) + "," +
                              std::to_string(t) +
                              "): quotient map not multiplicative");
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pre-log structures and logification.

struct PrelogPullback {
  GradedSignedMonoid GL;        // units of the target
  GradedMonoidMap units_incl;   // GL -> Omega
  GradedSignedMonoid P;         // alpha^{-1}(GL)
  GradedMonoidMap to_M;         // P -> M
  GradedMonoidMap to_units;     // P -> GL
};

inline PrelogPullback prelog_pullback(const GradedMonoidMap& alpha,
                                      const GradedSignedMonoid& M,
                                      const GradedSignedMonoid& Omega) {
  PrelogPullback out;
  out.GL = units(Omega, &out.units_incl);
  std::map<int, std::map<int, int>> gl_index;  // degree -> Omega id -> GL id
  for (auto& [t, olds] : out.units_incl.at)
    for (size_t i = 0; i < olds.size(); ++i) gl_index[t][olds[i]] = (int)i;
  std::map<int, std::vector<char>> keep;
  for (auto& [t, n] : M.card) {
    std::vector<char> mask(n, 0);
    for (int a = 0; a < n; ++a)
      mask[a] = gl_index.count(t) && gl_index.at(t).count(alpha.at.at(t)[a]);
    keep[t] = mask;
  }
  out.P = submonoid(M, keep, &out.to_M);
  for (auto& [t, olds] : out.to_M.at) {
    std::vector<int> f;
    for (int a : olds) f.push_back(gl_index.at(t).at(alpha.at.at(t)[a]));
    out.to_units.at[t] = f;
  }
  return out;
}

struct Logification {
  PrelogPullback prelog;
  GradedSignedMonoid Ma;
  GradedMonoidMap from_M;      // M -> Ma
  GradedMonoidMap from_units;  // GL -> Ma
  GradedMonoidMap alpha_a;     // Ma -> Omega
  bool trivial = false;        // Ma isomorphic to GL
};

// Pushout of M <- alpha^{-1}(GL) -> GL in commutative graded signed monoids,
// computed on pairs (m, g) by congruence closure; the rewrite cap bounds the
// number of relation instances processed.
inline Logification logification(const GradedMonoidMap& alpha,
                                 const GradedSignedMonoid& M,
                                 const GradedSignedMonoid& Omega,
                                 int rewrite_cap = 10000) {
  if (!M.commutative || !Omega.commutative)
    throw std::invalid_argument("logification: commutative monoids required");
  Logification out;
  out.prelog = prelog_pullback(alpha, M, Omega);
  const GradedSignedMonoid& GL = out.prelog.GL;
  const GradedSignedMonoid& P = out.prelog.P;

  int wlo = std::min(M.card.begin()->first, GL.card.begin()->first);
  int whi = std::max(M.card.rbegin()->first, GL.card.rbegin()->first);

  // enumerate pairs per degree
  struct Pair {
    int s, m, t, g;
  };
  std::vector<Pair> pairs;
  std::map<std::tuple<int, int, int, int>, int> pid;
  for (auto& [s, nm] : M.card)
    for (auto& [t, ng] : GL.card) {
      if (s + t < wlo || s + t > whi) continue;
      for (int m = 0; m < nm; ++m)
        for (int g = 0; g < ng; ++g) {
          pid[{s, m, t, g}] = (int)pairs.size();
          pairs.push_back({s, m, t, g});
        }
    }

  detail::UnionFind uf(pairs.size());
  long rewrites = 0;
  auto relate = [&](int a, int b) {
    if (++rewrites > rewrite_cap)
      throw std::runtime_error("logification: rewrite cap exceeded");
    uf.unite(a, b);
  };
  for (int i = 0; i < (int)pairs.size(); ++i) {
    auto& q = pairs[i];
    relate(i, pid.at({q.s, M.neg_of(q.s, q.m), q.t, GL.neg_of(q.t, q.g)}));
    for (auto& [ps, np] : P.card)
      for (int p = 0; p < np; ++p) {
        if (!M.has_mult(q.s, ps) || !GL.has_mult(q.t, ps)) continue;
        int s2 = q.s + ps, t2 = q.t + ps;
        auto left = pid.find({s2, M.mul(q.s, ps, q.m, out.prelog.to_M.at.at(ps)[p]),
                              q.t, q.g});
        auto right = pid.find({q.s, q.m, t2,
                               GL.mul(q.t, ps, q.g, out.prelog.to_units.at.at(ps)[p])});
        if (left != pid.end() && right != pid.end())
          relate(left->second, right->second);
      }
  }

  // classes per degree
  std::map<int, std::vector<int>> class_of_degree;  // degree -> roots
  std::map<int, int> class_id;                      // root -> id in its degree
  std::vector<int> degree_of(pairs.size());
  for (int i = 0; i < (int)pairs.size(); ++i) {
    int d = pairs[i].s + pairs[i].t;
    degree_of[i] = d;
    int r = uf.find(i);
    if (r == i) {
      class_id[r] = (int)class_of_degree[d].size();
      class_of_degree[d].push_back(r);
    }
  }
  auto cls = [&](int i) { return class_id.at(uf.find(i)); };

  GradedSignedMonoid& Ma = out.Ma;
  Ma.commutative = true;
  for (auto& [d, roots] : class_of_degree) Ma.card[d] = (int)roots.size();
  for (auto& [d, roots] : class_of_degree) {
    std::vector<int> nv;
    for (int r : roots) {
      auto& q = pairs[r];
      nv.push_back(cls(pid.at({q.s, M.neg_of(q.s, q.m), q.t, q.g})));
    }
    Ma.neg[d] = nv;
  }
  Ma.unit = cls(pid.at({0, M.unit, 0, GL.unit}));

  for (auto& [d1, r1] : class_of_degree)
    for (auto& [d2, r2] : class_of_degree) {
      if (!Ma.has(d1 + d2)) continue;
      std::vector<std::vector<int>> tab(r1.size(),
                                        std::vector<int>(r2.size(), -1));
      bool total = true;
      // search all representative pairs for a multipliable combination
      for (int i = 0; i < (int)pairs.size(); ++i) {
        if (degree_of[i] != d1) continue;
        for (int j = 0; j < (int)pairs.size(); ++j) {
          if (degree_of[j] != d2) continue;
          auto &a = pairs[i], &b = pairs[j];
          if (!M.has_mult(a.s, b.s) || !GL.has_mult(a.t, b.t)) continue;
          auto it = pid.find({a.s + b.s, M.mul(a.s, b.s, a.m, b.m), a.t + b.t,
                              GL.mul(a.t, b.t, a.g, b.g)});
          if (it == pid.end()) continue;
          int& cell = tab[cls(i)][cls(j)];
          int v = cls(it->second);
          if (cell == -1)
            cell = v;
          else if (cell != v)
            throw std::logic_error("logification: pushout mult inconsistent");
        }
      }
      for (auto& row : tab)
        for (int v : row)
          if (v == -1) total = false;
      if (total) Ma.mult[{d1, d2}] = tab;
    }

  for (auto& [s, n] : M.card) {
    std::vector<int> f;
    for (int m = 0; m < n; ++m) f.push_back(cls(pid.at({s, m, 0, GL.unit})));
    out.from_M.at[s] = f;
  }
  for (auto& [t, n] : GL.card) {
    std::vector<int> f;
    for (int g = 0; g < n; ++g) f.push_back(cls(pid.at({0, M.unit, t, g})));
    out.from_units.at[t] = f;
  }

  // induced map to Omega: alpha(m) * incl(g), checked across representatives
  for (auto& [d, roots] : class_of_degree) {
    std::vector<int> f(roots.size(), -1);
    for (int i = 0; i < (int)pairs.size(); ++i) {
      if (degree_of[i] != d) continue;
      auto& q = pairs[i];
      if (!Omega.has_mult(q.s, q.t)) continue;
      int v = Omega.mul(q.s, q.t, alpha.at.at(q.s)[q.m],
                        out.prelog.units_incl.at.at(q.t)[q.g]);
      int& cell = f[cls(i)];
      if (cell == -1)
        cell = v;
      else if (cell != v)
        throw std::logic_error("logification: induced map inconsistent");
    }
    for (int v : f)
      if (v == -1)
        throw std::logic_error("logification: induced map undefined");
    out.alpha_a.at[d] = f;
  }

  out.trivial = find_graded_iso(Ma, GL).has_value();
  return out;
}

}  // namespace dspace
