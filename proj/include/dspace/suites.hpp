#pragma once

// Named verification suites, one per acceptance criterion, runnable from the
// CLI and from the acceptance binary. Each suite appends named checks with
// witnesses to a report; the exit status is a pure function of the report.

#include <dspace/cofib.hpp>
#include <dspace/dayconv.hpp>
#include <dspace/fincat.hpp>
#include <dspace/freespec.hpp>
#include <dspace/graded.hpp>
#include <dspace/hocolim.hpp>
#include <dspace/operadfilt.hpp>
#include <dspace/serialize.hpp>
#include <dspace/sset.hpp>

#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace dspace {

struct SuiteConfig {
  std::string suite;
  int max_degree = 3;
  int dim_cap = 2;
  int arity_cap = 3;
  int p_max = 4;
  unsigned seed = 42;
  std::string fixtures = "fixtures";
  std::string format = "text";  // text | json
  std::string out;              // optional JSON report path

  void validate() const {
    if (max_degree < 0 || dim_cap < 0 || arity_cap <= 0 || p_max <= 0)
      throw std::invalid_argument("all caps must be positive");
    if (format != "text" && format != "json")
      throw std::invalid_argument("format must be text or json");
  }
};

struct SuiteCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct SuiteResult {
  std::string suite;
  bool error = false;        // a module raised; message in error_text
  std::string error_text;
  std::vector<SuiteCheck> checks;

  bool pass() const {
    if (error) return false;
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline json suite_report_json(const SuiteResult& r, const SuiteConfig& cfg) {
  json checks = json::array();
  for (auto& c : r.checks)
    checks.push_back(
        json{{"name", c.name}, {"pass", c.pass}, {"witnesses", c.witnesses}});
  return json{{"schema_version", "1.0"},
              {"suite", r.suite},
              {"config",
               json{{"max_degree", cfg.max_degree},
                    {"dim_cap", cfg.dim_cap},
                    {"arity_cap", cfg.arity_cap},
                    {"p_max", cfg.p_max},
                    {"seed", cfg.seed},
                    {"fixtures", cfg.fixtures}}},
              {"error", r.error},
              {"error_text", r.error_text},
              {"checks", checks},
              {"pass", r.pass()}};
}

namespace suites {

inline void add(SuiteResult& r, const std::string& name, bool pass,
                std::vector<std::string> witnesses = {}) {
  if (pass) witnesses.clear();
  r.checks.push_back(SuiteCheck{name, pass, std::move(witnesses)});
}

inline DiagSpace pt_set(int n) {
  return discrete_diagspace(
      CatId::Pt, 0, 0, [n](const Obj&) { return n; },
      [](const Mor&, int e) { return e; });
}

inline DiagMap pt_map(const DiagSpace& X, const DiagSpace& Y,
                      std::vector<int> img) {
  return disc_map(X, Y, [img](const Obj&, int v) { return img[v]; });
}

inline int pt_card(const DiagSpace& X) { return X.level(obj_Pt()).count(0); }
inline int pt_card(const FiltSpace& F) { return pt_card(F.space); }

inline long inj_count(int m, int n) {
  if (m > n) return 0;
  long r = 1;
  for (int i = 0; i < m; ++i) r *= n - i;
  return r;
}

inline bool mor_is_iso(const Mor& f) {
  for (auto& g : enumerate_mor(f.dst(), f.src()))
    if (compose(g, f) == identity(f.src()) && compose(f, g) == identity(f.dst()))
      return true;
  return false;
}

inline DiagSpace random_discrete(CatId cat, int max_degree, int dim_cap,
                                 std::mt19937& rng) {
  std::vector<FreeDiag> frees;
  for (auto& k : enumerate_obj(cat, max_degree)) {
    int copies = (int)(rng() % 3);
    if (k.degree() > 1) copies = (int)(rng() % 2);
    if (copies)
      frees.push_back(
          free_F(cat, max_degree, dim_cap, k, sset_discrete(copies, dim_cap)));
  }
  if (frees.empty())
    frees.push_back(free_F(cat, max_degree, dim_cap, monoidal_unit(cat),
                           sset_point(dim_cap)));
  std::vector<const DiagSpace*> parts;
  for (auto& f : frees) parts.push_back(&f.space);
  return diag_disjoint_union(parts);
}

inline DiagMap discrete_diagmap(const DiagSpace& X,
                                const std::function<int(const Obj&, int)>& fn) {
  DiagMap f;
  for (auto& o : X.objects()) {
    SimplicialMap m;
    m.img.resize(X.dim_cap + 1);
    for (int e = 0; e < X.level(o).count(0); ++e)
      m.img[0].push_back(FormalSimplex{0, fn(o, e), {0}});
    f.at[o] = m;
  }
  return f;
}

// --- 1. j-category-laws ----------------------------------------------------

inline void suite_j_category_laws(const SuiteConfig& cfg, SuiteResult& rep) {
  int md = cfg.max_degree;
  auto objs = enumerate_obj(CatId::J, md);
  long unit_fail = 0, unit_total = 0;
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& f : enumerate_mor(a, b)) {
        ++unit_total;
        if (compose(identity(b), f) != f || compose(f, identity(a)) != f)
          ++unit_fail;
      }
  add(rep, "identity laws over " + std::to_string(unit_total) + " morphisms",
      unit_fail == 0, {std::to_string(unit_fail) + " failures"});

  long assoc_fail = 0, triples = 0;
  for (auto& a : objs)
    for (auto& b : objs) {
      auto fs = enumerate_mor(a, b);
      if (fs.empty()) continue;
      for (auto& c : objs) {
        auto gs = enumerate_mor(b, c);
        if (gs.empty()) continue;
        for (auto& d : objs)
          for (auto& h : enumerate_mor(c, d))
            for (auto& g : gs)
              for (auto& f : fs) {
                ++triples;
                if (compose(compose(h, g), f) != compose(h, compose(g, f)))
                  ++assoc_fail;
              }
      }
    }
  add(rep, "associativity over " + std::to_string(triples) + " triples",
      assoc_fail == 0, {std::to_string(assoc_fail) + " failures"});
}

// --- 2. j-permutative ------------------------------------------------------

inline void suite_j_permutative(const SuiteConfig& cfg, SuiteResult& rep) {
  int md = std::min(cfg.max_degree, 2);
  for (CatId cat : {CatId::I, CatId::J}) {
    std::string tag = std::string(cat_name(cat)) + ": ";
    auto objs = enumerate_obj(cat, md);
    Obj u = monoidal_unit(cat);
    bool strict = true;
    for (auto& a : objs) {
      if (concat(u, a) != a || concat(a, u) != a) strict = false;
      for (auto& b : objs)
        for (auto& c : objs)
          if (concat(concat(a, b), c) != concat(a, concat(b, c))) strict = false;
    }
    add(rep, tag + "strict unit and associativity of the sum", strict);
    bool involution = true, hexagon = true, natural = true, unit_mor = true;
    for (auto& a : objs)
      for (auto& b : objs) {
        Mor chi = symmetry(a, b);
        if (compose(symmetry(b, a), chi) != identity(concat(a, b)))
          involution = false;
        for (auto& c : objs)
          if (symmetry(a, concat(b, c)) !=
              compose(concat(identity(b), symmetry(a, c)),
                      concat(symmetry(a, b), identity(c))))
            hexagon = false;
        for (auto& a2 : objs)
          for (auto& b2 : objs)
            for (auto& f : enumerate_mor(a, a2))
              for (auto& g : enumerate_mor(b, b2)) {
                if (compose(symmetry(a2, b2), concat(f, g)) !=
                    compose(concat(g, f), symmetry(a, b)))
                  natural = false;
                if (concat(concat(f, g), identity(u)) != concat(f, g))
                  unit_mor = false;
              }
      }
    add(rep, tag + "symmetry is an involution", involution);
    add(rep, tag + "hexagon identity", hexagon);
    add(rep, tag + "naturality of the symmetry", natural);
    add(rep, tag + "strict unit on morphisms", unit_mor);
  }
}

// --- 3. sigma-inv-sigma ----------------------------------------------------

inline void suite_sigma_inv_sigma(const SuiteConfig& cfg, SuiteResult& rep) {
  int md = std::min(cfg.max_degree, 3);
  bool well_defined = true, bijective = true;
  std::vector<std::string> wit;
  for (int m1 = 0; m1 <= md; ++m1)
    for (int m2 = 0; m2 <= md; ++m2)
      for (int l = 0; m1 + l <= md && m2 + l <= md; ++l) {
        int n1 = m1 + l, n2 = m2 + l;
        std::set<Mor> seen;
        for (auto& a1 : enumerate_inj(n1, n1))
          for (auto& a2 : enumerate_inj(n2, n2)) {
            SigmaInvSigmaRep r{m1, m2, l, a1, a2};
            Mor base = sigma_inv_sigma_to_J(r);
            seen.insert(base);
            for (auto& s : enumerate_inj(l, l)) {
              SigmaInvSigmaRep r2{m1, m2, l,
                                  compose(a1, concat(inj_identity(m1), s)),
                                  compose(a2, concat(inj_identity(m2), s))};
              if (sigma_inv_sigma_to_J(r2) != base) {
                well_defined = false;
                wit.push_back("representative change fails at (" +
                              std::to_string(m1) + "," + std::to_string(m2) +
                              ") l=" + std::to_string(l));
              }
            }
          }
        auto all = enumerate_mor(obj_J(m1, m2), obj_J(n1, n2));
        if (seen != std::set<Mor>(all.begin(), all.end())) {
          bijective = false;
          wit.push_back("hom-set mismatch at (" + std::to_string(m1) + "," +
                        std::to_string(m2) + ") l=" + std::to_string(l));
        }
      }
  add(rep, "independence of the representative", well_defined, wit);
  add(rep, "hom-set bijection onto the target category", bijective, wit);
}

// --- 4. comma-components ---------------------------------------------------

inline void suite_comma_components(const SuiteConfig& cfg, SuiteResult& rep) {
  int md = std::min(cfg.max_degree, 3);
  bool counts = true, terminals = true;
  std::vector<std::string> wit;
  for (int k1 = 0; k1 <= md; ++k1)
    for (int k2 = 0; k2 <= md; ++k2)
      for (int l1 = 0; l1 <= md; ++l1)
        for (int l2 = 0; l2 <= md; ++l2) {
          auto cc = comma_category(obj_J(k1, k2), obj_J(l1, l2));
          if ((long)cc.comps.size() != inj_count(k1, l1) * inj_count(k2, l2)) {
            counts = false;
            wit.push_back("component count off at k=(" + std::to_string(k1) +
                          "," + std::to_string(k2) + "), l=(" +
                          std::to_string(l1) + "," + std::to_string(l2) + ")");
          }
          for (auto& ts : cc.terminals) {
            if (ts.empty()) terminals = false;
            for (int t : ts)
              if (!mor_is_iso(cc.objects[t].alpha)) terminals = false;
          }
        }
  add(rep, "components biject with pairs of injections", counts, wit);
  add(rep, "every component has a terminal object", terminals);
  auto ws = check_well_structured(CatId::J, AutSelector::Discrete, md, md);
  add(rep, "degree functor and component conditions", ws.well_structured(),
      ws.counterexamples);
  auto pos = check_well_structured(CatId::J, AutSelector::PositiveDiscrete, md, md);
  add(rep, "freeness for the positive discrete selector",
      pos.well_structured() && pos.very_well_structured, pos.counterexamples);
}

// --- 5. day-convolution ----------------------------------------------------

inline void suite_day_convolution(const SuiteConfig& cfg, SuiteResult& rep) {
  std::mt19937 rng(cfg.seed);
  int mdI = std::max(cfg.max_degree, 4);
  {
    FreeDiag F = free_F(CatId::I, mdI, 1, obj_I(1), sset_point(1));
    DiagSpace two = random_discrete(CatId::I, mdI, 1, rng);
    IsoReport u1 = check_day_unit(F.space);
    IsoReport u2 = check_day_unit(two);
    add(rep, "unit isomorphism over the injections", u1.ok() && u2.ok(),
        u1.ok() ? u2.witnesses : u1.witnesses);
    IsoReport s = check_day_symmetry(F.space, two);
    add(rep, "symmetry isomorphism over the injections", s.ok(), s.witnesses);
    FreeDiag G = free_F(CatId::I, mdI, 1, obj_I(1), sset_discrete(2, 1));
    IsoReport a = check_day_associativity(F.space, G.space,
                                          constant_point_space(CatId::I, mdI, 1));
    add(rep, "associativity isomorphism over the injections", a.ok(),
        a.witnesses);
  }
  {
    DiagSpace X = random_discrete(CatId::J, 1, 1, rng);
    DiagSpace Y = random_discrete(CatId::J, 1, 1, rng);
    IsoReport u = check_day_unit(X);
    IsoReport s = check_day_symmetry(X, Y);
    FreeDiag F = free_F(CatId::J, 1, 1, obj_J(0, 0), sset_discrete(2, 1));
    FreeDiag G = free_F(CatId::J, 1, 1, obj_J(1, 1), sset_point(1));
    IsoReport a = check_day_associativity(F.space, X, G.space);
    add(rep, "unit, symmetry, associativity componentwise",
        u.ok() && s.ok() && a.ok(),
        !u.ok() ? u.witnesses : (!s.ok() ? s.witnesses : a.witnesses));
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int trial = 0; trial < 25; ++trial) {
      DiagSpace X = random_discrete(CatId::I, 3, 1, rng);
      IsoReport r = check_kan_oracle(obj_I(1 + (int)(rng() % 2)), X);
      if (!r.ok()) {
        ok = false;
        wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
      }
    }
    add(rep, "Kan-shift oracle on 25 random discrete diagrams", ok, wit);
  }
  {
    IsoReport r1 = check_free_product_iso(CatId::I, mdI, 1, obj_I(1),
                                          sset_point(1), obj_I(1), sset_point(1));
    IsoReport r2 = check_free_product_iso(CatId::J, 1, 1, obj_J(0, 0),
                                          sset_discrete(2, 1), obj_J(1, 1),
                                          sset_point(1));
    add(rep, "product of free diagrams is free on the sum",
        r1.ok() && r2.ok(), r1.ok() ? r2.witnesses : r1.witnesses);
  }
}

// --- 6. flatness -----------------------------------------------------------

inline DiagSpace collapse_space() {
  return discrete_diagspace(
      CatId::I, 2, 1, [](const Obj& o) { return o.n1 == 1 ? 2 : 1; },
      [](const Mor&, int) { return 0; });
}

inline void suite_flatness(const SuiteConfig& cfg, SuiteResult& rep) {
  int md = std::max(cfg.max_degree, 4);
  bool powers_flat = true;
  std::vector<std::string> wit;
  for (int sz = 2; sz <= 3; ++sz) {
    XBullet B = x_bullet(sset_discrete(sz, 1), 0, md, 1);
    FlatnessReport r = flatness_check_I(B.monoid.carrier);
    if (!r.flat()) {
      powers_flat = false;
      wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
    }
  }
  add(rep, "powers of pointed sets of size 2 and 3 are flat", powers_flat, wit);
  FlatnessReport bad = flatness_check_I(collapse_space());
  add(rep, "a collapsing action is rejected with a witness",
      !bad.flat() && !bad.witnesses.empty(), {"collapse fixture accepted"});
  bool agree = true;
  std::vector<DiagSpace> fixtures;
  fixtures.push_back(x_bullet(sset_discrete(2, 1), 0, 2, 1).monoid.carrier);
  fixtures.push_back(constant_point_space(CatId::I, 2, 1));
  fixtures.push_back(collapse_space());
  std::mt19937 rng(cfg.seed);
  for (int t = 0; t < 3; ++t)
    fixtures.push_back(random_discrete(CatId::I, 2, 1, rng));
  for (auto& X : fixtures) {
    DiagSpace E = empty_diagspace(CatId::I, X.max_degree, X.dim_cap);
    CofibReport latch =
        cofibration_check(E, X, diagmap_from_empty(X), CofibFlavor::Flat);
    if (latch.pass != flatness_check_I(X).flat()) agree = false;
  }
  add(rep, "explicit criterion agrees with the latching-flavor check", agree);
}

// --- 7. latching-cofibrations ---------------------------------------------

inline void suite_latching_cofibrations(const SuiteConfig& cfg,
                                        SuiteResult& rep) {
  int md = std::max(cfg.max_degree, 4);
  bool cells_ok = true;
  std::vector<std::string> wit;
  std::vector<DiagSpace> projective_fixtures;
  for (int k = 0; k <= 2; ++k) {
    FreeDiag F = free_F(CatId::I, md, 1, obj_I(k), sset_point(1));
    DiagSpace E = empty_diagspace(CatId::I, md, 1);
    CofibReport r = cofibration_check(E, F.space, diagmap_from_empty(F.space),
                                      CofibFlavor::Projective);
    if (!r.pass) {
      cells_ok = false;
      wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
    }
    projective_fixtures.push_back(F.space);
  }
  add(rep, "free cells are projective cofibrations at all levels", cells_ok,
      wit);
  bool proj_implies_flat = true;
  for (auto& X : projective_fixtures)
    if (!flatness_check_I(X).flat()) proj_implies_flat = false;
  add(rep, "projective-cofibrant fixtures are flat", proj_implies_flat);
  XBullet B = x_bullet(sset_discrete(2, 1), 0, md, 1);
  DiagSpace E = empty_diagspace(CatId::I, md, 1);
  DiagMap from_e = diagmap_from_empty(B.monoid.carrier);
  CofibReport flat =
      cofibration_check(E, B.monoid.carrier, from_e, CofibFlavor::Flat);
  CofibReport proj =
      cofibration_check(E, B.monoid.carrier, from_e, CofibFlavor::Projective);
  add(rep, "the power diagram is flat", flat.pass, flat.witnesses);
  add(rep, "the power diagram fails projective cofibrancy with a witness",
      !proj.pass && !proj.witnesses.empty(), {"no latching witness produced"});
}

// --- 8. hocolim-homology ---------------------------------------------------

inline void suite_hocolim_homology(const SuiteConfig& cfg, SuiteResult& rep) {
  {
    auto N = nerve(truncated_cat(CatId::I, 4), 3);
    auto h = homology(N.S, 2);
    add(rep, "nerve of the injections up to degree 4 has the homology of a point",
        h[0] == HomologyGroup{1, {}} && h[1].is_zero() && h[2].is_zero(),
        {"H0 rank " + std::to_string(h[0].rank) + ", H1 rank " +
         std::to_string(h[1].rank) + ", H2 rank " + std::to_string(h[2].rank)});
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int N = 0; N <= 3; ++N) {
      auto NJ = nerve(truncated_cat(CatId::J, N), 2);
      int p = pi0_count(NJ.S);
      if (p != 2 * N + 1) {
        ok = false;
        wit.push_back("pi0 at degree " + std::to_string(N) + " is " +
                      std::to_string(p));
      }
    }
    add(rep, "component count of the nerve of the two-index category", ok, wit);
  }
  {
    std::mt19937 rng(cfg.seed);
    bool ok = true;
    for (int trial = 0; trial < 10; ++trial) {
      int cn = 1 + (int)(rng() % 2);
      DiagSpace C = discrete_diagspace(
          CatId::I, 2, 2, [&](const Obj&) { return cn; },
          [](const Mor&, int e) { return e; });
      DiagSpace A = random_discrete(CatId::I, 2, 2, rng);
      DiagSpace B = random_discrete(CatId::I, 2, 2, rng);
      auto orbit_map = [&](const DiagSpace& X) {
        std::map<std::pair<Obj, int>, int> slot;
        for (auto& o : X.objects())
          for (int e = 0; e < X.level(o).count(0); ++e)
            slot[{o, e}] = (int)slot.size();
        detail::UnionFind uf(slot.size());
        for (auto& a : X.objects())
          for (auto& b : X.objects())
            for (auto& m : enumerate_mor(a, b))
              for (int e = 0; e < X.level(a).count(0); ++e)
                uf.unite(slot.at({a, e}),
                         slot.at({b, X.act(m).img[0][e].base_id}));
        std::map<std::pair<Obj, int>, int> cls;
        for (auto& [k, i] : slot) cls[k] = uf.find(i);
        return cls;
      };
      auto ca = orbit_map(A);
      auto cb = orbit_map(B);
      std::map<int, int> pick_a, pick_b;
      DiagMap f = discrete_diagmap(A, [&](const Obj& o, int e) {
        return pick_a.try_emplace(ca.at({o, e}), (int)(rng() % cn)).first->second;
      });
      DiagMap g = discrete_diagmap(B, [&](const Obj& o, int e) {
        return pick_b.try_emplace(cb.at({o, e}), (int)(rng() % cn)).first->second;
      });
      if (!check_hocolim_preserves_pullback(A, B, C, f, g, 2)) ok = false;
    }
    add(rep, "pullbacks preserved on 10 random squares", ok);
  }
}

// --- 9. graded-monoids -----------------------------------------------------

inline void suite_graded_monoids(const SuiteConfig& cfg, SuiteResult& rep) {
  {
    bool ok = true;
    std::vector<std::string> wit;
    std::vector<GradedSignedMonoid> corpus{
        trivial_graded(), laurent_graded(-2, 2), laurent_graded_zero(0, 2),
        laurent_graded(0, 0)};
    try {
      json logs = load_json_file(cfg.fixtures + "/log_structures.json");
      for (const json& e : logs) {
        LogFixture f = log_from_json(e);
        corpus.push_back(f.M);
        corpus.push_back(f.R);
      }
    } catch (const std::invalid_argument& e) {
      ok = false;
      wit.push_back(e.what());
    }
    for (auto& M : corpus) {
      auto r = check_axioms(M);
      if (!r.ok(M.commutative)) {
        ok = false;
        wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
      }
    }
    add(rep, "axioms and graded commutativity on the fixture corpus", ok, wit);
  }
  {
    MonoidData L = sign_orbit_J_monoid(4);
    Pi0Report P = pi0_of_J_monoid(L, 4);
    bool stab = P.state() == "STABILIZED" && P.well_defined;
    bool laurent = stab && find_graded_iso(P.M, laurent_graded(-1, 1)).has_value();
    bool all_units = stab && grouplike(P.M) && units(P.M) == P.M;
    add(rep, "the sign-orbit monoid stabilizes to the sign Laurent model",
        stab && laurent, P.witnesses);
    add(rep, "its components are all units", all_units, P.witnesses);
  }
  {
    GradedSignedMonoid ku = laurent_graded_zero(0, 2);
    add(rep, "the zero-extended model has units exactly in degree 0",
        units(ku) == laurent_graded(0, 0) && !grouplike(ku));
  }
  {
    MonoidData T = terminal_J_monoid(3);
    Pi0Report PT = pi0_of_J_monoid(T, 3);
    QuotientReport qt = check_pi0_quotient(T, PT);
    MonoidData L = sign_orbit_J_monoid(4);
    Pi0Report PL = pi0_of_J_monoid(L, 4);
    QuotientReport ql = check_pi0_quotient(L, PL);
    add(rep, "sign quotient matches the component computation",
        qt.ok() && ql.ok(), qt.ok() ? ql.witnesses : qt.witnesses);
  }
}

// --- 10. logification ------------------------------------------------------

inline void suite_logification(const SuiteConfig& cfg, SuiteResult& rep) {
  json logs = load_json_file(cfg.fixtures + "/log_structures.json");
  int unit_fixtures = 0;
  bool trivial_ok = true, verdicts = true, idempotent = true, factoring = true;
  std::vector<std::string> wit;
  for (const json& e : logs) {
    LogFixture f = log_from_json(e);
    bool factors = factors_through_units(f.alpha, f.M, f.R);
    if (factors != f.factors_through_units) {
      factoring = false;
      wit.push_back(f.name + ": unexpected factoring verdict");
    }
    Logification lg = logification(f.alpha, f.M, f.R);
    if (factors) {
      ++unit_fixtures;
      if (!lg.trivial) {
        trivial_ok = false;
        wit.push_back(f.name + ": expected the trivial structure");
      }
    }
    if (lg.trivial != f.expect_trivial) {
      verdicts = false;
      wit.push_back(f.name + ": verdict differs from the fixture");
    }
    Logification lg2 = logification(lg.alpha_a, lg.Ma, f.R);
    if (!find_graded_iso(lg2.Ma, lg.Ma).has_value() ||
        lg2.trivial != lg.trivial) {
      idempotent = false;
      wit.push_back(f.name + ": not idempotent");
    }
  }
  add(rep, "factoring through the units detected as recorded", factoring, wit);
  add(rep,
      "structures landing in the units trivialize (" +
          std::to_string(unit_fixtures) + " fixtures)",
      unit_fixtures >= 3 && trivial_ok, wit);
  add(rep, "verdicts match the fixture expectations", verdicts, wit);
  add(rep, "idempotent on all outputs", idempotent, wit);
}

// --- 11. freespec-functoriality -------------------------------------------

inline void suite_freespec_functoriality(const SuiteConfig& cfg,
                                         SuiteResult& rep) {
  int p = cfg.p_max;
  std::vector<Mor> mors;
  for (auto& a : enumerate_obj(CatId::J, 2))
    for (auto& b : enumerate_obj(CatId::J, 2))
      for (auto& m : enumerate_mor(a, b)) mors.push_back(m);
  {
    bool ok = true;
    long pairs = 0;
    std::vector<std::string> wit;
    for (auto& f : mors)
      for (auto& g : mors) {
        if (f.dst() != g.src()) continue;
        ++pairs;
        FreespecReport r = compose_and_check(g, f, p);
        if (!r.ok) {
          ok = false;
          wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
        }
      }
    add(rep,
        "contravariant functoriality over " + std::to_string(pairs) +
            " composable pairs",
        ok && pairs > 50, wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 <= 2; ++a2)
        for (int b1 = 0; b1 <= 2; ++b1)
          for (int b2 = 0; b2 <= 2; ++b2) {
            MonoidalReport r = check_monoidal_iso(
                monoidal_iso(FreeSpec{a1, a2}, FreeSpec{b1, b2}, p));
            if (!r.ok()) {
              ok = false;
              wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
            }
          }
    add(rep, "monoidal comparison well-defined and bijective", ok, wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (auto& f : mors)
      for (auto& g : mors) {
        FreespecReport r = check_monoidal_naturality(f, g, p);
        if (!r.ok) {
          ok = false;
          wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
        }
      }
    add(rep, "naturality of the monoidal comparison", ok, wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int a1 = 0; a1 <= 2; ++a1)
      for (int a2 = 0; a2 <= 2; ++a2)
        for (int b1 = 0; b1 <= 2; ++b1)
          for (int b2 = 0; b2 <= 2; ++b2) {
            FreespecReport r =
                check_monoidal_symmetry(FreeSpec{a1, a2}, FreeSpec{b1, b2}, p);
            if (!r.ok) {
              ok = false;
              wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
            }
          }
    add(rep, "compatibility with the symmetry", ok, wit);
  }
}

// --- 12. appendix-filtrations ---------------------------------------------

inline long long binom_ll(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
  return r;
}

inline void suite_appendix_filtrations(const SuiteConfig& cfg,
                                       SuiteResult& rep) {
  std::mt19937 rng(cfg.seed);
  auto random_span = [&](std::string name) {
    SpanFixture s;
    s.name = std::move(name);
    s.x0 = (int)(rng() % 3);
    s.x1 = s.x0 + (int)(rng() % (4 - s.x0));
    s.x2 = s.x0 + (int)(rng() % 2);
    auto leg = [&](int dst) {
      std::vector<int> pool(dst);
      for (int i = 0; i < dst; ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      return std::vector<int>(pool.begin(), pool.begin() + s.x0);
    };
    s.f1 = leg(s.x1);
    s.f2 = leg(s.x2);
    return s;
  };

  // the brute-force count of a stage of the advance filtration on tuples
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int x0 = 1; x0 <= 2; ++x0)
      for (int x1 = x0; x1 <= 3; ++x1) {
        DiagSpace X0 = pt_set(x0), X1 = pt_set(x1);
        std::vector<int> img(x0);
        for (int i = 0; i < x0; ++i) img[i] = i;
        DiagMap f = pt_map(X0, X1, img);
        int fresh = x1 - x0;
        for (int n = 1; n <= 4; ++n)
          for (int i = 0; i <= n; ++i) {
            long long want = 0;
            for (int j = 0; j <= i; ++j)
              want += binom_ll(n, j) * (long long)std::pow(fresh, j) *
                      (long long)std::pow(x0, n - j);
            int got = pt_card(q_filtration(X0, X1, f, n, i));
            if (got != (long long)want) {
              ok = false;
              wit.push_back("advance stage (" + std::to_string(n) + "," +
                            std::to_string(i) + ") has " + std::to_string(got) +
                            " classes, expected " + std::to_string(want));
            }
          }
      }
    add(rep, "one-map stages match the counting oracle", ok, wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    std::vector<SpanFixture> spans;
    json corpus = load_json_file(cfg.fixtures + "/spans.json");
    for (const json& e : corpus) spans.push_back(span_from_json(e));
    for (int t = 0; t < 3; ++t)
      spans.push_back(random_span("random-" + std::to_string(t)));
    for (auto& s : spans) {
      DiagSpace X0 = pt_set(s.x0), X1 = pt_set(s.x1), X2 = pt_set(s.x2);
      DiagMap f1 = pt_map(X0, X1, s.f1), f2 = pt_map(X0, X2, s.f2);
      int fresh = s.x1 - s.x0;
      for (int n = 1; n <= 4; ++n)
        for (int i = 0; i <= n; ++i) {
          long long want = 0;
          for (int j = 0; j <= i; ++j)
            want += binom_ll(n, j) * (long long)std::pow(fresh, j) *
                    (long long)std::pow(s.x2, n - j);
          int got = pt_card(p_filtration(X0, X1, X2, f1, f2, n, i));
          if (got != want) {
            ok = false;
            wit.push_back("span " + s.name + " stage (" + std::to_string(n) +
                          "," + std::to_string(i) + ") has " +
                          std::to_string(got) + " classes, expected " +
                          std::to_string(want));
          }
        }
      for (int n = 1; n <= 3; ++n) {
        PushoutLemmaReport lr = check_iterated_pushout_lemma(X0, X1, X2, f1, f2, n);
        if (!lr.ok) {
          ok = false;
          wit.insert(wit.end(), lr.witnesses.begin(), lr.witnesses.end());
        }
      }
    }
    add(rep, "span stages and their attaching squares on the span corpus", ok,
        wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int x0 = 0; x0 <= 2; ++x0)
      for (int x1 = std::max(x0, 1); x1 <= 3; ++x1) {
        DiagSpace X0 = pt_set(x0), X1 = pt_set(x1);
        std::vector<int> img(x0);
        for (int i = 0; i < x0; ++i) img[i] = i;
        DiagMap f = pt_map(X0, X1, img);
        for (int n = 1; n <= 4; ++n) {
          PushoutProduct P = iterated_pushout_product(X0, X1, f, n);
          long long dom = (long long)std::pow(x1, n) -
                          (long long)std::pow(x1 - x0, n);
          if (pt_card(P.dom) != dom || pt_card(P.cod) != (long long)std::pow(x1, n)) {
            ok = false;
            wit.push_back("corner domain size off at n=" + std::to_string(n));
          }
          std::set<int> image;
          for (int c = 0; c < pt_card(P.dom); ++c)
            image.insert(disc_apply(P.map, obj_Pt(), c));
          if ((int)image.size() != pt_card(P.dom)) {
            ok = false;
            wit.push_back("corner map of an injection is not injective at n=" +
                          std::to_string(n));
          }
        }
      }
    add(rep, "iterated corner maps have the predicted domain and stay injective",
        ok, wit);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    json corpus = load_json_file(cfg.fixtures + "/operads.json");
    for (const json& e : corpus) {
      SetOperad op = operad_from_json(e);
      OperadReport r = validate_operad(op);
      if (!r.ok) {
        ok = false;
        wit.push_back(op.name + " fails its relations");
        wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
      }
    }
    add(rep, "operad fixtures satisfy their relations after a round trip", ok,
        wit);
  }
  {
    // the shifted coequalizer rejects caps too small for its unit insertions
    DAlgebra alg = saturating_sum_algebra(cfg.arity_cap, 1);
    UkValue U = u_k(alg, 1);  // throws invalid_argument when the cap is 1
    add(rep, "shifted coequalizer of the saturating algebra stays the carrier",
        pt_card(U.space) == pt_card(alg.A));
  }
}

// --- 13. appendix-uk -------------------------------------------------------

inline void suite_appendix_uk(const SuiteConfig& cfg, SuiteResult& rep) {
  int cap = cfg.arity_cap;
  std::vector<AlgebraFixture> fixtures;
  json corpus = load_json_file(cfg.fixtures + "/algebras.json");
  for (const json& e : corpus) fixtures.push_back(algebra_from_json(e));

  // realized fixtures; free algebras own their monad value
  std::vector<std::pair<std::string, DAlgebra>> algs;
  std::vector<std::shared_ptr<FreeAlgebra>> keep_alive;
  for (auto& fx : fixtures) {
    int c = std::min(fx.arity_cap, cap);
    if (fx.kind == "saturating_sum") {
      algs.emplace_back(fx.name, saturating_sum_algebra(c, fx.top));
    } else {
      SetOperad op = fx.operad == "commutativity" ? commutativity_operad(c)
                                                  : associativity_operad(c);
      auto F = std::make_shared<FreeAlgebra>(free_algebra(op, pt_set(fx.points)));
      keep_alive.push_back(F);
      algs.emplace_back(fx.name, F->alg);
    }
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (auto& [name, alg] : algs) {
      OperadReport a = check_algebra(alg);
      OperadReport u = check_u0_forgetful(alg);
      ForkReport fk = algebra_split_fork(alg);
      if (!a.ok || !u.ok || !fk.ok()) {
        ok = false;
        wit.push_back(name + ": algebra/forgetful/fork failure");
        wit.insert(wit.end(), a.witnesses.begin(), a.witnesses.end());
        wit.insert(wit.end(), u.witnesses.begin(), u.witnesses.end());
        wit.insert(wit.end(), fk.witnesses.begin(), fk.witnesses.end());
      }
    }
    add(rep, "unshifted functor forgets and the canonical forks split", ok, wit);
  }
  {
    DAlgebra alg = saturating_sum_algebra(std::max(cap, 4), 2);
    UkValue U = u_k(alg, 2);
    Obj pt = obj_Pt();
    bool trivial = pt_card(U.space) == pt_card(alg.A);
    for (int c = 0; c < pt_card(U.space); ++c)
      for (auto& rho : perms(2))
        if (uk_act(U, pt, rho, c) != c) trivial = false;
    add(rep, "commutative shifts return the carrier with the trivial action",
        trivial);
  }
  {
    bool ok = true;
    std::vector<std::string> wit;
    for (int k = 0; k <= 2; ++k) {
      OperadReport r = check_uk_free(commutativity_operad(cap), pt_set(1), k);
      if (!r.ok) {
        ok = false;
        wit.insert(wit.end(), r.witnesses.begin(), r.witnesses.end());
      }
    }
    OperadReport a = check_uk_free(associativity_operad(cap), pt_set(1), 1);
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    OperadReport d = check_uk_free(commutativity_operad(cap), F1.space, 1);
    if (!a.ok || !d.ok) {
      ok = false;
      wit.insert(wit.end(), a.witnesses.begin(), a.witnesses.end());
      wit.insert(wit.end(), d.witnesses.begin(), d.witnesses.end());
    }
    add(rep, "shifted functor of a free algebra is the shifted free value", ok,
        wit);
  }
  {
    DAlgebra alg = saturating_sum_algebra(cap, 2);
    DiagSpace X = pt_set(0), Y = pt_set(1);
    DiagMap f = pt_map(X, Y, {});
    DiagMap p = disc_map(X, alg.A, [](const Obj&, int) { return 0; });
    UkFiltration F = structured_pushout_filtration(alg, X, Y, f, p, 0, cap);
    UkValue U = u_k(alg, 0);
    OperadReport bottom = check_filtration_bottom(F, U);
    add(rep, "letter-count filtration starts at the unglued shifted functor",
        bottom.ok, bottom.witnesses);
    OperadReport top = check_filtration_top(F, alg, X, Y, f, p);
    add(rep, "letter-count filtration ends at the glued algebra", top.ok,
        top.witnesses);
    bool squares = true, injective = true;
    std::vector<std::string> wit;
    for (int i = 1; i < cap; ++i) {
      SquareReport sq = check_filtration_square(F, alg, X, Y, f, i);
      if (!sq.ok()) {
        squares = false;
        wit.insert(wit.end(), sq.witnesses.begin(), sq.witnesses.end());
      }
    }
    for (int i = 1; i <= cap; ++i) {
      std::set<int> img;
      for (int c = 0; c < pt_card(F.stages[i - 1].space); ++c)
        img.insert(disc_apply(F.steps[i - 1], obj_Pt(), c));
      if ((int)img.size() != pt_card(F.stages[i - 1].space)) injective = false;
    }
    add(rep, "stage steps are pushouts along the attaching squares", squares,
        wit);
    add(rep, "stage maps are injective for an injective attachment", injective);
  }
  {
    DAlgebra alg = saturating_sum_algebra(cap, 2);
    DiagMap idm = disc_map(alg.A, alg.A, [](const Obj&, int v) { return v; });
    UkFiltration F =
        structured_pushout_filtration(alg, alg.A, alg.A, idm, idm, 0, cap);
    bool constant = true;
    for (int i = 1; i <= cap; ++i)
      if (!disc_map_bijective(F.steps[i - 1], F.stages[i - 1].space,
                              F.stages[i].space))
        constant = false;
    OperadReport top = check_filtration_top(F, alg, alg.A, alg.A, idm, idm);
    add(rep, "gluing along the identity freezes the filtration",
        constant && top.ok, top.witnesses);
  }
  {
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    FreeAlgebra FA = free_algebra(associativity_operad(cap), F1.space);
    DiagSpace X = empty_diagspace(CatId::I, 2, 0);
    DiagMap f = disc_map(X, F1.space, [](const Obj&, int v) { return v; });
    DiagMap p = disc_map(X, FA.alg.A, [](const Obj&, int v) { return v; });
    UkFiltration F =
        structured_pushout_filtration(FA.alg, X, F1.space, f, p, 1, 2);
    UkValue U = u_k(FA.alg, 1);
    OperadReport bottom = check_filtration_bottom(F, U);
    OperadReport top = check_filtration_top(F, FA.alg, X, F1.space, f, p);
    SquareReport sq = check_filtration_square(F, FA.alg, X, F1.space, f, 1);
    add(rep, "shifted filtration over the injections: ends and squares",
        bottom.ok && top.ok && sq.ok(),
        !bottom.ok ? bottom.witnesses
                   : (!top.ok ? top.witnesses : sq.witnesses));
  }
}

// --- registry ---------------------------------------------------------------

struct SuiteDef {
  std::string name;
  std::string description;
  void (*run)(const SuiteConfig&, SuiteResult&);
};

inline const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs{
      {"j-category-laws",
       "identity and associativity for the two-index category over all "
       "composable triples within the degree cap",
       &suite_j_category_laws},
      {"j-permutative",
       "strict unit/associativity of the sum plus naturality, hexagon, and "
       "involution for the symmetry",
       &suite_j_permutative},
      {"sigma-inv-sigma",
       "the localization construction is well-defined and hom-set bijective",
       &suite_sigma_inv_sigma},
      {"comma-components",
       "comma components biject with pairs of injections, terminals exist, "
       "and the positive discrete selector is very well-structured",
       &suite_comma_components},
      {"day-convolution",
       "unit/associativity/symmetry isomorphisms, the Kan-shift oracle, and "
       "products of free diagrams",
       &suite_day_convolution},
      {"flatness",
       "powers of pointed sets are flat, collapses are rejected, and the "
       "explicit criterion matches the latching-flavor check",
       &suite_flatness},
      {"latching-cofibrations",
       "free cells are projective cofibrations, projective implies flat, and "
       "the power diagram fails projective cofibrancy",
       &suite_latching_cofibrations},
      {"hocolim-homology",
       "the nerve of the injections is homologically a point, component "
       "counts, and pullback preservation",
       &suite_hocolim_homology},
      {"graded-monoids",
       "graded signed monoid axioms, stabilization of the sign Laurent model, "
       "units, and the sign quotient comparison",
       &suite_graded_monoids},
      {"logification",
       "pre-log structures landing in the units trivialize; logification is "
       "idempotent",
       &suite_logification},
      {"freespec-functoriality",
       "contravariant functoriality and the monoidal comparison of free "
       "symmetric spectra, exhaustively at the caps",
       &suite_freespec_functoriality},
      {"appendix-filtrations",
       "advance/span filtration stages against counting oracles, attaching "
       "squares, and iterated corner maps",
       &suite_appendix_filtrations},
      {"appendix-uk",
       "shifted coequalizers: forgetful at zero, free values, and the "
       "filtration of an algebra pushout",
       &suite_appendix_uk},
  };
  return defs;
}

}  // namespace suites

// run_suite: exit 0 when every check passes, 1 on failures or module errors,
// 2 on an unknown suite or invalid configuration.
inline int run_suite(const SuiteConfig& cfg, SuiteResult& result) {
  result = SuiteResult{};
  result.suite = cfg.suite;
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    result.error = true;
    result.error_text = e.what();
    return 2;
  }
  const suites::SuiteDef* def = nullptr;
  for (auto& d : suites::registry())
    if (d.name == cfg.suite) def = &d;
  if (!def) {
    result.error = true;
    result.error_text = "unknown suite: " + cfg.suite;
    return 2;
  }
  try {
    def->run(cfg, result);
  } catch (const std::exception& e) {
    result.error = true;
    result.error_text = e.what();
    return 1;
  }
  return result.pass() ? 0 : 1;
}

inline json list_suites_json() {
  json out = json::array();
  for (auto& d : suites::registry())
    out.push_back(json{{"name", d.name}, {"description", d.description}});
  return out;
}

}  // namespace dspace
