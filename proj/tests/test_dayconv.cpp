#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/dayconv.hpp>

#include <random>

using namespace dspace;

namespace {

// binomial-style oracle for |I(m,n)| = n(n-1)...(n-m+1)
long inj_count(int m, int n) {
  if (m > n) return 0;
  long r = 1;
  for (int i = 0; i < m; ++i) r *= n - i;
  return r;
}

// a random finite disjoint union of free I- or J-diagram spaces (discrete)
DiagSpace random_discrete(CatId cat, int max_degree, int dim_cap,
                          std::mt19937& rng) {
  std::vector<FreeDiag> frees;
  for (auto& k : enumerate_obj(cat, max_degree)) {
    int copies = (int)(rng() % 3);
    if (k.degree() > 1) copies = (int)(rng() % 2);  // keep levels small
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

// all simplicial maps between discrete simplicial sets = vertex assignments
std::vector<SimplicialMap> all_discrete_maps(const FinSSet& A, const FinSSet& B) {
  std::vector<SimplicialMap> out;
  int n = A.count(0), m = B.count(0);
  if (n == 0) {
    SimplicialMap f;
    f.img.resize(A.dim_cap + 1);
    out.push_back(f);
    return out;
  }
  std::vector<int> pick(n, 0);
  while (true) {
    SimplicialMap f;
    f.img.resize(A.dim_cap + 1);
    for (int v = 0; v < n; ++v) f.img[0].push_back(FormalSimplex{0, pick[v], {0}});
    out.push_back(f);
    int i = 0;
    while (i < n && ++pick[i] == m) pick[i++] = 0;
    if (i == n) break;
  }
  return out;
}

}  // namespace

TEST_CASE("free diagram spaces") {
  SUBCASE("F_0(point) over I is one point per level") {
    FreeDiag U = free_F(CatId::I, 3, 2, obj_I(0), sset_point(2));
    validate_diagspace(U.space);
    for (auto& o : U.space.objects()) {
      CHECK(U.space.level(o).count(0) == 1);
      CHECK(U.space.level(o).count(1) == 0);
    }
  }
  SUBCASE("F_(0,0)(point) over J is empty at unequal-jump levels") {
    FreeDiag U = free_F(CatId::J, 2, 1, obj_J(0, 0), sset_point(1));
    validate_diagspace(U.space);
    CHECK(U.space.level(obj_J(1, 2)).count(0) == 0);
    CHECK(U.space.level(obj_J(1, 1)).count(0) == 1);  // one bijection of {1}
    CHECK(U.space.level(obj_J(2, 2)).count(0) == 2);
  }
  SUBCASE("F_1(K) at level 1 is K itself") {
    FinSSet K = sset_circle(2);
    FreeDiag F = free_F(CatId::I, 2, 2, obj_I(1), K);
    validate_diagspace(F.space);
    CHECK(F.space.level(obj_I(1)).count(0) == K.count(0));
    CHECK(F.space.level(obj_I(1)).count(1) == K.count(1));
    CHECK(F.space.level(obj_I(2)).count(1) == 2 * K.count(1));
  }
}

TEST_CASE("semi-free diagram spaces") {
  Obj two = obj_I(2);
  SUBCASE("trivial action gives levelwise orbits of the free space") {
    GroupAction A;
    A.k = two;
    A.L = sset_discrete(2, 1);
    for (auto& g : automorphisms(two))
      if (!g.is_identity()) A.act[g] = map_identity(A.L);
    SemifreeDiag G = semifree_G(CatId::I, 4, 1, A);
    validate_diagspace(G.space);
    for (int n = 0; n <= 4; ++n)
      CHECK(G.space.level(obj_I(n)).count(0) == inj_count(2, n) / 2 * 2);
  }
  SUBCASE("G_2(point)(3) has 3 points") {
    GroupAction A;
    A.k = two;
    A.L = sset_point(1);
    for (auto& g : automorphisms(two))
      if (!g.is_identity()) A.act[g] = map_identity(A.L);
    SemifreeDiag G = semifree_G(CatId::I, 3, 1, A);
    CHECK(G.space.level(obj_I(3)).count(0) == 3);
    CHECK(G.space.level(obj_I(2)).count(0) == 1);
  }
  SUBCASE("G_2 of the free transitive action recovers I(2,-)") {
    GroupAction A;
    A.k = two;
    A.L = sset_discrete(2, 1);
    SimplicialMap swap;
    swap.img.resize(2);
    swap.img[0] = {FormalSimplex{0, 1, {0}}, FormalSimplex{0, 0, {0}}};
    for (auto& g : automorphisms(two))
      if (!g.is_identity()) A.act[g] = swap;
    SemifreeDiag G = semifree_G(CatId::I, 4, 1, A);
    validate_diagspace(G.space);
    for (int n = 0; n <= 4; ++n)
      CHECK(G.space.level(obj_I(n)).count(0) == inj_count(2, n));
  }
  SUBCASE("a non-action is rejected") {
    GroupAction A;
    A.k = two;
    A.L = sset_discrete(3, 1);
    SimplicialMap bad;  // not an involution: 0 -> 1 -> 2 -> 0
    bad.img.resize(2);
    bad.img[0] = {FormalSimplex{0, 1, {0}}, FormalSimplex{0, 2, {0}},
                  FormalSimplex{0, 0, {0}}};
    for (auto& g : automorphisms(two))
      if (!g.is_identity()) A.act[g] = bad;
    CHECK_THROWS_AS(semifree_G(CatId::I, 2, 1, A), std::logic_error);
  }
}

TEST_CASE("day convolution levels") {
  SUBCASE("(F_1(*) box *)(2) has two points") {
    FreeDiag F = free_F(CatId::I, 2, 1, obj_I(1), sset_point(1));
    DiagSpace pt = constant_point_space(CatId::I, 2, 1);
    DayConv D = day_convolve(F.space, pt);
    validate_diagspace(D.space);
    CHECK(day_convolution_level(D, obj_I(2)).count(0) == 2);
    CHECK(day_convolution_level(D, obj_I(1)).count(0) == 1);
    CHECK(day_convolution_level(D, obj_I(0)).count(0) == 0);
  }
  SUBCASE("unit law over I") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 3; ++trial) {
      DiagSpace X = random_discrete(CatId::I, 3, 1, rng);
      IsoReport r = check_day_unit(X);
      CAPTURE(r.witnesses);
      CHECK(r.ok());
    }
  }
  SUBCASE("unit law over J") {
    std::mt19937 rng(5);
    DiagSpace X = random_discrete(CatId::J, 1, 1, rng);
    IsoReport r = check_day_unit(X);
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
  SUBCASE("symmetry over I and J") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 3; ++trial) {
      DiagSpace X = random_discrete(CatId::I, 3, 1, rng);
      DiagSpace Y = random_discrete(CatId::I, 3, 1, rng);
      IsoReport r = check_day_symmetry(X, Y);
      CAPTURE(r.witnesses);
      CHECK(r.ok());
    }
    DiagSpace XJ = random_discrete(CatId::J, 1, 1, rng);
    DiagSpace YJ = random_discrete(CatId::J, 1, 1, rng);
    IsoReport rj = check_day_symmetry(XJ, YJ);
    CAPTURE(rj.witnesses);
    CHECK(rj.ok());
  }
  SUBCASE("associativity over I") {
    std::mt19937 rng(11);
    FreeDiag F = free_F(CatId::I, 3, 1, obj_I(1), sset_point(1));
    DiagSpace Y = random_discrete(CatId::I, 3, 1, rng);
    FreeDiag G = free_F(CatId::I, 3, 1, obj_I(1), sset_discrete(2, 1));
    IsoReport r = check_day_associativity(F.space, Y, G.space);
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
  SUBCASE("associativity over J") {
    std::mt19937 rng(13);
    FreeDiag F = free_F(CatId::J, 1, 1, obj_J(0, 0), sset_discrete(2, 1));
    DiagSpace Y = random_discrete(CatId::J, 1, 1, rng);
    FreeDiag G = free_F(CatId::J, 1, 1, obj_J(1, 1), sset_point(1));
    IsoReport r = check_day_associativity(F.space, Y, G.space);
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
}

TEST_CASE("Kan-shift description of a free box product") {
  SUBCASE("shifting by the unit changes nothing") {
    std::mt19937 rng(17);
    DiagSpace X = random_discrete(CatId::I, 3, 1, rng);
    KanShift S = kan_extension_shift(obj_I(0), X);
    for (auto& l : X.objects()) {
      // the comma object (l, id) projects isomorphically
      const auto& cc = S.commas.at(l);
      int idx = -1;
      for (size_t i = 0; i < cc.objects.size(); ++i)
        if (cc.objects[i].alpha.is_identity()) idx = (int)i;
      REQUIRE(idx >= 0);
      CHECK(is_isomorphism(S.colims.at(l).projections[idx], X.level(l),
                           S.space.level(l)));
    }
  }
  SUBCASE("shift of the constant point by 1 at level 2 has two points") {
    DiagSpace pt = constant_point_space(CatId::I, 2, 1);
    KanShift S = kan_extension_shift(obj_I(1), pt);
    CHECK(S.space.level(obj_I(2)).count(0) == 2);
  }
  SUBCASE("oracle equality with the convolution on random diagrams") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 5; ++trial) {
      DiagSpace X = random_discrete(CatId::I, 3, 1, rng);
      IsoReport r = check_kan_oracle(obj_I(1 + (int)(rng() % 2)), X);
      CAPTURE(r.witnesses);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("free box free") {
  SUBCASE("unit against unit") {
    IsoReport r = check_free_product_iso(CatId::I, 3, 1, obj_I(0),
                                         sset_point(1), obj_I(0), sset_point(1));
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
  SUBCASE("F_1(*) box F_1(*) over I at levels <= 4") {
    IsoReport r = check_free_product_iso(CatId::I, 4, 1, obj_I(1),
                                         sset_point(1), obj_I(1), sset_point(1));
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
  SUBCASE("nondiscrete fibers and J") {
    IsoReport r = check_free_product_iso(CatId::I, 3, 2, obj_I(1),
                                         sset_circle(2), obj_I(0),
                                         sset_discrete(2, 2));
    CAPTURE(r.witnesses);
    CHECK(r.ok());
    IsoReport rj = check_free_product_iso(CatId::J, 1, 1, obj_J(0, 0),
                                          sset_discrete(2, 1), obj_J(1, 1),
                                          sset_point(1));
    CAPTURE(rj.witnesses);
    CHECK(rj.ok());
  }
}

TEST_CASE("semi-free box semi-free") {
  GroupAction A;
  A.k = obj_I(1);
  A.L = sset_point(1);
  SUBCASE("two free generators in degree 1") {
    IsoReport r = check_semifree_product_iso(CatId::I, 3, 1, A, A);
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
  SUBCASE("a genuine orbit factor in degree 2") {
    GroupAction B;
    B.k = obj_I(2);
    B.L = sset_discrete(2, 1);
    SimplicialMap swap;
    swap.img.resize(2);
    swap.img[0] = {FormalSimplex{0, 1, {0}}, FormalSimplex{0, 0, {0}}};
    for (auto& g : automorphisms(B.k))
      if (!g.is_identity()) B.act[g] = swap;
    IsoReport r = check_semifree_product_iso(CatId::I, 3, 1, A, B);
    CAPTURE(r.witnesses);
    CHECK(r.ok());
  }
}

TEST_CASE("free functor adjunction on a finite sample") {
  FinSSet K = sset_discrete(2, 1);
  FreeDiag F = free_F(CatId::I, 2, 1, obj_I(1), K);
  std::mt19937 rng(23);
  DiagSpace Z = random_discrete(CatId::I, 2, 1, rng);

  // induced maps from all simplicial maps K -> Z(1)
  std::vector<DiagMap> induced;
  for (auto& phi : all_discrete_maps(K, Z.level(obj_I(1)))) {
    DiagMap f = free_induced_map(F, K, Z, phi);
    validate_diagmap(f, F.space, Z);
    induced.push_back(f);
  }
  for (size_t i = 0; i < induced.size(); ++i)
    for (size_t j = i + 1; j < induced.size(); ++j)
      CHECK(induced[i].at != induced[j].at);

  // every natural transformation F -> Z arises this way
  std::vector<Obj> objs = F.space.objects();
  std::vector<std::vector<SimplicialMap>> level_maps;
  for (auto& o : objs)
    level_maps.push_back(all_discrete_maps(F.space.level(o), Z.level(o)));
  std::vector<size_t> pick(objs.size(), 0);
  int natural_total = 0;
  while (true) {
    DiagMap cand;
    for (size_t i = 0; i < objs.size(); ++i) cand.at[objs[i]] = level_maps[i][pick[i]];
    bool natural = true;
    try {
      validate_diagmap(cand, F.space, Z);
    } catch (const std::logic_error&) {
      natural = false;
    }
    if (natural) {
      ++natural_total;
      bool found = false;
      for (auto& f : induced)
        if (f.at == cand.at) found = true;
      CHECK(found);
    }
    size_t i = 0;
    while (i < objs.size() && ++pick[i] == level_maps[i].size()) pick[i++] = 0;
    if (i == objs.size()) break;
  }
  CHECK(natural_total == (int)induced.size());
}

TEST_CASE("powers of a pointed set form a commutative monoid") {
  SUBCASE("point gives one-point levels") {
    XBullet B = x_bullet(sset_point(1), 0, 3, 1);
    validate_diagspace(B.monoid.carrier);
    for (auto& o : B.monoid.carrier.objects())
      CHECK(B.monoid.carrier.level(o).count(0) == 1);
    MonoidReport r = check_monoid(B.monoid);
    CAPTURE(r.witnesses);
    CHECK(r.ok(true));
  }
  SUBCASE("two-point levels double per degree and all laws hold") {
    XBullet B = x_bullet(sset_discrete(2, 1), 0, 4, 1);
    validate_diagspace(B.monoid.carrier);
    for (int n = 0; n <= 4; ++n)
      CHECK(B.monoid.carrier.level(obj_I(n)).count(0) == (1 << n));
    MonoidReport r = check_monoid(B.monoid);
    CAPTURE(r.witnesses);
    CHECK(r.ok(true));
  }
  SUBCASE("a twisted multiplication is caught with a witness") {
    XBullet B = x_bullet(sset_discrete(2, 1), 0, 2, 1);
    // overwrite mult at (1,1) with (x,y) |-> (x,x): breaks the symmetry square
    const auto key = std::make_pair(obj_I(1), obj_I(1));
    const auto& P = B.monoid.prods.at(key);
    FinSSet X1 = B.monoid.carrier.level(obj_I(1));
    std::vector<const FinSSet*> targets{&X1, &X1};
    std::vector<const SimplicialMap*> comps{&P.proj1, &P.proj1};
    B.monoid.mult[key] = tuple_into_product(P.S, targets, B.powers.at(2), comps);
    MonoidReport r = check_monoid(B.monoid);
    CHECK(!r.commutative_ok);
    CHECK(!r.witnesses.empty());
  }
}
