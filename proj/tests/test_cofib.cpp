#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/cofib.hpp>
#include <dspace/dayconv.hpp>

#include <random>

using namespace dspace;

namespace {

DiagSpace random_discrete(CatId cat, int max_degree, int dim_cap,
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

// the collapse fixture: two points at level 1 crushed to one at level 2
DiagSpace collapse_space() {
  return discrete_diagspace(
      CatId::I, 2, 1,
      [](const Obj& o) { return o.n1 == 1 ? 2 : 1; },
      [](const Mor&, int) { return 0; });
}

}  // namespace

TEST_CASE("latching spaces") {
  XBullet B = x_bullet(sset_discrete(2, 1), 0, 3, 1);
  SUBCASE("no non-isomorphisms into degree zero") {
    LatchingData L0 = latching_space(B.monoid.carrier, obj_I(0));
    CHECK(L0.L().count(0) == 0);
  }
  SUBCASE("latching space of squares of a two-point set at level 2") {
    LatchingData L2 = latching_space(B.monoid.carrier, obj_I(2));
    CHECK(L2.L().count(0) == 3);  // pairs with a basepoint coordinate
    validate_map(L2.to_level, L2.L(), B.monoid.carrier.level(obj_I(2)));
    CHECK(is_injective(L2.to_level, L2.L(), B.monoid.carrier.level(obj_I(2))));
  }
  SUBCASE("the automorphism action commutes with the latching map") {
    for (int k = 2; k <= 3; ++k) {
      LatchingData L = latching_space(B.monoid.carrier, obj_I(k));
      for (auto& g : automorphisms(obj_I(k))) {
        if (g.is_identity()) continue;
        SimplicialMap lhs = map_compose(
            B.monoid.carrier.act(g), B.monoid.carrier.level(obj_I(k)),
            L.to_level);
        SimplicialMap rhs = map_compose(
            L.to_level, B.monoid.carrier.level(obj_I(k)), L.aut.at(g));
        CHECK(lhs == rhs);
      }
    }
  }
  SUBCASE("latching space of the J-unit at (1,1) is what the colimit says") {
    FreeDiag U = free_F(CatId::J, 2, 1, obj_J(0, 0), sset_point(1));
    LatchingData L = latching_space(U.space, obj_J(1, 1));
    // one non-isomorphism (0,0) -> (1,1) carrying the single unit point
    CHECK(L.L().count(0) == 1);
  }
}

TEST_CASE("cofibration flavors") {
  SUBCASE("generating free cells are projective cofibrations") {
    for (int k = 0; k <= 2; ++k) {
      FreeDiag F = free_F(CatId::I, 3, 1, obj_I(k), sset_point(1));
      DiagSpace E = empty_diagspace(CatId::I, 3, 1);
      CofibReport r =
          cofibration_check(E, F.space, diagmap_from_empty(F.space),
                            CofibFlavor::Projective);
      CAPTURE(r.witnesses);
      CHECK(r.pass);
    }
  }
  SUBCASE("powers of a pointed set are flat but not projective-cofibrant") {
    XBullet B = x_bullet(sset_discrete(2, 1), 0, 3, 1);
    DiagSpace E = empty_diagspace(CatId::I, 3, 1);
    DiagMap from_e = diagmap_from_empty(B.monoid.carrier);
    CofibReport flat =
        cofibration_check(E, B.monoid.carrier, from_e, CofibFlavor::Flat);
    CAPTURE(flat.witnesses);
    CHECK(flat.pass);
    CofibReport proj =
        cofibration_check(E, B.monoid.carrier, from_e, CofibFlavor::Projective);
    CHECK(!proj.pass);
    bool saw_level2 = false;
    for (auto& w : proj.witnesses)
      if (w.find("2") != std::string::npos) saw_level2 = true;
    CHECK(saw_level2);
  }
  SUBCASE("the J-unit: flat from empty, positive flavor pivots on degree 0") {
    FreeDiag U = free_F(CatId::J, 2, 1, obj_J(0, 0), sset_point(1));
    DiagSpace E = empty_diagspace(CatId::J, 2, 1);
    DiagMap from_e = diagmap_from_empty(U.space);
    CofibReport flat = cofibration_check(E, U.space, from_e, CofibFlavor::Flat);
    CAPTURE(flat.witnesses);
    CHECK(flat.pass);
    CofibReport pos =
        cofibration_check(E, U.space, from_e, CofibFlavor::PositiveFlat);
    CHECK(!pos.pass);  // the unit has a point in degree 0
    REQUIRE(!pos.witnesses.empty());
    CHECK(pos.witnesses[0].find("(0,0)") != std::string::npos);
    // positive-flat does hold for a positively generated free cell
    FreeDiag F = free_F(CatId::J, 2, 1, obj_J(1, 1), sset_point(1));
    DiagMap fe = diagmap_from_empty(F.space);
    CofibReport posf = cofibration_check(empty_diagspace(CatId::J, 2, 1),
                                         F.space, fe, CofibFlavor::PositiveFlat);
    CAPTURE(posf.witnesses);
    CHECK(posf.pass);
  }
}

TEST_CASE("explicit flatness criterion over I") {
  SUBCASE("powers of pointed sets are flat") {
    for (int sz = 2; sz <= 3; ++sz) {
      XBullet B = x_bullet(sset_discrete(sz, 1), 0, 3, 1);
      FlatnessReport r = flatness_check_I(B.monoid.carrier);
      CAPTURE(r.witnesses);
      CHECK(r.flat());
    }
  }
  SUBCASE("the constant point is flat") {
    FlatnessReport r = flatness_check_I(constant_point_space(CatId::I, 3, 1));
    CHECK(r.flat());
  }
  SUBCASE("a collapsing action is rejected with a witness") {
    FlatnessReport r = flatness_check_I(collapse_space());
    CHECK(!r.flat());
    CHECK(!r.injective_actions);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses[0].find("1->2") != std::string::npos);
  }
  SUBCASE("agreement with the latching-flavor checker on discrete fixtures") {
    std::vector<DiagSpace> fixtures;
    fixtures.push_back(x_bullet(sset_discrete(2, 1), 0, 2, 1).monoid.carrier);
    fixtures.push_back(constant_point_space(CatId::I, 2, 1));
    fixtures.push_back(collapse_space());
    std::mt19937 rng(47);
    for (int t = 0; t < 3; ++t)
      fixtures.push_back(random_discrete(CatId::I, 2, 1, rng));
    for (auto& X : fixtures) {
      DiagSpace E = empty_diagspace(CatId::I, X.max_degree, X.dim_cap);
      CofibReport latch =
          cofibration_check(E, X, diagmap_from_empty(X), CofibFlavor::Flat);
      FlatnessReport expl = flatness_check_I(X);
      CHECK(latch.pass == expl.flat());
    }
  }
}

TEST_CASE("h-cofibrations and cobase change") {
  XBullet B = x_bullet(sset_discrete(2, 1), 0, 2, 1);
  DiagSpace E = empty_diagspace(CatId::I, 2, 1);
  SUBCASE("flat inclusions are levelwise injective") {
    CHECK(h_cofibration_check(diagmap_from_empty(B.monoid.carrier), E,
                              B.monoid.carrier));
    FreeDiag F1 = free_F(CatId::I, 2, 1, obj_I(1), sset_point(1));
    DiagSpace U = diag_disjoint_union({&F1.space, &B.monoid.carrier});
    DiagMap inc;  // first summand sits at offset zero levelwise
    for (auto& o : F1.space.objects()) {
      SimplicialMap m;
      m.img.resize(2);
      for (int d = 0; d <= 1; ++d)
        for (int id = 0; id < F1.space.level(o).count(d); ++id)
          m.img[d].push_back(FormalSimplex{d, id, mono_identity(d)});
      inc.at[o] = m;
    }
    validate_diagmap(inc, F1.space, U);
    CHECK(h_cofibration_check(inc, F1.space, U));
    CofibReport r = cofibration_check(F1.space, U, inc, CofibFlavor::Flat);
    CAPTURE(r.witnesses);
    CHECK(r.pass);
  }
  SUBCASE("a levelwise collapse is not an h-cofibration") {
    DiagSpace X = collapse_space();
    DiagSpace pt = constant_point_space(CatId::I, 2, 1);
    DiagMap crush;
    for (auto& o : X.objects()) crush.at[o] = constant_map(X.level(o), 0);
    validate_diagmap(crush, X, pt);
    CHECK(!h_cofibration_check(crush, X, pt));
  }
  SUBCASE("pushouts preserve levelwise injectivity and flatness") {
    // W = F_2(*) -> X = F_2(*) u F_1(*) (inclusion), W -> Z = squares diagram
    FreeDiag W = free_F(CatId::I, 2, 1, obj_I(2), sset_point(1));
    FreeDiag F1 = free_F(CatId::I, 2, 1, obj_I(1), sset_point(1));
    DiagSpace Xs = diag_disjoint_union({&W.space, &F1.space});
    DiagMap inc;
    for (auto& o : W.space.objects()) {
      SimplicialMap m;
      m.img.resize(2);
      for (int d = 0; d <= 1; ++d)
        for (int id = 0; id < W.space.level(o).count(d); ++id)
          m.img[d].push_back(FormalSimplex{d, id, mono_identity(d)});
      inc.at[o] = m;
    }
    validate_diagmap(inc, W.space, Xs);
    // adjoint map W -> Z picking a vertex of Z(2)
    SimplicialMap phi;
    phi.img.resize(2);
    phi.img[0].push_back(FormalSimplex{0, 1, {0}});
    DiagMap g = free_induced_map(W, sset_point(1), B.monoid.carrier, phi);
    validate_diagmap(g, W.space, B.monoid.carrier);
    DiagPushout P = diag_pushout(W.space, Xs, B.monoid.carrier, inc, g);
    validate_diagspace(P.space);
    CHECK(h_cofibration_check(P.from_second, B.monoid.carrier, P.space));
    CofibReport r = cofibration_check(B.monoid.carrier, P.space, P.from_second,
                                      CofibFlavor::Flat);
    CAPTURE(r.witnesses);
    CHECK(r.pass);
  }
}
