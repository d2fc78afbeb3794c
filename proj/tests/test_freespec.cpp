#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/cofib.hpp>
#include <dspace/dayconv.hpp>
#include <dspace/freespec.hpp>

using namespace dspace;

namespace {

// all J-morphisms between objects with both coordinates bounded by cap
std::vector<Mor> small_J_morphisms(int cap) {
  std::vector<Mor> out;
  for (auto& a : enumerate_obj(CatId::J, cap))
    for (auto& b : enumerate_obj(CatId::J, cap))
      for (auto& m : enumerate_mor(a, b)) out.push_back(m);
  return out;
}

}  // namespace

TEST_CASE("induced maps of J-morphisms") {
  SUBCASE("the identity acts as the identity") {
    FreeSpecMap F = induced_map(identity(obj_J(1, 1)), 3);
    CHECK(F.source == FreeSpec{1, 1});
    CHECK(F.target == FreeSpec{1, 1});
    for (auto& [p, summands] : F.eval)
      for (auto& s : summands) {
        CHECK(s.src == s.dst);
        for (auto& [x, y] : s.bij) CHECK(x == y);
      }
  }
  SUBCASE("the unique morphism out of the zero object, evaluated in degree 1") {
    Mor f = mor_J(Inj{0, 1, {}}, Inj{0, 1, {}}, {1});
    FreeSpecMap F = induced_map(f, 1);
    CHECK(F.source == FreeSpec{1, 1});
    CHECK(F.target == FreeSpec{0, 0});
    REQUIRE(F.eval.at(1).size() == 1);
    const SummandMap& s = F.eval.at(1)[0];
    CHECK(s.src == inj_identity(1));
    CHECK(s.dst == Inj{0, 1, {}});
    // one sphere coordinate travels to the one free level coordinate
    REQUIRE(s.bij.size() == 1);
    CHECK(s.bij.at({0, 1}) == IndexElem{1, 1});
  }
  SUBCASE("a one-element extension hits every summand in degree 2") {
    Mor f = mor_J(Inj{1, 2, {1}}, Inj{1, 2, {1}}, {2});
    FreeSpecMap F = induced_map(f, 2);
    CHECK(F.source == FreeSpec{2, 2});
    CHECK(F.target == FreeSpec{1, 1});
    REQUIRE(F.eval.at(2).size() == 2);  // summands of the source in degree 2
    std::set<Inj> images;
    for (auto& s : F.eval.at(2)) images.insert(s.dst);
    CHECK(images.size() == 2);  // both summands of the target are hit
    // the summand at the identity keeps sphere 1 and sends sphere 2 outside
    const SummandMap& s = F.at(2, inj_identity(2));
    CHECK(s.bij.at({0, 1}) == IndexElem{0, 1});
    CHECK(s.bij.at({0, 2}) == IndexElem{1, 2});
  }
  SUBCASE("the structural validator rejects a broken index bijection") {
    FreeSpecMap F = induced_map(mor_J(Inj{1, 2, {1}}, Inj{1, 2, {1}}, {2}), 2);
    CHECK_NOTHROW(validate_freespec_map(F));
    F.eval.at(2)[0].bij[{0, 1}] = {1, 99};
    CHECK_THROWS_AS(validate_freespec_map(F), std::logic_error);
  }
}

TEST_CASE("functoriality of the induced maps") {
  SUBCASE("identity factors compose trivially") {
    Mor f = mor_J(Inj{1, 2, {2}}, Inj{1, 2, {1}}, {2});
    CHECK(compose_and_check(identity(obj_J(2, 2)), f, 3).ok);
    CHECK(compose_and_check(f, identity(obj_J(1, 1)), 3).ok);
  }
  SUBCASE("all composable pairs with coordinates at most 2") {
    auto mors = small_J_morphisms(2);
    int pairs = 0;
    for (auto& f : mors)
      for (auto& g : mors) {
        if (f.dst() != g.src()) continue;
        FreespecReport r = compose_and_check(g, f, 4);
        CAPTURE(r.witnesses);
        CHECK(r.ok);
        ++pairs;
      }
    CHECK(pairs > 50);
  }
  SUBCASE("two morphisms differing only in the shuffle are distinguished") {
    Mor h1 = mor_J(Inj{1, 3, {1}}, Inj{1, 3, {1}}, {2, 3});
    Mor h2 = mor_J(Inj{1, 3, {1}}, Inj{1, 3, {1}}, {3, 2});
    std::vector<std::string> wit;
    CHECK(!freespec_equal(induced_map(h1, 3), induced_map(h2, 3), &wit));
    REQUIRE(!wit.empty());
    bool saw = false;
    for (auto& w : wit)
      if (w.find("index bijections differ") != std::string::npos) saw = true;
    CHECK(saw);
  }
}

TEST_CASE("monoidal structure of the free functor") {
  SUBCASE("smashing with the free unit changes nothing") {
    for (int p = 0; p <= 2; ++p) {
      MonoidalIso iso = monoidal_iso(FreeSpec{0, 0}, FreeSpec{1, 1}, p);
      MonoidalReport r = check_monoidal_iso(iso);
      CAPTURE(r.witnesses);
      CHECK(r.ok());
      CHECK(r.classes == (int)enumerate_inj(1, p).size());
    }
  }
  SUBCASE("two one-sphere factors in degree 2") {
    MonoidalIso iso = monoidal_iso(FreeSpec{1, 1}, FreeSpec{1, 1}, 2);
    MonoidalReport r = check_monoidal_iso(iso);
    CAPTURE(r.witnesses);
    CHECK(r.well_defined);
    CHECK(r.bijective);
    CHECK(r.classes == 2);  // one class per summand of the product spectrum
  }
  SUBCASE("naturality in both variables") {
    Mor f = mor_J(Inj{0, 1, {}}, Inj{0, 1, {}}, {1});
    Mor g = mor_J(Inj{1, 2, {2}}, Inj{1, 2, {1}}, {2});
    FreespecReport r1 = check_monoidal_naturality(
        identity(obj_J(1, 1)), identity(obj_J(1, 1)), 2);
    CAPTURE(r1.witnesses);
    CHECK(r1.ok);
    FreespecReport r2 = check_monoidal_naturality(f, g, 3);
    CAPTURE(r2.witnesses);
    CHECK(r2.ok);
    FreespecReport r3 = check_monoidal_naturality(g, f, 3);
    CAPTURE(r3.witnesses);
    CHECK(r3.ok);
  }
  SUBCASE("compatibility with the symmetry") {
    FreespecReport r1 = check_monoidal_symmetry(FreeSpec{1, 1}, FreeSpec{1, 1}, 3);
    CAPTURE(r1.witnesses);
    CHECK(r1.ok);
    FreespecReport r2 = check_monoidal_symmetry(FreeSpec{1, 0}, FreeSpec{0, 1}, 3);
    CAPTURE(r2.witnesses);
    CHECK(r2.ok);
    FreespecReport r3 = check_monoidal_symmetry(FreeSpec{0, 0}, FreeSpec{2, 2}, 3);
    CAPTURE(r3.witnesses);
    CHECK(r3.ok);
  }
}

TEST_CASE("restriction along the diagonal") {
  SUBCASE("identity goes to identity") {
    FreeSpecMap F = restrict_to_I(identity(obj_I(2)), 3);
    for (auto& [p, summands] : F.eval)
      for (auto& s : summands) {
        CHECK(s.src == s.dst);
        for (auto& [x, y] : s.bij) CHECK(x == y);
      }
  }
  SUBCASE("a hand-built oracle for the inclusion of 1 into 2") {
    FreeSpecMap lhs = restrict_to_I(mor_I(Inj{1, 2, {1}}), 3);
    FreeSpecMap rhs = induced_map(mor_J(Inj{1, 2, {1}}, Inj{1, 2, {1}}, {2}), 3);
    std::vector<std::string> wit;
    CHECK(freespec_equal(lhs, rhs, &wit));
    CAPTURE(wit);
  }
  SUBCASE("functoriality over injections with degrees at most 3") {
    for (auto& a : enumerate_obj(CatId::I, 3))
      for (auto& b : enumerate_obj(CatId::I, 3))
        for (auto& f : enumerate_mor(a, b))
          for (auto& c : enumerate_obj(CatId::I, 3))
            for (auto& g : enumerate_mor(b, c)) {
              FreeSpecMap lhs = restrict_to_I(compose(g, f), 3);
              FreeSpecMap rhs = compose_freespec(restrict_to_I(g, 3),
                                                 restrict_to_I(f, 3));
              std::vector<std::string> wit;
              CHECK(freespec_equal(lhs, rhs, &wit));
              CAPTURE(wit);
            }
  }
}

TEST_CASE("wedge-summand census of the spectrum of a discrete space") {
  SUBCASE("the free unit contributes one orbit on the diagonal") {
    FreeDiag U = free_F(CatId::J, 2, 1, obj_J(0, 0), sset_point(1));
    CHECK(sj_level_census(U.space, 0, 2) == std::vector<int>{1, 0, 0});
    CHECK(sj_level_census(U.space, 1, 2) == std::vector<int>{0, 1, 0});
    // the level at (2,2) is a full permutation orbit, hence a single summand
    CHECK(sj_level_census(U.space, 2, 2) == std::vector<int>{0, 0, 1});
  }
  SUBCASE("the empty space contributes nothing") {
    DiagSpace E = empty_diagspace(CatId::J, 2, 1);
    CHECK(sj_level_census(E, 0, 2) == std::vector<int>{0, 0, 0});
    CHECK(sj_level_census(E, 2, 2) == std::vector<int>{0, 0, 0});
  }
  SUBCASE("a free space on a positive generator") {
    FreeDiag F = free_F(CatId::J, 2, 1, obj_J(1, 1), sset_point(1));
    CHECK(sj_level_census(F.space, 1, 2) == std::vector<int>{0, 1, 0});
    // four morphisms (1,1) -> (2,2) fall into two permutation orbits
    CHECK(sj_level_census(F.space, 2, 2) == std::vector<int>{0, 0, 2});
  }
}
