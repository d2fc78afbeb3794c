#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/fincat.hpp>

#include <set>

using namespace dspace;

namespace {

// Oracle: compose two injections by evaluating them as plain functions.
Inj oracle_compose(const Inj& g, const Inj& f) {
  Inj h{f.src, g.dst, {}};
  for (int i = 1; i <= f.src; ++i) h.img.push_back(g.img[f.img[i - 1] - 1]);
  return h;
}

// Oracle: hom-set size of J via the counting formula.
long oracle_inj_count(int m, int n) {
  if (m > n) return 0;
  long r = 1;
  for (int i = 0; i < m; ++i) r *= (n - i);
  return r;
}
long oracle_hom_J(int m1, int m2, int n1, int n2) {
  if (n1 - m1 != n2 - m2 || n1 < m1) return 0;
  long fact = 1;
  for (int i = 2; i <= n1 - m1; ++i) fact *= i;
  return oracle_inj_count(m1, n1) * oracle_inj_count(m2, n2) * fact;
}

bool is_iso(const Mor& f) {
  for (auto& g : enumerate_mor(f.dst(), f.src()))
    if (compose(g, f) == identity(f.src()) && compose(f, g) == identity(f.dst()))
      return true;
  return false;
}

}  // namespace

TEST_CASE("injection composition") {
  CHECK(compose(inj_identity(2), inj_identity(2)) == inj_identity(2));
  Inj g{1, 2, {2}};
  CHECK(compose(g, inj_identity(1)) == g);
  Inj g2{2, 3, {3, 1}};
  Inj f2{1, 2, {2}};
  Inj expect{1, 3, {1}};
  CHECK(compose(g2, f2) == expect);
  CHECK(compose(g2, f2) == oracle_compose(g2, f2));
  CHECK_THROWS(compose(f2, g2));  // 3 != 1
}

TEST_CASE("complement") {
  CHECK(complement(inj_identity(3)).empty());
  CHECK(complement(Inj{1, 3, {2}}) == std::vector<int>{1, 3});
  CHECK(complement(Inj{2, 3, {1, 2}}) == std::vector<int>{3});
}

TEST_CASE("J composition unit laws, degree <= 2") {
  auto objs = enumerate_obj(CatId::J, 2);
  for (auto& a : objs)
    for (auto& b : objs)
      for (auto& f : enumerate_mor(a, b)) {
        CHECK(compose(identity(b), f) == f);
        CHECK(compose(f, identity(a)) == f);
      }
}

TEST_CASE("J composition is total on the complement") {
  auto fs = enumerate_mor(obj_J(0, 0), obj_J(1, 1));
  REQUIRE(fs.size() == 1);
  for (auto& g : enumerate_mor(obj_J(1, 1), obj_J(2, 2))) {
    Mor h = compose(g, fs[0]);
    h.validate();
    std::set<int> tau(h.sigma.begin(), h.sigma.end());
    CHECK(tau == std::set<int>{1, 2});
  }
}

TEST_CASE("J associativity, coordinates <= 2") {
  auto objs = enumerate_obj(CatId::J, 2);
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
              for (auto& f : fs)
                CHECK(compose(compose(h, g), f) == compose(h, compose(g, f)));
      }
    }
}

TEST_CASE("morphism enumeration counts") {
  CHECK(enumerate_mor(obj_I(1), obj_I(2)).size() == 2);
  CHECK(enumerate_mor(obj_I(3), obj_I(2)).empty());
  CHECK(enumerate_mor(obj_J(1, 1), obj_J(2, 2)).size() == 4);
  for (int m1 = 0; m1 <= 2; ++m1)
    for (int m2 = 0; m2 <= 2; ++m2)
      for (int n1 = 0; n1 <= 3; ++n1)
        for (int n2 = 0; n2 <= 3; ++n2)
          CHECK((long)enumerate_mor(obj_J(m1, m2), obj_J(n1, n2)).size() ==
                oracle_hom_J(m1, m2, n1, n2));
}

TEST_CASE("concatenation and shuffle") {
  CHECK(concat(obj_I(2), obj_I(3)) == obj_I(5));
  CHECK(shuffle(2, 3).img == std::vector<int>{4, 5, 1, 2, 3});
  CHECK(concat(obj_J(1, 0), obj_J(0, 1)) == obj_J(1, 1));
}

TEST_CASE("permutativity at degree <= 2") {
  for (CatId cat : {CatId::I, CatId::J}) {
    auto objs = enumerate_obj(cat, 2);
    // strict associativity and units on objects
    Obj u = monoidal_unit(cat);
    for (auto& a : objs) {
      CHECK(concat(u, a) == a);
      CHECK(concat(a, u) == a);
      for (auto& b : objs)
        for (auto& c : objs)
          CHECK(concat(concat(a, b), c) == concat(a, concat(b, c)));
    }
    for (auto& a : objs)
      for (auto& b : objs) {
        Mor chi = symmetry(a, b);
        CHECK(compose(symmetry(b, a), chi) == identity(concat(a, b)));
        // hexagon: chi_{a, b#c} = (1_b # chi_{a,c}) . (chi_{a,b} # 1_c)
        for (auto& c : objs)
          CHECK(symmetry(a, concat(b, c)) ==
                compose(concat(identity(b), symmetry(a, c)),
                        concat(symmetry(a, b), identity(c))));
        // naturality over all morphism pairs out of a, b with small targets
        for (auto& a2 : objs)
          for (auto& b2 : objs)
            for (auto& f : enumerate_mor(a, a2))
              for (auto& g : enumerate_mor(b, b2)) {
                CHECK(compose(symmetry(a2, b2), concat(f, g)) ==
                      compose(concat(g, f), symmetry(a, b)));
                CHECK(concat(concat(f, g), identity(u)) == concat(f, g));
              }
      }
  }
}

TEST_CASE("localization representatives map to J") {
  SUBCASE("l = 0 keeps the injections") {
    SigmaInvSigmaRep r{1, 1, 0, Inj{1, 1, {1}}, Inj{1, 1, {1}}};
    Mor m = sigma_inv_sigma_to_J(r);
    CHECK(m == identity(obj_J(1, 1)));
  }
  SUBCASE("m1 = m2 = 0, l = 1 gives the unique (0,0) -> (1,1)") {
    SigmaInvSigmaRep r{0, 0, 1, inj_identity(1), inj_identity(1)};
    Mor m = sigma_inv_sigma_to_J(r);
    auto all = enumerate_mor(obj_J(0, 0), obj_J(1, 1));
    REQUIRE(all.size() == 1);
    CHECK(m == all[0]);
  }
  SUBCASE("independent of representative: common Sigma_l twist") {
    // precompose both alphas with 1_m # s for every s in Sigma_l
    for (int m1 = 0; m1 <= 1; ++m1)
      for (int l = 1; l <= 2; ++l) {
        int m2 = m1;
        for (auto& a1 : enumerate_inj(m1 + l, m1 + l))
          for (auto& a2 : enumerate_inj(m2 + l, m2 + l)) {
            SigmaInvSigmaRep r{m1, m2, l, a1, a2};
            Mor base = sigma_inv_sigma_to_J(r);
            for (auto& s : enumerate_inj(l, l)) {
              Inj twist = concat(inj_identity(m1), s);
              SigmaInvSigmaRep r2{m1, m2, l, compose(a1, twist), compose(a2, twist)};
              CHECK(sigma_inv_sigma_to_J(r2) == base);
            }
          }
      }
  }
  SUBCASE("hom-set bijection (1,1) -> (2,2)") {
    std::set<Mor> seen;
    for (auto& a1 : enumerate_inj(2, 2))
      for (auto& a2 : enumerate_inj(2, 2))
        seen.insert(sigma_inv_sigma_to_J(SigmaInvSigmaRep{1, 1, 1, a1, a2}));
    auto all = enumerate_mor(obj_J(1, 1), obj_J(2, 2));
    CHECK(seen == std::set<Mor>(all.begin(), all.end()));
  }
}

TEST_CASE("comma categories") {
  SUBCASE("I, k = l = 1: single component with terminal (0, id)") {
    auto cc = comma_category(obj_I(1), obj_I(1));
    CHECK(cc.comps.size() == 1);
    REQUIRE(cc.terminals[0].size() >= 1);
    const auto& t = cc.objects[cc.terminals[0][0]];
    CHECK(t.n == obj_I(0));
    CHECK(t.alpha.b1.is_identity());
  }
  SUBCASE("I component count = |I(k,l)|") {
    for (int k = 0; k <= 3; ++k)
      for (int l = 0; l <= 3; ++l)
        CHECK((long)comma_category(obj_I(k), obj_I(l)).comps.size() ==
              oracle_inj_count(k, l));
  }
  SUBCASE("I, k = 1, l = 2: two components, each with a terminal") {
    auto cc = comma_category(obj_I(1), obj_I(2));
    CHECK(cc.comps.size() == 2);
    for (auto& ts : cc.terminals) CHECK(!ts.empty());
  }
  SUBCASE("J component count = |I(k1,l1)| * |I(k2,l2)|, degrees <= 2") {
    for (int k1 = 0; k1 <= 2; ++k1)
      for (int k2 = 0; k2 <= 2; ++k2)
        for (int l1 = 0; l1 <= 2; ++l1)
          for (int l2 = 0; l2 <= 2; ++l2) {
            auto cc = comma_category(obj_J(k1, k2), obj_J(l1, l2));
            CHECK((long)cc.comps.size() ==
                  oracle_inj_count(k1, l1) * oracle_inj_count(k2, l2));
            // terminals are unique up to isomorphism; all of them have an
            // invertible structure morphism, so just require existence here
            for (auto& ts : cc.terminals) {
              CHECK(!ts.empty());
              for (int t : ts) CHECK(is_iso(cc.objects[t].alpha));
            }
          }
  }
  SUBCASE("terminal iff structure morphism is an isomorphism") {
    auto cc = comma_category(obj_J(1, 1), obj_J(2, 2));
    std::set<int> terminals;
    for (auto& ts : cc.terminals) terminals.insert(ts.begin(), ts.end());
    for (size_t i = 0; i < cc.objects.size(); ++i)
      CHECK(terminals.count((int)i) == (size_t)is_iso(cc.objects[i].alpha));
  }
}

TEST_CASE("well-structured checks") {
  SUBCASE("I with identity automorphisms is well-structured") {
    auto rep = check_well_structured(CatId::I, AutSelector::Discrete, 2, 2);
    CHECK(rep.degree_functor_ok);
    CHECK(rep.terminal_per_component);
    CHECK(rep.free_component_action);
    CHECK(rep.cofinality_certificate);
  }
  SUBCASE("J with positive identity automorphisms is very well-structured") {
    auto rep = check_well_structured(CatId::J, AutSelector::PositiveDiscrete, 2, 2);
    CHECK(rep.well_structured());
    CHECK(rep.very_well_structured);
  }
  SUBCASE("full automorphisms at degree 0 break the wreath freeness") {
    auto rep = check_well_structured(CatId::J, AutSelector::Full, 2, 2);
    CHECK(!rep.very_well_structured);
    CHECK(!rep.counterexamples.empty());
  }
}

TEST_CASE("diagonal functor") {
  CHECK(diagonal_functor(mor_I(inj_identity(2))) == identity(obj_J(2, 2)));
  Mor d = diagonal_functor(mor_I(Inj{1, 2, {1}}));
  CHECK(d.b1 == Inj{1, 2, {1}});
  CHECK(d.b2 == Inj{1, 2, {1}});
  CHECK(d.sigma == std::vector<int>{2});
  // functoriality over composable pairs of degree <= 3
  for (int a = 0; a <= 3; ++a)
    for (int b = a; b <= 3; ++b)
      for (int c = b; c <= 3; ++c)
        for (auto& f : enumerate_inj(a, b))
          for (auto& g : enumerate_inj(b, c))
            CHECK(diagonal_functor(mor_I(compose(g, f))) ==
                  compose(diagonal_functor(mor_I(g)), diagonal_functor(mor_I(f))));
}
