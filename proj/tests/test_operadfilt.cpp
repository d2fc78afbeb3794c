#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/operadfilt.hpp>

using namespace dspace;

namespace {

// a finite set as a diagram space over the one-object category
DiagSpace pt_set(int n) {
  return discrete_diagspace(
      CatId::Pt, 0, 0, [n](const Obj&) { return n; },
      [](const Mor&, int e) { return e; });
}

DiagMap pt_map(const DiagSpace& X, const DiagSpace& Y, std::vector<int> img) {
  return disc_map(X, Y, [img](const Obj&, int v) { return img[v]; });
}

int pt_card(const DiagSpace& X) { return X.level(obj_Pt()).count(0); }

int pt_card(const FiltSpace& F) { return F.space.level(obj_Pt()).count(0); }

}  // namespace

TEST_CASE("set operads") {
  SUBCASE("the commutativity and associativity operads satisfy the relations") {
    OperadReport c = validate_operad(commutativity_operad(4));
    CAPTURE(c.witnesses);
    CHECK(c.ok);
    OperadReport a = validate_operad(associativity_operad(4));
    CAPTURE(a.witnesses);
    CHECK(a.ok);
  }
  SUBCASE("a corrupted structure map breaks the relations") {
    SetOperad bad = associativity_operad(3);
    auto orig = bad.gam;
    bad.gam = [orig](int k, int d, const std::vector<std::pair<int, int>>& args) {
      int out = orig(k, d, args);
      int total = 0;
      for (auto& [j, c] : args) total += j;
      if (total == 2) out = 1 - out;  // swap the two permutations of arity 2
      return out;
    };
    OperadReport r = validate_operad(bad);
    CHECK(!r.ok);
    CHECK(!r.witnesses.empty());
  }
  SUBCASE("block permutations compose blocks the way the notation promises") {
    // rho = (1 2) on blocks of sizes 2,1: block one moves past block two
    Inj rho{2, 2, {2, 1}};
    CHECK(perm_block(rho, {2, 1}) == Inj{3, 3, {2, 3, 1}});
    CHECK(perm_block(rho, {1, 1}) == rho);
  }
}

TEST_CASE("monoidal powers as brute-force colimits") {
  SUBCASE("cartesian powers of finite sets") {
    DiagSpace X = pt_set(3);
    FiltSpace T2 = tensor_power(X, 2);
    CHECK(pt_card(T2) == 9);
    FiltSpace T0 = tensor_power(X, 0);
    CHECK(pt_card(T0) == 1);
    // the factor-permutation action: a left action with 6 orbits on pairs
    Inj swap{2, 2, {2, 1}};
    std::set<std::set<int>> orbits;
    for (int c = 0; c < 9; ++c) {
      int d = filt_act(T2, obj_Pt(), swap, c);
      CHECK(filt_act(T2, obj_Pt(), swap, d) == c);
      orbits.insert({c, d});
    }
    CHECK(orbits.size() == 6);
  }
  SUBCASE("powers of a free diagram space glue to the free space on the sum") {
    FreeDiag F1 = free_F(CatId::I, 3, 0, obj_I(1), sset_point(0));
    FiltSpace T2 = tensor_power(F1.space, 2);
    validate_diagspace(T2.space);
    for (int mdeg = 0; mdeg <= 3; ++mdeg)
      CHECK(T2.space.level(obj_I(mdeg)).count(0) ==
            (int)enumerate_inj(2, mdeg).size());
    FiltSpace T3 = tensor_power(F1.space, 3);
    CHECK(T3.space.level(obj_I(3)).count(0) == 6);
    CHECK(T3.space.level(obj_I(2)).count(0) == 0);
  }
  SUBCASE("the factor permutation action is a left action on diagram powers") {
    FreeDiag F1 = free_F(CatId::I, 3, 0, obj_I(1), sset_point(0));
    FiltSpace T3 = tensor_power(F1.space, 3);
    Obj m = obj_I(3);
    for (auto& rho : perms(3))
      for (auto& tau : perms(3))
        for (int c = 0; c < T3.space.level(m).count(0); ++c)
          CHECK(filt_act(T3, m, compose(rho, tau), c) ==
                filt_act(T3, m, rho, filt_act(T3, m, tau, c)));
  }
}

TEST_CASE("Q and P filtration stages") {
  SUBCASE("the advancing filtration interpolates between the powers") {
    DiagSpace X0 = pt_set(1), X1 = pt_set(2);
    DiagMap f = pt_map(X0, X1, {0});
    CHECK(pt_card(q_filtration(X0, X1, f, 2, 0)) == 1);
    CHECK(pt_card(q_filtration(X0, X1, f, 2, 1)) == 3);
    CHECK(pt_card(q_filtration(X0, X1, f, 2, 2)) == 4);
    // endpoints against independent powers
    CHECK(pt_card(q_filtration(X0, X1, f, 3, 0)) == pt_card(tensor_power(X0, 3)));
    CHECK(pt_card(q_filtration(X0, X1, f, 3, 3)) == pt_card(tensor_power(X1, 3)));
    CHECK(pt_card(q_filtration(X0, X1, f, 4, 4)) == pt_card(tensor_power(X1, 4)));
  }
  SUBCASE("the span filtration ends at the power of the pushout") {
    DiagSpace X0 = pt_set(1), X1 = pt_set(2), X2 = pt_set(2);
    DiagMap f1 = pt_map(X0, X1, {0});
    DiagMap f2 = pt_map(X0, X2, {1});
    // the pushout glues one point of each side: 3 points
    DiagPushout P = diag_pushout(X0, X1, X2, f1, f2);
    CHECK(pt_card(P.space) == 3);
    for (int n = 1; n <= 4; ++n) {
      CHECK(pt_card(p_filtration(X0, X1, X2, f1, f2, n, n)) ==
            pt_card(tensor_power(P.space, n)));
      CHECK(pt_card(p_filtration(X0, X1, X2, f1, f2, n, 0)) ==
            pt_card(tensor_power(X2, n)));
    }
  }
  SUBCASE("the pushout product of an inclusion misses the new corner") {
    DiagSpace X0 = pt_set(2), X1 = pt_set(3);
    DiagMap f = pt_map(X0, X1, {0, 2});
    PushoutProduct P = iterated_pushout_product(X0, X1, f, 2);
    validate_diagmap(P.map, P.dom.space, P.cod.space);
    // pairs with at least one coordinate in the image: 9 - 1
    CHECK(pt_card(P.dom) == 8);
    std::set<int> img;
    for (int c = 0; c < pt_card(P.dom); ++c)
      img.insert(disc_apply(P.map, obj_Pt(), c));
    CHECK((int)img.size() == 8);
  }
  SUBCASE("the corner domain is the pushout of the two half products") {
    DiagSpace X0 = pt_set(2), X1 = pt_set(3);
    DiagMap f = pt_map(X0, X1, {0, 2});
    FiltSpace M = tensor_power(X0, 2);
    FiltSpace L = mixed_tensor(X1, X0);
    FiltSpace R = mixed_tensor(X0, X1);
    FiltSpace T = q_filtration(X0, X1, f, 2, 1);
    Obj pt = obj_Pt();
    auto move = [&](const FiltSpace& from, const FiltSpace& to, int slot,
                    std::vector<int> states) {
      return disc_map(from.space, to.space, [&, slot, states](const Obj& m, int c) {
        BoxNode node = from.rep.at(m)[c];
        if (slot >= 0)
          node.elems[slot] = disc_apply(f, node.ks[slot], node.elems[slot]);
        node.s = states;
        return to.class_of(m, node);
      });
    };
    DiagMap a = move(M, L, 0, {0, 1});   // advance the first factor
    DiagMap b = move(M, R, 1, {0, 1});   // advance the second factor
    DiagMap u = move(L, T, -1, {1, 0});  // reinterpret states in the Q shape
    DiagMap v = move(R, T, -1, {0, 1});
    SquareReport sq = check_pushout_square(M.space, L.space, R.space, T.space,
                                           a, b, u, v);
    CAPTURE(sq.witnesses);
    CHECK(sq.ok());
    // the full power is too big to be this pushout: the new corner is missing
    FiltSpace T2 = tensor_power(X1, 2);
    DiagMap u2 = move(L, T2, 1, {0, 0});
    DiagMap v2 = move(R, T2, 0, {0, 0});
    SquareReport bad = check_pushout_square(M.space, L.space, R.space, T2.space,
                                            a, b, u2, v2);
    CHECK(bad.commutes);
    CHECK(!bad.pushout);
    CHECK(pt_card(T2) - pt_card(T) == 1);
  }
  SUBCASE("consecutive span stages differ by an equivariant attaching square") {
    DiagSpace X0 = pt_set(1), X1 = pt_set(2), X2 = pt_set(2);
    DiagMap f1 = pt_map(X0, X1, {0});
    DiagMap f2 = pt_map(X0, X2, {1});
    PushoutLemmaReport r = check_iterated_pushout_lemma(X0, X1, X2, f1, f2, 3);
    CAPTURE(r.witnesses);
    CHECK(r.ok);
  }
  SUBCASE("the attaching squares over the injection category") {
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    DiagSpace X1 = diag_disjoint_union({&F1.space, &F1.space});
    DiagMap incl = disc_map(F1.space, X1, [](const Obj&, int v) { return v; });
    DiagMap idm = disc_map(F1.space, F1.space,
                           [](const Obj&, int v) { return v; });
    PushoutLemmaReport r =
        check_iterated_pushout_lemma(F1.space, X1, F1.space, incl, idm, 2);
    CAPTURE(r.witnesses);
    CHECK(r.ok);
    // a cofibration out of the empty space: the left corners all vanish
    DiagSpace E = empty_diagspace(CatId::I, 2, 0);
    DiagMap e1 = disc_map(E, F1.space, [](const Obj&, int v) { return v; });
    DiagMap e2 = disc_map(E, F1.space, [](const Obj&, int v) { return v; });
    PushoutLemmaReport r2 =
        check_iterated_pushout_lemma(E, F1.space, F1.space, e1, e2, 2);
    CAPTURE(r2.witnesses);
    CHECK(r2.ok);
  }
  SUBCASE("stage maps assemble the filtration chain") {
    DiagSpace X0 = pt_set(2), X1 = pt_set(3);
    DiagMap f = pt_map(X0, X1, {0, 2});
    std::vector<FiltSpace> stages;
    for (int i = 0; i <= 3; ++i) stages.push_back(q_filtration(X0, X1, f, 3, i));
    for (int i = 1; i <= 3; ++i) {
      DiagMap step = filt_stage_map(stages[i - 1], stages[i]);
      validate_diagmap(step, stages[i - 1].space, stages[i].space);
      // advancing an injection keeps the stages injective
      std::set<int> img;
      for (int c = 0; c < pt_card(stages[i - 1]); ++c)
        img.insert(disc_apply(step, obj_Pt(), c));
      CHECK((int)img.size() == pt_card(stages[i - 1]));
    }
  }
}

TEST_CASE("the operadic monad on a truncation") {
  SUBCASE("the empty space generates only the arity-zero value") {
    MonadValue M = monad_D(commutativity_operad(3), pt_set(0));
    CHECK(pt_card(M.space) == 1);
    MonadValue N = monad_D(associativity_operad(3), pt_set(0));
    CHECK(pt_card(N.space) == 1);
  }
  SUBCASE("multisets from the commutativity operad on two points") {
    MonadValue M = monad_D(commutativity_operad(3), pt_set(2));
    // multisets of size 0..3 from two letters: 1 + 2 + 3 + 4
    CHECK(pt_card(M.space) == 10);
  }
  SUBCASE("words from the associativity operad on two points") {
    MonadValue M = monad_D(associativity_operad(2), pt_set(2));
    // words of length 0..2 from two letters: 1 + 2 + 4
    CHECK(pt_card(M.space) == 7);
    CHECK(!M.exact);
  }
  SUBCASE("over the injection category the positive window loses nothing") {
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    MonadValue M = monad_D(commutativity_operad(2), F1.space);
    validate_diagspace(M.space);
    CHECK(M.exact);
    CHECK(M.space.level(obj_I(0)).count(0) == 1);
    CHECK(M.space.level(obj_I(1)).count(0) == 2);
    CHECK(M.space.level(obj_I(2)).count(0) == 4);
  }
  SUBCASE("unit and associativity laws of the monad") {
    OperadReport c = check_monad_laws(commutativity_operad(3), pt_set(2));
    CAPTURE(c.witnesses);
    CHECK(c.ok);
    OperadReport a = check_monad_laws(associativity_operad(2), pt_set(2));
    CAPTURE(a.witnesses);
    CHECK(a.ok);
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    OperadReport d = check_monad_laws(commutativity_operad(2), F1.space);
    CAPTURE(d.witnesses);
    CHECK(d.ok);
  }
  SUBCASE("a corrupted structure map breaks the monad laws") {
    SetOperad bad = associativity_operad(2);
    auto orig = bad.gam;
    bad.gam = [orig](int k, int d, const std::vector<std::pair<int, int>>& args) {
      int out = orig(k, d, args);
      int total = 0;
      for (auto& [j, c] : args) total += j;
      if (total == 2) out = 1 - out;
      return out;
    };
    OperadReport r = check_monad_laws(bad, pt_set(2));
    CHECK(!r.ok);
    CHECK(!r.witnesses.empty());
  }
}

TEST_CASE("algebras, split forks, and the shifted functors") {
  SUBCASE("saturating addition is an algebra on the nose") {
    OperadReport r = check_algebra(saturating_sum_algebra(3, 2));
    CAPTURE(r.witnesses);
    CHECK(r.ok);
    OperadReport f = check_algebra(free_algebra(commutativity_operad(3),
                                                pt_set(2)).alg);
    CAPTURE(f.witnesses);
    CHECK(f.ok);
    OperadReport g = check_algebra(free_algebra(associativity_operad(2),
                                                pt_set(2)).alg);
    CAPTURE(g.witnesses);
    CHECK(g.ok);
  }
  SUBCASE("a structure map that drops a slot is not an algebra") {
    DAlgebra bad = saturating_sum_algebra(3, 2);
    bad.xi = [](const Obj&, int n, int, const BoxNode& node) {
      int sum = 0;
      for (int j = 1; j < n; ++j) sum += node.elems[j];
      return std::min(sum, 2);
    };
    OperadReport r = check_algebra(bad);
    CHECK(!r.ok);
    CHECK(!r.witnesses.empty());
  }
  SUBCASE("the canonical fork of an algebra splits") {
    ForkReport r = algebra_split_fork(saturating_sum_algebra(3, 2));
    CAPTURE(r.witnesses);
    CHECK(r.ok());
    ForkReport f = algebra_split_fork(
        free_algebra(associativity_operad(2), pt_set(1)).alg);
    CAPTURE(f.witnesses);
    CHECK(f.ok());
  }
  SUBCASE("a pair without a genuine contraction fails the identities") {
    DiagSpace A = pt_set(1), B = pt_set(2), C = pt_set(1);
    DiagMap d0 = pt_map(A, B, {0});
    DiagMap d1 = pt_map(A, B, {1});
    DiagMap e = pt_map(B, C, {0, 0});
    DiagMap s = pt_map(C, B, {0});
    DiagMap t = pt_map(B, A, {0, 0});
    ForkReport r = split_fork_check(A, B, C, d0, d1, e, s, t);
    CHECK(r.forked);
    CHECK(r.coequalizer);
    CHECK(!r.identities);
    CHECK(!r.witnesses.empty());
  }
  SUBCASE("the unshifted functor returns the carrier") {
    OperadReport r = check_u0_forgetful(saturating_sum_algebra(3, 2));
    CAPTURE(r.witnesses);
    CHECK(r.ok);
    OperadReport f = check_u0_forgetful(
        free_algebra(commutativity_operad(3), pt_set(1)).alg);
    CAPTURE(f.witnesses);
    CHECK(f.ok);
  }
  SUBCASE("for the commutativity operad the shift acts trivially") {
    DAlgebra alg = saturating_sum_algebra(4, 2);
    UkValue U = u_k(alg, 2);
    Obj pt = obj_Pt();
    // the classes are the carrier again
    std::map<int, int> value;
    std::set<int> img;
    for (int dc = 0; dc < U.dak.space.level(pt).count(0); ++dc) {
      const MonadRep& r = U.dak.rep.at(pt)[dc];
      int a = alg.xi(pt, r.n, r.d, r.node);
      auto [it, fresh] = value.try_emplace(U.cls.at(pt)[dc], a);
      if (fresh) img.insert(a);
      CHECK(it->second == a);
    }
    CHECK((int)img.size() == (int)value.size());
    CHECK((int)value.size() == 3);
    // and the residual action cannot see the extra letters
    for (int c = 0; c < pt_card(U.space); ++c)
      for (auto& rho : perms(2)) CHECK(uk_act(U, pt, rho, c) == c);
  }
  SUBCASE("on free algebras the shifted functor is the shifted free value") {
    for (int k = 0; k <= 2; ++k) {
      OperadReport r = check_uk_free(commutativity_operad(3), pt_set(1), k);
      CAPTURE(r.witnesses);
      CHECK(r.ok);
    }
    OperadReport a = check_uk_free(associativity_operad(3), pt_set(1), 1);
    CAPTURE(a.witnesses);
    CHECK(a.ok);
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    OperadReport d = check_uk_free(commutativity_operad(3), F1.space, 1);
    CAPTURE(d.witnesses);
    CHECK(d.ok);
  }
  SUBCASE("the residual action and the projection to the operad") {
    FreeAlgebra F = free_algebra(associativity_operad(3), pt_set(1));
    UkValue U = u_k(F.alg, 2, monad_weights(F.dx));
    Obj pt = obj_Pt();
    for (int c = 0; c < pt_card(U.space); ++c)
      for (auto& rho : perms(2)) {
        int d = uk_act(U, pt, rho, c);
        // an action of the two shifted letters
        CHECK(uk_act(U, pt, rho, d) == c);
        // compatible with collapsing everything else
        CHECK(U.to_operad.at(pt)[d] ==
              U.op.act(2, rho, U.to_operad.at(pt)[c]));
      }
    // the two elements of the shifted free value on no generators survive
    CHECK(pt_card(U.space) >= 2);
  }
  SUBCASE("a cap below the shift cannot express the coequalizer") {
    CHECK_THROWS_AS(u_k(saturating_sum_algebra(1, 1), 1),
                    std::invalid_argument);
  }
}

TEST_CASE("the filtration of the shifted functor of an algebra pushout") {
  SUBCASE("gluing along the identity changes no stage") {
    DAlgebra alg = saturating_sum_algebra(3, 2);
    DiagMap idm = disc_map(alg.A, alg.A, [](const Obj&, int v) { return v; });
    UkFiltration F = structured_pushout_filtration(alg, alg.A, alg.A, idm, idm,
                                                   0, 3);
    UkValue U = u_k(alg, 0);
    OperadReport bottom = check_filtration_bottom(F, U);
    CAPTURE(bottom.witnesses);
    CHECK(bottom.ok);
    for (int i = 1; i <= 3; ++i)
      CHECK(disc_map_bijective(F.steps[i - 1], F.stages[i - 1].space,
                               F.stages[i].space));
    OperadReport top = check_filtration_top(F, alg, alg.A, alg.A, idm, idm);
    CAPTURE(top.witnesses);
    CHECK(top.ok);
  }
  SUBCASE("attaching a free point to the saturating algebra counts letters") {
    DAlgebra alg = saturating_sum_algebra(3, 2);
    DiagSpace X = pt_set(0), Y = pt_set(1);
    DiagMap f = pt_map(X, Y, {});
    DiagMap p = disc_map(X, alg.A, [](const Obj&, int) { return 0; });
    UkFiltration F = structured_pushout_filtration(alg, X, Y, f, p, 0, 3);
    // each stage adds one more count of the new letter next to the carrier
    CHECK(pt_card(F.stages[0].space) == 3);
    CHECK(pt_card(F.stages[1].space) == 6);
    CHECK(pt_card(F.stages[2].space) == 9);
    UkValue U = u_k(alg, 0);
    OperadReport bottom = check_filtration_bottom(F, U);
    CAPTURE(bottom.witnesses);
    CHECK(bottom.ok);
    OperadReport top = check_filtration_top(F, alg, X, Y, f, p);
    CAPTURE(top.witnesses);
    CHECK(top.ok);
    for (int i = 1; i <= 2; ++i) {
      SquareReport sq = check_filtration_square(F, alg, X, Y, f, i);
      CAPTURE(sq.witnesses);
      CHECK(sq.ok());
    }
    for (int i = 1; i <= 3; ++i) {
      validate_diagmap(F.steps[i - 1], F.stages[i - 1].space,
                       F.stages[i].space);
      std::set<int> img;
      Obj pt = obj_Pt();
      for (int c = 0; c < pt_card(F.stages[i - 1].space); ++c)
        img.insert(disc_apply(F.steps[i - 1], pt, c));
      CHECK((int)img.size() == pt_card(F.stages[i - 1].space));
    }
  }
  SUBCASE("a free attachment over the injection category, with one shift") {
    FreeDiag F1 = free_F(CatId::I, 2, 0, obj_I(1), sset_point(0));
    FreeAlgebra FA = free_algebra(associativity_operad(3), F1.space);
    DiagSpace X = empty_diagspace(CatId::I, 2, 0);
    DiagMap f = disc_map(X, F1.space, [](const Obj&, int v) { return v; });
    DiagMap p = disc_map(X, FA.alg.A, [](const Obj&, int v) { return v; });
    UkFiltration F =
        structured_pushout_filtration(FA.alg, X, F1.space, f, p, 1, 2);
    for (auto& st : F.stages) validate_diagspace(st.space);
    UkValue U = u_k(FA.alg, 1);
    OperadReport bottom = check_filtration_bottom(F, U);
    CAPTURE(bottom.witnesses);
    CHECK(bottom.ok);
    OperadReport top = check_filtration_top(F, FA.alg, X, F1.space, f, p);
    CAPTURE(top.witnesses);
    CHECK(top.ok);
    SquareReport sq = check_filtration_square(F, FA.alg, X, F1.space, f, 1);
    CAPTURE(sq.witnesses);
    CHECK(sq.ok());
  }
}
