#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <dspace/sset.hpp>

#include <random>

using namespace dspace;

namespace {

// Oracle: rank of an integer matrix by fraction-free Gaussian elimination.
int oracle_rank(std::vector<std::vector<long>> m) {
  int rank = 0;
  size_t R = m.size(), C = R ? m[0].size() : 0;
  for (size_t c = 0, r = 0; c < C && r < R; ++c) {
    size_t p = r;
    while (p < R && m[p][c] == 0) ++p;
    if (p == R) continue;
    std::swap(m[p], m[r]);
    for (size_t i = 0; i < R; ++i) {
      if (i == r || m[i][c] == 0) continue;
      long a = m[r][c], b = m[i][c];
      for (size_t j = 0; j < C; ++j) m[i][j] = m[i][j] * a - m[r][j] * b;
    }
    ++r;
    ++rank;
  }
  return rank;
}

HomologyGroup zgroup(int rank) { return HomologyGroup{rank, {}}; }

}  // namespace

TEST_CASE("monotone map plumbing") {
  CHECK(mono_compose(mono_face(2, 1), mono_degeneracy(1, 0)) ==
        Monotone{0, 0, 2});
  Monotone delta, sigma;
  mono_factor({0, 0, 2, 2, 3}, delta, sigma);
  CHECK(delta == Monotone{0, 2, 3});
  CHECK(sigma == Monotone{0, 0, 1, 1, 2});
  CHECK(mono_surjections(3, 1).size() == 3);  // choose the increment step
  CHECK(mono_surjections(4, 2).size() == 6);
  CHECK(mono_surjections(2, 3).empty());
}

TEST_CASE("standard simplices validate and have the right homology") {
  for (int n = 0; n <= 3; ++n) {
    FinSSet D = sset_delta(n, 3);
    validate_sset(D);
    auto H = homology(D, 2);
    CHECK(H[0] == zgroup(1));
    CHECK(H[1].is_zero());
    CHECK(H[2].is_zero());
  }
}

TEST_CASE("homology of point, circle, and boundary of the 2-simplex") {
  auto Hpt = homology(sset_point(3), 2);
  CHECK(Hpt[0] == zgroup(1));
  CHECK(Hpt[1].is_zero());
  CHECK(Hpt[2].is_zero());

  FinSSet circle = sset_circle(3);
  validate_sset(circle);
  auto Hc = homology(circle, 2);
  CHECK(Hc[0] == zgroup(1));
  CHECK(Hc[1] == zgroup(1));
  CHECK(Hc[2].is_zero());

  FinSSet bd = sset_delta(2, 3, /*boundary_only=*/true);
  validate_sset(bd);
  auto Hb = homology(bd, 2);
  CHECK(Hb[0] == zgroup(1));
  CHECK(Hb[1] == zgroup(1));
  CHECK(Hb[2].is_zero());
}

TEST_CASE("smith normal form") {
  SUBCASE("diagonalizable example with torsion") {
    // boundary of the real projective plane's 2-cell: multiplication by 2
    SparseMat M;
    M.resize(2, 2);
    M.add(0, 0, 2);
    M.add(1, 1, 6);
    auto r = smith_normal_form(M);
    CHECK(r.rank == 2);
    REQUIRE(r.diagonal.size() == 2);
    CHECK(r.diagonal[0] == 2);
    CHECK(r.diagonal[1] == 6);
  }
  SUBCASE("rank agrees with a dense oracle on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      int R = 1 + (int)(rng() % 6), C = 1 + (int)(rng() % 6);
      SparseMat M;
      M.resize(R, C);
      std::vector<std::vector<long>> dense(R, std::vector<long>(C, 0));
      for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) {
          long v = (long)(rng() % 7) - 3;
          dense[i][j] = v;
          if (v) M.add(i, j, v);
        }
      CHECK(smith_normal_form(M).rank == oracle_rank(dense));
    }
  }
  SUBCASE("divisibility of the diagonal") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
      int R = 2 + (int)(rng() % 4), C = 2 + (int)(rng() % 4);
      SparseMat M;
      M.resize(R, C);
      for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j) {
          long v = (long)(rng() % 9) - 4;
          if (v) M.add(i, j, v);
        }
      auto r = smith_normal_form(M);
      for (size_t i = 1; i < r.diagonal.size(); ++i)
        CHECK(r.diagonal[i] % r.diagonal[i - 1] == 0);
    }
  }
}

TEST_CASE("products") {
  FinSSet circle = sset_circle(3);
  auto torus = sset_product(circle, circle);
  validate_sset(torus.S);
  validate_map(torus.proj1, torus.S, circle);
  validate_map(torus.proj2, torus.S, circle);
  // torus cell structure: 1 vertex, 3 edges... no: S1 x S1 as simplicial
  // sets has 1 vertex, 3 nondegenerate edges, 2 nondegenerate triangles
  CHECK(torus.S.count(0) == 1);
  CHECK(torus.S.count(1) == 3);
  CHECK(torus.S.count(2) == 2);
  auto H = homology(torus.S, 2);
  CHECK(H[0] == zgroup(1));
  CHECK(H[1] == zgroup(2));
  CHECK(H[2] == zgroup(1));

  SUBCASE("product with a point is the identity-shaped") {
    FinSSet pt = sset_point(3);
    auto p = sset_product(circle, pt);
    CHECK(p.S.count(0) == circle.count(0));
    CHECK(p.S.count(1) == circle.count(1));
    auto Hp = homology(p.S, 2);
    CHECK(Hp[1] == zgroup(1));
  }
}

TEST_CASE("disjoint union and colimit") {
  FinSSet a = sset_point(2), b = sset_point(2);
  auto du = sset_disjoint_union({&a, &b});
  CHECK(du.S.count(0) == 2);
  validate_map(du.inclusions[0], a, du.S);

  SUBCASE("gluing two intervals end to end") {
    FinSSet interval = sset_delta(1, 2);
    FinSSet pt = sset_point(2);
    // maps pt -> interval hitting vertex 1 of the first and 0 of the second
    SimplicialMap end1, start2;
    end1.img.resize(3);
    end1.img[0].push_back(FormalSimplex{0, 1, {0}});
    start2.img.resize(3);
    start2.img[0].push_back(FormalSimplex{0, 0, {0}});
    std::vector<const FinSSet*> pieces{&interval, &interval, &pt};
    std::vector<ColimArrow> arrows{{2, 0, &end1}, {2, 1, &start2}};
    auto col = sset_colimit(pieces, arrows, 2);
    validate_sset(col.S);
    CHECK(col.S.count(0) == 3);
    CHECK(col.S.count(1) == 2);
    CHECK(pi0_count(col.S) == 1);
    auto H = homology(col.S, 1);
    CHECK(H[0] == zgroup(1));
    CHECK(H[1].is_zero());
    validate_map(col.projections[0], interval, col.S);
    validate_map(col.projections[1], interval, col.S);
    validate_map(col.projections[2], pt, col.S);
  }
  SUBCASE("coequalizing both endpoints of an interval gives a circle") {
    FinSSet interval = sset_delta(1, 2);
    FinSSet pt = sset_point(2);
    SimplicialMap v0, v1;
    v0.img.resize(3);
    v1.img.resize(3);
    v0.img[0].push_back(FormalSimplex{0, 0, {0}});
    v1.img[0].push_back(FormalSimplex{0, 1, {0}});
    std::vector<const FinSSet*> pieces{&interval, &pt};
    std::vector<ColimArrow> arrows{{1, 0, &v0}, {1, 0, &v1}};
    auto col = sset_colimit(pieces, arrows, 2);
    validate_sset(col.S);
    CHECK(col.S.count(0) == 1);
    CHECK(col.S.count(1) == 1);
    auto H = homology(col.S, 1);
    CHECK(H[0] == zgroup(1));
    CHECK(H[1] == zgroup(1));
  }
}

TEST_CASE("nerves") {
  SUBCASE("terminal category gives a point") {
    auto N = nerve(truncated_cat(CatId::Pt, 0), 3);
    validate_sset(N.S);
    CHECK(N.S.count(0) == 1);
    CHECK(N.S.count(1) == 0);
    CHECK(N.S.count(3) == 0);
  }
  SUBCASE("nerve of truncated I validates and is connected") {
    auto N = nerve(truncated_cat(CatId::I, 2), 3);
    validate_sset(N.S);
    CHECK(pi0_count(N.S) == 1);
    auto H = homology(N.S, 2);
    CHECK(H[0] == zgroup(1));
    CHECK(H[1].is_zero());
    CHECK(H[2].is_zero());
  }
  SUBCASE("pi0 of the nerve of truncated J is 2N+1") {
    for (int N = 0; N <= 2; ++N) {
      auto nv = nerve(truncated_cat(CatId::J, N), 1);
      CHECK(pi0_count(nv.S) == 2 * N + 1);
    }
  }
  SUBCASE("contractibility certificates") {
    CHECK(contractible_certificate(truncated_cat(CatId::Pt, 0)));
    CHECK(contractible_certificate(truncated_cat(CatId::I, 3)));  // initial 0
    CHECK(!contractible_certificate(truncated_J_component(0, 2)));
  }
}

TEST_CASE("dense extraction round-trips a plain simplicial set") {
  // present the circle densely through its own formal simplices
  struct Dense {
    using Cell = FormalSimplex;
    const FinSSet* X;
    std::vector<Cell> cells(int p) const { return all_simplices(*X, p); }
    Cell face(int p, const Cell& c, int i) const {
      return apply_op(*X, c, mono_face(p, i));
    }
    Cell degeneracy(int p, const Cell& c, int i) const {
      return apply_op(*X, c, mono_degeneracy(p, i));
    }
  };
  FinSSet circle = sset_circle(4);
  Dense D{&circle};
  auto ext = extract_sset(D, 3);
  validate_sset(ext.S);
  CHECK(ext.S.count(0) == 1);
  CHECK(ext.S.count(1) == 1);
  CHECK(ext.S.count(2) == 0);
}
