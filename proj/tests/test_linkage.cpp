#include "doctest.h"
#include "rees/linkage.hpp"
#include "rees/oracle.hpp"
#include "support.hpp"

using namespace rees;
using namespace rees::testing;

namespace {

const Field F101(101);

BPoly basis_row_times(const Field& f, int ell, const Grid<BPoly>& m, int col) {
  BPoly out(f);
  for (int a = 0; a <= ell; ++a) out += to_b(xy_monomial(f, a, ell - a)) * m[a][col];
  return out;
}

std::vector<HBMatrix> samples() {
  std::mt19937 rng(17);
  return {ex1(), ex2(), random_hb(F101, 2, 5, rng), random_hb(F101, 3, 4, rng), random_hb(F101, 1, 4, rng)};
}

}  // namespace

TEST_CASE("lambda matrix") {
  BiForm x = BiForm::var(F101, 0), y = BiForm::var(F101, 1);
  auto l1 = lambda_matrix(F101, 1);
  CHECK(l1 == Grid<BiForm>{{-x}, {y}});
  auto l2 = lambda_matrix(F101, 2);
  CHECK(l2 == Grid<BiForm>{{-x, BiForm(F101)}, {y, -x}, {BiForm(F101), y}});
  for (int ell = 1; ell <= 6; ++ell) {
    auto L = lambda_matrix(F101, ell);
    for (int c = 0; c < ell; ++c) {
      BiForm s(F101);
      for (int a = 0; a <= ell; ++a) s += xy_monomial(F101, a, ell - a) * L[a][c];
      CHECK(s.is_zero());
    }
  }
  CHECK_THROWS_AS(lambda_matrix(F101, 0), Error);
}

TEST_CASE("xi matrix reproduces g1, g2") {
  for (const HBMatrix& hb : samples())
    for (int ell = 1; ell <= hb.d1; ++ell) {
      auto xi = xi_matrix(hb, ell);
      for (int m = 1; m <= 2; ++m) {
        CHECK(basis_row_times(hb.f, ell, xi, m - 1) == hb.gm(m));
        for (int a = 0; a <= ell; ++a)
          if (!xi[a][m - 1].is_zero()) CHECK(bidegree(xi[a][m - 1]) == Bidegree{hb.deg(m) - ell, 1});
      }
    }
  HBMatrix hb = ex1();
  auto top = xi_matrix(hb, hb.d1);
  for (int l = 0; l <= hb.d1; ++l) CHECK(top[l][0] == to_b(hb.cs(l, 1)));
  CHECK_THROWS_AS(xi_matrix(hb, 3), Error);
}

TEST_CASE("delta minors agree with a direct determinant") {
  for (const HBMatrix& hb : samples())
    for (int i = hb.d2 - 1; i <= hb.delta; ++i) {
      int ell = hb.d - 1 - i;
      auto psi = psi_matrix(hb, ell).psi();
      auto minors = delta_minors(hb, i);
      REQUIRE(minors.size() == static_cast<std::size_t>(ell));
      for (int drop = 0; drop < ell; ++drop) {
        Grid<BPoly> sq;
        for (const auto& row : psi) {
          std::vector<BPoly> r;
          for (int c = 0; c < ell + 2; ++c)
            if (c != drop) r.push_back(row[c]);
          sq.push_back(std::move(r));
        }
        BPoly direct = det_poly<5>(hb.f, sq);
        CHECK((minors[drop] == direct || minors[drop] == -direct));
      }
    }
}

TEST_CASE("delta minors span A_(i,2)") {
  for (const HBMatrix& hb : samples()) {
    Oracle o(hb);
    for (int i = hb.d2 - 1; i <= hb.delta; ++i) {
      auto minors = delta_minors(hb, i);
      std::size_t expected = hb.d - 1 - i;
      CHECK(o.a_dim(i, 2) == expected);
      CHECK(o.sym_span_dim(minors, i, 2) == expected);
      for (const BPoly& D : minors) {
        CHECK(bidegree(D) == Bidegree{i, 2});
        CHECK(substitute_T(D, hb.h[0], hb.h[1], hb.h[2]).is_zero());
        CHECK(o.in_a(D, i, 2));
      }
    }
  }
  CHECK_THROWS_AS(delta_minors(ex1(), 2), Error);
  CHECK_THROWS_AS(delta_minors(ex1(), 5), Error);
}

TEST_CASE("sylvester form") {
  for (const HBMatrix& hb : samples()) {
    Oracle o(hb);
    BPoly syl = sylvester_form(hb);
    CHECK(bidegree(syl) == Bidegree{hb.delta, 2});
    CHECK(substitute_T(syl, hb.h[0], hb.h[1], hb.h[2]).is_zero());
    CHECK(o.a_dim(hb.delta, 2) == 1);
    CHECK(o.sym_span_dim({syl}, hb.delta, 2) == 1);
    CHECK(o.in_a(syl, hb.delta, 2));
    auto xi = xi_matrix(hb, 1);
    CHECK(syl == xi[0][0] * xi[1][1] - xi[1][0] * xi[0][1]);
  }
}

TEST_CASE("delta minors with g1, g2 generate J in T-degree 2") {
  for (const HBMatrix& hb : samples()) {
    Oracle o(hb);
    auto minors = delta_minors(hb, hb.d2 - 1);
    for (int i = hb.d2 - 1; i <= hb.delta; ++i) {
      Strand st(i, 2);
      EchelonBasis span(hb.f, st.size());
      int shift = i - (hb.d2 - 1);
      for (const BPoly& D : minors)
        for (int a = 0; a <= shift; ++a) span.insert(coeff_vector(to_b(xy_monomial(hb.f, a, shift - a)) * D, st));
      for (int m = 1; m <= 2; ++m) {
        int rest = i - hb.deg(m);
        if (rest < 0) continue;
        for (int a = 0; a <= rest; ++a)
          for (int k = 0; k < 3; ++k)
            span.insert(coeff_vector(to_b(xy_monomial(hb.f, a, rest - a)) * BPoly::var(hb.f, 2 + k) * hb.gm(m), st));
      }
      CHECK(span.dim() == o.j_dim(i, 2));
    }
  }
}
