#include "doctest.h"
#include "rees/linkage.hpp"
#include "rees/morley.hpp"
#include "rees/oracle.hpp"
#include "support.hpp"

using namespace rees;
using namespace rees::testing;

namespace {

const Field F101(101);

// [[y, 0], [x, y], [0, x]]
HBMatrix linear_pair() {
  return validate(raw_phi(F101, 1, 1, {{{{{1, 0}, {}}}, {{{0, 1}, {1, 0}}}, {{{}, {0, 1}}}}}));
}

std::vector<HBMatrix> samples() {
  std::mt19937 rng(31);
  return {ex1(), ex2(), linear_pair(), random_hb(F101, 2, 4, rng), random_hb(F101, 3, 3, rng),
          random_hb(F101, 2, 5, rng), random_hb(F101, 1, 4, rng)};
}

std::vector<HBMatrix> canonical_samples() {
  std::mt19937 rng(37);
  std::vector<HBMatrix> out;
  for (CanonicalShape s : {CanonicalShape::X2Y2_XY, CanonicalShape::Y2_X2})
    for (int d2 = 3; d2 <= 6; ++d2) out.push_back(random_canonical(F101, s, d2, rng));
  return out;
}

SPoly T(int k) { return SPoly::var(F101, k - 1); }

}  // namespace

TEST_CASE("H matrix satisfies the tensor difference identity") {
  for (const HBMatrix& hb : samples()) CHECK(h_identity_holds(hb));
  TensorGrid H = h_matrix(linear_pair());
  for (const auto& row : H)
    for (const TensorPoly& e : row) CHECK(e.size() == 1);
}

TEST_CASE("det H matches the closed quadruple sum") {
  for (const HBMatrix& hb : samples()) {
    CHECK(morley_delta_check(hb));
    TensorPoly closed = morley_delta_closed_form(hb);
    CHECK(closed.homogeneous(0, 4));
    CHECK(closed.degree(0, 4) == hb.delta);
    CHECK(closed.homogeneous(4, 7));
    CHECK(closed.degree(4, 7) == 2);
  }
}

TEST_CASE("q forms") {
  for (const HBMatrix& hb : samples())
    for (int i = 0; i <= hb.delta; ++i) {
      MorleyQTable t = q_forms(hb, i);
      REQUIRE(t.q.size() == static_cast<std::size_t>(hb.delta - i + 1));
      for (const BPoly& q : t.q)
        if (!q.is_zero()) CHECK(bidegree(q) == Bidegree{i, 2});
    }
  CHECK_THROWS_AS(q_forms(ex1(), -1), Error);
  CHECK_THROWS_AS(q_forms(ex1(), 5), Error);
}

TEST_CASE("general and d1 = 2 q formulas agree") {
  std::vector<HBMatrix> hbs = canonical_samples();
  hbs.push_back(ex1());
  std::mt19937 rng(41);
  for (int d2 = 2; d2 <= 6; ++d2) hbs.push_back(random_hb(F101, 2, d2, rng));
  for (const HBMatrix& hb : hbs)
    for (int i = 1; i <= hb.d2 - 1; ++i) {
      auto general = q_forms(hb, i);
      auto special = q_forms_d1_2(hb, i);
      CHECK(general.q == special.q);
    }
  CHECK_THROWS_AS(q_forms_d1_2(ex2(), 1), Error);
  CHECK_THROWS_AS(q_forms_d1_2(ex1(), 0), Error);
  CHECK_THROWS_AS(q_forms_d1_2(ex1(), 4), Error);
}

TEST_CASE("top Morley form is a multiple of the Sylvester form") {
  for (const HBMatrix& hb : samples()) {
    Oracle o(hb);
    MorleyQTable t = q_forms(hb, hb.delta);
    REQUIRE(t.q.size() == 1);
    CHECK(o.proportional_in_sym(t.q[0], sylvester_form(hb), hb.delta, 2));
  }
}

TEST_CASE("syzygy catalog examples") {
  SPoly zero(F101), one = SPoly::constant(F101, 1);
  auto c5 = syzygy_catalog(F101, 5, CatalogShape::FrakA);
  CHECK(c5.columns[0] == std::vector<SPoly>{zero, T(2), zero, -T(1), zero});
  CHECK(c5.columns[1] == std::vector<SPoly>{T(2) * T(2), zero, -(T(1) * T(2)), zero, T(1) * T(1)});
  auto c6 = syzygy_catalog(F101, 6, CatalogShape::FrakA);
  CHECK(c6.columns[0] == std::vector<SPoly>{zero, T(2) * T(2), zero, -(T(1) * T(2)), zero, T(1) * T(1)});
  CHECK(c6.columns[1] == std::vector<SPoly>{T(2) * T(2), zero, -(T(1) * T(2)), zero, T(1) * T(1), zero});
  auto a3 = syzygy_catalog(F101, 3, CatalogShape::A);
  CHECK(a3.columns[0] == std::vector<SPoly>{one, zero, -one});
  CHECK(a3.columns[1] == std::vector<SPoly>{zero, T(1), -T(2)});
  // the printed alternative (0, T2, -T1) is not a syzygy of A_3 = [T1 T2 T1]
  CHECK_FALSE((T(2) * T(2) - T(1) * T(1)).is_zero());
  CHECK(signed_minors(F101, b_matrix(F101, 2)) == std::vector<SPoly>{T(2), -T(1)});
  CHECK(dagger(b_matrix(F101, 3)) == Grid<SPoly>{{T(2), T(1), zero}, {T(1), T(2), T(1)}});
  CHECK_THROWS_AS(syzygy_catalog(F101, 2, CatalogShape::A), Error);
}

TEST_CASE("syzygy catalogs are exact") {
  for (CatalogShape shape : {CatalogShape::A, CatalogShape::FrakA})
    for (int ell = 3; ell <= 12; ++ell) {
      auto cat = syzygy_catalog(F101, ell, shape);
      CAPTURE(ell);
      CAPTURE(shape_name(shape));
      CHECK(catalog_is_complex(cat));
      CHECK(catalog_kernel_rank(cat) == 2);
      for (int e = 0; e <= ell + 2; ++e) CHECK(catalog_kernel_dim(cat, e) == catalog_span_dim(cat, e));
      const int k = ell / 2;
      CHECK(cat.twists == (ell % 2 ? std::vector<int>{k, k + 1} : std::vector<int>{k, k}));
      CHECK(hilbert_series_check(cat.twists, ell));
      for (std::size_t c = 0; c < 2; ++c)
        for (const SPoly& s : cat.columns[c])
          if (!s.is_zero()) CHECK(s.degree() == cat.twists[c] - 1);
    }
}

TEST_CASE("nu1") {
  HBMatrix hb = ex1();
  const int i = 1;
  const std::size_t len = hb.delta - i + 1;
  CHECK(nu1(hb, i, std::vector<SPoly>(len, SPoly(F101))).is_zero());
  // Upsilon^T for EX1 at i = 1 is A_4 in T1, T2 with the first column [x^2 + y^2, xy, 0].
  auto cat = syzygy_catalog(F101, 4, CatalogShape::A);
  Oracle o(hb);
  for (const auto& chi : cat.columns) {
    BPoly F = nu1(hb, i, chi);
    CHECK_FALSE(F.is_zero());
    CHECK(bidegree(F) == Bidegree{1, 3});
    CHECK(substitute_T(F, hb.h[0], hb.h[1], hb.h[2]).is_zero());
    CHECK(o.in_a(F, 1, 3));
    std::vector<SPoly> scaled;
    for (const SPoly& s : chi) scaled.push_back(s.scaled(7));
    CHECK(nu1(hb, i, scaled) == F.scaled(7));
  }
  std::vector<SPoly> bad(len, SPoly(F101));
  bad[0] = T(1);
  CHECK_THROWS_AS(nu1(hb, i, bad), Error);
  CHECK_THROWS_AS(nu1(hb, 3, std::vector<SPoly>(3, SPoly(F101))), Error);
}

TEST_CASE("explicit d1 = 2 generators") {
  std::vector<HBMatrix> hbs = canonical_samples();
  hbs.push_back(ex1());
  for (const HBMatrix& hb : hbs) {
    Oracle o(hb);
    Goal5Generators lit = goal5_generators(hb);
    Goal5Generators via = goal5_via_nu1(hb);
    REQUIRE(lit.elements.size() == via.elements.size());
    std::vector<BPoly> seeds{to_b(o.resultant().F)};
    for (std::size_t k = 0; k < lit.elements.size(); ++k) {
      const Goal5Element& e = lit.elements[k];
      CAPTURE(hb.d2);
      CAPTURE(e.label);
      CHECK(bidegree(e.element) == e.bideg);
      CHECK(substitute_T(e.element, hb.h[0], hb.h[1], hb.h[2]).is_zero());
      CHECK(o.in_a(e.element, e.bideg.i, e.bideg.j));
      CHECK(e.element == via.elements[k].element);
      seeds.push_back(e.element);
    }
    for (const BPoly& D : delta_minors(hb, hb.d2 - 1)) seeds.push_back(D);
    auto rep = o.generated_submodule(seeds, {});
    CHECK(rep.inside_a);
    CHECK(rep.equals_a);
    CHECK(rep.generators == o.minimal_generators(GeneratorKind::A_as_B));
  }
  CHECK_THROWS_AS(goal5_generators(ex2()), Error);
}
