#include <random>

#include "doctest.h"
#include "rees/polyring.hpp"

using namespace rees;

namespace {

const Field F101(101);

BPoly X() { return BPoly::var(F101, 0); }
BPoly Y() { return BPoly::var(F101, 1); }
BPoly T(int k) { return BPoly::var(F101, 2 + k); }

BPoly random_bpoly(int i, int j, std::mt19937& rng) {
  Strand s(i, j);
  Vec v(s.size());
  for (auto& c : v) c = rng() % 101;
  return from_vector(F101, s, v);
}

BiForm random_form(int n, std::mt19937& rng) {
  std::vector<Elem> c(n + 1);
  for (auto& e : c) e = rng() % 101;
  return biform_from_coeffs(F101, n, c);
}

}  // namespace

TEST_CASE("poly_mul") {
  BPoly one = BPoly::constant(F101, 1);
  BPoly a = T(1) * X() + Y();
  CHECK(poly_mul(a, one) == a);
  BPoly xy = poly_mul(X(), Y());
  CHECK(xy == BPoly::monomial(F101, {1, 1, 0, 0, 0}));
  CHECK(bidegree(xy) == Bidegree{2, 0});
  BPoly l = T(1) * X() + T(2) * Y();
  BPoly sq = T(1) * T(1) * X() * X() + (T(1) * T(2) * X() * Y()).scaled(2) + T(2) * T(2) * Y() * Y();
  CHECK(poly_mul(l, l) == sq);
  CHECK(bidegree(sq) == Bidegree{2, 2});
}

TEST_CASE("ring axioms on random samples") {
  std::mt19937 rng(3);
  for (int t = 0; t < 10; ++t) {
    BPoly a = random_bpoly(1, 1, rng), b = random_bpoly(2, 1, rng), c = random_bpoly(0, 2, rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("strand sizes and ordering") {
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j) CHECK(Strand(i, j).size() == static_cast<std::size_t>((i + 1) * (j + 2) * (j + 1) / 2));
  Strand s(1, 1);
  // x^0 y T1, x^0 y T2, x^0 y T3... in lex order of (e1,e2,e3) ascending
  CHECK(s.t_of(0) == Exp<3>{0, 0, 1});
  CHECK(s.t_of(2) == Exp<3>{1, 0, 0});
  CHECK(s.index(1, {0, 1, 0}) == 4);
  for (int j = 0; j <= 5; ++j) {
    auto ts = Strand::t_monomials(j);
    for (std::size_t k = 0; k < ts.size(); ++k) CHECK(Strand::t_index(j, ts[k]) == k);
  }
}

TEST_CASE("coeff_vector round trip") {
  Strand s(2, 3);
  CHECK(is_zero(coeff_vector(BPoly(F101), s)));
  BPoly m = b_monomial(F101, 1, 1, {0, 2, 1});
  Vec v = coeff_vector(m, s);
  CHECK(v[s.index(1, {0, 2, 1})] == 1);
  std::size_t nz = 0;
  for (Elem e : v) nz += e != 0;
  CHECK(nz == 1);
  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    BPoly F = random_bpoly(2, 3, rng);
    CHECK(from_vector(F101, s, coeff_vector(F, s)) == F);
  }
  CHECK_THROWS_AS(coeff_vector(X(), s), Error);
}

TEST_CASE("substitute_T") {
  BiForm x = BiForm::var(F101, 0), y = BiForm::var(F101, 1);
  BiForm h1 = x * x, h2 = x * y + y * y, h3 = y * y;
  CHECK(substitute_T(T(0), h1, h2, h3) == h1);
  // Koszul relation T2 h1 - T1 h2
  BPoly kos = T(1) * to_b(h1) - T(0) * to_b(h2);
  CHECK(substitute_T(kos, h1, h2, h3).is_zero());
  CHECK_THROWS_AS(substitute_T(T(0), h1, x, h3), Error);
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    BiForm a = random_form(3, rng), b = random_form(3, rng), c = random_form(3, rng);
    BPoly F = random_bpoly(1, 2, rng), G = random_bpoly(2, 1, rng);
    CHECK(substitute_T(F * G, a, b, c) == substitute_T(F, a, b, c) * substitute_T(G, a, b, c));
  }
}

TEST_CASE("gcd of binary forms") {
  BiForm x = BiForm::var(F101, 0), y = BiForm::var(F101, 1);
  CHECK(gcd_biforms({x * x * y, x * y * y}) == x * y);
  CHECK(gcd_biforms({x.pow(3), y.pow(3)}) == BiForm::constant(F101, 1));
  BiForm q = x * x + y * y;
  CHECK(gcd_biforms({x.pow(3) * y.pow(3), q * x * x * y * y, q * x.pow(4) - x * y.pow(5)}) == x);
  CHECK_THROWS_AS(gcd_biforms({BiForm(F101)}), Error);
  // common quadratic factor, checked against an explicit product
  BiForm l = x + y.scaled(3);
  BiForm g = gcd_biforms({l * l * (x - y), l * l * y, l * x * x * l});
  CHECK(g == l * l);
}

TEST_CASE("det_poly matches numeric determinant at a point") {
  std::mt19937 rng(13);
  std::vector<std::vector<SPoly>> m(3, std::vector<SPoly>(3, SPoly(F101)));
  for (auto& r : m)
    for (auto& e : r) e = lin_to_spoly(F101, {static_cast<Elem>(rng() % 101), static_cast<Elem>(rng() % 101), static_cast<Elem>(rng() % 101)});
  SPoly D = det_poly<3>(F101, m);
  auto eval = [](const SPoly& p, const std::array<Elem, 3>& pt) {
    Elem acc = 0;
    for (const auto& [e, c] : p.terms()) {
      Elem t = c;
      for (int k = 0; k < 3; ++k) t = F101.mul(t, F101.pow(pt[k], e[k]));
      acc = F101.add(acc, t);
    }
    return acc;
  };
  for (int t = 0; t < 5; ++t) {
    std::array<Elem, 3> pt{static_cast<Elem>(rng() % 101), static_cast<Elem>(rng() % 101), static_cast<Elem>(rng() % 101)};
    Matrix num(F101, 3, 3);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) num(r, c) = eval(m[r][c], pt);
    CHECK(eval(D, pt) == det(num));
  }
  CHECK(D.degree() == 3);
  CHECK(D.homogeneous());
  // swapping two rows flips the sign
  std::swap(m[0], m[2]);
  CHECK(det_poly<3>(F101, m) == -D);
}

TEST_CASE("change_xy and formatting") {
  BiForm x = BiForm::var(F101, 0), y = BiForm::var(F101, 1);
  CHECK(change_xy(x * y, {1, 1, 0, 1}) == (x + y) * y);
  CHECK(to_string(x * x - y.scaled(2)) == "x^2 - 2*y");
  CHECK(to_string(BiForm(F101)) == "0");
}
