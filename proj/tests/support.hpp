#pragma once

#include <random>
#include <vector>

#include "rees/hb.hpp"

namespace rees::testing {

// phi from coefficient lists (y-pure first), rows j = 1..3, columns m = 1, 2.
inline RawPhi raw_phi(Field f, int d1, int d2, const std::array<std::array<std::vector<std::int64_t>, 2>, 3>& rows) {
  RawPhi r;
  r.f = f;
  r.deg = {d1, d2};
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 2; ++m) {
      std::vector<Elem> c;
      for (auto v : rows[j][m]) c.push_back(f.from_int(v));
      int n = m == 0 ? d1 : d2;
      r.e[j][m] = c.empty() ? BiForm(f) : biform_from_coeffs(f, n, c);
    }
  return r;
}

// col1 = [x^2 + y^2, xy, 0], col2 = [0, y^4, x^4 + y^4] over F_101.
inline HBMatrix ex1() {
  return validate(raw_phi(Field(101), 2, 4,
                          {{{{{1, 0, 1}, {}}},
                            {{{0, 1, 0}, {1, 0, 0, 0, 0}}},
                            {{{}, {1, 0, 0, 0, 1}}}}}));
}

// [[y^3, 0], [x^3, y^3], [0, x^3]] over F_101.
inline HBMatrix ex2() {
  return validate(raw_phi(Field(101), 3, 3,
                          {{{{{1, 0, 0, 0}, {}}},
                            {{{0, 0, 0, 1}, {1, 0, 0, 0}}},
                            {{{}, {0, 0, 0, 1}}}}}));
}

inline BiForm random_form(Field f, int n, std::mt19937& rng) {
  std::vector<Elem> c(n + 1);
  for (auto& e : c) e = rng() % f.prime();
  return biform_from_coeffs(f, n, c);
}

// Random valid Hilbert-Burch matrix with the given column degrees.
inline HBMatrix random_hb(Field f, int d1, int d2, std::mt19937& rng) {
  for (;;) {
    RawPhi r;
    r.f = f;
    r.deg = {d1, d2};
    for (int j = 0; j < 3; ++j)
      for (int m = 0; m < 2; ++m) r.e[j][m] = random_form(f, m == 0 ? d1 : d2, rng);
    try {
      return validate(r);
    } catch (const Error&) {
    }
  }
}

// d1 = 2 with a canonical first column and a random second column.
inline HBMatrix random_canonical(Field f, CanonicalShape shape, int d2, std::mt19937& rng) {
  BiForm x2 = xy_monomial(f, 2, 0), y2 = xy_monomial(f, 0, 2), xy = xy_monomial(f, 1, 1);
  for (;;) {
    RawPhi r;
    r.f = f;
    r.deg = {2, d2};
    r.e[0][0] = shape == CanonicalShape::X2Y2_XY ? x2 + y2 : y2;
    r.e[1][0] = shape == CanonicalShape::X2Y2_XY ? xy : x2;
    r.e[2][0] = BiForm(f);
    for (int j = 0; j < 3; ++j) r.e[j][1] = random_form(f, d2, rng);
    try {
      return validate(r);
    } catch (const Error&) {
    }
  }
}

// Column 1 = [a, b, 0] (a generalized zero) with random a, b and a random column 2.
inline HBMatrix random_gz(Field f, int d1, int d2, std::mt19937& rng) {
  for (;;) {
    RawPhi r;
    r.f = f;
    r.deg = {d1, d2};
    r.e[0][0] = random_form(f, d1, rng);
    r.e[1][0] = random_form(f, d1, rng);
    r.e[2][0] = BiForm(f);
    for (int j = 0; j < 3; ++j) r.e[j][1] = random_form(f, d2, rng);
    try {
      return validate(r);
    } catch (const Error&) {
    }
  }
}

}  // namespace rees::testing
