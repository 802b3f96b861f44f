#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rees/exactlin.hpp"
#include "rees/polyring.hpp"

namespace rees {

// Unvalidated 3x2 matrix of binary forms; column m has degree deg[m].
struct RawPhi {
  Field f;
  std::array<int, 2> deg{};
  std::array<std::array<BiForm, 2>, 3> e;
};

// A validated Hilbert-Burch matrix together with the data derived from it.
// Columns are ordered so that d1 <= d2. Indices m for columns are 1-based
// in the accessors below to match the usual naming g1, g2.
struct HBMatrix {
  Field f;
  int d1 = 0, d2 = 0, d = 0, delta = 0;
  std::array<std::array<BiForm, 2>, 3> phi;
  std::array<BiForm, 3> h;  // signed maximal minors
  std::array<BPoly, 2> g;   // [T1 T2 T3] * phi
  std::array<std::vector<Lin>, 2> coeffs;  // coeffs[m-1][l] = c_{l,m}

  int deg(int m) const { return m == 1 ? d1 : d2; }
  const Lin& c(int l, int m) const { return coeffs[m - 1][l]; }
  // c_{l,m} as a polynomial; zero outside 0 <= l <= d_m.
  SPoly cs(int l, int m) const;
  const BPoly& gm(int m) const { return g[m - 1]; }
  RawPhi raw() const;
};

HBMatrix validate(const RawPhi& raw);

// Matrix whose entries are linear forms in T, stored as one F_p matrix per variable.
struct LinMatrix {
  std::size_t rows = 0, cols = 0;
  std::array<Matrix, 3> coef;
  SPoly entry(std::size_t r, std::size_t c) const;
  Lin lin(std::size_t r, std::size_t c) const { return {coef[0](r, c), coef[1](r, c), coef[2](r, c)}; }
};

// (d_m + n) x n banded matrix of multiplication by g_m.
LinMatrix upsilon(const HBMatrix& hb, int n, int m);

struct GeneralizedZero {
  bool has_gz = false;
  int mu1 = 0;  // dimension of the span of the first-column entries
};
GeneralizedZero generalized_zero_col1(const HBMatrix& hb);

// Rows l = 0..d1, columns m = 1, 2 (stored 0-based).
using CoeffC = std::vector<std::array<Lin, 2>>;

CoeffC coeff_C(const HBMatrix& hb);
RawPhi raw_from_C(Field f, const CoeffC& C);
HBMatrix phi_from_C(Field f, const CoeffC& C);

int mu_I2C(Field f, const CoeffC& C);
int mu_I2C(const HBMatrix& hb);
int mu_I1(const HBMatrix& hb);

enum class CanonicalShape { X2Y2_XY, Y2_X2 };
std::string shape_name(CanonicalShape s);

// phi' (x, y) = rows * phi(xy(x, y)), where xy = (a, b, c, d) substitutes
// x -> a x + b y and y -> c x + d y.
struct ColumnTransform {
  Matrix rows;
  std::array<Elem, 4> xy{1, 0, 0, 1};
};

struct Canonicalized {
  HBMatrix hb;
  CanonicalShape shape;
  ColumnTransform transform;
};

// Shape of the first column if it is literally one of the two normal forms.
std::optional<CanonicalShape> canonical_shape(const HBMatrix& hb);

Canonicalized canonicalize_col1(const HBMatrix& hb, std::optional<CanonicalShape> prefer = std::nullopt);

RawPhi apply_transform(const RawPhi& raw, const ColumnTransform& t);

}  // namespace rees
