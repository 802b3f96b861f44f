#include "rees/hb.hpp"

#include <utility>

namespace rees {

namespace {

std::string entry_name(int j, int m) {
  return "(" + std::to_string(j + 1) + "," + std::to_string(m + 1) + ")";
}

// Rows: forms; columns: coefficients of x^w y^{n-w}.
Matrix coeff_matrix(Field f, int n, const std::vector<BiForm>& forms) {
  Matrix m(f, forms.size(), n + 1);
  for (std::size_t r = 0; r < forms.size(); ++r) {
    std::vector<Elem> c = biform_coeffs(forms[r], n);
    for (int w = 0; w <= n; ++w) m(r, w) = c[w];
  }
  return m;
}

}  // namespace

SPoly HBMatrix::cs(int l, int m) const {
  if (l < 0 || l > deg(m)) return SPoly(f);
  return lin_to_spoly(f, c(l, m));
}

RawPhi HBMatrix::raw() const {
  RawPhi r;
  r.f = f;
  r.deg = {d1, d2};
  r.e = phi;
  return r;
}

HBMatrix validate(const RawPhi& input) {
  RawPhi raw = input;
  const Field f = raw.f;
  for (int m = 0; m < 2; ++m)
    if (raw.deg[m] < 1) throw Error("column degrees must be positive");
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 2; ++m) {
      const BiForm& e = raw.e[j][m];
      if (!(e.field() == f)) throw Error("entry " + entry_name(j, m) + " is over a different field");
      if (!e.is_zero() && (!e.homogeneous() || e.degree() != raw.deg[m]))
        throw Error("degree inconsistency: entry " + entry_name(j, m) + " is not a form of degree " +
                    std::to_string(raw.deg[m]));
    }
  if (raw.deg[0] > raw.deg[1]) {
    std::swap(raw.deg[0], raw.deg[1]);
    for (auto& row : raw.e) std::swap(row[0], row[1]);
  }

  HBMatrix hb;
  hb.f = f;
  hb.d1 = raw.deg[0];
  hb.d2 = raw.deg[1];
  hb.d = hb.d1 + hb.d2;
  hb.delta = hb.d - 2;
  hb.phi = raw.e;
  const auto& p = hb.phi;
  hb.h[0] = p[1][0] * p[2][1] - p[2][0] * p[1][1];
  hb.h[1] = -(p[0][0] * p[2][1] - p[2][0] * p[0][1]);
  hb.h[2] = p[0][0] * p[1][1] - p[1][0] * p[0][1];

  for (int m = 0; m < 2; ++m) {
    BiForm s(f);
    for (int j = 0; j < 3; ++j) s += hb.h[j] * p[j][m];
    if (!s.is_zero()) throw Error("internal error: [h1 h2 h3] * phi is not zero");
  }

  std::vector<BiForm> hs(hb.h.begin(), hb.h.end());
  if (rank(coeff_matrix(f, hb.d, hs)) < 3) throw Error("not minimally 3-generated: the minors are linearly dependent");
  if (gcd_biforms(hs).degree() != 0) throw Error("ideal not height 2: the minors have a common factor");

  for (int m = 0; m < 2; ++m) {
    int dm = raw.deg[m];
    BPoly g(f);
    std::vector<Lin> cs(dm + 1, Lin{0, 0, 0});
    for (int j = 0; j < 3; ++j) {
      for (const auto& [e, c] : p[j][m].terms()) {
        Exp<3> t{};
        t[j] = 1;
        g.add_term({e[0], e[1], t[0], t[1], t[2]}, c);
        cs[e[0]][j] = c;
      }
    }
    hb.g[m] = std::move(g);
    hb.coeffs[m] = std::move(cs);
  }
  return hb;
}

SPoly LinMatrix::entry(std::size_t r, std::size_t c) const {
  return lin_to_spoly(coef[0].field(), lin(r, c));
}

LinMatrix upsilon(const HBMatrix& hb, int n, int m) {
  if (n < 1) throw Error("upsilon: n must be at least 1");
  if (m != 1 && m != 2) throw Error("upsilon: column index must be 1 or 2");
  LinMatrix u;
  int dm = hb.deg(m);
  u.rows = dm + n;
  u.cols = n;
  for (auto& c : u.coef) c = Matrix(hb.f, u.rows, u.cols);
  for (int col = 0; col < n; ++col)
    for (int l = 0; l <= dm; ++l)
      for (int k = 0; k < 3; ++k) u.coef[k](col + l, col) = hb.c(l, m)[k];
  return u;
}

GeneralizedZero generalized_zero_col1(const HBMatrix& hb) {
  std::vector<BiForm> col{hb.phi[0][0], hb.phi[1][0], hb.phi[2][0]};
  GeneralizedZero gz;
  gz.mu1 = static_cast<int>(rank(coeff_matrix(hb.f, hb.d1, col)));
  gz.has_gz = gz.mu1 <= 2;
  return gz;
}

CoeffC coeff_C(const HBMatrix& hb) {
  if (hb.d1 != hb.d2) throw Error("coeff_C requires d1 = d2");
  CoeffC C(hb.d1 + 1);
  for (int l = 0; l <= hb.d1; ++l) C[l] = {hb.c(l, 1), hb.c(l, 2)};
  return C;
}

RawPhi raw_from_C(Field f, const CoeffC& C) {
  if (C.size() < 2) throw Error("C needs at least two rows");
  int n = static_cast<int>(C.size()) - 1;
  RawPhi raw;
  raw.f = f;
  raw.deg = {n, n};
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 2; ++m) {
      BiForm e(f);
      for (int l = 0; l <= n; ++l) e.add_term({static_cast<std::uint8_t>(l), static_cast<std::uint8_t>(n - l)}, C[l][m][j]);
      raw.e[j][m] = std::move(e);
    }
  return raw;
}

HBMatrix phi_from_C(Field f, const CoeffC& C) { return validate(raw_from_C(f, C)); }

int mu_I2C(Field f, const CoeffC& C) {
  std::vector<Vec> rows;
  const std::size_t n = C.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      SPoly minor = lin_to_spoly(f, C[a][0]) * lin_to_spoly(f, C[b][1]) -
                    lin_to_spoly(f, C[b][0]) * lin_to_spoly(f, C[a][1]);
      Vec v(6, 0);
      for (const auto& [e, c] : minor.terms()) v[Strand::t_index(2, e)] = c;
      rows.push_back(std::move(v));
    }
  if (rows.empty()) return 0;
  return static_cast<int>(rank(Matrix::from_columns(f, 6, rows)));
}

int mu_I2C(const HBMatrix& hb) { return mu_I2C(hb.f, coeff_C(hb)); }

int mu_I1(const HBMatrix& hb) {
  if (hb.d1 != hb.d2) throw Error("mu_I1 requires d1 = d2");
  std::vector<BiForm> all;
  for (const auto& row : hb.phi)
    for (const auto& e : row) all.push_back(e);
  return static_cast<int>(rank(coeff_matrix(hb.f, hb.d1, all)));
}

std::string shape_name(CanonicalShape s) {
  return s == CanonicalShape::X2Y2_XY ? "X2Y2_XY" : "Y2_X2";
}

std::optional<CanonicalShape> canonical_shape(const HBMatrix& hb) {
  if (hb.d1 != 2) return std::nullopt;
  const Field& f = hb.f;
  BiForm x2 = xy_monomial(f, 2, 0), y2 = xy_monomial(f, 0, 2), xy = xy_monomial(f, 1, 1);
  const auto& p = hb.phi;
  if (!p[2][0].is_zero()) return std::nullopt;
  if (p[0][0] == x2 + y2 && p[1][0] == xy) return CanonicalShape::X2Y2_XY;
  if (p[0][0] == y2 && p[1][0] == x2) return CanonicalShape::Y2_X2;
  return std::nullopt;
}

RawPhi apply_transform(const RawPhi& raw, const ColumnTransform& t) {
  RawPhi out;
  out.f = raw.f;
  out.deg = raw.deg;
  std::array<std::array<BiForm, 2>, 3> sub;
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 2; ++m) sub[j][m] = change_xy(raw.e[j][m], t.xy);
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 2; ++m) {
      BiForm e(raw.f);
      for (int k = 0; k < 3; ++k) e += sub[k][m].scaled(t.rows(j, k));
      out.e[j][m] = std::move(e);
    }
  return out;
}

namespace {

using Quad = std::array<Elem, 3>;  // coefficients of y^2, xy, x^2

// Writes a degenerate quadratic as scale * (lx x + ly y)^2.
void square_root_of_degenerate(const Field& f, const Quad& q, Elem& scale, Elem& lx, Elem& ly) {
  if (q[2]) {
    scale = q[2];
    lx = 1;
    ly = f.div(q[1], f.mul(2, q[2]));
  } else {
    scale = q[0];
    lx = 0;
    ly = 1;
  }
}

std::array<Elem, 4> compose_xy(const Field& f, const std::array<Elem, 4>& a, const std::array<Elem, 4>& b) {
  return {f.add(f.mul(a[0], b[0]), f.mul(a[1], b[2])), f.add(f.mul(a[0], b[1]), f.mul(a[1], b[3])),
          f.add(f.mul(a[2], b[0]), f.mul(a[3], b[2])), f.add(f.mul(a[2], b[1]), f.mul(a[3], b[3]))};
}

// Transform taking [y^2, x^2, 0] to [x^2 + y^2, xy, 0]: y -> x + y, x -> x - y,
// then rows (r0 + r1) / 2 and (r0 - r1) / 4.
ColumnTransform y2x2_to_x2y2xy(const Field& f) {
  ColumnTransform t;
  t.rows = Matrix(f, 3, 3);
  Elem half = f.inv(2), quarter = f.inv(4);
  t.rows(0, 0) = half;
  t.rows(0, 1) = half;
  t.rows(1, 0) = quarter;
  t.rows(1, 1) = f.neg(quarter);
  t.rows(2, 2) = 1;
  t.xy = {1, f.neg(1), 1, 1};
  return t;
}

ColumnTransform compose(const Field& f, const ColumnTransform& first, const ColumnTransform& second) {
  // second(first(phi)) = R2 * R1 * phi(L1 L2)
  ColumnTransform t;
  t.rows = second.rows * first.rows;
  t.xy = compose_xy(f, first.xy, second.xy);
  return t;
}

}  // namespace

Canonicalized canonicalize_col1(const HBMatrix& hb, std::optional<CanonicalShape> prefer) {
  if (hb.d1 != 2) throw Error("canonicalize_col1 requires d1 = 2");
  if (!generalized_zero_col1(hb).has_gz) throw Error("canonicalize_col1 requires a generalized zero in column 1");
  const Field& f = hb.f;

  if (auto s = canonical_shape(hb); s && (!prefer || *prefer == *s))
    return {hb, *s, ColumnTransform{Matrix::identity(f, 3), {1, 0, 0, 1}}};

  // Row operation putting 0 in the third slot of column 1.
  std::vector<BiForm> col{hb.phi[0][0], hb.phi[1][0], hb.phi[2][0]};
  Matrix K = coeff_matrix(f, 2, col);
  std::vector<Vec> left = kernel_basis(K.transpose());
  Vec v = left.front();
  Matrix P(f, 3, 3);
  int pivot = v[2] ? 2 : v[1] ? 1 : 0;
  for (int r = 0, k = 0; k < 3; ++k)
    if (k != pivot) P(r++, k) = 1;
  for (int k = 0; k < 3; ++k) P(2, k) = v[k];

  Quad a{0, 0, 0}, b{0, 0, 0};
  for (int w = 0; w <= 2; ++w)
    for (int k = 0; k < 3; ++k) {
      a[w] = f.add(a[w], f.mul(P(0, k), K(k, w)));
      b[w] = f.add(b[w], f.mul(P(1, k), K(k, w)));
    }

  // Discriminant of s*a + t*b as a binary quadratic A s^2 + B s t + C t^2.
  auto disc = [&](Elem s, Elem t) {
    Elem q0 = f.add(f.mul(s, a[0]), f.mul(t, b[0]));
    Elem q1 = f.add(f.mul(s, a[1]), f.mul(t, b[1]));
    Elem q2 = f.add(f.mul(s, a[2]), f.mul(t, b[2]));
    return f.sub(f.mul(q1, q1), f.mul(4, f.mul(q0, q2)));
  };
  Elem A = disc(1, 0), C = disc(0, 1);
  Elem B = f.sub(f.sub(disc(1, 1), A), C);
  std::array<std::pair<Elem, Elem>, 2> roots;
  if (A == 0) {
    if (B == 0) throw Error("pencil in column 1 is degenerate (entries share a factor)");
    roots = {{{1, 0}, {f.neg(C), B}}};
  } else {
    Elem D = f.sub(f.mul(B, B), f.mul(4, f.mul(A, C)));
    if (D == 0) throw Error("pencil in column 1 is degenerate (entries share a factor)");
    auto sq = sqrt_mod_p(f, D);
    if (!sq) throw Error("extension required: the pencil's degenerate members are not defined over F_p");
    Elem inv2A = f.inv(f.mul(2, A));
    roots = {{{f.mul(f.add(f.neg(B), *sq), inv2A), 1}, {f.mul(f.sub(f.neg(B), *sq), inv2A), 1}}};
  }

  // Degenerate members e_k = scale_k * l_k^2; send l_1 -> y and l_2 -> x.
  std::array<Elem, 2> scale, lx, ly;
  for (int k = 0; k < 2; ++k) {
    auto [s, t] = roots[k];
    Quad q{};
    for (int w = 0; w <= 2; ++w) q[w] = f.add(f.mul(s, a[w]), f.mul(t, b[w]));
    square_root_of_degenerate(f, q, scale[k], lx[k], ly[k]);
    if (!scale[k]) throw Error("internal error: zero member of the pencil");
  }
  // (x', y') = M (x, y) with M = [[lx2, ly2], [lx1, ly1]]; substitute (x, y) = M^-1 (x', y').
  Elem det = f.sub(f.mul(lx[1], ly[0]), f.mul(ly[1], lx[0]));
  if (!det) throw Error("internal error: degenerate members are proportional");
  Elem di = f.inv(det);
  ColumnTransform t;
  t.xy = {f.mul(ly[0], di), f.neg(f.mul(ly[1], di)), f.neg(f.mul(lx[0], di)), f.mul(lx[1], di)};
  Matrix Q(f, 3, 3);
  for (int k = 0; k < 2; ++k) {
    Elem inv_scale = f.inv(scale[k]);
    Q(k, 0) = f.mul(roots[k].first, inv_scale);
    Q(k, 1) = f.mul(roots[k].second, inv_scale);
  }
  Q(2, 2) = 1;
  t.rows = Q * P;

  CanonicalShape target = prefer.value_or(CanonicalShape::Y2_X2);
  if (target == CanonicalShape::X2Y2_XY) t = compose(f, t, y2x2_to_x2y2xy(f));

  HBMatrix out = validate(apply_transform(hb.raw(), t));
  auto reached = canonical_shape(out);
  if (!reached || *reached != target) throw Error("internal error: canonicalization did not reach the target shape");
  return {out, target, t};
}

}  // namespace rees
