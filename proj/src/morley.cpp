#include "rees/morley.hpp"

#include <algorithm>
#include <optional>

namespace rees {

namespace {

enum TensorVar { X1 = 0, Y1 = 1, X2 = 2, Y2 = 3 };

TensorPoly tensor_xy(Field f, int x1, int y1, int x2, int y2) {
  Exp<7> e{};
  e[X1] = static_cast<std::uint8_t>(x1);
  e[Y1] = static_cast<std::uint8_t>(y1);
  e[X2] = static_cast<std::uint8_t>(x2);
  e[Y2] = static_cast<std::uint8_t>(y2);
  return TensorPoly::monomial(f, e);
}

TensorPoly tensor_of(const SPoly& s) {
  TensorPoly out(s.field());
  for (const auto& [e, c] : s.terms()) {
    Exp<7> t{};
    for (int k = 0; k < 3; ++k) t[4 + k] = e[k];
    out.add_term(t, c);
  }
  return out;
}

TensorPoly tensor_embed(const BPoly& F, int xslot, int yslot) {
  TensorPoly out(F.field());
  for (const auto& [e, c] : F.terms()) {
    Exp<7> t{};
    t[xslot] = e[0];
    t[yslot] = e[1];
    for (int k = 0; k < 3; ++k) t[4 + k] = e[2 + k];
    out.add_term(t, c);
  }
  return out;
}

// s * x^a y^b as an element of B.
BPoly xys(const SPoly& s, int a, int b) {
  if (a < 0 || b < 0) throw Error("negative exponent in x^a y^b");
  return to_b(xy_monomial(s.field(), a, b)) * to_b(s);
}

SPoly u_var(Field f, int k) { return SPoly::var(f, k); }

// Bracket of the closed form: sum over S1 of c_(l,1) c_(m,2) minus sum over S2 of c_(m,1) c_(l,2).
SPoly morley_bracket(const HBMatrix& hb, int i, int beta, int w) {
  SPoly acc(hb.f);
  for (int l = beta + 1; l <= hb.d1; ++l) {
    int m = w + 1 + beta - l;
    if (m >= 0 && m <= hb.d2 - i - 1 + w) acc += hb.cs(l, 1) * hb.cs(m, 2);
  }
  for (int l = beta + 1; l <= hb.d2; ++l) {
    int m = w + 1 + beta - l;
    if (m >= 0 && m <= hb.d1 - i - 1 + w) acc -= hb.cs(m, 1) * hb.cs(l, 2);
  }
  return acc;
}

void check_i(const HBMatrix& hb, int i) {
  if (i < 0 || i > hb.delta) throw Error("q_forms: need 0 <= i <= delta");
}

// Coefficient vector of a vector of forms of degree e in U = k[T1, T2].
Vec u_coords(const std::vector<SPoly>& v, int e) {
  Vec out(v.size() * static_cast<std::size_t>(e + 1), 0);
  for (std::size_t r = 0; r < v.size(); ++r)
    for (const auto& [x, c] : v[r].terms()) {
      if (x[2] != 0 || x[0] + x[1] != e) throw Error("catalog entry is not a form of the expected degree in T1, T2");
      out[r * (e + 1) + x[0]] = c;
    }
  return out;
}

SPoly u_mono(Field f, int a, int b) { return SPoly::monomial(f, Exp<3>{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), 0}); }

std::vector<SPoly> apply(const Grid<SPoly>& m, const std::vector<SPoly>& v, Field f) {
  std::vector<SPoly> out;
  for (const auto& row : m) {
    SPoly s(f);
    for (std::size_t c = 0; c < row.size(); ++c) s += row[c] * v[c];
    out.push_back(std::move(s));
  }
  return out;
}

Grid<SPoly> banded(Field f, int ell, const std::array<SPoly, 3>& band) {
  if (ell < 3) throw Error("catalog matrices need l >= 3");
  Grid<SPoly> m(ell - 2, std::vector<SPoly>(ell, SPoly(f)));
  for (int r = 0; r < ell - 2; ++r)
    for (int k = 0; k < 3; ++k) m[r][r + k] = band[k];
  return m;
}

}  // namespace

TensorPoly tensor_left(const BPoly& F) { return tensor_embed(F, X1, Y1); }
TensorPoly tensor_right(const BPoly& F) { return tensor_embed(F, X2, Y2); }

TensorGrid h_matrix(const HBMatrix& hb) {
  const Field& f = hb.f;
  TensorGrid H{{{TensorPoly(f), TensorPoly(f)}, {TensorPoly(f), TensorPoly(f)}}};
  for (int m = 1; m <= 2; ++m) {
    const int dm = hb.deg(m);
    for (int l = 1; l <= dm; ++l) {
      TensorPoly c = tensor_of(hb.cs(l, m));
      for (int beta = 0; beta < l; ++beta) H[0][m - 1] += c * tensor_xy(f, l - 1 - beta, 0, beta, dm - l);
    }
    for (int lambda = 0; lambda < dm; ++lambda) {
      TensorPoly c = tensor_of(hb.cs(lambda, m));
      for (int gamma = 0; gamma < dm - lambda; ++gamma)
        H[1][m - 1] += c * tensor_xy(f, lambda, dm - lambda - 1 - gamma, 0, gamma);
    }
  }
  return H;
}

bool h_identity_holds(const HBMatrix& hb) {
  const Field& f = hb.f;
  TensorGrid H = h_matrix(hb);
  TensorPoly dx = tensor_xy(f, 1, 0, 0, 0) - tensor_xy(f, 0, 0, 1, 0);
  TensorPoly dy = tensor_xy(f, 0, 1, 0, 0) - tensor_xy(f, 0, 0, 0, 1);
  for (int m = 1; m <= 2; ++m) {
    TensorPoly lhs = tensor_left(hb.gm(m)) - tensor_right(hb.gm(m));
    if (lhs != dx * H[0][m - 1] + dy * H[1][m - 1]) return false;
  }
  return true;
}

TensorPoly morley_delta_closed_form(const HBMatrix& hb) {
  const Field& f = hb.f;
  TensorPoly out(f);
  for (int i = 0; i <= hb.delta; ++i)
    for (int beta = 0; beta <= hb.delta - i; ++beta)
      for (int w = 0; w <= i; ++w) {
        SPoly b = morley_bracket(hb, i, beta, w);
        if (!b.is_zero()) out += tensor_of(b) * tensor_xy(f, w, i - w, beta, hb.delta - i - beta);
      }
  return out;
}

bool morley_delta_check(const HBMatrix& hb) {
  TensorGrid H = h_matrix(hb);
  TensorPoly det = H[0][0] * H[1][1] - H[0][1] * H[1][0];
  return det == morley_delta_closed_form(hb);
}

MorleyQTable q_forms(const HBMatrix& hb, int i) {
  check_i(hb, i);
  MorleyQTable t{i, {}};
  for (int beta = 0; beta <= hb.delta - i; ++beta) {
    BPoly q(hb.f);
    for (int w = 0; w <= i; ++w) q += xys(morley_bracket(hb, i, beta, w), w, i - w);
    t.q.push_back(std::move(q));
  }
  return t;
}

MorleyQTable q_forms_d1_2(const HBMatrix& hb, int i) {
  if (hb.d1 != 2) throw Error("q_forms_d1_2: need d1 = 2");
  if (i < 1 || i > hb.d2 - 1) throw Error("q_forms_d1_2: need 1 <= i <= d2 - 1");
  const int d2 = hb.d2;
  auto c1 = [&](int l) { return hb.cs(l, 1); };
  auto c2 = [&](int l) { return hb.cs(l, 2); };
  MorleyQTable t{i, {}};
  for (int beta = 0; beta <= d2 - i; ++beta) {
    BPoly q(hb.f);
    if (beta == 0) {
      for (int w = 0; w <= i; ++w) q += xys(c1(1) * c2(w), w, i - w);
      for (int w = 1; w <= i; ++w) q += xys(c1(2) * c2(w - 1), w, i - w);
    }
    if (beta == 1)
      for (int w = 0; w <= i; ++w) q += xys(c1(2) * c2(w), w, i - w);
    if (beta <= d2 - i - 1) q -= xys(c1(0) * c2(i + 1 + beta), i, 0);
    q -= xys(c1(1) * c2(i + beta), i, 0);
    q -= xys(c1(0) * c2(i + beta), i - 1, 1);
    t.q.push_back(std::move(q));
  }
  return t;
}

std::string shape_name(CatalogShape s) { return s == CatalogShape::A ? "A" : "frakA"; }

Grid<SPoly> a_matrix(Field f, int ell) { return banded(f, ell, {u_var(f, 0), u_var(f, 1), u_var(f, 0)}); }

Grid<SPoly> frak_a_matrix(Field f, int ell) { return banded(f, ell, {u_var(f, 0), SPoly(f), u_var(f, 1)}); }

Grid<SPoly> b_matrix(Field f, int k) {
  if (k < 2) throw Error("b_matrix: need k >= 2");
  Grid<SPoly> m(k - 1, std::vector<SPoly>(k, SPoly(f)));
  std::array<SPoly, 3> band{u_var(f, 0), u_var(f, 1), u_var(f, 0)};
  for (int r = 0; r < k - 1; ++r)
    for (int j = 0; j < 3 && r + j < k; ++j) m[r][r + j] = band[j];
  return m;
}

Grid<SPoly> dagger(const Grid<SPoly>& m) {
  Grid<SPoly> out(m.rbegin(), m.rend());
  for (auto& row : out) std::reverse(row.begin(), row.end());
  return out;
}

std::vector<SPoly> signed_minors(Field f, const Grid<SPoly>& m) {
  const std::size_t n = m.empty() ? 1 : m.front().size();
  if (m.size() + 1 != n) throw Error("signed_minors: need an (n-1) x n matrix");
  std::vector<SPoly> out;
  for (std::size_t drop = 0; drop < n; ++drop) {
    Grid<SPoly> sq;
    for (const auto& row : m) {
      std::vector<SPoly> r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != drop) r.push_back(row[c]);
      sq.push_back(std::move(r));
    }
    SPoly d = det_poly<3>(f, sq);
    out.push_back(drop % 2 ? -d : d);
  }
  return out;
}

SyzygyCatalog syzygy_catalog(Field f, int ell, CatalogShape shape) {
  if (ell < 3) throw Error("syzygy_catalog: need l >= 3");
  SyzygyCatalog cat;
  cat.ell = ell;
  cat.shape = shape;
  const SPoly T1 = u_var(f, 0), T2 = u_var(f, 1), zero(f);
  const int k = ell / 2;
  const bool odd = ell % 2 == 1;
  cat.twists = odd ? std::vector<int>{k, k + 1} : std::vector<int>{k, k};

  if (shape == CatalogShape::A) {
    cat.matrix = a_matrix(f, ell);
    if (ell == 3) {
      // the odd-l pattern with m_1 = 1 and (M_1, M_2) = (T1, -T2) from B_2^dagger = [T2 T1]
      cat.columns = {{SPoly::constant(f, 1), zero, SPoly::constant(f, f.neg(1))}, {zero, T1, -T2}};
      return cat;
    }
    // m_1..m_k from B_k, stored 0-based
    std::vector<SPoly> m = signed_minors(f, b_matrix(f, k));
    std::vector<SPoly> first, second;
    if (!odd) {
      for (int j = 0; j < k; ++j) first.push_back(m[j]);
      first.push_back(zero);
      for (int j = k - 1; j >= 1; --j) first.push_back(-m[j]);
      for (int j = 1; j < k; ++j) second.push_back(-m[j]);
      second.push_back(zero);
      for (int j = k - 1; j >= 0; --j) second.push_back(m[j]);
    } else {
      std::vector<SPoly> M = signed_minors(f, dagger(b_matrix(f, k + 1)));
      for (int j = 0; j < k; ++j) first.push_back(m[j]);
      first.push_back(zero);
      for (int j = k - 1; j >= 0; --j) first.push_back(-m[j]);
      for (int j = k - 2; j >= 0; --j) second.push_back(-M[j]);
      second.push_back(zero);
      for (int j = 0; j <= k; ++j) second.push_back(M[j]);
    }
    cat.columns = {first, second};
    return cat;
  }

  cat.matrix = frak_a_matrix(f, ell);
  // kappa_alpha placed in Sym_(l-1) V; position = exponent of s.
  auto kappa = [&](int alpha, int s_shift) {
    std::vector<SPoly> col(ell, zero);
    for (int b = 0; b <= alpha; ++b) {
      SPoly coef = T2.pow(alpha - b) * (-T1).pow(b);
      col[2 * b + s_shift] += coef;
    }
    return col;
  };
  if (odd)
    cat.columns = {kappa(k - 1, 1), kappa(k, 0)};  // s t kappa_(k-1), kappa_k
  else
    cat.columns = {kappa(k - 1, 1), kappa(k - 1, 0)};  // s kappa_(k-1), t kappa_(k-1)
  return cat;
}

bool catalog_is_complex(const SyzygyCatalog& cat) {
  const Field f = cat.matrix.front().front().field();
  for (const auto& col : cat.columns)
    for (const SPoly& e : apply(cat.matrix, col, f))
      if (!e.is_zero()) return false;
  return true;
}

std::size_t catalog_kernel_dim(const SyzygyCatalog& cat, int e) {
  const Field f = cat.matrix.front().front().field();
  const std::size_t n = static_cast<std::size_t>(cat.ell) * (e + 1);
  std::vector<Vec> images;
  for (int c = 0; c < cat.ell; ++c)
    for (int a = 0; a <= e; ++a) {
      std::vector<SPoly> v(cat.ell, SPoly(f));
      v[c] = u_mono(f, a, e - a);
      images.push_back(u_coords(apply(cat.matrix, v, f), e + 1));
    }
  return n - rank(Matrix::from_columns(f, images.front().size(), images));
}

std::size_t catalog_span_dim(const SyzygyCatalog& cat, int e) {
  const Field f = cat.matrix.front().front().field();
  EchelonBasis span(f, static_cast<std::size_t>(cat.ell) * (e + 1));
  for (std::size_t c = 0; c < cat.columns.size(); ++c) {
    int shift = e - (cat.twists[c] - 1);
    for (int a = 0; a <= shift; ++a) {
      std::vector<SPoly> v;
      for (const SPoly& s : cat.columns[c]) v.push_back(s * u_mono(f, a, shift - a));
      span.insert(u_coords(v, e));
    }
  }
  return span.dim();
}

int catalog_kernel_rank(const SyzygyCatalog& cat) {
  const int e = cat.ell + 1;
  return static_cast<int>(catalog_kernel_dim(cat, e + 1)) - static_cast<int>(catalog_kernel_dim(cat, e));
}

BPoly nu1(const HBMatrix& hb, int i, const std::vector<SPoly>& chi) {
  if (i < hb.d1 - 1 || i > hb.d2 - 2) throw Error("nu1: need d1 - 1 <= i <= d2 - 2");
  const std::size_t len = static_cast<std::size_t>(hb.delta - i + 1);
  if (chi.size() != len) throw Error("nu1: chi must have length delta - i + 1");
  const int n = hb.d2 - i - 1;
  LinMatrix ups = upsilon(hb, n, 1);
  for (int r = 0; r < n; ++r) {
    SPoly s(hb.f);
    for (std::size_t c = 0; c < len; ++c) s += ups.entry(c, r) * chi[c];
    if (!s.is_zero()) throw Error("nu1: chi is not a syzygy of the transposed Upsilon matrix");
  }
  MorleyQTable t = q_forms(hb, i);
  BPoly out(hb.f);
  for (std::size_t b = 0; b < len; ++b) out += t.q[b] * to_b(chi[b]);
  return out;
}

namespace {

CanonicalShape goal5_shape(const HBMatrix& hb) {
  if (hb.d1 != 2 || hb.d2 <= 2)
    throw Error("explicit generators require d1 = 2 < d2 and a generalized zero in column 1");
  auto shape = canonical_shape(hb);
  if (!shape) throw Error("explicit generators require a canonical first column; run canonicalize_col1 first");
  return *shape;
}

struct Goal5Context {
  const HBMatrix& hb;
  SPoly T1, T2;
  SPoly c(int w) const { return hb.cs(w, 2); }
  BPoly x(const SPoly& s) const { return xys(s, 1, 0); }
  BPoly y(const SPoly& s) const { return xys(s, 0, 1); }
};

// Case (1.a): 1 <= i <= d2 - 4, d2 - i even.
BPoly case_1a(const Goal5Context& g, int i) {
  const int d2 = g.hb.d2, K = (d2 - i) / 2;
  std::vector<SPoly> m = signed_minors(g.hb.f, b_matrix(g.hb.f, K));
  auto mb = [&](int b) { return m[b - 1]; };
  BPoly out(g.hb.f);
  for (int w = 0; w <= i; ++w) out += xys(g.T2 * g.c(w) * mb(1), w, i - w);
  for (int w = 1; w <= i; ++w) out += xys(g.T1 * g.c(w - 1) * mb(1), w, i - w);
  for (int w = 0; w <= i; ++w) out += xys(g.T1 * g.c(w) * mb(2), w, i - w);
  SPoly inner(g.hb.f);
  for (int b = 2; b <= K; ++b) inner += g.c(d2 + 2 - b) * mb(b);
  for (int b = 1; b <= K; ++b) inner -= g.c(b + i) * mb(b);
  out += xys(g.T1 * inner, i, 0);
  SPoly diff(g.hb.f);
  for (int b = 1; b <= K; ++b) diff += (g.c(d2 + 1 - b) - g.c(b + i - 1)) * mb(b);
  out += xys(g.T2 * diff, i, 0) + xys(g.T1 * diff, i - 1, 1);
  return out;
}

// Case (1.a'): i = d2 - 2.
BPoly case_1a_prime(const Goal5Context& g) {
  const int d2 = g.hb.d2, i = d2 - 2;
  BPoly out(g.hb.f);
  for (int w = 0; w <= d2 - 3; ++w) out += xys(g.T2 * g.c(w), w, i - w);
  for (int w = 1; w <= d2 - 2; ++w) out += xys(g.T1 * g.c(w - 1), w, i - w);
  out -= xys(g.T1 * g.c(d2 - 1), d2 - 2, 0);
  out -= xys(g.T1 * g.c(d2 - 2), d2 - 3, 1);
  out += xys(g.T2 * g.c(d2), d2 - 2, 0);
  out += xys(g.T1 * g.c(d2), d2 - 3, 1);
  return out;
}

// Case (1.b): i = 1, d2 odd.
BPoly case_1b(const Goal5Context& g) {
  const Field& f = g.hb.f;
  const int d2 = g.hb.d2, K = (d2 + 1) / 2;
  std::vector<SPoly> M = signed_minors(f, dagger(b_matrix(f, K)));
  auto Mb = [&](int b) { return M[b - 1]; };
  const SPoly &T1 = g.T1, &T2 = g.T2;
  BPoly out(f);
  if (d2 == 3) out += (g.y(T1 * g.c(0)) + g.x(T1 * g.c(1))) * to_b(Mb(1));
  if (d2 >= 5) out -= (g.y(T2 * g.c(0)) + g.x(T2 * g.c(1)) + g.x(T1 * g.c(0))) * to_b(Mb((d2 - 3) / 2));
  if (d2 >= 7) out -= (g.y(T1 * g.c(0)) + g.x(T1 * g.c(1))) * to_b(Mb((d2 - 5) / 2));
  for (int b = 1; b <= (d2 - 1) / 2; ++b) out -= g.x(T1 * g.c((d2 + 1) / 2 + b) * Mb(b));
  for (int b = 1; b <= (d2 - 3) / 2; ++b)
    out += (g.x(T1 * g.c((d2 + 1) / 2 - b)) + g.x(T2 * g.c((d2 - 1) / 2 - b)) + g.y(T1 * g.c((d2 - 1) / 2 - b))) *
           to_b(Mb(b));
  for (int b = 1; b <= (d2 + 1) / 2; ++b)
    out -= (g.x(T2 * g.c((d2 - 1) / 2 + b)) + g.y(T1 * g.c((d2 - 1) / 2 + b))) * to_b(Mb(b));
  return out;
}

// Case (1.c): i = 1, d2 even; returns g and g'.
std::pair<BPoly, BPoly> case_1c(const Goal5Context& g) {
  const Field& f = g.hb.f;
  const int d2 = g.hb.d2, K = d2 / 2;
  std::vector<SPoly> m = signed_minors(f, b_matrix(f, K));
  auto mb = [&](int b) { return to_b(m[b - 1]); };
  const SPoly &T1 = g.T1, &T2 = g.T2;
  BPoly lead = g.y(T2 * g.c(0)) + g.x(T2 * g.c(1)) + g.x(T1 * g.c(0));
  BPoly pair = g.y(T1 * g.c(0)) + g.x(T1 * g.c(1));
  BPoly first = lead * mb(1) + pair * mb(2);
  for (int b = 1; b <= K; ++b) first -= (g.x(T1 * g.c(1 + b)) + g.x(T2 * g.c(b)) + g.y(T1 * g.c(b))) * mb(b);
  for (int b = 3; b <= K; ++b) first += g.x(T1 * g.c(d2 + 3 - b)) * mb(b);
  for (int b = 2; b <= K; ++b) first += (g.x(T2 * g.c(d2 + 2 - b)) + g.y(T1 * g.c(d2 + 2 - b))) * mb(b);

  BPoly second = -(lead * mb(2));
  if (d2 >= 6) second -= pair * mb(3);
  for (int b = 2; b <= K; ++b)
    second += (g.x(T1 * g.c(b)) + g.x(T2 * g.c(b - 1)) + g.y(T1 * g.c(b - 1)) - g.x(T1 * g.c(d2 - b + 2))) * mb(b);
  for (int b = 1; b <= K; ++b) second -= (g.x(T2 * g.c(1 + d2 - b)) + g.y(T1 * g.c(1 + d2 - b))) * mb(b);
  return {first, second};
}

SPoly alt_power(const Goal5Context& g, int lambda, int total) {
  return (-g.T1).pow(lambda) * g.T2.pow(total - lambda);
}

// Case (2.a): 1 <= i <= d2 - 2, d2 - i even.
BPoly case_2a(const Goal5Context& g, int i) {
  const int K = (g.hb.d2 - i) / 2;
  BPoly out(g.hb.f);
  for (int w = 0; w <= i; ++w) out += xys(g.c(w) * g.T2.pow(K), w, i - w);
  for (int l = 1; l <= K; ++l) {
    SPoly p = alt_power(g, l, K);
    out += xys(g.c(i + 2 * l - 1) * p, i - 1, 1) + xys(g.c(i + 2 * l) * p, i, 0);
  }
  return out;
}

// Case (2.b): i = 1, d2 odd.
BPoly case_2b(const Goal5Context& g) {
  const int h = (g.hb.d2 + 1) / 2;
  BPoly out(g.hb.f);
  for (int l = 1; l <= h; ++l) out += g.y(g.c(2 * l - 1) * alt_power(g, l, h));
  for (int l = 0; l <= h - 1; ++l) out += g.x(g.c(2 * l) * alt_power(g, l, h));
  return out;
}

// Case (2.c): i = 1, d2 even; returns g and g'.
std::pair<BPoly, BPoly> case_2c(const Goal5Context& g) {
  const int h = g.hb.d2 / 2;
  BPoly first(g.hb.f), second(g.hb.f);
  for (int l = 1; l <= h; ++l) first += g.y(g.c(2 * l - 1) * alt_power(g, l, h));
  for (int l = 0; l <= h; ++l) first += g.x(g.c(2 * l) * alt_power(g, l, h));
  for (int l = 0; l <= h; ++l) second += g.y(g.c(2 * l) * alt_power(g, l, h));
  for (int l = 0; l <= h - 1; ++l) second += g.x(g.c(1 + 2 * l) * alt_power(g, l, h));
  return {first, second};
}

// Bidegrees and labels of the family, in a fixed order shared by both routes.
struct Slot {
  std::string label;
  Bidegree bideg;
};

std::vector<Slot> goal5_slots(CanonicalShape shape, int d2) {
  const std::string p = shape == CanonicalShape::X2Y2_XY ? "1." : "2.";
  std::vector<Slot> out;
  for (int i = 1; i <= d2 - 2; ++i) {
    if ((d2 - i) % 2) continue;
    std::string label = p + "a";
    if (shape == CanonicalShape::X2Y2_XY && i == d2 - 2) label += "'";
    out.push_back({label, {i, (d2 + 2 - i) / 2}});
  }
  if (d2 % 2) {
    out.push_back({p + "b", {1, (d2 + 3) / 2}});
  } else {
    out.push_back({p + "c", {1, (d2 + 2) / 2}});
    out.push_back({p + "c'", {1, (d2 + 2) / 2}});
  }
  return out;
}

}  // namespace

Goal5Generators goal5_generators(const HBMatrix& hb) {
  const CanonicalShape shape = goal5_shape(hb);
  Goal5Context g{hb, u_var(hb.f, 0), u_var(hb.f, 1)};
  const int d2 = hb.d2;
  Goal5Generators out{shape, {}};
  std::optional<std::pair<BPoly, BPoly>> pair;
  for (const Slot& s : goal5_slots(shape, d2)) {
    const int i = s.bideg.i;
    BPoly e(hb.f);
    if (s.label == "1.a") e = case_1a(g, i);
    else if (s.label == "1.a'") e = case_1a_prime(g);
    else if (s.label == "1.b") e = case_1b(g);
    else if (s.label == "2.a") e = case_2a(g, i);
    else if (s.label == "2.b") e = case_2b(g);
    else {
      if (!pair) pair = shape == CanonicalShape::X2Y2_XY ? case_1c(g) : case_2c(g);
      e = s.label.back() == '\'' ? pair->second : pair->first;
    }
    out.elements.push_back({s.label, s.bideg, std::move(e)});
  }
  return out;
}

Goal5Generators goal5_via_nu1(const HBMatrix& hb) {
  const CanonicalShape shape = goal5_shape(hb);
  const CatalogShape cshape = shape == CanonicalShape::X2Y2_XY ? CatalogShape::A : CatalogShape::FrakA;
  const int d2 = hb.d2;
  Goal5Generators out{shape, {}};
  for (const Slot& s : goal5_slots(shape, d2)) {
    const int i = s.bideg.i;
    SyzygyCatalog cat = syzygy_catalog(hb.f, d2 - i + 1, cshape);
    std::size_t col = 0;
    const char kind = s.label[2];
    const bool primed = s.label.back() == '\'' && kind == 'c';
    if (kind == 'b') col = 1;  // the higher-degree generator
    if (kind == 'c') {
      // g pairs with the first column for A; for frakA it pairs with t kappa.
      col = cshape == CatalogShape::A ? (primed ? 1 : 0) : (primed ? 0 : 1);
    }
    out.elements.push_back({s.label, s.bideg, nu1(hb, i, cat.columns[col])});
  }
  return out;
}

}  // namespace rees
