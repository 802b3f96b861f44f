#include "rees/linkage.hpp"

namespace rees {

Grid<BPoly> PsiMatrix::psi() const {
  Grid<BPoly> out;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    std::vector<BPoly> row;
    for (const BiForm& e : lambda[r]) row.push_back(to_b(e));
    for (const BPoly& e : xi[r]) row.push_back(e);
    out.push_back(std::move(row));
  }
  return out;
}

Grid<BiForm> lambda_matrix(Field f, int ell) {
  if (ell < 1) throw Error("lambda_matrix: l must be at least 1");
  Grid<BiForm> m(ell + 1, std::vector<BiForm>(ell, BiForm(f)));
  for (int k = 0; k < ell; ++k) {
    m[k][k] = xy_monomial(f, 1, 0, f.neg(1));
    m[k + 1][k] = xy_monomial(f, 0, 1);
  }
  return m;
}

Grid<BPoly> xi_matrix(const HBMatrix& hb, int ell) {
  if (ell < 1 || ell > hb.d1) throw Error("xi_matrix: need 1 <= l <= d1");
  const Field& f = hb.f;
  Grid<BPoly> xi(ell + 1, std::vector<BPoly>(2, BPoly(f)));
  for (int m = 1; m <= 2; ++m) {
    const int dm = hb.deg(m);
    for (int w = 0; w <= dm; ++w) {
      int a = std::min(w, ell);
      BPoly mono = to_b(xy_monomial(f, w - a, dm - w - ell + a));
      xi[a][m - 1] += mono * to_b(hb.cs(w, m));
    }
  }
  return xi;
}

PsiMatrix psi_matrix(const HBMatrix& hb, int ell) {
  return PsiMatrix{ell, lambda_matrix(hb.f, ell), xi_matrix(hb, ell)};
}

std::vector<BPoly> delta_minors(const HBMatrix& hb, int i) {
  if (i < hb.d2 - 1 || i > hb.delta) throw Error("delta_minors: need d2 - 1 <= i <= delta");
  const Field& f = hb.f;
  const int ell = hb.d - 1 - i;
  PsiMatrix P = psi_matrix(hb, ell);
  const int rows = ell + 1;
  std::vector<BPoly> out;
  for (int drop = 0; drop < ell; ++drop) {
    BPoly minor(f);
    // Laplace expansion along the two Xi columns (the last two columns).
    for (int r1 = 0; r1 < rows; ++r1)
      for (int r2 = r1 + 1; r2 < rows; ++r2) {
        BPoly top = P.xi[r1][0] * P.xi[r2][1] - P.xi[r2][0] * P.xi[r1][1];
        if (top.is_zero()) continue;
        Grid<BiForm> rest;
        for (int r = 0; r < rows; ++r) {
          if (r == r1 || r == r2) continue;
          std::vector<BiForm> row;
          for (int c = 0; c < ell; ++c)
            if (c != drop) row.push_back(P.lambda[r][c]);
          rest.push_back(std::move(row));
        }
        BiForm cof = det_poly<2>(f, rest);
        if (cof.is_zero()) continue;
        // columns ell-1, ell of the square minor; sign (-1)^(r1 + r2 + 2 ell - 1)
        BPoly term = top * to_b(cof);
        if ((r1 + r2) % 2 == 0) minor -= term; else minor += term;
      }
    out.push_back(std::move(minor));
  }
  return out;
}

BPoly sylvester_form(const HBMatrix& hb) { return delta_minors(hb, hb.delta).front(); }

}  // namespace rees
