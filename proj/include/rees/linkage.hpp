#pragma once

#include <vector>

#include "rees/hb.hpp"
#include "rees/polyring.hpp"

namespace rees {

template <typename T>
using Grid = std::vector<std::vector<T>>;

// Psi_l = [Lambda_l | Xi_l], with [g1 g2] = [y^l, x y^(l-1), ..., x^l] * Xi_l.
struct PsiMatrix {
  int ell = 0;
  Grid<BiForm> lambda;  // (l+1) x l
  Grid<BPoly> xi;       // (l+1) x 2
  Grid<BPoly> psi() const;
};

// Bidiagonal: -x on the diagonal, y just below it.
Grid<BiForm> lambda_matrix(Field f, int ell);

// Monomial x^w y^(d_m - w) of g_m goes to row min(w, l).
Grid<BPoly> xi_matrix(const HBMatrix& hb, int ell);

PsiMatrix psi_matrix(const HBMatrix& hb, int ell);

// Maximal minors of Psi_(d-1-i) containing both Xi columns, one per deleted
// Lambda column; bidegree (i, 2). Requires d2 - 1 <= i <= delta.
std::vector<BPoly> delta_minors(const HBMatrix& hb, int i);

// det Xi_1, bidegree (delta, 2).
BPoly sylvester_form(const HBMatrix& hb);

}  // namespace rees
