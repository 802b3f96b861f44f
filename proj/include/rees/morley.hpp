#pragma once

#include <array>
#include <string>
#include <vector>

#include "rees/hb.hpp"
#include "rees/linkage.hpp"
#include "rees/polyring.hpp"

namespace rees {

// B (x) B over S, encoded with variables (x(x)1, y(x)1, 1(x)x, 1(x)y, T1, T2, T3).
using TensorPoly = Poly<7>;
using TensorGrid = std::array<std::array<TensorPoly, 2>, 2>;

TensorPoly tensor_left(const BPoly& F);   // F (x) 1
TensorPoly tensor_right(const BPoly& F);  // 1 (x) F

// The 2x2 matrix H with
//   [g1(x)1 - 1(x)g1, g2(x)1 - 1(x)g2] = [x(x)1 - 1(x)x, y(x)1 - 1(x)y] H.
TensorGrid h_matrix(const HBMatrix& hb);
bool h_identity_holds(const HBMatrix& hb);

// Closed quadruple sum for det H.
TensorPoly morley_delta_closed_form(const HBMatrix& hb);
// det H equals the closed form as polynomials.
bool morley_delta_check(const HBMatrix& hb);

// Coefficients q_(beta, delta-i-beta), beta = 0..delta-i, each of bidegree (i, 2).
struct MorleyQTable {
  int i = 0;
  std::vector<BPoly> q;
};

MorleyQTable q_forms(const HBMatrix& hb, int i);
// Simplified coefficients for d1 = 2 and 1 <= i <= d2 - 1.
MorleyQTable q_forms_d1_2(const HBMatrix& hb, int i);

// Matrices over U = k[T1, T2].
enum class CatalogShape { A, FrakA };
std::string shape_name(CatalogShape s);

Grid<SPoly> a_matrix(Field f, int ell);       // rows [T1 T2 T1] shifted
Grid<SPoly> frak_a_matrix(Field f, int ell);  // rows [T1 0 T2] shifted
Grid<SPoly> b_matrix(Field f, int k);         // A_(k+1) without its last column
Grid<SPoly> dagger(const Grid<SPoly>& m);     // reverse rows and columns
// (-1)^(c+1) det(m without column c), c = 1..n, for an (n-1) x n matrix.
std::vector<SPoly> signed_minors(Field f, const Grid<SPoly>& m);

struct SyzygyCatalog {
  int ell = 0;
  CatalogShape shape = CatalogShape::A;
  Grid<SPoly> matrix;                       // (ell-2) x ell
  std::vector<std::vector<SPoly>> columns;  // two kernel generators of length ell
  std::vector<int> twists;                  // column c spans a copy of U(-twists[c])
};

SyzygyCatalog syzygy_catalog(Field f, int ell, CatalogShape shape);

// Every column is killed by the matrix.
bool catalog_is_complex(const SyzygyCatalog& cat);
// Dimension of the kernel of the matrix on U_e^ell.
std::size_t catalog_kernel_dim(const SyzygyCatalog& cat, int e);
// Dimension of the degree-e part of the submodule generated by the columns.
std::size_t catalog_span_dim(const SyzygyCatalog& cat, int e);
// Rank of the kernel, read off the growth of its Hilbert function.
int catalog_kernel_rank(const SyzygyCatalog& cat);

// q-row times chi, for a syzygy chi of the transpose of Upsilon_(d2-i-1, 1).
BPoly nu1(const HBMatrix& hb, int i, const std::vector<SPoly>& chi);

struct Goal5Element {
  std::string label;  // case label such as "1.c", primed for the second generator
  Bidegree bideg;
  BPoly element;
};

struct Goal5Generators {
  CanonicalShape shape;
  std::vector<Goal5Element> elements;
};

// Explicit generators of A_{>=1} for d1 = 2 < d2 with a canonical first column.
Goal5Generators goal5_generators(const HBMatrix& hb);
// The same list computed as nu1 of the catalog syzygies.
Goal5Generators goal5_via_nu1(const HBMatrix& hb);

}  // namespace rees
