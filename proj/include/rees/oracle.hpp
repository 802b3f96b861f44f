#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "rees/exactlin.hpp"
#include "rees/hb.hpp"
#include "rees/polyring.hpp"

namespace rees {

// Bidegree -> multiplicity.
using BidegreeMultiset = std::map<Bidegree, int>;

std::string to_string(const BidegreeMultiset& m);

// Relations (g1, g2) in B_(i,j), kept in fully reduced echelon form. The
// non-pivot columns ("standard monomials") give coordinates on Sym(I)_(i,j).
struct SymStrand {
  Strand strand;
  EchelonBasis relations;
  std::vector<std::size_t> standard;     // standard monomial columns
  std::vector<int> standard_pos;         // column -> position in `standard`, or -1

  std::size_t dim() const { return standard.size(); }
  // Sym coordinates of the class of a B-vector.
  Vec coords(const Vec& b) const;
  // B-vector supported on standard monomials representing the given class.
  Vec lift(const Vec& coords) const;
};

// A_(i,j) inside Sym(I)_(i,j): basis in Sym coordinates.
struct AStrand {
  Bidegree bideg;
  std::vector<Vec> basis;
  std::size_t dim() const { return basis.size(); }
};

struct ImplicitEquation {
  SPoly F;
  int r = 1;
  SPoly res;
};

enum class GeneratorKind { A_as_S_per_i, A_as_B, J_as_B };

struct Bounds {
  int imin = 0;
  int imax = -1;  // default delta + 1
  int jmax = 8;
};

// Brute-force ground truth by strand linear algebra. Results are cached per
// bidegree, so an Oracle instance is not safe to share between threads.
class Oracle {
 public:
  explicit Oracle(HBMatrix hb);

  const HBMatrix& hb() const { return hb_; }
  const Field& field() const { return hb_.f; }

  const SymStrand& sym_strand(int i, int j);
  std::size_t sym_dim(int i, int j) { return sym_strand(i, j).dim(); }

  const AStrand& a_strand(int i, int j);
  std::size_t a_dim(int i, int j) { return a_strand(i, j).dim(); }
  // Basis of A_(i,j) as polynomials supported on standard monomials.
  std::vector<BPoly> a_elements(int i, int j);

  // Basis of J_(i,j) as B-vectors.
  const std::vector<Vec>& j_strand(int i, int j);
  std::size_t j_dim(int i, int j) { return j_strand(i, j).size(); }

  BidegreeMultiset minimal_generators(GeneratorKind which, Bounds bounds = {});

  // Minimal generators of the submodule of Sym(I) generated by `seeds`
  // (B-module when with_xy, else S-module), restricted to the window.
  // `equals_a` reports whether it fills A at every bidegree in the window.
  struct SubmoduleReport {
    BidegreeMultiset generators;
    bool equals_a = true;
    bool inside_a = true;
  };
  SubmoduleReport generated_submodule(const std::vector<BPoly>& seeds, Bounds bounds, bool with_xy = true);

  ImplicitEquation resultant();

  bool pairing_injectivity(int i, int jmax);

  // Dimension of the span of the classes of `elements` in Sym(I)_(i,j).
  std::size_t sym_span_dim(const std::vector<BPoly>& elements, int i, int j);
  bool in_a(const BPoly& F, int i, int j);
  // Class of `a` is a nonzero scalar multiple of the class of `b` in Sym(I).
  bool proportional_in_sym(const BPoly& a, const BPoly& b, int i, int j);

 private:
  // Images of monomial columns of (i,j) under multiplication, reduced in the target strand.
  Vec sym_coords_of(const BPoly& F, int i, int j);
  int imax_default() const { return hb_.delta + 1; }

  HBMatrix hb_;
  std::map<Bidegree, std::unique_ptr<SymStrand>> sym_;
  std::map<Bidegree, std::unique_ptr<AStrand>> a_;
  std::map<Bidegree, std::vector<Vec>> j_;
  std::map<Exp<3>, BiForm> h_powers_;
  std::optional<ImplicitEquation> res_;
};

bool hilbert_series_check(const std::vector<int>& twists, int n);

// Monic r-th root of G when G is (unit) * F^r; nullopt otherwise. Needs p > r.
std::optional<SPoly> spoly_root(const SPoly& G, int r);

}  // namespace rees
