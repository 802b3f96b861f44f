#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rees/exactlin.hpp"

namespace rees {

template <int N>
using Exp = std::array<std::uint8_t, N>;

// Sparse polynomial in N variables over F_p; terms are kept nonzero and
// ordered lexicographically by exponent.
template <int N>
class Poly {
 public:
  using Terms = std::map<Exp<N>, Elem>;

  Poly() = default;
  explicit Poly(Field f) : f_(f) {}

  static Poly constant(Field f, Elem c) {
    Poly p(f);
    p.add_term(Exp<N>{}, c);
    return p;
  }
  static Poly monomial(Field f, const Exp<N>& e, Elem c = 1) {
    Poly p(f);
    p.add_term(e, c);
    return p;
  }
  static Poly var(Field f, int k) {
    Exp<N> e{};
    e[k] = 1;
    return monomial(f, e);
  }

  const Field& field() const { return f_; }
  const Terms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }

  Elem coeff(const Exp<N>& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? 0 : it->second;
  }
  void add_term(const Exp<N>& e, Elem c) {
    c %= f_.prime();
    if (!c) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (fresh) return;
    it->second = f_.add(it->second, c);
    if (!it->second) t_.erase(it);
  }

  // Total degree in the variables [lo, hi); -1 for the zero polynomial.
  int degree(int lo = 0, int hi = N) const {
    if (t_.empty()) return -1;
    int d = 0;
    for (int k = lo; k < hi; ++k) d += t_.begin()->first[k];
    return d;
  }
  bool homogeneous(int lo = 0, int hi = N) const {
    int d0 = degree(lo, hi);
    for (const auto& [e, c] : t_) {
      int d = 0;
      for (int k = lo; k < hi; ++k) d += e[k];
      if (d != d0) return false;
    }
    return true;
  }

  Poly& operator+=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    check(o);
    for (const auto& [e, c] : o.t_) add_term(e, f_.neg(c));
    return *this;
  }
  Poly operator+(const Poly& o) const { Poly r = *this; return r += o; }
  Poly operator-(const Poly& o) const { Poly r = *this; return r -= o; }
  Poly operator-() const { return scaled(f_.neg(1)); }
  Poly operator*(const Poly& o) const {
    check(o);
    Poly r(f_);
    for (const auto& [a, ca] : t_)
      for (const auto& [b, cb] : o.t_) {
        Exp<N> e;
        for (int k = 0; k < N; ++k) e[k] = static_cast<std::uint8_t>(a[k] + b[k]);
        r.add_term(e, f_.mul(ca, cb));
      }
    return r;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(Elem s) const {
    Poly r(f_);
    if (s % f_.prime() == 0) return r;
    for (const auto& [e, c] : t_) r.t_.emplace(e, f_.mul(c, s));
    return r;
  }
  Poly pow(unsigned e) const {
    Poly r = constant(f_, 1);
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
  }

  bool operator==(const Poly& o) const { return f_ == o.f_ && t_ == o.t_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void check(const Poly& o) const {
    if (!(f_ == o.f_)) throw Error("polynomials over different fields");
  }
  Field f_;
  Terms t_;
};

// R = k[x,y]: exponents (x, y).
using BiForm = Poly<2>;
// S = k[T1,T2,T3].
using SPoly = Poly<3>;
// B = k[x,y,T1,T2,T3]: exponents (x, y, T1, T2, T3).
using BPoly = Poly<5>;

// A linear form a1*T1 + a2*T2 + a3*T3, stored densely.
using Lin = std::array<Elem, 3>;

struct Bidegree {
  int i = 0, j = 0;
  auto operator<=>(const Bidegree&) const = default;
};

// Constructors for common shapes.
BiForm xy_monomial(Field f, int a, int b, Elem c = 1);  // c x^a y^b
BiForm biform_from_coeffs(Field f, int n, const std::vector<Elem>& coeffs);  // y-pure first
std::vector<Elem> biform_coeffs(const BiForm& g, int n);  // inverse of the above
SPoly lin_to_spoly(Field f, const Lin& l);
BPoly to_b(const BiForm& g);
BPoly to_b(const SPoly& s);
BPoly b_monomial(Field f, int w, int ywt, const Exp<3>& e, Elem c = 1);  // c x^w y^ywt T^e

// Bidegree of a nonzero bihomogeneous BPoly; nullopt if zero or not bihomogeneous.
std::optional<Bidegree> bidegree(const BPoly& F);

BPoly poly_mul(const BPoly& a, const BPoly& b);

// F(x, y, h1, h2, h3).
BiForm substitute_T(const BPoly& F, const BiForm& h1, const BiForm& h2, const BiForm& h3);

// Monomial basis of B_(i,j): x-exponent ascending, then T-exponent lexicographic.
class Strand {
 public:
  Strand(int i, int j);
  int i() const { return i_; }
  int j() const { return j_; }
  std::size_t size() const { return static_cast<std::size_t>(i_ + 1) * nT_; }
  std::size_t t_count() const { return nT_; }
  std::size_t index(int w, const Exp<3>& e) const { return w * nT_ + t_index(j_, e); }
  int w_of(std::size_t k) const { return static_cast<int>(k / nT_); }
  const Exp<3>& t_of(std::size_t k) const { return ts_[k % nT_]; }

  static std::size_t t_index(int j, const Exp<3>& e);
  static std::vector<Exp<3>> t_monomials(int j);

 private:
  int i_, j_;
  std::size_t nT_;
  std::vector<Exp<3>> ts_;
};

Vec coeff_vector(const BPoly& F, const Strand& s);
BPoly from_vector(Field f, const Strand& s, const Vec& v);

// Monic gcd of binary forms.
BiForm gcd_biforms(const std::vector<BiForm>& forms);

// Linear change of variables: x -> a x + b y, y -> c x + d y.
BiForm change_xy(const BiForm& g, const std::array<Elem, 4>& abcd);

// Dense univariate polynomials, lowest coefficient first, trailing zeros trimmed.
namespace upoly {
using U = std::vector<Elem>;
void trim(U& a);
U mul(const Field& f, const U& a, const U& b);
U sub(const Field& f, const U& a, const U& b);
std::pair<U, U> divmod(const Field& f, U a, const U& b);
U gcd(const Field& f, U a, U b);  // monic
}  // namespace upoly

// Determinant of a square matrix of polynomials (cofactor expansion with
// memoised minors over column subsets).
template <int N>
Poly<N> det_poly(Field f, const std::vector<std::vector<Poly<N>>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Poly<N>::constant(f, 1);
  if (n > 20) throw Error("det_poly: matrix too large");
  for (const auto& r : m)
    if (r.size() != n) throw Error("det_poly: non-square matrix");
  // minors[mask] = det of rows 0..popcount(mask)-1 with the columns in mask.
  std::vector<Poly<N>> minors(std::size_t{1} << n, Poly<N>(f));
  minors[0] = Poly<N>::constant(f, 1);
  for (std::size_t mask = 1; mask < minors.size(); ++mask) {
    int k = __builtin_popcountll(mask) - 1;
    Poly<N> acc(f);
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1)) continue;
      const Poly<N>& e = m[k][c];
      const Poly<N>& sub = minors[mask & ~(std::size_t{1} << c)];
      if (!e.is_zero() && !sub.is_zero()) {
        // sign of moving column c to the end of the selected set
        int after = __builtin_popcountll(mask >> (c + 1));
        Poly<N> t = e * sub;
        if (after % 2) acc -= t; else acc += t;
      }
    }
    minors[mask] = std::move(acc);
  }
  return minors.back();
}

std::string to_string(const BiForm& g);
std::string to_string(const SPoly& s);
std::string to_string(const BPoly& F);

}  // namespace rees
