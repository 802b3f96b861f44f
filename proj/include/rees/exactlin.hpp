#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rees {

using Elem = std::uint32_t;
using Vec = std::vector<Elem>;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr std::uint32_t kDefaultPrime = 10007;

// Prime field F_p. The modulus travels with every value-carrying object,
// so there is no global state.
class Field {
 public:
  Field() = default;
  explicit Field(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Elem from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  // Representative in (-p/2, p/2], for printing.
  std::int64_t to_signed(Elem a) const {
    return a > p_ / 2 ? static_cast<std::int64_t>(a) - p_ : a;
  }

  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a ? p_ - a : 0; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }

  bool operator==(const Field& o) const { return p_ == o.p_; }

 private:
  std::uint32_t p_ = kDefaultPrime;
};

bool is_prime(std::uint64_t n);

// Dense row-major matrix over F_p.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols)
      : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows);
  // Matrix whose columns are the given vectors (all of length n).
  static Matrix from_columns(Field f, std::size_t n, const std::vector<Vec>& cols);

  const Field& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Elem* row(std::size_t r) const { return a_.data() + r * cols_; }
  Elem* row(std::size_t r) { return a_.data() + r * cols_; }

  Matrix operator*(const Matrix& b) const;
  Vec operator*(const Vec& v) const;
  Matrix transpose() const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const {
    return f_ == o.f_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  Field f_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> a_;
};

struct RrefResult {
  std::size_t rank = 0;
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
Elem det(const Matrix& m);
std::optional<Elem> sqrt_mod_p(const Field& f, Elem a);

bool is_zero(const Vec& v);

// Fully reduced echelon basis of a subspace of F_p^n, grown one vector at a time.
class EchelonBasis {
 public:
  EchelonBasis() = default;
  EchelonBasis(Field f, std::size_t n) : f_(f), n_(n), where_(n, -1) {}

  bool insert(Vec v);
  Vec reduce(Vec v) const;
  bool contains(const Vec& v) const { return is_zero(reduce(v)); }

  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient() const { return n_; }
  const std::vector<Vec>& rows() const { return rows_; }
  // Row index whose pivot is column c, or -1.
  int pivot_row(std::size_t c) const { return where_[c]; }

 private:
  Field f_;
  std::size_t n_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
  std::vector<int> where_;
};

}  // namespace rees
