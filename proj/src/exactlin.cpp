#include "rees/exactlin.hpp"

#include <utility>

namespace rees {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

Field::Field(std::uint32_t p) : p_(p) {
  if (p < 5 || p % 2 == 0 || p >= (1u << 31) || !is_prime(p))
    throw Error("modulus must be an odd prime in [5, 2^31): " + std::to_string(p));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  Elem r = 1 % p_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error("division by zero in F_p");
  return pow(a, p_ - 2);
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field f, const std::vector<std::vector<std::int64_t>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(f, rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::from_columns(Field f, std::size_t n, const std::vector<Vec>& cols) {
  Matrix m(f, n, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != n) throw Error("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& b) const {
  if (cols_ != b.rows_) throw Error("matrix product: dimension mismatch");
  Matrix c(f_, rows_, b.cols_);
  const std::uint64_t p = f_.prime();
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < cols_; ++k) {
      std::uint64_t a = (*this)(i, k);
      if (!a) continue;
      const Elem* br = b.row(k);
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] = (acc[j] + a * br[j]) % p;
    }
    for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = static_cast<Elem>(acc[j]);
  }
  return c;
}

Vec Matrix::operator*(const Vec& v) const {
  if (cols_ != v.size()) throw Error("matrix-vector product: dimension mismatch");
  Vec out(rows_, 0);
  const std::uint64_t p = f_.prime();
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const Elem* r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) acc = (acc + static_cast<std::uint64_t>(r[j]) * v[j]) % p;
    out[i] = static_cast<Elem>(acc);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (Elem e : a_)
    if (e) return false;
  return true;
}

bool is_zero(const Vec& v) {
  for (Elem e : v)
    if (e) return false;
  return true;
}

namespace {

// row[from..] -= factor * piv[from..]
void axpy_neg(const Field& f, Elem* row, const Elem* piv, Elem factor, std::size_t from,
              std::size_t to) {
  const std::uint64_t p = f.prime();
  const std::uint64_t nf = p - factor;
  for (std::size_t j = from; j < to; ++j)
    if (piv[j]) row[j] = static_cast<Elem>((row[j] + nf * piv[j]) % p);
}

}  // namespace

RrefResult rref(const Matrix& m) {
  RrefResult res;
  res.reduced = m;
  Matrix& a = res.reduced;
  const Field& f = m.field();
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(piv, j), a(r, j));
    Elem s = f.inv(a(r, c));
    for (std::size_t j = c; j < C; ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = 0; i < R; ++i) {
      if (i == r || a(i, c) == 0) continue;
      axpy_neg(f, a.row(i), a.row(r), a(i, c), c, C);
    }
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  return res;
}

std::size_t rank(const Matrix& m) {
  // Row echelon form without back substitution.
  Matrix a = m;
  const Field& f = m.field();
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < C && r < R; ++c) {
    std::size_t piv = r;
    while (piv < R && a(piv, c) == 0) ++piv;
    if (piv == R) continue;
    if (piv != r)
      for (std::size_t j = c; j < C; ++j) std::swap(a(piv, j), a(r, j));
    Elem s = f.inv(a(r, c));
    for (std::size_t j = c; j < C; ++j) a(r, j) = f.mul(a(r, j), s);
    for (std::size_t i = r + 1; i < R; ++i)
      if (a(i, c)) axpy_neg(f, a.row(i), a.row(r), a(i, c), c, C);
    ++r;
  }
  return r;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  RrefResult rr = rref(m);
  const Field& f = m.field();
  const std::size_t C = m.cols();
  std::vector<char> is_piv(C, 0);
  for (std::size_t c : rr.pivots) is_piv[c] = 1;
  std::vector<Vec> out;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_piv[free]) continue;
    Vec v(C, 0);
    v[free] = 1;
    for (std::size_t k = 0; k < rr.rank; ++k) v[rr.pivots[k]] = f.neg(rr.reduced(k, free));
    out.push_back(std::move(v));
  }
  return out;
}

Elem det(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  Matrix a = m;
  const Field& f = m.field();
  const std::size_t n = a.rows();
  Elem d = 1 % f.prime();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = c; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = f.neg(d);
    }
    d = f.mul(d, a(c, c));
    Elem s = f.inv(a(c, c));
    for (std::size_t i = c + 1; i < n; ++i)
      if (a(i, c)) axpy_neg(f, a.row(i), a.row(c), f.mul(a(i, c), s), c, n);
  }
  return d;
}

std::optional<Elem> sqrt_mod_p(const Field& f, Elem a) {
  const std::uint32_t p = f.prime();
  a %= p;
  if (a == 0) return Elem{0};
  if (f.pow(a, (p - 1) / 2) != 1) return std::nullopt;
  if (p % 4 == 3) return f.pow(a, (p + 1) / 4);
  // Tonelli-Shanks: p - 1 = q * 2^s with q odd.
  std::uint32_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Elem z = 2;
  while (f.pow(z, (p - 1) / 2) != p - 1) ++z;
  Elem c = f.pow(z, q);
  Elem r = f.pow(a, (q + 1) / 2);
  Elem t = f.pow(a, q);
  std::uint32_t m = s;
  while (t != 1) {
    std::uint32_t i = 0;
    Elem tt = t;
    while (tt != 1) {
      tt = f.mul(tt, tt);
      ++i;
    }
    Elem b = c;
    for (std::uint32_t k = 0; k + 1 < m - i; ++k) b = f.mul(b, b);
    r = f.mul(r, b);
    c = f.mul(b, b);
    t = f.mul(t, c);
    m = i;
  }
  return r;
}

bool EchelonBasis::insert(Vec v) {
  v = reduce(std::move(v));
  std::size_t c = 0;
  while (c < n_ && v[c] == 0) ++c;
  if (c == n_) return false;
  Elem s = f_.inv(v[c]);
  for (std::size_t j = c; j < n_; ++j) v[j] = f_.mul(v[j], s);
  for (auto& r : rows_)
    if (r[c]) axpy_neg(f_, r.data(), v.data(), r[c], 0, n_);
  where_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  piv_.push_back(c);
  return true;
}

Vec EchelonBasis::reduce(Vec v) const {
  if (v.size() != n_) throw Error("EchelonBasis: vector length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Elem e = v[piv_[k]];
    if (e) axpy_neg(f_, v.data(), rows_[k].data(), e, 0, n_);
  }
  return v;
}

}  // namespace rees
