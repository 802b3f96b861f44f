#include "rees/polyring.hpp"

#include <sstream>

namespace rees {

BiForm xy_monomial(Field f, int a, int b, Elem c) {
  return BiForm::monomial(f, {static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)}, c);
}

BiForm biform_from_coeffs(Field f, int n, const std::vector<Elem>& coeffs) {
  if (static_cast<int>(coeffs.size()) != n + 1)
    throw Error("binary form of degree " + std::to_string(n) + " needs " +
                std::to_string(n + 1) + " coefficients");
  BiForm g(f);
  for (int w = 0; w <= n; ++w) g.add_term({static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(n - w)}, coeffs[w]);
  return g;
}

std::vector<Elem> biform_coeffs(const BiForm& g, int n) {
  std::vector<Elem> out(n + 1, 0);
  for (const auto& [e, c] : g.terms()) {
    if (e[0] + e[1] != n) throw Error("binary form is not homogeneous of degree " + std::to_string(n));
    out[e[0]] = c;
  }
  return out;
}

SPoly lin_to_spoly(Field f, const Lin& l) {
  SPoly s(f);
  for (int k = 0; k < 3; ++k) {
    Exp<3> e{};
    e[k] = 1;
    s.add_term(e, l[k]);
  }
  return s;
}

BPoly to_b(const BiForm& g) {
  BPoly F(g.field());
  for (const auto& [e, c] : g.terms()) F.add_term({e[0], e[1], 0, 0, 0}, c);
  return F;
}

BPoly to_b(const SPoly& s) {
  BPoly F(s.field());
  for (const auto& [e, c] : s.terms()) F.add_term({0, 0, e[0], e[1], e[2]}, c);
  return F;
}

BPoly b_monomial(Field f, int w, int ywt, const Exp<3>& e, Elem c) {
  return BPoly::monomial(f, {static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(ywt), e[0], e[1], e[2]}, c);
}

std::optional<Bidegree> bidegree(const BPoly& F) {
  if (F.is_zero() || !F.homogeneous(0, 2) || !F.homogeneous(2, 5)) return std::nullopt;
  return Bidegree{F.degree(0, 2), F.degree(2, 5)};
}

BPoly poly_mul(const BPoly& a, const BPoly& b) { return a * b; }

BiForm substitute_T(const BPoly& F, const BiForm& h1, const BiForm& h2, const BiForm& h3) {
  const Field& f = F.field();
  const BiForm* hs[3] = {&h1, &h2, &h3};
  int d = -1;
  for (const BiForm* h : hs) {
    if (h->is_zero()) continue;
    if (!h->homogeneous()) throw Error("substitute_T: h is not homogeneous");
    if (d >= 0 && h->degree() != d) throw Error("substitute_T: h1, h2, h3 have different degrees");
    d = h->degree();
  }
  std::map<Exp<3>, BiForm> cache;
  auto power = [&](const Exp<3>& e) -> const BiForm& {
    auto it = cache.find(e);
    if (it != cache.end()) return it->second;
    BiForm p = BiForm::constant(f, 1);
    for (int k = 0; k < 3; ++k) p *= hs[k]->pow(e[k]);
    return cache.emplace(e, std::move(p)).first->second;
  };
  BiForm out(f);
  for (const auto& [e, c] : F.terms()) {
    Exp<3> t{e[2], e[3], e[4]};
    out += xy_monomial(f, e[0], e[1], c) * power(t);
  }
  return out;
}

Strand::Strand(int i, int j) : i_(i), j_(j) {
  if (i < 0 || j < 0) throw Error("negative bidegree");
  ts_ = t_monomials(j);
  nT_ = ts_.size();
}

std::size_t Strand::t_index(int j, const Exp<3>& e) {
  std::size_t idx = 0;
  for (int a = 0; a < e[0]; ++a) idx += j - a + 1;
  return idx + e[1];
}

std::vector<Exp<3>> Strand::t_monomials(int j) {
  std::vector<Exp<3>> out;
  for (int a = 0; a <= j; ++a)
    for (int b = 0; a + b <= j; ++b)
      out.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(j - a - b)});
  return out;
}

Vec coeff_vector(const BPoly& F, const Strand& s) {
  Vec v(s.size(), 0);
  for (const auto& [e, c] : F.terms()) {
    if (e[0] + e[1] != s.i() || e[2] + e[3] + e[4] != s.j())
      throw Error("coeff_vector: bidegree mismatch");
    v[s.index(e[0], {e[2], e[3], e[4]})] = c;
  }
  return v;
}

BPoly from_vector(Field f, const Strand& s, const Vec& v) {
  if (v.size() != s.size()) throw Error("from_vector: length mismatch");
  BPoly F(f);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k]) continue;
    int w = s.w_of(k);
    F.add_term({static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(s.i() - w), s.t_of(k)[0], s.t_of(k)[1], s.t_of(k)[2]}, v[k]);
  }
  return F;
}

namespace upoly {

void trim(U& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

U mul(const Field& f, const U& a, const U& b) {
  if (a.empty() || b.empty()) return {};
  U r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a[i], b[j]));
  trim(r);
  return r;
}

U sub(const Field& f, const U& a, const U& b) {
  U r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = f.sub(r[i], b[i]);
  trim(r);
  return r;
}

std::pair<U, U> divmod(const Field& f, U a, const U& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(a);
  if (a.size() < b.size()) return {U{}, a};
  U q(a.size() - b.size() + 1, 0);
  Elem li = f.inv(b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    Elem c = f.mul(a[k + b.size() - 1], li);
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = f.sub(a[k + j], f.mul(c, b[j]));
  }
  trim(a);
  trim(q);
  return {q, a};
}

U gcd(const Field& f, U a, U b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    U r = divmod(f, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  Elem li = f.inv(a.back());
  for (Elem& c : a) c = f.mul(c, li);
  return a;
}

}  // namespace upoly

BiForm gcd_biforms(const std::vector<BiForm>& forms) {
  if (forms.empty()) throw Error("gcd_biforms: empty list");
  Field f = forms[0].field();
  upoly::U g;
  int ymult = -1;
  bool any = false;
  for (const BiForm& h : forms) {
    if (h.is_zero()) continue;
    if (!h.homogeneous()) throw Error("gcd_biforms: form is not homogeneous");
    any = true;
    int n = h.degree();
    // dehomogenise at y = 1
    upoly::U u(n + 1, 0);
    for (const auto& [e, c] : h.terms()) u[e[0]] = c;
    upoly::trim(u);
    int ym = n - (static_cast<int>(u.size()) - 1);
    ymult = ymult < 0 ? ym : std::min(ymult, ym);
    g = g.empty() ? upoly::gcd(f, u, {}) : upoly::gcd(f, g, u);
  }
  if (!any) throw Error("gcd_biforms: all forms are zero");
  int dx = static_cast<int>(g.size()) - 1;
  BiForm out(f);
  for (int w = 0; w <= dx; ++w) out.add_term({static_cast<std::uint8_t>(w), static_cast<std::uint8_t>(dx - w + ymult)}, g[w]);
  return out;
}

BiForm change_xy(const BiForm& g, const std::array<Elem, 4>& abcd) {
  const Field& f = g.field();
  BiForm X(f), Y(f);
  X.add_term({1, 0}, abcd[0]);
  X.add_term({0, 1}, abcd[1]);
  Y.add_term({1, 0}, abcd[2]);
  Y.add_term({0, 1}, abcd[3]);
  BiForm out(f);
  for (const auto& [e, c] : g.terms()) out += (X.pow(e[0]) * Y.pow(e[1])).scaled(c);
  return out;
}

namespace {

template <int N>
std::string format(const Poly<N>& p, const char* const* names) {
  if (p.is_zero()) return "0";
  const Field& f = p.field();
  std::ostringstream os;
  bool first = true;
  // highest monomial first reads more naturally
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    std::int64_t c = f.to_signed(it->second);
    bool unit = true;
    for (int k = 0; k < N; ++k)
      if (it->first[k]) unit = false;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    bool wrote = false;
    if (a != 1 || unit) {
      os << a;
      wrote = true;
    }
    for (int k = 0; k < N; ++k) {
      int e = it->first[k];
      if (!e) continue;
      if (wrote) os << "*";
      os << names[k];
      if (e > 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

constexpr const char* kXY[] = {"x", "y"};
constexpr const char* kT[] = {"T1", "T2", "T3"};
constexpr const char* kB[] = {"x", "y", "T1", "T2", "T3"};

}  // namespace

std::string to_string(const BiForm& g) { return format<2>(g, kXY); }
std::string to_string(const SPoly& s) { return format<3>(s, kT); }
std::string to_string(const BPoly& F) { return format<5>(F, kB); }

}  // namespace rees
