#include "rees/oracle.hpp"

#include <sstream>

namespace rees {

std::string to_string(const BidegreeMultiset& m) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [b, k] : m) {
    if (!first) os << ", ";
    os << "(" << b.i << "," << b.j << "):" << k;
    first = false;
  }
  os << "}";
  return os.str();
}

Vec SymStrand::coords(const Vec& b) const {
  Vec r = relations.reduce(b);
  Vec out(standard.size());
  for (std::size_t q = 0; q < standard.size(); ++q) out[q] = r[standard[q]];
  return out;
}

Vec SymStrand::lift(const Vec& c) const {
  if (c.size() != standard.size()) throw Error("SymStrand::lift: length mismatch");
  Vec b(strand.size(), 0);
  for (std::size_t q = 0; q < standard.size(); ++q) b[standard[q]] = c[q];
  return b;
}

namespace {

// Multiply a B-vector of strand src by T_k (src.j + 1 = dst.j).
Vec mul_T(const Vec& v, const Strand& src, const Strand& dst, int k) {
  Vec out(dst.size(), 0);
  for (std::size_t idx = 0; idx < v.size(); ++idx) {
    if (!v[idx]) continue;
    Exp<3> e = src.t_of(idx);
    ++e[k];
    out[dst.index(src.w_of(idx), e)] = v[idx];
  }
  return out;
}

// Multiply a B-vector of strand src by x^a y^b (same T-degree).
Vec mul_xy(const Vec& v, const Strand& src, const Strand& dst, int a) {
  Vec out(dst.size(), 0);
  const std::size_t nT = src.t_count();
  for (std::size_t idx = 0; idx < v.size(); ++idx)
    if (v[idx]) out[idx + a * nT] = v[idx];
  (void)dst;
  return out;
}

}  // namespace

Oracle::Oracle(HBMatrix hb) : hb_(std::move(hb)) {}

const SymStrand& Oracle::sym_strand(int i, int j) {
  Bidegree key{i, j};
  if (auto it = sym_.find(key); it != sym_.end()) return *it->second;
  auto s = std::make_unique<SymStrand>(SymStrand{Strand(i, j), EchelonBasis(), {}, {}});
  const Strand& st = s->strand;
  s->relations = EchelonBasis(field(), st.size());
  if (j >= 1) {
    auto lower = Strand::t_monomials(j - 1);
    for (int m = 1; m <= 2; ++m) {
      int dm = hb_.deg(m);
      for (int a = 0; a + dm <= i; ++a)
        for (const auto& e : lower) {
          Vec v(st.size(), 0);
          for (int l = 0; l <= dm; ++l)
            for (int k = 0; k < 3; ++k) {
              Elem c = hb_.c(l, m)[k];
              if (!c) continue;
              Exp<3> ee = e;
              ++ee[k];
              std::size_t idx = st.index(a + l, ee);
              v[idx] = field().add(v[idx], c);
            }
          s->relations.insert(std::move(v));
        }
    }
  }
  s->standard_pos.assign(st.size(), -1);
  for (std::size_t c = 0; c < st.size(); ++c)
    if (s->relations.pivot_row(c) < 0) {
      s->standard_pos[c] = static_cast<int>(s->standard.size());
      s->standard.push_back(c);
    }
  return *sym_.emplace(key, std::move(s)).first->second;
}

const AStrand& Oracle::a_strand(int i, int j) {
  Bidegree key{i, j};
  if (auto it = a_.find(key); it != a_.end()) return *it->second;
  auto out = std::make_unique<AStrand>();
  out->bideg = key;
  const int d = hb_.d;
  if (i >= 0 && i <= d - 2) {
    const int n = d - 1 - i;
    const SymStrand& src = sym_strand(i, j);
    const SymStrand& dst = sym_strand(d - 1, j);
    const std::size_t nT = src.strand.t_count();
    const std::size_t tdim = dst.dim();
    Matrix M(field(), (n + 1) * tdim, src.dim());
    for (std::size_t col = 0; col < src.dim(); ++col) {
      std::size_t s = src.standard[col];
      for (int a = 0; a <= n; ++a) {
        std::size_t tcol = s + a * nT;
        int pr = dst.relations.pivot_row(tcol);
        if (pr < 0) {
          M(a * tdim + dst.standard_pos[tcol], col) = 1;
        } else {
          const Vec& row = dst.relations.rows()[pr];
          for (std::size_t q = 0; q < tdim; ++q)
            M(a * tdim + q, col) = field().neg(row[dst.standard[q]]);
        }
      }
    }
    out->basis = kernel_basis(M);
  }
  return *a_.emplace(key, std::move(out)).first->second;
}

std::vector<BPoly> Oracle::a_elements(int i, int j) {
  const AStrand& a = a_strand(i, j);
  const SymStrand& s = sym_strand(i, j);
  std::vector<BPoly> out;
  for (const Vec& v : a.basis) out.push_back(from_vector(field(), s.strand, s.lift(v)));
  return out;
}

const std::vector<Vec>& Oracle::j_strand(int i, int j) {
  Bidegree key{i, j};
  if (auto it = j_.find(key); it != j_.end()) return it->second;
  const Field& f = field();
  Strand st(i, j);
  const int top = i + j * hb_.d;
  Matrix M(f, top + 1, st.size());
  for (std::size_t t = 0; t < st.t_count(); ++t) {
    const Exp<3>& e = st.t_of(t);
    auto it = h_powers_.find(e);
    if (it == h_powers_.end()) {
      BiForm p = BiForm::constant(f, 1);
      for (int k = 0; k < 3; ++k) p *= hb_.h[k].pow(e[k]);
      it = h_powers_.emplace(e, std::move(p)).first;
    }
    for (int w = 0; w <= i; ++w) {
      std::size_t col = st.index(w, e);
      for (const auto& [ex, c] : it->second.terms()) M(ex[0] + w, col) = c;
    }
  }
  return j_.emplace(key, kernel_basis(M)).first->second;
}

BidegreeMultiset Oracle::minimal_generators(GeneratorKind which, Bounds bounds) {
  if (bounds.imax < 0) bounds.imax = imax_default();
  const bool in_sym = which != GeneratorKind::J_as_B;
  const bool with_xy = which != GeneratorKind::A_as_S_per_i;
  BidegreeMultiset out;

  auto full = [&](int i, int j) -> std::vector<Vec> {
    if (in_sym) return a_strand(i, j).basis;
    return j_strand(i, j);
  };
  auto to_b = [&](int i, int j, const Vec& v) { return in_sym ? sym_strand(i, j).lift(v) : v; };

  for (int i = bounds.imin; i <= bounds.imax; ++i)
    for (int j = 0; j <= bounds.jmax; ++j) {
      std::vector<Vec> here = full(i, j);
      if (here.empty()) continue;
      Strand st(i, j);
      const std::size_t n = in_sym ? sym_strand(i, j).dim() : st.size();
      EchelonBasis prod(field(), n);
      auto add = [&](const Vec& b) {
        if (prod.dim() < here.size()) prod.insert(in_sym ? sym_strand(i, j).coords(b) : b);
      };
      if (j >= 1) {
        Strand lo(i, j - 1);
        for (const Vec& v : full(i, j - 1)) {
          Vec b = to_b(i, j - 1, v);
          for (int k = 0; k < 3; ++k) add(mul_T(b, lo, st, k));
        }
      }
      if (with_xy && i - 1 >= bounds.imin) {
        Strand lo(i - 1, j);
        for (const Vec& v : full(i - 1, j)) {
          Vec b = to_b(i - 1, j, v);
          add(mul_xy(b, lo, st, 0));
          add(mul_xy(b, lo, st, 1));
        }
      }
      int mult = static_cast<int>(here.size() - prod.dim());
      if (mult > 0) out[{i, j}] = mult;
    }
  return out;
}

Vec Oracle::sym_coords_of(const BPoly& F, int i, int j) {
  const SymStrand& s = sym_strand(i, j);
  if (F.is_zero()) return Vec(s.dim(), 0);
  return s.coords(coeff_vector(F, s.strand));
}

Oracle::SubmoduleReport Oracle::generated_submodule(const std::vector<BPoly>& seeds, Bounds bounds, bool with_xy) {
  if (bounds.imax < 0) bounds.imax = imax_default();
  SubmoduleReport rep;
  std::map<Bidegree, std::vector<const BPoly*>> by_deg;
  for (const BPoly& F : seeds) {
    if (F.is_zero()) continue;
    auto b = bidegree(F);
    if (!b) throw Error("generated_submodule: seed is not bihomogeneous");
    by_deg[*b].push_back(&F);
  }
  std::map<Bidegree, std::vector<Vec>> span;  // Sym coordinates
  for (int i = bounds.imin; i <= bounds.imax; ++i)
    for (int j = 0; j <= bounds.jmax; ++j) {
      const SymStrand& s = sym_strand(i, j);
      EchelonBasis e(field(), s.dim());
      if (j >= 1)
        for (const Vec& v : span[{i, j - 1}]) {
          Vec b = sym_strand(i, j - 1).lift(v);
          for (int k = 0; k < 3; ++k) e.insert(s.coords(mul_T(b, sym_strand(i, j - 1).strand, s.strand, k)));
        }
      if (with_xy && i - 1 >= bounds.imin)
        for (const Vec& v : span[{i - 1, j}]) {
          Vec b = sym_strand(i - 1, j).lift(v);
          for (int a = 0; a <= 1; ++a) e.insert(s.coords(mul_xy(b, sym_strand(i - 1, j).strand, s.strand, a)));
        }
      std::size_t before = e.dim();
      const AStrand& a = a_strand(i, j);
      EchelonBasis abasis(field(), s.dim());
      for (const Vec& v : a.basis) abasis.insert(v);
      for (const BPoly* F : by_deg[{i, j}]) {
        Vec c = s.coords(coeff_vector(*F, s.strand));
        if (!abasis.contains(c)) rep.inside_a = false;
        e.insert(std::move(c));
      }
      if (e.dim() > before) rep.generators[{i, j}] = static_cast<int>(e.dim() - before);
      if (e.dim() != a.dim()) rep.equals_a = false;
      span[{i, j}] = e.rows();
    }
  return rep;
}

std::optional<SPoly> spoly_root(const SPoly& G, int r) {
  if (G.is_zero() || r < 1) return std::nullopt;
  const Field& f = G.field();
  SPoly Gm = G.scaled(f.inv(G.terms().rbegin()->second));
  if (r == 1) return Gm;
  if (r % static_cast<int>(f.prime()) == 0) throw Error("r-th root needs p > r");
  if (!Gm.homogeneous() || Gm.degree() % r) return std::nullopt;
  Exp<3> lead = Gm.terms().rbegin()->first;
  Exp<3> root_lead;
  for (int k = 0; k < 3; ++k) {
    if (lead[k] % r) return std::nullopt;
    root_lead[k] = static_cast<std::uint8_t>(lead[k] / r);
  }
  SPoly F = SPoly::monomial(f, root_lead);
  const Elem r_inv = f.inv(static_cast<Elem>(r));
  const int n = Gm.degree() / r;
  const int max_terms = (n + 1) * (n + 2) / 2;
  for (int it = 0; it <= max_terms; ++it) {
    SPoly R = Gm - F.pow(r);
    if (R.is_zero()) return F;
    auto [er, cr] = *R.terms().rbegin();
    Exp<3> next;
    for (int k = 0; k < 3; ++k) {
      int v = er[k] - (r - 1) * root_lead[k];
      if (v < 0) return std::nullopt;
      next[k] = static_cast<std::uint8_t>(v);
    }
    if (!(next < root_lead) || F.coeff(next)) return std::nullopt;
    F.add_term(next, f.mul(cr, r_inv));
  }
  return std::nullopt;
}

ImplicitEquation Oracle::resultant() {
  if (res_) return *res_;
  const Field& f = field();
  const int d1 = hb_.d1, d2 = hb_.d2, d = hb_.d;
  std::vector<std::vector<SPoly>> syl(d, std::vector<SPoly>(d, SPoly(f)));
  for (int s = 0; s < d2; ++s)
    for (int l = 0; l <= d1; ++l) syl[s][s + l] = hb_.cs(l, 1);
  for (int s = 0; s < d1; ++s)
    for (int l = 0; l <= d2; ++l) syl[d2 + s][s + l] = hb_.cs(l, 2);
  ImplicitEquation out;
  out.res = det_poly<3>(f, syl);
  if (out.res.is_zero()) throw Error("internal error: resultant of g1, g2 vanishes");
  for (int r = d; r >= 1; --r) {
    if (d % r) continue;
    if (r % static_cast<int>(f.prime()) == 0) throw Error("r-th root extraction needs p > d");
    if (auto F = spoly_root(out.res, r)) {
      out.F = *F;
      out.r = r;
      break;
    }
  }
  res_ = out;
  return out;
}

bool Oracle::pairing_injectivity(int i, int jmax) {
  const int delta = hb_.delta;
  if (i < 0 || i > delta) throw Error("pairing_injectivity: need 0 <= i <= delta");
  const int n = delta - i;
  for (int j = 0; j <= jmax; ++j) {
    const AStrand& a = a_strand(i, j);
    if (a.basis.empty()) continue;
    const SymStrand& src = sym_strand(i, j);
    const SymStrand& dst = sym_strand(delta, j);
    std::vector<Vec> images;
    for (const Vec& v : a.basis) {
      Vec b = src.lift(v);
      Vec stacked;
      for (int s = 0; s <= n; ++s) {
        Vec c = dst.coords(mul_xy(b, src.strand, dst.strand, s));
        stacked.insert(stacked.end(), c.begin(), c.end());
      }
      images.push_back(std::move(stacked));
    }
    Matrix M = Matrix::from_columns(field(), (n + 1) * dst.dim(), images);
    if (rank(M) != a.basis.size()) return false;
  }
  return true;
}

std::size_t Oracle::sym_span_dim(const std::vector<BPoly>& elements, int i, int j) {
  EchelonBasis e(field(), sym_dim(i, j));
  for (const BPoly& F : elements) e.insert(sym_coords_of(F, i, j));
  return e.dim();
}

bool Oracle::in_a(const BPoly& F, int i, int j) {
  EchelonBasis e(field(), sym_dim(i, j));
  for (const Vec& v : a_strand(i, j).basis) e.insert(v);
  return e.contains(sym_coords_of(F, i, j));
}

bool Oracle::proportional_in_sym(const BPoly& a, const BPoly& b, int i, int j) {
  Vec va = sym_coords_of(a, i, j), vb = sym_coords_of(b, i, j);
  if (is_zero(va) || is_zero(vb)) return false;
  EchelonBasis e(field(), va.size());
  e.insert(va);
  return e.contains(vb);
}

bool hilbert_series_check(const std::vector<int>& twists, int n) {
  int s = 0;
  for (int b : twists) s += b;
  return s == n;
}

}  // namespace rees
