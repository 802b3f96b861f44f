// Seeded generator for fixtures/manifest.json and the per-fixture input files.
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "rees/cli.hpp"
#include "rees/structure.hpp"

namespace {

using rees::Elem;
using rees::Field;
using rees::HBMatrix;
using rees::Lin;
using rees::Matrix;
using rees::RawPhi;
using rees::cli::Json;

struct Fixture {
  std::string name;
  RawPhi raw;
  Json expect = Json::object();
};

class Search {
 public:
  Search(Field f, std::uint64_t seed) : f_(f), rng_(seed) {}

  Elem coin() { return static_cast<Elem>(rng_() % f_.prime()); }

  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m(f_, n, n);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = coin();
      if (rees::det(m)) return m;
    }
  }

  rees::BiForm form(int n) {
    std::vector<Elem> c(n + 1);
    for (auto& e : c) e = coin();
    return rees::biform_from_coeffs(f_, n, c);
  }

  // Rows mixed by a random element of GL3 and x, y by a random element of GL2.
  RawPhi scramble(const RawPhi& raw) {
    rees::ColumnTransform t;
    t.rows = invertible(3);
    Matrix xy = invertible(2);
    t.xy = {xy(0, 0), xy(0, 1), xy(1, 0), xy(1, 1)};
    return rees::apply_transform(raw, t);
  }

  HBMatrix random_hb(int d1, int d2) {
    for (;;) {
      RawPhi r;
      r.f = f_;
      r.deg = {d1, d2};
      for (auto& row : r.e)
        for (int m = 0; m < 2; ++m) row[m] = form(m == 0 ? d1 : d2);
      if (auto hb = try_validate(r)) return *hb;
    }
  }

  // Column 1 = [a, b, 0] before scrambling; the generalized zero survives row and x, y changes.
  HBMatrix random_gz(int d1, int d2) {
    for (;;) {
      RawPhi r;
      r.f = f_;
      r.deg = {d1, d2};
      r.e[0][0] = form(d1);
      r.e[1][0] = form(d1);
      r.e[2][0] = rees::BiForm(f_);
      for (auto& row : r.e) row[1] = form(d2);
      if (auto hb = try_validate(scramble(r))) return *hb;
    }
  }

  HBMatrix random_canonical(rees::CanonicalShape shape, int d2) {
    using rees::xy_monomial;
    for (;;) {
      RawPhi r;
      r.f = f_;
      r.deg = {2, d2};
      const bool first = shape == rees::CanonicalShape::X2Y2_XY;
      r.e[0][0] = first ? xy_monomial(f_, 2, 0) + xy_monomial(f_, 0, 2) : xy_monomial(f_, 0, 2);
      r.e[1][0] = first ? xy_monomial(f_, 1, 1) : xy_monomial(f_, 2, 0);
      r.e[2][0] = rees::BiForm(f_);
      for (auto& row : r.e) row[1] = form(d2);
      if (auto hb = try_validate(r)) return *hb;
    }
  }

  // C = P * [C_#; 0] * Q with T substituted by a random element of GL3.
  std::optional<HBMatrix> from_normal_form(const rees::CoeffC& normal, int d1) {
    const std::size_t rows = d1 + 1;
    rees::CoeffC padded(rows, {Lin{0, 0, 0}, Lin{0, 0, 0}});
    for (std::size_t r = 0; r < normal.size(); ++r) padded[r] = normal[r];
    Matrix P = invertible(rows), Q = invertible(2), G = invertible(3);
    rees::CoeffC C(rows, {Lin{0, 0, 0}, Lin{0, 0, 0}});
    for (std::size_t r = 0; r < rows; ++r)
      for (int m = 0; m < 2; ++m)
        for (std::size_t s = 0; s < rows; ++s)
          for (int k = 0; k < 2; ++k) {
            const Elem w = f_.mul(P(r, s), Q(k, m));
            if (!w) continue;
            for (int v = 0; v < 3; ++v)
              for (int u = 0; u < 3; ++u)
                C[r][m][v] = f_.add(C[r][m][v], f_.mul(w, f_.mul(G(v, u), padded[s][k][u])));
          }
    try {
      return rees::phi_from_C(f_, C);
    } catch (const rees::Error&) {
      return std::nullopt;
    }
  }

 private:
  std::optional<HBMatrix> try_validate(const RawPhi& r) {
    try {
      return rees::validate(r);
    } catch (const rees::Error&) {
      return std::nullopt;
    }
  }

  Field f_;
  std::mt19937_64 rng_;
};

struct NormalForm {
  std::string label;
  int mu1, mu2;
  rees::CoeffC rows;
};

std::vector<NormalForm> normal_forms() {
  const Lin o{0, 0, 0}, t1{1, 0, 0}, t2{0, 1, 0}, t3{0, 0, 1};
  return {
      {"(∅,μ6)", 6, 6, {{t1, o}, {t2, o}, {t3, o}, {o, t1}, {o, t2}, {o, t3}}},
      {"(∅,μ5)", 5, 6, {{t1, t3}, {t2, o}, {t3, o}, {o, t1}, {o, t2}}},
      {"(c,μ5)", 5, 5, {{t1, o}, {t2, o}, {o, t1}, {o, t2}, {o, t3}}},
      {"(∅,μ4)", 4, 6, {{t1, o}, {t2, t1}, {t3, t2}, {o, t3}}},
      {"(c,μ4)", 4, 5, {{t1, t2}, {t2, o}, {o, t1}, {o, t3}}},
      {"(c,c)", 4, 4, {{t1, o}, {o, t1}, {t2, t2}, {o, t3}}},
      {"(c:c)", 4, 4, {{t1, o}, {t2, t3}, {o, t1}, {o, t2}}},
      {"(c:c:c)", 3, 3, {{t1, t2}, {t2, t3}, {o, t1}}},
      {"(c:c,c)", 3, 3, {{t1, o}, {t2, t3}, {o, t2}}},
      {"(c,c,c)", 3, 3, {{t1, t1}, {t2, o}, {o, t3}}},
      {"μ2", 2, 1, {{t1, t2}, {t2, t3}}},
  };
}

int resultant_r(const HBMatrix& hb) { return rees::Oracle(hb).resultant().r; }

Json pin(const HBMatrix& hb) {
  using rees::GeneratorKind;
  using rees::cli::multiset_to_json;
  rees::Oracle o(hb);
  Json a_dims = Json::array();
  for (int i = 0; i <= hb.delta + 1; ++i) {
    Json row = Json::array();
    for (int j = 0; j <= 6; ++j) row.push_back(o.a_dim(i, j));
    a_dims.push_back(row);
  }
  return Json{{"r", o.resultant().r},
              {"a_dims", a_dims},
              {"A_as_B", multiset_to_json(o.minimal_generators(GeneratorKind::A_as_B, {0, -1, 8}))},
              {"J_as_B", multiset_to_json(o.minimal_generators(GeneratorKind::J_as_B, {0, -1, 6}))}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Seeded search for the pinned fixtures"};
  std::uint64_t seed = 20240607;
  std::uint32_t prime = 101;
  std::string out_dir = "fixtures";
  app.add_option("--seed", seed, "search seed");
  app.add_option("--prime", prime, "field characteristic");
  app.add_option("--out", out_dir, "output directory");
  CLI11_PARSE(app, argc, argv);

  const Field f(prime);
  Search search(f, seed);
  std::vector<Fixture> fixtures;
  auto add = [&](std::string name, const HBMatrix& hb, Json expect = Json::object()) {
    fixtures.push_back({std::move(name), hb.raw(), std::move(expect)});
    std::cerr << "found " << fixtures.back().name << "\n";
  };

  auto read_input = [&](const std::string& text) {
    return rees::validate(rees::cli::parse_input(Json::parse(text), prime));
  };
  const HBMatrix ex1 = read_input(R"({"degrees": [2, 4], "phi": [[[1, 0, 1], []], [[0, 1, 0], [1, 0, 0, 0, 0]], [[], [1, 0, 0, 0, 1]]]})");
  const HBMatrix ex2 = read_input(R"({"degrees": [3, 3], "phi": [[[1, 0, 0, 0], []], [[0, 0, 0, 1], [1, 0, 0, 0]], [[], [0, 0, 0, 1]]]})");
  add("ex1", ex1, {{"generalized_zero", true}, {"canonical_shape", "X2Y2_XY"}});
  add("ex2", ex2, {{"balanced", {2, 1}}});

  for (auto [d1, d2] : {std::pair{2, 4}, {2, 5}, {3, 5}})
    add("gz_" + std::to_string(d1) + "_" + std::to_string(d2), search.random_gz(d1, d2), {{"generalized_zero", true}});

  for (auto shape : {rees::CanonicalShape::X2Y2_XY, rees::CanonicalShape::Y2_X2})
    for (int d2 = 3; d2 <= 5; ++d2)
      add("canonical_" + rees::shape_name(shape) + "_" + std::to_string(d2), search.random_canonical(shape, d2),
          {{"canonical_shape", rees::shape_name(shape)}});

  // One normal form per numeric class; d1 = 3 classes with mu2 >= 3 must also be birational.
  const std::vector<std::pair<int, std::vector<std::string>>> wanted{
      {3, {"(∅,μ4)", "(c,μ4)", "(c,c)", "(c,c,c)", "μ2"}},
      {4, {"(∅,μ5)", "(c,μ5)", "(∅,μ4)", "(c,μ4)", "(c:c)", "(c:c:c)", "μ2"}}};
  const std::vector<NormalForm> forms = normal_forms();
  for (const auto& [d1, labels] : wanted)
    for (const std::string& label : labels) {
      const NormalForm& nf = *std::find_if(forms.begin(), forms.end(),
                                           [&](const NormalForm& n) { return n.label == label; });
      const bool need_birational = d1 == 3 && nf.mu2 >= 3;
      for (int attempt = 0;; ++attempt) {
        if (attempt == 2000) throw rees::Error("no fixture found for " + label);
        auto hb = search.from_normal_form(nf.rows, d1);
        if (!hb) continue;
        rees::AndyClass c = rees::andy_class(*hb);
        if (c.mu1 != nf.mu1 || c.mu2 != nf.mu2) continue;
        if (need_birational && resultant_r(*hb) != 1) continue;
        Json expect{{"balanced", {nf.mu1, nf.mu2}}, {"normal_form", label}};
        if (need_birational) expect["sextic_row"] = 4 + (6 - nf.mu2);
        add("balanced_" + std::to_string(d1) + "_" + std::to_string(nf.mu1) + std::to_string(nf.mu2), *hb, expect);
        break;
      }
    }

  auto birational = [&](auto make) {
    for (;;) {
      HBMatrix hb = make();
      if (resultant_r(hb) == 1) return hb;
    }
  };
  add("sextic_1_5", birational([&] { return search.random_hb(1, 5); }), {{"sextic_row", 1}});
  if (resultant_r(ex1) == 1)
    fixtures.front().expect["sextic_row"] = 2;
  else
    add("sextic_2_4_gz", birational([&] { return search.random_gz(2, 4); }), {{"sextic_row", 2}, {"generalized_zero", true}});
  add("sextic_2_4", birational([&] {
        for (;;) {
          HBMatrix hb = search.random_hb(2, 4);
          if (!rees::generalized_zero_col1(hb).has_gz) return hb;
        }
      }),
      {{"sextic_row", 3}, {"generalized_zero", false}});

  std::filesystem::create_directories(out_dir);
  Json list = Json::array();
  for (const Fixture& fx : fixtures) {
    const HBMatrix hb = rees::validate(fx.raw);
    Json input = rees::cli::phi_to_json(fx.raw);
    std::ofstream(std::filesystem::path(out_dir) / (fx.name + ".json")) << input.dump(2) << "\n";
    list.push_back(Json{{"name", fx.name},
                        {"hash", rees::cli::fixture_hash(fx.raw)},
                        {"input", input},
                        {"expect", fx.expect},
                        {"pinned", pin(hb)}});
    std::cerr << "pinned " << fx.name << "\n";
  }
  Json manifest{{"generator", "fixture_search"}, {"seed", seed}, {"prime", prime}, {"fixtures", list}};
  std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << manifest.dump(2) << "\n";
  return 0;
}
