#include "rees/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "rees/linkage.hpp"
#include "rees/morley.hpp"
#include "rees/structure.hpp"

namespace rees::cli {

namespace {

Json twists_to_json(const std::vector<int>& twists) { return Json(twists); }

Json coeffs_to_json(const Field& f, const BiForm& g, int n) {
  Json out = Json::array();
  if (g.is_zero()) return out;
  for (Elem c : biform_coeffs(g, n)) out.push_back(f.to_signed(c));
  return out;
}

BidegreeMultiset twists_as_multiset(int i, const std::vector<int>& twists) {
  BidegreeMultiset m;
  for (int a : twists) m[{i, a}] += 1;
  return m;
}

BidegreeMultiset minus_one(BidegreeMultiset m, Bidegree b) {
  auto it = m.find(b);
  if (it != m.end() && --it->second == 0) m.erase(it);
  return m;
}

bool in_table_scope(const HBMatrix& hb) { return hb.d1 < hb.d2 && generalized_zero_col1(hb).has_gz; }

Json sextic_json(const SexticReport& s) {
  return Json{{"d1", s.d1},
              {"d2", s.d2},
              {"birational", s.birational},
              {"r", s.r},
              {"row", s.row},
              {"table_bidegrees", multiset_to_json(s.table_bidegrees)},
              {"equation_bidegrees", multiset_to_json(s.equation_bidegrees)},
              {"multiplicities", s.multiplicities},
              {"configuration", s.configuration},
              {"noether_ok", s.noether_ok}};
}

Json andy_json(const AndyClass& a) {
  return Json{{"mu_I1_phi", a.mu1},
              {"mu_I2_C", a.mu2},
              {"generator_twists", twists_to_json(a.generator_twists)},
              {"syzygy_twists", twists_to_json(a.syzygy_twists)},
              {"free", a.free()},
              {"ecp_labels", a.ecp_labels}};
}

Json cmd_validate(const HBMatrix& hb, const Options&) {
  GeneralizedZero gz = generalized_zero_col1(hb);
  Json minors = Json::array();
  for (const BiForm& h : hb.h) minors.push_back(coeffs_to_json(hb.f, h, hb.d));
  std::optional<CanonicalShape> shape = canonical_shape(hb);
  return Json{{"accepted", true},
              {"d1", hb.d1},
              {"d2", hb.d2},
              {"d", hb.d},
              {"delta", hb.delta},
              {"minors", minors},
              {"generalized_zero_col1", gz.has_gz},
              {"col1_span", gz.mu1},
              {"canonical_shape", shape ? Json(shape_name(*shape)) : Json(nullptr)}};
}

int imax_of(const HBMatrix& hb, const Options& opt) { return opt.imax < 0 ? hb.delta : opt.imax; }

Json cmd_adegrees(const HBMatrix& hb, const Options& opt) {
  Oracle o(hb);
  Json strands = Json::array();
  for (int i = 0; i <= imax_of(hb, opt); ++i) {
    Json s{{"i", i}};
    if (i <= hb.delta) {
      ChartPrediction chart = chart_prediction(hb, i);
      s["rank"] = chart.rank;
      s["presentation"] = chart.presentation;
    }
    s["generators"] = multiset_to_json(o.minimal_generators(GeneratorKind::A_as_S_per_i, {i, i, opt.jmax}));
    if (in_table_scope(hb) && i >= hb.d1 - 1 && i <= hb.delta)
      s["predicted_twists"] = table1(hb).twists.at(i);
    else if (hb.d1 == hb.d2 && i == hb.d1 - 2)
      s["predicted_resolution"] = andy_json(andy_class(hb));
    else if (i >= hb.d2 - 1 && i <= hb.delta)
      s["predicted_twists"] = std::vector<int>(hb.delta - i + 1, 2);
    strands.push_back(std::move(s));
  }
  return Json{{"strands", strands}};
}

Json cmd_generators(const HBMatrix& hb, const Options& opt) {
  Oracle o(hb);
  Bounds window{0, opt.imax, opt.jmax};
  Json out{{"A_as_B", multiset_to_json(o.minimal_generators(GeneratorKind::A_as_B, window))},
           {"J_as_B", multiset_to_json(o.minimal_generators(GeneratorKind::J_as_B, window))}};
  if (in_table_scope(hb)) {
    DegreePrediction t = table1(hb);
    Json corners = Json::array();
    for (const Bidegree& b : t.corner_points) corners.push_back({b.i, b.j});
    out["predicted_from_d1_minus_1"] = Json{{"b_generators", multiset_to_json(t.b_generators)},
                                            {"corner_points", corners}};
  }
  if (hb.d1 == 2 && hb.d2 > 2 && canonical_shape(hb)) {
    Json elems = Json::array();
    for (const Goal5Element& e : goal5_generators(hb).elements)
      elems.push_back({{"label", e.label}, {"bidegree", {e.bideg.i, e.bideg.j}}, {"element", to_string(e.element)}});
    out["explicit_d1_2"] = elems;
  }
  return out;
}

Json cmd_oracle(const HBMatrix& hb, const Options& opt) {
  Oracle o(hb);
  ImplicitEquation eq = o.resultant();
  Json a = Json::array(), s = Json::array();
  for (int i = 0; i <= imax_of(hb, opt); ++i) {
    Json arow = Json::array(), srow = Json::array();
    for (int j = 0; j <= opt.jmax; ++j) {
      arow.push_back(o.a_dim(i, j));
      srow.push_back(o.sym_dim(i, j));
    }
    a.push_back(arow);
    s.push_back(srow);
  }
  return Json{{"implicit_equation", to_string(eq.F)}, {"r", eq.r}, {"a_dims", a}, {"sym_dims", s}};
}

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Check> verify_checks(const HBMatrix& hb, const Options& opt) {
  Oracle o(hb);
  std::vector<Check> out;
  auto check = [&](const std::string& name, const std::function<bool(std::string&)>& body) {
    Check c{name, true, {}};
    try {
      c.pass = body(c.detail);
    } catch (const Error& e) {
      c.pass = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  check("linkage", [&](std::string& why) {
    for (int i = hb.d2 - 1; i <= hb.delta; ++i) {
      auto minors = delta_minors(hb, i);
      const std::size_t want = hb.d - 1 - i;
      if (minors.size() != want || o.sym_span_dim(minors, i, 2) != want || o.a_dim(i, 2) != want) {
        why = "i = " + std::to_string(i);
        return false;
      }
    }
    return true;
  });
  check("duality", [&](std::string& why) {
    for (int j = 2; j <= 6; ++j)
      if (o.a_dim(hb.delta, j) != static_cast<std::size_t>(j * (j - 1) / 2)) return why = "top strand", false;
    for (int j = 0; j <= 6; ++j)
      if (o.a_dim(hb.delta + 1, j) != 0) return why = "above delta", false;
    for (int i = 0; i <= hb.delta; ++i)
      if (!o.pairing_injectivity(i, 6)) return why = "pairing at i = " + std::to_string(i), false;
    return true;
  });
  check("chart", [&](std::string& why) {
    for (int i = 0; i <= hb.delta; ++i)
      for (int j = 0; j <= 6; ++j)
        if (presented_kernel_dim(hb, i, j) != o.a_dim(i, j))
          return why = "(" + std::to_string(i) + "," + std::to_string(j) + ")", false;
    return true;
  });
  check("morley", [&](std::string& why) {
    if (!morley_delta_check(hb)) return why = "det H", false;
    if (hb.d1 == 2)
      for (int i = 1; i <= hb.d2 - 1; ++i)
        if (q_forms(hb, i).q != q_forms_d1_2(hb, i).q) return why = "q at i = " + std::to_string(i), false;
    return true;
  });
  check("random_elements", [&](std::string& why) {
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i <= hb.delta; ++i)
      for (int j = 0; j <= 4; ++j) {
        BPoly sum(hb.f);
        for (const BPoly& e : o.a_elements(i, j)) sum += e.scaled(static_cast<Elem>(rng() % hb.f.prime()));
        if (!substitute_T(sum, hb.h[0], hb.h[1], hb.h[2]).is_zero())
          return why = "(" + std::to_string(i) + "," + std::to_string(j) + ")", false;
      }
    return true;
  });
  if (in_table_scope(hb)) {
    check("degree_table", [&](std::string& why) {
      DegreePrediction t = table1(hb);
      for (int i = hb.d1 - 1; i <= hb.d2 - 1; ++i) {
        const auto& tw = t.twists.at(i);
        if (o.minimal_generators(GeneratorKind::A_as_S_per_i, {i, i, 8}) != twists_as_multiset(i, tw))
          return why = "generators at i = " + std::to_string(i), false;
        for (int j = 0; j <= 8; ++j)
          if (static_cast<long>(o.a_dim(i, j)) != free_hilbert(tw, j))
            return why = "Hilbert function at i = " + std::to_string(i), false;
      }
      if (o.minimal_generators(GeneratorKind::A_as_B, {hb.d1 - 1, -1, std::max(8, hb.d)}) != t.b_generators)
        return why = "B-generators", false;
      return true;
    });
  }
  if (hb.d1 == 2 && hb.d2 > 2 && canonical_shape(hb)) {
    check("explicit_d1_2", [&](std::string& why) {
      std::vector<BPoly> seeds{to_b(o.resultant().F)};
      for (const Goal5Element& e : goal5_generators(hb).elements) {
        if (!substitute_T(e.element, hb.h[0], hb.h[1], hb.h[2]).is_zero()) return why = e.label, false;
        seeds.push_back(e.element);
      }
      for (const BPoly& D : delta_minors(hb, hb.d2 - 1)) seeds.push_back(D);
      auto rep = o.generated_submodule(seeds, {});
      if (!rep.equals_a) return why = "does not fill A", false;
      return rep.generators == o.minimal_generators(GeneratorKind::A_as_B);
    });
  }
  if (hb.d1 == hb.d2 && hb.d1 >= 2) {
    check("balanced", [&](std::string& why) {
      AndyClass c = andy_class(hb);
      for (int j = 0; j <= 8; ++j)
        if (static_cast<long>(o.a_dim(hb.d1 - 2, j)) !=
            free_hilbert(c.generator_twists, j) - free_hilbert(c.syzygy_twists, j))
          return why = "j = " + std::to_string(j), false;
      return true;
    });
  }
  if (hb.d == 6 && o.resultant().r == 1) {
    check("sextic", [&](std::string& why) {
      SexticReport s = sextic_classify(hb);
      BidegreeMultiset j = o.minimal_generators(GeneratorKind::J_as_B, {0, -1, 6});
      j = minus_one(minus_one(j, {hb.d1, 1}), {hb.d2, 1});
      if (!s.noether_ok) return why = "Noether sum", false;
      if (j != s.equation_bidegrees) return why = "oracle " + to_string(j), false;
      return true;
    });
  }
  return out;
}

Json cmd_verify(const HBMatrix& hb, const Options& opt, int& exit_code) {
  Json checks = Json::array();
  bool all = true;
  for (const Check& c : verify_checks(hb, opt)) {
    Json j{{"check", c.name}, {"pass", c.pass}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    checks.push_back(std::move(j));
    all = all && c.pass;
  }
  exit_code = all ? 0 : 1;
  return Json{{"all_pass", all}, {"checks", checks}};
}

}  // namespace

RawPhi parse_input(const Json& j, std::optional<std::uint32_t> prime_override) {
  if (!j.is_object()) throw Error("input must be a JSON object");
  std::uint32_t p = kDefaultPrime;
  if (j.contains("prime")) p = j.at("prime").get<std::uint32_t>();
  if (prime_override) p = *prime_override;
  if (!is_prime(p)) throw Error("prime " + std::to_string(p) + " is not prime");
  const Field f(p);
  if (!j.contains("degrees") || !j.at("degrees").is_array() || j.at("degrees").size() != 2)
    throw Error("\"degrees\" must be [d1, d2]");
  if (!j.contains("phi") || !j.at("phi").is_array() || j.at("phi").size() != 3)
    throw Error("\"phi\" must have 3 rows");
  RawPhi raw;
  raw.f = f;
  raw.deg = {j["degrees"][0].get<int>(), j["degrees"][1].get<int>()};
  for (int m = 0; m < 2; ++m)
    if (raw.deg[m] < 1 || raw.deg[m] > 40) throw Error("column degrees must be in 1..40");
  for (int r = 0; r < 3; ++r) {
    const Json& row = j["phi"][r];
    if (!row.is_array() || row.size() != 2) throw Error("phi row " + std::to_string(r + 1) + " must have 2 entries");
    for (int m = 0; m < 2; ++m) {
      const Json& c = row[m];
      if (!c.is_array()) throw Error("phi entry must be a coefficient list");
      if (c.empty()) {
        raw.e[r][m] = BiForm(f);
        continue;
      }
      if (c.size() != static_cast<std::size_t>(raw.deg[m] + 1))
        throw Error("phi entry (" + std::to_string(r + 1) + "," + std::to_string(m + 1) + ") needs " +
                    std::to_string(raw.deg[m] + 1) + " coefficients");
      std::vector<Elem> coeffs;
      for (const Json& v : c) coeffs.push_back(f.from_int(v.get<std::int64_t>()));
      raw.e[r][m] = biform_from_coeffs(f, raw.deg[m], coeffs);
    }
  }
  return raw;
}

Json phi_to_json(const RawPhi& raw) {
  Json phi = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int m = 0; m < 2; ++m) row.push_back(coeffs_to_json(raw.f, raw.e[r][m], raw.deg[m]));
    phi.push_back(row);
  }
  return Json{{"prime", raw.f.prime()}, {"degrees", {raw.deg[0], raw.deg[1]}}, {"phi", phi}};
}

Json multiset_to_json(const BidegreeMultiset& m) {
  Json out = Json::array();
  for (const auto& [b, n] : m) out.push_back({b.i, b.j, n});
  return out;
}

BidegreeMultiset multiset_from_json(const Json& j) {
  BidegreeMultiset m;
  for (const Json& e : j) m[{e.at(0).get<int>(), e.at(1).get<int>()}] += e.at(2).get<int>();
  return m;
}

std::string fixture_hash(const RawPhi& raw) {
  const std::string text = phi_to_json(raw).dump();
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"validate", "adegrees", "generators", "classify-sextic",
                                              "andy",     "oracle",   "verify"};
  return names;
}

Report run(const std::string& command, const RawPhi& raw, const Options& opt) {
  Report rep;
  rep.body = Json{{"command", command}, {"fixture_hash", fixture_hash(raw)}, {"prime", raw.f.prime()}};
  if (std::find(commands().begin(), commands().end(), command) == commands().end()) {
    rep.exit_code = 2;
    rep.body["error"] = "unknown command '" + command + "'";
    return rep;
  }
  try {
    HBMatrix hb = validate(raw);
    rep.body["degrees"] = {hb.d1, hb.d2};
    Json result;
    if (command == "validate") result = cmd_validate(hb, opt);
    else if (command == "adegrees") result = cmd_adegrees(hb, opt);
    else if (command == "generators") result = cmd_generators(hb, opt);
    else if (command == "classify-sextic") result = sextic_json(sextic_classify(hb));
    else if (command == "andy") result = andy_json(andy_class(hb));
    else if (command == "oracle") result = cmd_oracle(hb, opt);
    else result = cmd_verify(hb, opt, rep.exit_code);
    rep.body["result"] = std::move(result);
  } catch (const Error& e) {
    rep.exit_code = 1;
    if (command == "validate") rep.body["result"] = Json{{"accepted", false}};
    rep.body["error"] = e.what();
  }
  return rep;
}

std::string render_text(const Json& j) {
  std::ostringstream os;
  std::function<void(const Json&, const std::string&)> walk = [&](const Json& v, const std::string& path) {
    if (v.is_object() && !v.empty()) {
      for (auto it = v.begin(); it != v.end(); ++it) walk(it.value(), path.empty() ? it.key() : path + "." + it.key());
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      for (std::size_t k = 0; k < v.size(); ++k) walk(v[k], path + "[" + std::to_string(k) + "]");
    } else {
      os << path << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  };
  walk(j, "");
  return os.str();
}

}  // namespace rees::cli
