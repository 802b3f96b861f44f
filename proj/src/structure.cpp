#include "rees/structure.hpp"

#include <algorithm>
#include <sstream>

namespace rees {

namespace {

std::string power(int twist, int count) {
  std::ostringstream os;
  os << "S(" << -twist << ")";
  if (count != 1) os << "^" << count;
  return os.str();
}

std::vector<int> repeat(int twist, int count) { return std::vector<int>(std::max(count, 0), twist); }

std::vector<int> concat(std::initializer_list<std::vector<int>> parts) {
  std::vector<int> out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  std::sort(out.begin(), out.end());
  return out;
}

long binom2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

void require_table_scope(const HBMatrix& hb) {
  if (hb.d1 >= hb.d2) throw Error("the degree table requires d1 < d2");
  if (!generalized_zero_col1(hb).has_gz)
    throw Error("the degree table requires a generalized zero in column 1");
}

}  // namespace

ChartPrediction chart_prediction(const HBMatrix& hb, int i) {
  if (i < 0 || i > hb.delta) throw Error("chart_prediction needs 0 <= i <= delta");
  ChartPrediction out;
  out.source_rank = hb.delta - i + 1;
  std::ostringstream os;
  if (i <= hb.d1 - 2) {
    out.part = 1;
    out.rank = i + 1;
    out.target_ranks = {hb.d2 - i - 1, hb.d1 - i - 1};
    os << "ker [Upsilon_(" << hb.d2 - i - 1 << ",1)^T ; Upsilon_(" << hb.d1 - i - 1 << ",2)^T] : "
       << power(2, out.source_rank) << " -> " << power(1, hb.d2 - i - 1) << " + " << power(1, hb.d1 - i - 1);
  } else if (i <= hb.d2 - 2) {
    out.part = 2;
    out.rank = hb.d1;
    out.target_ranks = {hb.d2 - i - 1};
    os << "ker Upsilon_(" << hb.d2 - i - 1 << ",1)^T : " << power(2, out.source_rank) << " -> "
       << power(1, hb.d2 - i - 1);
  } else {
    out.part = 3;
    out.rank = out.source_rank;
    os << power(2, out.source_rank);
  }
  out.presentation = os.str();
  return out;
}

std::size_t presented_kernel_dim(const HBMatrix& hb, int i, int j) {
  ChartPrediction chart = chart_prediction(hb, i);
  if (j < 2) return 0;
  const auto src = Strand::t_monomials(j - 2);
  const std::size_t n_src = src.size();
  const std::size_t n_tgt = Strand::t_monomials(j - 1).size();
  const std::size_t cols = chart.source_rank * n_src;
  if (chart.target_ranks.empty()) return cols;

  std::vector<LinMatrix> blocks;
  for (std::size_t b = 0; b < chart.target_ranks.size(); ++b)
    if (chart.target_ranks[b] > 0) blocks.push_back(upsilon(hb, chart.target_ranks[b], static_cast<int>(b) + 1));
  std::size_t rows = 0;
  for (const LinMatrix& u : blocks) rows += u.cols * n_tgt;
  if (rows == 0) return cols;

  // Row block r of the transpose of an Upsilon sends chi to sum_c Upsilon(c, r) chi_c.
  Matrix m(hb.f, rows, cols);
  std::size_t row0 = 0;
  for (const LinMatrix& u : blocks) {
    for (std::size_t r = 0; r < u.cols; ++r)
      for (std::size_t c = 0; c < u.rows; ++c)
        for (int v = 0; v < 3; ++v) {
          const Elem a = u.coef[v](c, r);
          if (!a) continue;
          for (std::size_t s = 0; s < n_src; ++s) {
            Exp<3> e = src[s];
            ++e[v];
            m(row0 + r * n_tgt + Strand::t_index(j - 1, e), c * n_src + s) = a;
          }
        }
    row0 += u.cols * n_tgt;
  }
  return cols - rank(m);
}

long free_hilbert(const std::vector<int>& twists, int j) {
  long sum = 0;
  for (int a : twists)
    if (a <= j) sum += binom2(j - a + 2);
  return sum;
}

std::vector<int> claudia_degrees(const HBMatrix& hb, int i) {
  require_table_scope(hb);
  if (i < hb.d1 - 1 || i > hb.d2 - 1) throw Error("claudia_degrees needs d1 - 1 <= i <= d2 - 1");
  const int n = hb.d + hb.d1 - 1 - i;
  const int alpha = n / hb.d1, beta = n % hb.d1;
  return concat({repeat(alpha, hb.d1 - beta), repeat(alpha + 1, beta)});
}

DegreePrediction table1(const HBMatrix& hb) {
  require_table_scope(hb);
  DegreePrediction out;
  out.quotient = hb.d / hb.d1;
  out.remainder = hb.d % hb.d1;
  for (int i = hb.d1 - 1; i <= hb.delta; ++i)
    out.twists[i] = i <= hb.d2 - 1 ? claudia_degrees(hb, i) : repeat(2, hb.delta - i + 1);
  for (int lambda = 1; lambda <= out.quotient - 2; ++lambda)
    out.corner_points.push_back({lambda * hb.d1 + out.remainder, out.quotient - lambda});
  auto add = [&](Bidegree b, int count) {
    if (count > 0) out.b_generators[b] += count;
  };
  add({hb.d1 - 1, out.quotient + 1}, out.remainder);
  add({hb.d1 - 1, out.quotient}, hb.d1 - out.remainder);
  for (const Bidegree& b : out.corner_points) add(b, 1);
  return out;
}

AndyClass andy_class(const HBMatrix& hb) {
  if (hb.d1 != hb.d2) throw Error("the balanced classification requires d1 = d2");
  AndyClass out;
  out.mu1 = mu_I1(hb);
  out.mu2 = mu_I2C(hb);
  const int d1 = hb.d1;
  const std::pair<int, int> pair{out.mu1, out.mu2};
  if (out.mu1 > d1 + 1)
    throw Error("mu(I1(phi)) exceeds d1 + 1");
  if (pair == std::pair{6, 6}) {
    out.generator_twists = concat({repeat(2, d1 - 5), repeat(3, 6)});
    out.syzygy_twists = repeat(4, 2);
    out.ecp_labels = {"(∅,μ6)"};
  } else if (pair == std::pair{5, 6}) {
    out.generator_twists = concat({repeat(2, d1 - 4), repeat(3, 3), repeat(4, 1)});
    out.syzygy_twists = repeat(5, 1);
    out.ecp_labels = {"(∅,μ5)"};
  } else if (pair == std::pair{5, 5}) {
    out.generator_twists = concat({repeat(2, d1 - 4), repeat(3, 4)});
    out.syzygy_twists = repeat(4, 1);
    out.ecp_labels = {"(c,μ5)"};
  } else if (pair == std::pair{4, 6}) {
    out.generator_twists = concat({repeat(2, d1 - 3), repeat(4, 4)});
    out.syzygy_twists = repeat(5, 2);
    out.ecp_labels = {"(∅,μ4)"};
  } else if (pair == std::pair{4, 5}) {
    out.generator_twists = concat({repeat(2, d1 - 3), repeat(3, 1), repeat(4, 2)});
    out.syzygy_twists = repeat(5, 1);
    out.ecp_labels = {"(c,μ4)"};
  } else if (pair == std::pair{4, 4}) {
    out.generator_twists = concat({repeat(2, d1 - 3), repeat(3, 2)});
    out.ecp_labels = {"(c,c)", "(c:c)"};
  } else if (pair == std::pair{3, 3}) {
    out.generator_twists = concat({repeat(2, d1 - 2), repeat(4, 1)});
    out.ecp_labels = {"(c,c,c)", "(c:c,c)", "(c:c:c)"};
  } else if (pair == std::pair{2, 1}) {
    out.generator_twists = repeat(2, d1 - 1);
    out.ecp_labels = {"μ2"};
  } else {
    throw Error("(mu(I1(phi)), mu(I2(C))) = (" + std::to_string(out.mu1) + "," + std::to_string(out.mu2) +
                ") is not in the balanced classification chart");
  }
  return out;
}

SexticReport sextic_classify(const HBMatrix& hb) {
  if (hb.d != 6) throw Error("sextic_classify requires d = 6");
  Oracle oracle(hb);
  SexticReport out;
  out.d1 = hb.d1;
  out.d2 = hb.d2;
  out.r = oracle.resultant().r;
  out.birational = out.r == 1;
  if (!out.birational) throw Error("sextic_classify requires a birational parameterization (r = 1)");

  auto with_doubles = [](std::vector<int> m, int n) {
    m.insert(m.end(), n, 2);
    return m;
  };
  if (hb.d1 == 1) {
    out.row = 1;
    out.table_bidegrees = {{{1, 5}, 1}, {{2, 4}, 1}, {{3, 3}, 1}, {{4, 2}, 1}};
    out.multiplicities = {5};
    out.configuration = "1 of multiplicity 5 on the curve";
  } else if (hb.d1 == 2) {
    if (generalized_zero_col1(hb).has_gz) {
      out.row = 2;
      out.table_bidegrees = {{{1, 3}, 2}, {{2, 2}, 1}};
      out.multiplicities = with_doubles({4}, 4);
      out.configuration = "1 of multiplicity 4 on the curve; 4 double points on or near the curve";
    } else {
      out.row = 3;
      // (3,2) occurs twice: A_(3,2) = [S(-2)^2]_2 while A_(2,2) = 0, since the
      // three entries of column 1 have independent coefficient forms.
      out.table_bidegrees = {{{1, 4}, 4}, {{2, 3}, 3}, {{3, 2}, 2}};
      out.multiplicities = with_doubles({}, 10);
      out.configuration = "10 double points on or near the curve";
    }
  } else {
    const int triples = 6 - mu_I2C(hb);
    switch (triples) {
      case 0:
        out.row = 4;
        out.table_bidegrees = {{{1, 4}, 4}, {{2, 2}, 3}};
        out.multiplicities = with_doubles({}, 10);
        out.configuration = "10 double points on or near the curve";
        break;
      case 1:
        out.row = 5;
        out.table_bidegrees = {{{1, 3}, 1}, {{1, 4}, 2}, {{2, 2}, 3}};
        out.multiplicities = with_doubles({3}, 7);
        out.configuration = "1 of multiplicity 3 on the curve; 7 double points on or near the curve";
        break;
      case 2:
        out.row = 6;
        out.table_bidegrees = {{{1, 3}, 2}, {{2, 2}, 3}};
        out.multiplicities = with_doubles({3, 3}, 4);
        out.configuration = "2 of multiplicity 3 and 4 double points on or near the curve";
        break;
      case 3:
        out.row = 7;
        out.table_bidegrees = {{{1, 2}, 1}, {{1, 4}, 1}, {{2, 2}, 1}};
        out.multiplicities = with_doubles({3, 3, 3}, 1);
        out.configuration = "3 of multiplicity 3 and 1 double point on or near the curve";
        break;
      default:
        throw Error("6 - mu(I2(C)) = " + std::to_string(triples) + " is outside 0..3");
    }
  }
  out.equation_bidegrees = out.table_bidegrees;
  out.equation_bidegrees[{0, 6}] += 1;
  long noether = 0;
  for (int m : out.multiplicities) noether += binom2(m);
  out.noether_ok = noether == 10;
  return out;
}

}  // namespace rees
