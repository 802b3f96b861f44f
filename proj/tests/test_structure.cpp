#include "doctest.h"
#include "rees/oracle.hpp"
#include "rees/structure.hpp"
#include "support.hpp"

using namespace rees;
using namespace rees::testing;

namespace {

const Field F101(101);

std::vector<HBMatrix> gz_fixtures() {
  std::mt19937 rng(43);
  return {ex1(), random_gz(F101, 2, 4, rng), random_gz(F101, 2, 5, rng), random_gz(F101, 3, 5, rng),
          random_gz(F101, 2, 3, rng)};
}

BidegreeMultiset per_i(Oracle& o, int i, int jmax) {
  return o.minimal_generators(GeneratorKind::A_as_S_per_i, {i, i, jmax});
}

BidegreeMultiset as_multiset(int i, const std::vector<int>& twists) {
  BidegreeMultiset m;
  for (int a : twists) m[{i, a}] += 1;
  return m;
}

}  // namespace

TEST_CASE("chart ranges") {
  HBMatrix hb = ex1();
  auto top = chart_prediction(hb, 3);
  CHECK(top.part == 3);
  CHECK(top.rank == 2);
  CHECK(top.target_ranks.empty());
  CHECK(top.presentation == "S(-2)^2");
  auto mid = chart_prediction(hb, 1);
  CHECK(mid.part == 2);
  CHECK(mid.rank == 2);
  CHECK(mid.target_ranks == std::vector<int>{2});
  auto low = chart_prediction(ex2(), 0);
  CHECK(low.part == 1);
  CHECK(low.rank == 1);
  CHECK(low.target_ranks == std::vector<int>{2, 2});
  CHECK_THROWS_AS(chart_prediction(hb, -1), Error);
  CHECK_THROWS_AS(chart_prediction(hb, 5), Error);
}

TEST_CASE("chart presentations match the oracle") {
  std::mt19937 rng(47);
  std::vector<HBMatrix> hbs{ex1(), ex2(), random_hb(F101, 2, 4, rng), random_hb(F101, 3, 3, rng),
                            random_hb(F101, 1, 4, rng), random_hb(F101, 3, 4, rng)};
  for (const HBMatrix& hb : hbs) {
    Oracle o(hb);
    for (int i = 0; i <= hb.delta; ++i) {
      CAPTURE(hb.d1);
      CAPTURE(hb.d2);
      CAPTURE(i);
      auto chart = chart_prediction(hb, i);
      for (int j = 0; j <= 6; ++j) CHECK(presented_kernel_dim(hb, i, j) == o.a_dim(i, j));
      // the second difference of the Hilbert function settles to the rank
      const long h0 = presented_kernel_dim(hb, i, 10), h1 = presented_kernel_dim(hb, i, 11),
                 h2 = presented_kernel_dim(hb, i, 12);
      CHECK(h2 - 2 * h1 + h0 == chart.rank);
    }
  }
}

TEST_CASE("free Hilbert function") {
  CHECK(free_hilbert({}, 5) == 0);
  CHECK(free_hilbert({2}, 1) == 0);
  CHECK(free_hilbert({2}, 2) == 1);
  CHECK(free_hilbert({2}, 4) == 6);
  CHECK(free_hilbert({2, 3}, 4) == 9);
}

TEST_CASE("claudia degrees") {
  HBMatrix hb = ex1();
  CHECK(claudia_degrees(hb, 1) == std::vector<int>{3, 3});
  CHECK(claudia_degrees(hb, 2) == std::vector<int>{2, 3});
  CHECK(claudia_degrees(hb, 3) == std::vector<int>{2, 2});
  std::mt19937 rng(53);
  HBMatrix h35 = random_gz(F101, 3, 5, rng);
  CHECK(claudia_degrees(h35, 2) == std::vector<int>{2, 3, 3});
  CHECK_THROWS_AS(claudia_degrees(hb, 0), Error);
  CHECK_THROWS_AS(claudia_degrees(hb, 4), Error);
  CHECK_THROWS_AS(claudia_degrees(ex2(), 2), Error);
  CHECK_THROWS_AS(claudia_degrees(random_hb(F101, 2, 4, rng), 1), Error);
}

TEST_CASE("claudia degrees match the oracle") {
  for (const HBMatrix& hb : gz_fixtures()) {
    Oracle o(hb);
    for (int i = hb.d1 - 1; i <= hb.d2 - 1; ++i) {
      CAPTURE(hb.d1);
      CAPTURE(hb.d2);
      CAPTURE(i);
      auto twists = claudia_degrees(hb, i);
      CHECK(hilbert_series_check(twists, hb.d + hb.d1 - 1 - i));
      CHECK(per_i(o, i, 8) == as_multiset(i, twists));
      for (int j = 0; j <= 8; ++j) CHECK(o.a_dim(i, j) == static_cast<std::size_t>(free_hilbert(twists, j)));
    }
  }
}

TEST_CASE("table1") {
  auto t = table1(ex1());
  CHECK(t.quotient == 3);
  CHECK(t.remainder == 0);
  CHECK(t.corner_points == std::vector<Bidegree>{{2, 2}});
  CHECK(t.b_generators == BidegreeMultiset{{{1, 3}, 2}, {{2, 2}, 1}});
  CHECK(t.twists.begin()->first == 1);
  CHECK(t.twists.rbegin()->first == 4);
  CHECK(t.twists.at(4) == std::vector<int>{2});

  std::mt19937 rng(59);
  auto t25 = table1(random_gz(F101, 2, 5, rng));
  CHECK(t25.b_generators == BidegreeMultiset{{{1, 3}, 1}, {{1, 4}, 1}, {{3, 2}, 1}});
  CHECK_THROWS_AS(table1(ex2()), Error);
}

TEST_CASE("table1 B-generators match the oracle") {
  for (const HBMatrix& hb : gz_fixtures()) {
    Oracle o(hb);
    auto t = table1(hb);
    CAPTURE(hb.d1);
    CAPTURE(hb.d2);
    CHECK(t.b_generators == o.minimal_generators(GeneratorKind::A_as_B, {hb.d1 - 1, -1, std::max(8, hb.d)}));
    for (const auto& [i, twists] : t.twists)
      if (i >= hb.d2) CHECK(per_i(o, i, 6) == as_multiset(i, twists));
  }
}

TEST_CASE("balanced classification") {
  AndyClass ex = andy_class(ex2());
  CHECK(ex.mu1 == 2);
  CHECK(ex.mu2 == 1);
  CHECK(ex.generator_twists == std::vector<int>{2, 2});
  CHECK(ex.free());
  CHECK(ex.ecp_labels == std::vector<std::string>{"μ2"});

  std::mt19937 rng(61);
  AndyClass generic = andy_class(random_hb(F101, 3, 3, rng));
  CHECK(generic.mu1 == 4);
  CHECK(generic.mu2 == 6);
  CHECK(generic.generator_twists == std::vector<int>{4, 4, 4, 4});
  CHECK(generic.syzygy_twists == std::vector<int>{5, 5});
  CHECK_THROWS_AS(andy_class(ex1()), Error);
}

TEST_CASE("balanced classification matches the oracle") {
  std::mt19937 rng(67);
  for (const HBMatrix& hb : {ex2(), random_hb(F101, 3, 3, rng), random_hb(F101, 2, 2, rng), random_hb(F101, 4, 4, rng)}) {
    Oracle o(hb);
    AndyClass c = andy_class(hb);
    CAPTURE(hb.d1);
    for (int j = 0; j <= 8; ++j)
      CHECK(static_cast<long>(o.a_dim(hb.d1 - 2, j)) == free_hilbert(c.generator_twists, j) - free_hilbert(c.syzygy_twists, j));
  }
}

TEST_CASE("sextic classification") {
  std::mt19937 rng(71);
  std::vector<HBMatrix> hbs{random_hb(F101, 1, 5, rng), random_gz(F101, 2, 4, rng), random_hb(F101, 2, 4, rng),
                            random_hb(F101, 3, 3, rng)};
  const std::vector<int> rows{1, 2, 3, 4};
  for (std::size_t k = 0; k < hbs.size(); ++k) {
    const HBMatrix& hb = hbs[k];
    SexticReport rep = sextic_classify(hb);
    CAPTURE(rows[k]);
    CHECK(rep.row == rows[k]);
    CHECK(rep.birational);
    CHECK(rep.noether_ok);
    BidegreeMultiset expect = rep.table_bidegrees;
    expect[{0, 6}] = 1;
    CHECK(rep.equation_bidegrees == expect);
    Oracle o(hb);
    BidegreeMultiset j = o.minimal_generators(GeneratorKind::J_as_B, {0, -1, 6});
    if (--j[{hb.d1, 1}] == 0) j.erase({hb.d1, 1});
    if (--j[{hb.d2, 1}] == 0) j.erase({hb.d2, 1});
    CAPTURE(to_string(j));
    CHECK(j == rep.equation_bidegrees);
  }
  auto first = sextic_classify(hbs[0]);
  CHECK(first.table_bidegrees == BidegreeMultiset{{{1, 5}, 1}, {{2, 4}, 1}, {{3, 3}, 1}, {{4, 2}, 1}});
  CHECK(first.multiplicities == std::vector<int>{5});
  // no generalized zero: A_(2,2) = 0 and A_(3,2) is 2-dimensional, so (3,2) appears twice
  Oracle o3(hbs[2]);
  CHECK(o3.a_dim(2, 2) == 0);
  CHECK(o3.a_dim(3, 2) == 2);
  CHECK(sextic_classify(hbs[2]).table_bidegrees.at({3, 2}) == 2);
  CHECK_THROWS_AS(sextic_classify(random_hb(F101, 2, 5, rng)), Error);
}
