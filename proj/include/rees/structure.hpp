#pragma once

#include <map>
#include <string>
#include <vector>

#include "rees/hb.hpp"
#include "rees/oracle.hpp"

namespace rees {

// Shape of A_i read from the strand resolutions.
struct ChartPrediction {
  int part = 0;                  // 1: i <= d1-2, 2: d1-1 <= i <= d2-2, 3: d2-1 <= i <= delta
  int rank = 0;
  int source_rank = 0;           // A_i = ker(S(-2)^source -> targets); free when targets is empty
  std::vector<int> target_ranks; // copies of S(-1) hit by the transposed Upsilon blocks
  std::string presentation;
};

ChartPrediction chart_prediction(const HBMatrix& hb, int i);

// dim of the kernel of the presenting map in T-degree j.
std::size_t presented_kernel_dim(const HBMatrix& hb, int i, int j);

// Hilbert function of (+) S(-a), a in twists, in degree j.
long free_hilbert(const std::vector<int>& twists, int j);

// Twists of the free module A_i, sorted: {alpha x (d1 - beta), alpha + 1 x beta}
// where d + d1 - 1 - i = alpha d1 + beta.
std::vector<int> claudia_degrees(const HBMatrix& hb, int i);

struct DegreePrediction {
  int quotient = 0;   // floor(d / d1)
  int remainder = 0;  // d mod d1
  std::map<int, std::vector<int>> twists;  // i in [d1-1, delta] -> S-generator T-degrees
  std::vector<Bidegree> corner_points;
  BidegreeMultiset b_generators;  // minimal B-generators of A_{>= d1-1}
};

DegreePrediction table1(const HBMatrix& hb);

struct AndyClass {
  int mu1 = 0, mu2 = 0;
  std::vector<int> generator_twists;  // resolution of A_(d1-2)
  std::vector<int> syzygy_twists;
  std::vector<std::string> ecp_labels;
  bool free() const { return syzygy_twists.empty(); }
};

AndyClass andy_class(const HBMatrix& hb);

struct SexticReport {
  int d1 = 0, d2 = 0;
  bool birational = false;
  int r = 0;
  int row = 0;  // 1..7, top to bottom
  BidegreeMultiset table_bidegrees;     // the printed row
  BidegreeMultiset equation_bidegrees;  // the printed row plus the implicit equation (0, 6)
  std::vector<int> multiplicities;      // singularities on or infinitely near the curve
  std::string configuration;
  bool noether_ok = false;              // sum of binom(m, 2) is 10
};

SexticReport sextic_classify(const HBMatrix& hb);

}  // namespace rees
