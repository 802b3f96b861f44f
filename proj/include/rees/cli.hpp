#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rees/hb.hpp"
#include "rees/oracle.hpp"

namespace rees::cli {

using Json = nlohmann::ordered_json;

// Input file:
//   {"prime": 101, "degrees": [d1, d2],
//    "phi": [[col1, col2], [col1, col2], [col1, col2]]}
// where each entry is a coefficient list of length deg + 1, y-pure first,
// or [] for zero. "prime" is optional (default 10007).
RawPhi parse_input(const Json& j, std::optional<std::uint32_t> prime_override = std::nullopt);
Json phi_to_json(const RawPhi& raw);

// [[i, j, multiplicity], ...] in bidegree order.
Json multiset_to_json(const BidegreeMultiset& m);
BidegreeMultiset multiset_from_json(const Json& j);

// FNV-1a 64 of the normalized input, as 16 hex digits.
std::string fixture_hash(const RawPhi& raw);

struct Options {
  int imax = -1;  // default delta
  int jmax = 8;
  std::uint64_t seed = 1;
};

struct Report {
  int exit_code = 0;
  Json body;
};

const std::vector<std::string>& commands();

// Dispatches one command; module errors become {"error": ...} with exit code 1.
Report run(const std::string& command, const RawPhi& raw, const Options& opt = {});

// One "key: value" line per leaf.
std::string render_text(const Json& j);

}  // namespace rees::cli
