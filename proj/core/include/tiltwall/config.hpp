#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "tiltwall/charges.hpp"

namespace tiltwall {

struct RunOptions {
  std::optional<std::int64_t> order;
  std::optional<std::int64_t> n_max;
  std::optional<int> decimal;
  std::optional<std::int64_t> granularity;
  friend bool operator==(const RunOptions&, const RunOptions&) = default;
};

struct RunConfig {
  ThreefoldData threefold;
  CurveCharge charge;
  RunOptions options;
  /// FNV-1a 64 of the raw config text, as 16 hex digits.
  std::string hash;
};

/// Parses the TOML subset used by run configs:
///
///   [threefold]  h3, c2H, b2, tors (integers), pic_rank1 (bool)
///   [charge]     betaH, m (integer or "p/q"), n (integer), Q (integer,
///                "p/q" or "auto")
///   [options]    order, n_max, decimal, granularity (integers)
///
/// `#` starts a comment. Unknown sections or keys, duplicates and malformed
/// values throw `Error` with kind `Config`. Missing keys keep their defaults
/// (h3 = 1, c2H = 0, b2 = 1, tors = 1, pic_rank1 = true, betaH = m = 0,
/// n = 1, Q = "auto").
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);

std::string fnv1a_hex(const std::string& text);

}  // namespace tiltwall
