#pragma once

// Flat "key = value" reports; see docs/report-format.md.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fqg/engine.hpp"

namespace fqg::cli {

class Report {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, std::uint64_t value) { set(std::move(key), std::to_string(value)); }
  void set(std::string key, const char* value) { set(std::move(key), std::string(value)); }
  void set_bool(std::string key, bool value) { set(std::move(key), value ? "yes" : "no"); }
  std::string str() const;

 private:
  std::vector<std::pair<std::string, std::string>> lines_;
};

/// "[(1,1,4), (2,1,1)]", entries (d, l, alpha) in (d, l) order.
std::string format_summary(const AlphaMap& alpha);
/// "F_3^(4) (+) F_9^(2) (+) M_2(F_9)"
std::string format_wedderburn(const WedderburnSummary& s);
/// "[(1), (0), ...]"
std::string format_vector(const AlgebraElement& e);

}  // namespace fqg::cli
