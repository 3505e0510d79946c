#include "report.hpp"

#include <sstream>

namespace fqg::cli {

namespace {

// q^l in decimal, or "q^l" once it no longer fits
std::string field_size(std::uint64_t q, std::uint64_t l) {
  unsigned __int128 v = 1;
  for (std::uint64_t i = 0; i < l; ++i) {
    v *= q;
    if (v > ~std::uint64_t{0}) return std::to_string(q) + "^" + std::to_string(l);
  }
  return std::to_string(static_cast<std::uint64_t>(v));
}

}  // namespace

void Report::set(std::string key, std::string value) {
  for (char& c : value)
    if (c == '\n') c = ' ';
  lines_.emplace_back(std::move(key), std::move(value));
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : lines_) out += k + " = " + v + "\n";
  return out;
}

std::string format_summary(const AlphaMap& alpha) {
  std::ostringstream out;
  out << '[';
  bool first = true;
  for (const auto& [key, a] : alpha) {
    out << (first ? "" : ", ") << '(' << key.first << ',' << key.second << ',' << a << ')';
    first = false;
  }
  out << ']';
  return out.str();
}

std::string format_wedderburn(const WedderburnSummary& s) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, a] : s.alpha) {
    const auto [d, l] = key;
    std::string field = "F_" + field_size(s.q, l);
    if (d > 1) field = "M_" + std::to_string(d) + "(" + field + ")";
    out << (first ? "" : " (+) ") << field;
    if (a > 1) out << "^(" << a << ')';
    first = false;
  }
  return first ? "0" : out.str();
}

std::string format_vector(const AlgebraElement& e) {
  std::string out = "[";
  for (std::size_t g = 0; g < e.c.size(); ++g) out += (g ? ", " : "") + format_coeff(e.ring->field(), e.c[g]);
  return out + "]";
}

}  // namespace fqg::cli
