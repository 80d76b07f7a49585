#include "moranlab/format.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace moranlab {

std::string fmt_num(double v, int significant) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // folds -0
  char buf[64];
  // to_chars never consults the C locale
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, significant);
  return std::string(buf, res.ptr);
}

double round_sig(double v, int significant) {
  if (!std::isfinite(v) || v == 0.0) return v == 0.0 ? 0.0 : v;
  const std::string s = fmt_num(v, significant);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

}  // namespace moranlab
