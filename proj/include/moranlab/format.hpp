#pragma once

#include <string>

namespace moranlab {

/// Locale-independent "%.{sig}g" rendering; integers print without exponent.
std::string fmt_num(double v, int significant = 12);

/// The value rounded to `significant` digits, for stable JSON output.
double round_sig(double v, int significant = 12);

}  // namespace moranlab
