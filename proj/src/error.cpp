#include "moranlab/error.hpp"

#include <cstdlib>
#include <sstream>

namespace moranlab {

std::uint64_t enumeration_cap() {
  constexpr std::uint64_t kDefaultCap = std::uint64_t{1} << 24;
  const char* env = std::getenv("MORANLAB_ENUM_CAP");
  if (env == nullptr || *env == '\0') return kDefaultCap;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (end == env || *end != '\0' || value == 0) return kDefaultCap;
  return value;
}

void require_enumerable(double count, const std::string& what) {
  const auto cap = static_cast<double>(enumeration_cap());
  if (count > cap) {
    std::ostringstream msg;
    msg << what << ": " << count << " items exceed the enumeration cap of " << cap
        << " (set MORANLAB_ENUM_CAP to raise it)";
    throw ResourceError(msg.str());
  }
}

}  // namespace moranlab
