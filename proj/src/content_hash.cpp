#include "skwv/content_hash.hpp"

#include <cstdio>

namespace skwv {

ContentHash& ContentHash::feed(const void* data, std::size_t n) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    state_ ^= p[i];
    state_ *= 1099511628211ull;
  }
  return *this;
}

std::string ContentHash::hex() const {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(state_));
  return buf;
}

}  // namespace skwv
