#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

namespace skwv {

/// 64-bit FNV-1a content fingerprint, hex-encoded; used to stamp run inputs
/// into the summary so outputs are traceable to exact configs and data.
class ContentHash {
 public:
  ContentHash& feed(const void* data, std::size_t n);
  ContentHash& feed(const std::string& s) { return feed(s.data(), s.size()); }
  ContentHash& feed(const Eigen::ArrayXd& a) {
    return feed(a.data(), static_cast<std::size_t>(a.size()) * sizeof(double));
  }
  std::string hex() const;

 private:
  std::uint64_t state_ = 1469598103934665603ull;
};

}  // namespace skwv
