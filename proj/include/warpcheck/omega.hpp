#pragma once

#include <cassert>
#include <cstdint>
#include <ostream>
#include <string>

namespace warpcheck {

/* A value in omega-plus: a natural number or the top element w. */
class OmegaPlus {
public:
  constexpr OmegaPlus() : n_(0) {}

  static constexpr OmegaPlus fin(int64_t n) {
    assert(n >= 0);
    OmegaPlus v;
    v.n_ = n;
    return v;
  }
  static constexpr OmegaPlus omega() {
    OmegaPlus v;
    v.n_ = kOmega;
    return v;
  }

  constexpr bool is_omega() const { return n_ == kOmega; }
  constexpr bool is_fin() const { return n_ != kOmega; }
  constexpr int64_t value() const {
    assert(is_fin());
    return n_;
  }

  /* Total order with w greatest; kOmega = INT64_MAX makes the raw
     comparison agree with the intended one. */
  friend constexpr bool operator==(OmegaPlus a, OmegaPlus b) { return a.n_ == b.n_; }
  friend constexpr bool operator!=(OmegaPlus a, OmegaPlus b) { return a.n_ != b.n_; }
  friend constexpr bool operator<(OmegaPlus a, OmegaPlus b) { return a.n_ < b.n_; }
  friend constexpr bool operator<=(OmegaPlus a, OmegaPlus b) { return a.n_ <= b.n_; }
  friend constexpr bool operator>(OmegaPlus a, OmegaPlus b) { return a.n_ > b.n_; }
  friend constexpr bool operator>=(OmegaPlus a, OmegaPlus b) { return a.n_ >= b.n_; }

  /* Saturating addition: anything plus w is w. */
  friend constexpr OmegaPlus add_sat(OmegaPlus a, OmegaPlus b) {
    if (a.is_omega() || b.is_omega()) return omega();
    return fin(a.n_ + b.n_);
  }

  /* Successor; fixes w. */
  constexpr OmegaPlus succ() const {
    return is_omega() ? omega() : fin(n_ + 1);
  }

  std::string str() const {
    return is_omega() ? "w" : std::to_string(n_);
  }

  friend std::ostream& operator<<(std::ostream& os, OmegaPlus v) {
    return os << v.str();
  }

private:
  static constexpr int64_t kOmega = INT64_MAX;
  int64_t n_;
};

inline constexpr OmegaPlus omega = OmegaPlus::omega();

} // namespace warpcheck
