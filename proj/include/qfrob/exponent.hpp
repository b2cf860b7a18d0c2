#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qfrob {

inline constexpr int kMaxRank = 16;

// Exponent vector in Z^J, |J| <= kMaxRank. Unused slots stay zero, so
// comparisons and hashing can look at the full array.
class ExpVec {
 public:
  ExpVec() = default;
  explicit ExpVec(int n) : n_(static_cast<uint8_t>(n)) {
    if (n < 0 || n > kMaxRank) throw std::invalid_argument("ExpVec: rank out of range");
  }
  ExpVec(std::initializer_list<int> xs) : ExpVec(static_cast<int>(xs.size())) {
    int k = 0;
    for (int x : xs) e_[k++] = x;
  }
  static ExpVec from(const std::vector<int>& xs) {
    ExpVec r(static_cast<int>(xs.size()));
    for (std::size_t k = 0; k < xs.size(); ++k) r.e_[k] = xs[k];
    return r;
  }
  static ExpVec unit(int n, int k) {
    ExpVec r(n);
    r.e_[k] = 1;
    return r;
  }

  int size() const noexcept { return n_; }
  int32_t operator[](int k) const noexcept { return e_[k]; }
  int32_t& operator[](int k) noexcept { return e_[k]; }
  std::vector<int> to_vector() const { return std::vector<int>(e_.begin(), e_.begin() + n_); }

  bool is_zero() const noexcept {
    for (int k = 0; k < n_; ++k) {
      if (e_[k] != 0) return false;
    }
    return true;
  }
  bool is_nonnegative() const noexcept {
    for (int k = 0; k < n_; ++k) {
      if (e_[k] < 0) return false;
    }
    return true;
  }
  bool divisible_by(int l) const noexcept {
    for (int k = 0; k < n_; ++k) {
      if (e_[k] % l != 0) return false;
    }
    return true;
  }

  ExpVec& operator+=(const ExpVec& o) noexcept {
    for (int k = 0; k < n_; ++k) e_[k] += o.e_[k];
    return *this;
  }
  ExpVec& operator-=(const ExpVec& o) noexcept {
    for (int k = 0; k < n_; ++k) e_[k] -= o.e_[k];
    return *this;
  }
  friend ExpVec operator+(ExpVec a, const ExpVec& b) noexcept { return a += b; }
  friend ExpVec operator-(ExpVec a, const ExpVec& b) noexcept { return a -= b; }
  ExpVec operator-() const noexcept {
    ExpVec r(*this);
    for (int k = 0; k < n_; ++k) r.e_[k] = -r.e_[k];
    return r;
  }
  ExpVec scaled(int c) const noexcept {
    ExpVec r(*this);
    for (int k = 0; k < n_; ++k) r.e_[k] *= c;
    return r;
  }
  // Requires divisible_by(l).
  ExpVec divided(int l) const noexcept {
    ExpVec r(*this);
    for (int k = 0; k < n_; ++k) r.e_[k] /= l;
    return r;
  }
  ExpVec positive_part() const noexcept {
    ExpVec r(*this);
    for (int k = 0; k < n_; ++k) r.e_[k] = r.e_[k] > 0 ? r.e_[k] : 0;
    return r;
  }

  friend bool operator==(const ExpVec& a, const ExpVec& b) noexcept = default;
  // Lexicographic.
  friend std::strong_ordering operator<=>(const ExpVec& a, const ExpVec& b) noexcept {
    for (int k = 0; k < kMaxRank; ++k) {
      if (a.e_[k] != b.e_[k]) return a.e_[k] <=> b.e_[k];
    }
    return a.n_ <=> b.n_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = n_;
    for (int k = 0; k < n_; ++k) h = h * 0x9E3779B97F4A7C15ull + static_cast<uint32_t>(e_[k]);
    return h;
  }

  std::string to_string() const {
    std::string s = "(";
    for (int k = 0; k < n_; ++k) s += (k ? "," : "") + std::to_string(e_[k]);
    return s + ")";
  }

 private:
  std::array<int32_t, kMaxRank> e_{};
  uint8_t n_ = 0;
};

struct ExpVecHash {
  std::size_t operator()(const ExpVec& a) const noexcept { return a.hash(); }
};

}  // namespace qfrob
