#pragma once

#include <algorithm>
#include <compare>
#include <string>

namespace fig {

/// A degree in ℤ ∪ {−∞}; −∞ is the degree of the zero module.
class Degree {
 public:
  constexpr Degree() = default;  // −∞
  constexpr Degree(int value) : finite_(true), value_(value) {}  // NOLINT
  static constexpr Degree neg_inf() { return Degree(); }

  constexpr bool is_finite() const { return finite_; }
  constexpr bool is_neg_inf() const { return !finite_; }
  /// Only meaningful when finite.
  constexpr int value() const { return value_; }

  constexpr bool operator==(const Degree& o) const {
    return finite_ == o.finite_ && (!finite_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const Degree& o) const {
    if (!finite_ || !o.finite_)
      return static_cast<int>(finite_) <=> static_cast<int>(o.finite_);
    return value_ <=> o.value_;
  }
  /// −∞ absorbs: −∞ + k = −∞.
  constexpr Degree operator+(int k) const { return finite_ ? Degree(value_ + k) : Degree(); }
  constexpr Degree operator-(int k) const { return *this + (-k); }
  constexpr Degree operator+(const Degree& o) const {
    return finite_ && o.finite_ ? Degree(value_ + o.value_) : Degree();
  }

  std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

 private:
  bool finite_ = false;
  int value_ = 0;
};

inline Degree max(Degree a, Degree b) { return a < b ? b : a; }

}  // namespace fig
