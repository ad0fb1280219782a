#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fig {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldError : public Error {
 public:
  using Error::Error;
};

/// Field elements travel through the public API as rationals; a prime field
/// keeps them reduced to the canonical representative in [0, p).
using Scalar = mpq_class;

/// Coefficient field: GF(p) for a prime p < 2^31, or the rationals.
class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field rationals() { return Field(0); }

  bool is_prime() const { return p_ != 0; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  /// Canonical form of a value: lowest terms over Q, residue in [0, p) over GF(p).
  /// Throws FieldError when a denominator is divisible by p.
  Scalar normalize(const Scalar& value) const;
  Scalar from_int(long value) const { return normalize(Scalar(value)); }

  /// Parses "-3", "7", "2/3" into a canonical element.
  Scalar parse(std::string_view text) const;
  std::string format(const Scalar& value) const;
  std::string name() const;

  bool operator==(const Field&) const = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint64_t n);

}  // namespace fig
