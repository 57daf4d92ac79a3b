#pragma once

// Power series in q truncated at a fixed degree, with exact integer
// coefficients, and the classical infinite products used as references.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rpart/core.hpp"

namespace rpart {

using BigInt = mpz_class;

/// Operands of a binary operation were truncated at different degrees.
class CapMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidResidue : public Error {
 public:
  using Error::Error;
};

/// A polynomial modulo q^(cap + 1).
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t cap = 0) : coeffs_(cap + 1) {}

  static TruncatedSeries one(std::size_t cap);
  /// c * q^e, or zero when e > cap.
  static TruncatedSeries monomial(std::size_t cap, std::size_t e, const BigInt& c);
  static TruncatedSeries from_coeffs(std::vector<BigInt> coeffs);

  std::size_t cap() const { return coeffs_.size() - 1; }
  std::span<const BigInt> coeffs() const { return coeffs_; }
  const BigInt& operator[](std::size_t i) const { return coeffs_[i]; }
  BigInt& operator[](std::size_t i) { return coeffs_[i]; }

  bool is_zero() const;
  /// Degree of the lowest non-zero term, or cap + 1 for the zero series.
  std::size_t valuation() const;

  /// "1 + 2*q - q^3"
  std::string to_string() const;

  TruncatedSeries& operator+=(const TruncatedSeries& rhs);
  TruncatedSeries& operator-=(const TruncatedSeries& rhs);
  /// Adds c * q^e * rhs in place, truncated.
  TruncatedSeries& add_shifted(const TruncatedSeries& rhs, std::size_t e, const BigInt& c);
  /// Adds a * b in place, truncated.
  TruncatedSeries& add_product(const TruncatedSeries& a, const TruncatedSeries& b);

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigInt> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries monomial_shift(const TruncatedSeries& a, std::size_t e, const BigInt& c);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  return add(a, b);
}
inline TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  return mul(a, b);
}

/// prod_{i>=1} 1/(1 - q^i) mod q^(n+1).
TruncatedSeries euler_product(std::size_t n);

/// prod_{i>=1} (1 + q^i) mod q^(n+1).
TruncatedSeries distinct_product(std::size_t n);

/// prod over part values v in [1, n] with (v mod modulus) in residues of
/// 1/(1 - q^v), mod q^(n+1).
TruncatedSeries residue_product(std::uint32_t modulus, std::span<const std::uint32_t> residues,
                                std::size_t n);

}  // namespace rpart
