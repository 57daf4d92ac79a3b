#include "rpart/series.hpp"

#include <algorithm>

namespace rpart {

namespace {

void require_same_cap(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.cap() != b.cap()) {
    throw CapMismatch("series truncated at " + std::to_string(a.cap()) + " and " +
                      std::to_string(b.cap()));
  }
}

}  // namespace

TruncatedSeries TruncatedSeries::one(std::size_t cap) {
  TruncatedSeries s(cap);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t cap, std::size_t e, const BigInt& c) {
  TruncatedSeries s(cap);
  if (e <= cap) s.coeffs_[e] = c;
  return s;
}

TruncatedSeries TruncatedSeries::from_coeffs(std::vector<BigInt> coeffs) {
  if (coeffs.empty()) coeffs.emplace_back(0);
  TruncatedSeries s;
  s.coeffs_ = std::move(coeffs);
  return s;
}

bool TruncatedSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

std::size_t TruncatedSeries::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return i;
  return coeffs_.size();
}

std::string TruncatedSeries::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0) {
      out += mag.get_str();
      continue;
    }
    if (!unit) out += mag.get_str() + "*";
    out += "q";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
  require_same_cap(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
  require_same_cap(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

TruncatedSeries& TruncatedSeries::add_shifted(const TruncatedSeries& rhs, std::size_t e,
                                              const BigInt& c) {
  require_same_cap(*this, rhs);
  const std::size_t cap = this->cap();
  if (e > cap || sgn(c) == 0) return *this;
  for (std::size_t i = rhs.valuation(); i + e <= cap; ++i) {
    if (sgn(rhs.coeffs_[i]) == 0) continue;
    coeffs_[i + e] += c * rhs.coeffs_[i];
  }
  return *this;
}

TruncatedSeries& TruncatedSeries::add_product(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_cap(a, b);
  require_same_cap(*this, a);
  const std::size_t cap = this->cap();
  const std::size_t va = a.valuation();
  const std::size_t vb = b.valuation();
  if (va + vb > cap) return *this;
  // Sparse operands dominate; skip zero coefficients of the outer factor.
  for (std::size_t i = va; i + vb <= cap; ++i) {
    const BigInt& ai = a.coeffs_[i];
    if (sgn(ai) == 0) continue;
    for (std::size_t j = vb; i + j <= cap; ++j) {
      const BigInt& bj = b.coeffs_[j];
      if (sgn(bj) == 0) continue;
      mpz_addmul(coeffs_[i + j].get_mpz_t(), ai.get_mpz_t(), bj.get_mpz_t());
    }
  }
  return *this;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
  TruncatedSeries out = a;
  out += b;
  return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_cap(a, b);
  TruncatedSeries out(a.cap());
  out.add_product(a, b);
  return out;
}

TruncatedSeries monomial_shift(const TruncatedSeries& a, std::size_t e, const BigInt& c) {
  TruncatedSeries out(a.cap());
  out.add_shifted(a, e, c);
  return out;
}

namespace {

// Multiplies s by 1/(1 - q^v) in place: s[i] += s[i - v], ascending.
void divide_by_one_minus(TruncatedSeries& s, std::size_t v) {
  for (std::size_t i = v; i <= s.cap(); ++i) s[i] += s[i - v];
}

}  // namespace

TruncatedSeries euler_product(std::size_t n) {
  auto s = TruncatedSeries::one(n);
  for (std::size_t v = 1; v <= n; ++v) divide_by_one_minus(s, v);
  return s;
}

TruncatedSeries distinct_product(std::size_t n) {
  auto s = TruncatedSeries::one(n);
  for (std::size_t v = 1; v <= n; ++v)
    for (std::size_t i = n; i >= v; --i) s[i] += s[i - v];
  return s;
}

TruncatedSeries residue_product(std::uint32_t modulus, std::span<const std::uint32_t> residues,
                                std::size_t n) {
  if (modulus == 0) throw InvalidResidue("modulus must be positive");
  std::vector<bool> allowed(modulus, false);
  for (auto r : residues) {
    if (r >= modulus) {
      throw InvalidResidue("residue " + std::to_string(r) + " outside [0, " +
                           std::to_string(modulus) + ")");
    }
    allowed[r] = true;
  }
  auto s = TruncatedSeries::one(n);
  for (std::size_t v = 1; v <= n; ++v)
    if (allowed[v % modulus]) divide_by_one_minus(s, v);
  return s;
}

}  // namespace rpart
