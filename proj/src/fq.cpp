#include "patternsc/fq.hpp"

#include <numeric>
#include <stdexcept>

namespace patternsc {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cyclotomic coefficient overflow");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
}

void require_same_prime(int a, int b) {
  if (a != b) throw std::invalid_argument("cyclotomic elements over different primes");
}

// Reduce a length-p exponent vector to the length-(p-1) basis.
std::vector<std::int64_t> reduce_full(int p, const std::vector<std::int64_t>& full) {
  std::vector<std::int64_t> out(p - 1);
  const std::int64_t top = full[p - 1];
  for (int k = 0; k < p - 1; ++k) out[k] = checked_add(full[k], -top);
  return out;
}

}  // namespace

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

void require_supported_prime(int p) {
  if (!is_prime(p) || p > kMaxPrime)
    throw std::invalid_argument("unsupported field size " + std::to_string(p) +
                                " (need a prime <= " + std::to_string(kMaxPrime) + ")");
}

int mod_inverse(int value, int p) {
  value = mod_reduce(value, p);
  if (value == 0) throw std::domain_error("inverse of zero in F_p");
  // p is tiny; Fermat by repeated multiplication is fine.
  int result = 1;
  for (int e = 0; e < p - 2; ++e) result = result * value % p;
  return result;
}

Fp::Fp(int p, long long value) : p_(p), value_(mod_reduce(value, p)) {}

Fp Fp::inverse() const { return Fp(p_, mod_inverse(value_, p_)); }

Fp operator+(Fp a, Fp b) {
  if (a.p_ != b.p_) throw std::invalid_argument("F_p elements over different primes");
  return Fp(a.p_, a.value_ + b.value_);
}

Fp operator-(Fp a, Fp b) {
  if (a.p_ != b.p_) throw std::invalid_argument("F_p elements over different primes");
  return Fp(a.p_, a.value_ - b.value_);
}

Fp operator*(Fp a, Fp b) {
  if (a.p_ != b.p_) throw std::invalid_argument("F_p elements over different primes");
  return Fp(a.p_, static_cast<long long>(a.value_) * b.value_);
}

// ---------------------------------------------------------------------------

CyclotomicInt::CyclotomicInt(int p) : p_(p), coeffs_(static_cast<std::size_t>(p - 1), 0) {
  require_supported_prime(p);
}

CyclotomicInt CyclotomicInt::integer(int p, std::int64_t value) {
  CyclotomicInt x(p);
  x.coeffs_[0] = value;
  return x;
}

CyclotomicInt CyclotomicInt::from_exponent_counts(int p, std::span<const std::int64_t> counts) {
  if (static_cast<int>(counts.size()) != p)
    throw std::invalid_argument("exponent count vector must have length p");
  CyclotomicInt x(p);
  x.coeffs_ = reduce_full(p, std::vector<std::int64_t>(counts.begin(), counts.end()));
  return x;
}

bool CyclotomicInt::is_zero() const {
  for (auto c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<std::int64_t> CyclotomicInt::as_integer() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return std::nullopt;
  return coeffs_[0];
}

std::int64_t CyclotomicInt::content() const {
  std::int64_t g = 0;
  for (auto c : coeffs_) g = gcd64(g, c);
  return g;
}

CyclotomicInt CyclotomicInt::galois(int k) const {
  k = mod_reduce(k, p_);
  if (k == 0) throw std::invalid_argument("galois exponent must be coprime to p");
  std::vector<std::int64_t> full(p_, 0);
  for (int e = 0; e < p_ - 1; ++e) full[(e * k) % p_] = coeffs_[e];
  CyclotomicInt out(p_);
  out.coeffs_ = reduce_full(p_, full);
  return out;
}

std::int64_t CyclotomicInt::norm() const {
  CyclotomicInt product = *this;
  for (int k = 2; k < p_; ++k) product = product * galois(k);
  auto value = product.as_integer();
  if (!value) throw std::logic_error("norm is not rational");
  return *value;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = checked_mul(coeffs_[k], -1);
  return out;
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& other) {
  require_same_prime(p_, other.p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& other) {
  require_same_prime(p_, other.p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    coeffs_[k] = checked_add(coeffs_[k], checked_mul(other.coeffs_[k], -1));
  return *this;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  require_same_prime(a.p_, b.p_);
  const int p = a.p_;
  std::vector<std::int64_t> full(p, 0);
  for (int i = 0; i < p - 1; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (int j = 0; j < p - 1; ++j) {
      if (b.coeffs_[j] == 0) continue;
      auto& slot = full[(i + j) % p];
      slot = checked_add(slot, checked_mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  CyclotomicInt out(p);
  out.coeffs_ = reduce_full(p, full);
  return out;
}

CyclotomicInt CyclotomicInt::scaled(std::int64_t factor) const {
  CyclotomicInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out.coeffs_[k] = checked_mul(coeffs_[k], factor);
  return out;
}

CyclotomicInt CyclotomicInt::divided_exactly(std::int64_t divisor) const {
  if (divisor == 0) throw std::domain_error("division by zero");
  CyclotomicInt out(p_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] % divisor != 0) throw std::domain_error("inexact cyclotomic division");
    out.coeffs_[k] = coeffs_[k] / divisor;
  }
  return out;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (int k = 0; k < p_ - 1; ++k) {
    const std::int64_t c = coeffs_[k];
    if (c == 0) continue;
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (k == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + "*";
      out += k == 1 ? "z" : "z^" + std::to_string(k);
    }
  }
  return out.empty() ? "0" : out;
}

CyclotomicInt theta(Fp t) {
  const int p = t.p();
  std::vector<std::int64_t> counts(p, 0);
  counts[t.value()] = 1;
  return CyclotomicInt::from_exponent_counts(p, counts);
}

// ---------------------------------------------------------------------------

CyclotomicRat::CyclotomicRat(CyclotomicInt numerator, std::int64_t denominator)
    : num_(std::move(numerator)), den_(denominator) {
  if (den_ == 0) throw std::domain_error("zero denominator");
  normalize();
}

void CyclotomicRat::normalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  const std::int64_t g = gcd64(num_.content(), den_);
  if (g > 1) {
    num_ = num_.divided_exactly(g);
    den_ /= g;
  }
}

std::optional<std::int64_t> CyclotomicRat::as_integer() const {
  if (den_ != 1) return std::nullopt;
  return num_.as_integer();
}

CyclotomicRat CyclotomicRat::inverse() const {
  if (num_.is_zero()) throw std::domain_error("inverse of zero");
  const int p = num_.p();
  // a^{-1} = (prod_{k=2}^{p-1} sigma_k(a)) / N(a)
  CyclotomicInt cofactor = CyclotomicInt::integer(p, 1);
  for (int k = 2; k < p; ++k) cofactor = cofactor * num_.galois(k);
  const std::int64_t norm = (num_ * cofactor).as_integer().value();
  return CyclotomicRat(cofactor.scaled(den_), norm);
}

CyclotomicRat operator+(const CyclotomicRat& a, const CyclotomicRat& b) {
  const std::int64_t g = gcd64(a.den_, b.den_);
  const std::int64_t la = b.den_ / g;
  const std::int64_t lb = a.den_ / g;
  return CyclotomicRat(a.num_.scaled(la) + b.num_.scaled(lb), checked_mul(a.den_, la));
}

CyclotomicRat operator-(const CyclotomicRat& a, const CyclotomicRat& b) { return a + (-b); }

CyclotomicRat operator*(const CyclotomicRat& a, const CyclotomicRat& b) {
  return CyclotomicRat(a.num_ * b.num_, checked_mul(a.den_, b.den_));
}

std::string CyclotomicRat::to_string() const {
  const std::string num = num_.to_string();
  if (den_ == 1) return num;
  const bool single_term = num.find(' ') == std::string::npos;
  return (single_term ? num : "(" + num + ")") + " / " + std::to_string(den_);
}

std::vector<std::int64_t> CyclotomicRat::to_array() const {
  std::vector<std::int64_t> out{den_};
  out.insert(out.end(), num_.coeffs().begin(), num_.coeffs().end());
  return out;
}

CyclotomicRat CyclotomicRat::from_array(int p, std::span<const std::int64_t> array) {
  if (static_cast<int>(array.size()) != p) throw std::invalid_argument("cyclotomic array must have length p");
  std::vector<std::int64_t> full(p, 0);
  for (int k = 0; k < p - 1; ++k) full[k] = array[k + 1];
  return CyclotomicRat(CyclotomicInt::from_exponent_counts(p, full), array[0]);
}

std::uint64_t int_pow(std::uint64_t base, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  std::uint64_t result = 1;
  for (int e = 0; e < exponent; ++e) {
    if (__builtin_mul_overflow(result, base, &result)) throw std::overflow_error("integer power overflow");
  }
  return result;
}

}  // namespace patternsc
