#pragma once

// Prime field F_p and the cyclotomic ring Z[zeta_p] that holds character values.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace patternsc {

// Largest supported characteristic. Bounds the length of cyclotomic coefficient vectors.
inline constexpr int kMaxPrime = 17;

bool is_prime(int value);

// Throws std::invalid_argument unless p is a prime in [2, kMaxPrime].
void require_supported_prime(int p);

// Residue helpers on raw ints, used by the inner loops of orbit code.
inline int mod_reduce(long long value, int p) {
  long long r = value % p;
  return static_cast<int>(r < 0 ? r + p : r);
}
int mod_inverse(int value, int p);

class Fp {
 public:
  Fp(int p, long long value);

  int p() const { return p_; }
  int value() const { return value_; }
  bool is_zero() const { return value_ == 0; }

  Fp inverse() const;

  friend Fp operator+(Fp a, Fp b);
  friend Fp operator-(Fp a, Fp b);
  friend Fp operator*(Fp a, Fp b);
  Fp operator-() const { return Fp(p_, -value_); }
  friend bool operator==(Fp a, Fp b) = default;

 private:
  int p_;
  int value_;
};

// Element of Z[zeta_p] in the basis 1, zeta, ..., zeta^(p-2).
// The relation 1 + zeta + ... + zeta^(p-1) = 0 is applied eagerly, so equality is
// coefficient equality. Arithmetic is overflow-checked (std::overflow_error).
class CyclotomicInt {
 public:
  explicit CyclotomicInt(int p);

  static CyclotomicInt integer(int p, std::int64_t value);
  // Returns sum_t counts[t] * zeta^t for t in [0, p).
  static CyclotomicInt from_exponent_counts(int p, std::span<const std::int64_t> counts);

  int p() const { return p_; }
  std::span<const std::int64_t> coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<std::int64_t> as_integer() const;
  // gcd of the coefficients (0 for the zero element).
  std::int64_t content() const;

  // Automorphism zeta -> zeta^k, k coprime to p.
  CyclotomicInt galois(int k) const;
  CyclotomicInt conj() const { return galois(p_ - 1); }
  // Field norm down to Q: the product of all p-1 Galois conjugates.
  std::int64_t norm() const;

  CyclotomicInt operator-() const;
  CyclotomicInt& operator+=(const CyclotomicInt& other);
  CyclotomicInt& operator-=(const CyclotomicInt& other);
  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b);
  CyclotomicInt scaled(std::int64_t factor) const;
  // Exact division of every coefficient; throws std::domain_error if not exact.
  CyclotomicInt divided_exactly(std::int64_t divisor) const;
  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) = default;

  // "a0 + a1*z + a2*z^2", zero terms dropped, "0" for zero.
  std::string to_string() const;

 private:
  int p_;
  std::vector<std::int64_t> coeffs_;
};

// theta(t) = zeta_p^t, the fixed nontrivial additive character of F_p.
CyclotomicInt theta(Fp t);
inline CyclotomicInt conj(const CyclotomicInt& x) { return x.conj(); }

// Element of Q(zeta_p): numerator / denominator with denominator > 0 and
// gcd(content(numerator), denominator) = 1.
class CyclotomicRat {
 public:
  explicit CyclotomicRat(int p) : num_(p), den_(1) {}
  CyclotomicRat(CyclotomicInt numerator, std::int64_t denominator = 1);

  static CyclotomicRat integer(int p, std::int64_t value) {
    return CyclotomicRat(CyclotomicInt::integer(p, value));
  }
  static CyclotomicRat rational(int p, std::int64_t num, std::int64_t den) {
    return CyclotomicRat(CyclotomicInt::integer(p, num), den);
  }

  int p() const { return num_.p(); }
  const CyclotomicInt& numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_integral() const { return den_ == 1; }
  std::optional<std::int64_t> as_integer() const;

  CyclotomicRat conj() const { return CyclotomicRat(num_.conj(), den_); }
  // Throws std::domain_error for zero.
  CyclotomicRat inverse() const;

  CyclotomicRat operator-() const { return CyclotomicRat(-num_, den_); }
  friend CyclotomicRat operator+(const CyclotomicRat& a, const CyclotomicRat& b);
  friend CyclotomicRat operator-(const CyclotomicRat& a, const CyclotomicRat& b);
  friend CyclotomicRat operator*(const CyclotomicRat& a, const CyclotomicRat& b);
  friend CyclotomicRat operator/(const CyclotomicRat& a, const CyclotomicRat& b) {
    return a * b.inverse();
  }
  CyclotomicRat& operator+=(const CyclotomicRat& other) { return *this = *this + other; }
  CyclotomicRat& operator*=(const CyclotomicRat& other) { return *this = *this * other; }
  friend bool operator==(const CyclotomicRat& a, const CyclotomicRat& b) = default;

  // "a0 + a1*z + ..." when integral, otherwise "(a0 + a1*z + ...) / d".
  std::string to_string() const;
  // [d, a0, ..., a_{p-2}]
  std::vector<std::int64_t> to_array() const;
  static CyclotomicRat from_array(int p, std::span<const std::int64_t> array);

 private:
  void normalize();

  CyclotomicInt num_;
  std::int64_t den_;
};

// q^k as an integer; throws std::overflow_error if it does not fit.
std::uint64_t int_pow(std::uint64_t base, int exponent);

}  // namespace patternsc
