#pragma once

#include <gmpxx.h>

#include <compare>
#include <ostream>
#include <string>
#include <vector>

namespace gwb {

using Rational = mpq_class;

/// Euler phi.
int euler_phi(int n);
/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(int m);

/// An exact element of Q(zeta_m), stored in the power basis
/// 1, zeta, ..., zeta^(phi(m)-1). The representation is canonical, so equal
/// values have equal coefficient vectors.
class Cyclotomic {
 public:
  Cyclotomic() : Cyclotomic(1) {}
  explicit Cyclotomic(int conductor);
  Cyclotomic(int conductor, const Rational& r);

  static Cyclotomic integer(int conductor, long long n) { return {conductor, Rational(static_cast<long>(n))}; }
  /// zeta_m^k for any integer k.
  static Cyclotomic zeta_power(int conductor, long long k);

  int conductor() const { return m_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws unless is_rational().
  Rational rational_value() const;
  bool is_integral_combination() const;  // all coefficients in Z

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Rational& r);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Rational& r) { return a *= r; }
  friend Cyclotomic operator*(const Rational& r, Cyclotomic a) { return a *= r; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
    return a.m_ == b.m_ && a.c_ == b.c_;
  }

  /// Lexicographic on coefficient vectors.
  friend std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b);

  /// Complex conjugation.
  Cyclotomic conj() const;
  /// The Galois automorphism zeta_m -> zeta_m^t; t must be a unit mod m.
  Cyclotomic galois(long long t) const;
  /// The same value in Q(zeta_n), n a multiple of the conductor.
  Cyclotomic embed(int n) const;

  std::string to_string() const;

 private:
  void reduce(std::vector<Rational>& full);

  int m_;
  std::vector<Rational> c_;
};

inline std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

}  // namespace gwb
