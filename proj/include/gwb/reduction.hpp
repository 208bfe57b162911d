#pragma once

#include "gwb/cyclotomic.hpp"
#include "gwb/finite_field.hpp"

#include <memory>
#include <vector>

namespace gwb {

struct Valuation {
  bool infinite = false;  // the value was zero
  long long value = 0;

  friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// Fixes a prime P over p in Z[zeta_m] and the residue field k = O/P.
///
/// With m = p^a m', k = GF(p^d) where d is the order of p mod m'. The prime
/// is the one whose reduction sends zeta_m to y = r^c, where r is the least
/// element of order m' in k and c p^a = 1 mod m'. Valuations are computed in
/// the completion Z_p[x]/(G), G the Hensel lift of the factor of Phi_m that
/// belongs to P, and normalized so that v(p) = phi(p^a).
class Reduction {
 public:
  Reduction(int conductor, int p);

  int conductor() const { return m_; }
  int p() const { return p_; }
  int m_prime() const { return m_prime_; }
  int p_power() const { return p_power_; }
  int residue_degree() const { return d_; }
  int ramification() const { return e_; }
  const FiniteField& field() const { return *field_; }

  FieldElem zero() const { return {*field_, 0}; }
  FieldElem one() const { return {*field_, 1}; }
  FieldElem from_int(long long n) const { return {*field_, field_->from_int(n)}; }
  /// Image of zeta_m in k.
  FieldElem zeta_image() const { return {*field_, y_}; }

  Valuation valuation(const Cyclotomic& x) const;
  Valuation valuation(const Rational& x) const;
  bool integral(const Cyclotomic& x) const;
  /// Image in k; throws InputError when v(x) < 0.
  FieldElem reduce(const Cyclotomic& x) const;

  /// The s with s = t mod m' and s = 1 mod p^a.
  long long tau_exponent(long long t) const;
  /// zeta_m -> zeta_m^s, s = tau_exponent(t).
  Cyclotomic tau(const Cyclotomic& x, long long t) const;

  /// Precision of the p-adic computations, p^N.
  int precision() const { return n_digits_; }

 private:
  using Poly = std::vector<long long>;

  /// Integer coefficient vector of x times the common denominator, in the
  /// local basis, together with that denominator split as p^s * n'.
  struct Scaled {
    std::vector<long long> local;  // mod p^N
    long long s = 0;
    mpz_class unit_den;
    bool zero = false;
  };
  Scaled scale(const Cyclotomic& x) const;
  long long local_valuation(const std::vector<long long>& u) const;

  int m_, p_, m_prime_, p_power_, d_, e_;
  const FiniteField* field_;
  int y_;
  int n_digits_;
  long long modulus_;                 // p^N
  Poly local_;                        // G, monic, degree e*d, mod p^N
  std::vector<Poly> basis_images_;    // x^j mod G for j < phi(m)
};

/// Shared, cached instance per (m, p).
std::shared_ptr<const Reduction> shared_reduction(int conductor, int p);

}  // namespace gwb
