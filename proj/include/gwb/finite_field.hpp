#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gwb {

/// GF(p^d) with the lexicographically first monic irreducible modulus.
/// Elements are encoded as sum c_i p^i over the coefficients of their
/// polynomial residue. A fixed primitive element gives log/exp tables.
class FiniteField {
 public:
  /// Shared instance; fields are immutable and live for the whole program.
  static const FiniteField& get(int p, int d);

  int p() const { return p_; }
  int d() const { return d_; }
  int size() const { return q_; }
  const std::vector<int>& modulus() const { return modulus_; }

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const;
  int inv(int a) const;
  int pow(int a, long long k) const;
  int frobenius(int a) const { return pow(a, p_); }
  int from_int(long long n) const;

  /// Fixed primitive element and its discrete logarithm.
  int generator() const { return exp(1); }
  int log(int a) const;
  int exp(long long k) const;

  std::string to_string(int a) const;

 private:
  FiniteField(int p, int d);

  int p_, d_, q_;
  std::vector<int> modulus_;  // length d + 1, monic
  std::vector<int> exp_, log_;
};

/// A field element bound to its field.
struct FieldElem {
  const FiniteField* field = nullptr;
  int value = 0;

  FieldElem() = default;
  FieldElem(const FiniteField& f, int v) : field(&f), value(v) {}

  bool is_zero() const { return value == 0; }
  friend bool operator==(const FieldElem& a, const FieldElem& b) {
    return a.value == b.value && a.field == b.field;
  }
  friend FieldElem operator+(FieldElem a, const FieldElem& b) {
    a.value = a.field->add(a.value, b.value);
    return a;
  }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) {
    a.value = a.field->sub(a.value, b.value);
    return a;
  }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) {
    a.value = a.field->mul(a.value, b.value);
    return a;
  }
  FieldElem& operator+=(const FieldElem& b) { return *this = *this + b; }
  FieldElem& operator*=(const FieldElem& b) { return *this = *this * b; }
  FieldElem inv() const { return {*field, field->inv(value)}; }
  FieldElem frobenius() const { return {*field, field->frobenius(value)}; }
};

}  // namespace gwb
