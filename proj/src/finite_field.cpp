#include "gwb/finite_field.hpp"

#include "gwb/error.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace gwb {

namespace {

using Coeffs = std::vector<int>;

Coeffs decode(int code, int p, int n) {
  Coeffs c(n);
  for (int i = 0; i < n; ++i) {
    c[i] = code % p;
    code /= p;
  }
  return c;
}

int encode(const Coeffs& c, int p) {
  int code = 0;
  for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
  return code;
}

// Remainder of a modulo monic b over F_p; returns true when the remainder is zero.
bool divides(const Coeffs& b, Coeffs a, int p) {
  const std::size_t db = b.size() - 1;
  for (std::size_t i = a.size(); i-- > db;) {
    const int c = a[i];
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i]) return false;
  return true;
}

bool irreducible(const Coeffs& f, int p) {
  const int d = static_cast<int>(f.size()) - 1;
  for (int k = 1; 2 * k <= d; ++k) {
    int count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (int code = 0; code < count; ++code) {
      Coeffs g = decode(code, p, k);
      g.push_back(1);
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

}  // namespace

const FiniteField& FiniteField::get(int p, int d) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FiniteField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{p, d}];
  if (!slot) slot.reset(new FiniteField(p, d));
  return *slot;
}

FiniteField::FiniteField(int p, int d) : p_(p), d_(d), q_(1) {
  if (p < 2 || d < 1) throw InputError("bad finite field parameters");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InputError("field characteristic is not prime");
  for (int i = 0; i < d; ++i) {
    if (q_ > (1 << 22) / p) throw CapExceeded("finite field too large");
    q_ *= p;
  }
  for (int code = 0; code < q_; ++code) {
    Coeffs f = decode(code, p, d);
    f.push_back(1);
    if (irreducible(f, p)) {
      modulus_ = f;
      break;
    }
  }
  // Polynomial multiplication modulo the modulus, on encodings.
  auto slow_mul = [&](int a, int b) {
    Coeffs x = decode(a, p, d), y = decode(b, p, d);
    Coeffs r(2 * d - 1, 0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) r[i + j] = (r[i + j] + x[i] * y[j]) % p;
    for (int i = 2 * d - 2; i >= d; --i) {
      const int c = r[i];
      if (!c) continue;
      for (int j = 0; j <= d; ++j) r[i - d + j] = ((r[i - d + j] - c * modulus_[j]) % p + p) % p;
    }
    r.resize(d);
    return encode(r, p);
  };
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, -1);
  for (int g = 1; g < q_; ++g) {
    int x = 1, k = 0;
    bool ok = true;
    do {
      if (k == q_ - 1) {
        ok = false;
        break;
      }
      exp_[k++] = x;
      x = slow_mul(x, g);
    } while (x != 1);
    if (ok && k == q_ - 1) break;
  }
  for (int k = 0; k < q_ - 1; ++k) log_[exp_[k]] = k;
}

int FiniteField::add(int a, int b) const {
  if (p_ == 2) return a ^ b;
  int r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteField::neg(int a) const {
  if (p_ == 2) return a;
  int r = 0, scale = 1;
  for (int i = 0; i < d_; ++i) {
    r += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return r;
}

int FiniteField::mul(int a, int b) const {
  if (a == 0 || b == 0) return 0;
  int k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

int FiniteField::inv(int a) const {
  if (a == 0) throw InputError("division by zero in finite field");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

int FiniteField::pow(int a, long long k) const {
  if (a == 0) {
    if (k < 0) throw InputError("division by zero in finite field");
    return k == 0 ? 1 : 0;
  }
  return exp(static_cast<long long>(log_[a]) * k);
}

int FiniteField::from_int(long long n) const {
  long long r = n % p_;
  if (r < 0) r += p_;
  return static_cast<int>(r);
}

int FiniteField::log(int a) const {
  if (a == 0) throw InputError("logarithm of zero");
  return log_[a];
}

int FiniteField::exp(long long k) const {
  const long long n = q_ - 1;
  long long r = k % n;
  if (r < 0) r += n;
  return exp_[r];
}

std::string FiniteField::to_string(int a) const {
  if (d_ == 1) return std::to_string(a);
  if (a == 0) return "0";
  std::ostringstream os;
  os << "g^" << log_[a];
  return os.str();
}

}  // namespace gwb
