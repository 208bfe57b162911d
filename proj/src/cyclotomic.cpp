#include "gwb/cyclotomic.hpp"

#include "gwb/error.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gwb {

int euler_phi(int n) {
  if (n < 1) throw InputError("euler_phi needs a positive argument");
  int r = n;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q) continue;
    while (n % q == 0) n /= q;
    r -= r / q;
  }
  if (n > 1) r -= r / n;
  return r;
}

namespace {

using Poly = std::vector<long>;

Poly exact_divide(Poly num, const Poly& den) {
  const std::size_t dn = den.size() - 1;
  Poly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const long c = num[i] / den[dn];
    q[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return q;
}

struct Tables {
  Poly phi;                  // cyclotomic polynomial
  std::vector<Poly> powers;  // x^j mod phi for j < m
};

std::recursive_mutex cache_mutex;

const Tables& tables(int m) {
  static std::map<int, Tables> cache;
  std::lock_guard<std::recursive_mutex> lock(cache_mutex);
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m < 1) throw InputError("conductor must be positive");
  // x^m - 1 divided by Phi_d for every proper divisor d.
  Poly f(m + 1, 0);
  f[0] = -1;
  f[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) f = exact_divide(f, tables(d).phi);
  Tables t;
  t.phi = f;
  const std::size_t n = f.size() - 1;
  t.powers.assign(m, Poly(n, 0));
  Poly cur(n, 0);
  cur[0] = 1;
  for (int j = 0; j < m; ++j) {
    t.powers[j] = cur;
    const long top = cur[n - 1];
    for (std::size_t i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (std::size_t i = 0; i < n; ++i) cur[i] -= top * f[i];
  }
  return cache.emplace(m, std::move(t)).first->second;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(int m) { return tables(m).phi; }

Cyclotomic::Cyclotomic(int conductor) : m_(conductor) {
  c_.assign(euler_phi(conductor), Rational(0));
}

Cyclotomic::Cyclotomic(int conductor, const Rational& r) : Cyclotomic(conductor) {
  c_[0] = r;
  c_[0].canonicalize();
}

Cyclotomic Cyclotomic::zeta_power(int conductor, long long k) {
  const Tables& t = tables(conductor);
  long long j = k % conductor;
  if (j < 0) j += conductor;
  Cyclotomic z(conductor);
  for (std::size_t i = 0; i < z.c_.size(); ++i) z.c_[i] = t.powers[j][i];
  return z;
}

bool Cyclotomic::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyclotomic::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) throw InputError("cyclotomic number is not rational");
  return c_[0];
}

bool Cyclotomic::is_integral_combination() const {
  for (const auto& x : c_)
    if (x.get_den() != 1) return false;
  return true;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.m_ != m_) throw InputError("cyclotomic conductors differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (o.m_ != m_) throw InputError("cyclotomic conductors differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

void Cyclotomic::reduce(std::vector<Rational>& full) {
  const Poly& f = tables(m_).phi;
  const std::size_t n = f.size() - 1;
  for (std::size_t i = full.size(); i-- > n;) {
    if (full[i] == 0) continue;
    const Rational c = full[i];
    for (std::size_t j = 0; j <= n; ++j)
      if (f[j]) full[i - n + j] -= c * f[j];
  }
  full.resize(n);
  c_ = std::move(full);
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.m_ != m_) throw InputError("cyclotomic conductors differ");
  const std::size_t n = c_.size();
  // Rational and zero factors are common in character arithmetic.
  auto rational_part = [](const std::vector<Rational>& c) {
    for (std::size_t i = 1; i < c.size(); ++i)
      if (c[i] != 0) return false;
    return true;
  };
  if (rational_part(o.c_)) {
    if (o.c_[0] == 0)
      for (auto& x : c_) x = 0;
    else if (o.c_[0] != 1)
      for (auto& x : c_) x *= o.c_[0];
    return *this;
  }
  if (rational_part(c_)) {
    const Rational r = c_[0];
    c_ = o.c_;
    if (r != 1)
      for (auto& x : c_) x *= r;
    return *this;
  }
  std::vector<Rational> full(2 * n - 1, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      if (o.c_[j] != 0) full[i + j] += c_[i] * o.c_[j];
  }
  reduce(full);
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Rational& r) {
  Rational rc = r;
  rc.canonicalize();
  for (auto& x : c_) x *= rc;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

std::strong_ordering compare(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.m_ != b.m_) return a.m_ <=> b.m_;
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const int s = cmp(a.c_[i], b.c_[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

Cyclotomic Cyclotomic::galois(long long t) const {
  long long s = t % m_;
  if (s < 0) s += m_;
  if (std::gcd(s, static_cast<long long>(m_)) != 1)
    throw InputError("Galois exponent is not a unit");
  const Tables& tb = tables(m_);
  Cyclotomic r(m_);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const Poly& pw = tb.powers[(j * s) % m_];
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      if (pw[i]) r.c_[i] += c_[j] * pw[i];
  }
  return r;
}

Cyclotomic Cyclotomic::embed(int n) const {
  if (n % m_ != 0) throw InputError("embedding target is not a multiple of the conductor");
  if (n == m_) return *this;
  const Tables& tb = tables(n);
  const int step = n / m_;
  Cyclotomic r(n);
  for (std::size_t j = 0; j < c_.size(); ++j) {
    if (c_[j] == 0) continue;
    const Poly& pw = tb.powers[(j * step) % n];
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      if (pw[i]) r.c_[i] += c_[j] * pw[i];
  }
  return r;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (sgn(c_[i]) > 0 ? " + " : " - ");
    else if (sgn(c_[i]) < 0) os << "-";
    first = false;
    const Rational a = abs(c_[i]);
    if (i == 0) {
      os << a.get_str();
    } else {
      if (a != 1) os << a.get_str() << "*";
      os << "z" << m_;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

}  // namespace gwb
