#include "gwb/reduction.hpp"

#include "gwb/error.hpp"

#include <map>
#include <mutex>
#include <numeric>

namespace gwb {

namespace {

using Poly = std::vector<long long>;

long long mulmod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long norm(long long a, long long m) {
  a %= m;
  return a < 0 ? a + m : a;
}

long long powmod(long long a, long long k, long long m) {
  long long r = 1 % m;
  a = norm(a, m);
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b, long long m) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], m)) % m;
  trim(r);
  return r;
}

Poly poly_add(const Poly& a, const Poly& b, long long m) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % m;
  trim(r);
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b, long long m) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = norm(r[i] - b[i], m);
  trim(r);
  return r;
}

/// Division by b whose leading coefficient is a unit mod m (inverse given).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b, long long lead_inv, long long m) {
  trim(a);
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) return {{}, a};
  Poly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const long long c = mulmod(a[i], lead_inv, m);
    q[i - db] = c;
    if (!c) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = norm(a[i - db + j] - mulmod(c, b[j], m), m);
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

long long inverse_mod_prime(long long a, long long p) { return powmod(a, p - 2, p); }

/// s, t with s f + t g = 1 over F_p.
std::pair<Poly, Poly> bezout(const Poly& f, const Poly& g, long long p) {
  Poly r0 = f, r1 = g, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, inverse_mod_prime(r1.back(), p), p);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.size() != 1) throw InternalError("Hensel factors are not coprime");
  const long long c = inverse_mod_prime(r0[0], p);
  for (auto& x : s0) x = mulmod(x, c, p);
  for (auto& x : t0) x = mulmod(x, c, p);
  return {s0, t0};
}

int valuation_of(long long a, int p, int cap) {
  if (a == 0) return cap;
  int v = 0;
  while (a % p == 0) {
    a /= p;
    ++v;
  }
  return v;
}

}  // namespace

Reduction::Reduction(int conductor, int p) : m_(conductor), p_(p) {
  if (m_ < 1) throw InputError("conductor must be positive");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InputError("p is not prime");
  if (p < 2) throw InputError("p is not prime");
  m_prime_ = m_;
  p_power_ = 1;
  while (m_prime_ % p == 0) {
    m_prime_ /= p;
    p_power_ *= p;
  }
  e_ = euler_phi(p_power_);
  d_ = 1;
  for (long long x = p % m_prime_; m_prime_ > 1 && x != 1; x = x * p % m_prime_) ++d_;
  field_ = &FiniteField::get(p, d_);
  const int q = field_->size();

  // r: least element of order m'.
  int r = 1;
  for (int a = 1; a < q; ++a) {
    const int k = field_->log(a);
    const int ord = (q - 1) / std::gcd(k, q - 1);
    if (ord == m_prime_) {
      r = a;
      break;
    }
  }
  int c = 1;
  for (; m_prime_ > 1 && (static_cast<long long>(c) * p_power_) % m_prime_ != 1; ++c) {}
  y_ = field_->pow(r, c);

  // Minimal polynomial of y over F_p, lifted to integers.
  std::vector<int> gk{1};  // over F_q, constant term first
  for (int i = 0, root = y_; i < d_; ++i, root = field_->frobenius(root)) {
    std::vector<int> next(gk.size() + 1, 0);
    for (std::size_t j = 0; j < gk.size(); ++j) {
      next[j + 1] = field_->add(next[j + 1], gk[j]);
      next[j] = field_->add(next[j], field_->neg(field_->mul(gk[j], root)));
    }
    gk = next;
  }
  Poly g0;
  for (int v : gk) {
    if (v >= p) throw InternalError("minimal polynomial not over the prime field");
    g0.push_back(v);
  }
  Poly G0{1};
  for (int i = 0; i < e_; ++i) G0 = poly_mul(G0, g0, p);

  const auto& phi = cyclotomic_polynomial(m_);
  Poly phi_p;
  for (long long v : phi) phi_p.push_back(norm(v, p));
  auto [H0, rem] = poly_divmod(phi_p, G0, 1, p);
  if (!rem.empty()) throw InternalError("local factor does not divide Phi_m mod p");

  // Precision: p^N < 2^62.
  n_digits_ = 0;
  modulus_ = 1;
  while (modulus_ <= (1LL << 62) / p) {
    modulus_ *= p;
    ++n_digits_;
  }

  auto [s, t] = bezout(G0, H0, p);
  Poly G = G0, H = H0;
  long long mk = p;  // current modulus p^k
  Poly phi_full;
  for (long long v : phi) phi_full.push_back(v);
  for (int k = 1; k < n_digits_; ++k) {
    const long long next = mk * p;
    Poly err = poly_sub(phi_full, poly_mul(G, H, next), next);
    for (auto& v : err) v = norm(v, next);
    Poly delta;
    for (long long v : err) {
      if (v % mk) throw InternalError("Hensel lifting lost consistency");
      delta.push_back((v / mk) % p);
    }
    trim(delta);
    auto [qq, dG] = poly_divmod(poly_mul(t, delta, p), G0, 1, p);
    Poly dH = poly_add(poly_mul(s, delta, p), poly_mul(qq, H0, p), p);
    Poly Gn = G, Hn = H;
    Gn.resize(std::max(Gn.size(), dG.size()), 0);
    for (std::size_t i = 0; i < dG.size(); ++i) Gn[i] = (Gn[i] + dG[i] * mk) % next;
    Hn.resize(std::max(Hn.size(), dH.size()), 0);
    for (std::size_t i = 0; i < dH.size(); ++i) Hn[i] = (Hn[i] + dH[i] * mk) % next;
    G = Gn;
    H = Hn;
    mk = next;
  }
  local_ = G;
  if (static_cast<int>(local_.size()) - 1 != e_ * d_) throw InternalError("local factor degree");

  const int n = e_ * d_;
  const int phim = euler_phi(m_);
  basis_images_.assign(phim, Poly(n, 0));
  Poly cur(n, 0);
  cur[0] = 1;
  for (int j = 0; j < phim; ++j) {
    basis_images_[j] = cur;
    const long long top = cur[n - 1];
    for (int i = n - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (int i = 0; i < n; ++i) cur[i] = norm(cur[i] - mulmod(top, local_[i], modulus_), modulus_);
  }
}

Reduction::Scaled Reduction::scale(const Cyclotomic& x) const {
  if (x.conductor() != m_) throw InputError("value has a different conductor than the reduction");
  Scaled out;
  if (x.is_zero()) {
    out.zero = true;
    return out;
  }
  mpz_class den = 1;
  for (const auto& c : x.coeffs()) den = lcm(den, mpz_class(c.get_den()));
  mpz_class unit = den;
  while (mpz_divisible_ui_p(unit.get_mpz_t(), p_)) {
    unit /= p_;
    ++out.s;
  }
  out.unit_den = unit;
  const int n = e_ * d_;
  out.local.assign(n, 0);
  for (std::size_t j = 0; j < x.coeffs().size(); ++j) {
    const auto& c = x.coeffs()[j];
    if (c == 0) continue;
    mpz_class num = c.get_num() * (den / c.get_den());
    const long long cj =
        static_cast<long long>(mpz_fdiv_ui(num.get_mpz_t(), static_cast<unsigned long>(modulus_)));
    for (int i = 0; i < n; ++i)
      out.local[i] = (out.local[i] + mulmod(cj, basis_images_[j][i], modulus_)) % modulus_;
  }
  return out;
}

long long Reduction::local_valuation(const std::vector<long long>& u) const {
  const int n = e_ * d_;
  // Multiplication-by-u matrix, columns u x^j mod G.
  std::vector<std::vector<long long>> mat(n, std::vector<long long>(n, 0));
  std::vector<long long> col = u;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) mat[i][j] = col[i];
    const long long top = col[n - 1];
    for (int i = n - 1; i > 0; --i) col[i] = col[i - 1];
    col[0] = 0;
    for (int i = 0; i < n; ++i) col[i] = norm(col[i] - mulmod(top, local_[i], modulus_), modulus_);
  }
  long long total = 0;
  std::vector<bool> used_row(n, false), used_col(n, false);
  for (int step = 0; step < n; ++step) {
    int br = -1, bc = -1, bv = n_digits_;
    for (int i = 0; i < n; ++i) {
      if (used_row[i]) continue;
      for (int j = 0; j < n; ++j) {
        if (used_col[j]) continue;
        const int v = valuation_of(mat[i][j], p_, n_digits_);
        if (v < bv) {
          bv = v;
          br = i;
          bc = j;
        }
      }
    }
    if (br < 0) throw CapExceeded("p-adic precision exhausted in valuation");
    total += bv;
    used_row[br] = used_col[bc] = true;
    long long pk = 1;
    for (int k = 0; k < bv; ++k) pk *= p_;
    const long long w = mat[br][bc] / pk;
    const long long winv = powmod(w, modulus_ / p_ * (p_ - 1) - 1, modulus_);
    for (int i = 0; i < n; ++i) {
      if (used_row[i] || mat[i][bc] == 0) continue;
      const long long f = mulmod(mat[i][bc] / pk, winv, modulus_);
      for (int j = 0; j < n; ++j)
        mat[i][j] = norm(mat[i][j] - mulmod(f, mat[br][j], modulus_), modulus_);
    }
  }
  if (total % d_) throw InternalError("norm valuation not divisible by residue degree");
  return total / d_;
}

Valuation Reduction::valuation(const Cyclotomic& x) const {
  Scaled sc = scale(x);
  if (sc.zero) return {true, 0};
  return {false, local_valuation(sc.local) - static_cast<long long>(e_) * sc.s};
}

Valuation Reduction::valuation(const Rational& x) const {
  if (x == 0) return {true, 0};
  long long v = 0;
  mpz_class a = x.get_num(), b = x.get_den();
  while (mpz_divisible_ui_p(a.get_mpz_t(), p_)) {
    a /= p_;
    ++v;
  }
  while (mpz_divisible_ui_p(b.get_mpz_t(), p_)) {
    b /= p_;
    --v;
  }
  return {false, v * e_};
}

bool Reduction::integral(const Cyclotomic& x) const {
  Valuation v = valuation(x);
  return v.infinite || v.value >= 0;
}

FieldElem Reduction::reduce(const Cyclotomic& x) const {
  Scaled sc = scale(x);
  if (sc.zero) return zero();
  if (sc.s > 0) {
    const long long v = local_valuation(sc.local);
    if (v < static_cast<long long>(e_) * sc.s)
      throw InputError("cannot reduce a value of negative valuation");
  }
  long long ps = 1;
  for (long long k = 0; k < sc.s; ++k) ps *= p_;
  FieldElem acc = zero();
  FieldElem ypow = one();
  for (long long c : sc.local) {
    if (c % ps) throw InternalError("local coordinates not divisible as expected");
    acc += from_int((c / ps) % p_) * ypow;
    ypow *= zeta_image();
  }
  const long long unit = static_cast<long long>(mpz_fdiv_ui(sc.unit_den.get_mpz_t(), p_));
  return acc * from_int(unit).inv();
}

long long Reduction::tau_exponent(long long t) const {
  const long long mp = m_prime_;
  if (std::gcd(norm(t, mp), mp) != 1) throw InputError("tau exponent is not a unit mod m'");
  if (mp == 1) return 1;
  // s = 1 + p^a * k with 1 + p^a k = t mod m'.
  long long inv_pa = 1;
  while ((inv_pa * p_power_) % mp != 1) ++inv_pa;
  const long long k = norm((t - 1) % mp * inv_pa, mp);
  return 1 + static_cast<long long>(p_power_) * k;
}

Cyclotomic Reduction::tau(const Cyclotomic& x, long long t) const {
  if (x.conductor() != m_) throw InputError("value has a different conductor than the reduction");
  return x.galois(tau_exponent(t));
}

std::shared_ptr<const Reduction> shared_reduction(int conductor, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Reduction>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{conductor, p}];
  if (!slot) slot = std::make_shared<const Reduction>(conductor, p);
  return slot;
}

}  // namespace gwb
