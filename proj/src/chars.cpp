#include "gwb/chars.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace gwb {

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  if (group != o.group) throw InputError("class functions on different groups");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] += o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  if (group != o.group) throw InputError("class functions on different groups");
  for (std::size_t i = 0; i < values.size(); ++i) values[i] -= o.values[i];
  return *this;
}

ClassFunction& ClassFunction::operator*=(const Rational& r) {
  for (auto& v : values) v *= r;
  return *this;
}

ClassFunction zero_function(GroupPtr g, int conductor) {
  const std::size_t r = g->class_count();
  return {std::move(g), std::vector<Cyclotomic>(r, Cyclotomic(conductor))};
}

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

long md(long a, long l) {
  a %= l;
  return a < 0 ? a + l : a;
}

long pw(long a, long k, long l) {
  long r = 1 % l;
  a = md(a, l);
  while (k > 0) {
    if (k & 1) r = r * a % l;
    a = a * a % l;
    k >>= 1;
  }
  return r;
}

long inv(long a, long l) {
  if (md(a, l) == 0) throw InternalError("inverting zero modulo the auxiliary prime");
  return pw(a, l - 2, l);
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

long primitive_root(long l) {
  std::vector<long> qs;
  long n = l - 1;
  for (long q = 2; q * q <= n; ++q)
    if (n % q == 0) {
      qs.push_back(q);
      while (n % q == 0) n /= q;
    }
  if (n > 1) qs.push_back(n);
  for (long g = 2;; ++g) {
    bool ok = true;
    for (long q : qs)
      if (pw(g, (l - 1) / q, l) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
}

/// Row-reduces in place; returns pivot columns.
std::vector<int> rref(Mat& m, long l) {
  std::vector<int> piv;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int s = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c]) {
        s = i;
        break;
      }
    if (s < 0) continue;
    std::swap(m[r], m[s]);
    const long iv = inv(m[r][c], l);
    for (auto& x : m[r]) x = x * iv % l;
    for (int i = 0; i < rows; ++i) {
      if (i == r || !m[i][c]) continue;
      const long f = m[i][c];
      for (int k = 0; k < cols; ++k) m[i][k] = md(m[i][k] - f * m[r][k], l);
    }
    piv.push_back(c);
    ++r;
  }
  m.resize(r);
  return piv;
}

Mat nullspace(Mat m, long l) {
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  auto piv = rref(m, l);
  std::vector<bool> is_piv(cols, false);
  for (int c : piv) is_piv[c] = true;
  Mat basis;
  for (int f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = md(-m[i][f], l);
    basis.push_back(v);
  }
  return basis;
}

/// A subspace of F_l^r spanned by the rows of `rows`, kept in reduced form.
struct Space {
  Mat rows;
  std::vector<int> piv;
};

Space make_space(Mat rows, long l) {
  Space s;
  s.piv = rref(rows, l);
  s.rows = std::move(rows);
  return s;
}

struct ModTable {
  std::vector<Vec> omega;  // central characters mod l
  std::vector<long> degrees;
  std::vector<Vec> values;  // character values mod l
};

bool dixon(const Group& g, const std::vector<long>& coeffs, long l, ModTable& out) {
  const int r = static_cast<int>(g.class_count());
  auto c = [&](int j, int i, int k) {
    return coeffs[(static_cast<std::size_t>(j) * r + i) * r + k];
  };
  Mat id(r, Vec(r, 0));
  for (int i = 0; i < r; ++i) id[i][i] = 1;
  std::vector<Space> spaces{make_space(id, l)};
  for (int j = 1; j < r; ++j) {
    bool all_one = true;
    for (const auto& s : spaces)
      if (s.rows.size() > 1) all_one = false;
    if (all_one) break;
    std::vector<Space> next;
    for (auto& s : spaces) {
      const int d = static_cast<int>(s.rows.size());
      if (d == 1) {
        next.push_back(std::move(s));
        continue;
      }
      // A_j w restricted to the space: coordinates read off at the pivots.
      Mat cm(d, Vec(d, 0));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          long acc = 0;
          for (int k = 0; k < r; ++k) acc = (acc + c(j, s.piv[a], k) % l * s.rows[b][k]) % l;
          cm[b][a] = acc;  // column b of the restricted matrix, transposed storage
        }
      // cm[b][a] is the a-th coordinate of A_j(w_b); we want M with M[a][b].
      Mat mm(d, Vec(d, 0));
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) mm[a][b] = cm[b][a];
      int found = 0;
      for (long lam = 0; lam < l && found < d; ++lam) {
        Mat sh = mm;
        for (int a = 0; a < d; ++a) sh[a][a] = md(sh[a][a] - lam, l);
        Mat ns = nullspace(sh, l);
        if (ns.empty()) continue;
        Mat vecs;
        for (const auto& n : ns) {
          Vec w(r, 0);
          for (int b = 0; b < d; ++b)
            if (n[b])
              for (int k = 0; k < r; ++k) w[k] = (w[k] + n[b] * s.rows[b][k]) % l;
          vecs.push_back(w);
        }
        found += static_cast<int>(vecs.size());
        next.push_back(make_space(vecs, l));
      }
      if (found != d) return false;
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) return false;
  const long order = static_cast<long>(g.order());
  for (const auto& s : spaces) {
    Vec w = s.rows[0];
    if (!w[0]) return false;
    const long iv = inv(w[0], l);
    for (auto& x : w) x = x * iv % l;
    long sum = 0;
    for (int i = 0; i < r; ++i) {
      const int istar = g.class_of(g.inv(g.classes()[i].representative));
      sum = (sum + w[i] * w[istar] % l * inv(static_cast<long>(g.classes()[i].size) % l, l)) % l;
    }
    if (!sum) return false;
    const long sq = md(order, l) * inv(sum, l) % l;
    long n = 0;
    for (long cand = 1; cand * cand <= order; ++cand)
      if (order % cand == 0 && cand * cand % l == sq) {
        n = cand;
        break;
      }
    if (!n) return false;
    Vec vals(r);
    for (int i = 0; i < r; ++i)
      vals[i] = w[i] * (n % l) % l * inv(static_cast<long>(g.classes()[i].size) % l, l) % l;
    out.omega.push_back(w);
    out.degrees.push_back(n);
    out.values.push_back(vals);
  }
  return true;
}

}  // namespace

std::shared_ptr<const CharacterTable> CharacterTable::compute(GroupPtr gp, int conductor) {
  const Group& g = *gp;
  const int e = g.exponent();
  if (conductor == 0) conductor = e;
  if (conductor % e) throw InputError("conductor is not a multiple of the group exponent");
  const int r = static_cast<int>(g.class_count());
  if (r > 400) throw CapExceeded("too many conjugacy classes for a character table");

  auto t = std::shared_ptr<CharacterTable>(new CharacterTable());
  t->group_ = gp;
  t->conductor_ = conductor;
  t->coeffs_.assign(static_cast<std::size_t>(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    const int gk = g.classes()[k].representative;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const int j = g.class_of(x);
      const int i = g.class_of(g.mul(g.inv(x), gk));
      ++t->coeffs_[(static_cast<std::size_t>(j) * r + i) * r + k];
    }
  }

  const long order = static_cast<long>(g.order());
  const double bound = 2.0 * std::sqrt(static_cast<double>(order));
  long l = e + 1;
  while (l <= bound || !is_prime(l)) l += e;
  ModTable mt;
  bool ok = false;
  for (int attempt = 0; attempt < 8 && !ok; ++attempt) {
    mt = ModTable{};
    ok = dixon(g, t->coeffs_, l, mt);
    if (!ok)
      do l += e;
      while (!is_prime(l));
  }
  if (!ok) throw InternalError("character table computation failed for all auxiliary primes");
  t->ell_ = l;

  // Lift values through eigenvalue multiplicities of each class representative.
  const long z = pw(primitive_root(l), (l - 1) / e, l);
  std::vector<Cyclotomic> zeta;
  for (int k = 0; k < conductor; ++k) zeta.push_back(Cyclotomic::zeta_power(conductor, k));
  std::vector<std::pair<std::vector<Cyclotomic>, long>> rows;
  for (std::size_t chi = 0; chi < mt.values.size(); ++chi) {
    const long n = mt.degrees[chi];
    std::vector<Cyclotomic> row;
    for (int i = 0; i < r; ++i) {
      const int o = g.elem_order(g.classes()[i].representative);
      const long zo = pw(z, e / o, l);
      const long oinv = inv(o % l, l);
      Cyclotomic val(conductor);
      long total = 0;
      for (int j = 0; j < o; ++j) {
        long a = 0;
        for (int k = 0; k < o; ++k)
          a = (a + mt.values[chi][g.power_class(i, k)] * pw(zo, md(-static_cast<long>(j) * k, o), l)) % l;
        a = a * oinv % l;
        if (a > n) throw InternalError("eigenvalue multiplicity out of range");
        total += a;
        if (a) val += zeta[(static_cast<long>(j) * (conductor / o)) % conductor] * Rational(a);
      }
      if (total != n) throw InternalError("eigenvalue multiplicities do not sum to the degree");
      row.push_back(val);
    }
    rows.emplace_back(std::move(row), n);
  }

  auto is_trivial = [&](const std::vector<Cyclotomic>& row) {
    for (const auto& v : row)
      if (!(v == Cyclotomic::integer(conductor, 1))) return false;
    return true;
  };
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    const bool ta = is_trivial(a.first), tb = is_trivial(b.first);
    if (ta != tb) return ta;
    if (a.second != b.second) return a.second < b.second;
    for (std::size_t i = 0; i < a.first.size(); ++i) {
      auto c = compare(a.first[i], b.first[i]);
      if (c != 0) return c > 0;
    }
    return false;
  });
  long sum_sq = 0;
  for (auto& [row, n] : rows) {
    t->rows_.push_back(std::move(row));
    t->degrees_.push_back(n);
    sum_sq += n * n;
  }
  if (sum_sq != order) throw InternalError("degree sum of squares differs from the group order");
  return t;
}

int CharacterTable::find(const ClassFunction& f) const {
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (rows_[i] == f.values) return static_cast<int>(i);
  return -1;
}

Cyclotomic inner_product(const ClassFunction& a, const ClassFunction& b) {
  if (a.group != b.group) throw InputError("inner product of class functions on different groups");
  const Group& g = *a.group;
  const int m = a.values.front().conductor();
  Cyclotomic acc(m);
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (a.values[c].is_zero() || b.values[c].is_zero()) continue;
    Cyclotomic term = a.values[c] * b.values[c].conj();
    term *= Rational(static_cast<long>(g.classes()[c].size));
    acc += term;
  }
  acc *= Rational(1, static_cast<long>(g.order()));
  return acc;
}

std::vector<Cyclotomic> decompose(const ClassFunction& f, const CharacterTable& t) {
  // conj(chi(g)) = chi(g^-1), so no Galois action is needed.
  const Group& g = t.group();
  if (f.values.size() != g.class_count()) throw InputError("class function lives on another group");
  std::vector<Cyclotomic> out(t.size(), Cyclotomic(t.conductor()));
  for (std::size_t c = 0; c < g.class_count(); ++c) {
    if (f.values[c].is_zero()) continue;
    const Cyclotomic w = f.values[c] * Rational(static_cast<long>(g.classes()[c].size), static_cast<long>(g.order()));
    const int ci = g.power_class(static_cast<int>(c), -1);
    for (std::size_t i = 0; i < t.size(); ++i) out[i] += w * t.value(static_cast<int>(i), ci);
  }
  return out;
}

Cyclotomic central_character(const CharacterTable& t, int chi, int cls) {
  Cyclotomic v = t.value(chi, cls);
  v *= Rational(static_cast<long>(t.group().classes()[cls].size), t.degree(chi));
  return v;
}

ClassFunction p_prime_truncation(const ClassFunction& f, int p) {
  ClassFunction out = f;
  const Group& g = *f.group;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (g.elem_order(g.classes()[c].representative) % p == 0)
      out.values[c] = Cyclotomic(f.values[c].conductor());
  return out;
}

bool vanishes_off_p_regular(const ClassFunction& f, int p) {
  const Group& g = *f.group;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    if (g.elem_order(g.classes()[c].representative) % p == 0 && !f.values[c].is_zero())
      return false;
  return true;
}

bool o_valued(const ClassFunction& f, const Reduction& r) {
  for (const auto& v : f.values)
    if (!r.integral(v)) return false;
  return true;
}

bool supported_on(const ClassFunction& f, const CharacterTable& t, const std::vector<int>& chars) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (std::find(chars.begin(), chars.end(), static_cast<int>(i)) != chars.end()) continue;
    if (!inner_product(f, t.character(static_cast<int>(i))).is_zero()) return false;
  }
  return true;
}

ClassFunction tau_twist(const ClassFunction& f, const Reduction& r, long long t) {
  ClassFunction out = f;
  for (auto& v : out.values) v = r.tau(v, t);
  return out;
}

const Cyclotomic& value_at_ambient(const ClassFunction& f, int ambient_elem) {
  const int x = f.group->from_ambient(ambient_elem);
  if (x < 0) throw InputError("element outside the class function's group");
  return f(x);
}

ClassFunction restrict_to(const ClassFunction& f, GroupPtr sub) {
  ClassFunction out{sub, {}};
  for (const auto& c : sub->classes())
    out.values.push_back(value_at_ambient(f, sub->to_ambient(c.representative)));
  return out;
}

ClassFunction conjugate_function(const Group& ambient, const ClassFunction& f, GroupPtr target,
                                 int g) {
  ClassFunction out{target, {}};
  const int ginv = ambient.inv(g);
  for (const auto& c : target->classes()) {
    const int y = target->to_ambient(c.representative);
    out.values.push_back(value_at_ambient(f, ambient.conj(ginv, y)));
  }
  return out;
}

}  // namespace gwb
