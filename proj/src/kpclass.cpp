#include "gwb/kpclass.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace gwb {

using linalg::Mat;
using linalg::Vec;

const Mat& ModularRep::at(int ambient) const {
  auto it = std::lower_bound(group.begin(), group.end(), ambient);
  if (it == group.end() || *it != ambient) throw InputError("element outside the module's group");
  return matrices[it - group.begin()];
}

namespace {

// A subspace kept in reduced row echelon form, so coordinates of a member
// are read off at the pivot columns.
struct Space {
  const FiniteField* f;
  Mat rows;
  std::vector<int> piv;

  Vec reduce(Vec v) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const int c = v[piv[i]];
      if (!c) continue;
      const int neg = f->neg(c);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (rows[i][k]) v[k] = f->add(v[k], f->mul(neg, rows[i][k]));
    }
    return v;
  }

  bool add(const Vec& v0) {
    Vec v = reduce(v0);
    std::size_t p = 0;
    while (p < v.size() && !v[p]) ++p;
    if (p == v.size()) return false;
    const int inv = f->inv(v[p]);
    for (auto& x : v) x = f->mul(x, inv);
    for (auto& row : rows) {
      const int c = row[p];
      if (!c) continue;
      const int neg = f->neg(c);
      for (std::size_t k = 0; k < v.size(); ++k)
        if (v[k]) row[k] = f->add(row[k], f->mul(neg, v[k]));
    }
    rows.push_back(std::move(v));
    piv.push_back(static_cast<int>(p));
    return true;
  }

  Vec coords(const Vec& w) const {
    Vec c(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) c[i] = w[piv[i]];
    return c;
  }

  Vec combine(const Vec& c) const {
    Vec w(rows.front().size(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (c[i])
        for (std::size_t k = 0; k < w.size(); ++k)
          if (rows[i][k]) w[k] = f->add(w[k], f->mul(c[i], rows[i][k]));
    return w;
  }
};

// Closure of `seeds` under the matrices `gens` acting on column vectors.
Mat spin(const FiniteField& f, const std::vector<Mat>& gens, const Mat& seeds) {
  Space s{&f, {}, {}};
  std::deque<Vec> queue;
  for (const auto& v : seeds)
    if (s.add(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Vec w = linalg::apply(f, g, v);
      if (s.add(w)) queue.push_back(std::move(w));
    }
  }
  return s.rows;
}

Mat transpose(const Mat& a) {
  Mat t(a.empty() ? 0 : a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// The regular left action of H on kH, restricted to a subspace.
struct RegularAction {
  const Group* g;
  const ElemSet* h;
  const FiniteField* f;

  int pos(int ambient) const { return static_cast<int>(std::lower_bound(h->begin(), h->end(), ambient) - h->begin()); }

  Vec act(int x, const Vec& v) const {
    Vec w(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i]) w[pos(g->mul(x, (*h)[i]))] = v[i];
    return w;
  }

  Mat matrix(int x, const Space& s) const {
    const std::size_t n = s.rows.size();
    Mat m(n, Vec(n));
    for (std::size_t j = 0; j < n; ++j) {
      const Vec c = s.coords(act(x, s.rows[j]));
      for (std::size_t i = 0; i < n; ++i) m[i][j] = c[i];
    }
    return m;
  }
};

bool absolutely_irreducible(const FiniteField& f, const std::vector<Mat>& all, std::size_t n) {
  if (n * n > all.size()) return false;
  Mat flat;
  for (const auto& m : all) {
    Vec v;
    for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
    flat.push_back(std::move(v));
  }
  return linalg::rank(f, std::move(flat)) == static_cast<int>(n * n);
}

// A proper nonzero submodule (in coordinates) of the module given by `gens`,
// found from kernels of `a` and of its transpose.
std::optional<Mat> split_with(const FiniteField& f, const std::vector<Mat>& gens,
                              const std::vector<Mat>& gens_t, const Mat& a, std::size_t n) {
  const Mat ker = linalg::nullspace(f, a, n);
  for (std::size_t i = 0; i < ker.size() && i < 3; ++i) {
    Mat w = spin(f, gens, {ker[i]});
    if (w.size() < n) return w;
  }
  const Mat kert = linalg::nullspace(f, transpose(a), n);
  for (std::size_t i = 0; i < kert.size() && i < 3; ++i) {
    Mat w = spin(f, gens_t, {kert[i]});
    if (w.size() < n) return linalg::nullspace(f, w, n);  // annihilator of a dual submodule
  }
  return std::nullopt;
}

}  // namespace

ModularRep irreducible_module(const BrauerContext& ctx, const BrauerPair& pair,
                              std::uint64_t seed, int cap) {
  if (!ctx.self_centralizing(pair)) throw InputError("pair is not self-centralizing");
  const Group& g = ctx.group();
  const FiniteField& f = ctx.reduction().field();
  const ElemSet h = join(g, pair.p, ctx.local(pair.p).centralizer);
  const RegularAction reg{&g, &h, &f};
  const auto hgens = generating_set(g, h);

  const GroupAlgebraElem e = ctx.idempotent(pair);
  Vec ev;
  for (int x : h) ev.push_back(e[x].value);

  // k H e by spinning e.
  Space cur{&f, {}, {}};
  {
    std::deque<Vec> queue;
    cur.add(ev);
    queue.push_back(ev);
    while (!queue.empty()) {
      Vec v = queue.front();
      queue.pop_front();
      for (int x : hgens) {
        Vec w = reg.act(x, v);
        if (cur.add(w)) queue.push_back(std::move(w));
      }
      if (static_cast<int>(cur.rows.size()) > cap) throw CapExceeded("block algebra exceeds the dimension cap");
    }
  }
  ModularRep rep;
  rep.group = h;
  rep.field = &f;
  rep.seed = seed;
  rep.block_dimension = static_cast<int>(cur.rows.size());

  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 17);
  for (;;) {
    const std::size_t n = cur.rows.size();
    std::vector<Mat> gens, gens_t;
    for (int x : hgens) {
      gens.push_back(reg.matrix(x, cur));
      gens_t.push_back(transpose(gens.back()));
    }
    std::vector<Mat> all;
    if (n * n <= h.size())
      for (int x : h) all.push_back(reg.matrix(x, cur));
    if (n == 1 || absolutely_irreducible(f, all, n)) {
      rep.dim = static_cast<int>(n);
      rep.matrices = std::move(all);  // n * n <= |H| whenever we get here
      return rep;
    }
    std::optional<Mat> sub;
    for (int trial = 0; trial < 40 && !sub; ++trial) {
      Mat a(n, Vec(n, 0));
      for (int t = 0; t < 3; ++t) {
        const Mat m = reg.matrix(h[rng() % h.size()], cur);
        const int c = static_cast<int>(rng() % f.size());
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (m[i][j]) a[i][j] = f.add(a[i][j], f.mul(c, m[i][j]));
      }
      sub = split_with(f, gens, gens_t, a, n);
    }
    // Deterministic fallback: Y(x) - lambda over every element and scalar.
    for (std::size_t xi = 0; xi < h.size() && !sub; ++xi) {
      const Mat m = reg.matrix(h[xi], cur);
      for (int lam = 0; lam < f.size() && !sub; ++lam) {
        Mat a = m;
        for (std::size_t i = 0; i < n; ++i) a[i][i] = f.sub(a[i][i], lam);
        sub = split_with(f, gens, gens_t, a, n);
      }
    }
    if (!sub) throw InternalError("module splitting failed to certify irreducibility");
    Space next{&f, {}, {}};
    for (const auto& c : *sub) next.add(cur.combine(c));
    cur = std::move(next);
  }
}

KPClass kp_class(const BrauerContext& ctx, const BrauerPair& pair, std::uint64_t seed, int cap) {
  const Group& g = ctx.group();
  const FiniteField& f = ctx.reduction().field();
  KPClass out;
  out.pair = pair;
  out.y = irreducible_module(ctx, pair, seed);
  const ElemSet& h = out.y.group;
  const std::size_t n = out.y.dim;
  const ElemSet stab = ctx.stabilizer(pair);
  out.x.stabilizer = stab;

  // Right cosets tH; identity coset first.
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 5);
  std::vector<int> coset_of(g.order(), -1);
  std::vector<ElemSet> cosets;
  for (int x : stab) {
    if (coset_of[x] >= 0) continue;
    ElemSet c;
    for (int y : h) c.push_back(g.mul(x, y));
    std::sort(c.begin(), c.end());
    for (int y : c) coset_of[y] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int m = static_cast<int>(cosets.size());
  if (m > cap) throw CapExceeded("I/P C_G(P) exceeds the cohomology cap");
  for (int i = 0; i < m; ++i)
    out.x.representatives.push_back(i == 0 || seed == 0 ? cosets[i].front()
                                                        : cosets[i][rng() % cosets[i].size()]);

  // X(t): Y(t y t^-1) X = X Y(y) for generators y of H.
  const auto hgens = generating_set(g, h);
  for (int t : out.x.representatives) {
    Mat sys;
    for (int y : hgens) {
      const Mat& a = out.y.at(g.conj(t, y));
      const Mat& b = out.y.at(y);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec row(n * n, 0);
          for (std::size_t k = 0; k < n; ++k) {
            row[k * n + j] = f.add(row[k * n + j], a[i][k]);
            row[i * n + k] = f.sub(row[i * n + k], b[k][j]);
          }
          sys.push_back(std::move(row));
        }
    }
    Mat sol = sys.empty() ? linalg::identity(n * n) : linalg::nullspace(f, sys, n * n);
    if (sol.size() != 1) throw InternalError("intertwiner space is not one-dimensional");
    Vec v = sol.front();
    std::size_t first = 0;
    while (!v[first]) ++first;
    const int inv = f.inv(v[first]);
    Mat x(n, Vec(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) x[i][j] = f.mul(v[i * n + j], inv);
    out.x.matrices.push_back(std::move(x));
  }

  // alpha(s, t) X(st) = X(s) X(t), with X(th) = X(t) Y(h).
  TableGroup quotient;
  quotient.order = m;
  quotient.table.assign(static_cast<std::size_t>(m) * m, 0);
  quotient.inverse.assign(m, 0);
  Cocycle alpha;
  alpha.modulus = f.size() - 1;
  alpha.values.assign(static_cast<std::size_t>(m) * m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int st = g.mul(out.x.representatives[i], out.x.representatives[j]);
      const int k = coset_of[st];
      quotient.table[i * m + j] = k;
      if (k == 0) quotient.inverse[i] = j;
      const int rest = g.mul(g.inv(out.x.representatives[k]), st);
      const Mat z = linalg::multiply(f, out.x.matrices[k], out.y.at(rest));
      const Mat prod = linalg::multiply(f, out.x.matrices[i], out.x.matrices[j]);
      std::size_t a = 0, b = 0;
      while (!z[a][b]) {
        if (++b == n) {
          b = 0;
          ++a;
        }
      }
      const int s = f.mul(prod[a][b], f.inv(z[a][b]));
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (prod[r][c] != f.mul(s, z[r][c])) throw InternalError("X(s)X(t) is not a scalar multiple of X(st)");
      alpha.values[i * m + j] = f.log(s);
    }
  alpha.group = std::move(quotient);
  if (!is_cocycle(alpha)) throw InternalError("factor set fails the cocycle identity");
  out.alpha = std::move(alpha);
  return out;
}

LemmaThreeReport verify_lemma_three(const BrauerContext& ctx, const BrauerPair& pair) {
  const int p = ctx.p();
  LemmaThreeReport r;
  r.kappa = kp_class(ctx, pair);
  r.kappa_sigma = kp_class(ctx, ctx.sigma(pair));
  if (r.kappa.x.representatives != r.kappa_sigma.x.representatives)
    throw InternalError("stabilizers of (P, e) and (P, sigma(e)) differ");
  const Cocycle fp = frobenius_on_class(r.kappa.alpha, p);
  Cocycle diff = r.kappa_sigma.alpha;
  for (std::size_t i = 0; i < diff.values.size(); ++i)
    diff.values[i] = ((diff.values[i] - fp.values[i]) % diff.modulus + diff.modulus) % diff.modulus;
  r.witness = coboundary_witness(diff, p);
  r.holds = r.witness.has_value();
  r.frobenius_fixed = classes_equal(r.kappa.alpha, fp, p);
  r.order = class_order(r.kappa.alpha, p);
  return r;
}

}  // namespace gwb
