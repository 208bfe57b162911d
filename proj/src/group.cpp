#include "gwb/group.hpp"

#include "gwb/error.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>
#include <set>

namespace gwb {

namespace {
constexpr std::size_t kTableLimit = 2048;
}

Group Group::generate(const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw InputError("group needs at least one generator");
  const std::size_t deg = generators.front().degree();
  for (const auto& s : generators)
    if (s.degree() != deg) throw InputError("generators of differing degree");
  std::unordered_map<Permutation, int, PermutationHash> seen;
  std::vector<Permutation> elems{Permutation::identity(deg)};
  seen.emplace(elems.front(), 0);
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (const auto& s : generators) {
      Permutation y = s * elems[i];
      if (seen.emplace(y, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(y));
        if (elems.size() > cap)
          throw CapExceeded("group order exceeds cap " + std::to_string(cap));
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  Group g;
  g.finish(std::move(elems), generators);
  return g;
}

Group Group::from_subset(const Group& ambient, const ElemSet& subset) {
  std::vector<Permutation> elems;
  elems.reserve(subset.size());
  for (int i : subset) elems.push_back(ambient.element(i));
  std::vector<Permutation> gens;
  for (int i : generating_set(ambient, subset)) gens.push_back(ambient.element(i));
  if (gens.empty()) gens.push_back(ambient.element(0));
  Group g;
  g.ambient_ = subset;
  g.finish(std::move(elems), gens, &ambient);
  return g;
}

void Group::finish(std::vector<Permutation> elems, const std::vector<Permutation>& gens,
                   const Group* ambient) {
  elems_ = std::move(elems);
  const std::size_t n = elems_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elems_[i], static_cast<int>(i));
  if (!elems_[0].is_identity()) throw InternalError("identity is not the least element");

  auto local = [&](int amb) {
    auto it = std::lower_bound(ambient_.begin(), ambient_.end(), amb);
    if (it == ambient_.end() || *it != amb) throw InputError("subset is not closed");
    return static_cast<int>(it - ambient_.begin());
  };
  if (n <= kTableLimit) {
    table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        table_[a * n + b] = ambient ? local(ambient->mul(ambient_[a], ambient_[b]))
                                    : find(elems_[a] * elems_[b]);
  }
  inv_.resize(n);
  for (std::size_t a = 0; a < n; ++a)
    inv_[a] = ambient ? local(ambient->inv(ambient_[a])) : find(elems_[a].inverse());

  orders_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    int x = static_cast<int>(a);
    while (x != 0) {
      x = mul(x, static_cast<int>(a));
      ++k;
    }
    orders_[a] = k;
  }
  exponent_ = 1;
  for (int o : orders_) exponent_ = std::lcm(exponent_, o);

  gens_.clear();
  for (const auto& s : gens) {
    int i = find(s);
    if (i < 0) throw InternalError("generator not in its own group");
    if (std::find(gens_.begin(), gens_.end(), i) == gens_.end()) gens_.push_back(i);
  }

  class_of_.assign(n, -1);
  classes_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    if (class_of_[a] >= 0) continue;
    const int c = static_cast<int>(classes_.size());
    std::vector<int> orbit{static_cast<int>(a)};
    class_of_[a] = c;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (int s : gens_) {
        int y = conj(s, orbit[i]);
        if (class_of_[y] < 0) {
          class_of_[y] = c;
          orbit.push_back(y);
        }
      }
    classes_.push_back({static_cast<int>(a), orbit.size(), n / orbit.size()});
  }
}

int Group::from_ambient(int a) const {
  if (ambient_.empty()) return a >= 0 && a < static_cast<int>(order()) ? a : -1;
  auto it = std::lower_bound(ambient_.begin(), ambient_.end(), a);
  return it != ambient_.end() && *it == a ? static_cast<int>(it - ambient_.begin()) : -1;
}

int Group::find(const Permutation& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int Group::mul(int a, int b) const {
  if (!table_.empty()) return table_[static_cast<std::size_t>(a) * elems_.size() + b];
  return find(elems_[a] * elems_[b]);
}

int Group::pow(int a, long long k) const {
  const long long o = orders_.empty() ? 0 : orders_[a];
  if (o > 0) {
    k %= o;
    if (k < 0) k += o;
  }
  int result = 0;
  int base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

int Group::power_class(int c, long long k) const {
  return class_of_[pow(classes_[c].representative, k)];
}

// ---------------------------------------------------------------------------

ElemSet closure(const Group& g, const std::vector<int>& generators) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (int s : generators) {
      int y = g.mul(s, elems[i]);
      if (!in[y]) {
        in[y] = 1;
        elems.push_back(y);
      }
    }
  std::sort(elems.begin(), elems.end());
  return elems;
}

ElemSet whole(const Group& g) {
  ElemSet s(g.order());
  std::iota(s.begin(), s.end(), 0);
  return s;
}

ElemSet trivial_subgroup() { return {0}; }

bool contains(const ElemSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

bool is_subset(const ElemSet& small, const ElemSet& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

bool is_subgroup(const Group& g, const ElemSet& s) {
  if (s.empty() || !contains(s, 0)) return false;
  for (int a : s)
    for (int b : s)
      if (!contains(s, g.mul(a, b))) return false;
  return true;
}

std::vector<int> generating_set(const Group& g, const ElemSet& s) {
  std::vector<int> gens;
  ElemSet span{0};
  for (int x : s) {
    if (contains(span, x)) continue;
    gens.push_back(x);
    span = closure(g, gens);
    if (span.size() == s.size()) break;
  }
  return gens;
}

ElemSet centralizer(const Group& g, const ElemSet& s) {
  const auto gens = generating_set(g, s);
  ElemSet out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool ok = true;
    for (int y : gens)
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

ElemSet normalizer(const Group& g, const ElemSet& s) {
  const auto gens = generating_set(g, s);
  ElemSet out;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    bool ok = true;
    for (int y : gens)
      if (!contains(s, g.conj(x, y))) {
        ok = false;
        break;
      }
    if (ok) out.push_back(x);
  }
  return out;
}

ElemSet center(const Group& g, const ElemSet& s) { return intersect(s, centralizer(g, s)); }

ElemSet conjugate(const Group& g, const ElemSet& s, int by) {
  ElemSet out;
  out.reserve(s.size());
  for (int x : s) out.push_back(g.conj(by, x));
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet join(const Group& g, const ElemSet& a, const ElemSet& b) {
  auto gens = generating_set(g, a);
  for (int x : generating_set(g, b)) gens.push_back(x);
  return closure(g, gens);
}

LocalSubgroups local_subgroups(const Group& g, const ElemSet& p) {
  if (!is_subgroup(g, p)) throw InputError("local_subgroups: not a subgroup");
  return {centralizer(g, p), normalizer(g, p), center(g, p)};
}

std::size_t p_part(std::size_t n, int p) {
  std::size_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

int p_adic_valuation(std::size_t n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

bool is_p_element(const Group& g, int x, int p) {
  return p_part(g.elem_order(x), p) == static_cast<std::size_t>(g.elem_order(x));
}

bool is_p_group(const Group& g, const ElemSet& s, int p) {
  (void)g;
  return p_part(s.size(), p) == s.size();
}

ElemSet sylow_subgroup(const Group& g, int p) {
  const std::size_t target = p_part(g.order(), p);
  ElemSet s{0};
  while (s.size() < target) {
    const ElemSet n = normalizer(g, s);
    bool grown = false;
    for (int x : n) {
      if (contains(s, x) || !is_p_element(g, x, p)) continue;
      auto gens = generating_set(g, s);
      gens.push_back(x);
      s = closure(g, gens);
      grown = true;
      break;
    }
    if (!grown) throw InternalError("Sylow climb stalled");
  }
  return s;
}

std::pair<int, int> p_parts(const Group& g, int x, int p) {
  const long long n = g.elem_order(x);
  const long long a = static_cast<long long>(p_part(n, p));
  const long long b = n / a;
  // e = 1 mod a, e = 0 mod b gives the p-part x^e.
  long long e = 0;
  for (long long t = 0; t < n; t += b)
    if (t % a == 1 % a) {
      e = t;
      break;
    }
  const int xp = g.pow(x, e);
  const int xq = g.pow(x, (1 - e) % n + n);
  return {xp, xq};
}

std::vector<ElemSet> subgroups_of(const Group& g, const ElemSet& d, std::size_t cap) {
  std::set<ElemSet> found{ElemSet{0}};
  std::vector<ElemSet> order{ElemSet{0}};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const ElemSet h = order[i];
    const auto hgens = generating_set(g, h);
    for (int x : d) {
      if (contains(h, x)) continue;
      auto gens = hgens;
      gens.push_back(x);
      ElemSet k = closure(g, gens);
      if (found.insert(k).second) {
        order.push_back(std::move(k));
        if (order.size() > cap) throw CapExceeded("subgroup lattice exceeds cap");
      }
    }
  }
  std::sort(order.begin(), order.end(), [](const ElemSet& a, const ElemSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return order;
}

ElemSet o_p(const Group& g, int p) {
  ElemSet core = sylow_subgroup(g, p);
  for (int x = 0; x < static_cast<int>(g.order()) && core.size() > 1; ++x)
    core = intersect(core, conjugate(g, core, x));
  return core;
}

// ---------------------------------------------------------------------------

int GroupMap::operator()(int x) const {
  auto it = std::lower_bound(source.begin(), source.end(), x);
  if (it == source.end() || *it != x) throw InputError("map applied outside its source");
  return images[it - source.begin()];
}

bool GroupMap::injective() const { return image_set().size() == source.size(); }

ElemSet GroupMap::image_set() const {
  ElemSet s = images;
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

std::optional<GroupMap> extend_homomorphism(const Group& src, const std::vector<int>& gens,
                                            const Group& dst,
                                            const std::vector<int>& gen_images) {
  if (gens.size() != gen_images.size()) throw InputError("generator image count mismatch");
  std::vector<int> img(src.order(), -1);
  std::vector<int> reached{0};
  img[0] = 0;
  for (std::size_t i = 0; i < reached.size(); ++i) {
    const int x = reached[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const int y = src.mul(gens[j], x);
      const int iy = dst.mul(gen_images[j], img[x]);
      if (img[y] < 0) {
        img[y] = iy;
        reached.push_back(y);
      } else if (img[y] != iy) {
        return std::nullopt;
      }
    }
  }
  // Relations hold on the Cayley graph; also check products of reached elements
  // against generator images one more time from the other side.
  std::sort(reached.begin(), reached.end());
  GroupMap m;
  m.source = reached;
  for (int x : reached) m.images.push_back(img[x]);
  for (int x : reached)
    for (std::size_t j = 0; j < gens.size(); ++j)
      if (img[src.mul(x, gens[j])] != dst.mul(img[x], gen_images[j])) return std::nullopt;
  return m;
}

GroupMap conjugation_map(const Group& g, const ElemSet& s, int by) {
  GroupMap m;
  m.source = s;
  for (int x : s) m.images.push_back(g.conj(by, x));
  return m;
}

GroupMap compose(const GroupMap& outer, const GroupMap& inner) {
  GroupMap m;
  m.source = inner.source;
  for (int y : inner.images) m.images.push_back(outer(y));
  return m;
}

GroupMap inverse_map(const GroupMap& m) {
  if (!m.injective()) throw InputError("inverse of a non-injective map");
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < m.source.size(); ++i) pairs.emplace_back(m.images[i], m.source[i]);
  std::sort(pairs.begin(), pairs.end());
  GroupMap r;
  for (auto [a, b] : pairs) {
    r.source.push_back(a);
    r.images.push_back(b);
  }
  return r;
}

bool same_map(const GroupMap& a, const GroupMap& b) {
  return a.source == b.source && a.images == b.images;
}

namespace {
Permutation concat(const Permutation& a, const Permutation& b) {
  std::vector<Point> im(a.images());
  for (Point x : b.images()) im.push_back(static_cast<Point>(x + a.degree()));
  return Permutation(std::move(im));
}
}  // namespace

Group direct_product(const Group& a, const Group& b, std::size_t cap) {
  std::vector<Permutation> gens;
  const auto ida = a.element(0);
  const auto idb = b.element(0);
  for (int s : a.generators()) gens.push_back(concat(a.element(s), idb));
  for (int s : b.generators()) gens.push_back(concat(ida, b.element(s)));
  return Group::generate(gens, cap);
}

int pair_index(const Group& prod, const Group& a, const Group& b, int x, int y) {
  return prod.find(concat(a.element(x), b.element(y)));
}

ElemSet twisted_diagonal(const Group& prod, const Group& g, const Group& h, const GroupMap& phi) {
  if (!phi.injective()) throw InputError("twisted_diagonal: phi is not bijective");
  ElemSet out;
  for (std::size_t i = 0; i < phi.source.size(); ++i)
    out.push_back(pair_index(prod, g, h, phi.images[i], phi.source[i]));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool is_elementary_abelian(const Group& g, const ElemSet& p, int& prime) {
  prime = 0;
  for (int x : p) {
    if (x == 0) continue;
    const int o = g.elem_order(x);
    if (prime == 0) prime = o;
    if (o != prime) return false;
  }
  for (int x : p)
    for (int y : p)
      if (g.mul(x, y) != g.mul(y, x)) return false;
  if (prime == 0) return true;
  for (int q = 2; q * q <= prime; ++q)
    if (prime % q == 0) return false;
  return true;
}

}  // namespace

std::vector<GroupMap> automorphism_group(const Group& g, const ElemSet& p, std::size_t cap) {
  if (!is_subgroup(g, p)) throw InputError("automorphism_group: not a subgroup");
  std::vector<GroupMap> result;
  if (p.size() == 1) {
    result.push_back(GroupMap{p, p});
    return result;
  }
  const auto gens = generating_set(g, p);
  int prime = 0;
  if (is_elementary_abelian(g, p, prime)) {
    // gens is a basis; count |GL_n(p)| first.
    const std::size_t n = gens.size();
    std::size_t count = 1;
    std::size_t q = p.size();
    std::size_t pi = 1;
    for (std::size_t i = 0; i < n; ++i) {
      count *= (q - pi);
      pi *= prime;
      if (count > cap) throw CapExceeded("Aut(P) exceeds cap");
    }
    std::vector<int> elem_of;  // base-p coordinate code -> element
    const std::size_t total = p.size();
    elem_of.resize(total);
    for (std::size_t code = 0; code < total; ++code) {
      std::size_t c = code;
      int x = 0;
      for (std::size_t i = 0; i < n; ++i) {
        x = g.mul(x, g.pow(gens[i], static_cast<long long>(c % prime)));
        c /= prime;
      }
      elem_of[code] = x;
    }
    std::vector<int> chosen;
    std::function<void()> rec = [&]() {
      if (chosen.size() == n) {
        GroupMap m;
        m.source = p;
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t code = 0; code < total; ++code) {
          std::size_t c = code;
          int y = 0;
          for (std::size_t i = 0; i < n; ++i) {
            y = g.mul(y, g.pow(chosen[i], static_cast<long long>(c % prime)));
            c /= prime;
          }
          pairs.emplace_back(elem_of[code], y);
        }
        std::sort(pairs.begin(), pairs.end());
        for (auto [a, b] : pairs) m.images.push_back(b);
        result.push_back(std::move(m));
        return;
      }
      const ElemSet span = closure(g, chosen);
      for (int x : p) {
        if (contains(span, x)) continue;
        chosen.push_back(x);
        rec();
        chosen.pop_back();
      }
    };
    rec();
    return result;
  }
  if (p.size() > 256) throw CapExceeded("Aut(P) brute force limited to |P| <= 256");
  std::vector<int> chosen;
  std::function<void()> rec = [&]() {
    if (chosen.size() == gens.size()) {
      auto m = extend_homomorphism(g, gens, g, chosen);
      if (m && m->injective() && m->source == p) {
        result.push_back(std::move(*m));
        if (result.size() > cap) throw CapExceeded("Aut(P) exceeds cap");
      }
      return;
    }
    const int want = g.elem_order(gens[chosen.size()]);
    for (int x : p) {
      if (g.elem_order(x) != want) continue;
      chosen.push_back(x);
      rec();
      chosen.pop_back();
    }
  };
  rec();
  return result;
}

}  // namespace gwb
