#include "gwb/blocks.hpp"

#include "gwb/error.hpp"
#include "gwb/linalg.hpp"

#include <algorithm>
#include <map>

namespace gwb {

namespace {

std::vector<int> codes(const ClassVector& v) {
  std::vector<int> out;
  for (const auto& x : v) out.push_back(x.value);
  return out;
}

int p_val(long n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

}  // namespace

std::shared_ptr<const BlockSystem> BlockSystem::compute(TablePtr table,
                                                        std::shared_ptr<const Reduction> red) {
  if (table->conductor() != red->conductor())
    throw InputError("reduction conductor differs from the character table conductor");
  auto bs = std::shared_ptr<BlockSystem>(new BlockSystem());
  bs->table_ = table;
  bs->red_ = red;
  const Group& g = table->group();
  const int r = static_cast<int>(g.class_count());
  const int m = table->conductor();
  const int p = red->p();

  std::map<std::vector<int>, std::vector<int>> fibers;
  std::map<std::vector<int>, ClassVector> fiber_residues;
  for (int chi = 0; chi < static_cast<int>(table->size()); ++chi) {
    ClassVector res;
    for (int c = 0; c < r; ++c) res.push_back(red->reduce(central_character(*table, chi, c)));
    auto key = codes(res);
    fibers[key].push_back(chi);
    fiber_residues[key] = res;
  }

  std::vector<int> inverse_class(r);
  for (int c = 0; c < r; ++c) inverse_class[c] = g.class_of(g.inv(g.classes()[c].representative));
  const int a = p_val(static_cast<long>(g.order()), p);
  std::vector<Block> blocks;
  for (auto& [key, members] : fibers) {
    Block b;
    b.characters = members;
    b.residues = fiber_residues[key];
    int min_v = a;
    for (int c = 0; c < r; ++c) {
      Cyclotomic acc(m);
      for (int chi : members)
        acc += table->value(chi, inverse_class[c]) * Rational(table->degree(chi));
      acc *= Rational(1, static_cast<long>(g.order()));
      b.idempotent_K.push_back(acc);
      b.idempotent.push_back(red->reduce(acc));
    }
    for (int chi : members) min_v = std::min(min_v, p_val(table->degree(chi), p));
    b.defect = a - min_v;
    blocks.push_back(std::move(b));
  }
  std::sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) {
    if (x.defect != y.defect) return x.defect > y.defect;
    return x.characters.front() < y.characters.front();
  });
  bs->char_block_.assign(table->size(), -1);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    blocks[i].label = static_cast<int>(i);
    for (int chi : blocks[i].characters) bs->char_block_[chi] = static_cast<int>(i);
  }
  bs->blocks_ = std::move(blocks);

  // Completeness and idempotence.
  ClassVector sum(r, red->zero());
  for (const auto& b : bs->blocks_) {
    if (!(bs->multiply(b.idempotent, b.idempotent) == b.idempotent))
      throw InternalError("block idempotent is not idempotent");
    for (int c = 0; c < r; ++c) sum[c] += b.idempotent[c];
  }
  if (!(sum == bs->one())) throw InternalError("block idempotents do not sum to one");
  return bs;
}

ClassVector BlockSystem::one() const {
  ClassVector v(group().class_count(), red_->zero());
  v[0] = red_->one();
  return v;
}

ClassVector BlockSystem::multiply(const ClassVector& a, const ClassVector& b) const {
  const int r = static_cast<int>(group().class_count());
  const FiniteField& f = red_->field();
  const int p = red_->p();
  std::vector<int> out(r, 0);
  for (int j = 0; j < r; ++j) {
    if (a[j].is_zero()) continue;
    for (int i = 0; i < r; ++i) {
      if (b[i].is_zero()) continue;
      const int ab = f.mul(a[j].value, b[i].value);
      for (int k = 0; k < r; ++k) {
        const long c = table_->structure_constant(j, i, k) % p;
        if (c) out[k] = f.add(out[k], f.mul(ab, f.from_int(c)));
      }
    }
  }
  ClassVector v;
  for (int x : out) v.push_back({f, x});
  return v;
}

int BlockSystem::find(const ClassVector& v) const {
  for (const auto& b : blocks_)
    if (b.idempotent == v) return b.label;
  return -1;
}

int BlockSystem::sigma(int label) const {
  const int s = find(frobenius(blocks_[label].idempotent));
  if (s < 0) throw InternalError("Frobenius image of a block idempotent is not a block idempotent");
  return s;
}

int BlockSystem::antipode(int label) const {
  const int s = find(gwb::antipode(group(), blocks_[label].idempotent));
  if (s < 0) throw InternalError("antipode image of a block idempotent is not a block idempotent");
  return s;
}

std::vector<FieldElem> BlockSystem::element_coefficients(int label) const {
  const Group& g = group();
  std::vector<FieldElem> out;
  out.reserve(g.order());
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    out.push_back(blocks_[label].idempotent[g.class_of(x)]);
  return out;
}

BlocksPtr block_partition(GroupPtr g, int p, int conductor) {
  auto table = CharacterTable::compute(std::move(g), conductor);
  return BlockSystem::compute(table, shared_reduction(table->conductor(), p));
}

ClassVector frobenius(const ClassVector& v) {
  ClassVector out = v;
  for (auto& x : out) x = x.frobenius();
  return out;
}

ClassVector antipode(const Group& g, const ClassVector& v) {
  ClassVector out = v;
  for (std::size_t c = 0; c < g.class_count(); ++c)
    out[c] = v[g.class_of(g.inv(g.classes()[c].representative))];
  return out;
}

GaloisOrbitReport galois_orbits(const BlockSystem& bs) {
  GaloisOrbitReport rep;
  const int n = static_cast<int>(bs.size());
  for (int b = 0; b < n; ++b) rep.sigma.push_back(bs.sigma(b));
  std::vector<bool> seen(n, false);
  for (int b = 0; b < n; ++b) {
    if (seen[b]) continue;
    std::vector<int> orbit;
    for (int x = b; !seen[x]; x = rep.sigma[x]) {
      seen[x] = true;
      orbit.push_back(x);
    }
    if (rep.sigma[orbit.back()] != b) throw InternalError("sigma is not a permutation of blocks");
    rep.orbits.push_back(orbit);
  }
  return rep;
}

int product_block(const BlockSystem& bg, int a, const BlockSystem& bh, int b,
                  const BlockSystem& bprod) {
  if (&bg.reduction().field() != &bprod.reduction().field() ||
      &bh.reduction().field() != &bprod.reduction().field())
    throw InputError("product_block needs block systems over one residue field");
  const Group& g = bg.group();
  const Group& h = bh.group();
  const Group& prod = bprod.group();
  const std::size_t dg = g.degree();
  if (prod.degree() != dg + h.degree()) throw InputError("product group does not match factors");
  ClassVector v;
  for (const auto& c : prod.classes()) {
    const Permutation& z = prod.element(c.representative);
    std::vector<Point> left(dg), right(h.degree());
    for (std::size_t i = 0; i < dg; ++i) left[i] = z(static_cast<Point>(i));
    for (std::size_t i = 0; i < h.degree(); ++i)
      right[i] = static_cast<Point>(z(static_cast<Point>(dg + i)) - dg);
    const int x = g.find(Permutation(left));
    const int y = h.find(Permutation(right));
    if (x < 0 || y < 0) throw InputError("product element has a component outside the factors");
    v.push_back(bg.block(a).idempotent[g.class_of(x)] * bh.block(b).idempotent[h.class_of(h.inv(y))]);
  }
  return bprod.find(v);
}

std::vector<ClassVector> center_idempotents(const Group& g, const Reduction& red) {
  const FiniteField& f = red.field();
  const int r = static_cast<int>(g.class_count());
  const int p = red.p();
  // c[j][i][k] counted from the multiplication table.
  std::vector<int> c(static_cast<std::size_t>(r) * r * r, 0);
  for (int k = 0; k < r; ++k) {
    const int z = g.classes()[k].representative;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      const int j = g.class_of(x), i = g.class_of(g.mul(g.inv(x), z));
      auto& slot = c[(static_cast<std::size_t>(j) * r + i) * r + k];
      slot = (slot + 1) % p;
    }
  }
  using linalg::Mat;
  using linalg::Vec;
  std::vector<Mat> spaces{linalg::identity(r)};
  for (int j = 1; j < r; ++j) {
    std::vector<Mat> next;
    for (auto& w : spaces) {
      Mat basis = w;
      auto piv = linalg::rref(f, basis);
      const int d = static_cast<int>(basis.size());
      if (d == 1) {
        next.push_back(basis);
        continue;
      }
      Mat mm(d, Vec(d, 0));
      for (int b = 0; b < d; ++b) {
        // (L_j w_b)[k] = sum_i c(j,i,k) w_b[i]
        for (int a = 0; a < d; ++a) {
          const int k = piv[a];
          int acc = 0;
          for (int i = 0; i < r; ++i) {
            const int cc = c[(static_cast<std::size_t>(j) * r + i) * r + k];
            if (cc && basis[b][i]) acc = f.add(acc, f.mul(f.from_int(cc), basis[b][i]));
          }
          mm[a][b] = acc;
        }
      }
      int found = 0;
      for (int lam = 0; lam < f.size() && found < d; ++lam) {
        Mat sh = mm;
        for (int a = 0; a < d; ++a) sh[a][a] = f.sub(sh[a][a], lam);
        Mat pw = sh;
        for (int e = 1; e < d; e *= 2) pw = linalg::multiply(f, pw, pw);
        Mat ns = linalg::nullspace(f, pw, d);
        if (ns.empty()) continue;
        Mat vecs;
        for (const auto& n : ns) {
          Vec v(r, 0);
          for (int b = 0; b < d; ++b)
            if (n[b])
              for (int i = 0; i < r; ++i)
                if (basis[b][i]) v[i] = f.add(v[i], f.mul(n[b], basis[b][i]));
          vecs.push_back(v);
        }
        found += static_cast<int>(vecs.size());
        next.push_back(vecs);
      }
      if (found != d) throw InternalError("multiplication operator does not split over k");
    }
    spaces = std::move(next);
  }
  // Decompose 1 along the components.
  Mat all;
  std::vector<int> owner;
  for (std::size_t s = 0; s < spaces.size(); ++s)
    for (const auto& v : spaces[s]) {
      all.push_back(v);
      owner.push_back(static_cast<int>(s));
    }
  Mat cols(r, Vec(all.size(), 0));
  for (std::size_t b = 0; b < all.size(); ++b)
    for (int i = 0; i < r; ++i) cols[i][b] = all[b][i];
  Vec unit(r, 0);
  unit[0] = 1;
  auto coeff = linalg::solve(f, cols, unit);
  if (!coeff) throw InternalError("components do not span the center");
  std::vector<ClassVector> out(spaces.size(), ClassVector(r, red.zero()));
  for (std::size_t b = 0; b < all.size(); ++b)
    for (int i = 0; i < r; ++i)
      out[owner[b]][i] += FieldElem(f, f.mul((*coeff)[b], all[b][i]));
  return out;
}

}  // namespace gwb
