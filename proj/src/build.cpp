#include "gwb/build.hpp"

#include "gwb/error.hpp"

namespace gwb {

std::vector<int> decode_vector(int code, int p, int rank) {
  std::vector<int> v(rank);
  for (int i = 0; i < rank; ++i) {
    v[i] = code % p;
    code /= p;
  }
  return v;
}

int encode_vector(const std::vector<int>& v, int p) {
  int code = 0;
  for (std::size_t i = v.size(); i-- > 0;) code = code * p + v[i];
  return code;
}

std::vector<int> apply_matrix(const IntMatrix& m, const std::vector<int>& v, int p) {
  std::vector<int> r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += static_cast<long long>(m[i][j]) * v[j];
    r[i] = static_cast<int>(((s % p) + p) % p);
  }
  return r;
}

namespace {

void check_matrices(int p, int rank, const std::vector<IntMatrix>& mats) {
  if (p < 2) throw InputError("matrix group needs a prime p");
  for (int q = 2; q * q <= p; ++q)
    if (p % q == 0) throw InputError("p is not prime");
  if (rank < 1) throw InputError("rank must be positive");
  for (const auto& m : mats) {
    if (static_cast<int>(m.size()) != rank) throw InputError("matrix has wrong row count");
    for (const auto& row : m)
      if (static_cast<int>(row.size()) != rank) throw InputError("matrix has wrong column count");
  }
}

/// Action of a matrix on all p^rank vectors.
std::vector<Point> vector_action(const IntMatrix& m, int p, int rank) {
  int n = 1;
  for (int i = 0; i < rank; ++i) n *= p;
  std::vector<Point> im(n);
  for (int c = 0; c < n; ++c)
    im[c] = static_cast<Point>(encode_vector(apply_matrix(m, decode_vector(c, p, rank), p), p));
  return im;
}

std::vector<std::vector<int>> parse_cycles(const nlohmann::json& j) {
  std::vector<std::vector<int>> cycles;
  for (const auto& c : j) cycles.push_back(c.get<std::vector<int>>());
  return cycles;
}

}  // namespace

BuiltGroup perm_group(std::size_t degree,
                      const std::vector<std::vector<std::vector<int>>>& gens, std::size_t cap) {
  if (degree == 0) throw InputError("degree must be positive");
  std::vector<Permutation> perms;
  for (const auto& g : gens) perms.push_back(Permutation::from_cycles(degree, g));
  if (perms.empty()) perms.push_back(Permutation::identity(degree));
  return {Group::generate(perms, cap), perms};
}

BuiltGroup direct_product_of(const std::vector<BuiltGroup>& factors, std::size_t cap) {
  if (factors.empty()) throw InputError("direct product needs factors");
  std::size_t total = 0;
  for (const auto& f : factors) total += f.group.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& s : f.generators) {
      std::vector<Point> im(total);
      for (std::size_t i = 0; i < total; ++i) im[i] = static_cast<Point>(i);
      for (std::size_t i = 0; i < s.degree(); ++i)
        im[offset + i] = static_cast<Point>(offset + s(static_cast<Point>(i)));
      gens.push_back(Permutation(std::move(im)));
    }
    offset += f.group.degree();
  }
  return {Group::generate(gens, cap), gens};
}

BuiltGroup semidirect(int p, int rank, const std::vector<IntMatrix>& matrices,
                      const BuiltGroup* complement, std::size_t cap) {
  check_matrices(p, rank, matrices);
  if (complement && complement->generators.size() != matrices.size())
    throw InputError("complement generator count differs from matrix count");
  int n = 1;
  for (int i = 0; i < rank; ++i) n *= p;
  const std::size_t extra = complement ? complement->group.degree() : 0;
  const std::size_t degree = n + extra;
  std::vector<Permutation> gens;
  for (int i = 0; i < rank; ++i) {
    std::vector<int> e(rank, 0);
    e[i] = 1;
    std::vector<Point> im(degree);
    for (int c = 0; c < n; ++c) {
      auto v = decode_vector(c, p, rank);
      for (int k = 0; k < rank; ++k) v[k] = (v[k] + e[k]) % p;
      im[c] = static_cast<Point>(encode_vector(v, p));
    }
    for (std::size_t k = 0; k < extra; ++k) im[n + k] = static_cast<Point>(n + k);
    gens.push_back(Permutation(std::move(im)));
  }
  for (std::size_t j = 0; j < matrices.size(); ++j) {
    auto lin = vector_action(matrices[j], p, rank);
    std::vector<Point> im(degree);
    for (int c = 0; c < n; ++c) im[c] = lin[c];
    for (std::size_t k = 0; k < extra; ++k)
      im[n + k] = static_cast<Point>(n + complement->generators[j](static_cast<Point>(k)));
    gens.push_back(Permutation(std::move(im)));
  }
  return {Group::generate(gens, cap), gens};
}

BuiltGroup matrix_group(int p, int rank, const std::vector<IntMatrix>& matrices,
                        std::size_t cap) {
  check_matrices(p, rank, matrices);
  std::vector<Permutation> gens;
  for (const auto& m : matrices) {
    auto lin = vector_action(m, p, rank);
    if (lin[0] != 0) throw InternalError("linear map moved the zero vector");
    std::vector<Point> im(lin.size() - 1);
    for (std::size_t c = 1; c < lin.size(); ++c) {
      if (lin[c] == 0) throw InputError("matrix is singular");
      im[c - 1] = static_cast<Point>(lin[c] - 1);
    }
    gens.push_back(Permutation(std::move(im)));
  }
  return {Group::generate(gens, cap), gens};
}

BuiltGroup central_extension(const BuiltGroup& base, int center_order,
                             const std::vector<std::vector<int>>& cocycle, std::size_t cap) {
  const Group& b = base.group;
  const std::size_t n = b.order();
  if (center_order < 1) throw InputError("center_order must be positive");
  if (n * center_order > cap) throw CapExceeded("central extension exceeds order cap");
  if (cocycle.size() != n) throw InputError("cocycle table has wrong row count");
  for (const auto& row : cocycle)
    if (row.size() != n) throw InputError("cocycle table has wrong column count");
  const int m = center_order;
  auto c = [&](int x, int y) { return ((cocycle[x][y] % m) + m) % m; };
  for (std::size_t x = 0; x < n; ++x)
    if (c(0, static_cast<int>(x)) != 0 || c(static_cast<int>(x), 0) != 0)
      throw InputError("cocycle is not normalized");
  for (int x = 0; x < static_cast<int>(n); ++x)
    for (int y = 0; y < static_cast<int>(n); ++y) {
      const int xy = b.mul(x, y);
      for (int z = 0; z < static_cast<int>(n); ++z)
        if ((c(x, y) + c(xy, z)) % m != (c(y, z) + c(x, b.mul(y, z))) % m)
          throw InputError("cocycle identity violated");
    }
  const std::size_t degree = n * m;
  auto left_mult = [&](int ax, int az) {
    std::vector<Point> im(degree);
    for (int x = 0; x < static_cast<int>(n); ++x)
      for (int z = 0; z < m; ++z)
        im[x * m + z] = static_cast<Point>(b.mul(ax, x) * m + (az + z + c(ax, x)) % m);
    return Permutation(std::move(im));
  };
  std::vector<Permutation> gens;
  for (const auto& s : base.generators) gens.push_back(left_mult(b.find(s), 0));
  gens.push_back(left_mult(0, 1 % m));
  BuiltGroup out{Group::generate(gens, cap), gens};
  if (out.group.order() != n * m) throw InternalError("central extension has wrong order");
  return out;
}

BuiltGroup build_group(const nlohmann::json& desc, std::size_t cap) {
  if (!desc.is_object() || !desc.contains("kind")) throw InputError("group description needs a kind");
  const std::string kind = desc.at("kind").get<std::string>();
  try {
    if (kind == "perm") {
      std::vector<std::vector<std::vector<int>>> gens;
      for (const auto& g : desc.at("generators")) gens.push_back(parse_cycles(g));
      return perm_group(desc.at("degree").get<std::size_t>(), gens, cap);
    }
    if (kind == "direct") {
      std::vector<BuiltGroup> factors;
      for (const auto& f : desc.at("factors")) factors.push_back(build_group(f, cap));
      return direct_product_of(factors, cap);
    }
    if (kind == "semidirect" || kind == "matrix") {
      const int p = desc.at("p").get<int>();
      const int rank = desc.at("rank").get<int>();
      std::vector<IntMatrix> mats;
      for (const auto& m : desc.at("matrices")) mats.push_back(m.get<IntMatrix>());
      if (kind == "matrix") return matrix_group(p, rank, mats, cap);
      if (desc.contains("complement")) {
        BuiltGroup comp = build_group(desc.at("complement"), cap);
        return semidirect(p, rank, mats, &comp, cap);
      }
      return semidirect(p, rank, mats, nullptr, cap);
    }
    if (kind == "central_ext") {
      BuiltGroup base = build_group(desc.at("base"), cap);
      return central_extension(base, desc.at("center_order").get<int>(),
                               desc.at("cocycle").get<std::vector<std::vector<int>>>(), cap);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed group description: ") + e.what());
  }
  throw InputError("unknown group kind: " + kind);
}

}  // namespace gwb
