#include "hksym/isometry_pool.hpp"

#include "hksym/errors.hpp"

#include <random>

namespace hksym {

namespace blocks {

IntMatrix cyclic_root_rotation(unsigned p) {
  const std::size_t n = p - 1;
  IntMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (std::size_t r = 0; r < n; ++r) m(r, n - 1) = -1;
  return m;
}

IntMatrix e8_coxeter() {
  const IntMatrix c = make_standard("E8").gram();
  IntMatrix w = IntMatrix::identity(8);
  // s_i(x) = x - (C x)_i e_i
  for (std::size_t i = 0; i < 8; ++i) {
    IntMatrix s = IntMatrix::identity(8);
    for (std::size_t j = 0; j < 8; ++j) s(i, j) -= c(i, j);
    w = w * s;
  }
  return w;
}

IntMatrix block_permutation(std::size_t r, unsigned p) {
  IntMatrix m(r * p, r * p);
  for (std::size_t k = 0; k < p; ++k)
    for (std::size_t i = 0; i < r; ++i) m(((k + 1) % p) * r + i, k * r + i) = 1;
  return m;
}

Overlattice glued_root_pair(unsigned p) {
  const std::string a = "A" + std::to_string(p - 1);
  const Lattice pieces = direct_sum(make_standard(a + "(-1)"), make_standard(a));
  const std::size_t n = p - 1;
  RatMatrix glue(2 * n, 1);
  for (std::size_t i = 0; i < n; ++i)
    glue(i, 0) = glue(n + i, 0) = make_rational(static_cast<long>(n - i), static_cast<long>(p));
  return overlattice_by_glue(pieces, glue);
}

}  // namespace blocks

namespace {

struct Piece {
  std::string label;
  IntMatrix gram;
  IntMatrix matrix;
};

Piece identity_piece(const char* name) {
  const Lattice l = make_standard(name);
  return {std::string("id_") + name, l.gram(), IntMatrix::identity(l.rank())};
}

Piece rotation_piece(unsigned p) {
  return {"rot_A" + std::to_string(p - 1), make_standard("A" + std::to_string(p - 1) + "(-1)").gram(),
          blocks::cyclic_root_rotation(p)};
}

Piece glued_piece(unsigned p, bool both) {
  const Overlattice o = blocks::glued_root_pair(p);
  const IntMatrix rot = blocks::cyclic_root_rotation(p);
  const IntMatrix second = both ? rot : IntMatrix::identity(p - 1);
  return {both ? "glued_rot_rot" : "glued_rot_id", o.lattice.gram(), change_basis(block_diagonal(rot, second), o.basis)};
}

Piece permutation_piece(const char* name, unsigned p) {
  Lattice l = Lattice::zero();
  const Lattice base = make_standard(name);
  for (unsigned k = 0; k < p; ++k) l = direct_sum(l, base);
  return {std::string("perm_") + name, l.gram(), blocks::block_permutation(base.rank(), p)};
}

Piece coxeter_piece(unsigned p) {
  return {"e8_coxeter^" + std::to_string(30 / p), make_standard("E8(-1)").gram(),
          matrix_power(blocks::e8_coxeter(), 30 / p)};
}

IntMatrix integer_inverse(const IntMatrix& v) { return to_integer(inverse(to_rational(v))); }

IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) return u;
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<long> coef(-1, 1);
  for (std::size_t s = 0; s < 2 * n; ++s) {
    const std::size_t i = idx(rng);
    const std::size_t j = idx(rng);
    if (i != j) u.add_row(i, j, Integer(coef(rng)));
  }
  return u;
}

std::vector<Piece> nontrivial_pieces(unsigned p, bool unimodular_only) {
  std::vector<Piece> out;
  if (!unimodular_only) out.push_back(rotation_piece(p));
  if (p <= 7) {
    out.push_back(glued_piece(p, false));
    out.push_back(glued_piece(p, true));
    out.push_back(permutation_piece("U", p));
    if (!unimodular_only) out.push_back(permutation_piece("<-2>", p));
    if (!unimodular_only && p <= 5) out.push_back(permutation_piece("A2(-1)", p));
  }
  if (p == 2 || p == 3 || p == 5) out.push_back(coxeter_piece(p));
  if (p == 2 && !unimodular_only) out.push_back({"minus_id_U", make_standard("U").gram(), -IntMatrix::identity(2)});
  return out;
}

std::vector<PoolMember> build(std::size_t count, std::uint64_t seed, const std::vector<unsigned>& primes,
                              bool unimodular_only) {
  if (primes.empty()) throw InputError("isometry pool needs at least one prime");
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Piece>> per_prime;
  for (unsigned p : primes) {
    if (!is_prime(p)) throw InputError("isometry pool: " + std::to_string(p) + " is not prime");
    per_prime.push_back(nontrivial_pieces(p, unimodular_only));
  }
  std::vector<Piece> fillers = {identity_piece("U"), identity_piece("E8(-1)")};
  if (!unimodular_only) {
    fillers.push_back(identity_piece("H5"));
    fillers.push_back(identity_piece("<-2>"));
  }

  std::vector<PoolMember> pool;
  pool.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t pi = k % primes.size();
    const unsigned p = primes[pi];
    const auto& choices = per_prime[pi];
    const std::size_t max_rank = p == 23 ? 24 : 26;

    std::vector<const Piece*> parts;
    std::size_t rank = 0;
    auto pick = [&](const std::vector<Piece>& from) {
      const Piece& c = from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
      if (!parts.empty() && rank + c.gram.rows() > max_rank) return;
      parts.push_back(&c);
      rank += c.gram.rows();
    };
    pick(choices);
    const int extra = std::uniform_int_distribution<int>(0, 2)(rng);
    for (int e = 0; e < extra; ++e) pick(choices);
    if (std::uniform_int_distribution<int>(0, 1)(rng)) pick(fillers);

    IntMatrix gram(0, 0), matrix(0, 0);
    std::string label = "p=" + std::to_string(p) + ":";
    for (const Piece* part : parts) {
      gram = block_diagonal(gram, part->gram);
      matrix = block_diagonal(matrix, part->matrix);
      label += " " + part->label;
    }
    const IntMatrix v = random_unimodular(gram.rows(), rng);
    pool.push_back({label, LatticeIsometry(Lattice(v.transpose() * gram * v), integer_inverse(v) * matrix * v, p)});
  }
  return pool;
}

}  // namespace

std::vector<PoolMember> build_isometry_pool(std::size_t count, std::uint64_t seed, const std::vector<unsigned>& primes) {
  return build(count, seed, primes, false);
}

std::vector<PoolMember> build_unimodular_pool(std::size_t count, std::uint64_t seed,
                                              const std::vector<unsigned>& primes) {
  for (unsigned p : primes)
    if (p == 2) throw InputError("unimodular pool is for odd primes");
  return build(count, seed, primes, true);
}

PoolVerdict evaluate_member(const LatticeIsometry& phi) {
  PoolVerdict v;
  try {
    const IsometryInvariants inv = compute_invariants(phi);
    v.m = inv.m;
    v.a = inv.a;
    v.discS = inv.discS;
    v.a_le_m = inv.a <= inv.m;
    if (phi.order() != 2) {
      v.square = check_square_theorem(inv, phi.order());
      if (phi.lattice().is_unimodular()) v.corollary = check_unimodular_corollary(inv, phi.order(), phi.lattice());
    }
  } catch (const InvariantViolation& e) {
    v.error = e.what();
  }
  return v;
}

std::vector<PoolVerdict> evaluate_pool_serial(const std::vector<PoolMember>& pool) {
  std::vector<PoolVerdict> out;
  out.reserve(pool.size());
  for (const auto& member : pool) out.push_back(evaluate_member(member.phi));
  return out;
}

std::vector<PoolVerdict> evaluate_pool_parallel(const std::vector<PoolMember>& pool) {
  std::vector<PoolVerdict> out(pool.size());
  const auto n = static_cast<long>(pool.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = evaluate_member(pool[static_cast<std::size_t>(i)].phi);
  return out;
}

}  // namespace hksym
