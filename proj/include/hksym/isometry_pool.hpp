#pragma once

#include "hksym/isometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hksym {

/// Named building blocks for test isometries.
namespace blocks {

/// Rotation of the simple roots of A_{p-1}: alpha_i -> alpha_{i+1},
/// alpha_{p-1} -> -(alpha_1 + ... + alpha_{p-1}). Order p, no fixed vectors.
IntMatrix cyclic_root_rotation(unsigned p);

/// Coxeter element s_1 s_2 ... s_8 of E8 in the root basis (order 30).
IntMatrix e8_coxeter();

/// Cyclic shift of p copies of a rank-r lattice.
IntMatrix block_permutation(std::size_t r, unsigned p);

/// A_{p-1}(-1) + A_{p-1} glued along (w_1, w_1), w_1 the first fundamental
/// weight. Even unimodular of signature (p-1, p-1).
Overlattice glued_root_pair(unsigned p);

}  // namespace blocks

struct PoolMember {
  std::string label;
  LatticeIsometry phi;
};

/// Deterministic pool of `count` isometries of prime order built from direct
/// sums of the blocks above, conjugated by random unimodular matrices.
/// Every prime in `primes` is used round robin.
std::vector<PoolMember> build_isometry_pool(std::size_t count, std::uint64_t seed,
                                            const std::vector<unsigned>& primes = {2, 3, 5, 7, 23});

/// Same construction restricted to unimodular ambient lattices.
std::vector<PoolMember> build_unimodular_pool(std::size_t count, std::uint64_t seed,
                                              const std::vector<unsigned>& primes = {3, 5, 7});

struct PoolVerdict {
  std::size_t m = 0;
  std::size_t a = 0;
  Integer discS;
  bool a_le_m = false;
  /// Unset for p = 2.
  std::optional<bool> square;
  /// Set only for unimodular ambient lattices and p != 2.
  std::optional<bool> corollary;
  /// Non-empty when compute_invariants threw.
  std::string error;

  friend bool operator==(const PoolVerdict&, const PoolVerdict&) = default;
};

PoolVerdict evaluate_member(const LatticeIsometry& phi);

/// Reference implementation, one member after another.
std::vector<PoolVerdict> evaluate_pool_serial(const std::vector<PoolMember>& pool);
/// OpenMP version; results are stored by index so the output equals the serial one.
std::vector<PoolVerdict> evaluate_pool_parallel(const std::vector<PoolMember>& pool);

}  // namespace hksym
