#pragma once

#include "hksym/lattice.hpp"

namespace hksym {

bool is_prime(unsigned long n);

/// Isometry of prime order p. The constructor checks phi^T G phi == G,
/// phi != id and phi^p == id.
class LatticeIsometry {
 public:
  LatticeIsometry(Lattice lattice, IntMatrix matrix, unsigned p);

  const Lattice& lattice() const { return lattice_; }
  const IntMatrix& matrix() const { return matrix_; }
  unsigned order() const { return p_; }

 private:
  Lattice lattice_;
  IntMatrix matrix_;
  unsigned p_;
};

struct IsometryInvariants {
  Sublattice T;
  Sublattice S;
  unsigned p = 0;
  std::size_t m = 0;
  std::size_t a = 0;
  /// |det| of the Gram matrix of S.
  Integer discS;
  /// [L : T + S] = p^a.
  Integer index;
};

/// ker(phi - id), saturated.
Sublattice invariant_lattice(const LatticeIsometry& phi);

/// Orthogonal complement of the invariant lattice. Also computes the saturated
/// kernel of Phi_p(phi) and throws InvariantViolation if the two disagree.
Sublattice coinvariant_lattice(const LatticeIsometry& phi);

/// Throws InvariantViolation if [L : T + S] is not a power of p, or the
/// quotient is not p-elementary, or rank S is not divisible by p - 1.
IsometryInvariants compute_invariants(const LatticeIsometry& phi);

/// p^m * disc(S) is a perfect square. Requires p != 2.
bool check_square_theorem(const IsometryInvariants& inv, unsigned p);

/// For unimodular L: disc(S) == p^a and a == m mod 2. Requires p != 2.
bool check_unimodular_corollary(const IsometryInvariants& inv, unsigned p, const Lattice& l);

/// Result of adjoining rational glue vectors to a lattice.
struct Overlattice {
  Lattice lattice;
  /// Columns: the new basis in coordinates of the original lattice.
  RatMatrix basis;
};

/// Even integral overlattice generated by `pieces` and the columns of `glue`
/// (coordinates in the basis of `pieces`). The new basis is Hermite reduced.
/// Throws InputError when the result is not integral or not even.
Overlattice overlattice_by_glue(const Lattice& pieces, const RatMatrix& glue);

/// basis^{-1} * m * basis; throws InputError if m does not preserve the lattice spanned by `basis`.
IntMatrix change_basis(const IntMatrix& m, const RatMatrix& basis);

}  // namespace hksym
