#include "hksym/isometry.hpp"

#include "hksym/errors.hpp"
#include "hksym/normal_form.hpp"

namespace hksym {

namespace {

// Phi_p(M) = I + M + ... + M^{p-1}.
IntMatrix cyclotomic_of(const IntMatrix& m, unsigned p) {
  IntMatrix acc = IntMatrix::identity(m.rows());
  IntMatrix power = IntMatrix::identity(m.rows());
  for (unsigned i = 1; i < p; ++i) {
    power = power * m;
    acc = acc + power;
  }
  return acc;
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

LatticeIsometry::LatticeIsometry(Lattice lattice, IntMatrix matrix, unsigned p)
    : lattice_(std::move(lattice)), matrix_(std::move(matrix)), p_(p) {
  const std::size_t n = lattice_.rank();
  if (matrix_.rows() != n || matrix_.cols() != n)
    throw InputError("isometry matrix must be " + std::to_string(n) + "x" + std::to_string(n));
  if (matrix_.transpose() * lattice_.gram() * matrix_ != lattice_.gram()) throw InputError("not an isometry");
  if (!is_prime(p_) || matrix_ == IntMatrix::identity(n))
    throw InputError("order must be prime, matrix != identity");
  if (matrix_power(matrix_, p_) != IntMatrix::identity(n))
    throw InputError("matrix^" + std::to_string(p_) + " != identity");
}

Sublattice invariant_lattice(const LatticeIsometry& phi) {
  const std::size_t n = phi.lattice().rank();
  return Sublattice(phi.lattice(), integer_kernel(phi.matrix() - IntMatrix::identity(n)));
}

Sublattice coinvariant_lattice(const LatticeIsometry& phi) {
  Sublattice s = orthogonal_complement(invariant_lattice(phi));
  const IntMatrix via_cyclotomic = integer_kernel(cyclotomic_of(phi.matrix(), phi.order()));
  if (via_cyclotomic != s.basis())
    throw InvariantViolation("coinvariant lattice: orthogonal complement of T differs from ker Phi_p(phi)");
  return s;
}

IsometryInvariants compute_invariants(const LatticeIsometry& phi) {
  const unsigned p = phi.order();
  IsometryInvariants inv{invariant_lattice(phi), coinvariant_lattice(phi), p, 0, 0, 0, 0};
  if (inv.S.rank() % (p - 1) != 0)
    throw InvariantViolation("rank of S is not divisible by p - 1");
  inv.m = inv.S.rank() / (p - 1);

  const IntMatrix stacked = hstack(inv.T.basis(), inv.S.basis());
  if (stacked.cols() != phi.lattice().rank()) throw InvariantViolation("rank T + rank S != rank L");
  inv.index = abs(determinant(stacked));

  Integer rest = inv.index;
  while (rest > 1 && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
    rest /= p;
    ++inv.a;
  }
  if (rest != 1)
    throw InvariantViolation("[L : T + S] = " + inv.index.get_str() + " is not a power of " + std::to_string(p));
  for (const auto& d : smith_normal_form(stacked).invariant_factors())
    if (d != 1 && d != p) throw InvariantViolation("L / (T + S) is not p-elementary");

  inv.discS = abs(determinant(inv.S.gram()));
  return inv;
}

bool check_square_theorem(const IsometryInvariants& inv, unsigned p) {
  if (p == 2) throw InputError("square theorem requires p != 2");
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), p, inv.m);
  v *= inv.discS;
  return mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

bool check_unimodular_corollary(const IsometryInvariants& inv, unsigned p, const Lattice& l) {
  if (p == 2) throw InputError("unimodular corollary requires p != 2");
  if (!l.is_unimodular()) throw InputError("unimodular corollary requires a unimodular lattice");
  Integer pa;
  mpz_ui_pow_ui(pa.get_mpz_t(), p, inv.a);
  return inv.discS == pa && (inv.a % 2) == (inv.m % 2);
}

Overlattice overlattice_by_glue(const Lattice& pieces, const RatMatrix& glue) {
  const RatMatrix basis = module_with_glue(pieces.rank(), glue);
  const RatMatrix gram = basis.transpose() * to_rational(pieces.gram()) * basis;
  if (!is_integral(gram)) throw InputError("glue does not give an integral overlattice");
  IntMatrix g = to_integer(gram);
  for (std::size_t i = 0; i < g.rows(); ++i)
    if (!mpz_even_p(g(i, i).get_mpz_t())) throw InputError("glue does not give an even overlattice");
  return {Lattice(std::move(g)), basis};
}

IntMatrix change_basis(const IntMatrix& m, const RatMatrix& basis) {
  const RatMatrix conj = inverse(basis) * to_rational(m) * basis;
  if (!is_integral(conj)) throw InputError("matrix does not preserve the lattice");
  return to_integer(conj);
}

}  // namespace hksym
