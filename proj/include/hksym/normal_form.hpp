#pragma once

#include "hksym/matrix.hpp"

#include <vector>

namespace hksym {

/// Smith normal form with transforms: U * M * V == D.
///
/// Pivot rule: the nonzero entry of smallest absolute value in the active
/// submatrix, ties broken by lowest row and then lowest column. D is diagonal
/// with nonnegative entries satisfying d_i | d_{i+1}.
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Diagonal entries of D (length min(rows, cols)).
  std::vector<Integer> invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: H == W * M with W unimodular.
/// H is in row echelon form with positive pivots and the entries above each
/// pivot reduced into [0, pivot). Zero rows sit at the bottom.
struct HermiteForm {
  IntMatrix H;
  IntMatrix W;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

/// Canonical basis of the lattice spanned by the columns of `basis`.
/// Returns an (ambient x rank) matrix whose transpose is in Hermite form.
IntMatrix canonical_column_basis(const IntMatrix& basis);

/// Basis (as columns) of the saturated kernel {x in Z^cols : M x = 0},
/// in canonical Hermite-reduced form. A matrix with zero columns means the
/// kernel is trivial.
IntMatrix integer_kernel(const IntMatrix& m);

/// Columns of `basis` span a saturated sublattice of Z^rows.
IntMatrix saturate(const IntMatrix& basis);

/// Z-basis (as columns, in canonical form) of the module generated by the
/// standard lattice Z^n and the rational vectors in `extra` (one per column).
RatMatrix module_with_glue(std::size_t n, const RatMatrix& extra);

}  // namespace hksym
