#include "hksym/normal_form.hpp"

#include <optional>
#include <utility>

namespace hksym {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Smallest |a_ij| != 0 over i, j >= k; ties go to the lowest row, then column.
std::optional<std::pair<std::size_t, std::size_t>> find_pivot(const IntMatrix& a, std::size_t k) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = k; i < a.rows(); ++i)
    for (std::size_t j = k; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  const std::size_t n = std::min(D.rows(), D.cols());
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(D(i, i));
  return out;
}

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t steps = std::min(m.rows(), m.cols());

  for (std::size_t k = 0; k < steps; ++k) {
    bool exhausted = false;
    for (;;) {
      auto pivot = find_pivot(a, k);
      if (!pivot) {
        exhausted = true;
        break;
      }
      a.swap_rows(k, pivot->first);
      u.swap_rows(k, pivot->first);
      a.swap_cols(k, pivot->second);
      v.swap_cols(k, pivot->second);

      bool dirty = false;
      for (std::size_t i = k + 1; i < a.rows(); ++i) {
        if (a(i, k) == 0) continue;
        Integer q = floor_div(a(i, k), a(k, k));
        a.add_row(i, k, Integer(-q));
        u.add_row(i, k, Integer(-q));
        if (a(i, k) != 0) dirty = true;
      }
      for (std::size_t j = k + 1; j < a.cols(); ++j) {
        if (a(k, j) == 0) continue;
        Integer q = floor_div(a(k, j), a(k, k));
        a.add_col(j, k, Integer(-q));
        v.add_col(j, k, Integer(-q));
        if (a(k, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // Enforce d_k | remaining entries.
      bool fixed = false;
      for (std::size_t i = k + 1; i < a.rows() && !fixed; ++i)
        for (std::size_t j = k + 1; j < a.cols(); ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
            a.add_row(k, i, Integer(1));
            u.add_row(k, i, Integer(1));
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    if (exhausted) break;
    if (a(k, k) < 0) {
      a.negate_row(k);
      u.negate_row(k);
    }
  }
  return {std::move(u), std::move(a), std::move(v)};
}

HermiteForm hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix w = IntMatrix::identity(m.rows());
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      if (a(i, col) == 0) continue;
      // [s t; -b/g a/g] is unimodular and clears a(i, col).
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a(row, col).get_mpz_t(), a(i, col).get_mpz_t());
      Integer x = a(row, col) / g;
      Integer y = a(i, col) / g;
      for (IntMatrix* mat : {&a, &w}) {
        for (std::size_t c = 0; c < mat->cols(); ++c) {
          Integer r0 = (*mat)(row, c);
          Integer r1 = (*mat)(i, c);
          (*mat)(row, c) = s * r0 + t * r1;
          (*mat)(i, c) = x * r1 - y * r0;
        }
      }
    }
    if (a(row, col) == 0) continue;
    if (a(row, col) < 0) {
      a.negate_row(row);
      w.negate_row(row);
    }
    for (std::size_t i = 0; i < row; ++i) {
      if (a(i, col) == 0) continue;
      Integer q = floor_div(a(i, col), a(row, col));
      a.add_row(i, row, Integer(-q));
      w.add_row(i, row, Integer(-q));
    }
    ++row;
  }
  return {std::move(a), std::move(w), row};
}

IntMatrix canonical_column_basis(const IntMatrix& basis) {
  HermiteForm h = hermite_normal_form(basis.transpose());
  IntMatrix out(basis.rows(), h.rank);
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t c = 0; c < basis.rows(); ++c) out(c, r) = h.H(r, c);
  return out;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  // W * M^T = H; the rows of W beyond rank(H) annihilate M and span a saturated sublattice.
  HermiteForm h = hermite_normal_form(m.transpose());
  const std::size_t n = m.cols();
  const std::size_t dim = n - h.rank;
  IntMatrix k(n, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < n; ++c) k(c, r) = h.W(h.rank + r, c);
  return canonical_column_basis(k);
}

IntMatrix saturate(const IntMatrix& basis) {
  if (basis.cols() == 0) return basis;
  // Double orthogonal complement under the standard dot product.
  IntMatrix orth = integer_kernel(basis.transpose());
  return integer_kernel(orth.transpose());
}

RatMatrix module_with_glue(std::size_t n, const RatMatrix& extra) {
  if (extra.cols() > 0 && extra.rows() != n) throw std::invalid_argument("module_with_glue: dimension mismatch");
  Integer denom = 1;
  for (std::size_t i = 0; i < extra.rows(); ++i)
    for (std::size_t j = 0; j < extra.cols(); ++j) {
      Integer d = extra(i, j).get_den();
      mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), d.get_mpz_t());
    }
  IntMatrix gens(n, n + extra.cols());
  for (std::size_t i = 0; i < n; ++i) {
    gens(i, i) = denom;
    for (std::size_t j = 0; j < extra.cols(); ++j) {
      Rational scaled = extra(i, j) * denom;
      gens(i, n + j) = scaled.get_num();
    }
  }
  IntMatrix basis = canonical_column_basis(gens);
  RatMatrix out(n, basis.cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      out(i, j) = make_rational(basis(i, j), denom);
    }
  return out;
}

}  // namespace hksym
