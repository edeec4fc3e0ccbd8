#include "hksym/lefschetz.hpp"

#include "hksym/errors.hpp"

#include <numeric>

namespace hksym {

namespace {

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

IntMatrix submatrix(const IntMatrix& m, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  IntMatrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = m(rows[i], cols[j]);
  return s;
}

long mod_n(long x, long n) { return ((x % n) + n) % n; }

// det(1 - A q^qexp t^step) with e = elementary_invariants(A).
TruncatedBiSeries det_factor(const std::vector<Integer>& e, int qexp, std::size_t step, std::size_t trunc,
                             const FieldPtr& field) {
  std::vector<LaurentPoly> coeffs(trunc + 1, LaurentPoly(field));
  for (std::size_t k = 0; k < e.size() && k * step <= trunc; ++k) {
    if (e[k] == 0) continue;
    const Rational c = (k % 2 == 0) ? Rational(e[k]) : Rational(-e[k]);
    coeffs[k * step] += LaurentPoly::monomial(field, c, static_cast<int>(k) * qexp);
  }
  return TruncatedBiSeries::from_coeffs(field, trunc, std::move(coeffs));
}

FieldPtr field_for(long n) { return CyclotomicField::make(static_cast<unsigned>(n)); }

CyclotomicNumber character_value(const TorusAutomorphism& aut, const CharacterClass& chi, const FieldPtr& field) {
  long pairing = 0;
  for (std::size_t i = 0; i < 4; ++i) pairing += chi.c[i] * aut.b[i];
  return CyclotomicNumber::root_of_unity(field, mod_n(pairing, aut.n));
}

}  // namespace

TorusAutomorphism::TorusAutomorphism(IntMatrix H_, std::array<long, 4> b_, long n_, std::string label_)
    : H(std::move(H_)), b(b_), n(n_), label(std::move(label_)) {
  if (H.rows() != 4 || H.cols() != 4) throw InputError("torus automorphism: H must be 4x4");
  if (abs(determinant(H)) != 1) throw InputError("torus automorphism: det H must be +-1");
  if (n < 1 || n > static_cast<long>(kMaxConductor))
    throw InputError("torus automorphism: n must lie in [1, " + std::to_string(kMaxConductor) + "]");
  for (auto& x : b) x = mod_n(x, n);
}

IntMatrix exterior_power(const IntMatrix& m, unsigned i) {
  if (!m.square()) throw InputError("exterior_power: matrix must be square");
  if (i > m.rows()) throw InputError("exterior_power: degree exceeds dimension");
  const auto idx = subsets(m.rows(), i);
  IntMatrix out(idx.size(), idx.size());
  for (std::size_t r = 0; r < idx.size(); ++r)
    for (std::size_t c = 0; c < idx.size(); ++c) out(r, c) = determinant(submatrix(m, idx[r], idx[c]));
  return out;
}

std::vector<Integer> elementary_invariants(const IntMatrix& m) {
  std::vector<Integer> e(m.rows() + 1);
  for (std::size_t k = 0; k <= m.rows(); ++k)
    for (const auto& s : subsets(m.rows(), k)) e[k] += determinant(submatrix(m, s, s));
  return e;
}

LaurentPoly lefschetz_poly_surface(const IntMatrix& H) {
  const IntMatrix psi = H.transpose();
  const FieldPtr q_field = field_for(1);
  LaurentPoly out(q_field);
  for (unsigned k = 0; k <= psi.rows(); ++k) {
    const IntMatrix w = exterior_power(psi, k);
    Integer tr = 0;
    for (std::size_t i = 0; i < w.rows(); ++i) tr += w(i, i);
    out += LaurentPoly::monomial(q_field, (k % 2 == 0) ? Rational(tr) : Rational(-tr), static_cast<int>(k));
  }
  return out;
}

std::vector<CharacterClass> fixed_characters(const IntMatrix& H, long n) {
  if (n < 1) throw InputError("fixed_characters: n must be positive");
  const IntMatrix ht = H.transpose();
  std::vector<CharacterClass> out;
  std::array<long, 4> c{};
  for (c[0] = 0; c[0] < n; ++c[0])
    for (c[1] = 0; c[1] < n; ++c[1])
      for (c[2] = 0; c[2] < n; ++c[2])
        for (c[3] = 0; c[3] < n; ++c[3]) {
          bool fixed = true;
          for (std::size_t r = 0; r < 4 && fixed; ++r) {
            Integer s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += ht(r, k) * c[k];
            s -= c[r];
            fixed = mpz_divisible_ui_p(s.get_mpz_t(), static_cast<unsigned long>(n)) != 0;
          }
          if (!fixed) continue;
          long g = n;
          for (long x : c) g = std::gcd(g, x);
          out.push_back({c, n / g});
        }
  return out;
}

TruncatedBiSeries character_term(const TorusAutomorphism& aut, const CharacterClass& chi, std::size_t trunc,
                                 const FieldPtr& field) {
  const IntMatrix psi = aut.H.transpose();
  std::vector<std::vector<Integer>> e;
  for (unsigned i = 0; i <= 4; ++i) e.push_back(elementary_invariants(exterior_power(psi, i)));

  TruncatedBiSeries prod = TruncatedBiSeries::one(field, trunc);
  const auto order = static_cast<std::size_t>(chi.order);
  for (std::size_t v = 1; v * order <= trunc; ++v)
    for (unsigned i = 0; i <= 4; ++i) {
      TruncatedBiSeries f = det_factor(e[i], static_cast<int>(i) - 2, v * order, trunc, field);
      prod *= (i % 2 == 0) ? f.invert() : f;
    }
  return prod * character_value(aut, chi, field);
}

TruncatedBiSeries generating_series_serial(const TorusAutomorphism& aut, std::size_t trunc) {
  const FieldPtr field = field_for(aut.n);
  TruncatedBiSeries sum(field, trunc);
  for (const auto& chi : fixed_characters(aut.H, aut.n)) sum += character_term(aut, chi, trunc, field);
  return sum;
}

TruncatedBiSeries generating_series(const TorusAutomorphism& aut, std::size_t trunc) {
  const FieldPtr field = field_for(aut.n);
  const auto chars = fixed_characters(aut.H, aut.n);
  std::vector<TruncatedBiSeries> terms(chars.size(), TruncatedBiSeries(field, trunc));
  const auto count = static_cast<long>(chars.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < count; ++k)
    terms[static_cast<std::size_t>(k)] = character_term(aut, chars[static_cast<std::size_t>(k)], trunc, field);
  TruncatedBiSeries sum(field, trunc);
  for (const auto& t : terms) sum += t;
  return sum;
}

LefschetzResult lefschetz_q(const TorusAutomorphism& aut, bool parallel) {
  const auto n = static_cast<std::size_t>(aut.n);
  const TruncatedBiSeries g = parallel ? generating_series(aut, n) : generating_series_serial(aut, n);
  const LaurentPoly numerator = g.coeff(n).shift(2 * static_cast<int>(n));
  if (!numerator.is_zero() && numerator.valuation() < 0)
    throw InvariantViolation("negative power of q in q^{2n} [t^n]: " + numerator.to_string());

  const LaurentPoly divisor = lefschetz_poly_surface(aut.H).embed(g.field());
  const LaurentDivision d = divide(numerator, divisor);
  if (!d.remainder.is_zero()) throw InvariantViolation("division identity violated: remainder " + d.remainder.to_string());
  if (!d.quotient.has_rational_coeffs())
    throw InvariantViolation("Galois-stability violated: " + d.quotient.to_string());

  const FieldPtr q_field = field_for(1);
  LaurentPoly poly(q_field);
  for (const auto& [e, c] : d.quotient.terms()) poly += LaurentPoly::monomial(q_field, c.to_rational(), e);
  const Rational v = poly.evaluate_at_one().to_rational();
  if (v.get_den() != 1) throw InvariantViolation("Galois-stability violated: non-integer value " + v.get_str());
  return {poly, v.get_num()};
}

Rational corollary_value(const TorusAutomorphism& aut) {
  const auto n = static_cast<std::size_t>(aut.n);
  const FieldPtr field = field_for(aut.n);
  const IntMatrix psi = aut.H.transpose();
  std::vector<Integer> dets(n + 1);
  IntMatrix pw = IntMatrix::identity(4);
  for (std::size_t s = 1; s <= n; ++s) {
    pw = pw * psi;
    dets[s] = determinant(IntMatrix::identity(4) - pw);
  }

  TruncatedBiSeries sum(field, n);
  for (const auto& chi : fixed_characters(aut.H, aut.n)) {
    const auto order = static_cast<std::size_t>(chi.order);
    TruncatedBiSeries prod = TruncatedBiSeries::one(field, n);
    for (std::size_t v = 1; v * order <= n; ++v) {
      std::vector<LaurentPoly> arg(n + 1, LaurentPoly(field));
      for (std::size_t s = 1; v * order * s <= n; ++s)
        arg[v * order * s] += LaurentPoly::constant(field, make_rational(dets[s], static_cast<long>(s)));
      prod *= TruncatedBiSeries::from_coeffs(field, n, std::move(arg)).exp();
    }
    sum += prod * character_value(aut, chi, field);
  }
  const LaurentPoly top = sum.coeff(n);
  if (top.is_zero()) return 0;
  if (top.valuation() != 0 || top.degree() != 0)
    throw InvariantViolation("corollary series picked up a power of q: " + top.to_string());
  const CyclotomicNumber c = top.coeff(0);
  if (!c.is_rational()) throw InvariantViolation("Galois-stability violated in corollary value: " + c.to_string());
  return c.to_rational();
}

}  // namespace hksym
