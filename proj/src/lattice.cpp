#include "hksym/lattice.hpp"

#include "hksym/errors.hpp"
#include "hksym/normal_form.hpp"
#include "hksym/text.hpp"

#include <regex>

namespace hksym {

namespace {

IntMatrix cartan_a(std::size_t n) {
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    c(i, i) = 2;
    if (i + 1 < n) c(i, i + 1) = c(i + 1, i) = -1;
  }
  return c;
}

// Bourbaki numbering: chain 1-3-4-5-6-7-8 with node 2 attached to node 4.
IntMatrix cartan_e8() {
  IntMatrix c(8, 8);
  for (std::size_t i = 0; i < 8; ++i) c(i, i) = 2;
  const std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (auto [a, b] : edges) c(a - 1, b - 1) = c(b - 1, a - 1) = -1;
  return c;
}

}  // namespace

Lattice::Lattice(IntMatrix gram, std::string name) : gram_(std::move(gram)), name_(std::move(name)) {
  if (!gram_.square()) throw InputError("Gram matrix must be square");
  if (!gram_.is_symmetric()) throw InputError("Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) throw InputError("Gram matrix must be even (odd diagonal entry)");
  det_ = determinant(gram_);
  if (det_ == 0) throw InputError("Gram matrix must be nondegenerate");
}

Lattice Lattice::zero() { return Lattice(IntMatrix(0, 0), "0"); }

Lattice Lattice::renamed(std::string name) const {
  Lattice l = *this;
  l.name_ = std::move(name);
  return l;
}

Lattice make_standard(const std::string& raw) {
  const std::string name = strip_spaces(normalize_math_text(raw));
  static const std::regex rank_one(R"(<([-+]?\d+)>)");
  static const std::regex named(R"((U|H5|E8|A(\d+))(\*)?(?:\(([-+]?\d+)\))?)");
  std::smatch m;
  if (std::regex_match(name, m, rank_one)) {
    Integer k(m[1].str());
    if (k == 0 || !mpz_even_p(k.get_mpz_t())) throw InputError("<k> requires an even nonzero k, got " + name);
    IntMatrix g(1, 1);
    g(0, 0) = k;
    return Lattice(g, name);
  }
  if (!std::regex_match(name, m, named)) throw InputError("unknown lattice name '" + raw + "'");

  IntMatrix base;
  const std::string kind = m[1].str();
  if (kind == "U") {
    base = IntMatrix{{0, 1}, {1, 0}};
  } else if (kind == "H5") {
    base = IntMatrix{{2, 1}, {1, -2}};
  } else if (kind == "E8") {
    base = cartan_e8();
  } else {
    const long n = std::stol(m[2].str());
    if (n < 1 || n > 64) throw InputError("A_n needs 1 <= n <= 64, got " + name);
    base = cartan_a(static_cast<std::size_t>(n));
  }
  const Integer k = m[4].matched ? Integer(m[4].str()) : Integer(1);
  if (k == 0) throw InputError("scale factor must be nonzero in " + name);
  if (m[3].matched) return rescale_rational(inverse(to_rational(base)), k, name);
  return Lattice(k * base, name);
}

Lattice lattice_from_expression(const std::string& expr) {
  const std::string s = strip_spaces(normalize_math_text(expr));
  if (s.empty()) throw InputError("empty lattice expression");
  if (s == "0") return Lattice::zero();
  Lattice out = Lattice::zero();
  for (const std::string& piece : split_top_level(s, '+')) {
    std::string base = piece;
    long mult = 1;
    const auto caret = piece.rfind('^');
    const auto close = piece.find_last_of(")>");
    if (caret != std::string::npos && (close == std::string::npos || caret > close)) {
      base = piece.substr(0, caret);
      try {
        mult = std::stol(piece.substr(caret + 1));
      } catch (const std::exception&) {
        throw InputError("bad multiplicity in '" + piece + "'");
      }
      if (mult < 1) throw InputError("bad multiplicity in '" + piece + "'");
    }
    Lattice l = make_standard(base);
    for (long i = 0; i < mult; ++i) out = direct_sum(out, l);
  }
  return out.renamed(s);
}

Lattice direct_sum(const Lattice& a, const Lattice& b) {
  std::string name;
  if (a.rank() == 0)
    name = b.name();
  else if (b.rank() == 0)
    name = a.name();
  else if (!a.name().empty() && !b.name().empty())
    name = a.name() + "+" + b.name();
  return Lattice(block_diagonal(a.gram(), b.gram()), name);
}

Lattice rescale(const Lattice& l, const Integer& k) {
  if (k == 0) throw InputError("rescale factor must be nonzero");
  std::string name = l.name().empty() ? std::string() : l.name() + "(" + k.get_str() + ")";
  return Lattice(k * l.gram(), name);
}

Lattice rescale_rational(const RatMatrix& gram, const Integer& k, std::string name) {
  if (k == 0) throw InputError("rescale factor must be nonzero");
  RatMatrix scaled = Rational(k) * gram;
  if (!is_integral(scaled)) throw InputError("rescaled Gram matrix is not integral");
  return Lattice(to_integer(scaled), std::move(name));
}

RatMatrix dual_gram(const Lattice& l) { return inverse(to_rational(l.gram())); }

Signature signature(const RatMatrix& sym) {
  if (!sym.is_symmetric()) throw InputError("signature: matrix not symmetric");
  RatMatrix a = sym;
  const std::size_t n = a.rows();
  std::vector<bool> alive(n, true);
  std::size_t remaining = n;
  Signature sig;

  auto eliminate_one = [&](std::size_t i) {
    const Rational piv = a(i, i);
    (piv > 0 ? sig.plus : sig.minus) += 1;
    alive[i] = false;
    --remaining;
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k] || a(k, i) == 0) continue;
      Rational f = a(k, i) / piv;
      for (std::size_t l = 0; l < n; ++l)
        if (alive[l]) a(k, l) -= f * a(i, l);
    }
  };
  // Block [[0, b], [b, 0]] has inertia (1, 1); its inverse is [[0, 1/b], [1/b, 0]].
  auto eliminate_two = [&](std::size_t i, std::size_t j) {
    const Rational b = a(i, j);
    sig.plus += 1;
    sig.minus += 1;
    alive[i] = alive[j] = false;
    remaining -= 2;
    RatMatrix upd(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!alive[k]) continue;
      for (std::size_t l = 0; l < n; ++l)
        if (alive[l]) upd(k, l) = (a(k, i) * a(j, l) + a(k, j) * a(i, l)) / b;
    }
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t l = 0; l < n; ++l)
        if (alive[k] && alive[l]) a(k, l) -= upd(k, l);
  };

  while (remaining > 0) {
    std::optional<std::size_t> diag;
    for (std::size_t i = 0; i < n && !diag; ++i)
      if (alive[i] && a(i, i) != 0) diag = i;
    if (diag) {
      eliminate_one(*diag);
      continue;
    }
    std::optional<std::pair<std::size_t, std::size_t>> off;
    for (std::size_t i = 0; i < n && !off; ++i)
      for (std::size_t j = i + 1; j < n && !off; ++j)
        if (alive[i] && alive[j] && a(i, j) != 0) off = std::make_pair(i, j);
    if (!off) {
      sig.zero += remaining;
      break;
    }
    eliminate_two(off->first, off->second);
  }
  return sig;
}

Signature signature(const Lattice& l) { return signature(to_rational(l.gram())); }

DiscriminantGroup discriminant_group(const Lattice& l) {
  // U G V = D, so the dual lattice G^{-1} Z^n is spanned by the columns V e_i / d_i.
  const SmithForm snf = smith_normal_form(l.gram());
  const auto factors = snf.invariant_factors();
  DiscriminantGroup out;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < factors.size(); ++i)
    if (factors[i] != 1) {
      out.orders.push_back(factors[i]);
      idx.push_back(i);
    }
  out.generators = RatMatrix(l.rank(), idx.size());
  for (std::size_t c = 0; c < idx.size(); ++c)
    for (std::size_t r = 0; r < l.rank(); ++r)
      out.generators(r, c) = mod1(make_rational(snf.V(r, idx[c]), factors[idx[c]]));
  return out;
}

FiniteQuadraticForm discriminant_form(const Lattice& l) {
  const DiscriminantGroup dg = discriminant_group(l);
  const RatMatrix g = dg.generators;
  const RatMatrix pairing = g.transpose() * to_rational(l.gram()) * g;
  std::vector<Rational> q(dg.orders.size());
  for (std::size_t i = 0; i < q.size(); ++i) q[i] = pairing(i, i);
  return FiniteQuadraticForm(dg.orders, pairing, std::move(q));
}

PElementary is_p_elementary(const Lattice& l, unsigned long p) {
  const DiscriminantGroup dg = discriminant_group(l);
  PElementary r;
  r.flag = true;
  for (const auto& d : dg.orders)
    if (d != p) r.flag = false;
  r.a = r.flag ? dg.orders.size() : 0;
  return r;
}

Sublattice::Sublattice(Lattice ambient, IntMatrix basis) : ambient_(std::move(ambient)), basis_(std::move(basis)) {
  if (basis_.cols() > 0 && basis_.rows() != ambient_.rank())
    throw InputError("sublattice basis has wrong ambient dimension");
  if (basis_.cols() == 0) basis_ = IntMatrix(ambient_.rank(), 0);
  if (hksym::rank(basis_) != basis_.cols()) throw InputError("sublattice basis columns are dependent");
}

IntMatrix Sublattice::gram() const { return basis_.transpose() * ambient_.gram() * basis_; }

Lattice Sublattice::as_lattice() const { return Lattice(gram()); }

bool Sublattice::is_primitive() const { return canonical_column_basis(basis_) == saturate(basis_); }

Sublattice orthogonal_complement(const Sublattice& m) {
  const IntMatrix pairing = m.basis().transpose() * m.ambient().gram();
  return Sublattice(m.ambient(), integer_kernel(pairing));
}

}  // namespace hksym
