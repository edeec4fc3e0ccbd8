#include "hksym/quadratic_form.hpp"

#include "hksym/errors.hpp"
#include "hksym/text.hpp"

#include <algorithm>
#include <functional>
#include <regex>
#include <sstream>
#include <unordered_set>

namespace hksym {

namespace {

Integer floor_of(const Rational& r) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return f;
}

long to_long(const Integer& v) {
  if (!v.fits_slong_p()) throw InputError("finite quadratic form too large");
  return v.get_si();
}

// Elements of (+) Z/d_j in mixed radix, first coordinate fastest.
std::vector<Integer> decode(long index, const std::vector<long>& orders) {
  std::vector<Integer> c(orders.size());
  for (std::size_t j = 0; j < orders.size(); ++j) {
    c[j] = index % orders[j];
    index /= orders[j];
  }
  return c;
}

long element_order(const std::vector<Integer>& c, const std::vector<long>& orders) {
  Integer ord = 1;
  for (std::size_t j = 0; j < orders.size(); ++j) {
    Integer d = orders[j];
    Integer g;
    mpz_gcd(g.get_mpz_t(), c[j].get_mpz_t(), d.get_mpz_t());
    Integer local = d / g;
    mpz_lcm(ord.get_mpz_t(), ord.get_mpz_t(), local.get_mpz_t());
  }
  return ord.get_si();
}

std::vector<long> sorted_orders(const FiniteQuadraticForm& f) {
  std::vector<long> o;
  for (const auto& d : f.orders())
    if (d != 1) o.push_back(to_long(d));
  std::sort(o.begin(), o.end());
  return o;
}

// Both forms are p-primary with equal group type.
bool isomorphic_primary(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  std::vector<long> b_orders;
  for (const auto& d : b.orders()) b_orders.push_back(to_long(d));
  long size = 1;
  for (long d : b_orders) size *= d;

  struct Element {
    std::vector<Integer> coords;
    long order;
    Rational q;
  };
  std::vector<Element> elems;
  elems.reserve(static_cast<std::size_t>(size));
  for (long i = 0; i < size; ++i) {
    auto c = decode(i, b_orders);
    long ord = element_order(c, b_orders);
    Rational qv = b.q(c);
    elems.push_back({std::move(c), ord, std::move(qv)});
  }

  const std::size_t r = a.generators();
  std::vector<std::vector<std::size_t>> candidates(r);
  for (std::size_t i = 0; i < r; ++i) {
    const long want = to_long(a.orders()[i]);
    for (std::size_t e = 0; e < elems.size(); ++e)
      if (elems[e].order == want && elems[e].q == a.q_values()[i]) candidates[i].push_back(e);
    if (candidates[i].empty()) return false;
  }

  auto generates_all = [&](const std::vector<std::size_t>& img) {
    std::vector<long> a_orders;
    for (const auto& d : a.orders()) a_orders.push_back(to_long(d));
    long a_size = 1;
    for (long d : a_orders) a_size *= d;
    std::unordered_set<long> seen;
    for (long idx = 0; idx < a_size; ++idx) {
      auto c = decode(idx, a_orders);
      long code = 0;
      long radix = 1;
      for (std::size_t j = 0; j < b_orders.size(); ++j) {
        Integer s = 0;
        for (std::size_t i = 0; i < r; ++i) s += c[i] * elems[img[i]].coords[j];
        Integer red;
        mpz_fdiv_r_ui(red.get_mpz_t(), s.get_mpz_t(), static_cast<unsigned long>(b_orders[j]));
        code += red.get_si() * radix;
        radix *= b_orders[j];
      }
      seen.insert(code);
    }
    return static_cast<long>(seen.size()) == size;
  };

  std::vector<std::size_t> img(r);
  std::function<bool(std::size_t)> search = [&](std::size_t i) -> bool {
    if (i == r) return generates_all(img);
    for (std::size_t cand : candidates[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = b.b(elems[cand].coords, elems[img[j]].coords) == mod1(a.bilinear()(i, j));
      if (!ok) continue;
      img[i] = cand;
      if (search(i + 1)) return true;
    }
    return false;
  };
  return search(0);
}

}  // namespace

Rational mod1(const Rational& r) {
  Rational out = r - Rational(floor_of(r));
  out.canonicalize();
  return out;
}

Rational mod2(const Rational& r) {
  Rational half = r / 2;
  Rational out = r - Rational(2 * floor_of(half));
  out.canonicalize();
  return out;
}

std::vector<unsigned long> prime_divisors(Integer n) {
  std::vector<unsigned long> ps;
  n = abs(n);
  for (unsigned long p = 2; n > 1; ++p) {
    if (Integer(p) * p > n) {
      if (!n.fits_ulong_p()) throw InputError("prime_divisors: cofactor too large");
      ps.push_back(n.get_ui());
      break;
    }
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ps.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) n /= p;
    }
  }
  return ps;
}

FiniteQuadraticForm::FiniteQuadraticForm(std::vector<Integer> orders, RatMatrix bilinear, std::vector<Rational> q)
    : orders_(std::move(orders)), bilinear_(std::move(bilinear)), q_(std::move(q)) {
  const std::size_t n = orders_.size();
  if (bilinear_.rows() != n || bilinear_.cols() != n || q_.size() != n)
    throw InputError("finite quadratic form: inconsistent sizes");
  for (std::size_t i = 0; i < n; ++i) {
    if (orders_[i] <= 0) throw InputError("finite quadratic form: generator orders must be positive");
    q_[i] = mod2(q_[i]);
    for (std::size_t j = 0; j < n; ++j) bilinear_(i, j) = mod1(bilinear_(i, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (mod1(q_[i]) != bilinear_(i, i)) throw InputError("finite quadratic form: q(g) and b(g,g) disagree mod 1");
    if (mod2(Rational(orders_[i] * orders_[i]) * q_[i]) != 0)
      throw InputError("finite quadratic form: q not well defined on generator " + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (bilinear_(i, j) != bilinear_(j, i)) throw InputError("finite quadratic form: b not symmetric");
      if (mod1(Rational(orders_[i]) * bilinear_(i, j)) != 0)
        throw InputError("finite quadratic form: b not well defined");
    }
  }
}

FiniteQuadraticForm FiniteQuadraticForm::cyclic(const Integer& order, const Rational& q) {
  RatMatrix b(1, 1);
  b(0, 0) = q;
  return FiniteQuadraticForm({order}, b, {q});
}

Integer FiniteQuadraticForm::order() const {
  Integer n = 1;
  for (const auto& d : orders_) n *= d;
  return n;
}

Rational FiniteQuadraticForm::q(const std::vector<Integer>& c) const {
  Rational s = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    s += Rational(c[i] * c[i]) * q_[i];
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c[j] != 0) s += Rational(2 * c[i] * c[j]) * bilinear_(i, j);
  }
  return mod2(s);
}

Rational FiniteQuadraticForm::b(const std::vector<Integer>& x, const std::vector<Integer>& y) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) s += Rational(x[i] * y[j]) * bilinear_(i, j);
  }
  return mod1(s);
}

FiniteQuadraticForm FiniteQuadraticForm::negated() const {
  std::vector<Rational> q(q_.size());
  for (std::size_t i = 0; i < q_.size(); ++i) q[i] = -q_[i];
  return FiniteQuadraticForm(orders_, Rational(-1) * bilinear_, q);
}

FiniteQuadraticForm FiniteQuadraticForm::primary_part(unsigned long p) const {
  std::vector<std::size_t> keep;
  std::vector<Integer> cof;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    Integer pk = 1;
    Integer rest = orders_[i];
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      rest /= p;
      pk *= p;
    }
    if (pk == 1) continue;
    keep.push_back(i);
    cof.push_back(rest);
    orders.push_back(pk);
  }
  RatMatrix b(keep.size(), keep.size());
  std::vector<Rational> q(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    q[i] = Rational(cof[i] * cof[i]) * q_[keep[i]];
    for (std::size_t j = 0; j < keep.size(); ++j) b(i, j) = Rational(cof[i] * cof[j]) * bilinear_(keep[i], keep[j]);
  }
  return FiniteQuadraticForm(std::move(orders), std::move(b), std::move(q));
}

std::string FiniteQuadraticForm::to_string() const {
  if (orders_.empty()) return "0";
  std::ostringstream os;
  bool orthogonal = true;
  for (std::size_t i = 0; i < orders_.size(); ++i)
    for (std::size_t j = 0; j < orders_.size(); ++j)
      if (i != j && bilinear_(i, j) != 0) orthogonal = false;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    if (i) os << " + ";
    os << "Z/" << orders_[i] << '(' << q_[i] << ')';
  }
  if (!orthogonal) {
    os << " with b = [";
    for (std::size_t i = 0; i < orders_.size(); ++i)
      for (std::size_t j = i + 1; j < orders_.size(); ++j)
        if (bilinear_(i, j) != 0) os << " b" << i << j << '=' << bilinear_(i, j);
    os << " ]";
  }
  return os.str();
}

FiniteQuadraticForm orthogonal_sum(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  std::vector<Integer> orders = a.orders();
  orders.insert(orders.end(), b.orders().begin(), b.orders().end());
  std::vector<Rational> q = a.q_values();
  q.insert(q.end(), b.q_values().begin(), b.q_values().end());
  const std::size_t na = a.generators();
  RatMatrix bil(orders.size(), orders.size());
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) bil(i, j) = a.bilinear()(i, j);
  for (std::size_t i = 0; i < b.generators(); ++i)
    for (std::size_t j = 0; j < b.generators(); ++j) bil(na + i, na + j) = b.bilinear()(i, j);
  return FiniteQuadraticForm(std::move(orders), std::move(bil), std::move(q));
}

bool fqf_isomorphic(const FiniteQuadraticForm& a, const FiniteQuadraticForm& b) {
  const Integer na = a.order();
  const Integer nb = b.order();
  if (na > kMaxFormOrder || nb > kMaxFormOrder)
    throw InputError("form isomorphism test limited to group order " + std::to_string(kMaxFormOrder));
  if (na != nb) return false;
  for (unsigned long p : prime_divisors(na)) {
    FiniteQuadraticForm pa = a.primary_part(p);
    FiniteQuadraticForm pb = b.primary_part(p);
    if (sorted_orders(pa) != sorted_orders(pb)) return false;
    if (!isomorphic_primary(pa, pb)) return false;
  }
  return true;
}

FiniteQuadraticForm parse_fqf(const std::string& text) {
  static const std::regex term(R"(Z/(\d+)Z?\(([-+]?\d+)(?:/(\d+))?\))");
  FiniteQuadraticForm out({}, RatMatrix(0, 0), {});
  const std::string s = strip_spaces(normalize_math_text(text));
  if (s == "0" || s.empty()) return out;
  for (const std::string& piece : split_top_level(s, '+')) {
    std::smatch m;
    if (!std::regex_match(piece, m, term)) throw InputError("cannot parse finite quadratic form term '" + piece + "'");
    Integer order(m[1].str());
    Integer num(m[2].str());
    Integer den = m[3].matched ? Integer(m[3].str()) : Integer(1);
    out = orthogonal_sum(out, FiniteQuadraticForm::cyclic(order, make_rational(num, den)));
  }
  return out;
}

}  // namespace hksym
