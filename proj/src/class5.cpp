#include "hksym/class5.hpp"

#include <algorithm>
#include <sstream>

namespace hksym {

namespace {

constexpr int kAmbientRank = 23;

std::string sig_text(const Signature& s) {
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

std::string orders_text(const std::vector<Integer>& orders) {
  if (orders.empty()) return "0";
  std::string out;
  for (const auto& d : orders) out += (out.empty() ? "Z/" : " + Z/") + d.get_str();
  return out;
}

Integer pow5(int a) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), 5, static_cast<unsigned long>(a));
  return r;
}

}  // namespace

ClassificationRow make_row(int m, int a, const std::string& S_expr, const std::string& T_expr) {
  return {m, a, S_expr, T_expr, lattice_from_expression(S_expr), lattice_from_expression(T_expr)};
}

std::vector<ClassificationRow> table_rows() {
  return {
      make_row(1, 1, "U+H5", "E8(-1)^2+H5+<-2>"),
      make_row(2, 2, "U+H5+A4(-1)", "E8(-1)+H5+A4(-1)+<-2>"),
      make_row(3, 1, "U+E8(-1)+H5", "E8(-1)+H5+<-2>"),
      make_row(3, 3, "U+H5+A4(-1)^2", "H5+A4(-1)^2+<-2>"),
      make_row(4, 2, "U+E8(-1)+H5+A4(-1)", "H5+A4(-1)+<-2>"),
      make_row(4, 4, "U(5)+E8(-1)+H5+A4(-1)", "H5+A4*(-5)+<-2>"),
      make_row(5, 1, "U+E8(-1)^2+H5", "H5+<-2>"),
      make_row(5, 3, "U+E8(-1)+H5+A4(-1)^2", "U(5)+<-10>"),
  };
}

bool RowReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

RowReport verify_row(const ClassificationRow& row) {
  RowReport r{row.m, row.a, row.S_expr, row.T_expr, {}};
  const int m = row.m, a = row.a;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  const auto rs = static_cast<long>(row.S.rank()), rt = static_cast<long>(row.T.rank());
  add("rank_S", rs == 4 * m, std::to_string(rs));
  add("rank_T", rt == kAmbientRank - 4 * m, std::to_string(rt));

  const Signature ss = signature(row.S), st = signature(row.T);
  add("signature_S", ss == Signature{2, static_cast<std::size_t>(std::max(0, 4 * m - 2)), 0}, sig_text(ss));
  add("signature_T", st == Signature{1, static_cast<std::size_t>(std::max(0, 22 - 4 * m)), 0}, sig_text(st));

  const PElementary pe = is_p_elementary(row.S, 5);
  const auto ds = discriminant_group(row.S).orders;
  add("D_S_5_elementary", pe.flag && static_cast<int>(pe.a) == a, orders_text(ds));

  const FiniteQuadraticForm qs = discriminant_form(row.S);
  const FiniteQuadraticForm qt = discriminant_form(row.T);
  add("D_T_order", qt.order() == 2 * pow5(a), qt.order().get_str());

  const FiniteQuadraticForm two = qt.primary_part(2);
  const FiniteQuadraticForm minus_half = FiniteQuadraticForm::cyclic(2, make_rational(-1, 2));
  add("q_T_2_part", fqf_isomorphic(two, minus_half), two.to_string());

  // S + T glues to a lattice whose discriminant form is Z/2(-1/2), so q_T = -q_S + Z/2(-1/2).
  const FiniteQuadraticForm expected = orthogonal_sum(qs.negated(), minus_half);
  add("q_T_complement", fqf_isomorphic(qt, expected), qt.to_string());

  add("parity", (a - m) % 2 == 0, std::to_string(a) + " vs " + std::to_string(m));
  add("a_le_m", a <= m, std::to_string(a) + " <= " + std::to_string(m));
  add("a_le_23_minus_4m", a <= kAmbientRank - 4 * m, std::to_string(a) + " <= " + std::to_string(kAmbientRank - 4 * m));

  Integer sq = pow5(m) * row.S.disc();
  add("square", mpz_perfect_square_p(sq.get_mpz_t()) != 0, "5^m disc S = " + sq.get_str());
  return r;
}

std::vector<std::pair<int, int>> candidate_pairs() {
  std::vector<std::pair<int, int>> out;
  for (int m = 1; 4 * m <= kAmbientRank; ++m)
    for (int a = 0; a <= std::min(m, kAmbientRank - 4 * m); ++a)
      if ((a - m) % 2 == 0) out.emplace_back(m, a);
  return out;
}

std::vector<std::pair<int, int>> excluded_pairs() { return {{2, 0}, {4, 0}}; }

const std::vector<std::pair<int, int>>& stated_candidate_pairs() {
  static const std::vector<std::pair<int, int>> list = {{1, 1}, {2, 0}, {2, 2}, {3, 1}, {3, 3},
                                                        {4, 0}, {4, 2}, {4, 4}, {5, 1}, {5, 3}};
  return list;
}

bool verify_53_complement() {
  const Lattice t = lattice_from_expression("U(5)+<-10>");
  const auto target = parse_fqf("Z/5(-2/5)+Z/5(4/5)+Z/5(4/5)+Z/2(-1/2)");
  return signature(t) == Signature{1, 2, 0} && fqf_isomorphic(discriminant_form(t), target);
}

bool verify_53_S_form() {
  const Lattice s = lattice_from_expression("U+E8(-1)+H5+A4(-1)^2");
  return fqf_isomorphic(discriminant_form(s), parse_fqf("Z/5(2/5)+Z/5(-4/5)+Z/5(-4/5)"));
}

ConsistencyProbe probe_44_consistency() {
  const Lattice x = lattice_from_expression("U(5)+A4(-1)");
  const Lattice y = lattice_from_expression("U+A4*(-5)");
  return {fqf_isomorphic(discriminant_form(x), discriminant_form(y)), signature(x) == signature(y)};
}

bool ClassificationReport::passed() const {
  return candidates_match && table_pairs_match && complement_53 && S_form_53 && probe.forms_isomorphic &&
         probe.signatures_equal &&
         std::all_of(rows.begin(), rows.end(), [](const RowReport& r) { return r.passed(); });
}

ClassificationReport verify_classification(const std::vector<ClassificationRow>& rows) {
  ClassificationReport rep;
  rep.rows.resize(rows.size());
  const auto n = static_cast<long>(rows.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) rep.rows[static_cast<std::size_t>(i)] = verify_row(rows[static_cast<std::size_t>(i)]);

  rep.candidates = candidate_pairs();
  rep.candidates_match = rep.candidates == stated_candidate_pairs();

  std::vector<std::pair<int, int>> expected;
  const auto excl = excluded_pairs();
  for (const auto& c : rep.candidates)
    if (std::find(excl.begin(), excl.end(), c) == excl.end()) expected.push_back(c);
  std::vector<std::pair<int, int>> have;
  for (const auto& r : rows) have.emplace_back(r.m, r.a);
  std::sort(have.begin(), have.end());
  rep.table_pairs_match = have == expected;

  rep.complement_53 = verify_53_complement();
  rep.S_form_53 = verify_53_S_form();
  rep.probe = probe_44_consistency();
  return rep;
}

ClassificationReport verify_classification() { return verify_classification(table_rows()); }

}  // namespace hksym
