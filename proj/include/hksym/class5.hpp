#pragma once

#include "hksym/lattice.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hksym {

/// One row (m, a, S, T) of the order-5 classification table. S and T are kept
/// both as expressions and as built lattices.
struct ClassificationRow {
  int m = 0;
  int a = 0;
  std::string S_expr;
  std::string T_expr;
  Lattice S;
  Lattice T;
};

ClassificationRow make_row(int m, int a, const std::string& S_expr, const std::string& T_expr);

/// The eight rows of the table, in printed order.
std::vector<ClassificationRow> table_rows();

struct CheckResult {
  std::string name;
  bool passed = false;
  /// Computed value(s) backing the verdict.
  std::string detail;
};

/// Necessary numeric conditions only. Existence of the embedding S -> L and
/// uniqueness of T in its genus are not decided here.
struct RowReport {
  int m = 0;
  int a = 0;
  std::string S;
  std::string T;
  std::vector<CheckResult> checks;
  bool passed() const;
};

RowReport verify_row(const ClassificationRow& row);

/// All (m, a) with 1 <= m, 4m <= 23, 0 <= a <= min(m, 23 - 4m), a = m mod 2.
std::vector<std::pair<int, int>> candidate_pairs();
/// Candidates ruled out by the genus existence argument.
std::vector<std::pair<int, int>> excluded_pairs();

/// Discriminant form of U(5) + <-10> against Z/5(-2/5) + Z/5(4/5)^2 + Z/2(-1/2),
/// plus signature (1, 2).
bool verify_53_complement();

/// Discriminant form of the (5,3) row's S against Z/5(2/5) + Z/5(-4/5)^2.
bool verify_53_S_form();

/// U(5) + A4(-1) against U + A4*(-5): discriminant forms and signatures.
struct ConsistencyProbe {
  bool forms_isomorphic = false;
  bool signatures_equal = false;
};
ConsistencyProbe probe_44_consistency();

struct ClassificationReport {
  std::vector<RowReport> rows;
  std::vector<std::pair<int, int>> candidates;
  bool candidates_match = false;
  /// Table pairs == candidates minus excluded_pairs().
  bool table_pairs_match = false;
  bool complement_53 = false;
  bool S_form_53 = false;
  ConsistencyProbe probe;
  bool passed() const;
};

/// Runs everything above; rows are verified in parallel. `rows` defaults to table_rows().
ClassificationReport verify_classification(const std::vector<ClassificationRow>& rows);
ClassificationReport verify_classification();

/// The candidate list as printed in the proof.
const std::vector<std::pair<int, int>>& stated_candidate_pairs();

}  // namespace hksym
