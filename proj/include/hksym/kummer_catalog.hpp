#pragma once

#include "hksym/lefschetz.hpp"

#include <string>
#include <vector>

namespace hksym {

/// Torus lattice of a catalog type: basis columns in coordinates of the
/// product of elliptic curves it is built from (identity for product tori).
struct TorusModel {
  /// h on the product coordinates (before any quotient).
  IntMatrix h_product;
  /// Columns: the torus lattice basis in product coordinates.
  RatMatrix basis;
  /// h in the torus lattice basis.
  IntMatrix H;
};

/// Types 0..8. Type 0 uses H = id. Bases: E with (1, i) where no complex
/// structure matters, E_4 with (1, i), E_6 with (1, zeta_6), type 8 with the
/// four listed generators in order.
TorusModel torus_model(int type);

/// Coordinates (times n, mod n) in the torus basis of an n-torsion point given
/// in product coordinates.
std::array<long, 4> torsion_coordinates(const TorusModel& model, const RatMatrix& point, long n);

struct CatalogEntry {
  int type = 0;
  std::string variant;
  /// Lefschetz number of the induced automorphism of K_3(A).
  long expected = 0;
};

/// Every (type, variant) with its stated value, in a fixed order.
const std::vector<CatalogEntry>& catalog_entries();

/// Throws InputError on an unknown type or variant.
TorusAutomorphism catalog(int type, const std::string& variant);

/// Variant names accepted for a type.
std::vector<std::string> catalog_variants(int type);

struct CatalogOutcome {
  CatalogEntry entry;
  LaurentPoly poly;
  Integer value;
  /// L(psi, 1).
  Integer surface_value;
  Rational corollary;
  bool value_ok = false;
  bool corollary_ok = false;
  /// Set when lefschetz_q threw (division or Galois check).
  std::string error;
  bool passed() const { return error.empty() && value_ok && corollary_ok; }
};

CatalogOutcome evaluate_entry(const CatalogEntry& entry);
std::vector<CatalogOutcome> run_catalog_table();

}  // namespace hksym
