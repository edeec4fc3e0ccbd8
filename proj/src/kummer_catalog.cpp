#include "hksym/kummer_catalog.hpp"

#include "hksym/errors.hpp"
#include "hksym/isometry.hpp"
#include "hksym/normal_form.hpp"

namespace hksym {

namespace {

constexpr long kIndex = 3;

// Multiplication by i on E_4 = C / (Z + iZ), basis (1, i).
IntMatrix mult_i() { return IntMatrix{{0, -1}, {1, 0}}; }
// Multiplication by zeta_3 on E_6 = C / (Z + zeta_6 Z), basis (1, zeta_6).
IntMatrix mult_zeta3() { return IntMatrix{{-1, -1}, {1, 0}}; }

IntMatrix companion_phi5() {
  IntMatrix m(4, 4);
  for (std::size_t i = 0; i < 3; ++i) m(i + 1, i) = 1;
  for (std::size_t r = 0; r < 4; ++r) m(r, 3) = -1;
  return m;
}

RatMatrix glue_columns(std::initializer_list<std::array<long, 4>> nums, long den) {
  RatMatrix g(4, nums.size());
  std::size_t c = 0;
  for (const auto& v : nums) {
    for (std::size_t r = 0; r < 4; ++r) g(r, c) = make_rational(v[r], den);
    ++c;
  }
  return g;
}

struct VariantDef {
  int type;
  const char* name;
  int sign;
  // Translation point in product coordinates: num / den.
  std::array<long, 4> num;
  long den;
  long expected;
};

const std::vector<VariantDef>& variant_defs() {
  static const std::vector<VariantDef> defs = {
      {0, "id", 1, {0, 0, 0, 0}, 1, 108},
      {0, "id,b!=0", 1, {1, 0, 0, 0}, 3, 27},
      {0, "-id", -1, {0, 0, 0, 0}, 1, 60},
      {0, "-id,b!=0", -1, {1, 0, 0, 0}, 3, 60},

      {1, "h", 1, {0, 0, 0, 0}, 1, 12},
      {1, "h,u=0", 1, {0, 0, 1, 0}, 3, 12},
      {1, "h,u!=0", 1, {1, 0, 0, 0}, 3, 3},
      {2, "h", 1, {0, 0, 0, 0}, 1, 12},
      {2, "h,u=0", 1, {0, 0, 1, 0}, 3, 12},
      {2, "h,u!=0", 1, {1, 0, 0, 0}, 3, 3},
      {3, "h", 1, {0, 0, 0, 0}, 1, 12},
      {3, "h,u=0", 1, {0, 0, 1, 0}, 3, 12},
      {3, "h,u!=0", 1, {1, 0, 0, 0}, 3, 3},

      {4, "h", 1, {0, 0, 0, 0}, 1, 16},
      {4, "h,b!=0", 1, {1, 0, 0, 0}, 3, 16},

      {5, "h", 1, {0, 0, 0, 0}, 1, 27},
      {5, "h,u=0,v-in-D6", 1, {0, 0, 1, 1}, 3, 27},
      {5, "h,u=0,v-notin-D6", 1, {0, 0, 1, 0}, 3, 0},
      {5, "h,u!=0,v-in-D6", 1, {1, 0, 1, 1}, 3, 0},
      {5, "h,u!=0,v-notin-D6", 1, {1, 0, 1, 0}, 3, 0},
      {5, "-h", -1, {0, 0, 0, 0}, 1, 9},
      {5, "-h,b!=0", -1, {1, 0, 0, 0}, 3, 9},

      // Glue point (a, a') = (e_1 / 3, (1 + zeta_6) / 3); (t/3)(a, a') has denominator 9.
      {6, "h", 1, {0, 0, 0, 0}, 1, 9},
      {6, "h,t=0,u-in-Za", 1, {1, 0, 0, 0}, 3, 9},
      {6, "h,t=0,u-notin-Za", 1, {0, 1, 0, 0}, 3, 0},
      {6, "h,t!=0", 1, {1, 0, 1, 1}, 9, 0},
      {6, "-h", -1, {0, 0, 0, 0}, 1, 9},
      {6, "-h,b!=0", -1, {1, 0, 0, 0}, 3, 9},

      {7, "h", 1, {0, 0, 0, 0}, 1, 36},
      {7, "h,b-in-D6xD6", 1, {1, 1, 2, 2}, 3, 36},
      {7, "h,b-notin-D6xD6", 1, {1, 0, 0, 0}, 3, 27},
      {7, "-h", -1, {0, 0, 0, 0}, 1, 12},
      {7, "-h,b!=0", -1, {1, 0, 0, 0}, 3, 12},

      {8, "h", 1, {0, 0, 0, 0}, 1, 13},
      {8, "h,b!=0", 1, {1, 0, 0, 0}, 3, 13},
      {8, "-h", -1, {0, 0, 0, 0}, 1, 5},
      {8, "-h,b!=0", -1, {1, 0, 0, 0}, 3, 5},
  };
  return defs;
}

const VariantDef& find_def(int type, const std::string& variant) {
  if (type < 0 || type > 8) throw InputError("catalog type must be in 0..8, got " + std::to_string(type));
  for (const auto& s : variant_defs())
    if (s.type == type && variant == s.name) return s;
  std::string known;
  for (const auto& v : catalog_variants(type)) known += (known.empty() ? "" : ", ") + v;
  throw InputError("unknown variant '" + variant + "' for type " + std::to_string(type) + " (known: " + known + ")");
}

}  // namespace

TorusModel torus_model(int type) {
  IntMatrix h;
  RatMatrix glue(4, 0);
  switch (type) {
    case 0: h = IntMatrix::identity(4); break;
    case 1: h = IntMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}; break;
    case 2:
      h = torus_model(1).h_product;
      glue = glue_columns({{1, 0, 1, 0}}, 2);
      break;
    case 3:
      h = torus_model(1).h_product;
      glue = glue_columns({{1, 0, 1, 0}, {0, 1, 0, 1}}, 2);
      break;
    case 4: h = block_diagonal(mult_i(), mult_i()); break;
    case 5: h = block_diagonal(IntMatrix::identity(2), mult_zeta3()); break;
    case 6:
      h = block_diagonal(IntMatrix::identity(2), mult_zeta3());
      glue = glue_columns({{1, 0, 1, 1}}, 3);
      break;
    case 7: h = block_diagonal(mult_zeta3(), mult_zeta3()); break;
    case 8: h = companion_phi5(); break;
    default: throw InputError("catalog type must be in 0..8, got " + std::to_string(type));
  }
  RatMatrix basis = glue.cols() == 0 ? to_rational(IntMatrix::identity(4)) : module_with_glue(4, glue);
  IntMatrix H = change_basis(h, basis);
  return {std::move(h), std::move(basis), std::move(H)};
}

std::array<long, 4> torsion_coordinates(const TorusModel& model, const RatMatrix& point, long n) {
  const RatMatrix coords = Rational(n) * (inverse(model.basis) * point);
  if (!is_integral(coords)) throw InputError("point is not n-torsion on this torus");
  std::array<long, 4> b{};
  for (std::size_t i = 0; i < 4; ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), coords(i, 0).get_num_mpz_t(), static_cast<unsigned long>(n));
    b[i] = r.get_si();
  }
  return b;
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& s : variant_defs()) out.push_back({s.type, s.name, s.expected});
    return out;
  }();
  return entries;
}

std::vector<std::string> catalog_variants(int type) {
  std::vector<std::string> out;
  for (const auto& s : variant_defs())
    if (s.type == type) out.emplace_back(s.name);
  return out;
}

TorusAutomorphism catalog(int type, const std::string& variant) {
  const VariantDef& def = find_def(type, variant);
  const TorusModel model = torus_model(type);
  RatMatrix point(4, 1);
  for (std::size_t i = 0; i < 4; ++i) point(i, 0) = make_rational(def.num[i], def.den);
  const IntMatrix H = def.sign > 0 ? model.H : IntMatrix(-model.H);
  return TorusAutomorphism(H, torsion_coordinates(model, point, kIndex), kIndex,
                           "type " + std::to_string(type) + " " + variant);
}

CatalogOutcome evaluate_entry(const CatalogEntry& entry) {
  const TorusAutomorphism aut = catalog(entry.type, entry.variant);
  CatalogOutcome out{entry, LaurentPoly(CyclotomicField::make(1)), 0, 0, 0, false, false, {}};
  out.surface_value = lefschetz_poly_surface(aut.H).evaluate_at_one().to_rational().get_num();
  try {
    const LefschetzResult r = lefschetz_q(aut);
    out.poly = r.poly;
    out.value = r.value;
    out.value_ok = r.value == entry.expected;
    out.corollary = corollary_value(aut);
    out.corollary_ok = out.corollary == Rational(out.surface_value * r.value);
  } catch (const InvariantViolation& e) {
    out.error = e.what();
  }
  return out;
}

std::vector<CatalogOutcome> run_catalog_table() {
  std::vector<CatalogOutcome> out;
  for (const auto& e : catalog_entries()) out.push_back(evaluate_entry(e));
  return out;
}

}  // namespace hksym
