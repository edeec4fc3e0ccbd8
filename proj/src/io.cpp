#include "hksym/io.hpp"

#include "hksym/errors.hpp"

#include <fstream>
#include <regex>
#include <set>
#include <sstream>

namespace hksym::io {

namespace {

const unsigned long kReportPrimes[] = {2, 3, 5, 7, 23};

void require_object(const Json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw InputError(where + ": expected a JSON object");
  for (const auto& [key, value] : j.items())
    if (!allowed.count(key)) throw InputError(where + ": unknown field '" + key + "'");
}

const Json& field(const Json& j, const std::string& key) {
  if (!j.contains(key)) throw InputError("missing field '" + key + "'");
  return j.at(key);
}

long small_integer(const Json& j, const std::string& where) {
  const Integer x = integer_from_json(j, where);
  if (!x.fits_slong_p()) throw InputError(where + ": value out of range");
  return x.get_si();
}

IntMatrix matrix_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array()) throw InputError(where + "[" + std::to_string(r) + "]: expected an array");
    if (r == 0) cols = j[r].size();
    if (j[r].size() != cols || cols == 0) throw InputError(where + ": rows have different lengths");
  }
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m(r, c) = integer_from_json(j[r][c], where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
  return m;
}

IntMatrix gram_from_json(const Json& j) {
  IntMatrix g = matrix_from_json(j, "gram");
  if (!g.square()) throw InputError("gram: matrix is not square");
  if (!g.is_symmetric()) throw InputError("gram: matrix is not symmetric");
  return g;
}

Json matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(integer_json(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Json header(const std::string& kind) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = kind;
  return j;
}

std::string pass(bool b) { return b ? "PASS" : "FAIL"; }

std::string integer_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

std::pair<std::size_t, std::size_t> line_and_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < text.size() && i + 1 < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

}  // namespace

Json integer_json(const Integer& x) {
  if (x.fits_slong_p()) return Json(x.get_si());
  return Json(x.get_str());
}

Integer integer_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Integer(j.get<unsigned long>()) : Integer(j.get<long>());
  if (j.is_string()) {
    static const std::regex digits("-?[0-9]+");
    const auto s = j.get<std::string>();
    if (std::regex_match(s, digits)) return Integer(s);
  }
  throw InputError(where + ": expected an integer, got " + j.dump());
}

std::string job_kind(const Job& job) {
  static const char* names[] = {"lattice", "isometry", "kummer", "classify"};
  return names[job.index()];
}

Job parse_job(const Json& j, const std::string& expected_kind) {
  if (!j.is_object()) throw InputError("job: expected a JSON object");
  if (j.contains("kind")) {
    if (!j["kind"].is_string()) throw InputError("kind: expected a string");
    const auto kind = j["kind"].get<std::string>();
    if (kind != expected_kind) throw InputError("kind: expected '" + expected_kind + "', got '" + kind + "'");
  }
  if (expected_kind == "lattice") {
    require_object(j, "lattice job", {"kind", "name", "gram"});
    LatticeJob job;
    if (j.contains("name")) {
      if (!j["name"].is_string()) throw InputError("name: expected a string");
      job.name = j["name"].get<std::string>();
    }
    job.gram = gram_from_json(field(j, "gram"));
    return job;
  }
  if (expected_kind == "isometry") {
    require_object(j, "isometry job", {"kind", "gram", "matrix", "p"});
    IsometryJob job;
    job.gram = gram_from_json(field(j, "gram"));
    job.matrix = matrix_from_json(field(j, "matrix"), "matrix");
    if (job.matrix.rows() != job.gram.rows() || job.matrix.cols() != job.gram.rows())
      throw InputError("matrix: shape must match gram");
    const long p = small_integer(field(j, "p"), "p");
    if (p < 2) throw InputError("p: expected a prime, got " + std::to_string(p));
    job.p = static_cast<unsigned>(p);
    return job;
  }
  if (expected_kind == "kummer") {
    require_object(j, "kummer job", {"kind", "H", "b", "n"});
    KummerJob job;
    job.H = matrix_from_json(field(j, "H"), "H");
    if (job.H.rows() != 4 || job.H.cols() != 4) throw InputError("H: expected a 4x4 matrix");
    const Json& b = field(j, "b");
    if (!b.is_array() || b.size() != 4) throw InputError("b: expected an array of 4 integers");
    for (std::size_t i = 0; i < 4; ++i) job.b[i] = small_integer(b[i], "b[" + std::to_string(i) + "]");
    job.n = small_integer(field(j, "n"), "n");
    return job;
  }
  if (expected_kind == "classify") {
    require_object(j, "classify job", {"kind", "rows"});
    ClassifyJob job;
    if (j.contains("rows")) {
      const Json& rows = j["rows"];
      if (!rows.is_array()) throw InputError("rows: expected an array");
      for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string where = "rows[" + std::to_string(i) + "]";
        require_object(rows[i], where, {"m", "a", "S", "T"});
        ClassifyJob::Row row;
        row.m = static_cast<int>(small_integer(field(rows[i], "m"), where + ".m"));
        row.a = static_cast<int>(small_integer(field(rows[i], "a"), where + ".a"));
        if (!field(rows[i], "S").is_string() || !field(rows[i], "T").is_string())
          throw InputError(where + ": S and T must be lattice expressions");
        row.S = rows[i]["S"].get<std::string>();
        row.T = rows[i]["T"].get<std::string>();
        job.rows.push_back(std::move(row));
      }
    }
    return job;
  }
  throw InputError("unknown job kind '" + expected_kind + "'");
}

Json to_json(const Job& job) {
  Json j;
  j["kind"] = job_kind(job);
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LatticeJob>) {
          if (x.name) j["name"] = *x.name;
          j["gram"] = matrix_json(x.gram);
        } else if constexpr (std::is_same_v<T, IsometryJob>) {
          j["gram"] = matrix_json(x.gram);
          j["matrix"] = matrix_json(x.matrix);
          j["p"] = x.p;
        } else if constexpr (std::is_same_v<T, KummerJob>) {
          j["H"] = matrix_json(x.H);
          j["b"] = x.b;
          j["n"] = x.n;
        } else {
          j["rows"] = Json::array();
          for (const auto& r : x.rows) j["rows"].push_back({{"m", r.m}, {"a", r.a}, {"S", r.S}, {"T", r.T}});
        }
      },
      job);
  return j;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte);
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Lattice to_lattice(const LatticeJob& job) { return Lattice(job.gram, job.name.value_or("")); }

LatticeIsometry to_isometry(const IsometryJob& job) { return LatticeIsometry(Lattice(job.gram), job.matrix, job.p); }

TorusAutomorphism to_automorphism(const KummerJob& job) { return TorusAutomorphism(job.H, job.b, job.n, "job"); }

std::vector<ClassificationRow> to_rows(const ClassifyJob& job) {
  if (job.rows.empty()) return table_rows();
  std::vector<ClassificationRow> rows;
  for (const auto& r : job.rows) rows.push_back(make_row(r.m, r.a, r.S, r.T));
  return rows;
}

Json lattice_report(const Lattice& l) {
  Json j = header("lattice");
  if (!l.name().empty()) j["name"] = l.name();
  j["rank"] = l.rank();
  const Signature sig = signature(l);
  j["signature"] = {sig.plus, sig.minus};
  j["det"] = integer_json(l.det());
  const DiscriminantGroup dg = discriminant_group(l);
  j["discriminant_group"] = Json::array();
  for (const auto& d : dg.orders) j["discriminant_group"].push_back(integer_json(d));
  const FiniteQuadraticForm q = discriminant_form(l);
  Json gens = Json::array();
  for (std::size_t i = 0; i < q.generators(); ++i)
    gens.push_back({{"order", integer_json(q.orders()[i])}, {"q", q.q_values()[i].get_str()}});
  j["discriminant_form"] = {{"generators", gens}, {"bilinear", Json::array()}};
  for (std::size_t r = 0; r < q.generators(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < q.generators(); ++c) row.push_back(q.bilinear()(r, c).get_str());
    j["discriminant_form"]["bilinear"].push_back(std::move(row));
  }
  Json pe = Json::object();
  for (unsigned long p : kReportPrimes) {
    const PElementary e = is_p_elementary(l, p);
    pe[std::to_string(p)] = {{"p_elementary", e.flag}, {"a", e.a}};
  }
  j["p_elementary"] = pe;
  return j;
}

Json isometry_report(const LatticeIsometry& phi) {
  const IsometryInvariants inv = compute_invariants(phi);
  const unsigned p = phi.order();
  Json j = header("isometry");
  j["p"] = p;
  j["rank"] = phi.lattice().rank();
  j["rank_T"] = inv.T.rank();
  j["rank_S"] = inv.S.rank();
  j["m"] = inv.m;
  j["a"] = inv.a;
  j["discS"] = integer_json(inv.discS);
  j["index"] = integer_json(inv.index);
  bool ok = true;
  if (p != 2) {
    Integer pm;
    mpz_ui_pow_ui(pm.get_mpz_t(), p, inv.m);
    const bool sq = check_square_theorem(inv, p);
    j["square"] = {{"applicable", true}, {"value", integer_json(pm * inv.discS)}, {"passed", sq}};
    ok = ok && sq;
  } else {
    j["square"] = {{"applicable", false}, {"reason", "p = 2"}};
  }
  if (p != 2 && phi.lattice().is_unimodular()) {
    const bool cor = check_unimodular_corollary(inv, p, phi.lattice());
    j["unimodular_corollary"] = {{"applicable", true}, {"passed", cor}};
    ok = ok && cor;
  } else {
    j["unimodular_corollary"] = {{"applicable", false},
                                 {"reason", p == 2 ? "p = 2" : "ambient lattice is not unimodular"}};
  }
  j["passed"] = ok;
  return j;
}

Json classification_report(const ClassificationReport& r) {
  Json j = header("classify");
  j["rows"] = Json::array();
  for (const auto& row : r.rows) {
    Json checks = Json::array();
    for (const auto& c : row.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["rows"].push_back(
        {{"m", row.m}, {"a", row.a}, {"S", row.S}, {"T", row.T}, {"passed", row.passed()}, {"checks", checks}});
  }
  j["candidates"] = Json::array();
  for (const auto& [m, a] : r.candidates) j["candidates"].push_back({m, a});
  j["candidates_match"] = r.candidates_match;
  j["table_pairs_match"] = r.table_pairs_match;
  j["complement_53"] = r.complement_53;
  j["S_form_53"] = r.S_form_53;
  j["probe_44"] = {{"forms_isomorphic", r.probe.forms_isomorphic}, {"signatures_equal", r.probe.signatures_equal}};
  j["passed"] = r.passed();
  return j;
}

Json kummer_report(const TorusAutomorphism& aut) {
  Json j = header("kummer");
  if (!aut.label.empty()) j["label"] = aut.label;
  j["H"] = matrix_json(aut.H);
  j["b"] = aut.b;
  j["n"] = aut.n;
  const LefschetzResult r = lefschetz_q(aut);
  Json poly = Json::object();
  for (const auto& [e, c] : r.poly.terms()) poly[std::to_string(e)] = c.to_rational().get_str();
  j["poly_q"] = poly;
  j["value"] = integer_json(r.value);
  const Integer surface = lefschetz_poly_surface(aut.H).evaluate_at_one().to_rational().get_num();
  const Rational cor = corollary_value(aut);
  j["surface_value"] = integer_json(surface);
  j["corollary_value"] = cor.get_str();
  j["corollary_check"] = cor == Rational(surface * r.value);
  return j;
}

Json catalog_report(const std::vector<CatalogOutcome>& outcomes) {
  Json j = header("kummer_table");
  j["entries"] = Json::array();
  std::size_t passed = 0;
  for (const auto& o : outcomes) {
    Json e = {{"type", o.entry.type},          {"variant", o.entry.variant},
              {"expected", o.entry.expected},  {"value", integer_json(o.value)},
              {"corollary_check", o.corollary_ok}, {"passed", o.passed()}};
    if (!o.error.empty()) e["error"] = o.error;
    j["entries"].push_back(std::move(e));
    if (o.passed()) ++passed;
  }
  j["total"] = outcomes.size();
  j["passed_count"] = passed;
  j["passed"] = passed == outcomes.size();
  return j;
}

std::string render_lattice(const Json& r) {
  std::ostringstream os;
  std::string det = integer_text(r["det"]);
  if (!det.empty() && det[0] == '-') det.erase(0, 1);
  os << "rank " << r["rank"].get<std::size_t>() << ", sig (" << r["signature"][0].get<std::size_t>() << ","
     << r["signature"][1].get<std::size_t>() << "), det " << det << ", D ";
  const Json& dg = r["discriminant_group"];
  if (dg.empty()) {
    os << "trivial";
  } else {
    os << "=";
    for (std::size_t i = 0; i < dg.size(); ++i) os << (i ? " + " : " ") << "Z/" << integer_text(dg[i]);
  }
  os << '\n';
  const Json& gens = r["discriminant_form"]["generators"];
  if (!gens.empty()) {
    os << "q:";
    for (std::size_t i = 0; i < gens.size(); ++i)
      os << (i ? " +" : "") << " Z/" << integer_text(gens[i]["order"]) << "(" << gens[i]["q"].get<std::string>() << ")";
    os << '\n';
  }
  os << "p-elementary:";
  bool any = false;
  for (const auto& [p, v] : r["p_elementary"].items())
    if (v["p_elementary"].get<bool>()) {
      os << " p=" << p << " (a=" << v["a"].get<std::size_t>() << ")";
      any = true;
    }
  if (!any) os << " none of 2, 3, 5, 7, 23";
  os << '\n';
  return os.str();
}

std::string render_isometry(const Json& r) {
  std::ostringstream os;
  os << "m=" << r["m"].get<std::size_t>() << " a=" << r["a"].get<std::size_t>() << " discS=" << integer_text(r["discS"]);
  if (r["square"]["applicable"].get<bool>())
    os << "; p^m*disc = " << integer_text(r["square"]["value"]) << " square: " << pass(r["square"]["passed"].get<bool>());
  else
    os << "; square: n/a (p = 2)";
  if (r["unimodular_corollary"]["applicable"].get<bool>())
    os << "; unimodular corollary: " << pass(r["unimodular_corollary"]["passed"].get<bool>());
  os << '\n';
  return os.str();
}

std::string render_classification(const Json& r) {
  std::ostringstream os;
  std::size_t good = 0;
  for (const auto& row : r["rows"]) {
    const bool ok = row["passed"].get<bool>();
    if (ok) ++good;
    os << "(" << row["m"].get<int>() << "," << row["a"].get<int>() << ") S=" << row["S"].get<std::string>()
       << " T=" << row["T"].get<std::string>() << ": " << pass(ok) << '\n';
    for (const auto& c : row["checks"])
      if (!c["passed"].get<bool>())
        os << "  " << c["name"].get<std::string>() << " failed: " << c["detail"].get<std::string>() << '\n';
  }
  os << "rows: " << good << "/" << r["rows"].size() << " pass\n";
  os << "candidates:";
  for (const auto& c : r["candidates"]) os << " (" << c[0].get<int>() << "," << c[1].get<int>() << ")";
  os << " " << pass(r["candidates_match"].get<bool>()) << '\n';
  os << "table pairs = candidates minus (2,0),(4,0): " << pass(r["table_pairs_match"].get<bool>()) << '\n';
  os << "(5,3) complement U(5)+<-10>: " << pass(r["complement_53"].get<bool>()) << '\n';
  os << "(5,3) discriminant form of S: " << pass(r["S_form_53"].get<bool>()) << '\n';
  const Json& probe = r["probe_44"];
  os << "U(5)+A4(-1) vs U+A4*(-5): forms " << pass(probe["forms_isomorphic"].get<bool>()) << ", signatures "
     << pass(probe["signatures_equal"].get<bool>()) << '\n';
  os << (r["passed"].get<bool>() ? "all checks pass" : "verification FAILED") << '\n';
  return os.str();
}

std::string render_kummer(const Json& r) {
  std::ostringstream os;
  if (r.contains("type")) os << "type " << r["type"].get<int>() << " " << r["variant"].get<std::string>() << ": ";
  std::string poly;
  for (const auto& [e, c] : r["poly_q"].items()) {
    std::string coeff = c.get<std::string>();
    const bool neg = coeff[0] == '-';
    if (neg) coeff.erase(0, 1);
    if (!poly.empty()) poly += neg ? " - " : " + ";
    else if (neg) poly += "-";
    const std::string mono = e == "0" ? "" : (e == "1" ? "q" : "q^" + e);
    poly += (coeff == "1" && !mono.empty()) ? mono : coeff + mono;
  }
  os << "L(q) = " << (poly.empty() ? "0" : poly) << '\n';
  os << "value " << integer_text(r["value"]);
  if (r.contains("expected")) os << " (expected " << r["expected"].get<long>() << ")";
  os << "; corollary check: " << pass(r["corollary_check"].get<bool>()) << '\n';
  return os.str();
}

std::string render_catalog(const Json& r) {
  std::ostringstream os;
  for (const auto& e : r["entries"]) {
    os << "type " << e["type"].get<int>() << " " << e["variant"].get<std::string>() << ": " << integer_text(e["value"])
       << " (expected " << e["expected"].get<long>() << ", corollary "
       << (e["corollary_check"].get<bool>() ? "ok" : "mismatch") << ") " << pass(e["passed"].get<bool>());
    if (e.contains("error")) os << " [" << e["error"].get<std::string>() << "]";
    os << '\n';
  }
  os << r["passed_count"].get<std::size_t>() << "/" << r["total"].get<std::size_t>() << " entries pass\n";
  return os.str();
}

}  // namespace hksym::io
