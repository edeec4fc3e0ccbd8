#pragma once

#include "hksym/class5.hpp"
#include "hksym/isometry.hpp"
#include "hksym/kummer_catalog.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>

namespace hksym::io {

using Json = nlohmann::ordered_json;

/// Version tag carried by every report.
inline constexpr const char* kSchema = "hksym-report/1";

struct LatticeJob {
  std::optional<std::string> name;
  IntMatrix gram;
  friend bool operator==(const LatticeJob&, const LatticeJob&) = default;
};

struct IsometryJob {
  IntMatrix gram;
  IntMatrix matrix;
  unsigned p = 0;
  friend bool operator==(const IsometryJob&, const IsometryJob&) = default;
};

struct KummerJob {
  IntMatrix H;
  std::array<long, 4> b{};
  long n = 3;
  friend bool operator==(const KummerJob&, const KummerJob&) = default;
};

/// Rows to verify instead of the built-in table; empty means the built-in one.
struct ClassifyJob {
  struct Row {
    int m = 0;
    int a = 0;
    std::string S;
    std::string T;
    friend bool operator==(const Row&, const Row&) = default;
  };
  std::vector<Row> rows;
  friend bool operator==(const ClassifyJob&, const ClassifyJob&) = default;
};

using Job = std::variant<LatticeJob, IsometryJob, KummerJob, ClassifyJob>;

/// "lattice", "isometry", "kummer" or "classify".
std::string job_kind(const Job& job);

/// Validates and decodes a job object. The optional "kind" field must agree
/// with `expected_kind`; when absent the expected kind is assumed. Integers may
/// be JSON numbers or decimal strings. Throws InputError naming the offending
/// field.
Job parse_job(const Json& j, const std::string& expected_kind);
Json to_json(const Job& job);

/// Reads and parses a JSON file; syntax errors report line and column.
Json read_json_file(const std::string& path);
Json parse_json_text(const std::string& text);

// Decoded views, each with the module's own validation applied.
Lattice to_lattice(const LatticeJob& job);
LatticeIsometry to_isometry(const IsometryJob& job);
TorusAutomorphism to_automorphism(const KummerJob& job);
std::vector<ClassificationRow> to_rows(const ClassifyJob& job);

/// Integer as a JSON number when it fits in 64 bits, otherwise as a string.
Json integer_json(const Integer& x);
Integer integer_from_json(const Json& j, const std::string& where);

// Reports. Each carries "schema" and "kind".
Json lattice_report(const Lattice& l);
Json isometry_report(const LatticeIsometry& phi);
Json classification_report(const ClassificationReport& r);
Json kummer_report(const TorusAutomorphism& aut);
Json catalog_report(const std::vector<CatalogOutcome>& outcomes);

/// One-line and multi-line human renderings of the reports above.
std::string render_lattice(const Json& report);
std::string render_isometry(const Json& report);
std::string render_classification(const Json& report);
std::string render_kummer(const Json& report);
std::string render_catalog(const Json& report);

}  // namespace hksym::io
