#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "cliffaut/lie.hpp"
#include "cliffaut/verify.hpp"

namespace cliffaut {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kReportVersion = 1;

Json signature_json(const CheckReport& r) {
  Json s;
  s["n"] = r.n;
  if (!r.sig) {
    s["field"] = "any";
  } else if (r.sig->is_complex()) {
    s["field"] = "complex";
  } else {
    s["p"] = r.sig->p();
    s["q"] = r.sig->q();
    s["field"] = "real";
  }
  return s;
}

std::string where(const CheckReport& r) {
  return r.sig ? r.sig->name() : "n=" + std::to_string(r.n);
}

}  // namespace

std::string reports_json(const std::vector<CheckReport>& reports, const SuiteOptions& options, bool include_timing) {
  Json doc;
  doc["version"] = kReportVersion;
  doc["seed"] = options.seed;
  doc["max_n"] = options.max_n;
  Json checks = Json::array();
  for (const auto& r : reports) {
    Json c;
    c["id"] = r.id;
    c["paper_ref"] = r.statement;
    c["signature"] = signature_json(r);
    c["trials"] = r.trials;
    c["result"] = r.passed ? "pass" : "fail";
    if (r.witness) c["witness"] = *r.witness;
    if (r.note) c["note"] = *r.note;
    c["elapsed_ms"] = include_timing ? r.elapsed_ms : 0.0;
    checks.push_back(std::move(c));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string reports_text(const std::vector<CheckReport>& reports, bool include_timing) {
  std::ostringstream out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += !r.passed;
    out << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(34) << r.id << ' ' << std::setw(12) << where(r)
        << ' ' << r.statement;
    if (include_timing) out << " [" << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms]";
    out << '\n';
    if (!r.passed && r.witness) out << "     witness: " << *r.witness << '\n';
  }
  out << reports.size() - failed << " passed, " << failed << " failed\n";
  return out.str();
}

std::vector<Table1Row> table1_rows(int max_n) {
  if (max_n < 1 || max_n > 10) throw std::invalid_argument("table1 covers 1 <= n <= 10");
  std::vector<Table1Row> rows;
  for (const auto& g : lie_groups()) {
    for (int n = 1; n <= max_n; ++n) {
      const SubspaceSpec spec = lie_spec(g, n).spec;
      rows.push_back({g, n, spec, dim_formula(g, n), static_cast<long long>(spec.dimension())});
    }
  }
  return rows;
}

std::string table1_report(int max_n) {
  std::ostringstream out;
  out << std::left << std::setw(8) << "group" << std::setw(4) << "n" << std::setw(10) << "formula" << std::setw(10)
      << "blades" << "grades\n";
  for (const auto& row : table1_rows(max_n)) {
    out << std::setw(8) << row.group.name() << std::setw(4) << row.n << std::setw(10) << row.formula << std::setw(10)
        << row.enumerated << row.spec.to_string() << (row.matches() ? "" : "  MISMATCH") << '\n';
  }
  return out.str();
}

std::string table1_json(int max_n) {
  Json rows = Json::array();
  for (const auto& row : table1_rows(max_n)) {
    Json r;
    r["group"] = row.group.name();
    r["n"] = row.n;
    r["grades"] = row.spec.grade_list();
    r["formula"] = row.formula;
    r["enumerated"] = row.enumerated;
    r["result"] = row.matches() ? "pass" : "fail";
    rows.push_back(std::move(r));
  }
  Json doc;
  doc["version"] = kReportVersion;
  doc["max_n"] = max_n;
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string catalog_text(const Catalog& catalog) {
  auto class_text = [](const CatalogClass& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.groups.size(); ++i) s += (i ? ", " : "") + c.groups[i].name();
    return s + "}";
  };
  std::ostringstream out;
  out << catalog.sig.name() << ": " << catalog.computed.size() << " classes\n";
  for (std::size_t i = 0; i < catalog.computed.size(); ++i) {
    out << "  [" << i << "] " << class_text(catalog.computed[i]) << '\n';
  }
  for (const auto& sep : catalog.separations) {
    out << "  [" << sep.first << "] != [" << sep.second << "]: " << sep.witness.value_or("no witness") << '\n';
  }
  out << "  expected partition: " << (catalog.matches ? "matches" : "differs") << '\n';
  if (!catalog.matches) {
    for (const auto& c : catalog.expected) out << "    " << class_text(c) << '\n';
  }
  return out.str();
}

std::string emit_lattice() {
  return R"dot(digraph inner_automorphism_groups {
  rankdir=BT;
  node [shape=box];
  Gamma [label="Gamma"];
  Q [label="Q = A & B = A & P = B & P"];
  Qp [label="Q'"];
  P [label="P"];
  A [label="A"];
  B [label="B"];
  Cx [label="C^x"];
  Gamma -> Q [label="= for n <= 5"];
  Q -> Qp [label="= unless n = 0 mod 4"];
  Qp -> P [label="= for n = 4, != for n >= 8 (n = 0 mod 4)"];
  Q -> A;
  Q -> B;
  P -> Cx;
  A -> Cx;
  B -> Cx;
}
)dot";
}

}  // namespace cliffaut
