#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cliffaut/groups.hpp"
#include "cliffaut/registry.hpp"

namespace cliffaut {

enum class CorpusTag {
  Generic,
  Even,
  Odd,
  Versor,
  CenterMultiple,
  RegistryWitness,
  WitnessProduct,
  SingularProbe,
};

std::string tag_name(CorpusTag tag);

struct CorpusElement {
  Multivector value;
  CorpusTag tag;
  /// Versor length, for Versor elements.
  int length = 0;
  /// Registry entry id, for witnesses and their products.
  std::string origin;
  /// Membership cache; null for singular probes.
  std::shared_ptr<MembershipOracle> oracle;
};

/// Test elements for one signature: random elements of several shapes, every
/// admissible registry witness, witnesses multiplied by Clifford group
/// elements, and zero-divisor probes. The corpus and its membership caches
/// belong to a single task.
struct Corpus {
  Signature sig;
  std::uint64_t seed = 0;
  std::vector<CorpusElement> elements;

  std::size_t count(CorpusTag tag) const;
};

/// Deterministic for a fixed seed. Registry witnesses, witness products and
/// probes are added first; the remaining slots up to `size` cycle through
/// the random shapes. Requires size >= 20.
Corpus build_corpus(const Signature& sig, std::uint64_t seed, std::size_t size,
                    const std::vector<CounterexampleEntry>& registry = default_registry());

/// Intersection of groups.
using GroupSet = std::vector<GroupId>;

std::string set_name(const GroupSet& set);

struct CheckReport {
  std::string id;
  std::string statement;
  /// Absent for checks that depend only on n.
  std::optional<Signature> sig;
  int n = 0;
  long trials = 0;
  bool passed = true;
  std::optional<std::string> witness;
  std::optional<std::string> note;
  double elapsed_ms = 0.0;
};

enum class Relation { Equal, Subset, ProperSubset, Distinct };

/// Equal: membership agrees on every invertible corpus element. Subset:
/// every element of lhs lies in rhs. ProperSubset: Subset plus a registry
/// witness in rhs outside lhs. Distinct: a registry witness separates the
/// sides. Throws MissingWitness when a separating relation has no
/// admissible registry witness in the corpus.
CheckReport check_relation(Relation kind, const GroupSet& lhs, const GroupSet& rhs, Corpus& corpus);

/// One replay per admissible signature: every group claim and value claim
/// of the entry must hold exactly.
CheckReport replay(const CounterexampleEntry& entry, const Signature& sig);

struct SuiteOptions {
  int max_n = 6;
  std::uint64_t seed = 7;
  bool real = true;
  bool complex = true;
  std::size_t corpus_size = 41;
  int jobs = 1;
  /// Residual bound for the floating exp checks.
  double tol = 1e-9;
  /// Largest n for registry replays; witnesses exist up to n = 8.
  int replay_max_n = 8;
};

/// Every registry check for every selected signature with n <= min(max_n, 6),
/// followed by the dimension, closure and catalog checks. The order is
/// fixed, so equal options give equal reports regardless of jobs.
std::vector<CheckReport> run_suite(const SuiteOptions& options);

/// Checks for one signature, in suite order.
std::vector<CheckReport> signature_checks(const Signature& sig, const SuiteOptions& options);

bool all_passed(const std::vector<CheckReport>& reports);

/// JSON document for a list of reports. elapsed_ms is written as 0 unless
/// include_timing is set, so that reports are reproducible byte for byte.
std::string reports_json(const std::vector<CheckReport>& reports, const SuiteOptions& options,
                         bool include_timing);

std::string reports_text(const std::vector<CheckReport>& reports, bool include_timing);

struct Table1Row {
  GroupId group;
  int n = 0;
  SubspaceSpec spec;
  long long formula = 0;
  long long enumerated = 0;

  bool matches() const { return formula == enumerated; }
};

/// Rows for every group with a Lie algebra and n in [1, max_n]; max_n <= 10.
std::vector<Table1Row> table1_rows(int max_n);
std::string table1_report(int max_n);
std::string table1_json(int max_n);

struct CatalogClass {
  std::vector<GroupId> groups;
};

struct CatalogSeparation {
  std::size_t first = 0;
  std::size_t second = 0;
  std::optional<std::string> witness;
};

struct Catalog {
  Signature sig;
  std::vector<CatalogClass> computed;
  std::vector<CatalogClass> expected;
  std::vector<CatalogSeparation> separations;
  bool matches = false;
  bool separated = false;

  bool passed() const { return matches && separated; }
};

/// Expected coincidence classes for 1 <= n <= 5.
std::vector<CatalogClass> expected_catalog(int n);

/// Partitions catalog_groups(n) by membership over the corpus and requires
/// a registry witness for every pair of computed classes.
Catalog small_n_catalog(const Signature& sig, std::uint64_t seed, std::size_t corpus_size = 41);
std::string catalog_text(const Catalog& catalog);

/// Inclusion lattice of the main groups in DOT format.
std::string emit_lattice();

}  // namespace cliffaut
