#include <algorithm>
#include <chrono>

#include "cliffaut/expression.hpp"
#include "cliffaut/verify.hpp"

namespace cliffaut {

std::string set_name(const GroupSet& set) {
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) out += (i ? " & " : "") + set[i].name();
  return out;
}

namespace {

bool in_set(MembershipOracle& oracle, const GroupSet& set) {
  for (const auto& g : set) {
    if (!oracle.member(g)) return false;
  }
  return true;
}

const char* relation_symbol(Relation kind) {
  switch (kind) {
    case Relation::Equal:
      return " = ";
    case Relation::Subset:
      return " <= ";
    case Relation::ProperSubset:
      return " < ";
    case Relation::Distinct:
      return " != ";
  }
  return " ? ";
}

std::string membership_text(const Multivector& x, const GroupSet& lhs, bool a, const GroupSet& rhs, bool b) {
  return to_string(x) + " (" + set_name(lhs) + ": " + (a ? "yes" : "no") + ", " + set_name(rhs) + ": " +
         (b ? "yes" : "no") + ")";
}

}  // namespace

CheckReport check_relation(Relation kind, const GroupSet& lhs, const GroupSet& rhs, Corpus& corpus) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.statement = set_name(lhs) + relation_symbol(kind) + set_name(rhs);
  report.sig = corpus.sig;
  report.n = corpus.sig.n();

  const CorpusElement* separator = nullptr;
  for (const auto& element : corpus.elements) {
    if (!element.oracle) continue;
    ++report.trials;
    const bool a = in_set(*element.oracle, lhs);
    const bool b = in_set(*element.oracle, rhs);
    const bool registry = element.tag == CorpusTag::RegistryWitness;
    switch (kind) {
      case Relation::Equal:
        if (a != b && report.passed) {
          report.passed = false;
          report.witness = membership_text(element.value, lhs, a, rhs, b);
        }
        break;
      case Relation::Subset:
      case Relation::ProperSubset:
        if (a && !b && report.passed) {
          report.passed = false;
          report.witness = membership_text(element.value, lhs, a, rhs, b);
        }
        if (kind == Relation::ProperSubset && registry && b && !a && !separator) separator = &element;
        break;
      case Relation::Distinct:
        if (registry && a != b && !separator) separator = &element;
        break;
    }
  }
  if (kind == Relation::ProperSubset || kind == Relation::Distinct) {
    if (!separator) {
      throw MissingWitness("no registry witness separates " + set_name(lhs) + " and " + set_name(rhs) + " in " +
                           corpus.sig.name());
    }
    if (report.passed) {
      report.witness = membership_text(separator->value, lhs, in_set(*separator->oracle, lhs), rhs,
                                       in_set(*separator->oracle, rhs));
      report.note = "separated by " + separator->origin;
    }
  }
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CheckReport replay(const CounterexampleEntry& entry, const Signature& sig) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  report.id = "replay/" + entry.id;
  report.statement = entry.statement;
  report.sig = sig;
  report.n = sig.n();
  std::vector<std::string> lines;
  auto fail = [&](const std::string& why) {
    if (report.passed) report.witness = entry.element + ": " + why;
    report.passed = false;
  };

  const Multivector t = evaluate(entry.element, sig);
  const Environment env{{"T", t}};
  std::optional<MembershipOracle> oracle;
  try {
    oracle.emplace(t);
  } catch (const NotInvertible&) {
    fail("not invertible");
  }
  if (oracle) {
    for (const auto& claim : entry.claims) {
      ++report.trials;
      const bool got = oracle->member(claim.group);
      lines.push_back(claim.group.name() + ": " + (got ? "yes" : "no"));
      if (got != claim.expected) {
        fail("membership in " + claim.group.name() + " is " + (got ? "true" : "false"));
      }
    }
  }
  for (const auto& value : entry.values) {
    if (!value.only_in.empty() &&
        std::find(value.only_in.begin(), value.only_in.end(), sig.with_backend(Backend::Exact)) ==
            value.only_in.end()) {
      continue;
    }
    ++report.trials;
    Multivector got(sig);
    try {
      got = evaluate(value.expression, sig, env);
    } catch (const SingularError& e) {
      fail(value.expression + " failed: " + e.what());
      continue;
    }
    const std::string text = to_string(got);
    lines.push_back(value.expression + " = " + text);
    switch (value.kind) {
      case ValueClaim::Kind::Equals:
        if (text != value.expected) fail(value.expression + " = " + text + ", expected " + value.expected);
        break;
      case ValueClaim::Kind::NonZero:
        if (got.is_zero()) fail(value.expression + " vanishes");
        break;
      case ValueClaim::Kind::NonZeroScalar:
        if (got.is_zero() || !got.is_scalar()) fail(value.expression + " = " + text + " is not a nonzero scalar");
        break;
    }
  }
  std::string note = "T = " + entry.element;
  for (const auto& line : lines) note += "; " + line;
  report.note = note;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool all_passed(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.passed; });
}

}  // namespace cliffaut
