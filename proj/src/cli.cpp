#include "cliffaut/cli.hpp"

#include <CLI11.hpp>

#include "cliffaut/expression.hpp"
#include "cliffaut/verify.hpp"

namespace cliffaut {

namespace {

struct SignatureFlags {
  std::optional<int> p;
  std::optional<int> q;
  bool complex = false;
  std::optional<int> n;

  void add_to(CLI::App& app) {
    app.add_option("--p", p, "number of generators squaring to +1");
    app.add_option("--q", q, "number of generators squaring to -1");
    app.add_flag("--complex", complex, "complex Clifford algebra of dimension --n");
    app.add_option("--n", n, "number of generators for --complex");
  }

  bool given() const { return p || q || complex || n; }

  Signature resolve() const {
    if (complex) {
      if (p || q) throw CLI::ValidationError("--complex", "cannot be combined with --p/--q");
      if (!n) throw CLI::RequiredError("--n");
      return Signature::complex(*n);
    }
    if (n) throw CLI::ValidationError("--n", "only applies with --complex");
    if (!p && !q) throw CLI::RequiredError("--p/--q or --complex --n");
    return Signature::real(p.value_or(0), q.value_or(0));
  }
};

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string diagnostic(MembershipOracle& oracle, const GroupId& g, int n) {
  if (g.is_conjugation_defined()) {
    const SubspaceSpec spec = preserved_subspace(g, n);
    const Preservation kept = oracle.preserves(spec);
    if (kept.witness) {
      return "T " + blade_text(kept.witness->blade, n) + " T^-1 = " + to_string(kept.witness->image) +
             " leaves " + spec.to_string();
    }
    return spec.empty() ? "preserves the zero subspace " + spec.to_string() : "preserves " + spec.to_string();
  }
  const Multivector& t = oracle.element();
  switch (g.kind()) {
    case GroupId::Kind::Full:
      return "T is invertible";
    case GroupId::Kind::P:
      return "hat(T) T^-1 = " + to_string(grade_involution(t) * oracle.inverse());
    case GroupId::Kind::A:
    case GroupId::Kind::APrime:
      return "psi(T) = " + to_string(oracle.psi());
    case GroupId::Kind::B:
    case GroupId::Kind::BPrime:
      return "chi(T) = " + to_string(oracle.chi());
    case GroupId::Kind::Q:
    case GroupId::Kind::QPrime:
      return "psi(T) = " + to_string(oracle.psi()) + ", hat(T) T^-1 = " +
             to_string(grade_involution(t) * oracle.inverse());
    default:
      return std::string(oracle.is_homogeneous() ? "homogeneous" : "not homogeneous") +
             ", psi(T) = " + to_string(oracle.psi());
  }
}

std::vector<Signature> signatures_up_to(int max_n, bool real, bool complex) {
  std::vector<Signature> out;
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& s : signatures_of_dimension(n)) {
      if (s.is_complex() ? complex : real) out.push_back(s);
    }
  }
  return out;
}

}  // namespace

int run_command(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Inner automorphisms of Clifford algebras: exact arithmetic and theorem checks", "cliffaut"};
  app.require_subcommand(1);

  SignatureFlags sig_flags;
  std::uint64_t seed = 7;
  int max_n = 6;
  std::string group_text;
  bool json = false;
  double tol = 1e-9;
  bool timing = false;
  int jobs = 1;
  std::string field = "both";
  std::string expression;

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a multivector expression");
  sig_flags.add_to(*eval_cmd);
  eval_cmd->add_option("expression", expression, "expression such as \"inv(1 + e1234)\"")->required();

  auto* member_cmd = app.add_subcommand("member", "decide membership of an element in a group");
  sig_flags.add_to(*member_cmd);
  member_cmd->add_option("--group", group_text, "group name such as A, Q', Gamma:3, GammaBar:2")->required();
  member_cmd->add_option("expression", expression, "element")->required();

  auto* verify_cmd = app.add_subcommand("verify", "run every theorem check");
  auto* table_cmd = app.add_subcommand("table1", "Lie algebra dimensions: formula against blade count");
  auto* catalog_cmd = app.add_subcommand("catalog", "coincidence classes of the groups for n <= 5");
  sig_flags.add_to(*catalog_cmd);
  auto* replay_cmd = app.add_subcommand("counterexamples", "replay the registered witnesses");
  app.add_subcommand("lattice", "inclusion lattice in DOT format");

  for (auto* cmd : {verify_cmd, table_cmd, catalog_cmd, replay_cmd}) {
    cmd->add_option("--max-n", max_n, "largest number of generators")->check(CLI::Range(1, 10));
    cmd->add_flag("--json", json, "machine-readable output");
  }
  for (auto* cmd : {verify_cmd, catalog_cmd}) cmd->add_option("--seed", seed, "base seed");
  for (auto* cmd : {verify_cmd, replay_cmd}) {
    cmd->add_option("--field", field, "signatures to include")->check(CLI::IsMember({"real", "complex", "both"}));
  }
  verify_cmd->add_option("--tol", tol, "residual bound for floating checks");
  verify_cmd->add_flag("--timing", timing, "report elapsed times");
  verify_cmd->add_option("--jobs", jobs, "signatures checked in parallel")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const bool real = field != "complex";
  const bool complex = field != "real";
  try {
    if (eval_cmd->parsed()) {
      const Signature sig = sig_flags.resolve();
      out << to_string(evaluate(expression, sig)) << '\n';
      return 0;
    }
    if (member_cmd->parsed()) {
      const Signature sig = sig_flags.resolve();
      const GroupId g = GroupId::parse(group_text);
      g.validate(sig.n());
      MembershipOracle oracle(evaluate(expression, sig));
      out << yes_no(oracle.member(g)) << '\n' << diagnostic(oracle, g, sig.n()) << '\n';
      return 0;
    }
    if (verify_cmd->parsed()) {
      SuiteOptions options;
      options.max_n = max_n;
      options.seed = seed;
      options.real = real;
      options.complex = complex;
      options.jobs = jobs;
      options.tol = tol;
      const auto reports = run_suite(options);
      out << (json ? reports_json(reports, options, timing) : reports_text(reports, timing));
      return all_passed(reports) ? 0 : 1;
    }
    if (table_cmd->parsed()) {
      out << (json ? table1_json(max_n) : table1_report(max_n));
      bool ok = true;
      for (const auto& row : table1_rows(max_n)) ok = ok && row.matches();
      return ok ? 0 : 1;
    }
    if (catalog_cmd->parsed()) {
      std::vector<Signature> sigs;
      if (sig_flags.given()) {
        sigs.push_back(sig_flags.resolve());
      } else {
        sigs = signatures_up_to(std::min(max_n, 5), true, true);
      }
      bool ok = true;
      std::vector<CheckReport> reports;
      for (const auto& sig : sigs) {
        const Catalog c = small_n_catalog(sig, seed);
        ok = ok && c.passed();
        if (json) {
          CheckReport r;
          r.id = "catalog";
          r.statement = "coincidence classes of all groups";
          r.sig = sig;
          r.n = sig.n();
          r.trials = static_cast<long>(c.computed.size());
          r.passed = c.passed();
          r.note = catalog_text(c);
          reports.push_back(std::move(r));
        } else {
          out << catalog_text(c);
        }
      }
      if (json) {
        SuiteOptions options;
        options.max_n = max_n;
        options.seed = seed;
        out << reports_json(reports, options, false);
      }
      return ok ? 0 : 1;
    }
    if (replay_cmd->parsed()) {
      std::vector<CheckReport> reports;
      for (const auto& sig : signatures_up_to(max_n, real, complex)) {
        for (const auto& entry : default_registry()) {
          if (entry.admissible(sig)) reports.push_back(replay(entry, sig));
        }
      }
      if (json) {
        SuiteOptions options;
        options.max_n = max_n;
        out << reports_json(reports, options, false);
      } else {
        for (const auto& r : reports) {
          out << (r.passed ? "PASS " : "FAIL ") << r.id << " in " << r.sig->name() << '\n';
          out << "     " << r.statement << '\n';
          if (r.note) out << "     " << *r.note << '\n';
          if (!r.passed && r.witness) out << "     witness: " << *r.witness << '\n';
        }
      }
      return all_passed(reports) ? 0 : 1;
    }
    out << emit_lattice();
    return 0;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const IndexOutOfRange& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const NotInvertible& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace cliffaut
