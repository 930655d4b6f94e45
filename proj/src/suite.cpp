#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <future>
#include <map>

#include "cliffaut/lie.hpp"
#include "cliffaut/verify.hpp"

namespace cliffaut {

namespace {

using G = GroupId;
using Clock = std::chrono::steady_clock;

double since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

constexpr int kGammaSamples = 100;
constexpr int kRangeSamples = 500;
constexpr int kExpTrials = 20;
constexpr int kPinSamples = 50;

// Collects reports for one signature in a fixed order.
class Recorder {
 public:
  Recorder(Corpus& corpus, std::vector<CheckReport>& out) : corpus_(corpus), out_(out) {}

  void relation(const std::string& id, Relation kind, const GroupSet& lhs, const GroupSet& rhs,
                std::optional<std::string> note = std::nullopt) {
    CheckReport r;
    try {
      r = check_relation(kind, lhs, rhs, corpus_);
    } catch (const MissingWitness& e) {
      r.statement = set_name(lhs) + " vs " + set_name(rhs);
      r.sig = corpus_.sig;
      r.n = corpus_.sig.n();
      r.passed = false;
      r.witness = e.what();
    }
    r.id = id;
    if (note) r.note = r.note ? *r.note + "; " + *note : *note;
    out_.push_back(std::move(r));
  }

  void custom(const std::string& id, const std::string& statement, const std::function<void(CheckReport&)>& body) {
    const auto start = Clock::now();
    CheckReport r;
    r.id = id;
    r.statement = statement;
    r.sig = corpus_.sig;
    r.n = corpus_.sig.n();
    body(r);
    r.elapsed_ms = since(start);
    out_.push_back(std::move(r));
  }

 private:
  Corpus& corpus_;
  std::vector<CheckReport>& out_;
};

void fail(CheckReport& r, std::string witness) {
  if (r.passed) r.witness = std::move(witness);
  r.passed = false;
}

std::string k_id(const std::string& base, int k) { return base + "/" + std::to_string(k); }

std::vector<std::vector<bool>> membership_vectors(Corpus& corpus, const std::vector<GroupId>& groups) {
  std::vector<std::vector<bool>> out;
  for (const auto& g : groups) {
    std::vector<bool> v;
    for (auto& e : corpus.elements) {
      if (e.oracle) v.push_back(e.oracle->member(g));
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool same_partition(const std::vector<CatalogClass>& a, const std::vector<CatalogClass>& b) {
  auto normalize = [](const std::vector<CatalogClass>& classes) {
    std::vector<std::vector<GroupId>> out;
    for (auto c : classes) {
      std::sort(c.groups.begin(), c.groups.end());
      out.push_back(std::move(c.groups));
    }
    std::sort(out.begin(), out.end());
    return out;
  };
  return normalize(a) == normalize(b);
}

Catalog catalog_of(Corpus& corpus) {
  Catalog out{corpus.sig, {}, expected_catalog(corpus.sig.n()), {}, false, true};
  const auto groups = catalog_groups(corpus.sig.n());
  const auto vectors = membership_vectors(corpus, groups);
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    std::size_t c = 0;
    while (c < representative.size() && vectors[representative[c]] != vectors[i]) ++c;
    if (c == representative.size()) {
      representative.push_back(i);
      out.computed.push_back({});
    }
    out.computed[c].groups.push_back(groups[i]);
  }
  for (std::size_t a = 0; a < out.computed.size(); ++a) {
    for (std::size_t b = a + 1; b < out.computed.size(); ++b) {
      CatalogSeparation sep{a, b, std::nullopt};
      for (auto& e : corpus.elements) {
        if (e.tag != CorpusTag::RegistryWitness || !e.oracle) continue;
        const bool in_a = e.oracle->member(groups[representative[a]]);
        const bool in_b = e.oracle->member(groups[representative[b]]);
        if (in_a != in_b) {
          sep.witness = to_string(e.value) + " (" + e.origin + ")";
          break;
        }
      }
      if (!sep.witness) out.separated = false;
      out.separations.push_back(std::move(sep));
    }
  }
  out.matches = same_partition(out.computed, out.expected);
  return out;
}

bool vacuous(const GroupId& g, int n) {
  return g.is_conjugation_defined() && preserved_subspace(g, n).empty();
}

void group_checks(Corpus& corpus, const SuiteOptions& options, std::vector<CheckReport>& out) {
  const Signature& sig = corpus.sig;
  const int n = sig.n();
  Recorder rec(corpus, out);
  const std::uint64_t base = derive_seed(options.seed, sig.name());
  const GroupSet gamma{G::gamma()}, full{G::full()}, p{G::p()}, a{G::a()}, b{G::b()}, q{G::q()},
      qp{G::q_prime()};

  for (int k = 0; k <= n; ++k) rec.relation(k_id("gamma-subset-gamma-k", k), Relation::Subset, gamma, {G::gamma_grade(k)});

  rec.custom("gamma-samples-preserve-grades", "sampled Gamma elements preserve every grade", [&](CheckReport& r) {
    Rng rng(derive_seed(base, "gamma-samples"));
    for (int i = 0; i < kGammaSamples; ++i) {
      MembershipOracle oracle(sample(G::gamma(), sig, rng));
      ++r.trials;
      for (int k = 0; k <= n; ++k) {
        const auto kept = oracle.preserves(SubspaceSpec::grade(n, k));
        if (!kept) {
          fail(r, to_string(oracle.element()) + " maps " + blade_text(kept.witness->blade, n) + " to " +
                      to_string(kept.witness->image));
        }
      }
    }
  });

  rec.relation("gamma-0-full", Relation::Equal, {G::gamma_grade(0)}, full);
  rec.relation("gamma-n", Relation::Equal, {G::gamma_grade(n)}, n % 2 == 1 ? full : p);
  rec.relation("p-gamma-parity-0", Relation::Equal, p, {G::gamma_parity(0)});
  rec.relation("p-gamma-parity-1", Relation::Equal, p, {G::gamma_parity(1)});

  rec.custom("p-deciders-agree", "P by hat(T) T^-1 in Z agrees with the parity-split decider", [&](CheckReport& r) {
    for (auto& e : corpus.elements) {
      if (!e.oracle) continue;
      ++r.trials;
      const bool first = e.oracle->member(G::p());
      const bool second = member_p_by_parity_split(e.value);
      if (first != second) fail(r, to_string(e.value));
    }
  });

  rec.relation("a-gamma-bar01", Relation::Equal, a, {G::gamma_bar_pair(0, 1)});
  rec.relation("a-gamma-bar23", Relation::Equal, a, {G::gamma_bar_pair(2, 3)});
  rec.relation("b-gamma-bar03", Relation::Equal, b, {G::gamma_bar_pair(0, 3)});
  rec.relation("b-gamma-bar12", Relation::Equal, b, {G::gamma_bar_pair(1, 2)});

  auto range_check = [&](const std::string& id, const std::string& statement, auto norm, int m1, int m2) {
    rec.custom(id, statement, [&](CheckReport& r) {
      Rng rng(derive_seed(base, id));
      const SubspaceSpec target = SubspaceSpec::bar(n, m1) | SubspaceSpec::bar(n, m2);
      for (int i = 0; i < kRangeSamples; ++i) {
        const Multivector t = sample(family::Generic{}, sig, rng);
        ++r.trials;
        if (!in_subspace(norm(t), target)) fail(r, to_string(t));
      }
    });
  };
  range_check("psi-range", "psi(T) lies in C^bar0 + C^bar1", [](const Multivector& t) { return psi(t); }, 0, 1);
  range_check("chi-range", "chi(T) lies in C^bar0 + C^bar3", [](const Multivector& t) { return chi(t); }, 0, 3);

  rec.relation("q-a-cap-p", Relation::Equal, q, {G::a(), G::p()});
  rec.relation("q-b-cap-p", Relation::Equal, q, {G::b(), G::p()});
  rec.relation("q-a-cap-b", Relation::Equal, q, {G::a(), G::b()});
  rec.relation("q-subset-p", Relation::Subset, q, p);
  rec.relation("q-subset-a", Relation::Subset, q, a);
  rec.relation("q-subset-b", Relation::Subset, q, b);
  rec.relation("gamma-subset-q", Relation::Subset, gamma, q);

  rec.relation("qprime-aprime-cap-bprime", Relation::Equal, qp, {G::a_prime(), G::b_prime()});
  rec.relation("q-subset-qprime", Relation::Subset, q, qp);
  rec.relation("qprime-subset-p", Relation::Subset, qp, p);
  if (n % 4 != 0) {
    rec.relation("qprime-equals-q", Relation::Equal, qp, q);
  } else {
    rec.relation("q-proper-qprime", Relation::ProperSubset, q, qp);
  }
  if (n == 4) rec.relation("qprime-equals-p", Relation::Equal, qp, p);

  // Quaternion-type classes.
  auto bar = [](int m) { return GroupSet{G::gamma_bar(m)}; };
  auto vacuity = [&](int m) -> std::optional<std::string> {
    if (vacuous(G::gamma_bar(m), n)) return "C^bar" + std::to_string(m) + " is zero; preserved vacuously";
    return std::nullopt;
  };
  if (n == 1) {
    for (int m = 0; m < 4; ++m) rec.relation(k_id("gamma-bar-full", m), Relation::Equal, bar(m), full, vacuity(m));
  } else if (n <= 3) {
    rec.relation("gamma-bar0-full", Relation::Equal, bar(0), full);
    rec.relation("gamma-bar3-full", Relation::Equal, bar(3), full, vacuity(3));
    rec.relation("gamma-bar0-distinct-bar1", Relation::Distinct, bar(0), bar(1));
    rec.relation("gamma-bar1-q", Relation::Equal, bar(1), q);
    rec.relation("gamma-bar2-q", Relation::Equal, bar(2), q);
    rec.relation("q-equals-p", Relation::Equal, q, p);
  } else {
    rec.relation("gamma-bar1-q", Relation::Equal, bar(1), q);
    rec.relation("gamma-bar3-q", Relation::Equal, bar(3), q);
    const GroupSet even_target = n % 4 == 0 ? qp : q;
    rec.relation("gamma-bar0-" + std::string(n % 4 == 0 ? "qprime" : "q"), Relation::Equal, bar(0), even_target);
    rec.relation("gamma-bar2-" + std::string(n % 4 == 0 ? "qprime" : "q"), Relation::Equal, bar(2), even_target);
  }
  rec.relation("gamma-bar-intersection", Relation::Equal, bar(1),
               {G::gamma_bar(0), G::gamma_bar(1), G::gamma_bar(2), G::gamma_bar(3)});

  for (int k = 1; k <= n - 1; ++k) {
    const bool to_prime = n % 4 == 0 && k % 2 == 0;
    rec.relation(k_id(to_prime ? "gamma-k-subset-qprime" : "gamma-k-subset-q", k), Relation::Subset,
                 {G::gamma_grade(k)}, to_prime ? qp : q);
  }
  for (int k = 1; k < n - k; ++k) {
    rec.relation(k_id("gamma-k-complement", k), Relation::Equal, {G::gamma_grade(k)}, {G::gamma_grade(n - k)});
  }

  if (n <= 5) {
    rec.relation("gamma-equals-q", Relation::Equal, gamma, q);
  } else if (n == 6) {
    rec.relation("gamma-proper-q", Relation::ProperSubset, gamma, q);
    rec.relation("gamma-3-equals-q", Relation::Equal, {G::gamma_grade(3)}, q);
    rec.relation("gamma-1-distinct-gamma-3", Relation::Distinct, gamma, {G::gamma_grade(3)});
  }
  if (n >= 3 && n <= 5) {
    for (int k = 2; k <= n - 1; ++k) {
      const bool to_prime = n % 4 == 0 && k % 2 == 0;
      rec.relation(k_id(to_prime ? "gamma-k-equals-qprime" : "gamma-k-equals-q", k), Relation::Equal,
                   {G::gamma_grade(k)}, to_prime ? qp : q);
    }
  }
  if (n <= 3) {
    rec.relation("a-equals-q", Relation::Equal, a, q);
    rec.relation("p-equals-q", Relation::Equal, p, q);
    rec.relation("b-full", Relation::Equal, b, full);
  }
  if (n == 4) {
    rec.relation("q-proper-a", Relation::ProperSubset, q, a);
    rec.relation("q-proper-p", Relation::ProperSubset, q, p);
    rec.relation("a-distinct-p", Relation::Distinct, a, p);
  }

  rec.relation("lipschitz-subset-gamma", Relation::Subset, {G::lipschitz()}, gamma);

  rec.custom("center-kernel-of-ad", "T fixes every blade under conjugation iff T is central", [&](CheckReport& r) {
    const SubspaceSpec center = SubspaceSpec::center(n);
    for (auto& e : corpus.elements) {
      if (!e.oracle) continue;
      ++r.trials;
      if (e.oracle->fixes_every_blade() != in_subspace(e.value, center)) fail(r, to_string(e.value));
    }
  });

  auto centralizer = [&](const std::string& id, const std::string& statement, const SubspaceSpec& spec,
                         std::vector<Blade> expected) {
    rec.custom(id, statement, [&](CheckReport& r) {
      r.trials = 1;
      std::vector<Multivector> want;
      for (Blade x : expected) want.push_back(Multivector::blade(sig, x));
      const auto got = centralizer_basis(spec, sig);
      if (got != want) {
        std::string text;
        for (const auto& x : got) text += (text.empty() ? "" : ", ") + to_string(x);
        fail(r, "{" + text + "}");
      }
    });
  };
  const Blade top = pseudoscalar(n);
  centralizer("centralizer-even", "the centralizer of C^(0) is spanned by 1 and the pseudoscalar",
              SubspaceSpec::parity(n, 0), {0, top});
  centralizer("centralizer-all", "the center is C^0 (even n) or C^0 + C^n (odd n)", SubspaceSpec::all(n),
              n % 2 == 1 ? std::vector<Blade>{0, top} : std::vector<Blade>{0});

  if (!sig.is_complex()) {
    rec.custom("pin-normalization", "normalized versors satisfy psi = +-1; even ones are even", [&](CheckReport& r) {
      Rng rng(derive_seed(base, "pin"));
      for (int i = 0; i < kPinSamples; ++i) {
        const int length = i % (n + 1);
        const Multivector v = sample(family::Versor{length}, sig, rng);
        const Multivector s = psi(v);
        ++r.trials;
        if (!s.is_scalar()) {
          fail(r, "psi of versor " + to_string(v) + " is " + to_string(s));
          continue;
        }
        const double scale = std::sqrt(std::abs(s[0].real().get_d()));
        const FloatMultivector x = (1.0 / scale) * to_float(v);
        const FloatMultivector norm = reverse(x) * x;
        const double target = s[0].real() > 0 ? 1.0 : -1.0;
        double residual = std::abs(norm[0] - target);
        for (std::size_t j = 1; j < norm.size(); ++j) residual = std::max(residual, std::abs(norm[j]));
        if (length % 2 == 0) residual = std::max(residual, max_abs(grade_project(x, SubspaceSpec::parity(n, 1))));
        if (residual >= options.tol) fail(r, to_string(v) + " residual " + std::to_string(residual));
      }
      for (const GroupId& g : {G::pin(), G::spin()}) {
        for (int i = 0; i < 10; ++i) {
          ++r.trials;
          (void)sample(g, sig, rng);  // asserts membership
        }
      }
    });
  }

  rec.custom("scale-invariance", "membership is unchanged by nonzero scalar multiples", [&](CheckReport& r) {
    const auto groups = catalog_groups(n);
    std::size_t others = 0;
    for (auto& e : corpus.elements) {
      if (!e.oracle) continue;
      if (e.tag != CorpusTag::RegistryWitness && others++ >= 5) continue;
      MembershipOracle scaled(Exact(3) * e.value);
      ++r.trials;
      for (const auto& g : groups) {
        if (scaled.member(g) != e.oracle->member(g)) fail(r, to_string(e.value) + " in " + g.name());
      }
    }
  });

  if (n <= 5) {
    for (const auto& g : lie_groups()) {
      rec.custom("exp-membership/" + g.cli_name(), "exp of the Lie algebra of " + g.name() + " lies in the group",
                 [&](CheckReport& r) {
                   const auto result =
                       exp_membership_check(g, sig, derive_seed(base, "exp/" + g.cli_name()), kExpTrials, options.tol);
                   r.trials = result.trials;
                   if (!result) fail(r, result.diagnostic);
                   r.note = "max residual " + std::to_string(result.max_residual);
                 });
    }
    rec.custom("catalog", "coincidence classes of all groups", [&](CheckReport& r) {
      const Catalog c = catalog_of(corpus);
      r.trials = static_cast<long>(corpus.elements.size());
      r.note = std::to_string(c.computed.size()) + " classes";
      if (!c.matches) fail(r, "partition differs: " + catalog_text(c));
      if (!c.separated) fail(r, "a pair of classes has no separating registry witness");
    });
  }
}

std::vector<CheckReport> replays_for(const Signature& sig) {
  std::vector<CheckReport> out;
  for (const auto& entry : default_registry()) {
    if (entry.admissible(sig)) out.push_back(replay(entry, sig));
  }
  return out;
}

CheckReport n_check(const std::string& id, const std::string& statement, int n) {
  CheckReport r;
  r.id = id;
  r.statement = statement;
  r.n = n;
  r.trials = 1;
  return r;
}

std::vector<CheckReport> lie_checks() {
  std::vector<CheckReport> out;
  for (const auto& row : table1_rows(10)) {
    CheckReport r = n_check("table1/" + row.group.cli_name(), "Lie algebra dimension of " + row.group.name(), row.n);
    r.note = row.spec.to_string() + ", dim " + std::to_string(row.formula);
    if (!row.matches()) {
      r.passed = false;
      r.witness = "formula " + std::to_string(row.formula) + ", blades " + std::to_string(row.enumerated);
    }
    out.push_back(std::move(r));
  }
  for (int n = 2; n <= 10; ++n) {
    CheckReport r = n_check("bar2-dimension", "dim C^bar2 formula", n);
    const long long blades = SubspaceSpec::bar(n, 2).dimension();
    if (bar2_dim_formula(n) != blades) {
      r.passed = false;
      r.witness = "formula " + std::to_string(bar2_dim_formula(n)) + ", blades " + std::to_string(blades);
    }
    out.push_back(std::move(r));
  }
  for (int n = 1; n <= 8; ++n) {
    const Signature sig = Signature::real(n, 0);
    for (const auto& g : lie_groups()) {
      const auto start = Clock::now();
      CheckReport r = n_check("lie-closure/" + g.cli_name(), "Lie algebra of " + g.name() + " closes", n);
      const SubspaceSpec spec = lie_spec(g, n).spec;
      r.trials = spec.dimension() * spec.dimension();
      const Closure c = closure_check(spec, sig);
      if (!c) {
        r.passed = false;
        r.witness = blade_text(c.witness->first, n) + ", " + blade_text(c.witness->second, n);
      }
      r.elapsed_ms = since(start);
      out.push_back(std::move(r));
    }
    if (n >= 2) {
      CheckReport r = n_check("lie-closure-negative", "C^1 alone is not closed", n);
      if (closure_check(SubspaceSpec::grade(n, 1), sig)) {
        r.passed = false;
        r.witness = "C^1 closed";
      }
      out.push_back(std::move(r));
    }
  }
  for (int n = 1; n <= 10; ++n) {
    auto spec = [n](const GroupId& g) { return lie_spec(g, n).spec; };
    const SubspaceSpec gamma = spec(G::gamma()), p = spec(G::p()), a = spec(G::a()), b = spec(G::b()),
                       q = spec(G::q()), qp = spec(G::q_prime());
    auto subset = [](const SubspaceSpec& x, const SubspaceSpec& y) { return (x & y) == x; };
    CheckReport r = n_check("lie-lattice", "inclusions among the Lie algebras", n);
    std::vector<std::pair<bool, std::string>> facts{
        {subset(gamma, q), "gamma <= q"},  {subset(q, p), "q <= p"},      {subset(q, a), "q <= a"},
        {subset(q, b), "q <= b"},          {(a & p) == q, "q = a & p"},   {(b & p) == q, "q = b & p"},
        {(a & b) == q, "q = a & b"},
    };
    if (n <= 3) facts.push_back({q == p && p == a, "q = p = a"});
    if (n == 4) facts.push_back({q != p && q != a && p != a, "q, p, a distinct"});
    if (n <= 5) facts.push_back({gamma == q, "gamma = q"});
    if (n == 6) facts.push_back({gamma != q, "gamma != q"});
    if (n % 4 == 0) {
      facts.push_back({subset(q, qp) && subset(qp, p) && subset(gamma, qp), "q <= q' <= p, gamma <= q'"});
      facts.push_back({q != qp, "q != q'"});
      facts.push_back({n == 4 ? qp == p : qp != p, n == 4 ? "q' = p" : "q' != p"});
    } else {
      facts.push_back({q == qp, "q = q'"});
    }
    r.trials = static_cast<long>(facts.size());
    for (const auto& [ok, text] : facts) {
      if (!ok && r.passed) {
        r.passed = false;
        r.witness = text;
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Signature> selected_signatures(int n, const SuiteOptions& options) {
  std::vector<Signature> out;
  for (const auto& sig : signatures_of_dimension(n)) {
    if (sig.is_complex() ? options.complex : options.real) out.push_back(sig);
  }
  return out;
}

}  // namespace

std::vector<CatalogClass> expected_catalog(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("catalogs cover 1 <= n <= 5");
  auto gk = [](int k) { return G::gamma_grade(k); };
  auto bar = [](int m) { return G::gamma_bar(m); };
  auto pair = [](int k, int l) { return G::gamma_bar_pair(k, l); };
  switch (n) {
    case 1:
      return {{catalog_groups(1)}};
    case 2:
      return {{{G::full(), gk(0), bar(0), bar(3), pair(0, 3), pair(1, 2), G::b()}},
              {{gk(1), gk(2), bar(1), bar(2), pair(2, 3), pair(0, 1), G::gamma_parity(0), G::gamma_parity(1), G::p(),
                G::a(), G::q(), G::q_prime()}}};
    case 3:
      return {{{G::full(), gk(0), gk(3), bar(0), bar(3), pair(0, 3), pair(1, 2), G::b()}},
              {{gk(1), gk(2), bar(1), bar(2), pair(2, 3), pair(0, 1), G::gamma_parity(0), G::gamma_parity(1), G::p(),
                G::a(), G::q(), G::q_prime()}}};
    case 4:
      return {{{G::full(), gk(0)}},
              {{G::gamma_parity(0), G::gamma_parity(1), bar(0), gk(4), bar(2), gk(2), G::p(), G::q_prime()}},
              {{gk(1), bar(1), gk(3), bar(3), G::q()}},
              {{pair(0, 3), pair(1, 2), G::b()}},
              {{pair(2, 3), pair(0, 1), G::a()}}};
    default:
      return {{{G::full(), gk(0), gk(5)}},
              {{G::gamma_parity(0), G::gamma_parity(1), G::p()}},
              {{gk(1), gk(2), gk(3), gk(4), bar(0), bar(1), bar(2), bar(3), G::q(), G::q_prime()}},
              {{pair(0, 3), pair(1, 2), G::b()}},
              {{pair(2, 3), pair(0, 1), G::a()}}};
  }
}

Catalog small_n_catalog(const Signature& sig, std::uint64_t seed, std::size_t corpus_size) {
  if (sig.n() > 5) throw std::invalid_argument("catalogs cover 1 <= n <= 5");
  Corpus corpus = build_corpus(sig, derive_seed(seed, sig.name()), corpus_size);
  return catalog_of(corpus);
}

std::vector<CheckReport> signature_checks(const Signature& sig, const SuiteOptions& options) {
  std::vector<CheckReport> out;
  const int group_max = std::min(options.max_n, 6);
  if (sig.n() <= group_max) {
    Corpus corpus = build_corpus(sig, derive_seed(options.seed, sig.name()), options.corpus_size);
    group_checks(corpus, options, out);
  }
  if (sig.n() <= std::max(group_max, options.replay_max_n)) {
    for (auto& r : replays_for(sig)) out.push_back(std::move(r));
  }
  return out;
}

std::vector<CheckReport> run_suite(const SuiteOptions& options) {
  if (options.max_n < 1) throw std::invalid_argument("max_n must be positive");
  std::vector<Signature> sigs;
  const int top = std::max(std::min(options.max_n, 6), options.replay_max_n);
  for (int n = 1; n <= top; ++n) {
    for (const auto& s : selected_signatures(n, options)) sigs.push_back(s);
  }
  std::vector<std::vector<CheckReport>> per_sig(sigs.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(1, options.jobs));
  if (jobs == 1) {
    for (std::size_t i = 0; i < sigs.size(); ++i) per_sig[i] = signature_checks(sigs[i], options);
  } else {
    // Largest signatures first so the slowest tasks start early.
    std::vector<std::size_t> order(sigs.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = sigs.size() - 1 - i;
    std::size_t next = 0;
    std::vector<std::pair<std::size_t, std::future<std::vector<CheckReport>>>> running;
    while (next < order.size() || !running.empty()) {
      while (running.size() < jobs && next < order.size()) {
        const std::size_t i = order[next++];
        running.emplace_back(i, std::async(std::launch::async, [&, i] { return signature_checks(sigs[i], options); }));
      }
      auto& [i, f] = running.front();
      per_sig[i] = f.get();
      running.erase(running.begin());
    }
  }
  std::vector<CheckReport> out = lie_checks();
  for (auto& reports : per_sig) {
    for (auto& r : reports) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace cliffaut
