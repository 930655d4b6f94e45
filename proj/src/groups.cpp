#include "cliffaut/groups.hpp"

#include <stdexcept>

namespace cliffaut {

Multivector psi(const Multivector& t) { return reverse(t) * t; }

Multivector chi(const Multivector& t) { return grade_involution(reverse(t)) * t; }

MembershipOracle::MembershipOracle(Multivector t) : t_(std::move(t)), inv_(t_.signature()) {
  if (t_.is_zero()) throw NotInvertible("group predicates need an invertible element, got 0");
  try {
    inv_ = cliffaut::inverse(t_);
  } catch (const SingularError&) {
    throw NotInvertible("element is not invertible: " + to_string(t_));
  }
}

const Multivector& MembershipOracle::psi() {
  if (!psi_) psi_ = cliffaut::psi(t_);
  return *psi_;
}

const Multivector& MembershipOracle::chi() {
  if (!chi_) chi_ = cliffaut::chi(t_);
  return *chi_;
}

const Multivector& MembershipOracle::conjugate(Blade b) {
  auto it = conjugates_.find(b);
  if (it == conjugates_.end()) {
    it = conjugates_.emplace(b, t_.times_blade(b) * inv_).first;
  }
  return it->second;
}

Preservation MembershipOracle::preserves(const SubspaceSpec& spec) {
  require_spec_matches(spec, t_.signature());
  for (Blade b : spec.blades()) {
    const Multivector& image = conjugate(b);
    if (!in_subspace(image, spec)) return {false, ConjugationWitness{b, image}};
  }
  return {};
}

bool MembershipOracle::is_homogeneous() const {
  const int n = t_.signature().n();
  return in_subspace(t_, SubspaceSpec::parity(n, 0)) || in_subspace(t_, SubspaceSpec::parity(n, 1));
}

bool MembershipOracle::fixes_every_blade() {
  for (std::size_t b = 0; b < t_.size(); ++b) {
    const Blade blade = static_cast<Blade>(b);
    if (conjugate(blade) != Multivector::blade(t_.signature(), blade)) return false;
  }
  return true;
}

bool MembershipOracle::member(const GroupId& g) {
  const int n = t_.signature().n();
  g.validate(n);
  if (auto it = memo_.find(g); it != memo_.end()) return it->second;
  const bool result = decide(g);
  memo_.emplace(g, result);
  return result;
}

SubspaceSpec preserved_subspace(const GroupId& g, int n) {
  using Kind = GroupId::Kind;
  switch (g.kind()) {
    case Kind::GammaGrade:
      return SubspaceSpec::grade(n, g.first());
    case Kind::GammaParity:
      return SubspaceSpec::parity(n, g.first());
    case Kind::GammaBar:
      return SubspaceSpec::bar(n, g.first());
    case Kind::GammaBarPair:
      return SubspaceSpec::bar(n, g.first()) | SubspaceSpec::bar(n, g.second());
    default:
      throw std::invalid_argument(g.name() + " is not defined by conjugation");
  }
}

bool MembershipOracle::decide(const GroupId& g) {
  using Kind = GroupId::Kind;
  const Signature& sig = t_.signature();
  const int n = sig.n();
  const SubspaceSpec center = SubspaceSpec::center(n);
  const SubspaceSpec ends = SubspaceSpec::grades(n, {0, n});
  switch (g.kind()) {
    case Kind::Full:
      return true;
    case Kind::GammaGrade:
    case Kind::GammaParity:
    case Kind::GammaBar:
    case Kind::GammaBarPair:
      return preserves(preserved_subspace(g, n)).preserved;
    case Kind::P:
      return in_subspace(grade_involution(t_) * inv_, center);
    case Kind::A:
      return in_subspace(psi(), center);
    case Kind::APrime:
      return in_subspace(psi(), ends);
    case Kind::B:
      return in_subspace(chi(), center);
    case Kind::BPrime:
      return in_subspace(chi(), ends);
    case Kind::Q:
      return member(GroupId::p()) && member(GroupId::a());
    case Kind::QPrime:
      return member(GroupId::p()) && member(GroupId::a_prime());
    case Kind::Lipschitz:
      return is_homogeneous() && member(GroupId::gamma());
    case Kind::Pin:
    case Kind::Spin: {
      if (sig.is_complex()) throw UnsupportedGroup(g.name() + " is defined for real signatures only");
      if (!member(GroupId::lipschitz())) return false;
      const Multivector& s = psi();
      if (!s.is_scalar() || !(s[0] == Exact(1) || s[0] == Exact(-1))) return false;
      return g.kind() == Kind::Pin || in_subspace(t_, SubspaceSpec::parity(n, 0));
    }
  }
  return false;
}

Preservation preserves_subspace(const Multivector& t, const SubspaceSpec& spec) {
  MembershipOracle oracle(t);
  return oracle.preserves(spec);
}

bool member(const Multivector& t, const GroupId& g) {
  MembershipOracle oracle(t);
  return oracle.member(g);
}

bool member_p_by_parity_split(const Multivector& t) {
  if (!is_invertible(t)) throw NotInvertible("element is not invertible: " + to_string(t));
  const int n = t.signature().n();
  const Multivector even = grade_project(t, SubspaceSpec::parity(n, 0));
  const Multivector odd = grade_project(t, SubspaceSpec::parity(n, 1));
  if (even.is_zero() || odd.is_zero()) return true;
  const SubspaceSpec center = SubspaceSpec::center(n);
  if (is_invertible(even)) return in_subspace(odd * inverse(even), center);
  if (is_invertible(odd)) return in_subspace(even * inverse(odd), center);
  return false;
}

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return lo + static_cast<long>(x % span);
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix(splitmix(base) ^ h);
}

namespace {

Exact small_coefficient(const Signature& sig, Rng& rng) {
  const long re = rng.uniform(-3, 3);
  if (!sig.is_complex()) return Exact(re);
  const long im = rng.uniform(-3, 3);
  return Exact(mpq_class(re), mpq_class(im));
}

Multivector random_in(const SubspaceSpec& spec, const Signature& sig, Rng& rng) {
  std::vector<Exact> c(sig.dimension());
  for (Blade b : spec.blades()) c[b] = small_coefficient(sig, rng);
  return Multivector(sig, std::move(c));
}

template <class Draw, class Accept>
Multivector rejection(Draw draw, Accept accept, const char* what) {
  for (int attempt = 0; attempt < kSamplerRetries; ++attempt) {
    Multivector x = draw();
    if (accept(x)) return x;
  }
  throw SamplerExhausted(std::string("no acceptable ") + what + " after retry cap");
}

Multivector invertible_vector(const Signature& sig, Rng& rng) {
  const SubspaceSpec vectors = SubspaceSpec::grade(sig.n(), 1);
  return rejection([&] { return random_in(vectors, sig, rng); },
                   [](const Multivector& v) {
                     // v^2 is the scalar sum of eta_a v_a^2.
                     return !(v * v).is_zero();
                   },
                   "invertible vector");
}

Multivector versor(const Signature& sig, int length, Rng& rng) {
  Multivector out = Multivector::scalar(sig, Exact(1));
  for (int i = 0; i < length; ++i) out = out * invertible_vector(sig, rng);
  return out;
}

Multivector center_unit(const Signature& sig, Rng& rng) {
  const SubspaceSpec center = SubspaceSpec::center(sig.n());
  return rejection([&] { return random_in(center, sig, rng); }, is_invertible, "center unit");
}

Multivector homogeneous_invertible(const Signature& sig, int parity, Rng& rng) {
  const SubspaceSpec part = SubspaceSpec::parity(sig.n(), parity);
  return rejection([&] { return random_in(part, sig, rng); }, is_invertible,
                   "homogeneous invertible element");
}

// +-e_a, or (3 e_i + 4 e_j)/5 for two generators of equal square.
Multivector unit_vector(const Signature& sig, Rng& rng) {
  const int n = sig.n();
  const Exact sign(rng.uniform(0, 1) == 0 ? 1 : -1);
  const int i = static_cast<int>(rng.uniform(1, n));
  const int j = static_cast<int>(rng.uniform(1, n));
  if (i == j || sig.metric(i) != sig.metric(j)) return Multivector::generator(sig, i, sign);
  return Multivector::generator(sig, i, sign * Exact::fraction(3, 5)) +
         Multivector::generator(sig, j, sign * Exact::fraction(4, 5));
}

Multivector gamma_element(const Signature& sig, Rng& rng) {
  const int length = static_cast<int>(rng.uniform(0, sig.n()));
  return center_unit(sig, rng) * versor(sig, length, rng);
}

Multivector draw_group(const GroupId& g, const Signature& sig, Rng& rng,
                       std::span<const Multivector> witnesses) {
  using Kind = GroupId::Kind;
  const int n = sig.n();
  switch (g.kind()) {
    case Kind::Full:
      return rejection([&] { return random_in(SubspaceSpec::all(n), sig, rng); }, is_invertible,
                       "invertible element");
    case Kind::GammaGrade:
      if (g.first() == 1) return gamma_element(sig, rng);
      break;
    case Kind::Lipschitz:
      return versor(sig, static_cast<int>(rng.uniform(0, n)), rng);
    case Kind::P:
      return center_unit(sig, rng) * homogeneous_invertible(sig, static_cast<int>(rng.uniform(0, 1)), rng);
    case Kind::Pin:
    case Kind::Spin: {
      const bool even = g.kind() == Kind::Spin;
      int length = static_cast<int>(rng.uniform(0, n));
      if (even && length % 2 == 1) --length;
      Multivector out = Multivector::scalar(sig, Exact(1));
      for (int i = 0; i < length; ++i) out = out * unit_vector(sig, rng);
      return out;
    }
    default:
      break;
  }
  Multivector base = gamma_element(sig, rng);
  std::vector<const Multivector*> usable;
  for (const Multivector& w : witnesses) {
    if (w.signature() == sig && is_invertible(w) && member(w, g)) usable.push_back(&w);
  }
  if (!usable.empty() && rng.uniform(0, 1) == 1) {
    const auto pick = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(usable.size()) - 1));
    base = rng.uniform(0, 1) == 0 ? base * *usable[pick] : *usable[pick] * base;
  }
  return base;
}

}  // namespace

Multivector sample(const SampleRequest& request, const Signature& sig, Rng& rng,
                   std::span<const Multivector> witnesses) {
  const Signature exact = sig.with_backend(Backend::Exact);
  if (const auto* g = std::get_if<GroupId>(&request)) {
    g->validate(exact.n());
    return rejection([&] { return draw_group(*g, exact, rng, witnesses); },
                     [&](const Multivector& x) { return is_invertible(x) && member(x, *g); },
                     "group element");
  }
  if (std::holds_alternative<family::Generic>(request)) {
    return random_in(SubspaceSpec::all(exact.n()), exact, rng);
  }
  if (const auto* h = std::get_if<family::HomogeneousInvertible>(&request)) {
    if (h->parity != 0 && h->parity != 1) throw std::invalid_argument("parity must be 0 or 1");
    return homogeneous_invertible(exact, h->parity, rng);
  }
  if (const auto* v = std::get_if<family::Versor>(&request)) {
    if (v->length < 0) throw std::invalid_argument("versor length must be non-negative");
    return versor(exact, v->length, rng);
  }
  return center_unit(exact, rng);
}

Multivector sample(const SampleRequest& request, const Signature& sig, std::uint64_t seed,
                   std::span<const Multivector> witnesses) {
  Rng rng(seed);
  return sample(request, sig, rng, witnesses);
}

}  // namespace cliffaut
