#include "cliffaut/expression.hpp"
#include "cliffaut/verify.hpp"

namespace cliffaut {

std::string tag_name(CorpusTag tag) {
  switch (tag) {
    case CorpusTag::Generic:
      return "generic";
    case CorpusTag::Even:
      return "even";
    case CorpusTag::Odd:
      return "odd";
    case CorpusTag::Versor:
      return "versor";
    case CorpusTag::CenterMultiple:
      return "center-multiple";
    case CorpusTag::RegistryWitness:
      return "registry-witness";
    case CorpusTag::WitnessProduct:
      return "witness-product";
    case CorpusTag::SingularProbe:
      return "singular-probe";
  }
  return "?";
}

std::size_t Corpus::count(CorpusTag tag) const {
  std::size_t c = 0;
  for (const auto& e : elements) c += e.tag == tag;
  return c;
}

namespace {

constexpr std::size_t kWitnessProducts = 5;

// 1 + B for the first blade B != 1 squaring to +1; such an element is a
// zero divisor. Division algebras have none.
std::optional<Multivector> singular_probe(const Signature& sig) {
  const Multivector one = Multivector::scalar(sig, Exact(1));
  for (Blade b = 1; b < sig.dimension(); ++b) {
    const Multivector blade = Multivector::blade(sig, b);
    if (blade * blade == one) return one + blade;
  }
  return std::nullopt;
}

}  // namespace

Corpus build_corpus(const Signature& sig_in, std::uint64_t seed, std::size_t size,
                    const std::vector<CounterexampleEntry>& registry) {
  if (size < 20) throw std::invalid_argument("corpus size must be at least 20");
  const Signature sig = sig_in.with_backend(Backend::Exact);
  Corpus corpus{sig, seed, {}};
  Rng rng(derive_seed(seed, "corpus/" + sig.name()));

  auto add = [&](Multivector x, CorpusTag tag, int length = 0, std::string origin = {}) {
    std::shared_ptr<MembershipOracle> oracle;
    if (tag != CorpusTag::SingularProbe) oracle = std::make_shared<MembershipOracle>(x);
    corpus.elements.push_back({std::move(x), tag, length, std::move(origin), std::move(oracle)});
  };

  std::vector<std::pair<Multivector, std::string>> witnesses;
  for (const auto& entry : registry) {
    if (!entry.admissible(sig)) continue;
    Multivector w = evaluate(entry.element, sig);
    witnesses.emplace_back(w, entry.id);
    add(std::move(w), CorpusTag::RegistryWitness, 0, entry.id);
  }
  for (std::size_t i = 0; i < kWitnessProducts && !witnesses.empty(); ++i) {
    const auto& [w, id] = witnesses[i % witnesses.size()];
    const Multivector g = sample(GroupId::gamma(), sig, rng);
    add(i % 2 == 0 ? w * g : g * w, CorpusTag::WitnessProduct, 0, id);
  }
  if (auto probe = singular_probe(sig)) add(std::move(*probe), CorpusTag::SingularProbe);

  const int n = sig.n();
  int versor_length = 0;
  for (std::size_t slot = 0; corpus.elements.size() < size; ++slot) {
    switch (slot % 5) {
      case 0:
        add(sample(GroupId::full(), sig, rng), CorpusTag::Generic);
        break;
      case 1:
        add(sample(family::HomogeneousInvertible{0}, sig, rng), CorpusTag::Even);
        break;
      case 2:
        add(sample(family::HomogeneousInvertible{1}, sig, rng), CorpusTag::Odd);
        break;
      case 3:
        versor_length = versor_length % n + 1;
        add(sample(family::Versor{versor_length}, sig, rng), CorpusTag::Versor, versor_length);
        break;
      default: {
        const int parity = static_cast<int>(rng.uniform(0, 1));
        add(sample(family::CenterUnit{}, sig, rng) * sample(family::HomogeneousInvertible{parity}, sig, rng),
            CorpusTag::CenterMultiple);
        break;
      }
    }
  }
  return corpus;
}

}  // namespace cliffaut
