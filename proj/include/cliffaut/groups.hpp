#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "cliffaut/group_id.hpp"
#include "cliffaut/matrix_rep.hpp"
#include "cliffaut/multivector.hpp"

namespace cliffaut {

/// psi(T) = rev(T) T.
Multivector psi(const Multivector& t);
/// chi(T) = hat(rev(T)) T.
Multivector chi(const Multivector& t);

/// A blade whose conjugate leaves the subspace.
struct ConjugationWitness {
  Blade blade;
  Multivector image;
};

struct Preservation {
  bool preserved = true;
  std::optional<ConjugationWitness> witness;

  explicit operator bool() const { return preserved; }
};

/// Caches everything the membership deciders need for one invertible
/// element: its inverse, psi, chi and the conjugates T B T^-1 of blades,
/// which are computed on first use.
///
/// Not thread-safe; each task owns its oracles.
class MembershipOracle {
 public:
  /// Throws NotInvertible for zero or singular elements.
  explicit MembershipOracle(Multivector t);

  const Multivector& element() const { return t_; }
  const Multivector& inverse() const { return inv_; }
  const Multivector& psi();
  const Multivector& chi();
  /// T B T^-1.
  const Multivector& conjugate(Blade b);

  /// True iff T B T^-1 lies in spec for every blade B of spec; an empty
  /// spec is preserved vacuously. Reports the first violating blade.
  Preservation preserves(const SubspaceSpec& spec);

  /// T lies in C^(0) or C^(1).
  bool is_homogeneous() const;

  /// Throws UnsupportedGroup for Pin/Spin over the complex field and
  /// std::invalid_argument for parameters out of range.
  bool member(const GroupId& g);

  /// T U T^-1 = U for every blade U.
  bool fixes_every_blade();

 private:
  bool decide(const GroupId& g);

  Multivector t_;
  Multivector inv_;
  std::optional<Multivector> psi_;
  std::optional<Multivector> chi_;
  std::map<Blade, Multivector> conjugates_;
  std::map<GroupId, bool> memo_;
};

/// Conjugation-preserved subspace of a conjugation-defined group.
SubspaceSpec preserved_subspace(const GroupId& g, int n);

/// Throws NotInvertible when t is singular.
Preservation preserves_subspace(const Multivector& t, const SubspaceSpec& spec);

/// Throws NotInvertible when t is zero or singular.
bool member(const Multivector& t, const GroupId& g);

/// Independent decider for P: split T = T0 + T1 by parity. Homogeneous T is
/// in P; otherwise T is in P iff T1 T0^-1 (or T0 T1^-1 when T0 is singular)
/// is central.
bool member_p_by_parity_split(const Multivector& t);

/// Deterministic generator: 64-bit Mersenne twister with a bounded draw
/// that does not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  /// Uniform double in [0, 1).
  double unit();

 private:
  std::mt19937_64 engine_;
};

/// Stable seed for (base, tag...) built with splitmix64 mixing.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

namespace family {
struct Generic {};
struct HomogeneousInvertible {
  int parity;
};
struct Versor {
  int length;
};
struct CenterUnit {};
}  // namespace family

using SampleRequest =
    std::variant<family::Generic, family::HomogeneousInvertible, family::Versor, family::CenterUnit, GroupId>;

/// Number of rejected draws tolerated before SamplerExhausted.
inline constexpr int kSamplerRetries = 100;

/// Draws one element of the requested family with integer coefficients in
/// [-3, 3] (Gaussian integers for complex signatures).
///
/// Groups are sampled constructively: Gamma and the Gamma^k as center unit
/// times versor, Lipschitz as a versor, P as center unit times homogeneous
/// invertible, Full as a generic invertible, Pin and Spin as products of
/// unit vectors. Groups without a constructive form (A, B, Q and relatives)
/// are Gamma elements, multiplied by one of `witnesses` that belongs to
/// the group when any do. Every group sample is checked with member().
Multivector sample(const SampleRequest& request, const Signature& sig, Rng& rng,
                   std::span<const Multivector> witnesses = {});

Multivector sample(const SampleRequest& request, const Signature& sig, std::uint64_t seed,
                   std::span<const Multivector> witnesses = {});

}  // namespace cliffaut
