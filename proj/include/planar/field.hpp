#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

#include "planar/dyadic.hpp"
#include "planar/errors.hpp"

namespace planar {

enum class BackendKind { Rational, Gfp, Dyadic };

/// Identifies a field backend. Two backends are compatible when they have the
/// same kind and, for prime fields, the same modulus; the dyadic default
/// budget is a per-value convenience, not part of the identity.
struct Backend {
  BackendKind kind = BackendKind::Rational;
  std::uint32_t prime = 0;  // Gfp
  int default_budget = 64;  // Dyadic

  static Backend rational();
  static Backend gfp(std::uint32_t p);  // p must be prime, p <= 2^31
  static Backend dyadic(int default_budget);

  bool compatible(const Backend& other) const {
    return kind == other.kind && (kind != BackendKind::Gfp || prime == other.prime);
  }
  bool decidable() const { return kind != BackendKind::Dyadic; }
  std::string spec() const;
};

/// Parses "rational", "gf:<p>", or "dyadic:<default-budget>".
Backend parse_backend(const std::string& spec);

enum class Apartness { Apart, NotApart, Undecided };

/// Outcome of an apartness query. `Apart` carries a strictly positive witness:
/// a rational lower bound on the separation (rational and dyadic backends) or
/// the nonzero residue of the difference (prime fields). `NotApart` is only
/// ever produced by the decidable backends; the dyadic backend answers
/// `Undecided` instead, recording the budget it spent, because equality of
/// interval streams is not decidable and asserting it would be unsound.
struct ApartnessOutcome {
  Apartness result = Apartness::NotApart;
  mpq_class witness;    // > 0 when Apart
  int precision = 0;    // dyadic: precision at which the intervals separated
  int budget_spent = 0; // dyadic Undecided: budget exhausted

  bool is_apart() const { return result == Apartness::Apart; }
  bool is_not_apart() const { return result == Apartness::NotApart; }
  bool is_undecided() const { return result == Apartness::Undecided; }

  static ApartnessOutcome apart(const mpq_class& witness, int precision = 0);
  static ApartnessOutcome not_apart();
  static ApartnessOutcome undecided(int budget_spent);
};

enum class CotransChoice { FirstApart, SecondApart };

struct CotransResult {
  CotransChoice choice;
  ApartnessOutcome witness;  // apartness of z from the chosen endpoint
};

/// An element of a Heyting field, tagged with its backend. Immutable; all
/// operations are pure and values may be freely shared across threads.
class FieldValue {
public:
  FieldValue() = default;

  static FieldValue rational(const mpq_class& v);
  static FieldValue rational(long num, long den);
  static FieldValue gfp(std::uint32_t p, long long v);
  static FieldValue gfp(const Backend& backend, long long v);
  static FieldValue dyadic(const DyadicValue& v, int default_budget);

  /// The additive/multiplicative identities and small integers in any backend.
  static FieldValue zero(const Backend& backend);
  static FieldValue one(const Backend& backend);
  static FieldValue from_int(const Backend& backend, long long v);
  /// Injects an exact rational constant into any backend. For prime fields the
  /// denominator must be invertible (it always is, p being prime, unless the
  /// denominator reduces to zero mod p).
  static FieldValue from_rational(const Backend& backend, const mpq_class& v);

  const Backend& backend() const { return backend_; }

  const mpq_class& rational_value() const;
  std::uint32_t residue() const;
  const DyadicValue& stream() const;

  std::string str() const;  // canonical text form (decidable backends)

private:
  Backend backend_;
  mpq_class rat_;
  std::uint32_t res_ = 0;
  DyadicValue dy_;
};

FieldValue add(const FieldValue& a, const FieldValue& b);
FieldValue sub(const FieldValue& a, const FieldValue& b);
FieldValue mul(const FieldValue& a, const FieldValue& b);
FieldValue neg(const FieldValue& a);

inline FieldValue operator+(const FieldValue& a, const FieldValue& b) { return add(a, b); }
inline FieldValue operator-(const FieldValue& a, const FieldValue& b) { return sub(a, b); }
inline FieldValue operator*(const FieldValue& a, const FieldValue& b) { return mul(a, b); }
inline FieldValue operator-(const FieldValue& a) { return neg(a); }

/// Witnessed apartness test. The budget applies to the dyadic backend only
/// (defaulting to the values' own default) and is the maximum interrogated
/// precision; exhaustion yields Undecided, never a fabricated answer.
ApartnessOutcome apart(const FieldValue& a, const FieldValue& b,
                       std::optional<int> budget = std::nullopt);

/// Convenience: apart(a, 0).
ApartnessOutcome apart_zero(const FieldValue& a, std::optional<int> budget = std::nullopt);

/// Cotransitivity: given that x and y are apart (the caller passes that
/// witness), decides for any z whether z is apart from x or from y, and
/// returns the branch with its own witness. On the dyadic backend this always
/// terminates: refinement stops once the interval radius drops below an
/// eighth of the x/y separation gap, at which point one branch must separate.
CotransResult cotrans(const FieldValue& x, const FieldValue& y, const FieldValue& z,
                      const ApartnessOutcome& xy_witness);

/// Multiplicative inverse. The element must be apart from zero: decidable
/// backends check directly (NotInvertible on zero); the dyadic backend first
/// excludes zero within the budget and throws UndecidedError on exhaustion.
FieldValue inv(const FieldValue& a, std::optional<int> budget = std::nullopt);

/// Inverse with a previously established apartness-from-zero witness.
FieldValue inv_with(const FieldValue& a, const ApartnessOutcome& zero_witness);

/// Certifies apartness from zero for a value known (by outside reasoning) to
/// satisfy |value| >= lower_bound > 0. Decidable backends test directly; the
/// dyadic backend refines until the interval excludes zero, which the bound
/// guarantees happens by precision log2(1/lower_bound) + 2. Used to carry
/// witnesses through arithmetic whose output is provably apart from zero.
ApartnessOutcome certify_apart_zero(const FieldValue& v, const mpq_class& lower_bound);

/// Exact equality where that is meaningful: decidable backends compare
/// directly; dyadic values compare only if both have collapsed to exact
/// points at precision 0, otherwise this throws (use apart()).
bool exact_eq(const FieldValue& a, const FieldValue& b);

bool is_dyadic(const FieldValue& a);

/// Effective budget for an operation touching these values.
int effective_budget(const Backend& backend, std::optional<int> budget);

void require_compatible(const FieldValue& a, const FieldValue& b, const char* where);

}  // namespace planar
