#pragma once

#include <gmpxx.h>

#include <memory>

namespace planar {

/// 2^e as an exact rational, for any sign of e.
mpq_class pow2(long e);

/// A closed interval [lo, hi] with exact rational endpoints.
struct DyadicInterval {
  mpq_class lo;
  mpq_class hi;

  mpq_class center() const { return (lo + hi) / 2; }
  mpq_class radius() const { return (hi - lo) / 2; }
  mpq_class width() const { return hi - lo; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool contains(const mpq_class& v) const { return lo <= v && v <= hi; }
  /// Radius zero: the value is known exactly.
  bool is_point() const { return lo == hi; }
};

/// Gap between two disjoint intervals; negative or zero when they meet.
mpq_class interval_gap(const DyadicInterval& a, const DyadicInterval& b);

namespace detail {
struct DyadicNode;
}

/// A computable real presented as a nested interval stream: `at(q)` yields an
/// interval of radius at most 2^-q containing the value. Queries are pure
/// functions of the precision, so repeated queries agree bit for bit, and the
/// intervals shrink monotonically: at(q2) is contained in at(q1) for q1 < q2.
///
/// Streams are composed structurally; every operation preserves the nesting
/// and radius invariants by construction. There is no rounding model beyond
/// exact rational endpoint arithmetic.
class DyadicValue {
public:
  DyadicValue() = default;

  /// The value c, known exactly: every interval is [c, c].
  static DyadicValue exact(const mpq_class& c);

  /// A stream converging to c with interval [c - 2^-q, c + 2^-q]. Nothing
  /// short of an infinite query sequence reveals whether the value equals
  /// any particular rational; this models a real given only by
  /// approximations. converging(0) is the hard zero stream.
  static DyadicValue converging(const mpq_class& c);

  bool valid() const { return node_ != nullptr; }

  DyadicInterval at(int precision) const;

  friend DyadicValue dyadic_add(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue dyadic_neg(const DyadicValue& a);
  friend DyadicValue dyadic_mul(const DyadicValue& a, const DyadicValue& b);
  /// Reciprocal. `certified_precision` must be a precision at which the
  /// operand's interval excludes zero; the caller certifies this (it is the
  /// apartness-from-zero witness).
  friend DyadicValue dyadic_inv(const DyadicValue& a, int certified_precision);
  friend DyadicValue dyadic_max(const DyadicValue& a, const DyadicValue& b);
  friend DyadicValue dyadic_min(const DyadicValue& a, const DyadicValue& b);

private:
  explicit DyadicValue(std::shared_ptr<const detail::DyadicNode> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::DyadicNode> node_;
};

}  // namespace planar
