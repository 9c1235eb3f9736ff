#include "planar/dyadic.hpp"

#include <algorithm>
#include <stdexcept>

#include "planar/errors.hpp"

namespace planar {

mpq_class pow2(long e) {
  mpz_class num = 1;
  if (e >= 0) {
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(e));
    return mpq_class(num);
  }
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(-e));
  mpq_class q(1, num);
  q.canonicalize();
  return q;
}

mpq_class interval_gap(const DyadicInterval& a, const DyadicInterval& b) {
  // max(a.lo - b.hi, b.lo - a.hi); positive iff the intervals are disjoint.
  mpq_class left = a.lo - b.hi;
  mpq_class right = b.lo - a.hi;
  return left > right ? left : right;
}

namespace detail {

enum class NodeKind { Exact, Converging, Add, Neg, Mul, Inv, Max, Min };

struct DyadicNode {
  NodeKind kind;
  mpq_class payload;  // Exact / Converging value
  std::shared_ptr<const DyadicNode> a;
  std::shared_ptr<const DyadicNode> b;
  int certified_precision = 0;  // Inv only
};

namespace {

DyadicInterval eval(const DyadicNode& n, int q);

DyadicInterval eval_mul(const DyadicNode& n, int q) {
  // Exact interval product, refined until the width bound 2^(1-q) holds.
  // Termination: operand widths vanish while magnitudes stay bounded, so the
  // product width tends to zero. Nesting across q follows from choosing the
  // smallest admissible source precision, which is nondecreasing in q.
  const mpq_class bound = pow2(1 - q);
  for (int s = std::max(q, 0);; ++s) {
    DyadicInterval ia = eval(*n.a, s);
    DyadicInterval ib = eval(*n.b, s);
    mpq_class p1 = ia.lo * ib.lo;
    mpq_class p2 = ia.lo * ib.hi;
    mpq_class p3 = ia.hi * ib.lo;
    mpq_class p4 = ia.hi * ib.hi;
    DyadicInterval out{std::min(std::min(p1, p2), std::min(p3, p4)),
                       std::max(std::max(p1, p2), std::max(p3, p4))};
    if (out.width() <= bound) return out;
    if (s > std::max(q, 0) + 100000)
      fail(Errc::Internal, "dyadic multiply did not converge");
  }
}

DyadicInterval eval_inv(const DyadicNode& n, int q) {
  const mpq_class bound = pow2(1 - q);
  for (int s = std::max(q, n.certified_precision);; ++s) {
    DyadicInterval ia = eval(*n.a, s);
    if (ia.contains_zero())
      fail(Errc::MissingWitness, "reciprocal interval touches zero; bad certification");
    DyadicInterval out{1 / ia.hi, 1 / ia.lo};
    if (out.width() <= bound) return out;
    if (s > std::max(q, n.certified_precision) + 100000)
      fail(Errc::Internal, "dyadic reciprocal did not converge");
  }
}

DyadicInterval eval(const DyadicNode& n, int q) {
  switch (n.kind) {
    case NodeKind::Exact:
      return {n.payload, n.payload};
    case NodeKind::Converging: {
      mpq_class r = pow2(-q);
      return {n.payload - r, n.payload + r};
    }
    case NodeKind::Add: {
      // Radius of each operand at q+1 is <= 2^-(q+1); the sum stays <= 2^-q.
      DyadicInterval ia = eval(*n.a, q + 1);
      DyadicInterval ib = eval(*n.b, q + 1);
      return {ia.lo + ib.lo, ia.hi + ib.hi};
    }
    case NodeKind::Neg: {
      DyadicInterval ia = eval(*n.a, q);
      return {-ia.hi, -ia.lo};
    }
    case NodeKind::Mul:
      return eval_mul(n, q);
    case NodeKind::Inv:
      return eval_inv(n, q);
    case NodeKind::Max: {
      DyadicInterval ia = eval(*n.a, q);
      DyadicInterval ib = eval(*n.b, q);
      return {std::max(ia.lo, ib.lo), std::max(ia.hi, ib.hi)};
    }
    case NodeKind::Min: {
      DyadicInterval ia = eval(*n.a, q);
      DyadicInterval ib = eval(*n.b, q);
      return {std::min(ia.lo, ib.lo), std::min(ia.hi, ib.hi)};
    }
  }
  fail(Errc::Internal, "unreachable dyadic node kind");
}

std::shared_ptr<const DyadicNode> leaf(NodeKind kind, const mpq_class& c) {
  auto n = std::make_shared<DyadicNode>();
  n->kind = kind;
  n->payload = c;
  return n;
}

std::shared_ptr<const DyadicNode> branch(NodeKind kind, std::shared_ptr<const DyadicNode> a,
                                         std::shared_ptr<const DyadicNode> b,
                                         int certified = 0) {
  auto n = std::make_shared<DyadicNode>();
  n->kind = kind;
  n->a = std::move(a);
  n->b = std::move(b);
  n->certified_precision = certified;
  return n;
}

}  // namespace
}  // namespace detail

DyadicValue DyadicValue::exact(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  return DyadicValue(detail::leaf(detail::NodeKind::Exact, v));
}

DyadicValue DyadicValue::converging(const mpq_class& c) {
  mpq_class v = c;
  v.canonicalize();
  return DyadicValue(detail::leaf(detail::NodeKind::Converging, v));
}

DyadicInterval DyadicValue::at(int precision) const {
  if (!node_) fail(Errc::Internal, "empty dyadic value");
  if (precision < 0) fail(Errc::NegativeBudget, "negative precision");
  return detail::eval(*node_, precision);
}

DyadicValue dyadic_add(const DyadicValue& a, const DyadicValue& b) {
  return DyadicValue(detail::branch(detail::NodeKind::Add, a.node_, b.node_));
}

DyadicValue dyadic_neg(const DyadicValue& a) {
  return DyadicValue(detail::branch(detail::NodeKind::Neg, a.node_, nullptr));
}

DyadicValue dyadic_mul(const DyadicValue& a, const DyadicValue& b) {
  return DyadicValue(detail::branch(detail::NodeKind::Mul, a.node_, b.node_));
}

DyadicValue dyadic_inv(const DyadicValue& a, int certified_precision) {
  return DyadicValue(
      detail::branch(detail::NodeKind::Inv, a.node_, nullptr, certified_precision));
}

DyadicValue dyadic_max(const DyadicValue& a, const DyadicValue& b) {
  return DyadicValue(detail::branch(detail::NodeKind::Max, a.node_, b.node_));
}

DyadicValue dyadic_min(const DyadicValue& a, const DyadicValue& b) {
  return DyadicValue(detail::branch(detail::NodeKind::Min, a.node_, b.node_));
}

}  // namespace planar
