#pragma once

#include <algorithm>
#include <optional>
#include <string>

#include "lcseq/rational.hpp"
#include "lcseq/sequence.hpp"

namespace lcseq {

enum class RelationKind { Sync, Partial, Weak };

inline const char* to_string(RelationKind k) {
  switch (k) {
    case RelationKind::Sync: return "sync";
    case RelationKind::Partial: return "partial";
    case RelationKind::Weak: return "weak";
  }
  return "?";
}

/// One violated instance of a relation's defining inequality, with the two
/// sides stored in the inequality's literal orientation:
///
///   sync     a_{k-1} b_{k+1} <= a_k b_k  (and the mirrored product);
///            violation has lhs > rhs, m = n = k
///   weak     a_{k-1} b_{k+1} + a_{k+1} b_{k-1} <= 2 a_k b_k;
///            violation has lhs > rhs, m = n = k
///   partial  f(m,n) >= f(m+1,n-1) for m >= n, f(m,n) = a_m b_n + a_n b_m;
///            violation has lhs < rhs
///
/// Reported violations are canonical: the smallest violating k, and for the
/// partial relation the smallest m-n first, then the smallest m. This makes
/// reports reproducible across runs and across any parallel partitioning.
struct Violation {
  Index m = 0;
  Index n = 0;
  Rational lhs;
  Rational rhs;

  friend bool operator==(const Violation& a, const Violation& b) {
    return a.m == b.m && a.n == b.n && a.lhs == b.lhs && a.rhs == b.rhs;
  }
};

struct RelationReport {
  bool holds = true;
  std::optional<Violation> violation;
  /// For the partial fast path only: which condition of the finite-range
  /// characterization failed (1, 2 or 3).
  std::optional<int> failed_condition;
};

namespace detail {

inline void require_in_l(const Sequence& a, const char* side) {
  const SeqClass c = classify(a);
  if (c == SeqClass::LZero || c == SeqClass::LStar) return;
  throw NotInLError(std::string(side) + " operand is not in L (" + to_string(c) + ")");
}

}  // namespace detail

/// f(A,B; m,n) = a_m b_n + a_n b_m, with zero-extension. Commutative in (m,n).
inline Rational f_pair(const Sequence& a, const Sequence& b, Index m, Index n) {
  return a.term(m) * b.term(n) + a.term(n) * b.term(m);
}

/// Synchronized: a_{k-1} b_{k+1} <= a_k b_k and a_{k+1} b_{k-1} <= a_k b_k
/// for all k. Both inputs must lie in L; the zero sequence is synchronized
/// with everything. `extra_window` widens the scan window beyond the exact
/// reduction [min head - 1, max tail + 1] and must never change the result.
inline RelationReport is_synchronized(const Sequence& a, const Sequence& b,
                                      Index extra_window = 0) {
  detail::require_in_l(a, "left");
  detail::require_in_l(b, "right");
  if (a.is_zero() || b.is_zero()) return {};
  const Index lo = std::min(head_index(a), head_index(b)) - 1 - extra_window;
  const Index hi = std::max(tail_index(a), tail_index(b)) + 1 + extra_window;
  for (Index k = lo; k <= hi; ++k) {
    const Rational center = a.term(k) * b.term(k);
    Rational cross = a.term(k - 1) * b.term(k + 1);
    if (cross > center) return {false, Violation{k, k, cross, center}, {}};
    cross = a.term(k + 1) * b.term(k - 1);
    if (cross > center) return {false, Violation{k, k, cross, center}, {}};
  }
  return {};
}

/// Weakly synchronized: a_{k-1} b_{k+1} + a_{k+1} b_{k-1} <= 2 a_k b_k
/// for all k.
inline RelationReport is_weakly_synchronized(const Sequence& a, const Sequence& b,
                                             Index extra_window = 0) {
  detail::require_in_l(a, "left");
  detail::require_in_l(b, "right");
  if (a.is_zero() || b.is_zero()) return {};
  const Index lo = std::min(head_index(a), head_index(b)) - 1 - extra_window;
  const Index hi = std::max(tail_index(a), tail_index(b)) + 1 + extra_window;
  for (Index k = lo; k <= hi; ++k) {
    const Rational center = a.term(k) * b.term(k);
    const Rational cross = a.term(k - 1) * b.term(k + 1) + a.term(k + 1) * b.term(k - 1);
    if (cross > center + center) return {false, Violation{k, k, cross, center + center}, {}};
  }
  return {};
}

/// Partially synchronized, decided straight from the definition:
/// f(m,n) >= f(m+1,n-1) for all m >= n. Both sides vanish outside the window
/// [min head - 2, max tail + 2] (one index of slack where a single side can
/// still be nonzero, one more as a guard). This is the definitional oracle
/// against which the fast path below is validated.
inline RelationReport is_partially_synchronized_bruteforce(const Sequence& a, const Sequence& b,
                                                           Index extra_window = 0) {
  detail::require_in_l(a, "left");
  detail::require_in_l(b, "right");
  if (a.is_zero() || b.is_zero()) return {};
  const Index lo = std::min(head_index(a), head_index(b)) - 2 - extra_window;
  const Index hi = std::max(tail_index(a), tail_index(b)) + 2 + extra_window;
  for (Index d = 0; d <= hi - lo; ++d) {
    for (Index n = lo; n + d <= hi; ++n) {
      const Index m = n + d;
      const Rational lhs = f_pair(a, b, m, n);
      const Rational rhs = f_pair(a, b, m + 1, n - 1);
      if (lhs < rhs) return {false, Violation{m, n, lhs, rhs}, {}};
    }
  }
  return {};
}

/// Partially synchronized via the finite-range characterization: for
/// A, B in L*, A ~p B iff
///   (i)   |h(A) - h(B)| <= 1,
///   (ii)  |t(A) - t(B)| <= 1, and
///   (iii) f(m,n) >= f(m+1,n-1) on the rectangle
///         max(h) <= m <= max(t)-1,  min(h)+1 <= n <= min(t),  m >= n.
/// The zero sequence is partially synchronized with every member of L
/// (every f value is 0), so it is handled before the characterization.
/// Must agree with is_partially_synchronized_bruteforce on all inputs.
inline RelationReport is_partially_synchronized(const Sequence& a, const Sequence& b,
                                                Index extra_window = 0) {
  detail::require_in_l(a, "left");
  detail::require_in_l(b, "right");
  if (a.is_zero() || b.is_zero()) return {};
  const Index ha = head_index(a), hb = head_index(b);
  const Index ta = tail_index(a), tb = tail_index(b);
  const Index mh = std::min(ha, hb), Mh = std::max(ha, hb);
  const Index mt = std::min(ta, tb), Mt = std::max(ta, tb);

  if (Mh - mh > 1) {
    // f(Mh-1, mh+1) = 0 < f(Mh, mh): a genuine defining-inequality violation.
    RelationReport r{false, Violation{Mh - 1, mh + 1, f_pair(a, b, Mh - 1, mh + 1), f_pair(a, b, Mh, mh)}, 1};
    return r;
  }
  if (Mt - mt > 1) {
    RelationReport r{false, Violation{Mt - 1, mt + 1, f_pair(a, b, Mt - 1, mt + 1), f_pair(a, b, Mt, mt)}, 2};
    return r;
  }

  const Index m_lo = Mh - extra_window, m_hi = Mt - 1 + extra_window;
  const Index n_lo = mh + 1 - extra_window, n_hi = mt + extra_window;
  // Scan in the same canonical order as the oracle: m-n ascending, then m.
  for (Index d = 0; d <= m_hi - n_lo; ++d) {
    const Index n_from = std::max(n_lo, m_lo - d);
    const Index n_to = std::min(n_hi, m_hi - d);
    for (Index n = n_from; n <= n_to; ++n) {
      const Index m = n + d;
      const Rational lhs = f_pair(a, b, m, n);
      const Rational rhs = f_pair(a, b, m + 1, n - 1);
      if (lhs < rhs) return {false, Violation{m, n, lhs, rhs}, 3};
    }
  }
  return {};
}

/// Dispatch by kind; Partial uses the fast path.
inline RelationReport check_relation(RelationKind kind, const Sequence& a, const Sequence& b) {
  switch (kind) {
    case RelationKind::Sync: return is_synchronized(a, b);
    case RelationKind::Weak: return is_weakly_synchronized(a, b);
    case RelationKind::Partial: return is_partially_synchronized(a, b);
  }
  return {};
}

}  // namespace lcseq
