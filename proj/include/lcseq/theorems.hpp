#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcseq/rational.hpp"
#include "lcseq/relations.hpp"
#include "lcseq/sequence.hpp"

namespace lcseq {

enum class TheoremId {
  Hierarchy,
  TriangleTransport,
  LinCombLogConcave,
  LinCombPartial,
  ConvolutionPreservation,
  ProofTrace,
  PaperExample,  // built-in counterexample regression (see search.hpp)
};

inline const char* to_string(TheoremId t) {
  switch (t) {
    case TheoremId::Hierarchy: return "hierarchy";
    case TheoremId::TriangleTransport: return "transport";
    case TheoremId::LinCombLogConcave: return "lincomb-logconcave";
    case TheoremId::LinCombPartial: return "lincomb";
    case TheoremId::ConvolutionPreservation: return "convpreserve";
    case TheoremId::ProofTrace: return "trace";
    case TheoremId::PaperExample: return "paper-example";
  }
  return "?";
}

/// Violation record for a failed theorem check. `indices` identifies where
/// (meaning depends on the theorem), lhs/rhs are the exact sides there, and
/// `note` says which sub-check failed. Everything is re-checkable by direct
/// evaluation.
struct TheoremViolation {
  std::vector<Index> indices;
  BigRat lhs;
  BigRat rhs;
  std::string note;
};

struct TheoremReport {
  TheoremId theorem;
  bool holds = true;
  std::optional<TheoremViolation> detail;
};

/// Sync => Partial => Weak for a given pair. Evaluates all three relations
/// (Partial via the definitional oracle) and checks both implications.
inline TheoremReport check_hierarchy(const Sequence& a, const Sequence& b) {
  const RelationReport sync = is_synchronized(a, b);
  const RelationReport partial = is_partially_synchronized_bruteforce(a, b);
  const RelationReport weak = is_weakly_synchronized(a, b);
  TheoremReport rep{TheoremId::Hierarchy, true, {}};
  if (sync.holds && !partial.holds) {
    const Violation& v = *partial.violation;
    rep.holds = false;
    rep.detail = TheoremViolation{{v.m, v.n}, v.lhs.raw(), v.rhs.raw(),
                                  "synchronized pair is not partially synchronized"};
  } else if (partial.holds && !weak.holds) {
    const Violation& v = *weak.violation;
    rep.holds = false;
    rep.detail = TheoremViolation{{v.m, v.n}, v.lhs.raw(), v.rhs.raw(),
                                  "partially synchronized pair is not weakly synchronized"};
  }
  return rep;
}

/// Transport of the step inequality along anti-diagonals: given A ~p B,
/// f(a,b) >= f(c,d) whenever a+b = c+d and |a-b| < |c-d|, for all quadruples
/// in [-window, max tail + window]^4. Throws PremiseFailsError when the pair
/// is not partially synchronized.
inline TheoremReport check_triangle_transport(const Sequence& a, const Sequence& b,
                                              Index window = 3) {
  if (!is_partially_synchronized(a, b).holds)
    throw PremiseFailsError("pair is not partially synchronized; the transport lemma does not apply");
  Index max_tail = 0;
  if (!a.is_zero()) max_tail = std::max(max_tail, tail_index(a));
  if (!b.is_zero()) max_tail = std::max(max_tail, tail_index(b));
  const Index lo = -window, hi = max_tail + window;

  TheoremReport rep{TheoremId::TriangleTransport, true, {}};
  std::vector<Rational> diag(static_cast<std::size_t>(hi - lo + 1));
  for (Index s = 2 * lo; s <= 2 * hi; ++s) {
    const Index x_lo = std::max(lo, s - hi), x_hi = std::min(hi, s - lo);
    for (Index x = x_lo; x <= x_hi; ++x)
      diag[static_cast<std::size_t>(x - x_lo)] = f_pair(a, b, x, s - x);
    for (Index x1 = x_lo; x1 <= x_hi; ++x1) {
      const Index spread1 = std::abs(2 * x1 - s);
      for (Index x2 = x_lo; x2 <= x_hi; ++x2) {
        if (spread1 >= std::abs(2 * x2 - s)) continue;
        const Rational& lhs = diag[static_cast<std::size_t>(x1 - x_lo)];
        const Rational& rhs = diag[static_cast<std::size_t>(x2 - x_lo)];
        if (lhs < rhs) {
          rep.holds = false;
          rep.detail = TheoremViolation{{x1, s - x1, x2, s - x2}, lhs.raw(), rhs.raw(),
                                        "f(a,b) < f(c,d) with a+b = c+d and |a-b| < |c-d|"};
          return rep;
        }
      }
    }
  }
  return rep;
}

/// uA + vB stays in L when A ~p B and u, v >= 0.
inline TheoremReport verify_lincomb_logconcave(const Sequence& a, const Sequence& b,
                                               const Rational& u, const Rational& v) {
  if (!in_L(a) || !in_L(b))
    throw PremiseFailsError("inputs must lie in L");
  if (!is_partially_synchronized(a, b).holds)
    throw PremiseFailsError("pair is not partially synchronized");
  const Sequence s = add(scale(u, a), scale(v, b));
  TheoremReport rep{TheoremId::LinCombLogConcave, true, {}};
  if (in_L(s)) return rep;
  rep.holds = false;
  // Locate a witnessing index for the report.
  const Index lo = s.offset() - 1, hi = s.offset() + s.length();
  for (Index k = lo; k <= hi; ++k) {
    const Rational sq = s.term(k) * s.term(k);
    const Rational prod = s.term(k - 1) * s.term(k + 1);
    if (sq < prod) {
      rep.detail = TheoremViolation{{k}, sq.raw(), prod.raw(), "combination is not log-concave"};
      return rep;
    }
  }
  rep.detail = TheoremViolation{{}, 0, 0, "combination has internal zeros"};
  return rep;
}

/// Pairwise partially synchronized A_i, nonnegative u_i and v_i:
/// sum u_i A_i ~p sum v_i A_i.
inline TheoremReport verify_lincomb_partial(const std::vector<Sequence>& seqs,
                                            const std::vector<Rational>& us,
                                            const std::vector<Rational>& vs) {
  if (us.size() != seqs.size() || vs.size() != seqs.size())
    throw LengthMismatchError("need one u and one v coefficient per sequence");
  for (const Sequence& s : seqs)
    if (!in_L(s)) throw PremiseFailsError("inputs must lie in L");
  for (std::size_t i = 0; i < seqs.size(); ++i)
    for (std::size_t j = i + 1; j < seqs.size(); ++j)
      if (!is_partially_synchronized(seqs[i], seqs[j]).holds)
        throw PremiseFailsError("sequences " + std::to_string(i) + " and " + std::to_string(j) +
                                " are not partially synchronized");
  const Sequence u_comb = lin_comb(us, seqs);
  const Sequence v_comb = lin_comb(vs, seqs);
  TheoremReport rep{TheoremId::LinCombPartial, true, {}};
  try {
    const RelationReport r = is_partially_synchronized(u_comb, v_comb);
    if (!r.holds) {
      const Violation& v = *r.violation;
      rep.holds = false;
      rep.detail = TheoremViolation{{v.m, v.n}, v.lhs.raw(), v.rhs.raw(),
                                    "combinations are not partially synchronized"};
    }
  } catch (const NotInLError&) {
    // Would itself refute the closure lemma: a combination left L.
    rep.holds = false;
    rep.detail = TheoremViolation{{}, 0, 0, "a combination left L"};
  }
  return rep;
}

/// A, B, C in L*, A ~p B: then A*C ~p B*C.
inline TheoremReport verify_convolution_preservation(const Sequence& a, const Sequence& b,
                                                     const Sequence& c) {
  if (classify(a) != SeqClass::LStar || classify(b) != SeqClass::LStar ||
      classify(c) != SeqClass::LStar)
    throw PremiseFailsError("inputs must lie in L*");
  if (!is_partially_synchronized(a, b).holds)
    throw PremiseFailsError("pair is not partially synchronized");
  TheoremReport rep{TheoremId::ConvolutionPreservation, true, {}};
  try {
    const RelationReport r = is_partially_synchronized(convolve(a, c), convolve(b, c));
    if (!r.holds) {
      const Violation& v = *r.violation;
      rep.holds = false;
      rep.detail = TheoremViolation{{v.m, v.n}, v.lhs.raw(), v.rhs.raw(),
                                    "convolutions are not partially synchronized"};
    }
  } catch (const NotInLError&) {
    rep.holds = false;
    rep.detail = TheoremViolation{{}, 0, 0, "a convolution left L"};
  }
  return rep;
}

/// g(k,l) = f(m-k, n-l) - f(m+1-l, n-1-k) for fixed (m,n); the coefficient of
/// c_k c_l in the expansion of f(A*C,B*C;m,n) - f(A*C,B*C;m+1,n-1). Signed:
/// this is the one place negative exact values appear.
inline BigRat g_value(const Sequence& a, const Sequence& b, Index m, Index n, Index k, Index l) {
  return f_pair(a, b, m - k, n - l).raw() - f_pair(a, b, m + 1 - l, n - 1 - k).raw();
}

/// The two sides of the decomposition identity at (m,n): first the double sum
/// sum_{k,l} g(k,l) c_k c_l over the support of C, then the direct difference
/// f(A*C,B*C;m,n) - f(A*C,B*C;m+1,n-1).
inline std::pair<BigRat, BigRat> proof_trace_values(const Sequence& a, const Sequence& b,
                                                    const Sequence& c, Index m, Index n) {
  const Sequence ac = convolve(a, c);
  const Sequence bc = convolve(b, c);
  const BigRat direct = f_pair(ac, bc, m, n).raw() - f_pair(ac, bc, m + 1, n - 1).raw();
  BigRat dsum = 0;
  if (!c.is_zero()) {
    const Index lo = head_index(c), hi = tail_index(c);
    for (Index k = lo; k <= hi; ++k) {
      if (c.term(k).is_zero()) continue;
      for (Index l = lo; l <= hi; ++l) {
        if (c.term(l).is_zero()) continue;
        dsum += g_value(a, b, m, n, k, l) * c.term(k).raw() * c.term(l).raw();
      }
    }
  }
  return {dsum, direct};
}

/// Checks the proof decomposition at one (m,n) with m >= n:
///  (a) the double sum equals the direct difference exactly (an algebraic
///      identity, independent of any relation between A and B), and
///  (b) when A ~p B, the sum is nonnegative.
inline TheoremReport proof_trace(const Sequence& a, const Sequence& b, const Sequence& c,
                                 Index m, Index n) {
  if (classify(a) != SeqClass::LStar || classify(b) != SeqClass::LStar ||
      classify(c) != SeqClass::LStar)
    throw PremiseFailsError("inputs must lie in L*");
  if (m < n) throw PremiseFailsError("need m >= n");
  const auto [dsum, direct] = proof_trace_values(a, b, c, m, n);
  TheoremReport rep{TheoremId::ProofTrace, true, {}};
  if (dsum != direct) {
    rep.holds = false;
    rep.detail = TheoremViolation{{m, n}, dsum, direct, "decomposition sum differs from direct difference"};
    return rep;
  }
  if (is_partially_synchronized(a, b).holds && dsum < 0) {
    rep.holds = false;
    rep.detail = TheoremViolation{{m, n}, dsum, 0, "sum is negative although the pair is partially synchronized"};
  }
  return rep;
}

}  // namespace lcseq
