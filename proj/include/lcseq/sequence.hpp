#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

#include "lcseq/rational.hpp"

namespace lcseq {

/// Finitely supported sequence of nonnegative rationals, identified with its
/// doubly infinite zero-extension. Canonical form: the stored term list is
/// empty (the zero sequence) or starts and ends with a positive term, and
/// `offset` is the index of the first stored term (the head index). Heads are
/// required to be >= 0. Interior zeros are representable; whether they are
/// allowed is a question for classify(), not for the type.
class Sequence {
 public:
  /// The zero sequence (0).
  Sequence() = default;

  /// Canonicalizes: trims outer zeros, adjusts the offset. All-zero input
  /// yields the zero sequence. Throws NegativeHeadError if the head of the
  /// trimmed result would sit below index 0.
  static Sequence from_terms(Index offset, std::vector<Rational> terms) {
    std::size_t first = 0;
    while (first < terms.size() && terms[first].is_zero()) ++first;
    if (first == terms.size()) return Sequence{};
    std::size_t last = terms.size();
    while (terms[last - 1].is_zero()) --last;
    const Index head = offset + static_cast<Index>(first);
    if (head < 0)
      throw NegativeHeadError("head index " + std::to_string(head) + " is negative");
    Sequence s;
    s.offset_ = head;
    s.terms_.assign(std::make_move_iterator(terms.begin() + static_cast<std::ptrdiff_t>(first)),
                    std::make_move_iterator(terms.begin() + static_cast<std::ptrdiff_t>(last)));
    return s;
  }

  /// Same, from raw signed rationals. Throws NegativeTermError on any
  /// negative entry.
  static Sequence from_terms(Index offset, const std::vector<BigRat>& terms) {
    std::vector<Rational> checked;
    checked.reserve(terms.size());
    for (const BigRat& t : terms) checked.emplace_back(t);
    return from_terms(offset, std::move(checked));
  }

  static Sequence from_ints(Index offset, const std::vector<long long>& terms) {
    std::vector<Rational> checked;
    checked.reserve(terms.size());
    for (long long t : terms) checked.emplace_back(t);
    return from_terms(offset, std::move(checked));
  }

  static Sequence from_ints(Index offset, std::initializer_list<long long> terms) {
    return from_ints(offset, std::vector<long long>(terms));
  }

  bool is_zero() const { return terms_.empty(); }

  /// Head index of a nonzero sequence; 0 for the zero sequence.
  Index offset() const { return offset_; }

  Index length() const { return static_cast<Index>(terms_.size()); }

  const std::vector<Rational>& terms() const { return terms_; }

  /// Term at any integer index, zero outside the stored range.
  const Rational& term(Index k) const {
    static const Rational zero{};
    if (terms_.empty() || k < offset_ || k >= offset_ + length()) return zero;
    return terms_[static_cast<std::size_t>(k - offset_)];
  }

  /// Structural equality; canonical form makes it semantic equality.
  friend bool operator==(const Sequence& a, const Sequence& b) {
    return a.offset_ == b.offset_ && a.terms_ == b.terms_;
  }

 private:
  Index offset_ = 0;
  std::vector<Rational> terms_;
};

/// Index of the first positive term. Throws ZeroSequenceError on (0).
inline Index head_index(const Sequence& a) {
  if (a.is_zero()) throw ZeroSequenceError("head is undefined for the zero sequence");
  return a.offset();
}

/// Index of the last positive term. Throws ZeroSequenceError on (0).
inline Index tail_index(const Sequence& a) {
  if (a.is_zero()) throw ZeroSequenceError("tail is undefined for the zero sequence");
  return a.offset() + a.length() - 1;
}

/// a_k^2 >= a_{k-1} a_{k+1} for all integers k. Checking the window
/// [offset-1, offset+len] suffices: outside it both sides vanish.
inline bool is_log_concave(const Sequence& a) {
  if (a.is_zero()) return true;
  const Index lo = a.offset() - 1;
  const Index hi = a.offset() + a.length();
  for (Index k = lo; k <= hi; ++k) {
    if (a.term(k) * a.term(k) < a.term(k - 1) * a.term(k + 1)) return false;
  }
  return true;
}

/// True iff some zero lies strictly between two positive terms. On a
/// canonical sequence this means some stored term is zero.
inline bool has_internal_zeros(const Sequence& a) {
  for (const Rational& t : a.terms())
    if (t.is_zero()) return true;
  return false;
}

enum class SeqClass {
  NotLogConcave,
  LogConcaveWithInternalZeros,
  LZero,  // the zero sequence; in L
  LStar,  // log-concave, no internal zeros, nonzero
};

inline const char* to_string(SeqClass c) {
  switch (c) {
    case SeqClass::NotLogConcave: return "not-log-concave";
    case SeqClass::LogConcaveWithInternalZeros: return "log-concave-with-internal-zeros";
    case SeqClass::LZero: return "l-zero";
    case SeqClass::LStar: return "l-star";
  }
  return "?";
}

inline SeqClass classify(const Sequence& a) {
  if (a.is_zero()) return SeqClass::LZero;
  if (!is_log_concave(a)) return SeqClass::NotLogConcave;
  if (has_internal_zeros(a)) return SeqClass::LogConcaveWithInternalZeros;
  return SeqClass::LStar;
}

/// Membership in L = log-concave sequences without internal zeros.
inline bool in_L(const Sequence& a) {
  const SeqClass c = classify(a);
  return c == SeqClass::LZero || c == SeqClass::LStar;
}

/// Termwise scalar multiple (u a_k). scale(0, A) = (0).
inline Sequence scale(const Rational& u, const Sequence& a) {
  if (u.is_zero() || a.is_zero()) return Sequence{};
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(a.length()));
  for (const Rational& t : a.terms()) out.push_back(u * t);
  return Sequence::from_terms(a.offset(), std::move(out));
}

/// Index-aligned termwise sum (a_k + b_k).
inline Sequence add(const Sequence& a, const Sequence& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const Index lo = std::min(a.offset(), b.offset());
  const Index hi = std::max(tail_index(a), tail_index(b));
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (Index k = lo; k <= hi; ++k) out.push_back(a.term(k) + b.term(k));
  return Sequence::from_terms(lo, std::move(out));
}

inline Sequence operator+(const Sequence& a, const Sequence& b) { return add(a, b); }

/// Convolution: coefficient sequence of the product of the generating
/// polynomials, (A*B)_k = sum_i a_i b_{k-i}.
inline Sequence convolve(const Sequence& a, const Sequence& b) {
  if (a.is_zero() || b.is_zero()) return Sequence{};
  std::vector<Rational> out(static_cast<std::size_t>(a.length() + b.length() - 1));
  for (std::size_t i = 0; i < a.terms().size(); ++i) {
    if (a.terms()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.terms().size(); ++j) out[i + j] += a.terms()[i] * b.terms()[j];
  }
  return Sequence::from_terms(a.offset() + b.offset(), std::move(out));
}

inline Sequence operator*(const Sequence& a, const Sequence& b) { return convolve(a, b); }

/// sum_i scale(coeffs[i], seqs[i]). Throws LengthMismatchError.
inline Sequence lin_comb(const std::vector<Rational>& coeffs, const std::vector<Sequence>& seqs) {
  if (coeffs.size() != seqs.size())
    throw LengthMismatchError("coefficient list has length " + std::to_string(coeffs.size()) +
                              ", sequence list has length " + std::to_string(seqs.size()));
  Sequence acc;
  for (std::size_t i = 0; i < seqs.size(); ++i) acc = add(acc, scale(coeffs[i], seqs[i]));
  return acc;
}

/// The same terms moved by delta indices. Throws NegativeHeadError if the
/// head would land below 0.
inline Sequence shifted(const Sequence& a, Index delta) {
  if (a.is_zero()) return a;
  std::vector<Rational> terms = a.terms();
  return Sequence::from_terms(a.offset() + delta, std::move(terms));
}

}  // namespace lcseq
