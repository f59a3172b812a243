#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lcseq/rational.hpp"
#include "lcseq/relations.hpp"
#include "lcseq/sequence.hpp"
#include "lcseq/theorems.hpp"

namespace lcseq {

/// Conjecture catalog for the counterexample search. The expected status is
/// advisory output only; searches treat every conjecture the same way.
enum class ConjectureId {
  WeakConvolution,     // A ~w B  =>  A*C ~w B*C        (refutable)
  PartialConvolution,  // A ~p B  =>  A*C ~p B*C        (holds)
  SyncConvolution,     // A ~ B   =>  A*C ~ B*C         (holds)
  PartialTransitivity, // A ~p B and B ~p C  =>  A ~p C (refutable)
  WeakImpliesPartial,  // A ~w B  =>  A ~p B            (refutable)
  PartialImpliesSync,  // A ~p B  =>  A ~ B             (refutable)
};

inline constexpr int conjecture_arity(ConjectureId id) {
  switch (id) {
    case ConjectureId::WeakConvolution:
    case ConjectureId::PartialConvolution:
    case ConjectureId::SyncConvolution:
    case ConjectureId::PartialTransitivity:
      return 3;
    case ConjectureId::WeakImpliesPartial:
    case ConjectureId::PartialImpliesSync:
      return 2;
  }
  return 0;
}

inline constexpr bool conjecture_expected_refutable(ConjectureId id) {
  switch (id) {
    case ConjectureId::PartialConvolution:
    case ConjectureId::SyncConvolution:
      return false;
    default:
      return true;
  }
}

inline const char* conjecture_name(ConjectureId id) {
  switch (id) {
    case ConjectureId::WeakConvolution: return "weak-convolution";
    case ConjectureId::PartialConvolution: return "partial-convolution";
    case ConjectureId::SyncConvolution: return "sync-convolution";
    case ConjectureId::PartialTransitivity: return "partial-transitivity";
    case ConjectureId::WeakImpliesPartial: return "weak-implies-partial";
    case ConjectureId::PartialImpliesSync: return "partial-implies-sync";
  }
  return "?";
}

inline std::optional<ConjectureId> parse_conjecture(std::string_view name) {
  for (ConjectureId id :
       {ConjectureId::WeakConvolution, ConjectureId::PartialConvolution,
        ConjectureId::SyncConvolution, ConjectureId::PartialTransitivity,
        ConjectureId::WeakImpliesPartial, ConjectureId::PartialImpliesSync})
    if (name == conjecture_name(id)) return id;
  return std::nullopt;
}

inline std::string conjecture_statement(ConjectureId id) {
  switch (id) {
    case ConjectureId::WeakConvolution: return "A ~w B  =>  A*C ~w B*C";
    case ConjectureId::PartialConvolution: return "A ~p B  =>  A*C ~p B*C";
    case ConjectureId::SyncConvolution: return "A ~ B  =>  A*C ~ B*C";
    case ConjectureId::PartialTransitivity: return "A ~p B and B ~p C  =>  A ~p C";
    case ConjectureId::WeakImpliesPartial: return "A ~w B  =>  A ~p B";
    case ConjectureId::PartialImpliesSync: return "A ~p B  =>  A ~ B";
  }
  return "?";
}

enum class SearchMode { Exhaustive, Random };

/// Search bounds. Exhaustive mode ignores seed and budget; enumeration order
/// is the canonical (length, terms)-lexicographic order of
/// enumerate_candidates().
struct SearchConfig {
  Index max_len = 3;
  Index max_value = 4;
  SearchMode mode = SearchMode::Exhaustive;
  std::uint64_t seed = 0;
  std::uint64_t budget = 10000;  // candidate tuples examined (Random mode)
};

/// A counterexample: the sequences, plus the conclusion relation's violation.
/// Re-running the conclusion's definitional check on the stored sequences
/// reproduces `violated_at` exactly; verify_witness() does precisely that.
struct Witness {
  ConjectureId conjecture;
  std::vector<Sequence> sequences;
  Violation violated_at;
};

/// Every canonical integer sequence with head at index 0, length <= max_len
/// and values in [0, max_value], plus the zero sequence, deduplicated, in
/// lexicographic order of (length, terms). Identical across runs; callers
/// filter to L* as needed.
inline std::vector<Sequence> enumerate_candidates(const SearchConfig& config) {
  if (config.max_len < 1 || config.max_value < 1)
    throw Error("search bounds must satisfy max_len >= 1 and max_value >= 1");
  std::vector<Sequence> out;
  out.push_back(Sequence{});
  const long long V = config.max_value;
  for (Index len = 1; len <= config.max_len; ++len) {
    std::vector<long long> t(static_cast<std::size_t>(len));
    auto floor_of = [&](std::size_t p) -> long long {
      return (p == 0 || p + 1 == t.size()) ? 1 : 0;  // outer terms stay positive
    };
    for (std::size_t p = 0; p < t.size(); ++p) t[p] = floor_of(p);
    bool more = true;
    while (more) {
      out.push_back(Sequence::from_ints(0, t));
      more = false;
      std::size_t p = t.size();
      while (p > 0) {
        --p;
        if (t[p] < V) {
          ++t[p];
          for (std::size_t q = p + 1; q < t.size(); ++q) t[q] = floor_of(q);
          more = true;
          break;
        }
      }
    }
  }
  return out;
}

namespace detail {

inline bool conjecture_premise(ConjectureId id, const Sequence& x, const Sequence& y,
                               const Sequence* z, bool bruteforce_partial) {
  auto ps = [&](const Sequence& p, const Sequence& q) {
    return (bruteforce_partial ? is_partially_synchronized_bruteforce(p, q)
                               : is_partially_synchronized(p, q))
        .holds;
  };
  switch (id) {
    case ConjectureId::WeakConvolution: return is_weakly_synchronized(x, y).holds;
    case ConjectureId::PartialConvolution: return ps(x, y);
    case ConjectureId::SyncConvolution: return is_synchronized(x, y).holds;
    case ConjectureId::PartialTransitivity: return ps(x, y) && ps(y, *z);
    case ConjectureId::WeakImpliesPartial: return is_weakly_synchronized(x, y).holds;
    case ConjectureId::PartialImpliesSync: return ps(x, y);
  }
  return false;
}

/// Conclusion evaluated with the definitional checks (brute-force partial),
/// so a failing report's violation is the canonical one a verifier recomputes.
inline RelationReport conjecture_conclusion(ConjectureId id, const Sequence& x, const Sequence& y,
                                            const Sequence* z) {
  switch (id) {
    case ConjectureId::WeakConvolution:
      return is_weakly_synchronized(convolve(x, *z), convolve(y, *z));
    case ConjectureId::PartialConvolution:
      return is_partially_synchronized_bruteforce(convolve(x, *z), convolve(y, *z));
    case ConjectureId::SyncConvolution:
      return is_synchronized(convolve(x, *z), convolve(y, *z));
    case ConjectureId::PartialTransitivity:
      return is_partially_synchronized_bruteforce(x, *z);
    case ConjectureId::WeakImpliesPartial:
      return is_partially_synchronized_bruteforce(x, y);
    case ConjectureId::PartialImpliesSync:
      return is_synchronized(x, y);
  }
  return {};
}

/// Lazily computed rows of the fast partial-synchronicity relation over a
/// candidate pool. Worker-local; purely a memoization, so results do not
/// depend on which worker computes what.
struct PartialRelRows {
  const std::vector<Sequence>* pool = nullptr;
  std::unordered_map<Index, std::vector<char>> rows;

  const std::vector<char>& row(Index i) {
    auto it = rows.find(i);
    if (it != rows.end()) return it->second;
    std::vector<char> r(pool->size());
    for (std::size_t j = 0; j < pool->size(); ++j)
      r[j] = is_partially_synchronized((*pool)[static_cast<std::size_t>(i)], (*pool)[j]).holds ? 1 : 0;
    return rows.emplace(i, std::move(r)).first->second;
  }
};

}  // namespace detail

/// Checks whether the tuple is a counterexample (all members in L*, premise
/// holds, conclusion fails) and if so packages it as a Witness.
inline std::optional<Witness> try_witness(ConjectureId id, std::vector<Sequence> seqs) {
  if (static_cast<int>(seqs.size()) != conjecture_arity(id)) return std::nullopt;
  for (const Sequence& s : seqs)
    if (classify(s) != SeqClass::LStar) return std::nullopt;
  try {
    const Sequence* z = seqs.size() > 2 ? &seqs[2] : nullptr;
    if (!detail::conjecture_premise(id, seqs[0], seqs[1], z, false)) return std::nullopt;
    RelationReport c = detail::conjecture_conclusion(id, seqs[0], seqs[1], z);
    if (c.holds || !c.violation) return std::nullopt;
    return Witness{id, std::move(seqs), *c.violation};
  } catch (const Error&) {
    return std::nullopt;
  }
}

/// Re-evaluates premise and conclusion with the definitional oracles; true
/// iff the premise holds and the conclusion fails with exactly the stored
/// violation.
inline bool verify_witness(const Witness& w) {
  if (static_cast<int>(w.sequences.size()) != conjecture_arity(w.conjecture)) return false;
  try {
    const Sequence* z = w.sequences.size() > 2 ? &w.sequences[2] : nullptr;
    if (!detail::conjecture_premise(w.conjecture, w.sequences[0], w.sequences[1], z, true))
      return false;
    const RelationReport c =
        detail::conjecture_conclusion(w.conjecture, w.sequences[0], w.sequences[1], z);
    if (c.holds || !c.violation) return false;
    return *c.violation == w.violated_at;
  } catch (const Error&) {
    return false;
  }
}

namespace detail {

struct ScanState {
  std::atomic<Index> best_outer;
  std::mutex mu;
  std::array<Index, 3> best_idx;
  std::optional<Witness> best;
  std::atomic<std::uint64_t> examined{0};

  explicit ScanState(Index n) : best_outer(n), best_idx{n, n, n} {}

  void submit(Index i0, Index i1, Index i2, Witness w) {
    std::scoped_lock lock(mu);
    const std::array<Index, 3> idx{i0, i1, i2};
    if (idx < best_idx) {
      best_idx = idx;
      best = std::move(w);
      if (i0 < best_outer.load(std::memory_order_relaxed))
        best_outer.store(i0, std::memory_order_relaxed);
    }
  }

  bool pruned(Index i0) const { return i0 > best_outer.load(std::memory_order_relaxed); }
};

/// Scans this worker's share of outer indices. Inner loops run in ascending
/// order, so the first hit for a given outer index is the lexicographically
/// first tuple there; the merge in ScanState keeps the global lex-minimum,
/// making the result independent of the partitioning.
inline void exhaustive_worker(ConjectureId id, const std::vector<Sequence>& pool, int tid,
                              int stride, ScanState& state) {
  const Index n = static_cast<Index>(pool.size());
  std::uint64_t examined = 0;
  PartialRelRows rel_rows;
  rel_rows.pool = &pool;
  const bool transitivity = id == ConjectureId::PartialTransitivity;
  const int arity = conjecture_arity(id);

  for (Index i = tid; i < n; i += stride) {
    if (state.pruned(i)) continue;
    const Sequence& x = pool[static_cast<std::size_t>(i)];
    bool found_for_i = false;

    if (arity == 2) {
      for (Index j = 0; j < n && !found_for_i; ++j) {
        if (state.pruned(i)) break;
        const Sequence& y = pool[static_cast<std::size_t>(j)];
        ++examined;
        if (!conjecture_premise(id, x, y, nullptr, false)) continue;
        RelationReport c = conjecture_conclusion(id, x, y, nullptr);
        if (c.holds) continue;
        state.submit(i, j, 0, Witness{id, {x, y}, *c.violation});
        found_for_i = true;
      }
    } else if (transitivity) {
      const std::vector<char>& row_i = rel_rows.row(i);
      for (Index j = 0; j < n && !found_for_i; ++j) {
        if (state.pruned(i)) break;
        if (!row_i[static_cast<std::size_t>(j)]) continue;
        const std::vector<char>& row_j = rel_rows.row(j);
        for (Index k = 0; k < n; ++k) {
          if (state.pruned(i)) break;
          ++examined;
          if (!row_j[static_cast<std::size_t>(k)]) continue;
          if (row_i[static_cast<std::size_t>(k)]) continue;
          const Sequence& zc = pool[static_cast<std::size_t>(k)];
          RelationReport c = conjecture_conclusion(id, x, pool[static_cast<std::size_t>(j)], &zc);
          if (c.holds) continue;
          state.submit(i, j, k, Witness{id, {x, pool[static_cast<std::size_t>(j)], zc}, *c.violation});
          found_for_i = true;
          break;
        }
      }
    } else {
      for (Index j = 0; j < n && !found_for_i; ++j) {
        if (state.pruned(i)) break;
        const Sequence& y = pool[static_cast<std::size_t>(j)];
        if (!conjecture_premise(id, x, y, nullptr, false)) continue;
        for (Index k = 0; k < n; ++k) {
          if (state.pruned(i)) break;
          const Sequence& zc = pool[static_cast<std::size_t>(k)];
          ++examined;
          RelationReport c = conjecture_conclusion(id, x, y, &zc);
          if (c.holds) continue;
          state.submit(i, j, k, Witness{id, {x, y, zc}, *c.violation});
          found_for_i = true;
          break;
        }
      }
    }
  }
  state.examined += examined;
}

}  // namespace detail

/// Searches for a counterexample. Exhaustive mode scans candidate tuples in
/// canonical order and returns the first witness (or none after a full
/// scan); the result is identical for any worker count. Random mode draws
/// `budget` tuples from a generator seeded with config.seed, so runs with the
/// same seed and config examine the same stream. `examined_out`, when given,
/// receives the number of candidate tuples inspected.
inline std::optional<Witness> find_counterexample(ConjectureId id, const SearchConfig& config,
                                                  int threads = 1,
                                                  std::uint64_t* examined_out = nullptr) {
  if (config.mode == SearchMode::Random) {
    std::mt19937_64 rng(config.seed);
    auto draw = [&rng](std::uint64_t count) -> std::uint64_t {
      return count > 1 ? rng() % count : 0;
    };
    const int arity = conjecture_arity(id);
    std::uint64_t examined = 0;
    std::optional<Witness> found;
    for (std::uint64_t it = 0; it < config.budget && !found; ++it) {
      std::vector<Sequence> tuple;
      tuple.reserve(static_cast<std::size_t>(arity));
      for (int s = 0; s < arity; ++s) {
        const Index len = 1 + static_cast<Index>(draw(static_cast<std::uint64_t>(config.max_len)));
        std::vector<long long> v(static_cast<std::size_t>(len));
        for (Index i = 0; i < len; ++i) {
          const bool outer = (i == 0 || i == len - 1);
          v[static_cast<std::size_t>(i)] =
              outer ? 1 + static_cast<long long>(draw(static_cast<std::uint64_t>(config.max_value)))
                    : static_cast<long long>(draw(static_cast<std::uint64_t>(config.max_value) + 1));
        }
        tuple.push_back(Sequence::from_ints(0, v));
      }
      ++examined;
      found = try_witness(id, std::move(tuple));
    }
    if (examined_out) *examined_out = examined;
    return found;
  }

  std::vector<Sequence> pool;
  for (Sequence& s : enumerate_candidates(config))
    if (classify(s) == SeqClass::LStar) pool.push_back(std::move(s));

  detail::ScanState state(static_cast<Index>(pool.size()));
  const int workers = std::max(1, threads);
  if (workers == 1) {
    detail::exhaustive_worker(id, pool, 0, 1, state);
  } else {
    std::vector<std::thread> ts;
    ts.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t)
      ts.emplace_back(detail::exhaustive_worker, id, std::cref(pool), t, workers, std::ref(state));
    for (std::thread& t : ts) t.join();
  }
  if (examined_out) *examined_out = state.examined.load();
  return state.best;
}

/// Greedy witness shrinking: repeatedly tries, per sequence, dropping the
/// last term, dropping the first term, then lowering single terms by one,
/// keeping any change that leaves a valid witness. Deterministic; the result
/// still passes verify_witness.
inline Witness minimize_witness(const Witness& w) {
  Witness cur = w;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t s = 0; s < cur.sequences.size() && !improved; ++s) {
      const Sequence& seq = cur.sequences[s];
      if (seq.is_zero()) continue;
      std::vector<std::pair<Index, std::vector<Rational>>> attempts;
      if (seq.length() > 1) {
        attempts.emplace_back(seq.offset(),
                              std::vector<Rational>(seq.terms().begin(), seq.terms().end() - 1));
        attempts.emplace_back(seq.offset() + 1,
                              std::vector<Rational>(seq.terms().begin() + 1, seq.terms().end()));
      }
      for (std::size_t p = 0; p < seq.terms().size(); ++p) {
        if (seq.terms()[p].is_zero()) continue;
        BigRat lowered = seq.terms()[p].raw() - 1;
        if (lowered < 0) lowered = 0;
        std::vector<Rational> t = seq.terms();
        t[p] = Rational(std::move(lowered));
        attempts.emplace_back(seq.offset(), std::move(t));
      }
      for (auto& [off, terms] : attempts) {
        Sequence candidate;
        try {
          candidate = Sequence::from_terms(off, std::move(terms));
        } catch (const Error&) {
          continue;
        }
        std::vector<Sequence> seqs = cur.sequences;
        seqs[s] = std::move(candidate);
        if (auto maybe = try_witness(cur.conjecture, std::move(seqs))) {
          cur = std::move(*maybe);
          improved = true;
          break;
        }
      }
    }
  }
  return cur;
}

/// Bit-exact regression of the counterexample refuting the weak-convolution
/// conjecture: A = (1,20,200,1800), B = (1,6,30,60), C = (40,60,10,1).
/// Checks membership in L*, A ~w B, both convolutions term-for-term, and the
/// weak-synchronicity failure of (A*C, B*C) at k = 2 with margin exactly 5360.
inline TheoremReport verify_paper_example() {
  TheoremReport rep{TheoremId::PaperExample, true, {}};
  auto fail = [&rep](std::string note, BigRat lhs = 0, BigRat rhs = 0,
                     std::vector<Index> idx = {}) {
    rep.holds = false;
    rep.detail = TheoremViolation{std::move(idx), std::move(lhs), std::move(rhs), std::move(note)};
  };
  const Sequence a = Sequence::from_ints(0, {1, 20, 200, 1800});
  const Sequence b = Sequence::from_ints(0, {1, 6, 30, 60});
  const Sequence c = Sequence::from_ints(0, {40, 60, 10, 1});
  if (classify(a) != SeqClass::LStar || classify(b) != SeqClass::LStar ||
      classify(c) != SeqClass::LStar) {
    fail("A, B, C are not all in L*");
    return rep;
  }
  if (!is_weakly_synchronized(a, b).holds) {
    fail("A and B are not weakly synchronized");
    return rep;
  }
  const Sequence ac = convolve(a, c);
  const Sequence bc = convolve(b, c);
  if (!(ac == Sequence::from_ints(0, {40, 860, 9210, 84201, 110020, 18200, 1800}))) {
    fail("A*C differs from the expected coefficients");
    return rep;
  }
  if (!(bc == Sequence::from_ints(0, {40, 300, 1570, 4261, 3906, 630, 60}))) {
    fail("B*C differs from the expected coefficients");
    return rep;
  }
  const RelationReport w = is_weakly_synchronized(ac, bc);
  if (w.holds || !w.violation) {
    fail("(A*C, B*C) is unexpectedly weakly synchronized");
    return rep;
  }
  if (w.violation->m != 2 || w.violation->n != 2) {
    fail("weak-synchronicity violation at unexpected index", 0, 0, {w.violation->m, w.violation->n});
    return rep;
  }
  const BigRat margin = w.violation->lhs.raw() - w.violation->rhs.raw();
  if (margin != 5360) {
    fail("unexpected violation margin", margin, BigRat(5360), {2, 2});
    return rep;
  }
  return rep;
}

}  // namespace lcseq
