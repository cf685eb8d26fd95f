#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldfusion/fusion_ring.hpp"

namespace goldfusion {

/// A word over N Fibonacci generators, letters 'a', 'b', ... The reduced
/// form has no two equal adjacent letters; adjacent repeats expand through
/// tau (x) tau = 1 + tau and are therefore never stored.
using Word = std::string;

/// Formal N-linear combination of reduced words: a sorted multiset (shortlex
/// order, duplicates adjacent). Multiset equality is the object-equality
/// surrogate.
using WordSum = std::vector<Word>;

bool word_is_reduced(const Word& w);
bool shortlex_less(const Word& a, const Word& b);

/// Rewrites u a a v -> u v + u a v until every summand is reduced. The
/// result is independent of rewrite order.
WordSum normalize(const Word& raw);
WordSum normalize_sum(const WordSum& raw);

/// Concatenate pairwise, then normalize. Associative, unit is the empty word.
WordSum word_tensor(const WordSum& s1, const WordSum& s2);

/// Reversal of every summand; duality, since all generators are self-dual.
WordSum reverse_sum(const WordSum& s);

/// Exact division by a leading generator: the unique U with
/// normalize(x (x) U) = S, when it exists. Uses the same minimal-polynomial
/// inverse as divide_by_fib: U = normalize(x (x) S) minus S as multisets.
std::optional<WordSum> divide_left(char x, const WordSum& s);
std::optional<WordSum> divide_right(char x, const WordSum& s);

/// Relation set defining a quotient of Fib^{*N}. Relation sides are
/// nonempty reduced words.
struct Presentation {
    std::uint32_t generators = 0;
    std::vector<std::pair<Word, Word>> relations;

    void validate() const;  // throws std::invalid_argument
};

/// Map from generators to Fibonacci basis elements of a concrete ring.
using GeneratorAssignment = std::vector<std::uint32_t>;  // letter index -> basis index

/// Monoid homomorphism: letters to assigned Fibonacci objects, concatenation
/// to tensor, formal sums to vector sums. Rejects assignments whose targets
/// are not Fibonacci objects of the ring.
ObjectVec evaluate(const WordSum& s, const FusionRing& ring, const GeneratorAssignment& assign);
ObjectVec evaluate_word(const Word& w, const FusionRing& ring, const GeneratorAssignment& assign);

struct ConsistencyReport {
    bool consistent = true;
    std::optional<std::size_t> failing_relation;
};

/// True iff every relation's two sides evaluate to equal object vectors.
ConsistencyReport check_presentation_consistency(const Presentation& p, const FusionRing& ring,
                                                 const GeneratorAssignment& assign);

/// dim Hom(w, w) under the assignment; 1 certifies the image is simple.
std::int64_t word_end_dim(const Word& w, const FusionRing& ring, const GeneratorAssignment& assign);

/// The length-n word cycling through the N generators starting at
/// pattern_start: cyclic_word('a', 5, 3) = "abcab".
Word cyclic_word(char pattern_start, std::size_t n, std::uint32_t generators);

// --- bounded equational derivation -----------------------------------------

struct DeriveBudget {
    std::size_t max_equalities = 50000;
    /// 0 = auto: longest relation length * 2 + 4.
    std::size_t max_word_len = 0;
};

struct DeriveStep {
    std::string rule;                   // relation/substitute/cancel-left/...
    std::vector<std::size_t> premises;  // indices of earlier steps
    WordSum lhs, rhs;
};

/// A replayable proof: step premises always refer to earlier steps, the
/// first steps are the presentation's relations, and the final step is the
/// conclusion.
struct Derivation {
    std::vector<DeriveStep> steps;
};

struct DeriveStats {
    std::size_t derived = 0;    // distinct equalities produced
    std::size_t processed = 0;  // equalities expanded
    bool budget_hit = false;
};

struct DeriveOutcome {
    bool collapsed = false;  // found tau_i = tau_j with i != j
    std::optional<Derivation> derivation;
    DeriveStats stats;
};

/// Breadth-first saturation of the relation set under: subword substitution
/// by known equalities, left/right division by a generator, reversal,
/// one-letter multiplication on either side, and cancellation of common
/// summands. Stops at the first single-letter-to-single-letter equality
/// with distinct letters; budget exhaustion is a normal return.
///
/// An inconsistent presentation usually collapses several generator pairs;
/// `target` restricts the goal to one specific pair (the search continues
/// past other collapses, which remain derived facts along the way).
DeriveOutcome derive_collapse(const Presentation& p, const DeriveBudget& budget = {},
                              std::optional<std::pair<char, char>> target = std::nullopt);

/// Re-checks a derivation inside a concrete ring: every step's equality must
/// evaluate to equal object vectors. Presumes the presentation's relations
/// hold under the assignment.
bool replay_derivation(const Derivation& d, const FusionRing& ring,
                       const GeneratorAssignment& assign);

}  // namespace goldfusion
