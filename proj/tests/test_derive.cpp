#include "doctest.h"

#include "goldfusion/constructors.hpp"
#include "goldfusion/word_engine.hpp"

using namespace goldfusion;

namespace {

bool concludes(const DeriveOutcome& out, const char* l, const char* r)
{
    if (!out.collapsed || !out.derivation) return false;
    const DeriveStep& last = out.derivation->steps.back();
    WordSum a{Word(l)}, b{Word(r)};
    return (last.lhs == a && last.rhs == b) || (last.lhs == b && last.rhs == a);
}

// Replay targets where the presentation's relations hold. Collapsing all
// letters onto a single Fibonacci object is consistent for every
// length-balanced presentation, so it always exercises the rules.
void check_sound_replay(const Presentation& p, const DeriveOutcome& out)
{
    REQUIRE(out.derivation.has_value());
    struct Target {
        FusionRing ring;
        GeneratorAssignment assign;
    };
    std::vector<Target> targets;

    FusionRing fib = make_fib();
    targets.push_back({fib, GeneratorAssignment(p.generators, *fib.index_of("tau"))});

    FusionRing f3 = deligne_power(make_fib(), 3);
    if (p.generators <= 3) {
        GeneratorAssignment ta;
        for (std::uint32_t i = 0; i < p.generators; ++i)
            ta.push_back(*f3.index_of("tau" + std::to_string(i + 1)));
        targets.push_back({f3, ta});
    }
    FusionRing tt3 = make_tt3();
    if (p.generators == 2)
        targets.push_back({tt3, {*tt3.index_of("rho"), *tt3.index_of("mu")}});

    int replayed = 0;
    for (const Target& t : targets) {
        if (!check_presentation_consistency(p, t.ring, t.assign).consistent) continue;
        ++replayed;
        CHECK(replay_derivation(*out.derivation, t.ring, t.assign));
    }
    CHECK(replayed > 0);
}

}  // namespace

TEST_CASE("commuting braid generators collapse: a = b")
{
    Presentation p{2, {{"ab", "ba"}, {"aba", "bab"}}};
    DeriveOutcome out = derive_collapse(p);
    CHECK(out.collapsed);
    CHECK(concludes(out, "a", "b"));
    check_sound_replay(p, out);
}

TEST_CASE("length-5 cyclic relation with only a,b commuting: a = c")
{
    Presentation p{3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"abcab", "bcaba"}}};
    DeriveOutcome out = derive_collapse(p);
    CHECK(out.collapsed);
    CHECK(concludes(out, "a", "c"));
    check_sound_replay(p, out);
}

TEST_CASE("length-2 cyclic relation with only a,c commuting: a = c")
{
    Presentation p{3, {{"ac", "ca"}, {"aba", "bab"}, {"bcb", "cbc"}, {"ab", "bc"}}};
    // the presentation also collapses other pairs; ask for the a = c proof
    DeriveOutcome out = derive_collapse(p, {}, std::make_pair('a', 'c'));
    CHECK(out.collapsed);
    CHECK(concludes(out, "a", "c"));
    check_sound_replay(p, out);

    // without a target some collapse is still found
    DeriveOutcome any = derive_collapse(p);
    CHECK(any.collapsed);
}

TEST_CASE("small cyclic relations collapse across the commutation case grid")
{
    // one commuting pair + braid relations on the other pairs + a short
    // cyclic relation: each such presentation forces a generator collapse
    std::vector<Presentation> cases = {
        {3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"ab", "bc"}}},
        {3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"abc", "bca"}}},
        {3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"abca", "bcab"}}},
        {3, {{"bc", "cb"}, {"aba", "bab"}, {"aca", "cac"}, {"ab", "bc"}}},
        {3, {{"ac", "ca"}, {"aba", "bab"}, {"bcb", "cbc"}, {"abc", "bca"}}},
        {3, {{"ac", "ca"}, {"aba", "bab"}, {"bcb", "cbc"}, {"abca", "bcab"}}},
        {3, {{"ac", "ca"}, {"aba", "bab"}, {"bcb", "cbc"}, {"abcab", "bcaba"}}},
    };
    for (const Presentation& p : cases) {
        DeriveOutcome out = derive_collapse(p);
        CHECK(out.collapsed);
        check_sound_replay(p, out);
    }
}

TEST_CASE("shift equalities contradict the braid relations at small lengths")
{
    // under all three braid relations, a cyclic word can never equal its
    // b-prefixed shift; asserting the equality must collapse two generators
    for (std::size_t n = 2; n <= 7; ++n) {
        Word lhs = cyclic_word('a', n, 3);
        Word rhs = "b" + cyclic_word('a', n - 1, 3);
        Presentation p{3, {{"aba", "bab"}, {"bcb", "cbc"}, {"aca", "cac"}, {lhs, rhs}}};
        DeriveOutcome out = derive_collapse(p);
        CHECK_MESSAGE(out.collapsed, "shift length ", n);
        check_sound_replay(p, out);
    }
}

TEST_CASE("the braid relation alone does not collapse")
{
    Presentation p{2, {{"aba", "bab"}}};
    DeriveOutcome out = derive_collapse(p);
    CHECK(!out.collapsed);
    CHECK(out.stats.derived > 0);

    // consistency witness: TT3 with a -> rho, b -> mu realizes the relation,
    // so no sound engine can derive a collapse
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};
    CHECK(check_presentation_consistency(p, tt3, rm).consistent);
}

TEST_CASE("derivations are deterministic")
{
    Presentation p{2, {{"ab", "ba"}, {"aba", "bab"}}};
    DeriveOutcome a = derive_collapse(p);
    DeriveOutcome b = derive_collapse(p);
    REQUIRE(a.derivation.has_value());
    REQUIRE(b.derivation.has_value());
    REQUIRE(a.derivation->steps.size() == b.derivation->steps.size());
    for (std::size_t i = 0; i < a.derivation->steps.size(); ++i) {
        CHECK(a.derivation->steps[i].rule == b.derivation->steps[i].rule);
        CHECK(a.derivation->steps[i].lhs == b.derivation->steps[i].lhs);
        CHECK(a.derivation->steps[i].rhs == b.derivation->steps[i].rhs);
    }
}

TEST_CASE("derivation structure is well formed")
{
    Presentation p{3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"abcab", "bcaba"}}};
    DeriveOutcome out = derive_collapse(p);
    REQUIRE(out.derivation.has_value());
    const auto& steps = out.derivation->steps;
    for (std::size_t i = 0; i < steps.size(); ++i) {
        for (std::size_t pr : steps[i].premises) CHECK(pr < i);
        if (steps[i].rule == "relation") CHECK(steps[i].premises.empty());
    }
}

TEST_CASE("tight budgets exhaust gracefully")
{
    Presentation p{3, {{"ab", "ba"}, {"bcb", "cbc"}, {"aca", "cac"}, {"abcab", "bcaba"}}};
    DeriveBudget tiny;
    tiny.max_equalities = 10;
    DeriveOutcome out = derive_collapse(p, tiny);
    CHECK(!out.collapsed);
    CHECK(out.stats.budget_hit);
}
