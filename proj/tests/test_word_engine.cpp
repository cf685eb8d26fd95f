#include "doctest.h"

#include <random>

#include "goldfusion/constructors.hpp"
#include "goldfusion/word_engine.hpp"

using namespace goldfusion;

namespace {

Word random_word(std::mt19937_64& rng, std::uint32_t generators, std::size_t max_len)
{
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<std::uint32_t> letter(0, generators - 1);
    Word w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.push_back(static_cast<char>('a' + letter(rng)));
    return w;
}

// normalize by rewriting a randomly chosen adjacent pair at each step
WordSum normalize_random_order(const Word& raw, std::mt19937_64& rng)
{
    WordSum out;
    std::vector<Word> stack{raw};
    while (!stack.empty()) {
        std::uniform_int_distribution<std::size_t> pick_stack(0, stack.size() - 1);
        std::size_t si = pick_stack(rng);
        std::swap(stack[si], stack.back());
        Word w = std::move(stack.back());
        stack.pop_back();
        std::vector<std::size_t> pairs;
        for (std::size_t i = 1; i < w.size(); ++i)
            if (w[i] == w[i - 1]) pairs.push_back(i);
        if (pairs.empty()) {
            out.push_back(std::move(w));
            continue;
        }
        std::uniform_int_distribution<std::size_t> pick(0, pairs.size() - 1);
        std::size_t i = pairs[pick(rng)];
        stack.push_back(w.substr(0, i - 1) + w.substr(i + 1));
        stack.push_back(w.substr(0, i) + w.substr(i + 1));
    }
    std::sort(out.begin(), out.end(), shortlex_less);
    return out;
}

}  // namespace

TEST_CASE("normalize: fixed cases")
{
    CHECK(normalize("aa") == WordSum{"", "a"});
    CHECK(normalize("abb") == WordSum{"a", "ab"});
    CHECK(normalize("abba") == WordSum{"", "a", "aba"});
    CHECK(normalize("abc") == WordSum{"abc"});
    CHECK(normalize("") == WordSum{""});
}

TEST_CASE("normalize_sum flattens raw sums")
{
    CHECK(normalize_sum({"aa", "b"}) == WordSum{"", "a", "b"});
}

TEST_CASE("normalize is confluent on random words")
{
    std::mt19937_64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        Word w = random_word(rng, 3, 12);
        CHECK(normalize(w) == normalize_random_order(w, rng));
    }
}

TEST_CASE("word_tensor")
{
    CHECK(word_tensor({"ab"}, {"ba"}) == WordSum{"", "a", "aba"});
    CHECK(word_tensor({""}, {"abc"}) == WordSum{"abc"});
    CHECK(word_tensor({"ab"}, {"ca"}) == WordSum{"abca"});
    // associativity on random sums
    std::mt19937_64 rng(103);
    for (int i = 0; i < 200; ++i) {
        WordSum a = normalize(random_word(rng, 3, 6));
        WordSum b = normalize(random_word(rng, 3, 6));
        WordSum c = normalize(random_word(rng, 3, 6));
        CHECK(word_tensor(word_tensor(a, b), c) == word_tensor(a, word_tensor(b, c)));
    }
}

TEST_CASE("evaluate into concrete rings")
{
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};

    ObjectVec v = evaluate(WordSum{"ab"}, tt3, rm);
    ObjectVec want(tt3.rank(), 0);
    want[*tt3.index_of("sigmabar")] = 1;
    CHECK(v == want);

    // empty word evaluates to the unit
    ObjectVec unit(tt3.rank(), 0);
    unit[tt3.unit()] = 1;
    CHECK(evaluate(WordSum{""}, tt3, rm) == unit);

    FusionRing ff = deligne_power(make_fib(), 2);
    GeneratorAssignment tt{*ff.index_of("tau1"), *ff.index_of("tau2")};
    ObjectVec aba = evaluate(WordSum{"aba"}, ff, tt);
    ObjectVec want2(ff.rank(), 0);
    want2[*ff.index_of("tau2")] = 1;
    want2[*ff.index_of("tau1.tau2")] = 1;
    CHECK(aba == want2);

    // non-Fibonacci assignment targets are rejected
    GeneratorAssignment bad{*tt3.index_of("sigma"), *tt3.index_of("mu")};
    CHECK_THROWS_AS(evaluate(WordSum{"ab"}, tt3, bad), std::invalid_argument);
}

TEST_CASE("evaluate respects normalize on random raw words")
{
    std::mt19937_64 rng(107);
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};
    for (int i = 0; i < 300; ++i) {
        Word w = random_word(rng, 2, 10);
        CHECK(evaluate(WordSum{w}, tt3, rm) == evaluate(normalize(w), tt3, rm));
    }
}

TEST_CASE("presentation consistency")
{
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};

    Presentation braid{2, {{"aba", "bab"}}};
    CHECK(check_presentation_consistency(braid, tt3, rm).consistent);

    Presentation comm{2, {{"ab", "ba"}}};
    ConsistencyReport rep = check_presentation_consistency(comm, tt3, rm);
    CHECK(!rep.consistent);
    CHECK(rep.failing_relation == 0);

    FusionRing ff = deligne_power(make_fib(), 2);
    GeneratorAssignment tt{*ff.index_of("tau1"), *ff.index_of("tau2")};
    CHECK(check_presentation_consistency(comm, ff, tt).consistent);
}

TEST_CASE("word_end_dim")
{
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};
    CHECK(word_end_dim("ab", tt3, rm) == 1);
    CHECK(word_end_dim("abab", tt3, rm) == 2);
    CHECK(word_end_dim("", tt3, rm) == 1);
    // bab = mu rho mu lands on f2, a simple object
    CHECK(word_end_dim("bab", tt3, rm) == 1);
}

TEST_CASE("cyclic words")
{
    CHECK(cyclic_word('a', 5, 3) == "abcab");
    CHECK(cyclic_word('b', 4, 3) == "bcab");
    CHECK(cyclic_word('a', 0, 3) == "");
}

TEST_CASE("cyclic words stay simple up to the first relation length")
{
    // in TT3 the generators satisfy aba = bab and nothing shorter, so
    // alternating words of length <= 3 are simple and length 4 is not
    FusionRing tt3 = make_tt3();
    GeneratorAssignment rm{*tt3.index_of("rho"), *tt3.index_of("mu")};
    for (char start : {'a', 'b'})
        for (std::size_t n = 0; n <= 3; ++n)
            CHECK(word_end_dim(cyclic_word(start, n, 2), tt3, rm) == 1);
    CHECK(word_end_dim(cyclic_word('a', 4, 2), tt3, rm) == 2);
}

TEST_CASE("divide_left/right undo multiplication")
{
    std::mt19937_64 rng(109);
    for (int i = 0; i < 500; ++i) {
        WordSum s = normalize(random_word(rng, 3, 8));
        for (char x : {'a', 'b', 'c'}) {
            WordSum xs = word_tensor({Word(1, x)}, s);
            auto back = divide_left(x, xs);
            REQUIRE(back.has_value());
            CHECK(*back == s);
            WordSum sx = word_tensor(s, {Word(1, x)});
            auto back2 = divide_right(x, sx);
            REQUIRE(back2.has_value());
            CHECK(*back2 == s);
        }
    }
    // a case with no quotient
    CHECK(divide_left('a', WordSum{"b"}) == std::nullopt);
}
