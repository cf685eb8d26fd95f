#include "doctest.h"

#include <cmath>
#include <random>

#include "goldfusion/quadint.hpp"

using goldfusion::QuadInt;

TEST_CASE("golden identity phi^2 = phi + 1")
{
    CHECK(QuadInt(0, 1) * QuadInt(0, 1) == QuadInt(1, 1));
    CHECK(QuadInt(1, 1) * QuadInt(0, 1) == QuadInt(1, 2));  // phi^3 = 2 phi + 1
    CHECK(QuadInt(2, 1) * QuadInt(2, 1) == QuadInt(5, 5));  // (2 + phi)^2
}

TEST_CASE("embedding and exact sign")
{
    CHECK(QuadInt(0, 0).embed() == 0.0);
    CHECK(QuadInt(0, 0).sign() == 0);
    CHECK(QuadInt(2, 1).embed() == doctest::Approx(3.6180339887).epsilon(1e-9));
    CHECK(QuadInt(2, 1).sign() == 1);
    CHECK(QuadInt(1, -1).embed() == doctest::Approx(-0.6180339887).epsilon(1e-9));
    CHECK(QuadInt(1, -1).sign() == -1);
    // Fibonacci convergents: values phi^-k, tiny but of definite sign
    CHECK(QuadInt(13, -8).sign() == 1);    // phi^-6
    CHECK(QuadInt(-13, 8).sign() == -1);
    CHECK(QuadInt(-21, 13).sign() == 1);   // phi^-7
    CHECK(QuadInt(34, -21).sign() == 1);
}

TEST_CASE("galois conjugation")
{
    CHECK(QuadInt(0, 1).galois_conjugate() == QuadInt(1, -1));
    CHECK(QuadInt(2, 1).galois_conjugate() == QuadInt(3, -1));  // (5 - sqrt 5)/2
    CHECK(QuadInt(0, 0).galois_conjugate() == QuadInt(0, 0));
}

TEST_CASE("ring laws and conjugation morphism on random elements")
{
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::int64_t> dist(-1000, 1000);
    for (int i = 0; i < 2000; ++i) {
        QuadInt a(dist(rng), dist(rng)), b(dist(rng), dist(rng)), c(dist(rng), dist(rng));
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a.galois_conjugate().galois_conjugate() == a);
        CHECK((a * b).galois_conjugate() == a.galois_conjugate() * b.galois_conjugate());
        CHECK((a + b).galois_conjugate() == a.galois_conjugate() + b.galois_conjugate());
        // exact sign agrees with the embedding away from zero
        if (std::abs(a.embed()) > 1e-6) CHECK(a.sign() == (a.embed() > 0 ? 1 : -1));
    }
}

TEST_CASE("sign orders the ring consistently")
{
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-500, 500);
    for (int i = 0; i < 1000; ++i) {
        QuadInt a(dist(rng), dist(rng)), b(dist(rng), dist(rng)), c(dist(rng), dist(rng));
        if (a < b) {
            CHECK(a + c < b + c);
            if (c.sign() > 0) CHECK(a * c < b * c);
        }
    }
}

TEST_CASE("overflow is a hard failure")
{
    QuadInt big(std::int64_t{1} << 62, 0);
    CHECK_THROWS_AS(big * big, std::overflow_error);
    CHECK_THROWS_AS(big + big, std::overflow_error);
}
