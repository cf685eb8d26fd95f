#include "doctest.h"

#include <vector>

#include "goldfusion/constructors.hpp"
#include "goldfusion/ring_json.hpp"
#include "goldfusion/verify.hpp"

using namespace goldfusion;

namespace {

// rebuild a ring with one fusion triple's multiplicity replaced
FusionRing mutate(const FusionRing& ring, std::uint32_t a, std::uint32_t b, std::uint32_t c,
                  std::uint32_t new_mult)
{
    std::vector<FusionTriple> triples;
    for (std::uint32_t i = 0; i < ring.rank(); ++i)
        for (std::uint32_t j = 0; j < ring.rank(); ++j) {
            FusionRing::RowView rv = ring.row(i, j);
            for (std::size_t k = 0; k < rv.n; ++k) {
                std::uint32_t m = rv.m[k];
                if (i == a && j == b && rv.c[k] == c) m = new_mult;
                if (m) triples.push_back({i, j, rv.c[k], m});
            }
        }
    return FusionRing::from_triples(ring.labels(), ring.unit(), ring.dual_perm(), std::move(triples));
}

}  // namespace

TEST_CASE("fib and tt3 pass all axioms")
{
    for (const FusionRing& ring : {make_fib(), make_tt3()}) {
        AxiomReport rep = verify_axioms(ring);
        CHECK(rep.pass());
        AxiomReport ser = verify_axioms_serial(ring);
        CHECK(ser.pass());
    }
    // TT3: associativity over all 6^3 = 216 triples
    AxiomReport rep = verify_axioms_serial(make_tt3());
    CHECK(rep.assoc_triples_checked == 216);
}

TEST_CASE("mutated TT3 is caught with a witness")
{
    FusionRing tt3 = make_tt3();
    std::uint32_t rho = *tt3.index_of("rho");
    std::uint32_t mu = *tt3.index_of("mu");
    std::uint32_t sb = *tt3.index_of("sigmabar");
    FusionRing bad = mutate(tt3, rho, mu, sb, 0);  // erase rho x mu -> sigmabar

    AxiomReport rep = verify_axioms(bad);
    CHECK(!rep.pass());
    CHECK(!rep.assoc_ok);
    CHECK(!rep.frobenius_ok);
    REQUIRE(rep.assoc_witness.has_value());
    REQUIRE(rep.frobenius_witness.has_value());
    // parallel and serial sweeps agree on the lexicographically least witness
    AxiomReport ser = verify_axioms_serial(bad);
    CHECK(!ser.assoc_ok);
    CHECK(ser.assoc_witness == rep.assoc_witness);
    CHECK(ser.frobenius_witness == rep.frobenius_witness);
    // the reciprocity witness is the (a*,c,b) rotation of the erased triple
    std::array<std::uint32_t, 3> want{rho, sb, mu};
    CHECK(*rep.frobenius_witness == want);
}

TEST_CASE("unit and duality violations are reported")
{
    FusionRing fib = make_fib();
    FusionRing bad_unit = mutate(fib, 0, 1, 1, 2);  // 1 x tau = 2 tau
    AxiomReport rep = verify_axioms(bad_unit);
    CHECK(!rep.unit_ok);

    // duality pairing violated: tau x tau loses its unit summand
    FusionRing bad_dual = mutate(fib, 1, 1, 0, 0);
    rep = verify_axioms(bad_dual);
    CHECK(!rep.duality_ok);
}

TEST_CASE("parallel + reduction agrees with serial on structured rings")
{
    std::vector<FusionRing> rings;
    rings.push_back(fib_wreath(1, 2));
    rings.push_back(fib_wreath(2, 1));
    rings.push_back(tt3_wreath(1, 1));
    rings.push_back(deligne_power(make_fib(), 3));
    for (const FusionRing& ring : rings) {
        AxiomReport fast = verify_axioms(ring);
        AxiomReport slow = verify_axioms_serial(ring);
        CHECK(fast.pass() == slow.pass());
        CHECK(fast.pass());
    }
}

TEST_CASE("reduction still catches defects in rings with invertibles")
{
    FusionRing fw = fib_wreath(2, 1);
    // damage a product deep in a nontrivial graded component
    std::uint32_t a = 0, b = 0, c = 0;
    bool found = false;
    for (a = 0; a < fw.rank() && !found; ++a)
        for (b = 0; b < fw.rank() && !found; ++b) {
            FusionRing::RowView rv = fw.row(a, b);
            if (rv.n >= 2 && a != fw.unit() && b != fw.unit()) {
                c = rv.c[0];
                found = true;
            }
        }
    REQUIRE(found);
    FusionRing bad = mutate(fw, a - 1, b - 1, c, 7);
    VerifyOptions with_red;
    with_red.use_invertible_reduction = true;
    VerifyOptions without_red;
    without_red.use_invertible_reduction = false;
    AxiomReport r1 = verify_axioms(bad, with_red);
    AxiomReport r2 = verify_axioms(bad, without_red);
    CHECK(!r1.assoc_ok);
    CHECK(!r2.assoc_ok);
}
