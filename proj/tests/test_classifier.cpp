#include "doctest.h"

#include "goldfusion/automorphisms.hpp"
#include "goldfusion/classifier.hpp"
#include "goldfusion/constructors.hpp"
#include "goldfusion/ring_json.hpp"

using namespace goldfusion;

TEST_CASE("phi generators of the basic rings")
{
    FusionRing fib = make_fib();
    PhiGeneratorReport rep = find_phi_generators(fib);
    CHECK(rep.witnesses == std::vector<std::uint32_t>{*fib.index_of("tau")});
    CHECK(rep.failures.empty());

    // neither tau generates the other factor
    CHECK(find_phi_generators(deligne_power(make_fib(), 2)).witnesses.empty());

    FusionRing fw = fib_wreath(2, 1);
    PhiGeneratorReport wrep = find_phi_generators(fw);
    CHECK(!wrep.witnesses.empty());
    bool has = false;
    for (std::uint32_t w : wrep.witnesses) has = has || fw.label(w) == "(tau1,g^1)";
    CHECK(has);
}

TEST_CASE("small catalog entries")
{
    auto entries = enumerate_catalog(2, 1);
    REQUIRE(entries.size() == 4);

    CHECK(entries[0].name() == "FibWreath(1,1)");
    CHECK(entries[0].ring.rank() == 2);
    CHECK(entries[0].grading_order == 1);
    CHECK(entries[0].global_dim == QuadInt(2, 1));

    CHECK(entries[1].name() == "FibWreath(2,1)");
    CHECK(entries[1].ring.rank() == 8);
    CHECK(entries[1].grading_order == 2);
    CHECK(entries[1].twist_count == 2);
    CHECK(entries[1].global_dim == QuadInt(2, 0) * QuadInt(2, 1) * QuadInt(2, 1));

    CHECK(entries[2].name() == "TT3Wreath(1,1)");
    CHECK(entries[2].ring.rank() == 12);
    CHECK(entries[2].grading_order == 2);
    CHECK(entries[2].global_dim == QuadInt(24, 32));

    CHECK(entries[3].name() == "TT3Wreath(2,1)");
    CHECK(entries[3].ring.rank() == 144);
    CHECK(entries[3].grading_order == 4);
    CHECK(entries[3].global_dim == QuadInt(4, 0) * QuadInt(12, 16) * QuadInt(12, 16));
}

namespace {

// the adjoint subring as a standalone ring
FusionRing unit_component(const FusionRing& ring)
{
    Grading g = adjoint_and_grading(ring);
    const auto& comp = g.adjoint_basis;
    std::vector<std::string> labels;
    std::vector<std::uint32_t> dual(comp.size());
    std::vector<std::uint32_t> pos(ring.rank(), 0);
    for (std::size_t i = 0; i < comp.size(); ++i) pos[comp[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < comp.size(); ++i) {
        labels.push_back(ring.label(comp[i]));
        dual[i] = pos[ring.dual(comp[i])];
    }
    std::vector<FusionTriple> triples;
    for (std::size_t i = 0; i < comp.size(); ++i)
        for (std::size_t j = 0; j < comp.size(); ++j) {
            FusionRing::RowView rv = ring.row(comp[i], comp[j]);
            for (std::size_t k = 0; k < rv.n; ++k)
                triples.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j),
                                   pos[rv.c[k]], rv.m[k]});
        }
    return FusionRing::from_triples(labels, pos[ring.unit()], dual, triples);
}

}  // namespace

TEST_CASE("catalog rings: unit component is the base Deligne power")
{
    CHECK(identify_ring(unit_component(fib_wreath(2, 1))) == "FibPower(2)");
    CHECK(identify_ring(unit_component(fib_wreath(2, 2))) == "FibPower(2)");
    CHECK(identify_ring(unit_component(fib_wreath(1, 3))) == "Fib");
    CHECK(identify_ring(unit_component(tt3_wreath(1, 1))) == "TT3");
    CHECK(identify_ring(unit_component(tt3_wreath(1, 2))) == "TT3");
}

TEST_CASE("identification is invariant under relabeling")
{
    // relabeled Fib
    FusionRing fib_moved = FusionRing::from_triples(
        {"x", "e"}, 1, {0, 1}, {{1, 1, 1, 1}, {1, 0, 0, 1}, {0, 1, 0, 1}, {0, 0, 0, 1}, {0, 0, 1, 1}});
    CHECK(identify_ring(fib_moved) == "Fib");

    // TT3 with its basis permuted by the swap automorphism
    FusionRing tt3 = make_tt3();
    RingAutomorphism swap = tt3_swap();
    std::vector<std::string> labels(tt3.rank());
    std::vector<std::uint32_t> dual(tt3.rank());
    std::vector<FusionTriple> triples;
    for (std::uint32_t i = 0; i < tt3.rank(); ++i) {
        labels[swap(i)] = tt3.label(i);
        dual[swap(i)] = swap(tt3.dual(i));
    }
    for (std::uint32_t a = 0; a < tt3.rank(); ++a)
        for (std::uint32_t b = 0; b < tt3.rank(); ++b) {
            FusionRing::RowView rv = tt3.row(a, b);
            for (std::size_t k = 0; k < rv.n; ++k)
                triples.push_back({swap(a), swap(b), swap(rv.c[k]), rv.m[k]});
        }
    FusionRing permuted = FusionRing::from_triples(labels, swap(tt3.unit()), dual, triples);
    CHECK(identify_ring(permuted) == "TT3");

    CHECK(identify_ring(fib_wreath(2, 1)) == "FibWreath(2,1)");
    CHECK(identify_ring(tt3_wreath(1, 1)) == "TT3Wreath(1,1)");
    CHECK(identify_ring(fib_wreath(1, 2)) == "FibWreath(1,2)");
    // the trivial wreath is Fib itself
    CHECK(identify_ring(fib_wreath(1, 1)) == "Fib");
}

TEST_CASE("pointed rank-2 ring is unknown")
{
    FusionRing z2 = FusionRing::from_triples(
        {"1", "g"}, 0, {0, 1}, {{0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
    CHECK(identify_ring(z2) == "unknown");
}
