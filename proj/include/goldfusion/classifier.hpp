#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "goldfusion/constructors.hpp"
#include "goldfusion/fusion_ring.hpp"
#include "goldfusion/grading.hpp"

namespace goldfusion {

enum class Family { FibWreath, TT3Wreath };

std::string family_name(Family f);

/// One verified catalog entry: a wreath ring together with its generator
/// witness, grading order and twist-count metadata (the group order; twists
/// live in the associator and never change the ring).
struct ClassEntry {
    ClassEntry(Family f, std::uint32_t n_, std::uint32_t m_, FusionRing r)
        : family(f), n(n_), m(m_), ring(std::move(r))
    {
    }

    Family family;
    std::uint32_t n;
    std::uint32_t m;
    FusionRing ring;
    std::uint32_t generator_witness = 0;
    std::uint32_t grading_order = 1;
    std::uint32_t twist_count = 1;
    QuadInt global_dim;

    std::string name() const;  // "FibWreath(2,1)"
};

struct CatalogOptions {
    bool verify = true;  // run verify_axioms and the structural checks
};

/// Builds every (family, n, m) entry with n <= n_max, m <= m_max, verifying
/// the ring axioms, rank and grading, and the existence of a golden
/// generator witness. Any failure throws with the offending entry named.
std::vector<ClassEntry> enumerate_catalog(std::uint32_t n_max, std::uint32_t m_max,
                                          const CatalogOptions& opts = {});

struct PhiGeneratorReport {
    std::vector<std::uint32_t> witnesses;  // dim-phi tensor generators, structure verified
    std::vector<std::pair<std::uint32_t, std::string>> failures;  // candidate -> reason
};

/// All basis X with dim X = phi that tensor-generate the ring. For each
/// witness the structural facts are verified exactly:
/// X (x) X* = unit + t with t a Fibonacci object, and t (x) X = X + g with
/// g invertible.
PhiGeneratorReport find_phi_generators(const FusionRing& ring);
PhiGeneratorReport find_phi_generators(const FusionRing& ring, const FpDims& dims);

/// Recognizes a ring (rank <= 16) against Fib, TT3, small Deligne powers and
/// small catalog entries, up to basis permutation. Returns "unknown" when
/// nothing matches.
std::string identify_ring(const FusionRing& ring);

}  // namespace goldfusion
