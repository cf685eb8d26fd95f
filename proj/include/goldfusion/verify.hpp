#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "goldfusion/fusion_ring.hpp"

namespace goldfusion {

/// Per-axiom verification report. A violation records the first offending
/// tuple in lexicographic order, so parallel and serial runs agree.
struct AxiomReport {
    bool unit_ok = true;
    bool duality_ok = true;
    bool frobenius_ok = true;
    bool assoc_ok = true;

    // first counterexamples, lexicographically least
    std::optional<std::array<std::uint32_t, 2>> unit_witness;       // (a, b)
    std::optional<std::array<std::uint32_t, 2>> duality_witness;    // (a, b)
    std::optional<std::array<std::uint32_t, 3>> frobenius_witness;  // (a, b, c)
    std::optional<std::array<std::uint32_t, 3>> assoc_witness;      // (a, b, c)

    std::uint64_t assoc_triples_checked = 0;

    bool pass() const { return unit_ok && duality_ok && frobenius_ok && assoc_ok; }
    std::string summary(const FusionRing& ring) const;
};

struct VerifyOptions {
    /// When true (default), associativity over all triples is established by
    /// checking representative triples per orbit of translation by the
    /// invertible elements, after exhaustively checking every triple with an
    /// invertible in the first or last slot. Those triples license
    ///   defect(a,b,c*u) = defect(a,b,c) * pi_u  and
    ///   defect(u*a,b,c) = pi_u * defect(a,b,c),
    /// so the reduced sweep decides exactly the same universally quantified
    /// statement. Witnesses on failing rings may come from either stage.
    bool use_invertible_reduction = true;
    /// 0 = use the OpenMP default thread count.
    int threads = 0;
};

/// OpenMP-parallel verifier. Checks the unit law, the duality pairing
/// N_{ab}^1 = delta_{b,a*}, Frobenius reciprocity
/// N_{ab}^c = N_{a*c}^b = N_{cb*}^a = N_{b*a*}^{c*}, and associativity
/// sum_e N_{ab}^e N_{ec}^d = sum_f N_{bc}^f N_{af}^d over all tuples.
AxiomReport verify_axioms(const FusionRing& ring, const VerifyOptions& opts = {});

/// Straight-line serial reference: plain loops over all tuples, no
/// reductions. Kept for differential testing and benchmarking against the
/// parallel kernel; only suitable for small ranks.
AxiomReport verify_axioms_serial(const FusionRing& ring);

}  // namespace goldfusion
