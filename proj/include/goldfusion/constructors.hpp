#pragma once

#include <cstdint>
#include <vector>

#include "goldfusion/fusion_ring.hpp"

namespace goldfusion {

/// Permutation of basis indices fixing the unit, commuting with duality and
/// preserving every structure constant.
struct RingAutomorphism {
    std::vector<std::uint32_t> perm;

    std::uint32_t operator()(std::uint32_t a) const { return perm[a]; }
    RingAutomorphism compose(const RingAutomorphism& then) const;
    bool is_identity() const;
};

/// Checks the RingAutomorphism invariants against a concrete ring.
bool is_ring_automorphism(const FusionRing& ring, const std::vector<std::uint32_t>& perm);

/// A cyclic group of order k acting on a base ring through the powers of a
/// generator automorphism alpha with alpha^k = id (verified on construction).
/// Powers are precomputed once; k stays at desk scale.
class CyclicActionSpec {
public:
    CyclicActionSpec(FusionRing base, std::uint32_t order, RingAutomorphism alpha);

    const FusionRing& base() const { return base_; }
    std::uint32_t order() const { return order_; }
    const RingAutomorphism& alpha() const { return alpha_; }
    /// alpha^j for 0 <= j < order.
    const std::vector<std::uint32_t>& power(std::uint32_t j) const { return powers_[j]; }

    /// Same action generator with the group order enlarged to a multiple of
    /// the generator's order (the action factors through the smaller group).
    CyclicActionSpec with_order(std::uint32_t new_order) const;

private:
    FusionRing base_;
    std::uint32_t order_;
    RingAutomorphism alpha_;
    std::vector<std::vector<std::uint32_t>> powers_;
};

/// Rank-2 ring {1, tau} with tau self-dual and tau (x) tau = 1 + tau.
FusionRing make_fib();

/// The rank-6 ring with basis {1, f2, rho, sigma, sigmabar, mu}, duality
/// swapping sigma <-> sigmabar, and the fusion table of the dual even part
/// of the 2D2 subfactor. Noncommutative: rho (x) mu = sigmabar while
/// mu (x) rho = sigma.
FusionRing make_tt3();

/// Product ring on pairs with factorwise fusion; rank multiplies and
/// generators of distinct factors commute.
FusionRing deligne_product(const FusionRing& a, const FusionRing& b);

/// N-fold Deligne power with factor-indexed labels ("tau1.tau2" style).
FusionRing deligne_power(const FusionRing& base, std::uint32_t n);

/// Group-graded ring on base x Z_k with multiplication twisted by the action:
/// N_{(a,g)(b,h)}^{(c,g+h)} = N_{a,alpha^g(b)}^c, zero off the group law.
/// The dual of (a,g) is (alpha^{-g}(a*), -g). Labels are "(<base>,g^j)".
FusionRing semidirect_product(const CyclicActionSpec& spec);

/// Z_N action on Fib^{(x)N} cyclically permuting the factors; order N.
CyclicActionSpec cyclic_action_fib_power(std::uint32_t n);

/// Z_{2M} action on TT3^{(x)M}: factor i maps identically onto factor i+1
/// for i < M, and factor M maps onto factor 1 composed with the swap
/// rho <-> mu, sigma <-> sigmabar. alpha^M is the factorwise swap and
/// alpha^{2M} = id, both verified.
CyclicActionSpec cyclic_action_tt3_power(std::uint32_t m);

/// The swap automorphism of TT3 (rho <-> mu, sigma <-> sigmabar).
RingAutomorphism tt3_swap();

/// Fib^{(x)n} x| Z_{n*m} with the cyclic factor permutation action.
FusionRing fib_wreath(std::uint32_t n, std::uint32_t m);

/// TT3^{(x)n} x| Z_{2*n*m} with the order-2n action above.
FusionRing tt3_wreath(std::uint32_t n, std::uint32_t m);

}  // namespace goldfusion
