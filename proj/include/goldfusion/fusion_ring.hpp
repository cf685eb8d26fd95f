#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "goldfusion/quadint.hpp"

namespace goldfusion {

/// Multiplicity vector over a ring's basis: an isomorphism class of a
/// (possibly non-simple) object. Direct sum is entrywise addition.
using ObjectVec = std::vector<std::int64_t>;

struct FusionTriple {
    std::uint32_t a, b, c;
    std::uint32_t mult;
};

/// A finite fusion ring: distinguished basis with unit, involutive duality,
/// and sparse nonnegative structure constants N_{ab}^c. Noncommutative rings
/// are supported; (a,b) and (b,a) rows are stored independently.
///
/// The table is stored CSR-style over ordered pairs: row (a,b) lists its
/// nonzero (c, N_{ab}^c) sorted by c. Rings are immutable after construction.
class FusionRing {
public:
    struct RowView {
        const std::uint32_t* c;
        const std::uint32_t* m;
        std::size_t n;
    };

    /// Validates indices, dual involutivity, positive multiplicities and
    /// uniqueness of (a,b,c); sorts triples lexicographically.
    static FusionRing from_triples(std::vector<std::string> labels,
                                   std::uint32_t unit,
                                   std::vector<std::uint32_t> dual,
                                   std::vector<FusionTriple> triples);

    std::uint32_t rank() const { return static_cast<std::uint32_t>(labels_.size()); }
    std::uint32_t unit() const { return unit_; }
    std::uint32_t dual(std::uint32_t a) const { return dual_[a]; }
    const std::vector<std::uint32_t>& dual_perm() const { return dual_; }
    const std::string& label(std::uint32_t a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Number of stored nonzero structure constants.
    std::uint64_t nnz() const { return col_.size(); }

    RowView row(std::uint32_t a, std::uint32_t b) const
    {
        std::uint64_t r = static_cast<std::uint64_t>(a) * rank() + b;
        std::uint64_t lo = row_off_[r], hi = row_off_[r + 1];
        return {col_.data() + lo, mult_.data() + lo, static_cast<std::size_t>(hi - lo)};
    }

    /// N_{ab}^c, by binary search within the (a,b) row.
    std::uint32_t coeff(std::uint32_t a, std::uint32_t b, std::uint32_t c) const;

    /// Find a basis index by label.
    std::optional<std::uint32_t> index_of(const std::string& label) const;

    /// Basis element as an ObjectVec.
    ObjectVec basis_vec(std::uint32_t a) const;

    // --- builder used by the constructors module; rows must be appended in
    // row-major (a,b) order with columns ascending.
    class Builder {
    public:
        Builder(std::vector<std::string> labels, std::uint32_t unit,
                std::vector<std::uint32_t> dual, std::uint64_t nnz_hint = 0);
        void begin_row();
        void push(std::uint32_t c, std::uint32_t mult);
        FusionRing finish();

    private:
        std::vector<std::string> labels_;
        std::uint32_t unit_ = 0;
        std::vector<std::uint32_t> dual_;
        std::vector<std::uint64_t> row_off_;
        std::vector<std::uint32_t> col_;
        std::vector<std::uint32_t> mult_;
        std::uint64_t rows_begun_ = 0;
    };

private:
    FusionRing() = default;

    std::vector<std::string> labels_;
    std::uint32_t unit_ = 0;
    std::vector<std::uint32_t> dual_;
    std::vector<std::uint64_t> row_off_;  // rank^2 + 1 offsets
    std::vector<std::uint32_t> col_;
    std::vector<std::uint32_t> mult_;
};

/// Bilinear extension of the fusion product; order matters.
ObjectVec tensor(const FusionRing& ring, const ObjectVec& x, const ObjectVec& y);

/// Applies the dual permutation entrywise.
ObjectVec dual_object(const FusionRing& ring, const ObjectVec& x);

/// Semisimplicity pairing sum_i x_i y_i; equals dim Hom(X, Y).
std::int64_t hom_dim(const ObjectVec& x, const ObjectVec& y);

bool is_zero(const ObjectVec& x);

/// True iff the support closure of {unit} under tensoring with x reaches
/// every basis element.
bool tensor_generates(const FusionRing& ring, const ObjectVec& x);
bool tensor_generates(const FusionRing& ring, std::uint32_t x);

/// True iff t is a self-dual basis element with t (x) t = unit + t.
bool is_fib_like(const FusionRing& ring, std::uint32_t t);

/// The unique nonnegative X with t (x) X = Z, if it exists. Because the left
/// multiplication by a Fibonacci object satisfies L^2 = I + L, the exact
/// inverse is L - I, so the candidate is t (x) Z - Z followed by a
/// nonnegativity check.
std::optional<ObjectVec> divide_by_fib(const FusionRing& ring, std::uint32_t t, const ObjectVec& z);

struct FpDims {
    std::vector<QuadInt> dims;  // indexed by basis
    QuadInt global;             // sum of squares
};

/// The unique positive character d with d_a d_b = sum_c N_{ab}^c d_c and
/// d_unit = 1, returned exactly in Z[phi].
///
/// A numeric Perron eigenvector guides a lattice identification of each
/// entry; the result is then certified exactly (character property over all
/// pairs, positivity, unit normalization). Throws if no Z[phi] solution is
/// found within the rounding tolerance.
FpDims fp_dims(const FusionRing& ring);

/// Numeric Perron eigenvector of x's left multiplication matrix, normalized
/// to 1 at the unit. Used as a floating cross-check of fp_dims.
std::vector<double> perron_vector(const FusionRing& ring, std::uint32_t x);

/// Invertible basis elements: u with u (x) u* = unit = u* (x) u exactly.
std::vector<std::uint32_t> invertible_elements(const FusionRing& ring);

}  // namespace goldfusion
