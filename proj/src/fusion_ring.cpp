#include "goldfusion/fusion_ring.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace goldfusion {

FusionRing FusionRing::from_triples(std::vector<std::string> labels,
                                    std::uint32_t unit,
                                    std::vector<std::uint32_t> dual,
                                    std::vector<FusionTriple> triples)
{
    const std::uint32_t r = static_cast<std::uint32_t>(labels.size());
    if (r == 0) throw std::invalid_argument("fusion ring needs a nonempty basis");
    if (unit >= r) throw std::invalid_argument("unit index out of range");
    if (dual.size() != r) throw std::invalid_argument("dual permutation has wrong length");
    for (std::uint32_t a = 0; a < r; ++a) {
        if (dual[a] >= r || dual[dual[a]] != a)
            throw std::invalid_argument("dual is not an involutive permutation");
    }
    for (const auto& t : triples) {
        if (t.a >= r || t.b >= r || t.c >= r)
            throw std::invalid_argument("fusion triple index out of range");
        if (t.mult == 0) throw std::invalid_argument("fusion multiplicity must be positive");
    }
    std::sort(triples.begin(), triples.end(), [](const FusionTriple& p, const FusionTriple& q) {
        if (p.a != q.a) return p.a < q.a;
        if (p.b != q.b) return p.b < q.b;
        return p.c < q.c;
    });
    for (std::size_t i = 1; i < triples.size(); ++i) {
        const auto& p = triples[i - 1];
        const auto& q = triples[i];
        if (p.a == q.a && p.b == q.b && p.c == q.c)
            throw std::invalid_argument("duplicate fusion triple");
    }

    FusionRing ring;
    ring.labels_ = std::move(labels);
    ring.unit_ = unit;
    ring.dual_ = std::move(dual);
    ring.row_off_.assign(static_cast<std::size_t>(r) * r + 1, 0);
    ring.col_.reserve(triples.size());
    ring.mult_.reserve(triples.size());
    std::uint64_t pos = 0;
    std::uint64_t row = 0;
    for (const auto& t : triples) {
        std::uint64_t tr = static_cast<std::uint64_t>(t.a) * r + t.b;
        while (row <= tr) ring.row_off_[row++] = pos;
        ring.col_.push_back(t.c);
        ring.mult_.push_back(t.mult);
        ++pos;
    }
    while (row <= static_cast<std::uint64_t>(r) * r) ring.row_off_[row++] = pos;
    return ring;
}

std::uint32_t FusionRing::coeff(std::uint32_t a, std::uint32_t b, std::uint32_t c) const
{
    RowView rv = row(a, b);
    const std::uint32_t* lo = rv.c;
    const std::uint32_t* hi = rv.c + rv.n;
    const std::uint32_t* it = std::lower_bound(lo, hi, c);
    if (it != hi && *it == c) return rv.m[it - lo];
    return 0;
}

std::optional<std::uint32_t> FusionRing::index_of(const std::string& label) const
{
    for (std::uint32_t i = 0; i < rank(); ++i)
        if (labels_[i] == label) return i;
    return std::nullopt;
}

ObjectVec FusionRing::basis_vec(std::uint32_t a) const
{
    ObjectVec v(rank(), 0);
    v.at(a) = 1;
    return v;
}

FusionRing::Builder::Builder(std::vector<std::string> labels, std::uint32_t unit,
                             std::vector<std::uint32_t> dual, std::uint64_t nnz_hint)
{
    const std::uint32_t r = static_cast<std::uint32_t>(labels.size());
    if (unit >= r) throw std::invalid_argument("unit index out of range");
    if (dual.size() != r) throw std::invalid_argument("dual permutation has wrong length");
    for (std::uint32_t a = 0; a < r; ++a)
        if (dual[a] >= r || dual[dual[a]] != a)
            throw std::invalid_argument("dual is not an involutive permutation");
    labels_ = std::move(labels);
    unit_ = unit;
    dual_ = std::move(dual);
    row_off_.reserve(static_cast<std::size_t>(r) * r + 1);
    row_off_.push_back(0);
    if (nnz_hint) {
        col_.reserve(nnz_hint);
        mult_.reserve(nnz_hint);
    }
}

void FusionRing::Builder::begin_row()
{
    // close out the previous row
    if (rows_begun_ > 0) row_off_.push_back(col_.size());
    ++rows_begun_;
}

void FusionRing::Builder::push(std::uint32_t c, std::uint32_t mult)
{
    if (mult == 0) return;
    if (col_.size() > row_off_.back() && col_.back() >= c)
        throw std::logic_error("builder columns must be strictly ascending within a row");
    col_.push_back(c);
    mult_.push_back(mult);
}

FusionRing FusionRing::Builder::finish()
{
    const std::uint64_t r = labels_.size();
    if (rows_begun_ != r * r) throw std::logic_error("builder did not fill all rows");
    row_off_.push_back(col_.size());
    FusionRing ring;
    ring.labels_ = std::move(labels_);
    ring.unit_ = unit_;
    ring.dual_ = std::move(dual_);
    ring.row_off_ = std::move(row_off_);
    ring.col_ = std::move(col_);
    ring.mult_ = std::move(mult_);
    return ring;
}

ObjectVec tensor(const FusionRing& ring, const ObjectVec& x, const ObjectVec& y)
{
    const std::uint32_t r = ring.rank();
    if (x.size() != r || y.size() != r)
        throw std::invalid_argument("object vector has wrong length");
    ObjectVec out(r, 0);
    for (std::uint32_t a = 0; a < r; ++a) {
        if (x[a] == 0) continue;
        for (std::uint32_t b = 0; b < r; ++b) {
            if (y[b] == 0) continue;
            std::int64_t w = x[a] * y[b];
            FusionRing::RowView rv = ring.row(a, b);
            for (std::size_t i = 0; i < rv.n; ++i) out[rv.c[i]] += w * rv.m[i];
        }
    }
    return out;
}

ObjectVec dual_object(const FusionRing& ring, const ObjectVec& x)
{
    const std::uint32_t r = ring.rank();
    if (x.size() != r) throw std::invalid_argument("object vector has wrong length");
    ObjectVec out(r, 0);
    for (std::uint32_t a = 0; a < r; ++a) out[ring.dual(a)] = x[a];
    return out;
}

std::int64_t hom_dim(const ObjectVec& x, const ObjectVec& y)
{
    if (x.size() != y.size()) throw std::invalid_argument("object vectors of different rings");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

bool is_zero(const ObjectVec& x)
{
    return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

bool tensor_generates(const FusionRing& ring, const ObjectVec& x)
{
    const std::uint32_t r = ring.rank();
    if (x.size() != r) throw std::invalid_argument("object vector has wrong length");
    if (is_zero(x)) throw std::invalid_argument("tensor_generates requires a nonzero object");
    std::vector<char> seen(r, 0);
    std::vector<std::uint32_t> frontier{ring.unit()};
    seen[ring.unit()] = 1;
    std::uint32_t count = 1;
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t s : frontier) {
            for (std::uint32_t a = 0; a < r; ++a) {
                if (x[a] == 0) continue;
                FusionRing::RowView rv = ring.row(s, a);
                for (std::size_t i = 0; i < rv.n; ++i) {
                    std::uint32_t c = rv.c[i];
                    if (!seen[c]) {
                        seen[c] = 1;
                        ++count;
                        next.push_back(c);
                    }
                }
            }
        }
        frontier = std::move(next);
    }
    return count == r;
}

bool tensor_generates(const FusionRing& ring, std::uint32_t x)
{
    return tensor_generates(ring, ring.basis_vec(x));
}

bool is_fib_like(const FusionRing& ring, std::uint32_t t)
{
    if (t >= ring.rank()) return false;
    if (ring.dual(t) != t) return false;
    FusionRing::RowView rv = ring.row(t, t);
    if (rv.n != 2) return false;
    // t (x) t = unit + t, each with multiplicity 1
    bool has_unit = false, has_t = false;
    for (std::size_t i = 0; i < rv.n; ++i) {
        if (rv.c[i] == ring.unit() && rv.m[i] == 1) has_unit = true;
        if (rv.c[i] == t && rv.m[i] == 1) has_t = true;
    }
    return has_unit && has_t && t != ring.unit();
}

std::optional<ObjectVec> divide_by_fib(const FusionRing& ring, std::uint32_t t, const ObjectVec& z)
{
    if (!is_fib_like(ring, t)) throw std::invalid_argument("divide_by_fib requires a Fibonacci object");
    ObjectVec tz = tensor(ring, ring.basis_vec(t), z);
    ObjectVec x(ring.rank(), 0);
    for (std::uint32_t i = 0; i < ring.rank(); ++i) {
        x[i] = tz[i] - z[i];
        if (x[i] < 0) return std::nullopt;
    }
    // L_t (L_t - I) = I can only be trusted in an associative ring; confirm.
    if (tensor(ring, ring.basis_vec(t), x) != z) return std::nullopt;
    return x;
}

std::vector<std::uint32_t> invertible_elements(const FusionRing& ring)
{
    std::vector<std::uint32_t> out;
    for (std::uint32_t u = 0; u < ring.rank(); ++u) {
        std::uint32_t us = ring.dual(u);
        FusionRing::RowView r1 = ring.row(u, us);
        FusionRing::RowView r2 = ring.row(us, u);
        if (r1.n == 1 && r1.c[0] == ring.unit() && r1.m[0] == 1 &&
            r2.n == 1 && r2.c[0] == ring.unit() && r2.m[0] == 1)
            out.push_back(u);
    }
    return out;
}

std::vector<double> perron_vector(const FusionRing& ring, std::uint32_t x)
{
    const std::uint32_t r = ring.rank();
    std::vector<double> v(r, 1.0), w(r, 0.0);
    // power iteration on (L_x + I); the shift keeps periodic gradings from
    // making the iteration oscillate
    double prev_lambda = 0.0;
    for (int iter = 0; iter < 200000; ++iter) {
        std::fill(w.begin(), w.end(), 0.0);
        for (std::uint32_t b = 0; b < r; ++b) {
            FusionRing::RowView rv = ring.row(x, b);
            double vb = v[b];
            for (std::size_t i = 0; i < rv.n; ++i) w[rv.c[i]] += rv.m[i] * vb;
        }
        for (std::uint32_t b = 0; b < r; ++b) w[b] += v[b];
        double nrm = 0.0;
        for (double t : w) nrm += t * t;
        nrm = std::sqrt(nrm);
        double lambda = nrm;
        for (std::uint32_t b = 0; b < r; ++b) w[b] /= nrm;
        double delta = 0.0;
        for (std::uint32_t b = 0; b < r; ++b) delta = std::max(delta, std::abs(w[b] - v[b]));
        v.swap(w);
        if (delta < 1e-14 && std::abs(lambda - prev_lambda) < 1e-13) break;
        prev_lambda = lambda;
    }
    if (v[ring.unit()] <= 0.0) throw std::runtime_error("Perron iteration produced a non-positive unit entry");
    double scale = v[ring.unit()];
    for (double& t : v) t /= scale;
    return v;
}

namespace {

// Identify a real value as x + y*phi with |y| bounded. With |y| <= 10946
// (a Fibonacci number), distinct lattice points in range differ by more than
// phi^-21 ~ 9e-6, so a 1e-6 window pins a unique candidate.
std::optional<QuadInt> lattice_identify(double v, double tol = 1e-6)
{
    constexpr double kPhi = 1.6180339887498948482;
    constexpr std::int64_t kYMax = 10946;
    std::optional<QuadInt> found;
    for (std::int64_t y = -kYMax; y <= kYMax; ++y) {
        double xr = v - static_cast<double>(y) * kPhi;
        double xn = std::nearbyint(xr);
        if (std::abs(xr - xn) < tol) {
            if (found) return std::nullopt;  // ambiguous
            found = QuadInt(static_cast<std::int64_t>(xn), y);
        }
    }
    return found;
}

}  // namespace

FpDims fp_dims(const FusionRing& ring)
{
    const std::uint32_t r = ring.rank();

    // Prefer a single basis generator: its multiplication matrix is sparse
    // and irreducible, so the power iteration is cheap.
    std::optional<std::uint32_t> gen;
    for (std::uint32_t a = 0; a < r && !gen; ++a)
        if (tensor_generates(ring, a)) gen = a;

    std::vector<double> v;
    if (gen) {
        v = perron_vector(ring, *gen);
    } else {
        // no single generator (e.g. Deligne products): iterate on sum of all
        // left multiplication matrices, shifted by I via the unit row
        std::vector<double> cur(r, 1.0), nxt(r, 0.0);
        for (int iter = 0; iter < 200000; ++iter) {
            std::fill(nxt.begin(), nxt.end(), 0.0);
            for (std::uint32_t a = 0; a < r; ++a)
                for (std::uint32_t b = 0; b < r; ++b) {
                    FusionRing::RowView rv = ring.row(a, b);
                    double vb = cur[b];
                    for (std::size_t i = 0; i < rv.n; ++i) nxt[rv.c[i]] += rv.m[i] * vb;
                }
            double nrm = 0.0;
            for (double t : nxt) nrm += t * t;
            nrm = std::sqrt(nrm);
            for (double& t : nxt) t /= nrm;
            double delta = 0.0;
            for (std::uint32_t b = 0; b < r; ++b) delta = std::max(delta, std::abs(nxt[b] - cur[b]));
            cur.swap(nxt);
            if (delta < 1e-14) break;
        }
        if (cur[ring.unit()] <= 0.0) throw std::runtime_error("Perron iteration failed");
        double scale = cur[ring.unit()];
        for (double& t : cur) t /= scale;
        v = std::move(cur);
    }

    FpDims out;
    out.dims.resize(r);
    for (std::uint32_t a = 0; a < r; ++a) {
        auto q = lattice_identify(v[a]);
        if (!q) throw std::runtime_error("fp_dims: no Z[phi] lattice solution for basis '" +
                                         ring.label(a) + "'");
        out.dims[a] = *q;
    }

    // Exact certification: unit normalization, positivity, character law.
    if (out.dims[ring.unit()] != QuadInt::one())
        throw std::runtime_error("fp_dims: unit dimension is not 1");
    for (std::uint32_t a = 0; a < r; ++a)
        if ((out.dims[a] - QuadInt::one()).sign() < 0)
            throw std::runtime_error("fp_dims: dimension below 1 at basis '" + ring.label(a) + "'");
    bool law_ok = true;
#pragma omp parallel for schedule(static) reduction(&& : law_ok)
    for (std::int64_t a = 0; a < static_cast<std::int64_t>(r); ++a) {
        try {
            for (std::uint32_t b = 0; b < r; ++b) {
                QuadInt lhs = out.dims[a] * out.dims[b];
                QuadInt rhs = QuadInt::zero();
                FusionRing::RowView rv = ring.row(static_cast<std::uint32_t>(a), b);
                for (std::size_t i = 0; i < rv.n; ++i)
                    rhs += QuadInt(rv.m[i], 0) * out.dims[rv.c[i]];
                if (lhs != rhs) law_ok = false;
            }
        } catch (const std::overflow_error&) {
            law_ok = false;  // exceptions must not leave the parallel region
        }
    }
    if (!law_ok) throw std::runtime_error("fp_dims: character law fails");

    out.global = QuadInt::zero();
    for (std::uint32_t a = 0; a < r; ++a) out.global += out.dims[a] * out.dims[a];
    return out;
}

}  // namespace goldfusion
