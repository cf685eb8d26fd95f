#include "goldfusion/constructors.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace goldfusion {

RingAutomorphism RingAutomorphism::compose(const RingAutomorphism& then) const
{
    RingAutomorphism out;
    out.perm.resize(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out.perm[i] = then.perm[perm[i]];
    return out;
}

bool RingAutomorphism::is_identity() const
{
    for (std::size_t i = 0; i < perm.size(); ++i)
        if (perm[i] != i) return false;
    return true;
}

bool is_ring_automorphism(const FusionRing& ring, const std::vector<std::uint32_t>& perm)
{
    const std::uint32_t r = ring.rank();
    if (perm.size() != r) return false;
    std::vector<char> hit(r, 0);
    for (std::uint32_t i = 0; i < r; ++i) {
        if (perm[i] >= r || hit[perm[i]]) return false;
        hit[perm[i]] = 1;
    }
    if (perm[ring.unit()] != ring.unit()) return false;
    for (std::uint32_t a = 0; a < r; ++a)
        if (perm[ring.dual(a)] != ring.dual(perm[a])) return false;
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t b = 0; b < r; ++b) {
            FusionRing::RowView rv = ring.row(a, b);
            FusionRing::RowView pv = ring.row(perm[a], perm[b]);
            if (rv.n != pv.n) return false;
            for (std::size_t i = 0; i < rv.n; ++i)
                if (ring.coeff(perm[a], perm[b], perm[rv.c[i]]) != rv.m[i]) return false;
        }
    return true;
}

CyclicActionSpec::CyclicActionSpec(FusionRing base, std::uint32_t order, RingAutomorphism alpha)
    : base_(std::move(base)), order_(order), alpha_(std::move(alpha))
{
    if (order_ == 0) throw std::invalid_argument("cyclic action needs positive order");
    if (alpha_.perm.size() != base_.rank())
        throw std::invalid_argument("action permutation has wrong length");
    if (!is_ring_automorphism(base_, alpha_.perm))
        throw std::invalid_argument("action generator is not a ring automorphism");
    powers_.resize(order_);
    powers_[0].resize(base_.rank());
    for (std::uint32_t i = 0; i < base_.rank(); ++i) powers_[0][i] = i;
    for (std::uint32_t j = 1; j < order_; ++j) {
        powers_[j].resize(base_.rank());
        for (std::uint32_t i = 0; i < base_.rank(); ++i)
            powers_[j][i] = alpha_.perm[powers_[j - 1][i]];
    }
    // alpha^order = id
    for (std::uint32_t i = 0; i < base_.rank(); ++i)
        if (alpha_.perm[powers_[order_ - 1][i]] != i)
            throw std::invalid_argument("action generator does not have order dividing the group order");
}

CyclicActionSpec CyclicActionSpec::with_order(std::uint32_t new_order) const
{
    return CyclicActionSpec(base_, new_order, alpha_);
}

FusionRing make_fib()
{
    std::vector<FusionTriple> t = {
        {0, 0, 0, 1}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 1},
    };
    return FusionRing::from_triples({"1", "tau"}, 0, {0, 1}, std::move(t));
}

FusionRing make_tt3()
{
    // basis order: 1, f2, rho, sigma, sigmabar, mu
    enum : std::uint32_t { I = 0, F = 1, R = 2, S = 3, Sb = 4, M = 5 };
    std::vector<std::string> labels = {"1", "f2", "rho", "sigma", "sigmabar", "mu"};
    std::vector<std::uint32_t> dual = {I, F, R, Sb, S, M};

    std::vector<FusionTriple> t;
    auto add = [&t](std::uint32_t a, std::uint32_t b, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> cs) {
        for (auto [c, m] : cs) t.push_back({a, b, c, m});
    };
    for (std::uint32_t x = 0; x < 6; ++x) {
        t.push_back({I, x, x, 1});
        if (x != I) t.push_back({x, I, x, 1});
    }
    // row f2
    add(F, F, {{I, 1}, {F, 2}, {S, 1}, {Sb, 1}, {R, 1}, {M, 1}});
    add(F, R, {{F, 1}, {Sb, 1}});
    add(F, S, {{F, 1}, {S, 1}, {Sb, 1}, {M, 1}});
    add(F, Sb, {{F, 1}, {S, 1}, {Sb, 1}, {R, 1}});
    add(F, M, {{F, 1}, {S, 1}});
    // row rho
    add(R, F, {{F, 1}, {S, 1}});
    add(R, R, {{I, 1}, {R, 1}});
    add(R, S, {{F, 1}});
    add(R, Sb, {{Sb, 1}, {M, 1}});
    add(R, M, {{Sb, 1}});
    // row sigma
    add(S, F, {{F, 1}, {S, 1}, {Sb, 1}, {R, 1}});
    add(S, R, {{S, 1}, {M, 1}});
    add(S, S, {{F, 1}, {Sb, 1}});
    add(S, Sb, {{I, 1}, {F, 1}, {M, 1}});
    add(S, M, {{F, 1}});
    // row sigmabar
    add(Sb, F, {{F, 1}, {S, 1}, {Sb, 1}, {M, 1}});
    add(Sb, R, {{F, 1}});
    add(Sb, S, {{I, 1}, {F, 1}, {R, 1}});
    add(Sb, Sb, {{F, 1}, {S, 1}});
    add(Sb, M, {{Sb, 1}, {R, 1}});
    // row mu
    add(M, F, {{F, 1}, {Sb, 1}});
    add(M, R, {{S, 1}});
    add(M, S, {{S, 1}, {R, 1}});
    add(M, Sb, {{F, 1}});
    add(M, M, {{I, 1}, {M, 1}});

    return FusionRing::from_triples(std::move(labels), I, std::move(dual), std::move(t));
}

RingAutomorphism tt3_swap()
{
    // rho <-> mu, sigma <-> sigmabar, fixes 1 and f2
    return RingAutomorphism{{0, 1, 5, 4, 3, 2}};
}

namespace {

std::string joined_label(const std::string& la, const std::string& lb)
{
    if (la == "1" && lb == "1") return "1";
    if (la == "1") return lb;
    if (lb == "1") return la;
    return la + "." + lb;
}

// Append a factor suffix to every non-unit atom of a base label: tau -> tau2.
// Atoms already ending in a digit get an underscore (f2 -> f2_1) so the
// factor index stays readable.
std::string suffixed_label(const std::string& l, std::uint32_t idx)
{
    if (l == "1") return "1";
    std::string out;
    std::size_t start = 0;
    while (start <= l.size()) {
        std::size_t dot = l.find('.', start);
        std::string atom = l.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        if (!out.empty()) out += ".";
        out += atom;
        if (!atom.empty() && std::isdigit(static_cast<unsigned char>(atom.back()))) out += "_";
        out += std::to_string(idx);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

}  // namespace

FusionRing deligne_product(const FusionRing& a, const FusionRing& b)
{
    const std::uint32_t ra = a.rank(), rb = b.rank();
    const std::uint32_t r = ra * rb;
    std::vector<std::string> labels(r);
    std::vector<std::uint32_t> dual(r);
    for (std::uint32_t i = 0; i < ra; ++i)
        for (std::uint32_t j = 0; j < rb; ++j) {
            labels[i * rb + j] = joined_label(a.label(i), b.label(j));
            dual[i * rb + j] = a.dual(i) * rb + b.dual(j);
        }
    std::uint64_t hint = a.nnz() * b.nnz();
    FusionRing::Builder bld(std::move(labels), a.unit() * rb + b.unit(), std::move(dual), hint);
    for (std::uint32_t i = 0; i < ra; ++i)
        for (std::uint32_t j = 0; j < rb; ++j)
            for (std::uint32_t k = 0; k < ra; ++k)
                for (std::uint32_t l = 0; l < rb; ++l) {
                    bld.begin_row();
                    FusionRing::RowView rv1 = a.row(i, k);
                    FusionRing::RowView rv2 = b.row(j, l);
                    for (std::size_t p = 0; p < rv1.n; ++p)
                        for (std::size_t q = 0; q < rv2.n; ++q)
                            bld.push(rv1.c[p] * rb + rv2.c[q], rv1.m[p] * rv2.m[q]);
                }
    return bld.finish();
}

FusionRing deligne_power(const FusionRing& base, std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("deligne_power needs n >= 1");
    // factor-indexed copy of the base
    auto indexed = [&base](std::uint32_t idx) {
        std::vector<std::string> labels;
        for (std::uint32_t i = 0; i < base.rank(); ++i)
            labels.push_back(suffixed_label(base.label(i), idx));
        std::vector<FusionTriple> triples;
        for (std::uint32_t a = 0; a < base.rank(); ++a)
            for (std::uint32_t b = 0; b < base.rank(); ++b) {
                FusionRing::RowView rv = base.row(a, b);
                for (std::size_t i = 0; i < rv.n; ++i) triples.push_back({a, b, rv.c[i], rv.m[i]});
            }
        return FusionRing::from_triples(std::move(labels), base.unit(), base.dual_perm(),
                                        std::move(triples));
    };
    FusionRing out = indexed(1);
    for (std::uint32_t i = 2; i <= n; ++i) out = deligne_product(out, indexed(i));
    return out;
}

FusionRing semidirect_product(const CyclicActionSpec& spec)
{
    const FusionRing& base = spec.base();
    const std::uint32_t br = base.rank();
    const std::uint32_t k = spec.order();
    const std::uint32_t r = br * k;

    // basis (a, g) at index g*br + a, label "(<base>,g^j)"
    std::vector<std::string> labels(r);
    std::vector<std::uint32_t> dual(r);
    for (std::uint32_t g = 0; g < k; ++g) {
        const std::vector<std::uint32_t>& inv = spec.power((k - g) % k);  // alpha^{-g}
        for (std::uint32_t a = 0; a < br; ++a) {
            labels[g * br + a] = "(" + base.label(a) + ",g^" + std::to_string(g) + ")";
            dual[g * br + a] = ((k - g) % k) * br + inv[base.dual(a)];
        }
    }

    std::uint64_t hint = base.nnz() * k * k;
    FusionRing::Builder bld(std::move(labels), base.unit(), std::move(dual), hint);
    // rows in index order: (a,g) major by g*br+a, then (b,h)
    for (std::uint32_t g = 0; g < k; ++g)
        for (std::uint32_t a = 0; a < br; ++a)
            for (std::uint32_t h = 0; h < k; ++h) {
                const std::vector<std::uint32_t>& act = spec.power(g);
                std::uint32_t out_g = (g + h) % k;
                for (std::uint32_t b = 0; b < br; ++b) {
                    bld.begin_row();
                    FusionRing::RowView rv = base.row(a, act[b]);
                    for (std::size_t i = 0; i < rv.n; ++i)
                        bld.push(out_g * br + rv.c[i], rv.m[i]);
                }
            }
    return bld.finish();
}

CyclicActionSpec cyclic_action_fib_power(std::uint32_t n)
{
    if (n == 0) throw std::invalid_argument("need n >= 1");
    FusionRing base = deligne_power(make_fib(), n);
    // basis index of Fib^{(x)n} is an n-digit binary number, factor 1 most
    // significant; the action shifts factor i to factor i+1 (mod n)
    const std::uint32_t r = base.rank();
    RingAutomorphism alpha;
    alpha.perm.resize(r);
    for (std::uint32_t idx = 0; idx < r; ++idx) {
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < n; ++i) {
            std::uint32_t digit = (idx >> (n - 1 - i)) & 1u;
            std::uint32_t target = (i + 1) % n;  // factor i -> factor i+1
            out |= digit << (n - 1 - target);
        }
        alpha.perm[idx] = out;
    }
    return CyclicActionSpec(std::move(base), n, std::move(alpha));
}

CyclicActionSpec cyclic_action_tt3_power(std::uint32_t m)
{
    if (m == 0) throw std::invalid_argument("need m >= 1");
    FusionRing base = deligne_power(make_tt3(), m);
    const std::uint32_t r = base.rank();
    const RingAutomorphism swap = tt3_swap();

    // base index is an m-digit number base 6, factor 1 most significant;
    // factor i -> factor i+1 identically for i < m, factor m -> factor 1
    // composed with the swap
    std::vector<std::uint32_t> pow6(m);
    pow6[m - 1] = 1;
    for (std::uint32_t i = m - 1; i > 0; --i) pow6[i - 1] = pow6[i] * 6;

    RingAutomorphism alpha;
    alpha.perm.resize(r);
    for (std::uint32_t idx = 0; idx < r; ++idx) {
        std::uint32_t rem = idx;
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t digit = rem / pow6[i];
            rem %= pow6[i];
            if (i + 1 < m) {
                out += digit * pow6[i + 1];
            } else {
                out += swap.perm[digit] * pow6[0];
            }
        }
        alpha.perm[idx] = out;
    }

    CyclicActionSpec spec(std::move(base), 2 * m, std::move(alpha));
    // alpha^m must be the factorwise swap and alpha^{2m} the identity
    const std::vector<std::uint32_t>& half = spec.power(m);
    for (std::uint32_t idx = 0; idx < r; ++idx) {
        std::uint32_t rem = idx, want = 0;
        for (std::uint32_t i = 0; i < m; ++i) {
            std::uint32_t digit = rem / pow6[i];
            rem %= pow6[i];
            want += swap.perm[digit] * pow6[i];
        }
        if (half[idx] != want)
            throw std::logic_error("tt3 cyclic action: alpha^m is not the factorwise swap");
    }
    return spec;
}

FusionRing fib_wreath(std::uint32_t n, std::uint32_t m)
{
    if (n == 0 || m == 0) throw std::invalid_argument("need n, m >= 1");
    return semidirect_product(cyclic_action_fib_power(n).with_order(n * m));
}

FusionRing tt3_wreath(std::uint32_t n, std::uint32_t m)
{
    if (n == 0 || m == 0) throw std::invalid_argument("need n, m >= 1");
    return semidirect_product(cyclic_action_tt3_power(n).with_order(2 * n * m));
}

}  // namespace goldfusion
