#include "goldfusion/classifier.hpp"

#include <stdexcept>

#include "goldfusion/automorphisms.hpp"
#include "goldfusion/verify.hpp"

namespace goldfusion {

std::string family_name(Family f)
{
    return f == Family::FibWreath ? "FibWreath" : "TT3Wreath";
}

std::string ClassEntry::name() const
{
    return family_name(family) + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

PhiGeneratorReport find_phi_generators(const FusionRing& ring)
{
    return find_phi_generators(ring, fp_dims(ring));
}

PhiGeneratorReport find_phi_generators(const FusionRing& ring, const FpDims& d)
{
    PhiGeneratorReport rep;
    for (std::uint32_t x = 0; x < ring.rank(); ++x) {
        if (d.dims[x] != QuadInt::phi()) continue;
        if (!tensor_generates(ring, x)) continue;

        // X (x) X* = unit + t with t Fibonacci
        FusionRing::RowView rv = ring.row(x, ring.dual(x));
        bool ok = rv.n == 2 && rv.m[0] == 1 && rv.m[1] == 1 &&
                  (rv.c[0] == ring.unit() || rv.c[1] == ring.unit());
        std::uint32_t t = 0;
        if (ok) {
            t = rv.c[0] == ring.unit() ? rv.c[1] : rv.c[0];
            ok = is_fib_like(ring, t);
        }
        if (!ok) {
            rep.failures.emplace_back(x, "X (x) X* is not unit + Fibonacci");
            continue;
        }

        // t (x) X = X + g with g invertible, and X = t (x) g
        FusionRing::RowView tx = ring.row(t, x);
        bool split_ok = tx.n == 2 && tx.m[0] == 1 && tx.m[1] == 1 &&
                        (tx.c[0] == x || tx.c[1] == x);
        if (split_ok) {
            std::uint32_t g = tx.c[0] == x ? tx.c[1] : tx.c[0];
            FusionRing::RowView gg = ring.row(g, ring.dual(g));
            split_ok = gg.n == 1 && gg.c[0] == ring.unit() && gg.m[0] == 1;
            FusionRing::RowView tg = ring.row(t, g);
            split_ok = split_ok && tg.n == 1 && tg.c[0] == x && tg.m[0] == 1;
        }
        if (!split_ok) {
            rep.failures.emplace_back(x, "t (x) X is not X + invertible with X = t (x) g");
            continue;
        }
        rep.witnesses.push_back(x);
    }
    return rep;
}

namespace {

FusionRing build_family(Family f, std::uint32_t n, std::uint32_t m)
{
    return f == Family::FibWreath ? fib_wreath(n, m) : tt3_wreath(n, m);
}

std::uint64_t expected_rank(Family f, std::uint32_t n, std::uint32_t m)
{
    if (f == Family::FibWreath) return (1ull << n) * n * m;
    std::uint64_t p = 1;
    for (std::uint32_t i = 0; i < n; ++i) p *= 6;
    return p * 2 * n * m;
}

std::uint32_t expected_grading(Family f, std::uint32_t n, std::uint32_t m)
{
    return f == Family::FibWreath ? n * m : 2 * n * m;
}

}  // namespace

std::vector<ClassEntry> enumerate_catalog(std::uint32_t n_max, std::uint32_t m_max,
                                          const CatalogOptions& opts)
{
    if (n_max == 0 || m_max == 0) throw std::invalid_argument("catalog bounds must be >= 1");
    std::vector<ClassEntry> out;
    for (Family f : {Family::FibWreath, Family::TT3Wreath}) {
        for (std::uint32_t n = 1; n <= n_max; ++n) {
            for (std::uint32_t m = 1; m <= m_max; ++m) {
                ClassEntry e(f, n, m, build_family(f, n, m));
                e.twist_count = expected_grading(f, n, m);  // |H^3(Z_k, S^1)| = k

                if (e.ring.rank() != expected_rank(f, n, m))
                    throw std::runtime_error(e.name() + ": unexpected rank");

                if (opts.verify) {
                    AxiomReport rep = verify_axioms(e.ring);
                    if (!rep.pass())
                        throw std::runtime_error(e.name() + ": axiom failure\n" + rep.summary(e.ring));
                }

                Grading g = adjoint_and_grading(e.ring);
                e.grading_order = g.group_order;
                if (!g.cyclic || g.group_order != expected_grading(f, n, m))
                    throw std::runtime_error(e.name() + ": grading is not cyclic of the group order");

                FpDims dims = fp_dims(e.ring);
                e.global_dim = dims.global;
                PhiGeneratorReport gens = find_phi_generators(e.ring, dims);
                if (gens.witnesses.empty())
                    throw std::runtime_error(e.name() + ": no golden tensor generator found");
                if (!gens.failures.empty())
                    throw std::runtime_error(e.name() + ": generator candidate failed: " +
                                             gens.failures.front().second);
                e.generator_witness = gens.witnesses.front();
                out.push_back(std::move(e));
            }
        }
    }
    return out;
}

std::string identify_ring(const FusionRing& ring)
{
    if (ring.rank() > 16) return "unknown";

    struct Candidate {
        std::string name;
        FusionRing ring;
    };
    static const std::vector<Candidate> registry = [] {
        std::vector<Candidate> reg;
        reg.push_back({"Fib", make_fib()});
        reg.push_back({"TT3", make_tt3()});
        for (std::uint32_t n = 2; n <= 4; ++n)
            reg.push_back({"FibPower(" + std::to_string(n) + ")", deligne_power(make_fib(), n)});
        for (std::uint32_t n = 1; n <= 3; ++n)
            for (std::uint32_t m = 1; m <= 8; ++m) {
                if (n == 1 && m == 1) continue;  // FibWreath(1,1) is Fib itself
                if ((1ull << n) * n * m <= 16) reg.push_back({"FibWreath(" + std::to_string(n) +
                                                              "," + std::to_string(m) + ")",
                                                              fib_wreath(n, m)});
            }
        reg.push_back({"TT3Wreath(1,1)", tt3_wreath(1, 1)});
        return reg;
    }();

    for (const Candidate& cand : registry) {
        if (cand.ring.rank() != ring.rank()) continue;
        if (find_isomorphism(ring, cand.ring)) return cand.name;
    }
    return "unknown";
}

}  // namespace goldfusion
