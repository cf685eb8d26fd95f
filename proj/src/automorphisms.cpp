#include "goldfusion/automorphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace goldfusion {

namespace {

// Permutation-invariant fingerprint of a basis element: exact dimension,
// self-duality, and the multiset-ish shape of its self products.
struct Fingerprint {
    QuadInt dim;
    bool self_dual;
    std::uint32_t unit_flag;
    std::uint64_t row_shape;     // packed (n, sum of mults) of the (a,a) row
    std::uint64_t dual_row_shape;

    friend bool operator==(const Fingerprint& p, const Fingerprint& q)
    {
        return p.dim == q.dim && p.self_dual == q.self_dual && p.unit_flag == q.unit_flag &&
               p.row_shape == q.row_shape && p.dual_row_shape == q.dual_row_shape;
    }
};

std::uint64_t row_shape(const FusionRing& ring, std::uint32_t a, std::uint32_t b)
{
    FusionRing::RowView rv = ring.row(a, b);
    std::uint64_t msum = 0;
    for (std::size_t i = 0; i < rv.n; ++i) msum += rv.m[i];
    return (static_cast<std::uint64_t>(rv.n) << 32) | msum;
}

std::vector<Fingerprint> fingerprints(const FusionRing& ring, const std::vector<QuadInt>& dims)
{
    std::vector<Fingerprint> fp(ring.rank());
    for (std::uint32_t a = 0; a < ring.rank(); ++a) {
        fp[a] = Fingerprint{dims[a], ring.dual(a) == a, a == ring.unit() ? 1u : 0u,
                            row_shape(ring, a, a), row_shape(ring, a, ring.dual(a))};
    }
    return fp;
}

// Backtracking over images; `map[a]` is the image of source index a, or the
// sentinel rank() when unassigned. Checks every structure constant whose
// arguments are all assigned as soon as the assignment closes over them.
struct IsoSearch {
    const FusionRing& src;
    const FusionRing& dst;
    std::vector<Fingerprint> src_fp;
    std::vector<Fingerprint> dst_fp;
    std::vector<std::uint32_t> map;
    std::vector<char> used;
    std::vector<std::vector<std::uint32_t>>* all = nullptr;  // collect every solution
    std::optional<std::vector<std::uint32_t>> first;

    bool consistent(std::uint32_t a) const
    {
        const std::uint32_t r = src.rank();
        // dual compatibility
        std::uint32_t ad = src.dual(a);
        if (map[ad] != r && dst.dual(map[a]) != map[ad]) return false;
        // all fully assigned triples involving a
        for (std::uint32_t x = 0; x < r; ++x) {
            if (map[x] == r) continue;
            for (auto [p, q] : {std::pair<std::uint32_t, std::uint32_t>{a, x},
                                std::pair<std::uint32_t, std::uint32_t>{x, a}}) {
                FusionRing::RowView rv = src.row(p, q);
                FusionRing::RowView dv = dst.row(map[p], map[q]);
                std::uint64_t n_assigned = 0, n_assigned_dst = 0;
                for (std::size_t i = 0; i < rv.n; ++i) {
                    if (map[rv.c[i]] == r) continue;
                    ++n_assigned;
                    if (dst.coeff(map[p], map[q], map[rv.c[i]]) != rv.m[i]) return false;
                }
                // the image row cannot carry extra mass on assigned columns
                for (std::size_t i = 0; i < dv.n; ++i) {
                    // is dv.c[i] the image of an assigned source index?
                    // (used[] marks assigned images)
                    if (used[dv.c[i]]) {
                        ++n_assigned_dst;
                    }
                }
                if (n_assigned_dst != n_assigned) return false;
            }
        }
        return true;
    }

    // full table comparison; the incremental checks are pruning only
    bool full_check() const
    {
        const std::uint32_t r = src.rank();
        for (std::uint32_t a = 0; a < r; ++a)
            for (std::uint32_t b = 0; b < r; ++b) {
                FusionRing::RowView rv = src.row(a, b);
                FusionRing::RowView dv = dst.row(map[a], map[b]);
                if (rv.n != dv.n) return false;
                for (std::size_t i = 0; i < rv.n; ++i)
                    if (dst.coeff(map[a], map[b], map[rv.c[i]]) != rv.m[i]) return false;
            }
        return true;
    }

    bool run(std::uint32_t depth)
    {
        const std::uint32_t r = src.rank();
        if (depth == r) {
            if (!full_check()) return false;
            if (all) {
                all->push_back(map);
                return false;  // keep searching
            }
            first = map;
            return true;
        }
        for (std::uint32_t img = 0; img < r; ++img) {
            if (used[img]) continue;
            if (!(src_fp[depth] == dst_fp[img])) continue;
            map[depth] = img;
            used[img] = 1;
            if (consistent(depth) && run(depth + 1)) return true;
            used[img] = 0;
            map[depth] = r;
        }
        return false;
    }
};

}  // namespace

std::vector<RingAutomorphism> find_automorphisms(const FusionRing& ring)
{
    if (ring.rank() > 16)
        throw std::invalid_argument("find_automorphisms: rank above the supported search bound (16)");
    std::vector<QuadInt> dims = fp_dims(ring).dims;
    IsoSearch search{ring, ring, fingerprints(ring, dims), fingerprints(ring, dims),
                     std::vector<std::uint32_t>(ring.rank(), ring.rank()),
                     std::vector<char>(ring.rank(), 0)};
    std::vector<std::vector<std::uint32_t>> found;
    search.all = &found;
    search.run(0);
    std::sort(found.begin(), found.end());
    std::vector<RingAutomorphism> out;
    for (auto& p : found) out.push_back(RingAutomorphism{std::move(p)});
    return out;
}

std::optional<std::vector<std::uint32_t>> find_isomorphism(const FusionRing& source,
                                                           const FusionRing& target)
{
    if (source.rank() != target.rank()) return std::nullopt;
    if (source.rank() > 16)
        throw std::invalid_argument("find_isomorphism: rank above the supported search bound (16)");
    if (source.nnz() != target.nnz()) return std::nullopt;
    std::vector<QuadInt> sdims, tdims;
    try {
        sdims = fp_dims(source).dims;
        tdims = fp_dims(target).dims;
    } catch (const std::exception&) {
        return std::nullopt;  // outside the golden lattice, nothing to match
    }
    // dimension multisets must agree
    auto key = [](const QuadInt& q) { return std::pair<std::int64_t, std::int64_t>(q.x(), q.y()); };
    std::vector<std::pair<std::int64_t, std::int64_t>> sm, tm;
    for (auto& d : sdims) sm.push_back(key(d));
    for (auto& d : tdims) tm.push_back(key(d));
    std::sort(sm.begin(), sm.end());
    std::sort(tm.begin(), tm.end());
    if (sm != tm) return std::nullopt;

    IsoSearch search{source, target, fingerprints(source, sdims), fingerprints(target, tdims),
                     std::vector<std::uint32_t>(source.rank(), source.rank()),
                     std::vector<char>(source.rank(), 0)};
    if (search.run(0)) return search.first;
    return std::nullopt;
}

}  // namespace goldfusion
