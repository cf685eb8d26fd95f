#include "goldfusion/grading.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace goldfusion {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n)
    {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x)
    {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b)
    {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

}  // namespace

Grading adjoint_and_grading(const FusionRing& ring)
{
    const std::uint32_t r = ring.rank();
    Grading out;

    // ad = tensor closure of the supports of all x (x) x*
    std::vector<char> in_ad(r, 0);
    std::vector<std::uint32_t> frontier;
    auto absorb = [&](std::uint32_t c) {
        if (!in_ad[c]) {
            in_ad[c] = 1;
            frontier.push_back(c);
        }
    };
    for (std::uint32_t x = 0; x < r; ++x) {
        FusionRing::RowView rv = ring.row(x, ring.dual(x));
        for (std::size_t i = 0; i < rv.n; ++i) absorb(rv.c[i]);
    }
    std::vector<std::uint32_t> members(frontier);
    while (!frontier.empty()) {
        std::vector<std::uint32_t> next;
        for (std::uint32_t a : frontier) {
            for (std::uint32_t b : members) {
                FusionRing::RowView rv = ring.row(a, b);
                FusionRing::RowView rv2 = ring.row(b, a);
                for (std::size_t i = 0; i < rv.n; ++i)
                    if (!in_ad[rv.c[i]]) {
                        in_ad[rv.c[i]] = 1;
                        next.push_back(rv.c[i]);
                    }
                for (std::size_t i = 0; i < rv2.n; ++i)
                    if (!in_ad[rv2.c[i]]) {
                        in_ad[rv2.c[i]] = 1;
                        next.push_back(rv2.c[i]);
                    }
            }
        }
        for (std::uint32_t c : next) members.push_back(c);
        frontier = std::move(next);
    }
    for (std::uint32_t a = 0; a < r; ++a)
        if (in_ad[a]) out.adjoint_basis.push_back(a);

    // components: b ~ c whenever some ad element's product with b contains c
    UnionFind uf(r);
    for (std::uint32_t x : out.adjoint_basis) {
        for (std::uint32_t b = 0; b < r; ++b) {
            FusionRing::RowView rv = ring.row(x, b);
            for (std::size_t i = 0; i < rv.n; ++i) uf.unite(b, rv.c[i]);
            FusionRing::RowView rv2 = ring.row(b, x);
            for (std::size_t i = 0; i < rv2.n; ++i) uf.unite(b, rv2.c[i]);
        }
    }
    // all of ad collapses into the unit component
    for (std::uint32_t a : out.adjoint_basis) uf.unite(ring.unit(), a);

    // number the components, unit component first, then by least member
    std::vector<std::int64_t> comp_id(r, -1);
    std::uint32_t n_comp = 0;
    comp_id[uf.find(ring.unit())] = n_comp++;
    for (std::uint32_t a = 0; a < r; ++a) {
        std::uint32_t root = uf.find(a);
        if (comp_id[root] < 0) comp_id[root] = n_comp++;
    }
    out.component_of.resize(r);
    for (std::uint32_t a = 0; a < r; ++a)
        out.component_of[a] = static_cast<std::uint32_t>(comp_id[uf.find(a)]);
    out.group_order = n_comp;

    // group law from products; every product of components must land in a
    // single component
    out.group_table.assign(n_comp, std::vector<std::uint32_t>(n_comp, n_comp));
    for (std::uint32_t a = 0; a < r; ++a)
        for (std::uint32_t b = 0; b < r; ++b) {
            FusionRing::RowView rv = ring.row(a, b);
            if (rv.n == 0) continue;
            std::uint32_t ga = out.component_of[a], gb = out.component_of[b];
            std::uint32_t gc = out.component_of[rv.c[0]];
            for (std::size_t i = 1; i < rv.n; ++i)
                if (out.component_of[rv.c[i]] != gc)
                    throw std::runtime_error("grading: product of components is not homogeneous");
            if (out.group_table[ga][gb] == n_comp)
                out.group_table[ga][gb] = gc;
            else if (out.group_table[ga][gb] != gc)
                throw std::runtime_error("grading: component product is not well defined");
        }

    // group axioms: total, unital, cancellative (rows/columns permutations),
    // associative
    for (std::uint32_t i = 0; i < n_comp; ++i)
        for (std::uint32_t j = 0; j < n_comp; ++j)
            if (out.group_table[i][j] == n_comp)
                throw std::runtime_error("grading: component product undefined (empty product)");
    for (std::uint32_t i = 0; i < n_comp; ++i)
        if (out.group_table[0][i] != i || out.group_table[i][0] != i)
            throw std::runtime_error("grading: unit component is not a group identity");
    for (std::uint32_t i = 0; i < n_comp; ++i) {
        std::vector<char> seen_row(n_comp, 0), seen_col(n_comp, 0);
        for (std::uint32_t j = 0; j < n_comp; ++j) {
            if (seen_row[out.group_table[i][j]]++) throw std::runtime_error("grading: not a group (row)");
            if (seen_col[out.group_table[j][i]]++) throw std::runtime_error("grading: not a group (column)");
        }
    }
    for (std::uint32_t i = 0; i < n_comp; ++i)
        for (std::uint32_t j = 0; j < n_comp; ++j)
            for (std::uint32_t k = 0; k < n_comp; ++k)
                if (out.group_table[out.group_table[i][j]][k] != out.group_table[i][out.group_table[j][k]])
                    throw std::runtime_error("grading: component product is not associative");

    // cyclic iff some element has order group_order
    out.cyclic = false;
    for (std::uint32_t g = 0; g < n_comp && !out.cyclic; ++g) {
        std::uint32_t x = 0, ord = 0;
        do {
            x = out.group_table[x][g];
            ++ord;
        } while (x != 0);
        if (ord == n_comp) out.cyclic = true;
    }
    out.group_name = out.cyclic ? "Z_" + std::to_string(n_comp)
                                : "G(order " + std::to_string(n_comp) + ")";
    return out;
}

}  // namespace goldfusion
