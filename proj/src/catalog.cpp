#include "torus/catalog.hpp"

#include "torus/errors.hpp"

#include <vector>

namespace torus {

GaloisLattice split_torus(const FiniteGroup& group, std::size_t rank) {
    GaloisLattice out{group, rank, {}};
    out.action.assign(group.order(), IntMatrix::identity(rank));
    return out;
}

GaloisLattice weil_restriction(const FiniteGroup& group) {
    const std::size_t n = group.order();
    GaloisLattice out{group, n, {}};
    out.action.reserve(n);
    for (std::size_t g = 0; g < n; ++g) {
        IntMatrix p(n, n);
        for (std::size_t h = 0; h < n; ++h)
            p(group.mult(g, h), h) = 1; // e_h -> e_{g h}
        out.action.push_back(std::move(p));
    }
    return out;
}

GaloisLattice norm_one_torus(const FiniteGroup& group, std::size_t generator) {
    const std::size_t n = group.order();
    if (generator >= n)
        throw ValidationError("generator index out of range");

    // discrete log table with respect to the designated generator
    std::vector<std::size_t> dlog(n, n);
    std::size_t x = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (dlog[x] != n)
            break;
        dlog[x] = k;
        x = group.mult(x, generator);
    }
    for (std::size_t g = 0; g < n; ++g)
        if (dlog[g] == n)
            throw NotCyclic("designated element does not generate the group");

    const std::size_t d = n - 1;
    IntMatrix a(d, d);
    for (std::size_t i = 0; i + 1 < d; ++i)
        a(i + 1, i) = 1; // e_i -> e_{i+1}
    for (std::size_t i = 0; i < d; ++i)
        a(i, d - 1) = -1; // e_{d-1} -> -(e_1 + ... + e_{d-1})

    GaloisLattice out{group, d, {}};
    out.action.resize(n, IntMatrix::identity(d));
    for (std::size_t g = 0; g < n; ++g)
        out.action[g] = a.power(dlog[g]);
    ValidationReport report = validate(out);
    if (!report.ok)
        throw InternalError("norm-one construction failed validation: " +
                            report.message);
    return out;
}

GaloisLattice direct_sum(const GaloisLattice& a, const GaloisLattice& b) {
    if (!(a.group == b.group))
        throw GroupMismatch("direct sum needs lattices over the same group");
    GaloisLattice out{a.group, a.rank + b.rank, {}};
    out.action.reserve(a.group.order());
    for (std::size_t g = 0; g < a.group.order(); ++g) {
        IntMatrix block(out.rank, out.rank);
        for (std::size_t i = 0; i < a.rank; ++i)
            for (std::size_t j = 0; j < a.rank; ++j)
                block(i, j) = a.act(g)(i, j);
        for (std::size_t i = 0; i < b.rank; ++i)
            for (std::size_t j = 0; j < b.rank; ++j)
                block(a.rank + i, a.rank + j) = b.act(g)(i, j);
        out.action.push_back(std::move(block));
    }
    return out;
}

} // namespace torus
