#include "torus/galois_lattice.hpp"

#include "torus/errors.hpp"

#include <sstream>
#include <utility>

namespace torus {

ValidationReport validate(const GaloisLattice& lattice) {
    const std::size_t n = lattice.group.order();
    if (lattice.action.size() != n)
        return {false, "action table size differs from group order"};
    for (std::size_t g = 0; g < n; ++g)
        if (lattice.action[g].rows() != lattice.rank ||
            lattice.action[g].cols() != lattice.rank) {
            std::ostringstream os;
            os << "action(" << g << ") is not " << lattice.rank << "x"
               << lattice.rank;
            return {false, os.str()};
        }
    if (n > 0 && !lattice.action[0].is_identity())
        return {false, "action(0) is not the identity"};
    for (std::size_t g = 0; g < n; ++g) {
        Int det = lattice.action[g].determinant();
        if (det != 1 && det != -1) {
            std::ostringstream os;
            os << "action(" << g << ") is not unimodular (det " << det << ")";
            return {false, os.str()};
        }
    }
    for (std::size_t g = 0; g < n; ++g)
        for (std::size_t h = 0; h < n; ++h)
            if (lattice.action[lattice.group.mult(g, h)] !=
                lattice.action[g] * lattice.action[h]) {
                std::ostringstream os;
                os << "action is not a homomorphism at pair (" << g << "," << h
                   << ")";
                return {false, os.str()};
            }
    return {};
}

void require_valid(const GaloisLattice& lattice) {
    ValidationReport report = validate(lattice);
    if (!report.ok)
        throw ValidationError(report.message);
}

IntMatrix invariants_lattice(const GaloisLattice& lattice, const Subgroup& h) {
    const std::size_t d = lattice.rank;
    IntMatrix stacked(0, d);
    for (std::size_t g : h.elements()) {
        if (g == 0)
            continue;
        stacked = vstack(stacked, lattice.act(g) - IntMatrix::identity(d));
    }
    if (stacked.rows() == 0)
        return IntMatrix::identity(d);
    return kernel_lattice(stacked);
}

std::vector<Int> CoinvariantsPresentation::project(const std::vector<Int>& x) const {
    std::vector<Int> w = u.apply(x);
    for (std::size_t i = 0; i < diag.size(); ++i) {
        w[i] %= diag[i];
        if (w[i] < 0)
            w[i] += diag[i];
    }
    return w;
}

bool CoinvariantsPresentation::same_class(const std::vector<Int>& x,
                                          const std::vector<Int>& y) const {
    return project(x) == project(y);
}

CoinvariantsPresentation coinvariants(const GaloisLattice& lattice,
                                      const Subgroup& h) {
    const std::size_t d = lattice.rank;
    IntMatrix rel(d, 0);
    for (std::size_t g : h.elements()) {
        if (g == 0)
            continue;
        rel = hstack(rel, lattice.act(g) - IntMatrix::identity(d));
    }
    IntMatrix relations = column_hnf_basis(rel);
    SnfDecomposition snf = smith_normal_form(relations);
    std::vector<Int> diag;
    const std::size_t nmin =
        relations.rows() < relations.cols() ? relations.rows() : relations.cols();
    for (std::size_t i = 0; i < nmin && snf.d(i, i) != 0; ++i)
        diag.push_back(snf.d(i, i));
    return {cokernel_structure(relations), std::move(relations),
            std::move(snf.u), std::move(diag)};
}

IntMatrix trace_map(const GaloisLattice& lattice, const Subgroup& h) {
    IntMatrix sum(lattice.rank, lattice.rank);
    for (std::size_t g : h.elements())
        sum = sum + lattice.act(g);
    return sum;
}

CanonicalDecomposition canonical_decomposition(const GaloisLattice& lattice,
                                               const Subgroup& h) {
    IntMatrix tr = trace_map(lattice, h);
    IntMatrix y = kernel_lattice(tr);
    IntMatrix n = column_hnf_basis(tr);
    GaloisLattice y_module =
        induced_module_on_sublattice(restrict_to(lattice, h), y);
    GaloisLattice n_module = induced_module_on_sublattice(lattice, n);
    return {std::move(y), std::move(n), std::move(y_module),
            std::move(n_module)};
}

FinAbGroup h1(const GaloisLattice& lattice, const Subgroup& h) {
    const std::size_t d = lattice.rank;
    const auto& elems = h.elements();
    const std::size_t m = elems.size();
    // unknowns: f(h) in Z^d per element, as one stacked vector of length m*d
    auto block_of = [&](std::size_t g) { return h.index_of(g); };

    IntMatrix cocycle(m * m * d, m * d);
    std::size_t row = 0;
    for (std::size_t a : elems)
        for (std::size_t b : elems) {
            const std::size_t ab = lattice.group.mult(a, b);
            const std::size_t ba_block = block_of(ab);
            const std::size_t a_block = block_of(a);
            const std::size_t b_block = block_of(b);
            const IntMatrix& rho_a = lattice.act(a);
            // f(ab) - f(a) - action(a) f(b) = 0
            for (std::size_t i = 0; i < d; ++i) {
                cocycle(row + i, ba_block * d + i) += 1;
                cocycle(row + i, a_block * d + i) -= 1;
                for (std::size_t j = 0; j < d; ++j)
                    cocycle(row + i, b_block * d + j) -= rho_a(i, j);
            }
            row += d;
        }
    IntMatrix cocycles = kernel_lattice(cocycle);

    IntMatrix coboundaries(0, d);
    for (std::size_t g : elems)
        coboundaries =
            vstack(coboundaries, lattice.act(g) - IntMatrix::identity(d));

    FinAbGroup result = lattice_quotient(cocycles, coboundaries);
    if (result.free_rank() != 0)
        throw InternalError("H^1 of a finite group on a lattice came out infinite");
    return result;
}

std::vector<Int> character(const GaloisLattice& lattice) {
    std::vector<Int> chi(lattice.group.order());
    for (std::size_t g = 0; g < chi.size(); ++g) {
        Int trace = 0;
        for (std::size_t i = 0; i < lattice.rank; ++i)
            trace += lattice.act(g)(i, i);
        chi[g] = trace;
    }
    return chi;
}

GaloisLattice dual_lattice(const GaloisLattice& lattice) {
    GaloisLattice dual{lattice.group, lattice.rank, {}};
    dual.action.reserve(lattice.action.size());
    for (std::size_t g = 0; g < lattice.group.order(); ++g)
        dual.action.push_back(lattice.act(lattice.group.inverse(g)).transposed());
    return dual;
}

GaloisLattice restrict_to(const GaloisLattice& lattice, const Subgroup& d) {
    GaloisLattice out{d.as_group(), lattice.rank, {}};
    out.action.reserve(d.size());
    for (std::size_t g : d.elements())
        out.action.push_back(lattice.act(g));
    return out;
}

GaloisLattice induced_module_on_sublattice(const GaloisLattice& lattice,
                                           const IntMatrix& basis) {
    GaloisLattice out{lattice.group, basis.cols(), {}};
    out.action.reserve(lattice.group.order());
    for (std::size_t g = 0; g < lattice.group.order(); ++g)
        out.action.push_back(solve_exact(basis, lattice.act(g) * basis));
    return out;
}

} // namespace torus
