#include "torus/lattice_ops.hpp"

#include "torus/errors.hpp"

#include <cstdlib>
#include <utility>

namespace torus {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// floor division for positive divisor
Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a < 0)
        --q;
    return q;
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(a, j), m(b, j));
}

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        std::swap(m(i, a), m(i, b));
}

// row dst += c * row src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(dst, j) += c * m(src, j);
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        m(i, dst) += c * m(i, src);
}

void negate_row(IntMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j)
        m(r, j) = -m(r, j);
}

// Elimination state; every operation on d is mirrored into u or v, so
// u*a*v = d stays an invariant and u, v stay unimodular.
struct SnfState {
    IntMatrix d;
    IntMatrix u;
    IntMatrix v;
    bool with_u;
    bool with_v;

    void row_swap(std::size_t a, std::size_t b) {
        swap_rows(d, a, b);
        if (with_u)
            swap_rows(u, a, b);
    }
    void col_swap(std::size_t a, std::size_t b) {
        swap_cols(d, a, b);
        if (with_v)
            swap_cols(v, a, b);
    }
    void row_add(std::size_t dst, std::size_t src, const Int& c) {
        add_row(d, dst, src, c);
        if (with_u)
            add_row(u, dst, src, c);
    }
    void col_add(std::size_t dst, std::size_t src, const Int& c) {
        add_col(d, dst, src, c);
        if (with_v)
            add_col(v, dst, src, c);
    }
    void row_negate(std::size_t r) {
        negate_row(d, r);
        if (with_u)
            negate_row(u, r);
    }
};

SnfState snf_impl(const IntMatrix& a, bool with_u, bool with_v) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfState st{a,
                with_u ? IntMatrix::identity(m) : IntMatrix{},
                with_v ? IntMatrix::identity(n) : IntMatrix{},
                with_u,
                with_v};
    const std::size_t nmin = m < n ? m : n;

    bool exhausted = false;
    for (std::size_t t = 0; t < nmin && !exhausted; ++t) {
        for (;;) {
            // minimal non-zero pivot in the trailing submatrix
            std::size_t pi = t, pj = t;
            bool found = false;
            Int best;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (st.d(i, j) != 0) {
                        Int mag = abs_int(st.d(i, j));
                        if (!found || mag < best) {
                            best = mag;
                            pi = i;
                            pj = j;
                            found = true;
                        }
                    }
            if (!found) {
                exhausted = true;
                break;
            }
            if (pi != t)
                st.row_swap(t, pi);
            if (pj != t)
                st.col_swap(t, pj);

            for (std::size_t i = t + 1; i < m; ++i)
                if (st.d(i, t) != 0) {
                    Int q = st.d(i, t) / st.d(t, t);
                    if (q != 0)
                        st.row_add(i, t, -q);
                }
            for (std::size_t j = t + 1; j < n; ++j)
                if (st.d(t, j) != 0) {
                    Int q = st.d(t, j) / st.d(t, t);
                    if (q != 0)
                        st.col_add(j, t, -q);
                }

            bool lone = true;
            for (std::size_t i = t + 1; i < m && lone; ++i)
                if (st.d(i, t) != 0)
                    lone = false;
            for (std::size_t j = t + 1; j < n && lone; ++j)
                if (st.d(t, j) != 0)
                    lone = false;
            if (!lone)
                continue; // smaller remainders appeared, re-pick pivot

            // pivot must divide every remaining entry
            std::size_t bad_row = 0;
            bool divides_all = true;
            for (std::size_t i = t + 1; i < m && divides_all; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (st.d(i, j) % st.d(t, t) != 0) {
                        divides_all = false;
                        bad_row = i;
                        break;
                    }
            if (!divides_all) {
                st.row_add(t, bad_row, 1);
                continue;
            }
            break;
        }
    }

    for (std::size_t t = 0; t < nmin; ++t)
        if (st.d(t, t) < 0)
            st.row_negate(t);
    return st;
}

IntMatrix take_rows(const IntMatrix& a, std::size_t count) {
    IntMatrix out(count, a.cols());
    for (std::size_t i = 0; i < count; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out(i, j) = a(i, j);
    return out;
}

// Unique upper-echelon basis of the row span: positive pivots, entries above
// each pivot reduced into [0, pivot).  Zero rows are dropped.
IntMatrix row_hnf(IntMatrix h) {
    const std::size_t m = h.rows();
    const std::size_t n = h.cols();
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        for (;;) {
            std::size_t p = r;
            bool found = false;
            Int best;
            for (std::size_t i = r; i < m; ++i)
                if (h(i, j) != 0) {
                    Int mag = abs_int(h(i, j));
                    if (!found || mag < best) {
                        best = mag;
                        p = i;
                        found = true;
                    }
                }
            if (!found)
                break;
            if (p != r)
                swap_rows(h, r, p);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i)
                if (h(i, j) != 0) {
                    Int q = h(i, j) / h(r, j);
                    if (q != 0)
                        add_row(h, i, r, -q);
                    if (h(i, j) != 0)
                        clean = false;
                }
            if (clean)
                break;
        }
        if (h(r, j) == 0)
            continue;
        if (h(r, j) < 0)
            negate_row(h, r);
        for (std::size_t i = 0; i < r; ++i) {
            Int q = floor_div(h(i, j), h(r, j));
            if (q != 0)
                add_row(h, i, r, -q);
        }
        ++r;
    }
    return take_rows(h, r);
}

} // namespace

SnfDecomposition smith_normal_form(const IntMatrix& a) {
    SnfState st = snf_impl(a, true, true);
    return {std::move(st.u), std::move(st.d), std::move(st.v)};
}

std::vector<Int> smith_diagonal(const IntMatrix& a) {
    SnfState st = snf_impl(a, false, false);
    const std::size_t nmin = a.rows() < a.cols() ? a.rows() : a.cols();
    std::vector<Int> diag(nmin);
    for (std::size_t i = 0; i < nmin; ++i)
        diag[i] = st.d(i, i);
    return diag;
}

IntMatrix column_hnf_basis(const IntMatrix& a) {
    return row_hnf(a.transposed()).transposed();
}

IntMatrix kernel_lattice(const IntMatrix& a) {
    const std::size_t n = a.cols();
    SnfState st = snf_impl(a, false, true);
    const std::size_t nmin = a.rows() < n ? a.rows() : n;
    std::size_t rank = 0;
    while (rank < nmin && st.d(rank, rank) != 0)
        ++rank;
    IntMatrix basis(n, n - rank);
    for (std::size_t j = rank; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            basis(i, j - rank) = st.v(i, j);
    return column_hnf_basis(basis);
}

FinAbGroup cokernel_structure(const IntMatrix& a) {
    std::vector<Int> diag = smith_diagonal(a);
    std::size_t rank = 0;
    std::vector<Int> factors;
    for (const Int& d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1)
                factors.push_back(d);
        }
    return FinAbGroup(a.rows() - rank, std::move(factors));
}

IntMatrix solve_exact(const IntMatrix& basis, const IntMatrix& rhs) {
    if (basis.rows() != rhs.rows())
        throw ValidationError("solve_exact dimension mismatch");
    const std::size_t m = basis.rows();
    const std::size_t s = basis.cols();
    SnfState st = snf_impl(basis, true, true);
    std::size_t rank = 0;
    const std::size_t nmin = m < s ? m : s;
    while (rank < nmin && st.d(rank, rank) != 0)
        ++rank;
    if (rank < s)
        throw ValidationError("solve_exact: basis does not have full column rank");
    IntMatrix w = st.u * rhs;
    IntMatrix y(s, rhs.cols());
    for (std::size_t j = 0; j < rhs.cols(); ++j) {
        for (std::size_t i = 0; i < s; ++i) {
            if (w(i, j) % st.d(i, i) != 0)
                throw NotWellDefined("solve_exact: vector outside the lattice");
            y(i, j) = w(i, j) / st.d(i, i);
        }
        for (std::size_t i = s; i < m; ++i)
            if (w(i, j) != 0)
                throw NotWellDefined("solve_exact: vector outside the lattice");
    }
    return st.v * y;
}

bool in_column_span(const IntMatrix& a, const IntMatrix& vecs) {
    IntMatrix basis = column_hnf_basis(a);
    if (basis.cols() == 0)
        return vecs.is_zero();
    try {
        solve_exact(basis, vecs);
        return true;
    } catch (const NotWellDefined&) {
        return false;
    }
}

FinAbGroup lattice_quotient(const IntMatrix& basis, const IntMatrix& sub) {
    if (basis.cols() == 0) {
        if (!sub.is_zero())
            throw NotWellDefined("lattice_quotient: subgroup not contained in lattice");
        return FinAbGroup();
    }
    return cokernel_structure(solve_exact(basis, sub));
}

FinAbGroup subgroup_structure_in_quotient(const IntMatrix& relations,
                                          const IntMatrix& generators) {
    if (relations.rows() != generators.rows())
        throw ValidationError("subgroup_structure_in_quotient: ambient rank mismatch");
    IntMatrix basis = column_hnf_basis(hstack(generators, relations));
    return lattice_quotient(basis, relations);
}

FinAbGroup kernel_of_endomorphism_on_quotient(const IntMatrix& relations,
                                              const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw ValidationError("kernel_of_endomorphism_on_quotient: endomorphism not square");
    if (relations.rows() != m.rows())
        throw ValidationError("kernel_of_endomorphism_on_quotient: ambient rank mismatch");
    if (relations.cols() > 0 && !in_column_span(relations, m * relations))
        throw NotWellDefined("endomorphism does not preserve the relation lattice");
    // { x : m*x in span(relations) } is the projection of ker[m | -relations]
    IntMatrix k = kernel_lattice(hstack(m, relations.negated()));
    IntMatrix preimage = take_rows(k, m.rows());
    return subgroup_structure_in_quotient(relations, preimage);
}

} // namespace torus
