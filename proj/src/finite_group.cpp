#include "torus/finite_group.hpp"

#include "torus/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torus {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> mult_table)
    : table_(std::move(mult_table)) {
    const std::size_t n = table_.size();
    if (n == 0)
        throw ValidationError("group order must be >= 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (table_[i].size() != n)
            throw ValidationError("mult_table is not square");
        for (std::size_t j = 0; j < n; ++j)
            if (table_[i][j] >= n)
                throw ValidationError("mult_table entry out of range");
    }
    for (std::size_t g = 0; g < n; ++g)
        if (table_[0][g] != g || table_[g][0] != g)
            throw ValidationError("identity is not at index 0");
    inverse_.assign(n, n);
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h)
            if (table_[g][h] == 0 && table_[h][g] == 0) {
                inverse_[g] = h;
                break;
            }
        if (inverse_[g] == n)
            throw ValidationError("element without inverse in mult_table");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
                    std::ostringstream os;
                    os << "mult_table not associative at (" << a << "," << b
                       << "," << c << ")";
                    throw ValidationError(os.str());
                }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
    if (n == 0)
        throw ValidationError("cyclic group order must be >= 1");
    std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            t[a][b] = (a + b) % n;
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t n) {
    if (n == 0)
        throw ValidationError("dihedral parameter must be >= 1");
    // indices: r^i -> i, s r^i -> n + i
    const std::size_t m = 2 * n;
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    auto idx = [n](bool flip, std::size_t rot) {
        return (flip ? n : 0) + rot % n;
    };
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) {
            bool fa = a >= n, fb = b >= n;
            std::size_t ra = a % n, rb = b % n;
            // (s^fa r^ra)(s^fb r^rb) = s^(fa xor fb) r^(rb +- ra)
            std::size_t rot = fb ? (rb + n - ra % n) % n : (ra + rb) % n;
            t[a][b] = idx(fa != fb, rot);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::quaternion() {
    // elements: +-1, +-i, +-j, +-k as (sign, axis) with axis 0=1,1=i,2=j,3=k
    auto encode = [](int sign, int axis) {
        return static_cast<std::size_t>(axis * 2 + (sign < 0 ? 1 : 0));
    };
    auto sign_of = [](std::size_t e) { return e % 2 ? -1 : 1; };
    auto axis_of = [](std::size_t e) { return static_cast<int>(e / 2); };
    // axis product table and sign for i,j,k
    auto axis_mult = [](int a, int b, int& sign) {
        static const int prod[4][4] = {
            {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {
            {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
        sign = sgn[a][b];
        return prod[a][b];
    };
    std::vector<std::vector<std::size_t>> t(8, std::vector<std::size_t>(8));
    for (std::size_t a = 0; a < 8; ++a)
        for (std::size_t b = 0; b < 8; ++b) {
            int s;
            int axis = axis_mult(axis_of(a), axis_of(b), s);
            t[a][b] = encode(s * sign_of(a) * sign_of(b), axis);
        }
    return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    const std::size_t na = a.order(), nb = b.order();
    std::vector<std::vector<std::size_t>> t(na * nb,
                                            std::vector<std::size_t>(na * nb));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            t[x][y] = a.mult(x / nb, y / nb) * nb + b.mult(x % nb, y % nb);
    return FiniteGroup(std::move(t));
}

std::size_t FiniteGroup::element_order(std::size_t a) const {
    std::size_t x = a, k = 1;
    while (x != 0) {
        x = mult(x, a);
        ++k;
    }
    return k;
}

std::size_t FiniteGroup::power(std::size_t a, std::size_t k) const {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i)
        x = mult(x, a);
    return x;
}

Subgroup::Subgroup(FiniteGroup parent, std::vector<std::size_t> elements)
    : parent_(std::move(parent)), elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()),
                    elements_.end());
    if (elements_.empty() || elements_[0] != 0)
        throw ValidationError("subgroup must contain the identity");
    for (std::size_t g : elements_)
        if (g >= parent_.order())
            throw ValidationError("subgroup element out of range");
    for (std::size_t g : elements_) {
        if (!contains(parent_.inverse(g)))
            throw ValidationError("subgroup not closed under inverses");
        for (std::size_t h : elements_)
            if (!contains(parent_.mult(g, h)))
                throw ValidationError("subgroup not closed under products");
    }
}

Subgroup Subgroup::trivial(const FiniteGroup& g) { return Subgroup(g, {0}); }

Subgroup Subgroup::whole(const FiniteGroup& g) {
    std::vector<std::size_t> all(g.order());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    return Subgroup(g, std::move(all));
}

Subgroup Subgroup::generated_by(const FiniteGroup& g,
                                const std::vector<std::size_t>& generators) {
    std::set<std::size_t> closure{0};
    for (std::size_t x : generators) {
        if (x >= g.order())
            throw ValidationError("generator out of range");
        closure.insert(x);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::size_t> cur(closure.begin(), closure.end());
        for (std::size_t a : cur)
            for (std::size_t b : cur)
                if (closure.insert(g.mult(a, b)).second)
                    grew = true;
    }
    return Subgroup(g, std::vector<std::size_t>(closure.begin(), closure.end()));
}

bool Subgroup::contains(std::size_t g) const {
    return std::binary_search(elements_.begin(), elements_.end(), g);
}

std::size_t Subgroup::index_of(std::size_t g) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
    if (it == elements_.end() || *it != g)
        throw ValidationError("element not in subgroup");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool Subgroup::is_normal() const {
    for (std::size_t s = 0; s < parent_.order(); ++s)
        for (std::size_t h : elements_)
            if (!contains(parent_.mult(parent_.mult(s, h), parent_.inverse(s))))
                return false;
    return true;
}

bool Subgroup::is_normal_in(const Subgroup& container) const {
    for (std::size_t h : elements_)
        if (!container.contains(h))
            return false;
    for (std::size_t s : container.elements())
        for (std::size_t h : elements_)
            if (!contains(parent_.mult(parent_.mult(s, h), parent_.inverse(s))))
                return false;
    return true;
}

FiniteGroup Subgroup::as_group() const {
    const std::size_t m = elements_.size();
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            t[i][j] = index_of(parent_.mult(elements_[i], elements_[j]));
    return FiniteGroup(std::move(t));
}

} // namespace torus
