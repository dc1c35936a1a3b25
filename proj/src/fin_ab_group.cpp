#include "torus/fin_ab_group.hpp"

#include "torus/errors.hpp"
#include "torus/lattice_ops.hpp"

#include <sstream>
#include <utility>

namespace torus {

FinAbGroup::FinAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors)
    : free_rank_(free_rank), factors_(std::move(invariant_factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i] < 2)
            throw ValidationError("invariant factors must be >= 2");
        if (i > 0 && factors_[i] % factors_[i - 1] != 0)
            throw ValidationError("invariant factors must form a divisibility chain");
    }
}

Int FinAbGroup::torsion_order() const {
    Int order = 1;
    for (const Int& d : factors_)
        order *= d;
    return order;
}

std::string FinAbGroup::to_string() const {
    if (is_trivial())
        return "0";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first)
            os << " ⊕ ";
        first = false;
    };
    if (free_rank_ == 1) {
        sep();
        os << "ℤ";
    } else if (free_rank_ > 1) {
        sep();
        os << "ℤ^" << free_rank_;
    }
    for (const Int& d : factors_) {
        sep();
        os << "ℤ/" << d;
    }
    return os.str();
}

FinAbGroup FinAbGroup::direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
    // merging two divisor chains: read the canonical chain off the Smith
    // form of the diagonal matrix of all factors
    const std::size_t k = a.factors_.size() + b.factors_.size();
    IntMatrix diag(k, k);
    std::size_t i = 0;
    for (const Int& d : a.factors_)
        diag(i, i) = d, ++i;
    for (const Int& d : b.factors_)
        diag(i, i) = d, ++i;
    FinAbGroup torsion = cokernel_structure(diag);
    return FinAbGroup(a.free_rank_ + b.free_rank_, torsion.invariant_factors());
}

} // namespace torus
