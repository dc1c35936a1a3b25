#pragma once

#include "torus/int_matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace torus {

// Structure of a finitely generated abelian group: free rank plus the chain
// of invariant factors d_1 | d_2 | ... with every d_i >= 2.  The trivial
// group is free_rank 0 with no factors.
class FinAbGroup {
public:
    FinAbGroup() = default;
    FinAbGroup(std::size_t free_rank, std::vector<Int> invariant_factors);

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<Int>& invariant_factors() const { return factors_; }

    Int torsion_order() const;
    bool is_trivial() const { return free_rank_ == 0 && factors_.empty(); }
    bool is_torsion_free() const { return factors_.empty(); }

    bool operator==(const FinAbGroup& other) const = default;

    // "0", "ℤ", "ℤ^r", "ℤ/d", joined with " ⊕ ", free part first.
    std::string to_string() const;

    static FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b);

private:
    std::size_t free_rank_ = 0;
    std::vector<Int> factors_;
};

} // namespace torus
