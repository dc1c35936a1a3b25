#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace torus {

// Finite group presented by an explicit multiplication table.  Element
// indices run 0..order-1 with the identity at index 0; the table is fully
// validated on construction (identity, inverses, associativity).
class FiniteGroup {
public:
    FiniteGroup() : FiniteGroup(std::vector<std::vector<std::size_t>>{{0}}) {}
    explicit FiniteGroup(std::vector<std::vector<std::size_t>> mult_table);

    static FiniteGroup trivial();
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup dihedral(std::size_t n); // order 2n
    static FiniteGroup quaternion();            // order 8
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t order() const { return table_.size(); }
    std::size_t mult(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    std::size_t element_order(std::size_t a) const;
    std::size_t power(std::size_t a, std::size_t k) const;

    const std::vector<std::vector<std::size_t>>& mult_table() const {
        return table_;
    }

    bool operator==(const FiniteGroup& other) const {
        return table_ == other.table_;
    }

private:
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
};

// Subgroup given by its sorted element list (always containing 0).
// Closure under products and inverses is validated on construction.
// Holds its own copy of the parent group; purely a value.
class Subgroup {
public:
    Subgroup(FiniteGroup parent, std::vector<std::size_t> elements);

    static Subgroup trivial(const FiniteGroup& g);
    static Subgroup whole(const FiniteGroup& g);
    static Subgroup generated_by(const FiniteGroup& g,
                                 const std::vector<std::size_t>& generators);

    const FiniteGroup& parent() const { return parent_; }
    const std::vector<std::size_t>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }

    bool contains(std::size_t g) const;
    // position of g in the sorted element list; throws if absent
    std::size_t index_of(std::size_t g) const;

    bool is_normal() const; // normal in the parent
    // normality inside a larger subgroup of the same parent
    bool is_normal_in(const Subgroup& container) const;

    // the subgroup as a standalone group, elements reindexed in sorted order
    FiniteGroup as_group() const;

private:
    FiniteGroup parent_;
    std::vector<std::size_t> elements_;
};

} // namespace torus
