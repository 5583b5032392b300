#ifndef BORSUK_ORACLE_HPP
#define BORSUK_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "borsuk/abelian.hpp"
#include "borsuk/errors.hpp"

namespace borsuk {

/// A finite abelian group materialized element by element: the direct sum of
/// cyclic groups of the given orders. Elements are addressed by a mixed-radix
/// code in [0, order). Used as brute-force ground truth for the structure
/// theory in the abelian module, so it deliberately shares none of that
/// module's shortcuts.
class ExplicitFiniteGroup {
public:
    static constexpr int kDefaultOrderBound = 512;

    /// cyclic_orders: each >= 2. Throws OrderTooLarge when the product
    /// exceeds the bound.
    explicit ExplicitFiniteGroup(std::vector<int> cyclic_orders,
                                 int order_bound = kDefaultOrderBound);

    int order() const { return order_; }
    const std::vector<int>& cyclic_orders() const { return orders_; }

    int add(int x, int y) const { return add_table_[static_cast<std::size_t>(x) * order_ + y]; }
    int neg(int x) const { return neg_table_[x]; }

    /// Decode an element code into residues, one per cyclic factor.
    std::vector<int> decode(int code) const;
    int encode(const std::vector<int>& residues) const;

    int element_order(int x) const;

private:
    std::vector<int> orders_;
    std::vector<int> strides_;
    int order_;
    std::vector<std::int16_t> add_table_;
    std::vector<std::int16_t> neg_table_;
};

/// A subset of an ExplicitFiniteGroup verified on construction to be a
/// subgroup: contains zero, closed under addition and negation, and its size
/// divides the parent order.
class Subgroup {
public:
    Subgroup(const ExplicitFiniteGroup& parent, std::vector<int> members);

    const ExplicitFiniteGroup& parent() const { return *parent_; }
    /// Member codes, sorted ascending.
    const std::vector<int>& members() const { return members_; }
    int size() const { return static_cast<int>(members_.size()); }

private:
    const ExplicitFiniteGroup* parent_;
    std::vector<int> members_;
};

/// Every subgroup of g, sorted by size and then by the lexicographic member
/// list. Complete by construction: closures of generator subsets, grown one
/// generator at a time from the trivial subgroup.
std::vector<Subgroup> all_subgroups(const ExplicitFiniteGroup& g);

/// Canonical isomorphism type of h, computed from a small generating set via
/// a presentation matrix and Smith normal form.
AbelianGroup subgroup_iso_type(const Subgroup& h);

/// True when some subgroup K of the parent satisfies H n K = 0 and
/// H + K = G. Exhaustive search over all_subgroups.
bool is_direct_summand(const Subgroup& h);

/// Isomorphism classes of direct summands of g, deduplicated and sorted
/// canonically. Independent recomputation of summands_up_to_iso for finite
/// groups.
std::vector<AbelianGroup> bruteforce_summand_classes(const ExplicitFiniteGroup& g);

}  // namespace borsuk

#endif  // BORSUK_ORACLE_HPP
