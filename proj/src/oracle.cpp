#include "borsuk/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace borsuk {

namespace {

// Member sets as packed bitsets keyed for dedup during enumeration.
using Bits = std::vector<std::uint64_t>;

Bits empty_bits(int order) { return Bits((order + 63) / 64, 0); }

void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1; }

int popcount(const Bits& b) {
    int n = 0;
    for (auto w : b) n += __builtin_popcountll(w);
    return n;
}

std::vector<int> bits_to_members(const Bits& b, int order) {
    std::vector<int> members;
    for (int i = 0; i < order; ++i) {
        if (test_bit(b, i)) members.push_back(i);
    }
    return members;
}

}  // namespace

ExplicitFiniteGroup::ExplicitFiniteGroup(std::vector<int> cyclic_orders, int order_bound)
    : orders_(std::move(cyclic_orders)) {
    long long order = 1;
    for (int n : orders_) {
        if (n < 2) throw std::invalid_argument("ExplicitFiniteGroup: cyclic order must be >= 2");
        order *= n;
        if (order > order_bound) {
            throw OrderTooLarge("group order exceeds the bound of " +
                                std::to_string(order_bound));
        }
    }
    order_ = static_cast<int>(order);

    strides_.assign(orders_.size(), 1);
    for (int i = static_cast<int>(orders_.size()) - 2; i >= 0; --i) {
        strides_[i] = strides_[i + 1] * orders_[i + 1];
    }

    add_table_.resize(static_cast<std::size_t>(order_) * order_);
    neg_table_.resize(order_);
    for (int x = 0; x < order_; ++x) {
        std::vector<int> rx = decode(x);
        for (std::size_t k = 0; k < rx.size(); ++k) {
            rx[k] = rx[k] == 0 ? 0 : orders_[k] - rx[k];
        }
        neg_table_[x] = static_cast<std::int16_t>(encode(rx));
    }
    for (int x = 0; x < order_; ++x) {
        std::vector<int> rx = decode(x);
        for (int y = 0; y < order_; ++y) {
            std::vector<int> ry = decode(y);
            for (std::size_t k = 0; k < ry.size(); ++k) {
                ry[k] = (rx[k] + ry[k]) % orders_[k];
            }
            add_table_[static_cast<std::size_t>(x) * order_ + y] =
                static_cast<std::int16_t>(encode(ry));
        }
    }
}

std::vector<int> ExplicitFiniteGroup::decode(int code) const {
    std::vector<int> residues(orders_.size());
    for (std::size_t k = 0; k < orders_.size(); ++k) {
        residues[k] = (code / strides_[k]) % orders_[k];
    }
    return residues;
}

int ExplicitFiniteGroup::encode(const std::vector<int>& residues) const {
    int code = 0;
    for (std::size_t k = 0; k < residues.size(); ++k) {
        code += residues[k] * strides_[k];
    }
    return code;
}

int ExplicitFiniteGroup::element_order(int x) const {
    int n = 1;
    int acc = x;
    while (acc != 0) {
        acc = add(acc, x);
        ++n;
    }
    return n;
}

Subgroup::Subgroup(const ExplicitFiniteGroup& parent, std::vector<int> members)
    : parent_(&parent), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty() || members_[0] != 0)
        throw std::invalid_argument("Subgroup: must contain zero");
    Bits present = empty_bits(parent.order());
    for (int m : members_) {
        if (m < 0 || m >= parent.order())
            throw std::invalid_argument("Subgroup: member out of range");
        set_bit(present, m);
    }
    for (int x : members_) {
        if (!test_bit(present, parent.neg(x)))
            throw std::invalid_argument("Subgroup: not closed under negation");
        for (int y : members_) {
            if (!test_bit(present, parent.add(x, y)))
                throw std::invalid_argument("Subgroup: not closed under addition");
        }
    }
    if (parent.order() % static_cast<int>(members_.size()) != 0)
        throw std::invalid_argument("Subgroup: size does not divide the group order");
}

namespace {

// Closure of H u {g}: the union of the cosets H + k*g. H must be a subgroup.
Bits extend(const ExplicitFiniteGroup& g, const Bits& h_bits, const std::vector<int>& h_members,
            int gen) {
    Bits result = h_bits;
    std::vector<int> acc_members = h_members;
    int shift = gen;
    while (!test_bit(h_bits, shift)) {
        for (int m : h_members) set_bit(result, g.add(m, shift));
        shift = g.add(shift, gen);
    }
    return result;
}

}  // namespace

std::vector<Subgroup> all_subgroups(const ExplicitFiniteGroup& g) {
    std::set<Bits> seen;
    Bits trivial = empty_bits(g.order());
    set_bit(trivial, 0);
    seen.insert(trivial);
    std::vector<Bits> queue{trivial};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Bits current = queue[head];
        std::vector<int> members = bits_to_members(current, g.order());
        for (int gen = 1; gen < g.order(); ++gen) {
            if (test_bit(current, gen)) continue;
            Bits grown = extend(g, current, members, gen);
            if (seen.insert(grown).second) queue.push_back(grown);
        }
    }

    std::vector<std::vector<int>> member_lists;
    member_lists.reserve(seen.size());
    for (const Bits& b : seen) member_lists.push_back(bits_to_members(b, g.order()));
    std::sort(member_lists.begin(), member_lists.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });

    std::vector<Subgroup> result;
    result.reserve(member_lists.size());
    for (auto& members : member_lists) result.emplace_back(g, std::move(members));
    return result;
}

AbelianGroup subgroup_iso_type(const Subgroup& h) {
    const ExplicitFiniteGroup& g = h.parent();

    // Small generating set: sweep members in order, keeping the ones that
    // enlarge the generated subgroup.
    Bits span = empty_bits(g.order());
    set_bit(span, 0);
    std::vector<int> span_members{0};
    std::vector<int> generators;
    for (int m : h.members()) {
        if (test_bit(span, m)) continue;
        generators.push_back(m);
        span = extend(g, span, span_members, m);
        span_members = bits_to_members(span, g.order());
        if (static_cast<int>(span_members.size()) == h.size()) break;
    }

    // Relations among the generators: x gives a relation exactly when
    // sum x_i v_i = 0 in G, i.e. V x = D y over Z. The kernel of [V | -D]
    // projects bijectively onto that relation lattice.
    const std::size_t m = generators.size();
    const std::size_t k = g.cyclic_orders().size();
    PresentationMatrix lifted(k, m + k);
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<int> residues = g.decode(generators[j]);
        for (std::size_t i = 0; i < k; ++i) lifted.at(i, j) = residues[i];
    }
    for (std::size_t i = 0; i < k; ++i) lifted.at(i, m + i) = -Int(g.cyclic_orders()[i]);

    std::vector<std::vector<Int>> kernel = kernel_basis(lifted);
    PresentationMatrix relations(kernel.size(), m);
    for (std::size_t r = 0; r < kernel.size(); ++r) {
        for (std::size_t j = 0; j < m; ++j) relations.at(r, j) = kernel[r][j];
    }
    return group_from_presentation(relations);
}

namespace {

Bits subgroup_bits(const Subgroup& h) {
    Bits b = empty_bits(h.parent().order());
    for (int m : h.members()) set_bit(b, m);
    return b;
}

bool has_complement(const std::vector<Bits>& lattice, const std::vector<int>& sizes,
                    const Bits& h, int h_size, int order) {
    const int complement_size = order / h_size;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (sizes[i] != complement_size) continue;
        Bits meet(lattice[i].size());
        for (std::size_t w = 0; w < meet.size(); ++w) meet[w] = lattice[i][w] & h[w];
        // Trivial intersection plus matching sizes forces H + K = G.
        if (popcount(meet) == 1) return true;
    }
    return false;
}

}  // namespace

bool is_direct_summand(const Subgroup& h) {
    std::vector<Subgroup> lattice = all_subgroups(h.parent());
    std::vector<Bits> bits;
    std::vector<int> sizes;
    bits.reserve(lattice.size());
    for (const Subgroup& s : lattice) {
        bits.push_back(subgroup_bits(s));
        sizes.push_back(s.size());
    }
    return has_complement(bits, sizes, subgroup_bits(h), h.size(), h.parent().order());
}

std::vector<AbelianGroup> bruteforce_summand_classes(const ExplicitFiniteGroup& g) {
    std::vector<Subgroup> lattice = all_subgroups(g);
    std::vector<Bits> bits;
    std::vector<int> sizes;
    bits.reserve(lattice.size());
    for (const Subgroup& s : lattice) {
        bits.push_back(subgroup_bits(s));
        sizes.push_back(s.size());
    }

    std::vector<AbelianGroup> classes;
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        if (!has_complement(bits, sizes, bits[i], sizes[i], g.order())) continue;
        classes.push_back(subgroup_iso_type(lattice[i]));
    }
    std::sort(classes.begin(), classes.end(),
              [](const AbelianGroup& x, const AbelianGroup& y) { return compare(x, y) < 0; });
    classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
    return classes;
}

}  // namespace borsuk
