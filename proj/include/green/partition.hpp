#pragma once

#include <compare>
#include <string>
#include <vector>

#include "green/bigint.hpp"

namespace green {

/// An integer partition: weakly decreasing positive parts.
///
/// Partitions index everything in this library: unipotent classes of
/// GL_n(F_q) by Jordan type, maximal-torus classes by the cycle type of a
/// Weyl group element, and the rows/columns of every table.  The canonical
/// ordering of the partitions of n is reverse-lexicographic, (n) first and
/// (1^n) last; `Partition::all(n)` is the single source of truth for it.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }          // sum of parts
    int num_parts() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < num_parts() ? parts_[i] : 0; }

    /// Number of parts equal to v.
    int multiplicity(int v) const;

    /// Transpose of the Young diagram.
    Partition conjugate() const;

    /// n(mu) = sum_i (i-1) * mu_i.
    int n_stat() const;

    /// Centralizer order of a permutation of this cycle type in S_n:
    /// prod_i i^{m_i} * m_i!.
    BigInt z_order() const;

    /// Dominance order: this >= other coordinatewise on partial sums.
    bool dominates(const Partition& other) const;

    /// Parts joined by '+', e.g. "3+2+1"; the empty partition prints "0".
    std::string label() const;

    bool operator==(const Partition&) const = default;
    // Canonical (reverse-lexicographic) order: larger parts first.
    std::strong_ordering operator<=>(const Partition& o) const;

    /// All partitions of n in canonical order.
    static std::vector<Partition> all(int n);

    /// Index of this partition within Partition::all(size()).
    int canonical_index() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// p(n), counted independently of the enumeration (recurrence on
/// largest-part bound); used as a cross-check oracle.
BigInt partition_count(int n);

} // namespace green
