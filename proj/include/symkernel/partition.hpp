#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symkernel/errors.hpp"

namespace symkernel {

/// Weakly decreasing tuple of non-negative integers of fixed length n.
class Partition {
  public:
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw invalid_dimension_error("partition length must be >= 1");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw invalid_input_error("partition parts must be non-negative");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw invalid_input_error("partition parts must be weakly decreasing");
        }
    }

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    std::span<const int> parts() const { return parts_; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// Strictly decreasing tuple; always of the form m + delta for a unique
/// Partition m with delta = (n-1, ..., 1, 0).
class StrictPartition {
  public:
    explicit StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
        if (parts_.empty())
            throw invalid_dimension_error("strict partition length must be >= 1");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw invalid_input_error("strict partition parts must be non-negative");
            if (i + 1 < parts_.size() && parts_[i] <= parts_[i + 1])
                throw invalid_input_error("strict partition parts must be strictly decreasing");
        }
    }

    /// p = m + delta.
    static StrictPartition from_partition(const Partition& m) {
        const int n = m.length();
        std::vector<int> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = m[i] + (n - 1 - i);
        return StrictPartition(std::move(p));
    }

    /// m = p - delta.
    Partition to_partition() const {
        const int n = length();
        std::vector<int> m(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i)
            m[static_cast<std::size_t>(i)] = parts_[static_cast<std::size_t>(i)] - (n - 1 - i);
        return Partition(std::move(m));
    }

    int length() const { return static_cast<int>(parts_.size()); }
    int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }
    std::span<const int> parts() const { return parts_; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
};

/// The staircase delta = (n-1, n-2, ..., 1, 0).
inline StrictPartition delta(int n) {
    if (n < 1) throw invalid_dimension_error("delta: dimension must be >= 1");
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - 1 - i;
    return StrictPartition(std::move(p));
}

namespace detail {

inline void emit_partitions_of(int n, std::vector<int>& buf, int pos, int remaining,
                               int cap, std::vector<std::vector<int>>& out) {
    if (pos == n) {
        if (remaining == 0) out.push_back(buf);
        return;
    }
    // Remaining slots must be able to absorb what is left.
    const int slots = n - pos;
    const int lo = (remaining + slots - 1) / slots; // smallest feasible leading part
    for (int v = lo; v <= std::min(cap, remaining); ++v) {
        buf[static_cast<std::size_t>(pos)] = v;
        emit_partitions_of(n, buf, pos + 1, remaining - v, v, out);
    }
}

} // namespace detail

/// All partitions of length n and weight exactly `weight`, in ascending
/// lexicographic order of the part tuple.
inline std::vector<Partition> partitions_of_weight(int n, int weight) {
    if (n < 1) throw invalid_dimension_error("partitions_of_weight: n must be >= 1");
    std::vector<std::vector<int>> raw;
    std::vector<int> buf(static_cast<std::size_t>(n), 0);
    detail::emit_partitions_of(n, buf, 0, weight, weight, raw);
    std::sort(raw.begin(), raw.end());
    std::vector<Partition> out;
    out.reserve(raw.size());
    for (auto& r : raw) out.push_back(Partition(std::move(r)));
    return out;
}

/// All partitions of length n with weight <= max_weight in graded
/// lexicographic order (weight first, then lexicographic on the tuple).
/// This ordering is fixed; every series and Gram computation uses it.
inline std::vector<Partition> enumerate_partitions(int n, int max_weight) {
    if (n < 1) throw invalid_dimension_error("enumerate_partitions: n must be >= 1");
    std::vector<Partition> out;
    for (int d = 0; d <= max_weight; ++d) {
        auto layer = partitions_of_weight(n, d);
        out.insert(out.end(), std::make_move_iterator(layer.begin()),
                   std::make_move_iterator(layer.end()));
    }
    return out;
}

/// Strict partitions m + delta for all m with |m| <= max_weight, in the
/// graded-lex order inherited from enumerate_partitions.
inline std::vector<StrictPartition> enumerate_strict_partitions(int n, int max_weight) {
    std::vector<StrictPartition> out;
    for (const Partition& m : enumerate_partitions(n, max_weight))
        out.push_back(StrictPartition::from_partition(m));
    return out;
}

/// Sign of a permutation given as the image vector perm[i] = sigma(i).
inline int permutation_sign(std::span<const int> perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return (inversions % 2 == 0) ? 1 : -1;
}

/// Calls f(perm, sign) for every permutation of {0, ..., n-1}.
template <typename F>
void for_each_permutation(int n, F&& f) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        f(std::span<const int>(perm), permutation_sign(perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

/// The S_n-orbit of a tuple as a set of rearrangements.
inline std::set<std::vector<int>> orbit(std::span<const int> p) {
    std::vector<int> v(p.begin(), p.end());
    std::sort(v.begin(), v.end());
    std::set<std::vector<int>> out;
    do {
        out.insert(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

/// True iff the S_n-orbits of p and q are disjoint as multi-index sets.
/// For strict partitions this is equivalent to p != q; the equivalence is
/// what the orbit construction certifies.
inline bool orbit_disjointness(const StrictPartition& p, const StrictPartition& q) {
    if (p.length() != q.length())
        throw invalid_dimension_error("orbit_disjointness: lengths differ");
    const auto op = orbit(p.parts());
    const auto oq = orbit(q.parts());
    for (const auto& t : op)
        if (oq.count(t)) return false;
    return true;
}

} // namespace symkernel
