#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <string>

namespace alliance {

inline constexpr int max_order = 64;

/// A set of vertex indices in [0, 64), stored as one machine word.
class vertex_set {
public:
    using mask_type = std::uint64_t;

    constexpr vertex_set() noexcept = default;
    constexpr explicit vertex_set(mask_type mask) noexcept : mask_(mask) {}
    constexpr vertex_set(std::initializer_list<int> vertices) noexcept {
        for (int v : vertices) insert(v);
    }

    /// The set {0, ..., n-1}.
    static constexpr vertex_set first(int n) noexcept {
        return vertex_set(n >= 64 ? ~mask_type{0} : (mask_type{1} << n) - 1);
    }
    static constexpr vertex_set single(int v) noexcept { return vertex_set(mask_type{1} << v); }

    constexpr mask_type mask() const noexcept { return mask_; }
    constexpr bool empty() const noexcept { return mask_ == 0; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr bool contains(int v) const noexcept { return (mask_ >> v) & 1u; }
    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const noexcept { return std::countr_zero(mask_); }
    /// Largest member; undefined on the empty set.
    constexpr int highest() const noexcept { return 63 - std::countl_zero(mask_); }

    constexpr void insert(int v) noexcept { mask_ |= mask_type{1} << v; }
    constexpr void erase(int v) noexcept { mask_ &= ~(mask_type{1} << v); }

    constexpr bool is_subset_of(vertex_set other) const noexcept {
        return (mask_ & ~other.mask_) == 0;
    }

    /// Members of this set that are not in `other`.
    constexpr vertex_set minus(vertex_set other) const noexcept {
        return vertex_set(mask_ & ~other.mask_);
    }
    /// Complement relative to {0, ..., n-1}.
    constexpr vertex_set complement(int n) const noexcept { return first(n).minus(*this); }

    constexpr vertex_set operator|(vertex_set o) const noexcept { return vertex_set(mask_ | o.mask_); }
    constexpr vertex_set operator&(vertex_set o) const noexcept { return vertex_set(mask_ & o.mask_); }
    constexpr vertex_set& operator|=(vertex_set o) noexcept { mask_ |= o.mask_; return *this; }
    constexpr vertex_set& operator&=(vertex_set o) noexcept { mask_ &= o.mask_; return *this; }

    friend constexpr bool operator==(vertex_set, vertex_set) noexcept = default;
    friend constexpr auto operator<=>(vertex_set, vertex_set) noexcept = default;

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::forward_iterator_tag;

        constexpr iterator() noexcept = default;
        constexpr explicit iterator(mask_type rest) noexcept : rest_(rest) {}
        constexpr int operator*() const noexcept { return std::countr_zero(rest_); }
        constexpr iterator& operator++() noexcept { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) noexcept { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) noexcept = default;

    private:
        mask_type rest_ = 0;
    };

    constexpr iterator begin() const noexcept { return iterator(mask_); }
    constexpr iterator end() const noexcept { return iterator(0); }

    std::string to_string() const;

private:
    mask_type mask_ = 0;
};

}  // namespace alliance
