#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <ostream>
#include <string>
#include <vector>

namespace isogame {

/// Largest supported graph order; a vertex set fits in one 64-bit word and the
/// top bit stays free for the solver's mover flag.
inline constexpr int max_order = 63;

/// A set of vertices of one fixed graph, stored as a bit mask.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet singleton(int v) { return VertexSet{std::uint64_t{1} << v}; }

    /// {0, ..., n-1}
    static constexpr VertexSet first(int n)
    {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    static VertexSet of(std::initializer_list<int> vs)
    {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    template <class Range>
    static VertexSet from_range(const Range& vs)
    {
        VertexSet s;
        for (int v : vs) s.insert(v);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    /// Smallest member; undefined on the empty set.
    constexpr int lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return a |= b; }
    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return a &= b; }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return a -= b; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int*;
        using reference = int;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        friend constexpr bool operator==(iterator, iterator) = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{}; }

    std::vector<int> to_vector() const { return {begin(), end()}; }

    /// "{0,2,5}"
    std::string to_string() const
    {
        std::string out = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) out += ',';
            out += std::to_string(v);
            sep = true;
        }
        return out + "}";
    }

    friend std::ostream& operator<<(std::ostream& os, VertexSet s) { return os << s.to_string(); }

private:
    std::uint64_t bits_ = 0;
};

} // namespace isogame
