#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pmetric {

/// Largest ground set supported by the bitmask representation.
inline constexpr int kMaxElements = 16;

/// Subset of [n] = {1..n}, stored as a bitmask. Element i lives in bit i-1.
class ElementSet {
public:
    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint32_t bits) : bits_(bits) {}
    ElementSet(std::initializer_list<int> elements) {
        for (int e : elements) insert(e);
    }

    static ElementSet from_elements(const std::vector<int>& elements);
    /// {1..n}
    static constexpr ElementSet full(int n) {
        return ElementSet(n >= 32 ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1));
    }

    constexpr std::uint32_t bits() const { return bits_; }
    constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1u; }
    constexpr void insert(int element) { bits_ |= std::uint32_t{1} << (element - 1); }
    constexpr void erase(int element) { bits_ &= ~(std::uint32_t{1} << (element - 1)); }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    /// Least element, or 0 when empty.
    constexpr int min() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
    constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(ElementSet other) const { return (bits_ & other.bits_) != 0; }

    std::vector<int> elements() const;
    std::string to_string() const;  // "{1,3}"

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet(bits_ & ~o.bits_); }
    constexpr ElementSet& operator|=(ElementSet o) { bits_ |= o.bits_; return *this; }
    constexpr ElementSet& operator&=(ElementSet o) { bits_ &= o.bits_; return *this; }

    constexpr bool operator==(const ElementSet&) const = default;
    /// Orders by bitmask value; used only for canonical containers.
    constexpr auto operator<=>(const ElementSet&) const = default;

private:
    std::uint32_t bits_ = 0;
};

/// Calls fn(subset) for every subset of `set`, including empty and `set` itself.
template <class Fn>
void for_each_subset(ElementSet set, Fn&& fn) {
    const std::uint32_t m = set.bits();
    std::uint32_t s = 0;
    while (true) {
        fn(ElementSet(s));
        if (s == m) break;
        s = (s - m) & m;
    }
}

}  // namespace pmetric
