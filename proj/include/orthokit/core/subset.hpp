#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace orthokit {

inline constexpr std::size_t max_elements = 64;

// A set of element indices of some finite orthoset, stored as a bitmask.
class Subset {
 public:
  using mask_type = std::uint64_t;

  constexpr Subset() = default;
  constexpr explicit Subset(mask_type bits) : bits_(bits) {}
  Subset(std::initializer_list<std::size_t> xs) {
    for (auto x : xs) insert(x);
  }

  static constexpr Subset full(std::size_t n) {
    return Subset(n >= 64 ? ~mask_type{0} : ((mask_type{1} << n) - 1));
  }
  static constexpr Subset singleton(std::size_t x) { return Subset(mask_type{1} << x); }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool contains(std::size_t x) const { return (bits_ >> x) & 1U; }
  constexpr void insert(std::size_t x) { bits_ |= mask_type{1} << x; }
  constexpr void erase(std::size_t x) { bits_ &= ~(mask_type{1} << x); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool subset_of(Subset o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(Subset o) const { return (bits_ & o.bits_) != 0; }

  // Least element; undefined on the empty set.
  constexpr std::size_t first() const { return static_cast<std::size_t>(std::countr_zero(bits_)); }

  // Elements other than the falsity 0.
  constexpr Subset proper() const { return Subset(bits_ & ~mask_type{1}); }

  std::vector<std::size_t> elements() const {
    std::vector<std::size_t> out;
    for (mask_type b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (mask_type b = bits_; b != 0; b &= b - 1) f(static_cast<std::size_t>(std::countr_zero(b)));
  }

  friend constexpr Subset operator&(Subset a, Subset b) { return Subset(a.bits_ & b.bits_); }
  friend constexpr Subset operator|(Subset a, Subset b) { return Subset(a.bits_ | b.bits_); }
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset(a.bits_ & ~b.bits_); }
  constexpr Subset& operator&=(Subset o) { bits_ &= o.bits_; return *this; }
  constexpr Subset& operator|=(Subset o) { bits_ |= o.bits_; return *this; }

  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset a, Subset b) { return a.bits_ <=> b.bits_; }

  std::string to_string() const {
    std::string s = "{";
    bool first_elem = true;
    for_each([&](std::size_t x) {
      if (!first_elem) s += ",";
      s += std::to_string(x);
      first_elem = false;
    });
    return s + "}";
  }

 private:
  mask_type bits_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, Subset s) { return os << s.to_string(); }

}  // namespace orthokit
