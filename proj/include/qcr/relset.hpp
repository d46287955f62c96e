#pragma once

#include <bit>
#include <cstdint>

namespace qcr {

/// Index of a basic relation inside its calculus.
using Basic = std::uint8_t;

/// A set of basic relations of one calculus, stored as a bit mask. Bit b is
/// set iff basic b is in the set. At most 16 basics are supported.
class RelSet {
 public:
  using mask_type = std::uint16_t;

  constexpr RelSet() = default;
  constexpr explicit RelSet(mask_type bits) : bits_(bits) {}

  static constexpr RelSet of(Basic b) { return RelSet(static_cast<mask_type>(1u << b)); }
  static constexpr RelSet first(unsigned count) {
    return RelSet(static_cast<mask_type>((1u << count) - 1u));
  }

  constexpr mask_type bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(Basic b) const { return (bits_ >> b) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool is_atomic() const { return std::has_single_bit(bits_); }
  constexpr bool subset_of(RelSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(RelSet o) const { return (bits_ & o.bits_) != 0; }
  /// Lowest basic in the set; undefined on the empty set.
  constexpr Basic lowest() const { return static_cast<Basic>(std::countr_zero(bits_)); }

  constexpr RelSet operator&(RelSet o) const { return RelSet(bits_ & o.bits_); }
  constexpr RelSet operator|(RelSet o) const { return RelSet(bits_ | o.bits_); }
  constexpr RelSet minus(RelSet o) const { return RelSet(bits_ & ~o.bits_); }
  constexpr RelSet& operator&=(RelSet o) { bits_ &= o.bits_; return *this; }
  constexpr RelSet& operator|=(RelSet o) { bits_ |= o.bits_; return *this; }
  constexpr bool operator==(const RelSet&) const = default;
  constexpr auto operator<=>(const RelSet&) const = default;

  /// Iterates the basics in increasing index order.
  class iterator {
   public:
    constexpr explicit iterator(mask_type rest) : rest_(rest) {}
    constexpr Basic operator*() const { return static_cast<Basic>(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= static_cast<mask_type>(rest_ - 1); return *this; }
    constexpr bool operator==(const iterator&) const = default;

   private:
    mask_type rest_;
  };
  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

 private:
  mask_type bits_ = 0;
};

}  // namespace qcr
