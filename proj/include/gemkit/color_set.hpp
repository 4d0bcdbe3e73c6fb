#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace gemkit {

using Color = int;
using Vertex = int;

inline constexpr int kMaxColors = 31;

/// A subset of the color palette {0, ..., n}, stored as a bitmask.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr ColorSet all(int num_colors) {
    return ColorSet(num_colors >= 32 ? ~0u : ((1u << num_colors) - 1u));
  }
  static constexpr ColorSet single(Color c) { return ColorSet(1u << c); }
  static ColorSet of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s = s.with(c);
    return s;
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(Color c) const { return (bits_ >> c) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }

  constexpr ColorSet with(Color c) const { return ColorSet(bits_ | (1u << c)); }
  constexpr ColorSet without(Color c) const { return ColorSet(bits_ & ~(1u << c)); }
  /// Complement inside {0, ..., num_colors - 1}.
  constexpr ColorSet complement(int num_colors) const {
    return ColorSet(all(num_colors).bits_ & ~bits_);
  }
  constexpr bool is_subset_of(ColorSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }

  std::vector<Color> colors() const {
    std::vector<Color> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  /// "{0,2,3}"
  std::string to_string() const;

  friend constexpr bool operator==(ColorSet, ColorSet) = default;
  friend constexpr auto operator<=>(ColorSet a, ColorSet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint32_t bits_ = 0;
};

}  // namespace gemkit
