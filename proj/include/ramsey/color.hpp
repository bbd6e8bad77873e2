#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ramsey {

/// Edge label. The numeric order Blue < Red < Yellow is the tie-breaking
/// order used everywhere a deterministic choice between colors is made.
enum class Color : std::uint8_t { Blue = 0, Red = 1, Yellow = 2 };

inline constexpr int kNumColors = 3;
inline constexpr std::array<Color, kNumColors> kAllColors = {Color::Blue, Color::Red,
                                                             Color::Yellow};

constexpr int to_index(Color c) { return static_cast<int>(c); }
constexpr Color color_from_index(int i) { return static_cast<Color>(i); }

constexpr char to_char(Color c) {
  constexpr std::array<char, kNumColors> chars = {'B', 'R', 'Y'};
  return chars[to_index(c)];
}

constexpr std::optional<Color> color_from_char(char ch) {
  switch (ch) {
    case 'B': return Color::Blue;
    case 'R': return Color::Red;
    case 'Y': return Color::Yellow;
    default: return std::nullopt;
  }
}

constexpr std::string_view color_name(Color c) {
  constexpr std::array<std::string_view, kNumColors> names = {"blue", "red", "yellow"};
  return names[to_index(c)];
}

/// The cyclic recoloring Red -> Yellow -> Blue -> Red used to carry the
/// A-B cross edges of the cylinder onto the B-C and C-A cross edges.
constexpr Color sigma(Color c) {
  switch (c) {
    case Color::Red: return Color::Yellow;
    case Color::Yellow: return Color::Blue;
    case Color::Blue: return Color::Red;
  }
  return c;
}

/// A bijection on the three colors, stored as its image table.
class ColorPermutation {
 public:
  constexpr ColorPermutation() : image_{Color::Blue, Color::Red, Color::Yellow} {}
  // Throws std::invalid_argument when the table is not a bijection.
  explicit ColorPermutation(std::array<Color, kNumColors> image);

  static ColorPermutation identity() { return {}; }
  static ColorPermutation cyclic();  // sigma

  constexpr Color operator()(Color c) const { return image_[to_index(c)]; }
  ColorPermutation then(const ColorPermutation& next) const;

  friend bool operator==(const ColorPermutation&, const ColorPermutation&) = default;

 private:
  std::array<Color, kNumColors> image_;
};

/// Small bitset over colors, bit i = color with index i.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint8_t bits) : bits_(bits & 0b111) {}
  static constexpr ColorSet all() { return ColorSet(0b111); }
  static constexpr ColorSet of(Color c) { return ColorSet(std::uint8_t(1u << to_index(c))); }
  static constexpr ColorSet of(Color a, Color b) { return ColorSet(std::uint8_t(of(a).bits_ | of(b).bits_)); }

  constexpr bool contains(Color c) const { return (bits_ >> to_index(c)) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return (bits_ & 1) + ((bits_ >> 1) & 1) + ((bits_ >> 2) & 1); }
  constexpr bool singleton() const { return size() == 1; }
  constexpr std::uint8_t bits() const { return bits_; }
  // Lowest color in the set; only meaningful when non-empty.
  constexpr Color first() const {
    for (Color c : kAllColors)
      if (contains(c)) return c;
    return Color::Blue;
  }

  friend constexpr bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint8_t bits_ = 0;
};

}  // namespace ramsey
