#include "ramsey/color.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

ColorPermutation::ColorPermutation(std::array<Color, kNumColors> image) : image_(image) {
  ColorSet seen;
  for (Color c : image_) {
    if (to_index(c) < 0 || to_index(c) >= kNumColors)
      throw InvalidArgument("color permutation: color out of range");
    seen = ColorSet(static_cast<std::uint8_t>(seen.bits() | ColorSet::of(c).bits()));
  }
  if (seen.size() != kNumColors) throw InvalidArgument("color permutation is not a bijection");
}

ColorPermutation ColorPermutation::cyclic() {
  return ColorPermutation({sigma(Color::Blue), sigma(Color::Red), sigma(Color::Yellow)});
}

ColorPermutation ColorPermutation::then(const ColorPermutation& next) const {
  return ColorPermutation({next(image_[0]), next(image_[1]), next(image_[2])});
}

}  // namespace ramsey
