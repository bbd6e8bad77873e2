#pragma once

#include <compare>
#include <cstdint>

namespace ramsey {

/// Element of GF(16) in the polynomial basis over GF(2), reduced modulo
/// x^4 + x + 1. Bit i is the coefficient of x^i.
class Gf16 {
 public:
  static constexpr std::uint8_t kModulus = 0b1'0011;  // x^4 + x + 1
  static constexpr int kOrder = 16;

  constexpr Gf16() = default;
  constexpr explicit Gf16(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0xF)) {}

  static constexpr Gf16 zero() { return Gf16(0); }
  static constexpr Gf16 one() { return Gf16(1); }
  static constexpr Gf16 generator() { return Gf16(0b0010); }  // x

  constexpr std::uint8_t bits() const { return bits_; }
  constexpr bool is_zero() const { return bits_ == 0; }

  friend constexpr Gf16 operator+(Gf16 a, Gf16 b) { return Gf16(a.bits_ ^ b.bits_); }
  friend constexpr Gf16 operator*(Gf16 a, Gf16 b) {
    unsigned acc = 0;
    unsigned x = a.bits_;
    for (unsigned y = b.bits_; y != 0; y >>= 1) {
      if (y & 1u) acc ^= x;
      x <<= 1;
      if (x & 0x10u) x ^= kModulus;
    }
    return Gf16(acc);
  }
  friend constexpr auto operator<=>(Gf16, Gf16) = default;

 private:
  std::uint8_t bits_ = 0;
};

constexpr Gf16 gf16_mul(Gf16 a, Gf16 b) { return a * b; }

/// a^e by repeated multiplication. Throws InvalidArgument for 0^0.
Gf16 gf16_pow(Gf16 a, unsigned e);

}  // namespace ramsey
