#include "ramsey/gf16.hpp"

#include "ramsey/errors.hpp"

namespace ramsey {

Gf16 gf16_pow(Gf16 a, unsigned e) {
  if (a.is_zero() && e == 0) throw InvalidArgument("0^0 is undefined in GF(16)");
  Gf16 r = Gf16::one();
  for (unsigned i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace ramsey
