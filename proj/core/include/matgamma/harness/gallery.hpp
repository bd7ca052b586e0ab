#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "matgamma/matrix.hpp"

namespace matgamma::harness {

/// Uniform doubles from raw mt19937_64 output, so sequences are identical
/// across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// [0, 1)
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 engine_;
};

const std::vector<std::string>& gallery_names();

/// lehmer, hilbert, cauchy, condex-like, riemann-like, rand-stable, rand-mixed,
/// jordan. 2 <= n <= 64. The seed only affects the random kinds and lambda only
/// the Jordan block.
ComplexMatrix gallery(std::string_view name, std::size_t n, std::uint64_t seed = 1,
                      Complex lambda = 1.0);

struct GallerySpec {
  std::string name;
  std::size_t n = 0;
  /// Added to the diagonal after construction.
  double shift = 0.0;
  std::uint64_t seed = 1;
  Complex lambda = 1.0;

  std::string label() const;
  ComplexMatrix build() const;
};

/// Fifteen specs of orders 5..14; the random members derive their seeds from
/// the given seed.
std::vector<GallerySpec> default_suite(std::uint64_t seed = 1);

}  // namespace matgamma::harness
