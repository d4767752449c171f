#include "dcreid/colorquant.hpp"
#include "dcreid/quantize_kernel.hpp"

namespace dcreid::kernel {

void quantize_scalar(const Rgb* px, std::size_t n, std::uint8_t* out) {
  for (std::size_t i = 0; i < n; ++i) out[i] = quantize_pixel(px[i].r, px[i].g, px[i].b);
}

}  // namespace dcreid::kernel
