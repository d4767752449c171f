#pragma once

#include <cstddef>
#include <cstdint>

#include "dcreid/image.hpp"

namespace dcreid::kernel {

/// Maps n RGB pixels to their quantized color indices in [0,71].
using QuantizeFn = void (*)(const Rgb* px, std::size_t n, std::uint8_t* out);

/// Scalar reference kernel. The SIMD variants must match it bit-exactly.
void quantize_scalar(const Rgb* px, std::size_t n, std::uint8_t* out);

#if defined(__x86_64__) || defined(_M_X64)
/// AVX2 kernel, four pixels per iteration in double precision.
void quantize_avx2(const Rgb* px, std::size_t n, std::uint8_t* out);
#endif

/// Best kernel for the running CPU, chosen once at first use.
QuantizeFn active_kernel();
const char* active_kernel_name();

/// Test hook: force a specific kernel (nullptr restores auto-detection).
void override_kernel(QuantizeFn fn, const char* name);

}  // namespace dcreid::kernel
