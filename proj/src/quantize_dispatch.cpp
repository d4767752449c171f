#include "dcreid/quantize_kernel.hpp"

namespace dcreid::kernel {

namespace {

QuantizeFn g_override = nullptr;
const char* g_override_name = nullptr;

struct Detected {
  QuantizeFn fn;
  const char* name;
};

Detected detect() {
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2")) return {quantize_avx2, "avx2"};
#endif
  return {quantize_scalar, "scalar"};
}

const Detected& detected() {
  static const Detected d = detect();
  return d;
}

}  // namespace

QuantizeFn active_kernel() { return g_override ? g_override : detected().fn; }

const char* active_kernel_name() { return g_override ? g_override_name : detected().name; }

void override_kernel(QuantizeFn fn, const char* name) {
  g_override = fn;
  g_override_name = fn ? name : nullptr;
}

}  // namespace dcreid::kernel
