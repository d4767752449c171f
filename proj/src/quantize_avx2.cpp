#include "dcreid/quantize_kernel.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace dcreid::kernel {

namespace {

inline __m256d load_channel(const Rgb* px, std::uint8_t Rgb::* ch) {
  return _mm256_set_pd(px[3].*ch, px[2].*ch, px[1].*ch, px[0].*ch);
}

// Count-of-thresholds-passed accumulator for interval binning.
inline __m256d ge_one(__m256d h, double threshold) {
  return _mm256_and_pd(_mm256_cmp_pd(h, _mm256_set1_pd(threshold), _CMP_GE_OQ),
                       _mm256_set1_pd(1.0));
}

}  // namespace

// Mirrors the scalar conversion operation-for-operation (same divisions, same
// order) so results are bit-identical; equivalence is swept exhaustively in tests.
void quantize_avx2(const Rgb* px, std::size_t n, std::uint8_t* out) {
  const __m256d k255 = _mm256_set1_pd(255.0);
  const __m256d k60 = _mm256_set1_pd(60.0);
  const __m256d zero = _mm256_setzero_pd();
  const __m256d one = _mm256_set1_pd(1.0);

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_div_pd(load_channel(px + i, &Rgb::r), k255);
    const __m256d g = _mm256_div_pd(load_channel(px + i, &Rgb::g), k255);
    const __m256d b = _mm256_div_pd(load_channel(px + i, &Rgb::b), k255);

    const __m256d maxc = _mm256_max_pd(r, _mm256_max_pd(g, b));
    const __m256d minc = _mm256_min_pd(r, _mm256_min_pd(g, b));
    const __m256d delta = _mm256_sub_pd(maxc, minc);

    // s = delta / max, 0 when max == 0
    const __m256d max_zero = _mm256_cmp_pd(maxc, zero, _CMP_EQ_OQ);
    const __m256d s = _mm256_blendv_pd(_mm256_div_pd(delta, maxc), zero, max_zero);
    const __m256d v = maxc;

    // hue branches, selected with the same priority as the scalar if-chain
    const __m256d h1 = _mm256_div_pd(_mm256_mul_pd(k60, _mm256_sub_pd(g, b)), delta);
    const __m256d h2 = _mm256_add_pd(_mm256_set1_pd(360.0), h1);
    const __m256d h3 = _mm256_mul_pd(
        k60, _mm256_add_pd(_mm256_set1_pd(2.0), _mm256_div_pd(_mm256_sub_pd(b, r), delta)));
    const __m256d h4 = _mm256_mul_pd(
        k60, _mm256_add_pd(_mm256_set1_pd(4.0), _mm256_div_pd(_mm256_sub_pd(r, g), delta)));

    const __m256d r_is_max = _mm256_cmp_pd(r, maxc, _CMP_EQ_OQ);
    const __m256d g_is_max = _mm256_cmp_pd(g, maxc, _CMP_EQ_OQ);
    const __m256d g_is_min = _mm256_cmp_pd(g, minc, _CMP_EQ_OQ);
    const __m256d achro = _mm256_cmp_pd(maxc, minc, _CMP_EQ_OQ);

    __m256d h = h4;
    h = _mm256_blendv_pd(h, h3, g_is_max);
    h = _mm256_blendv_pd(h, h2, _mm256_and_pd(r_is_max, g_is_min));
    h = _mm256_blendv_pd(h, h1, _mm256_andnot_pd(g_is_min, r_is_max));
    h = _mm256_blendv_pd(h, zero, _mm256_cmp_pd(h, _mm256_set1_pd(360.0), _CMP_EQ_OQ));

    __m256d hbin = ge_one(h, 20.0);
    hbin = _mm256_add_pd(hbin, ge_one(h, 40.0));
    hbin = _mm256_add_pd(hbin, ge_one(h, 75.0));
    hbin = _mm256_add_pd(hbin, ge_one(h, 155.0));
    hbin = _mm256_add_pd(hbin, ge_one(h, 190.0));
    hbin = _mm256_add_pd(hbin, ge_one(h, 270.0));
    hbin = _mm256_add_pd(hbin, ge_one(h, 295.0));
    const __m256d wrap = _mm256_cmp_pd(h, _mm256_set1_pd(316.0), _CMP_GE_OQ);
    hbin = _mm256_blendv_pd(hbin, zero, _mm256_or_pd(wrap, achro));

    __m256d sbin = _mm256_add_pd(
        _mm256_and_pd(_mm256_cmp_pd(s, _mm256_set1_pd(0.2), _CMP_GT_OQ), one),
        _mm256_and_pd(_mm256_cmp_pd(s, _mm256_set1_pd(0.7), _CMP_GT_OQ), one));
    __m256d vbin = _mm256_add_pd(
        _mm256_and_pd(_mm256_cmp_pd(v, _mm256_set1_pd(0.2), _CMP_GT_OQ), one),
        _mm256_and_pd(_mm256_cmp_pd(v, _mm256_set1_pd(0.7), _CMP_GT_OQ), one));

    const __m256d c = _mm256_add_pd(
        _mm256_mul_pd(_mm256_set1_pd(9.0), hbin),
        _mm256_add_pd(_mm256_mul_pd(_mm256_set1_pd(3.0), sbin), vbin));

    const __m128i ci = _mm256_cvtpd_epi32(c);
    alignas(16) std::int32_t lanes[4];
    _mm_store_si128(reinterpret_cast<__m128i*>(lanes), ci);
    out[i + 0] = static_cast<std::uint8_t>(lanes[0]);
    out[i + 1] = static_cast<std::uint8_t>(lanes[1]);
    out[i + 2] = static_cast<std::uint8_t>(lanes[2]);
    out[i + 3] = static_cast<std::uint8_t>(lanes[3]);
  }

  if (i < n) quantize_scalar(px + i, n - i, out + i);
}

}  // namespace dcreid::kernel

#endif  // x86_64
