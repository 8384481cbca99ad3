#include "lielimits/kernels.hpp"

#include <immintrin.h>

namespace lielimits::kernels::avx2 {

// Four rows per 256-bit register: int32 entries are sign-extended into int64
// lanes and multiplied with _mm256_mul_epi32, which is exact for 32x32 -> 64.
void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out) {
    std::size_t r = 0;
    for (; r + 8 <= rows; r += 8) {
        __m256i acc0 = _mm256_setzero_si256();
        __m256i acc1 = _mm256_setzero_si256();
        for (std::size_t c = 0; c < cols; ++c) {
            const __m256i xb = _mm256_set1_epi64x(x[c]);
            const std::int32_t* col = m + c * rows + r;
            __m256i v0 = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(col)));
            __m256i v1 = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(col + 4)));
            acc0 = _mm256_add_epi64(acc0, _mm256_mul_epi32(v0, xb));
            acc1 = _mm256_add_epi64(acc1, _mm256_mul_epi32(v1, xb));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r), acc0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r + 4), acc1);
    }
    for (; r + 4 <= rows; r += 4) {
        __m256i acc = _mm256_setzero_si256();
        for (std::size_t c = 0; c < cols; ++c) {
            const __m256i xb = _mm256_set1_epi64x(x[c]);
            __m256i v = _mm256_cvtepi32_epi64(_mm_loadu_si128(reinterpret_cast<const __m128i*>(m + c * rows + r)));
            acc = _mm256_add_epi64(acc, _mm256_mul_epi32(v, xb));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + r), acc);
    }
    for (; r < rows; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += static_cast<std::int64_t>(m[c * rows + r]) * x[c];
        out[r] = s;
    }
}

}  // namespace lielimits::kernels::avx2
