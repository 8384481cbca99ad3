#include "lielimits/kernels.hpp"

#include <arm_neon.h>

namespace lielimits::kernels::neon {

void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out) {
    std::size_t r = 0;
    for (; r + 4 <= rows; r += 4) {
        int64x2_t lo = vdupq_n_s64(0);
        int64x2_t hi = vdupq_n_s64(0);
        for (std::size_t c = 0; c < cols; ++c) {
            const int32x2_t xb = vdup_n_s32(x[c]);
            const int32x4_t v = vld1q_s32(m + c * rows + r);
            lo = vmlal_s32(lo, vget_low_s32(v), xb);
            hi = vmlal_s32(hi, vget_high_s32(v), xb);
        }
        vst1q_s64(out + r, lo);
        vst1q_s64(out + r + 2, hi);
    }
    for (; r < rows; ++r) {
        std::int64_t s = 0;
        for (std::size_t c = 0; c < cols; ++c) s += static_cast<std::int64_t>(m[c * rows + r]) * x[c];
        out[r] = s;
    }
}

}  // namespace lielimits::kernels::neon
