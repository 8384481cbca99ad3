#include "lielimits/kernels.hpp"

namespace lielimits::kernels::scalar {

void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out) {
    for (std::size_t r = 0; r < rows; ++r) out[r] = 0;
    for (std::size_t c = 0; c < cols; ++c) {
        const std::int64_t xc = x[c];
        if (xc == 0) continue;
        const std::int32_t* col = m + c * rows;
        for (std::size_t r = 0; r < rows; ++r) out[r] += static_cast<std::int64_t>(col[r]) * xc;
    }
}

}  // namespace lielimits::kernels::scalar
