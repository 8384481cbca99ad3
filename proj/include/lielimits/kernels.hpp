#pragma once

// Integer pairing kernels used by the Weyl dimension formula and the
// Freudenthal recursion: a batch of rows (coroots, or Gram-scaled roots) is
// paired against one weight in a single pass. Every backend is exact; the
// SIMD variants must agree bit-for-bit with the scalar reference.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace lielimits::kernels {

// Column-major: entry (r, c) lives at data[c * rows + r], so one column is a
// contiguous run over all rows and vectorizes across rows.
struct PairingMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::int32_t> data;

    static PairingMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);
    std::int32_t at(std::size_t r, std::size_t c) const { return data[c * rows + r]; }
};

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);

// Backends this binary was built with AND the running CPU supports.
std::vector<Backend> available_backends();

// The backend pair_rows dispatches to. Chosen on first use: the widest
// available, unless LIELIMITS_KERNEL=scalar|avx2|neon says otherwise.
Backend active_backend();

// Overrides the dispatch choice (tests, benchmarking). Throws DomainError for
// a backend that is not available.
void set_backend(Backend b);

// out[r] = sum_c m(r, c) * x[c], accumulated in 64 bits.
void pair_rows(const PairingMatrix& m, std::span<const std::int32_t> x, std::span<std::int64_t> out);

// Direct entry points, all with the same contract as pair_rows.
namespace scalar {
void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out);
}
#if defined(LIELIMITS_HAVE_AVX2)
namespace avx2 {
void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out);
}
#endif
#if defined(LIELIMITS_HAVE_NEON)
namespace neon {
void pair_rows(std::size_t rows, std::size_t cols, const std::int32_t* m, const std::int32_t* x, std::int64_t* out);
}
#endif

}  // namespace lielimits::kernels
