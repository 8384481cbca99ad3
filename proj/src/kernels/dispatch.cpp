#include "lielimits/error.hpp"
#include "lielimits/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <string>

namespace lielimits::kernels {

PairingMatrix PairingMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    PairingMatrix m;
    m.rows = rows.size();
    m.cols = cols;
    m.data.assign(m.rows * cols, 0);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < cols && c < rows[r].size(); ++c) m.data[c * m.rows + r] = rows[r][c];
    return m;
}

std::string_view backend_name(Backend b) {
    switch (b) {
        case Backend::Scalar: return "scalar";
        case Backend::Avx2: return "avx2";
        case Backend::Neon: return "neon";
    }
    return "unknown";
}

std::vector<Backend> available_backends() {
    std::vector<Backend> out{Backend::Scalar};
#if defined(LIELIMITS_HAVE_AVX2)
    __builtin_cpu_init();
    if (__builtin_cpu_supports("avx2")) out.push_back(Backend::Avx2);
#endif
#if defined(LIELIMITS_HAVE_NEON)
    out.push_back(Backend::Neon);
#endif
    return out;
}

namespace {

using PairFn = void (*)(std::size_t, std::size_t, const std::int32_t*, const std::int32_t*, std::int64_t*);

PairFn function_for(Backend b) {
    switch (b) {
#if defined(LIELIMITS_HAVE_AVX2)
        case Backend::Avx2: return &avx2::pair_rows;
#endif
#if defined(LIELIMITS_HAVE_NEON)
        case Backend::Neon: return &neon::pair_rows;
#endif
        default: return &scalar::pair_rows;
    }
}

Backend initial_backend() {
    auto avail = available_backends();
    if (const char* env = std::getenv("LIELIMITS_KERNEL")) {
        for (Backend b : avail)
            if (backend_name(b) == env) return b;
    }
    return avail.back();
}

struct Dispatch {
    std::atomic<Backend> backend;
    std::atomic<PairFn> fn;
    Dispatch() : backend(initial_backend()), fn(function_for(backend.load())) {}
};

Dispatch& dispatch() {
    static Dispatch d;
    return d;
}

}  // namespace

Backend active_backend() { return dispatch().backend.load(); }

void set_backend(Backend b) {
    auto avail = available_backends();
    if (std::find(avail.begin(), avail.end(), b) == avail.end())
        throw DomainError("kernel backend '" + std::string(backend_name(b)) + "' is not available on this machine");
    dispatch().backend.store(b);
    dispatch().fn.store(function_for(b));
}

void pair_rows(const PairingMatrix& m, std::span<const std::int32_t> x, std::span<std::int64_t> out) {
    if (x.size() != m.cols || out.size() != m.rows)
        throw DimensionError("pair_rows: operand sizes do not match the matrix");
    dispatch().fn.load()(m.rows, m.cols, m.data.data(), x.data(), out.data());
}

}  // namespace lielimits::kernels
