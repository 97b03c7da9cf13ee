#pragma once

// Row kernels for elimination over F_p, p < 2^31. All inputs and outputs are
// canonical residues in [0, p).
//
// A portable scalar reference and an AVX2 variant are compiled; the dispatched
// entry points pick the AVX2 variant at runtime when the CPU supports it and
// ALGDEF_FORCE_SCALAR is unset.

#include <cstdint>
#include <span>
#include <string_view>

namespace algdef::simd {

/// dst[j] = (dst[j] + factor * src[j]) mod p.
using AxpyModFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
                           std::uint32_t p);
/// dst[j] = (dst[j] * factor) mod p.
using ScaleModFn = void (*)(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
}  // namespace scalar

namespace avx2 {
/// False when the variant was not compiled in or the CPU lacks AVX2.
bool available();
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);
}  // namespace avx2

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p);

/// "avx2" or "scalar".
std::string_view active_variant();

}  // namespace algdef::simd
