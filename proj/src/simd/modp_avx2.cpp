#include "algdef/simd/modp_kernels.hpp"

#include <immintrin.h>

#include <cassert>
#include <cstddef>

// Four residues per step. The quotient floor(s*f/p) is estimated in double
// precision (off by at most one), the remainder is formed exactly in 64-bit
// lanes and then folded back into [0, p).

namespace algdef::simd::avx2 {

namespace {

struct Constants {
    __m256i factor;
    __m256i modulus;
    __m256i zero;
    __m256i modulus_minus_one;
    __m256d ratio;
    __m256i pack_low;
};

Constants make_constants(std::uint32_t factor, std::uint32_t p)
{
    return {
        _mm256_set1_epi64x(factor),
        _mm256_set1_epi64x(p),
        _mm256_setzero_si256(),
        _mm256_set1_epi64x(static_cast<long long>(p) - 1),
        _mm256_set1_pd(static_cast<double>(factor) / static_cast<double>(p)),
        _mm256_setr_epi32(0, 2, 4, 6, 1, 3, 5, 7),
    };
}

// (s * f) mod p plus an optional addend, for four residues in s (as int32 lanes).
inline __m128i mulmod4(__m128i s, __m256i addend64, const Constants& k)
{
    __m256d q = _mm256_floor_pd(_mm256_mul_pd(_mm256_cvtepi32_pd(s), k.ratio));
    __m256i q64 = _mm256_cvtepu32_epi64(_mm256_cvttpd_epi32(q));
    __m256i s64 = _mm256_cvtepu32_epi64(s);
    __m256i r = _mm256_sub_epi64(_mm256_mul_epu32(s64, k.factor), _mm256_mul_epu32(q64, k.modulus));
    r = _mm256_add_epi64(r, addend64);
    // r in [-p, 3p): lift negatives, then subtract p at most twice.
    r = _mm256_add_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(k.zero, r), k.modulus));
    r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, k.modulus_minus_one), k.modulus));
    r = _mm256_sub_epi64(r, _mm256_and_si256(_mm256_cmpgt_epi64(r, k.modulus_minus_one), k.modulus));
    return _mm256_castsi256_si128(_mm256_permutevar8x32_epi32(r, k.pack_low));
}

}  // namespace

bool available() { return __builtin_cpu_supports("avx2"); }

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    assert(dst.size() == src.size());
    const Constants k = make_constants(factor, p);
    const std::size_t body = dst.size() & ~std::size_t{3};
    for (std::size_t j = 0; j < body; j += 4) {
        __m128i s = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + j));
        __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + j));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + j), mulmod4(s, _mm256_cvtepu32_epi64(d), k));
    }
    if (body < dst.size())
        scalar::axpy_mod(dst.subspan(body), src.subspan(body), factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    const Constants k = make_constants(factor, p);
    const std::size_t body = dst.size() & ~std::size_t{3};
    for (std::size_t j = 0; j < body; j += 4) {
        __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + j));
        _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + j), mulmod4(d, k.zero, k));
    }
    if (body < dst.size())
        scalar::scale_mod(dst.subspan(body), factor, p);
}

}  // namespace algdef::simd::avx2
