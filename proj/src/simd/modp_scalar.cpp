#include "algdef/simd/modp_kernels.hpp"

#include <cassert>
#include <cstddef>

namespace algdef::simd::scalar {

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    assert(dst.size() == src.size());
    const std::uint64_t f = factor;
    for (std::size_t j = 0; j < dst.size(); ++j)
        dst[j] = static_cast<std::uint32_t>((dst[j] + f * src[j]) % p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    const std::uint64_t f = factor;
    for (auto& d : dst)
        d = static_cast<std::uint32_t>(f * d % p);
}

}  // namespace algdef::simd::scalar
