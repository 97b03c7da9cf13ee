#include <cstdlib>

#include "algdef/simd/modp_kernels.hpp"

namespace algdef::simd {

#ifndef ALGDEF_WITH_AVX2
namespace avx2 {
bool available() { return false; }
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    scalar::axpy_mod(dst, src, factor, p);
}
void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    scalar::scale_mod(dst, factor, p);
}
}  // namespace avx2
#endif

namespace {

struct Table {
    AxpyModFn axpy;
    ScaleModFn scale;
    std::string_view name;
};

Table select()
{
    if (avx2::available() && std::getenv("ALGDEF_FORCE_SCALAR") == nullptr)
        return {&avx2::axpy_mod, &avx2::scale_mod, "avx2"};
    return {&scalar::axpy_mod, &scalar::scale_mod, "scalar"};
}

const Table& table()
{
    static const Table t = select();
    return t;
}

}  // namespace

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t factor,
              std::uint32_t p)
{
    table().axpy(dst, src, factor, p);
}

void scale_mod(std::span<std::uint32_t> dst, std::uint32_t factor, std::uint32_t p)
{
    table().scale(dst, factor, p);
}

std::string_view active_variant() { return table().name; }

}  // namespace algdef::simd
