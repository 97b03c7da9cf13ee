#include "algdef/random.hpp"

namespace algdef {

namespace {

long draw(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

long draw_nonzero(Rng& rng, int bound)
{
    const long v = draw(rng, 1, bound);
    return draw(rng, 0, 1) ? v : -v;
}

}  // namespace

MulTable random_table(std::size_t n, Rng& rng, double density, int bound)
{
    std::bernoulli_distribution keep(density);
    MulTable x(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                if (keep(rng)) x(i, j, l) = draw_nonzero(rng, bound);
    return x;
}

RationalMatrix random_matrix(std::size_t n, Rng& rng, int bound)
{
    RationalMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = draw(rng, -bound, bound);
    return m;
}

RationalMatrix random_invertible(std::size_t n, Rng& rng, int bound)
{
    for (;;) {
        auto m = random_matrix(n, rng, bound);
        if (!is_zero(determinant(m))) return m;
    }
}

}  // namespace algdef
