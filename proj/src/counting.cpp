#include "algdef/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace algdef {

namespace {

// Unbounded knapsack count: multisets of parts with the given sizes summing to n.
mpz_class count_multisets(const std::vector<std::size_t>& sizes, std::size_t n)
{
    std::vector<mpz_class> ways(n + 1);
    ways[0] = 1;
    for (std::size_t s : sizes)
        for (std::size_t t = s; t <= n; ++t) ways[t] += ways[t - s];
    return ways[n];
}

// Parts are chosen with nonincreasing index, largest index first, so the
// listing is decreasing lexicographic in the order of `parts`.
void enumerate(const std::vector<WitnessPart>& parts, const std::vector<std::size_t>& sizes, std::size_t remaining,
               std::size_t max_index, Witness& current, std::vector<Witness>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (std::size_t k = max_index + 1; k-- > 0;) {
        if (sizes[k] > remaining) continue;
        current.push_back(parts[k]);
        enumerate(parts, sizes, remaining - sizes[k], k, current, out);
        current.pop_back();
    }
}

CountResult run(std::size_t n, const std::vector<WitnessPart>& parts, const std::vector<std::size_t>& sizes,
                bool with_witnesses)
{
    CountResult r;
    r.n = n;
    r.value = count_multisets(sizes, n);
    if (with_witnesses) {
        std::vector<Witness> out;
        Witness current;
        if (!parts.empty()) enumerate(parts, sizes, n, parts.size() - 1, current, out);
        r.witnesses = std::move(out);
    }
    return r;
}

}  // namespace

std::vector<CatalogEntry> simple_lie_catalog(std::size_t bound)
{
    std::vector<CatalogEntry> cat;
    auto add = [&](std::string label, std::size_t dim) {
        if (dim <= bound) cat.push_back({std::move(label), dim});
    };
    for (std::size_t r = 1; r * r + 2 * r <= bound; ++r) add("A" + std::to_string(r), r * r + 2 * r);
    for (std::size_t r = 2; 2 * r * r + r <= bound; ++r) add("B" + std::to_string(r), 2 * r * r + r);
    for (std::size_t r = 3; 2 * r * r + r <= bound; ++r) add("C" + std::to_string(r), 2 * r * r + r);
    for (std::size_t r = 4; 2 * r * r - r <= bound; ++r) add("D" + std::to_string(r), 2 * r * r - r);
    add("G2", 14);
    add("F4", 52);
    add("E6", 78);
    add("E7", 133);
    add("E8", 248);
    std::sort(cat.begin(), cat.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return a.dimension != b.dimension ? a.dimension < b.dimension : a.label < b.label;
    });
    return cat;
}

CountResult n_assoc(std::size_t n, bool with_witnesses)
{
    if (n == 0) throw std::invalid_argument("n_assoc: n must be positive");
    std::vector<WitnessPart> parts;
    std::vector<std::size_t> sizes;
    for (std::size_t r = 1; r * r <= n; ++r) {
        parts.push_back({"M" + std::to_string(r), r});
        sizes.push_back(r * r);
    }
    return run(n, parts, sizes, with_witnesses);
}

CountResult n_lie(std::size_t n, bool with_witnesses)
{
    if (n == 0) throw std::invalid_argument("n_lie: n must be positive");
    std::vector<WitnessPart> parts;
    std::vector<std::size_t> sizes;
    for (const auto& e : simple_lie_catalog(n)) {
        parts.push_back({e.label, e.dimension});
        sizes.push_back(e.dimension);
    }
    return run(n, parts, sizes, with_witnesses);
}

}  // namespace algdef
