#pragma once

#include <cstdint>
#include <random>

#include "vnr/diagram.hpp"
#include "vnr/forest.hpp"
#include "vnr/permutation.hpp"

// Seeded generation of forests, permutations and group elements. All
// sampling goes through hand-rolled bounded draws on mt19937_64, whose
// output sequence the standard pins down, so identical seeds give
// identical values on every platform. Forests are drawn uniformly among
// those with the requested caret count, by unranking a uniform big
// integer against the exact counting tables.

namespace vnr {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : eng_(seed) {}

    uint64_t bits() { return eng_(); }

    uint64_t below(uint64_t bound) {
        // modulo with rejection of the biased tail
        uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v;
        do {
            v = eng_();
        } while (v >= limit);
        return v % bound;
    }

    int below_int(int bound) { return static_cast<int>(below(static_cast<uint64_t>(bound))); }

    BigInt below_big(const BigInt& bound) {
        if (bound <= 1) return 0;
        size_t nbits = boost::multiprecision::msb(bound - 1) + 1;
        for (;;) {
            BigInt v = 0;
            size_t got = 0;
            while (got < nbits) {
                size_t take = std::min<size_t>(64, nbits - got);
                uint64_t w = eng_() >> (64 - take);
                v <<= static_cast<unsigned>(take);
                v += w;
                got += take;
            }
            if (v < bound) return v;
        }
    }

  private:
    std::mt19937_64 eng_;
};

// Independent per-trial stream: trials can run in any order (or in
// parallel) without changing what each one sees.
inline Rng trial_rng(uint64_t master_seed, uint64_t trial) {
    uint64_t state = master_seed ^ (0xa076bd64f34c5c85ULL * (trial + 1));
    uint64_t seed = splitmix64(state);
    return Rng(seed);
}

inline Permutation random_permutation(Rng& rng, int l) {
    Permutation p = Permutation::identity(l);
    for (int i = l - 1; i > 0; --i)
        std::swap(p.img[static_cast<size_t>(i)],
                  p.img[static_cast<size_t>(rng.below_int(i + 1))]);
    return p;
}

inline Forest random_forest(Rng& rng, int n, int r, int carets) {
    CaretCounts cc = caret_counts(n, carets, std::max(n, r));
    BigInt total = cc.tuple[static_cast<size_t>(r)][static_cast<size_t>(carets)];
    return unrank_forest(cc, r, carets, rng.below_big(total));
}

inline Tree random_tree(Rng& rng, int n, int carets) {
    return random_forest(rng, n, 1, carets).roots[0];
}

// Uniform domain and codomain forests with exactly `carets` carets and a
// uniform matching; the result is returned in canonical form. A fixed
// seed determines the element completely.
inline PairedDiagram random_element(int n, int r, int carets, uint64_t seed) {
    require(carets >= 0, "random element: caret budget must be >= 0");
    Rng rng(seed);
    Forest dom = random_forest(rng, n, r, carets);
    Forest cod = random_forest(rng, n, r, carets);
    Permutation sigma = random_permutation(rng, leaf_count(dom));
    return reduce(PairedDiagram{std::move(dom), std::move(cod), std::move(sigma)});
}

// Draw with a caret count anywhere up to the budget; used by the
// property suites for shape variety.
inline PairedDiagram random_element_upto(Rng& rng, int n, int r, int max_carets) {
    int c = rng.below_int(max_carets + 1);
    Forest dom = random_forest(rng, n, r, c);
    Forest cod = random_forest(rng, n, r, c);
    Permutation sigma = random_permutation(rng, leaf_count(dom));
    return reduce(PairedDiagram{std::move(dom), std::move(cod), std::move(sigma)});
}

}  // namespace vnr
