#pragma once

#include "endotype/algebra.hpp"
#include "endotype/linalg.hpp"
#include "endotype/rational.hpp"

#include <cstdlib>
#include <random>
#include <string>

namespace endotype::test {

using Rng = std::mt19937_64;

/// ENDOTYPE_SEED overrides the per-suite default so property-test sampling
/// is reproducible but reseedable.
inline uint64_t seedFromEnv(uint64_t fallback) {
    if (const char* s = std::getenv("ENDOTYPE_SEED")) return std::strtoull(s, nullptr, 10) ^ fallback;
    return fallback;
}

inline Rational randomRational(Rng& rng, int bound) {
    long num = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    long den = 1 + static_cast<long>(rng() % 3);
    return Rational(num, den);
}

inline GaussianRational randomGaussianRational(Rng& rng, int bound = 9) {
    return {randomRational(rng, bound), randomRational(rng, bound)};
}

inline Weight randomWeight(const AlgebraModel& mod, Rng& rng, int bound = 5) {
    Weight w = Weight::zero(mod);
    for (int c = 0; c < w.numChars(); ++c) w.coord(c) = randomGaussianRational(rng, bound);
    return w;
}

/// Random integer unimodular matrix (product of elementary row additions).
inline QMatrix randomUnimodular(Rng& rng, int n) {
    QMatrix a = QMatrix::identity(n);
    for (int k = 0; k < 3 * n; ++k) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i == j) continue;
        Rational c(static_cast<long>(rng() % 5) - 2);
        for (int col = 0; col < n; ++col) a.at(i, col) += c * a.at(j, col);
    }
    return a;
}

inline std::vector<std::string> allShuffles(int m, int n) {
    std::vector<std::string> out;
    std::string word = std::string(m, 'e') + std::string(n, 'd');
    std::sort(word.begin(), word.end());
    do {
        out.push_back(word);
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

} // namespace endotype::test
