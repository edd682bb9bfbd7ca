#pragma once

#include <random>

#include "bilpair/pair/bilinear_pair.hpp"
#include "bilpair/pair/bp_format.hpp"

namespace testing_support {

inline bilpair::Scalar random_scalar(const bilpair::Field& f, std::mt19937_64& rng) {
    std::uniform_int_distribution<long long> d(0, static_cast<long long>(f.modulus()) - 1);
    return bilpair::Scalar::from_int(f, d(rng));
}

inline bilpair::Matrix random_matrix(std::size_t r, std::size_t c, const bilpair::Field& f,
                                     std::mt19937_64& rng) {
    bilpair::Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = random_scalar(f, rng);
    return m;
}

inline bilpair::Matrix random_invertible(std::size_t n, const bilpair::Field& f, std::mt19937_64& rng) {
    for (;;) {
        bilpair::Matrix m = random_matrix(n, n, f, rng);
        if (bilpair::is_invertible(m)) return m;
    }
}

inline bilpair::BilinearPair random_pair(std::size_t n, const bilpair::Field& f, std::mt19937_64& rng,
                                        int density = 3) {
    bilpair::BilinearPair p(n, f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (static_cast<int>(rng() % density) == 0) p.at(i, j, k) = random_scalar(f, rng);
    return p;
}

// Pair from product lines, e.g. pair_text(5, 2, "e1*e1 = e2").
inline bilpair::BilinearPair pair_text(std::uint32_t p, std::size_t n, const std::string& body) {
    return bilpair::parse_bp("field p=" + std::to_string(p) + "\ndim " + std::to_string(n) + "\n" + body);
}

}  // namespace testing_support
