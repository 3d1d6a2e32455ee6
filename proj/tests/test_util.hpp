#pragma once

#include "homcat/linalg.hpp"
#include "homcat/rng.hpp"
#include "homcat/snf.hpp"

namespace homcat::testutil {

inline Matrix rand_matrix(Rng& rng, Ring ring, size_t rows, size_t cols, long lo = -4, long hi = 4) {
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set_int(i, j, rng.range(lo, hi));
    return m;
}

// product of random elementary row operations applied to the identity
inline Matrix rand_unimodular(Rng& rng, size_t n, size_t ops = 12) {
    Matrix u = Matrix::identity(Ring::Z(), n);
    for (size_t k = 0; k < ops && n > 1; ++k) {
        size_t i = rng.below(n), j = rng.below(n);
        if (i == j) continue;
        long q = rng.range(-2, 2);
        for (size_t c = 0; c < n; ++c)
            u.set(i, c, Scalar::integer(u.get(i, c).z() + q * u.get(j, c).z()));
    }
    return u;
}

} // namespace homcat::testutil
