#include <doctest.h>

#include "test_util.hpp"

using namespace homcat;
using testutil::rand_matrix;

TEST_CASE("kernel_basis fixed cases") {
    auto f2 = Ring::Fp(2);
    Matrix a = Matrix::from_int_rows(f2, {{1, 1}, {1, 1}});
    Matrix k = kernel_basis(a);
    CHECK(k.cols() == 1);
    CHECK(k.get(0, 0).fp() == 1);
    CHECK(k.get(1, 0).fp() == 1);

    Matrix id3 = Matrix::identity(Ring::Q(), 3);
    CHECK(kernel_basis(id3).cols() == 0);

    Matrix z23(Ring::Q(), 2, 3);
    CHECK(kernel_basis(z23).cols() == 3);
}

TEST_CASE("rank + kernel dimension = cols (randomized)") {
    Rng rng(7);
    for (int it = 0; it < 40; ++it) {
        Ring ring = it % 3 == 0 ? Ring::Q() : Ring::Fp(it % 3 == 1 ? 2 : 3);
        size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
        Matrix a = rand_matrix(rng, ring, r, c);
        Matrix k = kernel_basis(a);
        CHECK(rank(a) + k.cols() == c);
        if (k.cols()) CHECK((a * k).is_zero());
    }
}

TEST_CASE("subquotient_dim fixed cases") {
    auto f2 = Ring::Fp(2);
    Matrix z = Matrix::identity(f2, 2);
    Matrix diag = Matrix::from_int_rows(f2, {{1}, {1}});
    CHECK(subquotient_dim(z, diag) == 1);
    CHECK(subquotient_dim(z, z) == 0);
    CHECK(subquotient_dim(z, Matrix(f2, 2, 0)) == 2);

    Matrix outside = Matrix::from_int_rows(f2, {{1}, {0}});
    Matrix line = Matrix::from_int_rows(f2, {{0}, {1}});
    CHECK_THROWS_AS(subquotient_dim(line, outside), SubspaceViolation);
}

TEST_CASE("solve and subquotient_basis") {
    Rng rng(11);
    for (int it = 0; it < 25; ++it) {
        Ring ring = it % 2 ? Ring::Fp(5) : Ring::Q();
        Matrix a = rand_matrix(rng, ring, 1 + rng.below(5), 1 + rng.below(5));
        Matrix x = rand_matrix(rng, ring, a.cols(), 2);
        Matrix b = a * x;
        auto sol = solve(a, b);
        REQUIRE(sol.has_value());
        CHECK(a * *sol == b);
    }
    // class coordinates recover class membership
    auto f3 = Ring::Fp(3);
    Matrix Z = Matrix::from_int_rows(f3, {{1, 0}, {0, 1}, {0, 0}});
    Matrix B = Matrix::from_int_rows(f3, {{1}, {1}, {0}});
    auto sq = subquotient_basis(Z, B);
    CHECK(sq.dim() == 1);
    // v = rep + boundary must have the same class coordinates as rep
    Matrix v = sq.reps + B;
    CHECK(sq.class_coords(v) == sq.class_coords(sq.reps));
}

TEST_CASE("production kernels match serial reference") {
    Rng rng(13);
    for (int it = 0; it < 30; ++it) {
        Ring ring = it % 2 ? Ring::Fp(7) : Ring::Q();
        size_t r = 1 + rng.below(7), c = 1 + rng.below(7);
        Matrix a = rand_matrix(rng, ring, r, c);
        CHECK(rank(a) == ref::rank(a));
        CHECK(rref(a).R == ref::rref(a).R);
        CHECK(kernel_basis(a) == ref::kernel_basis(a));
        Matrix b = rand_matrix(rng, ring, c, 1 + rng.below(5));
        CHECK(a * b == ref::matmul(a, b));
    }
}

TEST_CASE("filtered_rank_profile agrees with direct submatrix ranks") {
    Rng rng(17);
    for (int it = 0; it < 30; ++it) {
        Ring ring = it % 2 ? Ring::Fp(2) : Ring::Fp(3);
        size_t rows = 1 + rng.below(8), cols = 1 + rng.below(8);
        size_t nblocks = 1 + rng.below(4);
        Matrix d = rand_matrix(rng, ring, rows, cols, 0, 2);
        std::vector<size_t> cb(cols), rb(rows);
        for (auto& b : cb) b = rng.below(nblocks);
        for (auto& b : rb) b = rng.below(nblocks);
        BlockPairing bp = filtered_rank_profile(d, cb, rb);
        for (size_t a = 0; a <= nblocks; ++a)
            for (size_t b = 0; b <= nblocks; ++b) {
                std::vector<size_t> csel, rsel;
                for (size_t j = 0; j < cols; ++j)
                    if (cb[j] >= a) csel.push_back(j);
                for (size_t i = 0; i < rows; ++i)
                    if (rb[i] < b) rsel.push_back(i);
                Matrix sub(ring, rsel.size(), csel.size());
                for (size_t i = 0; i < rsel.size(); ++i)
                    for (size_t j = 0; j < csel.size(); ++j) sub.set(i, j, d.get(rsel[i], csel[j]));
                size_t want = (rsel.empty() || csel.empty()) ? 0 : rank(sub);
                CHECK(bp.rho(long(a), long(b)) == want);
            }
    }
}
