#include <doctest.h>

#include "test_util.hpp"

using namespace homcat;
using testutil::rand_matrix;
using testutil::rand_unimodular;

namespace {

void check_snf_contract(const Matrix& a) {
    SmithForm s = smith_normal_form(a);
    // U A V = diag(d) padded with zeros
    Matrix prod = s.U * a * s.V;
    for (size_t i = 0; i < prod.rows(); ++i)
        for (size_t j = 0; j < prod.cols(); ++j) {
            mpz_class want = (i == j && i < s.d.size()) ? s.d[i] : mpz_class(0);
            CHECK(prod.get(i, j).z() == want);
        }
    for (size_t k = 0; k + 1 < s.d.size(); ++k) CHECK(s.d[k + 1] % s.d[k] == 0);
    for (const auto& v : s.d) CHECK(v > 0);
    mpz_class du = det_z(s.U), dv = det_z(s.V);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    CHECK((s.V * s.Vinv) == Matrix::identity(Ring::Z(), a.cols()));
}

} // namespace

TEST_CASE("smith normal form fixed cases") {
    // gcd of entries is 2 and |det| = 8, so the divisors are (2, 4)
    Matrix a = Matrix::from_int_rows(Ring::Z(), {{2, 4}, {6, 8}});
    SmithForm s = smith_normal_form(a);
    REQUIRE(s.d.size() == 2);
    CHECK(s.d[0] == 2);
    CHECK(s.d[1] == 4);
    check_snf_contract(a);

    SmithForm si = smith_normal_form(Matrix::identity(Ring::Z(), 2));
    CHECK(si.d == std::vector<mpz_class>{1, 1});

    SmithForm sz = smith_normal_form(Matrix(Ring::Z(), 2, 2));
    CHECK(sz.d.empty());

    SmithForm se = smith_normal_form(Matrix(Ring::Z(), 0, 0));
    CHECK(se.d.empty());
}

TEST_CASE("smith normal form randomized contract") {
    Rng rng(23);
    for (int it = 0; it < 30; ++it) {
        size_t r = 1 + rng.below(12), c = 1 + rng.below(12);
        Matrix a = rand_matrix(rng, Ring::Z(), r, c, -50, 50);
        check_snf_contract(a);
    }
}

TEST_CASE("integer kernel basis") {
    Rng rng(29);
    for (int it = 0; it < 20; ++it) {
        Matrix a = rand_matrix(rng, Ring::Z(), 1 + rng.below(5), 1 + rng.below(5), -6, 6);
        Matrix k = integer_kernel_basis(a);
        if (k.cols()) CHECK((a * k).is_zero());
        // rank over Q must match cols - kernel dim
        CHECK(rank(a.cast_from_integers(Ring::Q())) + k.cols() == a.cols());
    }
}

TEST_CASE("cohomology_at fixed cases") {
    // Z --(2)--> Z --0--> 0 : cokernel of multiplication by 2
    Matrix din = Matrix::from_int_rows(Ring::Z(), {{2}});
    Matrix dout(Ring::Z(), 0, 1);
    FgAbelianGroup h = cohomology_at(din, dout);
    CHECK(h.rank == 0);
    REQUIRE(h.torsion.size() == 1);
    CHECK(h.torsion[0] == 2);
    CHECK(h.str() == "Z/2");

    // zero differentials on Z^3
    FgAbelianGroup h3 = cohomology_at(Matrix(Ring::Z(), 3, 0), Matrix(Ring::Z(), 0, 3));
    CHECK(h3.rank == 3);
    CHECK(h3.torsion.empty());
    CHECK(h3.str() == "Z^3");

    // exact two-term sequence over F_3 (kernel equals image)
    auto f3 = Ring::Fp(3);
    Matrix din3 = Matrix::from_int_rows(f3, {{1}, {1}});
    Matrix dout3 = Matrix::from_int_rows(f3, {{1, -1}});
    FgAbelianGroup hf = cohomology_at(din3, dout3);
    CHECK(hf.is_trivial());

    CHECK_THROWS_AS(cohomology_at(Matrix::from_int_rows(Ring::Z(), {{1}}),
                                  Matrix::from_int_rows(Ring::Z(), {{1}})),
                    NotAComplex);
}

TEST_CASE("cohomology_at is invariant under unimodular change of basis") {
    Rng rng(31);
    for (int it = 0; it < 20; ++it) {
        size_t a = 1 + rng.below(3), b = 1 + rng.below(4), c = 1 + rng.below(3);
        // build a genuine complex: d_out := random, d_in := random map into ker(d_out)
        Matrix dout = rand_matrix(rng, Ring::Z(), c, b, -3, 3);
        Matrix kb = integer_kernel_basis(dout);
        Matrix coef = rand_matrix(rng, Ring::Z(), kb.cols(), a, -3, 3);
        Matrix din = kb.cols() ? kb * coef : Matrix(Ring::Z(), b, a);
        FgAbelianGroup h = cohomology_at(din, dout);

        Matrix P = rand_unimodular(rng, a), Q = rand_unimodular(rng, b), R = rand_unimodular(rng, c);
        // change of basis x' = Q x on the middle term: d_in' = Q d_in P, d_out' = R d_out Q^{-1}
        SmithForm sq = smith_normal_form(Q); // unimodular: V * Vinv trick not needed, invert via SNF
        // Q^{-1} = V * U (since U Q V = I for unimodular Q with d = (1,...,1))
        REQUIRE(sq.d.size() == b);
        Matrix qinv = sq.V * sq.U;
        REQUIRE(Q * qinv == Matrix::identity(Ring::Z(), b));
        FgAbelianGroup h2 = cohomology_at(Q * din * P, R * dout * qinv);
        CHECK(h == h2);
    }
}

TEST_CASE("quotient_group and presented cohomology") {
    // Z^2 / <(2,0),(0,3)> = Z/2 + Z/3 = Z/6
    Matrix N = Matrix::identity(Ring::Z(), 2);
    Matrix D = Matrix::from_int_rows(Ring::Z(), {{2, 0}, {0, 3}});
    FgAbelianGroup g = quotient_group(N, D);
    CHECK(g.rank == 0);
    REQUIRE(g.torsion.size() == 1);
    CHECK(g.torsion[0] == 6);

    CHECK_THROWS_AS(quotient_group(Matrix::from_int_rows(Ring::Z(), {{2}}),
                                   Matrix::from_int_rows(Ring::Z(), {{1}})),
                    SubspaceViolation);

    // complex of Z/4 groups: Z/4 --2--> Z/4, H at the right = ker(0)/im(2) = Z/2
    Matrix din = Matrix::from_int_rows(Ring::Z(), {{2}});
    Matrix dout(Ring::Z(), 0, 1);
    FgAbelianGroup h = presented_cohomology_at(din, dout, {mpz_class(4)}, {});
    CHECK(h.str() == "Z/2");

    // and at the left: ker(2: Z/4 -> Z/4) = {0, 2} = Z/2
    Matrix din0(Ring::Z(), 1, 0);
    Matrix dout2 = Matrix::from_int_rows(Ring::Z(), {{2}});
    FgAbelianGroup h0 = presented_cohomology_at(din0, dout2, {mpz_class(4)}, {mpz_class(4)});
    CHECK(h0.str() == "Z/2");
}
