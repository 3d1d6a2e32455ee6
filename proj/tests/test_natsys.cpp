#include <doctest.h>

#include "homcat/catalog.hpp"
#include "homcat/random_gen.hpp"

using namespace homcat;

namespace {

AbFunctor times2_on_arrow() {
    auto I = cat::arrow();
    std::vector<Matrix> mor = {Matrix::identity(Ring::Z(), 1), Matrix::identity(Ring::Z(), 1),
                               Matrix::from_int_rows(Ring::Z(), {{2}})};
    return AbFunctor::validate(I, Ring::Z(), {1, 1}, mor);
}

} // namespace

TEST_CASE("natural system constructors") {
    // constant functor Z: constant system, all actions identity
    auto I = cat::arrow();
    NaturalSystem C = constant_natural_system(I, Ring::Z(), 1);
    for (size_t f = 0; f < I.num_morphisms(); ++f) CHECK(C.value_dim(f) == 1);
    CHECK(C.push_at(2, 0) == Matrix::identity(Ring::Z(), 1)); // a ∘ id0

    // arrow category with F(a) = x2: D(a) = Z with a_* = x2 from D(id_0)
    NaturalSystem D = natural_system_from_functor(cat::arrow(), times2_on_arrow());
    CHECK(D.value_dim(2) == 1);
    CHECK(D.push_at(2, 0).get(0, 0).z() == 2);
    CHECK(D.pull_at(0, 2) == Matrix::identity(Ring::Z(), 1));

    // sign module over F_3 on the one-object C_2 category passes the
    // exhaustive functoriality check
    auto c2 = cat::cyclic_group(2);
    Matrix sign = Matrix::from_int_rows(Ring::Fp(3), {{-1}});
    AbFunctor S = AbFunctor::validate(c2, Ring::Fp(3), {1},
                                      {Matrix::identity(Ring::Fp(3), 1), sign});
    NaturalSystem Dsign = natural_system_from_functor(c2, S);
    CHECK(Dsign.value_dim(1) == 1);
}

TEST_CASE("hom bifunctor of the arrow category") {
    auto I = cat::arrow();
    Ring z = Ring::Z();
    // dims of free abelian groups on hom-sets
    std::vector<std::vector<size_t>> dim = {{1, 1}, {0, 1}};
    size_t nm = I.num_morphisms(), no = I.num_objects();
    std::vector<std::vector<Matrix>> cov(nm, std::vector<Matrix>(no));
    std::vector<std::vector<Matrix>> contra(nm, std::vector<Matrix>(no));
    for (size_t m = 0; m < nm; ++m)
        for (size_t X = 0; X < no; ++X) {
            cov[m][X] = Matrix(z, dim[X][I.dst(m)], dim[X][I.src(m)]);
            contra[m][X] = Matrix(z, dim[I.src(m)][X], dim[I.dst(m)][X]);
        }
    for (size_t X = 0; X < no; ++X) {
        cov[0][X] = Matrix::identity(z, dim[X][0]);
        cov[1][X] = Matrix::identity(z, dim[X][1]);
        contra[0][X] = Matrix::identity(z, dim[0][X]);
        contra[1][X] = Matrix::identity(z, dim[1][X]);
    }
    cov[2][0] = Matrix::from_int_rows(z, {{1}});    // hom(0,0) -> hom(0,1), id0 -> a
    cov[2][1] = Matrix(z, 1, 0);                    // hom(1,0) = 0 -> hom(1,1)
    contra[2][0] = Matrix(z, 1, 0);                 // hom(1,0) = 0 -> hom(0,0)
    contra[2][1] = Matrix::from_int_rows(z, {{1}}); // hom(1,1) -> hom(0,1), id1 -> a
    AbBifunctor B = AbBifunctor::validate(I, z, dim, cov, contra);
    NaturalSystem D = natural_system_from_bifunctor(I, B);
    CHECK(D.value_dim(0) == 1);
    CHECK(D.value_dim(1) == 1);
    CHECK(D.value_dim(2) == 1); // D(a) = Z
    auto h = bw_cohomology(D, 2);
    // the end of the hom bifunctor over the arrow category is Z
    CHECK(h[0].str() == "Z");
    CHECK(h[1].is_trivial());
}

TEST_CASE("bw complex over the terminal category") {
    auto I = cat::terminal();
    NaturalSystem D = constant_natural_system(I, Ring::Z(), 2);
    CochainComplex C = bw_complex(D, 4);
    for (int n = 0; n <= 4; ++n) CHECK(C.dim(n) == 2);
    // differential alternates 0 and identity
    CHECK(C.d(0).is_zero());
    CHECK(C.d(1) == Matrix::identity(Ring::Z(), 2));
    CHECK(C.d(2).is_zero());
    auto h = bw_cohomology(D, 3);
    CHECK(h[0].str() == "Z^2");
    for (int n = 1; n <= 3; ++n) CHECK(h[size_t(n)].is_trivial());
}

TEST_CASE("initial object lemma: H^0 = F(i0), higher degrees vanish") {
    Rng rng(101);
    std::vector<Ring> rings = {Ring::Z(), Ring::Q(), Ring::Fp(2), Ring::Fp(3)};
    for (int it = 0; it < 12; ++it) {
        Ring ring = rings[size_t(it) % rings.size()];
        FiniteCategory I = cat::total_order(2 + rng.below(2));
        AbFunctor F = gen::random_functor_on_total_order(rng, I, ring, 2);
        NaturalSystem D = natural_system_from_functor(I, F);
        auto h = bw_cohomology(D, 3);
        CHECK(h[0].rank == F.obj_dim[0]);
        CHECK(h[0].torsion.empty());
        for (size_t n = 1; n <= 3; ++n) CHECK(h[n].is_trivial());
    }
    // arrow category + functor system, over Z
    NaturalSystem D = natural_system_from_functor(cat::arrow(), times2_on_arrow());
    auto h = bw_cohomology(D, 3);
    CHECK(h[0].str() == "Z");
    for (size_t n = 1; n <= 3; ++n) CHECK(h[n].is_trivial());
}

TEST_CASE("d∘d = 0 for randomized natural systems") {
    Rng rng(103);
    std::vector<Ring> rings = {Ring::Fp(2), Ring::Fp(3), Ring::Q()};
    for (int it = 0; it < 18; ++it) {
        NaturalSystem D = gen::random_natural_system(rng, rings[size_t(it) % 3], 3);
        CochainComplex C = bw_complex(D, 4); // validate() inside checks d∘d = 0
        CHECK(C.n_max() == 4);
    }
}
