#include <doctest.h>

#include "homcat/catalog.hpp"
#include "homcat/matrix.hpp"
#include "homcat/rng.hpp"

using namespace homcat;

TEST_CASE("validate_category accepts the basics and names violators") {
    CHECK(cat::terminal().num_morphisms() == 1);
    CHECK(cat::cyclic_group(2).num_morphisms() == 2);

    // planted associativity failure: a 3-element "monoid" with a broken table
    std::vector<std::vector<size_t>> bad = {{0, 1, 2}, {1, 2, 0}, {2, 1, 1}};
    CHECK_THROWS_AS(cat::monoid({"e", "x", "y"}, bad, 0), AssocViolation);

    // missing composite
    std::vector<FiniteCategory::Mor> mors = {{"id0", 0, 0}, {"id1", 1, 1}, {"a", 0, 1}};
    CHECK_THROWS_AS(FiniteCategory::validate({"0", "1"}, std::move(mors), {0, 1},
                                             {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}}),
                    TypeMismatch);
}

TEST_CASE("chains enumeration") {
    auto term = cat::terminal();
    auto c2 = chains(term, 2);
    REQUIRE(c2.size() == 1);
    CHECK(c2[0].arrows == std::vector<size_t>{0, 0});

    auto arr = cat::arrow();
    CHECK(chains(arr, 1).size() == 3);
    CHECK(chains(cat::cyclic_group(2), 2).size() == 4);

    // |chains(I, p)| = number of length-p paths in the composability graph
    std::vector<FiniteCategory> cats = {cat::arrow(), cat::total_order(3), cat::cyclic_group(3),
                                        cat::discrete(2)};
    for (const auto& I : cats) {
        size_t nm = I.num_morphisms();
        Matrix adj(Ring::Z(), nm, nm);
        for (size_t a = 0; a < nm; ++a)
            for (size_t b = 0; b < nm; ++b)
                if (I.src(a) == I.dst(b)) adj.set_int(a, b, 1);
        Matrix pw = Matrix::identity(Ring::Z(), nm);
        for (size_t p = 1; p <= 4; ++p) {
            pw = p == 1 ? pw : pw * adj;
            mpz_class total = 0;
            for (size_t a = 0; a < nm; ++a)
                for (size_t b = 0; b < nm; ++b) total += pw.get(a, b).z();
            CHECK(mpz_class(chains(I, p).size()) == total);
        }
    }
}

TEST_CASE("chain composites and endpoint conventions") {
    auto tot = cat::total_order(3);
    for (size_t p = 1; p <= 3; ++p)
        for (const auto& c : chains(tot, p)) {
            // src(α_j) = dst(α_{j+1}); composite: src_obj -> dst_obj
            for (size_t j = 0; j + 1 < c.arrows.size(); ++j)
                CHECK(tot.src(c.arrows[j]) == tot.dst(c.arrows[j + 1]));
            CHECK(tot.src(c.composite) == c.src_obj);
            CHECK(tot.dst(c.composite) == c.dst_obj);
            CHECK(c.src_obj == tot.src(c.arrows.back()));
            CHECK(c.dst_obj == tot.dst(c.arrows.front()));
        }
}

TEST_CASE("initial_object") {
    CHECK(initial_object(cat::arrow()) == size_t(0));
    CHECK(!initial_object(cat::cyclic_group(2)).has_value());
    CHECK(!initial_object(cat::discrete(2)).has_value());
    CHECK(initial_object(cat::total_order(4)) == size_t(0));
}

TEST_CASE("factorization_category") {
    // terminal: F(terminal) = terminal
    auto ft = factorization_category(cat::terminal());
    CHECK(ft.cat.num_objects() == 1);
    CHECK(ft.cat.num_morphisms() == 1);

    // arrow category: 3 objects; hom(id_0, a) contains (a, id_0)
    auto arr = cat::arrow();
    auto fa = factorization_category(arr);
    CHECK(fa.cat.num_objects() == 3);
    bool found = false;
    for (size_t k = 0; k < fa.cat.num_morphisms(); ++k)
        if (fa.cat.src(k) == 0 /* id0 */ && fa.cat.dst(k) == 2 /* a */ && fa.alpha[k] == 2 &&
            fa.beta[k] == 0)
            found = true;
    CHECK(found);

    // object count = morphism count of the base
    auto c2 = cat::cyclic_group(2);
    auto fc = factorization_category(c2);
    CHECK(fc.cat.num_objects() == c2.num_morphisms());
    CHECK(fc.cat.num_morphisms() == 8); // |G|^3

    // identity pairs are (id_dst, id_src)
    for (size_t f = 0; f < fc.cat.num_objects(); ++f) {
        size_t idm = fc.cat.identity(f);
        CHECK(fc.alpha[idm] == c2.identity(c2.dst(f)));
        CHECK(fc.beta[idm] == c2.identity(c2.src(f)));
    }
}

TEST_CASE("under_category") {
    // terminal -> terminal
    auto ut = under_category(cat::terminal(), 0);
    CHECK(ut.cat.num_objects() == 1);
    CHECK(ut.cat.num_morphisms() == 1);

    // arrow category under 0 is again the arrow category
    auto ua = under_category(cat::arrow(), 0);
    CHECK(ua.cat.num_objects() == 2);
    CHECK(ua.cat.num_morphisms() == 3);

    CHECK_THROWS_AS(under_category(cat::arrow(), 7), UnknownObject);

    // id_y is initial in y/I for assorted I and y
    std::vector<FiniteCategory> cats = {cat::arrow(), cat::total_order(3), cat::cyclic_group(3)};
    for (const auto& I : cats)
        for (size_t y = 0; y < I.num_objects(); ++y) {
            auto u = under_category(I, y);
            auto init = initial_object(u.cat);
            REQUIRE(init.has_value());
            CHECK(u.object_mor[*init] == I.identity(y));
        }
}

TEST_CASE("functor validation") {
    auto arr = cat::arrow();
    auto term = cat::terminal();
    auto F = CatFunctor::validate(arr, term, {0, 0}, {0, 0, 0});
    CHECK(F.mmap.size() == 3);
    auto c2 = cat::cyclic_group(2);
    CHECK_THROWS(CatFunctor::validate(c2, c2, {0}, {1, 0}));
}
