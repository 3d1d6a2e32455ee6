#include "homcat/random_gen.hpp"

#include "homcat/catalog.hpp"
#include "homcat/linalg.hpp"

namespace homcat::gen {

Matrix kronecker(const Matrix& A, const Matrix& B) {
    Matrix out(A.ring(), A.rows() * B.rows(), A.cols() * B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < A.cols(); ++j) {
            Scalar a = A.get(i, j);
            if (a.is_zero()) continue;
            for (size_t k = 0; k < B.rows(); ++k)
                for (size_t l = 0; l < B.cols(); ++l) {
                    Scalar v = a * B.get(k, l);
                    if (!v.is_zero()) out.set(i * B.rows() + k, j * B.cols() + l, v);
                }
        }
    return out;
}

namespace {

Matrix random_matrix(Rng& rng, Ring ring, size_t rows, size_t cols) {
    Matrix m(ring, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.set_int(i, j, rng.range(-2, 2));
    return m;
}

} // namespace

CochainComplex random_cochain_complex(Rng& rng, Ring ring, size_t max_deg, size_t max_dim) {
    CochainComplex C;
    C.ring = ring;
    size_t top = 1 + rng.below(max_deg);
    for (size_t n = 0; n <= top; ++n) C.dims.push_back(rng.below(max_dim + 1));
    for (size_t n = 0; n + 1 <= top; ++n) {
        if (n == 0 || C.diff[n - 1].rows() == 0) {
            C.diff.push_back(random_matrix(rng, ring, C.dims[n + 1], C.dims[n]));
            continue;
        }
        // rows of d^{n} must annihilate im(d^{n-1})
        Matrix ann = kernel_basis(C.diff[n - 1].transposed()); // columns span the annihilator
        Matrix coef = random_matrix(rng, ring, C.dims[n + 1], ann.cols());
        C.diff.push_back(ann.cols() ? coef * ann.transposed() : Matrix(ring, C.dims[n + 1], C.dims[n]));
    }
    C.validate();
    return C;
}

DoubleComplex tensor_bicomplex(const CochainComplex& K, const CochainComplex& L, size_t pmax, size_t qmax) {
    DoubleComplex D;
    D.ring = K.ring;
    D.pmax = pmax;
    D.qmax = qmax;
    D.dims.assign(pmax + 1, std::vector<size_t>(qmax + 1, 0));
    D.dh.assign(pmax + 1, std::vector<Matrix>(qmax + 1));
    D.dv.assign(pmax + 1, std::vector<Matrix>(qmax + 1));
    for (size_t p = 0; p <= pmax; ++p)
        for (size_t q = 0; q <= qmax; ++q) D.dims[p][q] = K.dim(int(p)) * L.dim(int(q));
    for (size_t p = 0; p <= pmax; ++p)
        for (size_t q = 0; q <= qmax; ++q) {
            if (p < pmax)
                D.dh[p][q] = kronecker(K.d(int(p)), Matrix::identity(L.ring, L.dim(int(q))));
            if (q < qmax)
                D.dv[p][q] = kronecker(Matrix::identity(K.ring, K.dim(int(p))), L.d(int(q)));
        }
    D.validate();
    return D;
}

DoubleComplex random_double_complex(Rng& rng, Ring ring, size_t pmax, size_t qmax, size_t max_dim) {
    CochainComplex K = random_cochain_complex(rng, ring, pmax + 1, max_dim);
    CochainComplex L = random_cochain_complex(rng, ring, qmax + 1, max_dim);
    DoubleComplex D = tensor_bicomplex(K, L, pmax, qmax);
    if (rng.coin()) {
        CochainComplex K2 = random_cochain_complex(rng, ring, pmax + 1, 2);
        CochainComplex L2 = random_cochain_complex(rng, ring, qmax + 1, 2);
        DoubleComplex D2 = tensor_bicomplex(K2, L2, pmax, qmax);
        // direct sum the two bicomplexes blockwise
        DoubleComplex S;
        S.ring = ring;
        S.pmax = pmax;
        S.qmax = qmax;
        S.dims.assign(pmax + 1, std::vector<size_t>(qmax + 1, 0));
        S.dh.assign(pmax + 1, std::vector<Matrix>(qmax + 1));
        S.dv.assign(pmax + 1, std::vector<Matrix>(qmax + 1));
        for (size_t p = 0; p <= pmax; ++p)
            for (size_t q = 0; q <= qmax; ++q) S.dims[p][q] = D.dims[p][q] + D2.dims[p][q];
        auto dsum = [&](const Matrix& a, const Matrix& b) {
            Matrix m(ring, a.rows() + b.rows(), a.cols() + b.cols());
            m.set_block(0, 0, a);
            m.set_block(a.rows(), a.cols(), b);
            return m;
        };
        for (size_t p = 0; p <= pmax; ++p)
            for (size_t q = 0; q <= qmax; ++q) {
                if (p < pmax) S.dh[p][q] = dsum(D.dh[p][q], D2.dh[p][q]);
                if (q < qmax) S.dv[p][q] = dsum(D.dv[p][q], D2.dv[p][q]);
            }
        S.validate();
        return S;
    }
    return D;
}

AbFunctor random_functor_on_total_order(Rng& rng, const FiniteCategory& I, Ring ring, size_t max_dim) {
    size_t n = I.num_objects();
    std::vector<size_t> obj_dim(n);
    for (auto& d : obj_dim) d = 1 + rng.below(max_dim);
    // covers o_i -> o_{i+1} get free matrices; composites are forced
    std::vector<Matrix> cover;
    for (size_t i = 0; i + 1 < n; ++i) cover.push_back(random_matrix(rng, ring, obj_dim[i + 1], obj_dim[i]));
    std::vector<Matrix> mor(I.num_morphisms());
    for (size_t m = 0; m < I.num_morphisms(); ++m) {
        size_t i = I.src(m), j = I.dst(m);
        Matrix M = Matrix::identity(ring, obj_dim[i]);
        for (size_t k = i; k < j; ++k) M = cover[k] * M;
        mor[m] = M;
    }
    return AbFunctor::validate(I, ring, obj_dim, mor);
}

namespace {

// permutation of {0..n-1} whose order divides k, as a matrix
Matrix random_permutation_of_order_dividing(Rng& rng, Ring ring, size_t n, size_t k) {
    std::vector<size_t> divisors;
    for (size_t c = 1; c <= std::min(n, k); ++c)
        if (k % c == 0) divisors.push_back(c);
    std::vector<size_t> perm(n);
    size_t at = 0;
    while (at < n) {
        size_t c = divisors[rng.below(divisors.size())];
        if (c > n - at) c = 1;
        for (size_t t = 0; t < c; ++t) perm[at + t] = at + (t + 1) % c;
        at += c;
    }
    Matrix P(ring, n, n);
    for (size_t j = 0; j < n; ++j) P.set_int(perm[j], j, 1);
    return P;
}

} // namespace

NaturalSystem random_natural_system(Rng& rng, Ring ring, size_t max_dim) {
    switch (rng.below(4)) {
    case 0: { // functor-induced on a total order (has an initial object)
        FiniteCategory I = cat::total_order(2 + rng.below(2));
        return natural_system_from_functor(I, random_functor_on_total_order(rng, I, ring, max_dim));
    }
    case 1: { // tensor bifunctor C(A) ⊗ D(B) on a total order
        FiniteCategory I = cat::total_order(2);
        AbFunctor Dv = random_functor_on_total_order(rng, I, ring, max_dim);
        // contravariant part: random covers read backwards
        std::vector<size_t> cdim(I.num_objects());
        for (auto& d : cdim) d = 1 + rng.below(max_dim);
        std::vector<Matrix> contra_mor(I.num_morphisms());
        Matrix back = random_matrix(rng, ring, cdim[0], cdim[1]);
        for (size_t m = 0; m < I.num_morphisms(); ++m) {
            size_t i = I.src(m), j = I.dst(m);
            contra_mor[m] = (i == j) ? Matrix::identity(ring, cdim[i]) : back;
        }
        size_t no = I.num_objects(), nm = I.num_morphisms();
        std::vector<std::vector<size_t>> dim(no, std::vector<size_t>(no));
        for (size_t A = 0; A < no; ++A)
            for (size_t B = 0; B < no; ++B) dim[A][B] = cdim[A] * Dv.obj_dim[B];
        std::vector<std::vector<Matrix>> cov(nm, std::vector<Matrix>(no));
        std::vector<std::vector<Matrix>> contra(nm, std::vector<Matrix>(no));
        for (size_t m = 0; m < nm; ++m)
            for (size_t X = 0; X < no; ++X) {
                cov[m][X] = kronecker(Matrix::identity(ring, cdim[X]), Dv.mor_mat[m]);
                contra[m][X] = kronecker(contra_mor[m], Matrix::identity(ring, Dv.obj_dim[X]));
            }
        return natural_system_from_bifunctor(I, AbBifunctor::validate(I, ring, dim, cov, contra));
    }
    case 2: { // permutation representation of a one-object cyclic category
        size_t k = 2 + rng.below(3);
        FiniteCategory I = cat::cyclic_group(k);
        size_t n = 1 + rng.below(max_dim);
        Matrix P = random_permutation_of_order_dividing(rng, ring, n, k);
        std::vector<Matrix> mor(k);
        Matrix cur = Matrix::identity(ring, n);
        for (size_t e = 0; e < k; ++e) {
            mor[e] = cur;
            cur = P * cur;
        }
        return natural_system_from_functor(I, AbFunctor::validate(I, ring, {n}, mor));
    }
    default: { // constant system on an assorted category
        switch (rng.below(4)) {
        case 0: return constant_natural_system(cat::arrow(), ring, 1 + rng.below(max_dim));
        case 1: return constant_natural_system(cat::discrete(1 + rng.below(2)), ring, 1 + rng.below(max_dim));
        case 2: return constant_natural_system(cat::cyclic_group(2), ring, 1 + rng.below(max_dim));
        default: return constant_natural_system(cat::total_order(2), ring, 1 + rng.below(max_dim));
        }
    }
    }
}

} // namespace homcat::gen
