#include "homcat/natsys.hpp"

#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcat {

AbFunctor AbFunctor::validate(const FiniteCategory& I, Ring ring, std::vector<size_t> obj_dim,
                              std::vector<Matrix> mor_mat) {
    AbFunctor F;
    F.ring = ring;
    F.obj_dim = std::move(obj_dim);
    F.mor_mat = std::move(mor_mat);
    if (F.obj_dim.size() != I.num_objects() || F.mor_mat.size() != I.num_morphisms())
        throw TypeMismatch("functor data sizes do not match the category");
    for (size_t m = 0; m < I.num_morphisms(); ++m) {
        const Matrix& M = F.mor_mat[m];
        if (M.ring() != ring || M.rows() != F.obj_dim[I.dst(m)] || M.cols() != F.obj_dim[I.src(m)])
            throw TypeMismatch("functor matrix shape mismatch at morphism '" + I.morphism_name(m) + "'");
    }
    for (size_t o = 0; o < I.num_objects(); ++o)
        if (F.mor_mat[I.identity(o)] != Matrix::identity(ring, F.obj_dim[o]))
            throw IdentityViolation("functor does not send id of '" + I.object_name(o) + "' to the identity");
    for (size_t g = 0; g < I.num_morphisms(); ++g)
        for (size_t f = 0; f < I.num_morphisms(); ++f)
            if (I.composable(g, f) && F.mor_mat[I.compose(g, f)] != F.mor_mat[g] * F.mor_mat[f])
                throw TypeMismatch("functor not multiplicative at ('" + I.morphism_name(g) + "', '" +
                                   I.morphism_name(f) + "')");
    return F;
}

AbBifunctor AbBifunctor::validate(const FiniteCategory& I, Ring ring,
                                  std::vector<std::vector<size_t>> dim,
                                  std::vector<std::vector<Matrix>> cov,
                                  std::vector<std::vector<Matrix>> contra) {
    AbBifunctor B;
    B.ring = ring;
    B.dim = std::move(dim);
    B.cov = std::move(cov);
    B.contra = std::move(contra);
    size_t no = I.num_objects(), nm = I.num_morphisms();
    if (B.dim.size() != no || B.cov.size() != nm || B.contra.size() != nm)
        throw TypeMismatch("bifunctor data sizes do not match the category");
    for (size_t m = 0; m < nm; ++m) {
        if (B.cov[m].size() != no || B.contra[m].size() != no)
            throw TypeMismatch("bifunctor action sizes do not match the object count");
        for (size_t A = 0; A < no; ++A) {
            const Matrix& c = B.cov[m][A];
            if (c.rows() != B.dim[A][I.dst(m)] || c.cols() != B.dim[A][I.src(m)] || c.ring() != ring)
                throw TypeMismatch("bifunctor covariant action shape mismatch");
        }
        for (size_t Bb = 0; Bb < no; ++Bb) {
            const Matrix& c = B.contra[m][Bb];
            if (c.rows() != B.dim[I.src(m)][Bb] || c.cols() != B.dim[I.dst(m)][Bb] || c.ring() != ring)
                throw TypeMismatch("bifunctor contravariant action shape mismatch");
        }
    }
    for (size_t o = 0; o < no; ++o)
        for (size_t A = 0; A < no; ++A) {
            if (B.cov[I.identity(o)][A] != Matrix::identity(ring, B.dim[A][o]))
                throw IdentityViolation("bifunctor: covariant identity action is not the identity");
            if (B.contra[I.identity(o)][A] != Matrix::identity(ring, B.dim[o][A]))
                throw IdentityViolation("bifunctor: contravariant identity action is not the identity");
        }
    for (size_t g = 0; g < nm; ++g)
        for (size_t f = 0; f < nm; ++f) {
            if (I.composable(g, f)) {
                size_t gf = I.compose(g, f);
                for (size_t A = 0; A < no; ++A)
                    if (B.cov[gf][A] != B.cov[g][A] * B.cov[f][A])
                        throw TypeMismatch("bifunctor covariant action not functorial");
                for (size_t Bb = 0; Bb < no; ++Bb)
                    if (B.contra[gf][Bb] != B.contra[f][Bb] * B.contra[g][Bb])
                        throw TypeMismatch("bifunctor contravariant action not functorial");
            }
            // partial actions commute: B(β, id) then B(id, α) both orders
            for (size_t A = 0; A < no; ++A)
                (void)A;
        }
    for (size_t a = 0; a < nm; ++a)
        for (size_t b = 0; b < nm; ++b)
            if (B.cov[a][I.src(b)] * B.contra[b][I.src(a)] != B.contra[b][I.dst(a)] * B.cov[a][I.dst(b)])
                throw TypeMismatch("bifunctor partial actions do not commute");
    return B;
}

NaturalSystem NaturalSystem::validate(FiniteCategory base, Ring ring, std::vector<size_t> value_dim,
                                      std::vector<std::vector<Matrix>> push,
                                      std::vector<std::vector<Matrix>> pull) {
    NaturalSystem D;
    D.base_ = std::move(base);
    D.ring_ = ring;
    D.value_dim_ = std::move(value_dim);
    D.push_ = std::move(push);
    D.pull_ = std::move(pull);
    const FiniteCategory& I = D.base_;
    size_t nm = I.num_morphisms();
    if (D.value_dim_.size() != nm || D.push_.size() != nm || D.pull_.size() != nm)
        throw TypeMismatch("natural system data sizes do not match the category");

    auto dim = [&](size_t f) { return D.value_dim_[f]; };
    for (size_t a = 0; a < nm; ++a) {
        if (D.push_[a].size() != nm || D.pull_[a].size() != nm)
            throw TypeMismatch("natural system action tables ragged");
        for (size_t f = 0; f < nm; ++f) {
            if (I.composable(a, f)) {
                const Matrix& P = D.push_[a][f];
                if (P.ring() != ring || P.rows() != dim(I.compose(a, f)) || P.cols() != dim(f))
                    throw TypeMismatch("pushforward shape mismatch at (α,f) = ('" + I.morphism_name(a) +
                                       "', '" + I.morphism_name(f) + "')");
            }
            if (I.composable(f, a)) {
                const Matrix& P = D.pull_[a][f];
                if (P.ring() != ring || P.rows() != dim(I.compose(f, a)) || P.cols() != dim(f))
                    throw TypeMismatch("pullback shape mismatch at (β,f) = ('" + I.morphism_name(a) +
                                       "', '" + I.morphism_name(f) + "')");
            }
        }
    }
    // identity actions
    for (size_t f = 0; f < nm; ++f) {
        if (D.push_[I.identity(I.dst(f))][f] != Matrix::identity(ring, dim(f)))
            throw IdentityViolation("pushforward of the identity is not the identity at '" +
                                    I.morphism_name(f) + "'");
        if (D.pull_[I.identity(I.src(f))][f] != Matrix::identity(ring, dim(f)))
            throw IdentityViolation("pullback of the identity is not the identity at '" +
                                    I.morphism_name(f) + "'");
    }
    // composition of pushes / pulls, and the commuting square, exhaustively
    for (size_t f = 0; f < nm; ++f) {
        for (size_t a = 0; a < nm; ++a) {
            if (!I.composable(a, f)) continue;
            size_t af = I.compose(a, f);
            for (size_t a2 = 0; a2 < nm; ++a2)
                if (I.composable(a2, af) &&
                    D.push_[a2][af] * D.push_[a][f] != D.push_[I.compose(a2, a)][f])
                    throw TypeMismatch("pushforwards do not compose at ('" + I.morphism_name(a2) + "','" +
                                       I.morphism_name(a) + "','" + I.morphism_name(f) + "')");
            for (size_t b = 0; b < nm; ++b)
                if (I.composable(f, b) &&
                    D.pull_[b][af] * D.push_[a][f] != D.push_[a][I.compose(f, b)] * D.pull_[b][f])
                    throw TypeMismatch("push/pull square does not commute at ('" + I.morphism_name(a) +
                                       "','" + I.morphism_name(b) + "','" + I.morphism_name(f) + "')");
        }
        for (size_t b = 0; b < nm; ++b) {
            if (!I.composable(f, b)) continue;
            size_t fb = I.compose(f, b);
            for (size_t b2 = 0; b2 < nm; ++b2)
                if (I.composable(fb, b2) &&
                    D.pull_[b2][fb] * D.pull_[b][f] != D.pull_[I.compose(b, b2)][f])
                    throw TypeMismatch("pullbacks do not compose at ('" + I.morphism_name(b2) + "','" +
                                       I.morphism_name(b) + "','" + I.morphism_name(f) + "')");
        }
    }
    return D;
}

const Matrix& NaturalSystem::push_at(size_t alpha, size_t f) const {
    if (!base_.composable(alpha, f)) throw TypeMismatch("push_at: pair not composable");
    return push_[alpha][f];
}

const Matrix& NaturalSystem::pull_at(size_t beta, size_t f) const {
    if (!base_.composable(f, beta)) throw TypeMismatch("pull_at: pair not composable");
    return pull_[beta][f];
}

NaturalSystem natural_system_from_functor(const FiniteCategory& I, const AbFunctor& F) {
    size_t nm = I.num_morphisms();
    std::vector<size_t> vd(nm);
    for (size_t f = 0; f < nm; ++f) vd[f] = F.obj_dim[I.dst(f)];
    std::vector<std::vector<Matrix>> push(nm, std::vector<Matrix>(nm));
    std::vector<std::vector<Matrix>> pull(nm, std::vector<Matrix>(nm));
    for (size_t a = 0; a < nm; ++a)
        for (size_t f = 0; f < nm; ++f) {
            if (I.composable(a, f)) push[a][f] = F.mor_mat[a];
            if (I.composable(f, a)) pull[a][f] = Matrix::identity(F.ring, vd[f]);
        }
    return NaturalSystem::validate(I, F.ring, std::move(vd), std::move(push), std::move(pull));
}

NaturalSystem natural_system_from_bifunctor(const FiniteCategory& I, const AbBifunctor& B) {
    size_t nm = I.num_morphisms();
    std::vector<size_t> vd(nm);
    for (size_t f = 0; f < nm; ++f) vd[f] = B.dim[I.src(f)][I.dst(f)];
    std::vector<std::vector<Matrix>> push(nm, std::vector<Matrix>(nm));
    std::vector<std::vector<Matrix>> pull(nm, std::vector<Matrix>(nm));
    for (size_t a = 0; a < nm; ++a)
        for (size_t f = 0; f < nm; ++f) {
            if (I.composable(a, f)) push[a][f] = B.cov[a][I.src(f)];
            if (I.composable(f, a)) pull[a][f] = B.contra[a][I.dst(f)];
        }
    return NaturalSystem::validate(I, B.ring, std::move(vd), std::move(push), std::move(pull));
}

NaturalSystem constant_natural_system(const FiniteCategory& I, Ring ring, size_t dim) {
    AbFunctor F;
    F.ring = ring;
    F.obj_dim.assign(I.num_objects(), dim);
    for (size_t m = 0; m < I.num_morphisms(); ++m) F.mor_mat.push_back(Matrix::identity(ring, dim));
    return natural_system_from_functor(I, AbFunctor::validate(I, ring, F.obj_dim, F.mor_mat));
}

CochainComplex bw_complex(const NaturalSystem& D, size_t n_max) {
    const FiniteCategory& I = D.base();
    CochainComplex C;
    C.ring = D.ring();

    std::vector<std::vector<Chain>> ch(n_max + 1);
    std::vector<std::vector<size_t>> offset(n_max + 1);
    std::vector<std::map<std::vector<size_t>, size_t>> index(n_max + 1);
    for (size_t n = 0; n <= n_max; ++n) {
        ch[n] = chains(I, n);
        size_t off = 0;
        for (size_t k = 0; k < ch[n].size(); ++k) {
            offset[n].push_back(off);
            off += D.value_dim(ch[n][k].composite);
            if (n == 0)
                index[n][{ch[n][k].src_obj}] = k;
            else
                index[n][ch[n][k].arrows] = k;
        }
        C.dims.push_back(off);
    }

    for (size_t n = 0; n + 1 <= n_max; ++n) {
        Matrix d(C.ring, C.dims[n + 1], C.dims[n]);
        long nc = long(ch[n + 1].size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (long ci = 0; ci < nc; ++ci) {
            const Chain& c = ch[n + 1][size_t(ci)];
            size_t row = offset[n + 1][size_t(ci)];
            size_t k = n + 1;
            // face 0: drop α_1, push along it
            {
                std::vector<size_t> rest(c.arrows.begin() + 1, c.arrows.end());
                size_t col;
                size_t comp_rest;
                if (rest.empty()) {
                    col = index[n].at({I.src(c.arrows[0])});
                    comp_rest = I.identity(I.src(c.arrows[0]));
                } else {
                    col = index[n].at(rest);
                    comp_rest = ch[n][col].composite;
                }
                d.add_block(row, offset[n][col], D.push_at(c.arrows[0], comp_rest), 1);
            }
            // faces 1..n: merge α_j ∘ α_{j+1}, identity on the value
            for (size_t j = 1; j <= n; ++j) {
                std::vector<size_t> merged;
                for (size_t t = 0; t < k; ++t) {
                    if (t == j - 1) {
                        merged.push_back(I.compose(c.arrows[j - 1], c.arrows[j]));
                        ++t; // skip α_{j+1}
                    } else {
                        merged.push_back(c.arrows[t]);
                    }
                }
                size_t col = index[n].at(merged);
                Matrix idm = Matrix::identity(C.ring, D.value_dim(c.composite));
                d.add_block(row, offset[n][col], idm, (j % 2 == 0) ? 1 : -1);
            }
            // face n+1: drop α_{n+1}, pull back along it
            {
                std::vector<size_t> rest(c.arrows.begin(), c.arrows.end() - 1);
                size_t col;
                size_t comp_rest;
                if (rest.empty()) {
                    col = index[n].at({I.dst(c.arrows[0])});
                    comp_rest = I.identity(I.dst(c.arrows[0]));
                } else {
                    col = index[n].at(rest);
                    comp_rest = ch[n][col].composite;
                }
                d.add_block(row, offset[n][col], D.pull_at(c.arrows[k - 1], comp_rest),
                            (k % 2 == 0) ? 1 : -1);
            }
        }
        C.diff.push_back(std::move(d));
    }
    C.validate();
    return C;
}

std::vector<FgAbelianGroup> bw_cohomology(const NaturalSystem& D, size_t n_max) {
    CochainComplex C = bw_complex(D, n_max + 1);
    auto h = complex_cohomology(C);
    h.resize(n_max + 1);
    return h;
}

} // namespace homcat
