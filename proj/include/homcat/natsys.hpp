#pragma once

#include "homcat/complex.hpp"
#include "homcat/fincat.hpp"
#include "homcat/matrix.hpp"

namespace homcat {

// Functor I -> Ab with free values: object o carries a free module of
// obj_dim[o] coordinates, morphism m the matrix mor_mat[m].
struct AbFunctor {
    Ring ring = Ring::Z();
    std::vector<size_t> obj_dim;
    std::vector<Matrix> mor_mat;

    static AbFunctor validate(const FiniteCategory& I, Ring ring, std::vector<size_t> obj_dim,
                              std::vector<Matrix> mor_mat);
};

// Bifunctor I^op x I -> Ab, split into its two partial actions.
// cov[m][A] = B(id_A, m) : (A, src m) -> (A, dst m);
// contra[m][B] = B(m, id_B) : (dst m, B) -> (src m, B).
struct AbBifunctor {
    Ring ring = Ring::Z();
    std::vector<std::vector<size_t>> dim; // [A][B]
    std::vector<std::vector<Matrix>> cov;
    std::vector<std::vector<Matrix>> contra;

    static AbBifunctor validate(const FiniteCategory& I, Ring ring,
                                std::vector<std::vector<size_t>> dim,
                                std::vector<std::vector<Matrix>> cov,
                                std::vector<std::vector<Matrix>> contra);
};

// Natural system of free modules on a finite category: a value dimension per
// base morphism plus the two factorization actions
//   push[α][f] = (α)_* : D(f) -> D(α∘f)     (dst(f) = src(α))
//   pull[β][f] = (β)^* : D(f) -> D(f∘β)     (dst(β) = src(f)).
// Construction validates functoriality over the category of factorizations
// exhaustively: identity pairs act as identities, pushes and pulls compose,
// and push/pull squares commute.
class NaturalSystem {
public:
    static NaturalSystem validate(FiniteCategory base, Ring ring, std::vector<size_t> value_dim,
                                  std::vector<std::vector<Matrix>> push,
                                  std::vector<std::vector<Matrix>> pull);

    const FiniteCategory& base() const { return base_; }
    const Ring& ring() const { return ring_; }
    size_t value_dim(size_t f) const { return value_dim_[f]; }
    const Matrix& push_at(size_t alpha, size_t f) const;
    const Matrix& pull_at(size_t beta, size_t f) const;

private:
    FiniteCategory base_;
    Ring ring_;
    std::vector<size_t> value_dim_;
    std::vector<std::vector<Matrix>> push_, pull_;
};

// D(f) = F(dst f), (α)_* = F(α), (β)^* = id
NaturalSystem natural_system_from_functor(const FiniteCategory& I, const AbFunctor& F);

// D(f: A -> B) = B(A, B), (α)_* = B(id, α), (β)^* = B(β, id)
NaturalSystem natural_system_from_bifunctor(const FiniteCategory& I, const AbBifunctor& B);

// constant system with trivial actions
NaturalSystem constant_natural_system(const FiniteCategory& I, Ring ring, size_t dim);

// Cochain complex C^n = ⊕_{n-chains c} D(composite c) for n = 0..n_max with
// the alternating coboundary: pushforward along α_1, merge faces, pullback
// along α_{n+1}. Block order follows the deterministic chain order.
CochainComplex bw_complex(const NaturalSystem& D, size_t n_max);

// cohomology in degrees 0..n_max (built from the complex truncated one
// degree higher so the top degree is genuine)
std::vector<FgAbelianGroup> bw_cohomology(const NaturalSystem& D, size_t n_max);

} // namespace homcat
