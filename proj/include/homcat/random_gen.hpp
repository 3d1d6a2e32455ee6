#pragma once

#include "homcat/complex.hpp"
#include "homcat/natsys.hpp"
#include "homcat/rng.hpp"

namespace homcat::gen {

// Random valid cochain complex over a field: d^{n+1} is drawn from maps
// vanishing on im(d^n) (rows constrained to the annihilator of the image).
CochainComplex random_cochain_complex(Rng& rng, Ring ring, size_t max_deg, size_t max_dim);

// Tensor product bicomplex C^{p,q} = K^p ⊗ L^q of two random complexes,
// optionally direct-summed with a second tensor pair. Squares commute by
// construction.
DoubleComplex random_double_complex(Rng& rng, Ring ring, size_t pmax, size_t qmax, size_t max_dim);

// tensor helpers (Kronecker product conventions fixed here once)
Matrix kronecker(const Matrix& A, const Matrix& B);
DoubleComplex tensor_bicomplex(const CochainComplex& K, const CochainComplex& L, size_t pmax, size_t qmax);

// Valid-by-construction random natural systems: functor-induced on a random
// total order (matrices free on covering arrows), tensor-bifunctor systems,
// permutation representations of one-object cyclic categories, and constant
// systems on assorted small categories.
NaturalSystem random_natural_system(Rng& rng, Ring ring, size_t max_dim);

// functor on a total order with independently random covering matrices
AbFunctor random_functor_on_total_order(Rng& rng, const FiniteCategory& I, Ring ring, size_t max_dim);

} // namespace homcat::gen
