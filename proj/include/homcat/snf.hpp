#pragma once

#include <vector>

#include "homcat/matrix.hpp"

namespace homcat {

// Finitely generated abelian group, invariant-factor form:
// Z^rank + Z/t_1 + ... + Z/t_k with 2 <= t_1 | t_2 | ... | t_k.
struct FgAbelianGroup {
    size_t rank = 0;
    std::vector<mpz_class> torsion;

    bool is_trivial() const { return rank == 0 && torsion.empty(); }
    bool operator==(const FgAbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }
    std::string str() const; // "0", "Z^2 + Z/2 + Z/4", ...
};

// U * A * V = diag(d) padded with zeros; d contains the nonzero elementary
// divisors (positive, each dividing the next); U, V unimodular. Vinv is
// carried along because kernel coordinates need it.
struct SmithForm {
    std::vector<mpz_class> d;
    Matrix U, V, Vinv;
};

SmithForm smith_normal_form(const Matrix& A); // integer entries only

// Basis of the integer kernel lattice {x in Z^cols : A x = 0} (saturated).
Matrix integer_kernel_basis(const Matrix& A);

// Integer determinant by Bareiss fraction-free elimination (square A).
mpz_class det_z(const Matrix& A);

// ker(d_out) / im(d_in) at the middle term of C^{n-1} -> C^n -> C^{n+1};
// d_in maps into the middle term, d_out maps out of it. Over a field the
// result is free of the expected dimension, over Z rank and torsion come
// from Smith form. Throws NotAComplex when d_out * d_in != 0.
FgAbelianGroup cohomology_at(const Matrix& d_in, const Matrix& d_out);

// lattice(N gens) / lattice(D gens) inside Z^n, D ⊆ N required
// (SubspaceViolation otherwise).
FgAbelianGroup quotient_group(const Matrix& N, const Matrix& D);

// Cohomology of Z^a/rel complexes at the middle degree. tor_* give one
// modulus per coordinate of the previous/middle/next term: 0 marks a free
// generator, t >= 2 a Z/t generator. Differentials are integer matrices
// understood modulo the target relations; well-definedness and the complex
// property are checked modulo those relations.
FgAbelianGroup presented_cohomology_at(const Matrix& d_in, const Matrix& d_out,
                                       const std::vector<mpz_class>& tor_mid,
                                       const std::vector<mpz_class>& tor_next);

} // namespace homcat
