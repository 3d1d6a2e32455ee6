#pragma once

#include <vector>

#include "homcat/snf.hpp"

namespace homcat {

// Cochain complex concentrated in degrees 0..n_max. diff[n] maps C^n to
// C^{n+1}. A complex may optionally carry per-degree coordinate relations
// (torsion[n][k] = 0 for a free generator, t >= 2 for a Z/t generator);
// differentials are then read modulo the target relations.
struct CochainComplex {
    Ring ring = Ring::Z();
    std::vector<size_t> dims;
    std::vector<Matrix> diff;
    std::vector<std::vector<mpz_class>> torsion;

    int n_max() const { return int(dims.size()) - 1; }
    bool presented() const { return !torsion.empty(); }
    size_t dim(int n) const { return (n < 0 || n > n_max()) ? 0 : dims[size_t(n)]; }
    Matrix d(int n) const; // zero-shaped outside the stored range
    void validate() const; // shapes and d∘d = 0 (NotAComplex)
};

// degreewise ker/im of the (possibly truncated) complex, degrees 0..n_max
std::vector<FgAbelianGroup> complex_cohomology(const CochainComplex& C);

// First-quadrant double complex over a field with commuting squares; the
// total-complex sign (-1)^p lands on the vertical differential only at
// totalization. dh[p][q] : (p,q) -> (p+1,q) stored for p < pmax,
// dv[p][q] : (p,q) -> (p,q+1) stored for q < qmax.
struct DoubleComplex {
    Ring ring = Ring::Q();
    size_t pmax = 0, qmax = 0;
    std::vector<std::vector<size_t>> dims;
    std::vector<std::vector<Matrix>> dh;
    std::vector<std::vector<Matrix>> dv;

    size_t dim(long p, long q) const {
        if (p < 0 || q < 0 || p > long(pmax) || q > long(qmax)) return 0;
        return dims[size_t(p)][size_t(q)];
    }
    Matrix dh_at(long p, long q) const;
    Matrix dv_at(long p, long q) const;
    void validate() const;
};

CochainComplex total_complex(const DoubleComplex& D);

// Page dimensions of the spectral sequence of the column filtration,
// E_0 = C^{p,q} with d_0 the vertical differential. pages[r][p][q] holds
// dim E_r^{p,q}; einf the filtration subquotients of H(Tot); total[n] the
// dimensions of H^n(Tot) computed by plain rank elimination.
struct SpectralPages {
    size_t r_max = 0;
    std::vector<std::vector<std::vector<size_t>>> pages;
    std::vector<std::vector<size_t>> einf;
    std::vector<size_t> total;
};

SpectralPages spectral_sequence(const DoubleComplex& D);

// Independent E_2 oracle: vertical cohomology with echelon-lift
// representatives per column, induced horizontal differential on classes,
// then horizontal cohomology.
std::vector<std::vector<size_t>> e2_by_double_cohomology(const DoubleComplex& D);

namespace ref {
// Literal subquotient construction: Z_r / B_r realized as column spans in
// each block and fed to subquotient_dim. Serial; for tests and benchmarks.
SpectralPages spectral_sequence(const DoubleComplex& D);
} // namespace ref

} // namespace homcat
