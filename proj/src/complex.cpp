#include "homcat/complex.hpp"

#include "homcat/linalg.hpp"

#include <algorithm>
#include <array>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcat {

Matrix CochainComplex::d(int n) const {
    if (n >= 0 && n + 1 <= n_max()) return diff[size_t(n)];
    return Matrix(ring, dim(n + 1), dim(n));
}

void CochainComplex::validate() const {
    if (diff.size() + 1 != dims.size() && !(dims.empty() && diff.empty()))
        throw TypeMismatch("cochain complex: need one differential per adjacent degree pair");
    if (presented()) {
        if (ring.kind != RingKind::Integers)
            throw TypeMismatch("presented cochain complex must live over Z");
        if (torsion.size() != dims.size())
            throw TypeMismatch("cochain complex: torsion vector count mismatch");
        for (size_t n = 0; n < dims.size(); ++n)
            if (torsion[n].size() != dims[n])
                throw TypeMismatch("cochain complex: torsion length mismatch at degree " + std::to_string(n));
    }
    for (size_t n = 0; n + 1 < dims.size(); ++n) {
        if (diff[n].rows() != dims[n + 1] || diff[n].cols() != dims[n] || diff[n].ring() != ring)
            throw TypeMismatch("cochain complex: differential shape mismatch at degree " + std::to_string(n));
    }
    for (size_t n = 0; n + 2 < dims.size(); ++n) {
        Matrix sq = diff[n + 1] * diff[n];
        bool ok;
        if (presented()) {
            ok = true;
            for (size_t i = 0; i < sq.rows() && ok; ++i)
                for (size_t j = 0; j < sq.cols() && ok; ++j) {
                    mpz_class v = sq.get(i, j).z();
                    const mpz_class& t = torsion[n + 2][i];
                    ok = (t == 0) ? v == 0 : v % t == 0;
                }
        } else {
            ok = sq.is_zero();
        }
        if (!ok) throw NotAComplex("d∘d != 0 between degrees " + std::to_string(n) + " and " + std::to_string(n + 2));
    }
}

std::vector<FgAbelianGroup> complex_cohomology(const CochainComplex& C) {
    C.validate();
    std::vector<FgAbelianGroup> h;
    for (int n = 0; n <= C.n_max(); ++n) {
        Matrix din = C.d(n - 1), dout = C.d(n);
        if (C.presented()) {
            std::vector<mpz_class> tor_next =
                (n + 1 <= C.n_max()) ? C.torsion[size_t(n + 1)] : std::vector<mpz_class>{};
            h.push_back(presented_cohomology_at(din, dout, C.torsion[size_t(n)], tor_next));
        } else {
            h.push_back(cohomology_at(din, dout));
        }
    }
    return h;
}

Matrix DoubleComplex::dh_at(long p, long q) const {
    if (p >= 0 && q >= 0 && p < long(pmax) && q <= long(qmax)) return dh[size_t(p)][size_t(q)];
    return Matrix(ring, dim(p + 1, q), dim(p, q));
}

Matrix DoubleComplex::dv_at(long p, long q) const {
    if (p >= 0 && q >= 0 && p <= long(pmax) && q < long(qmax)) return dv[size_t(p)][size_t(q)];
    return Matrix(ring, dim(p, q + 1), dim(p, q));
}

void DoubleComplex::validate() const {
    if (dims.size() != pmax + 1) throw TypeMismatch("double complex: dims p-extent mismatch");
    for (size_t p = 0; p <= pmax; ++p)
        if (dims[p].size() != qmax + 1) throw TypeMismatch("double complex: dims q-extent mismatch");
    for (long p = 0; p <= long(pmax); ++p)
        for (long q = 0; q <= long(qmax); ++q) {
            Matrix h = dh_at(p, q), v = dv_at(p, q);
            if (h.rows() != dim(p + 1, q) || h.cols() != dim(p, q) || h.ring() != ring)
                throw TypeMismatch("double complex: horizontal shape mismatch at (" + std::to_string(p) +
                                   "," + std::to_string(q) + ")");
            if (v.rows() != dim(p, q + 1) || v.cols() != dim(p, q) || v.ring() != ring)
                throw TypeMismatch("double complex: vertical shape mismatch at (" + std::to_string(p) +
                                   "," + std::to_string(q) + ")");
            if (!(dh_at(p + 1, q) * h).is_zero())
                throw NotAComplex("double complex: d_h ∘ d_h != 0 at (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
            if (!(dv_at(p, q + 1) * v).is_zero())
                throw NotAComplex("double complex: d_v ∘ d_v != 0 at (" + std::to_string(p) + "," +
                                  std::to_string(q) + ")");
            Matrix a = dv_at(p + 1, q) * h; // right then up
            Matrix b = dh_at(p, q + 1) * v; // up then right
            if (a != b)
                throw NotAComplex("double complex: square does not commute at (" + std::to_string(p) +
                                  "," + std::to_string(q) + ")");
        }
}

namespace {

struct TotLayout {
    // per degree n: blocks (p, q, offset) with p increasing
    std::vector<std::vector<std::array<size_t, 3>>> blocks;
    std::vector<size_t> tdim;

    explicit TotLayout(const DoubleComplex& D) {
        size_t N = D.pmax + D.qmax;
        blocks.resize(N + 1);
        tdim.assign(N + 1, 0);
        for (size_t n = 0; n <= N; ++n) {
            size_t off = 0;
            for (size_t p = 0; p <= std::min(n, D.pmax); ++p) {
                size_t q = n - p;
                if (q > D.qmax) continue;
                blocks[n].push_back({p, q, off});
                off += D.dims[p][q];
            }
            tdim[n] = off;
        }
    }

    size_t offset_of(size_t n, size_t p) const {
        for (const auto& b : blocks[n])
            if (b[0] == p) return b[2];
        throw TypeMismatch("total layout: block not present");
    }
};

Matrix total_differential(const DoubleComplex& D, const TotLayout& L, size_t n) {
    Matrix out(D.ring, n + 1 < L.tdim.size() ? L.tdim[n + 1] : 0, L.tdim[n]);
    if (n + 1 >= L.tdim.size()) return out;
    for (const auto& b : L.blocks[n]) {
        long p = long(b[0]), q = long(b[1]);
        size_t off = b[2];
        Matrix h = D.dh_at(p, q);
        if (h.rows() && h.cols()) out.add_block(L.offset_of(n + 1, size_t(p + 1)), off, h, 1);
        Matrix v = D.dv_at(p, q);
        if (v.rows() && v.cols()) out.add_block(L.offset_of(n + 1, size_t(p)), off, v, (p % 2 == 0) ? 1 : -1);
    }
    return out;
}

struct Filtration {
    const DoubleComplex& D;
    TotLayout L;
    size_t N;

    explicit Filtration(const DoubleComplex& d) : D(d), L(d), N(d.pmax + d.qmax) {}

    size_t f(long a, long n) const { // dim of F^a Tot^n
        if (n < 0 || n > long(N)) return 0;
        size_t s = 0;
        for (const auto& b : L.blocks[size_t(n)])
            if (long(b[0]) >= a) s += D.dims[b[0]][b[1]];
        return s;
    }
};

} // namespace

CochainComplex total_complex(const DoubleComplex& D) {
    D.validate();
    TotLayout L(D);
    CochainComplex C;
    C.ring = D.ring;
    C.dims = L.tdim;
    for (size_t n = 0; n + 1 < L.tdim.size(); ++n) C.diff.push_back(total_differential(D, L, n));
    C.validate();
    return C;
}

SpectralPages spectral_sequence(const DoubleComplex& D) {
    if (!D.ring.is_field()) throw NotAField("spectral_sequence requires field coefficients");
    D.validate();
    Filtration F(D);
    size_t N = F.N;

    // one filtered reduction per total degree; the page dimensions are pure
    // rank arithmetic in the resulting corner profiles
    std::vector<BlockPairing> pair(N + 1);
    std::vector<size_t> plain_rank(N + 1, 0);
    long nN = long(N);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1)
#endif
    for (long n = 0; n <= nN; ++n) {
        Matrix Dn = total_differential(D, F.L, size_t(n));
        std::vector<size_t> cb(Dn.cols()), rb(Dn.rows());
        for (const auto& b : F.L.blocks[size_t(n)])
            for (size_t k = 0; k < D.dims[b[0]][b[1]]; ++k) cb[b[2] + k] = b[0];
        if (size_t(n) + 1 <= N)
            for (const auto& b : F.L.blocks[size_t(n) + 1])
                for (size_t k = 0; k < D.dims[b[0]][b[1]]; ++k) rb[b[2] + k] = b[0];
        pair[size_t(n)] = filtered_rank_profile(Dn, cb, rb);
        plain_rank[size_t(n)] = rank(Dn); // independent elimination for the abutment
    }

    auto rho = [&](long a, long b, long n) -> long {
        if (n < 0 || n > long(N)) return 0;
        return long(pair[size_t(n)].rho(a, b));
    };

    // dim E_r^{p,q} = dim A_r/(A_{r-1}^{p+1} + D A_{r-1}^{p-r+1}) resolved
    // into corner ranks of the filtered total differential
    auto page_dim = [&](long r, long p, long q) -> size_t {
        long n = p + q;
        long s = p - r + 1;
        long v = long(F.f(p, n)) - long(F.f(p + 1, n)) - rho(p, p + r, n) + rho(p + 1, p + r, n) -
                 (rho(s, p + 1, n - 1) - rho(s, p, n - 1));
        return size_t(v);
    };

    SpectralPages out;
    size_t rcap = N + 1;
    long rinf = long(rcap) + 1;
    out.einf.assign(D.pmax + 1, std::vector<size_t>(D.qmax + 1, 0));
    for (size_t p = 0; p <= D.pmax; ++p)
        for (size_t q = 0; q <= D.qmax; ++q) out.einf[p][q] = page_dim(rinf, long(p), long(q));

    // stop once the page equals E_inf: dimensions are nonincreasing in r, so
    // from then on every d_r vanishes
    for (size_t r = 0; r <= rcap; ++r) {
        std::vector<std::vector<size_t>> page(D.pmax + 1, std::vector<size_t>(D.qmax + 1, 0));
        for (size_t p = 0; p <= D.pmax; ++p)
            for (size_t q = 0; q <= D.qmax; ++q) page[p][q] = page_dim(long(r), long(p), long(q));
        out.pages.push_back(page);
        out.r_max = r;
        if (page == out.einf) break;
    }

    out.total.assign(N + 1, 0);
    for (size_t n = 0; n <= N; ++n) {
        size_t rin = n == 0 ? 0 : plain_rank[n - 1];
        size_t rout = n == N ? 0 : plain_rank[n];
        out.total[n] = F.L.tdim[n] - rin - rout;
    }
    return out;
}

std::vector<std::vector<size_t>> e2_by_double_cohomology(const DoubleComplex& D) {
    if (!D.ring.is_field()) throw NotAField("e2_by_double_cohomology requires field coefficients");
    D.validate();
    // vertical cohomology with representatives, per column
    std::vector<std::vector<SubquotientBasis>> vert(D.pmax + 1);
    for (size_t p = 0; p <= D.pmax; ++p)
        for (size_t q = 0; q <= D.qmax; ++q) {
            Matrix z = kernel_basis(D.dv_at(long(p), long(q)));
            Matrix b = D.dv_at(long(p), long(q) - 1);
            vert[p].push_back(subquotient_basis(z, b));
        }
    // induced horizontal differential on classes (d_h is a chain map)
    auto induced = [&](size_t p, size_t q) -> Matrix {
        const SubquotientBasis& src = vert[p][q];
        const SubquotientBasis& dst = vert[p + 1][q];
        Matrix img = D.dh_at(long(p), long(q)) * src.reps;
        return dst.class_coords(img);
    };
    std::vector<std::vector<size_t>> e2(D.pmax + 1, std::vector<size_t>(D.qmax + 1, 0));
    for (size_t p = 0; p <= D.pmax; ++p)
        for (size_t q = 0; q <= D.qmax; ++q) {
            size_t dmid = vert[p][q].dim();
            Matrix din = (p == 0) ? Matrix(D.ring, dmid, 0) : induced(p - 1, q);
            Matrix dout = (p == D.pmax) ? Matrix(D.ring, 0, dmid) : induced(p, q);
            e2[p][q] = cohomology_at(din, dout).rank;
        }
    return e2;
}

namespace ref {

SpectralPages spectral_sequence(const DoubleComplex& D) {
    if (!D.ring.is_field()) throw NotAField("ref::spectral_sequence requires field coefficients");
    D.validate();
    Filtration F(D);
    size_t N = F.N;

    std::vector<Matrix> Dn(N + 1);
    for (size_t n = 0; n <= N; ++n) Dn[n] = total_differential(D, F.L, n);

    // columns spanning A_r^{a} = {x in F^a Tot^n : D x in F^{a+r}}, in full
    // Tot^n coordinates
    auto approx_cycles = [&](long a, long r, long n) -> Matrix {
        if (n < 0 || n > long(N)) return Matrix(D.ring, 0, 0);
        size_t tn = F.L.tdim[size_t(n)];
        std::vector<size_t> fcols;
        for (const auto& b : F.L.blocks[size_t(n)])
            if (long(b[0]) >= a)
                for (size_t k = 0; k < D.dims[b[0]][b[1]]; ++k) fcols.push_back(b[2] + k);
        std::vector<size_t> rrows; // rows of D^n in blocks j < a + r of degree n+1
        if (size_t(n) + 1 <= N)
            for (const auto& b : F.L.blocks[size_t(n) + 1])
                if (long(b[0]) < a + r)
                    for (size_t k = 0; k < D.dims[b[0]][b[1]]; ++k) rrows.push_back(b[2] + k);
        Matrix sub(D.ring, rrows.size(), fcols.size());
        if (n < long(N))
            for (size_t i = 0; i < rrows.size(); ++i)
                for (size_t j = 0; j < fcols.size(); ++j) sub.set(i, j, Dn[size_t(n)].get(rrows[i], fcols[j]));
        Matrix k = ref::kernel_basis(sub);
        Matrix full(D.ring, tn, k.cols());
        for (size_t j = 0; j < fcols.size(); ++j)
            for (size_t c = 0; c < k.cols(); ++c) full.set(fcols[j], c, k.get(j, c));
        return full;
    };

    auto project_block = [&](const Matrix& vecs, size_t n, size_t p) -> Matrix {
        for (const auto& b : F.L.blocks[n])
            if (b[0] == p) {
                Matrix out(D.ring, D.dims[b[0]][b[1]], vecs.cols());
                for (size_t i = 0; i < out.rows(); ++i)
                    for (size_t j = 0; j < out.cols(); ++j) out.set(i, j, vecs.get(b[2] + i, j));
                return out;
            }
        return Matrix(D.ring, 0, vecs.cols());
    };

    auto page_at = [&](long r) {
        std::vector<std::vector<size_t>> page(D.pmax + 1, std::vector<size_t>(D.qmax + 1, 0));
        for (size_t p = 0; p <= D.pmax; ++p)
            for (size_t q = 0; q <= D.qmax; ++q) {
                long n = long(p + q);
                if (D.dims[p][q] == 0) continue;
                Matrix Z = project_block(approx_cycles(long(p), r, n), size_t(n), p);
                long s = long(p) - r + 1;
                Matrix Aprev = approx_cycles(s, long(p) - s, n - 1);
                Matrix B(D.ring, D.dims[p][q], 0);
                if (Aprev.cols() && n >= 1) B = project_block(Dn[size_t(n - 1)] * Aprev, size_t(n), p);
                page[p][q] = subquotient_dim(Z, B);
            }
        return page;
    };

    SpectralPages out;
    size_t rcap = N + 1;
    out.einf = page_at(long(rcap) + 1);
    for (size_t r = 0; r <= rcap; ++r) {
        out.pages.push_back(page_at(long(r)));
        out.r_max = r;
        if (out.pages[r] == out.einf) break;
    }

    out.total.assign(N + 1, 0);
    for (size_t n = 0; n <= N; ++n) {
        size_t rin = n == 0 ? 0 : ref::rank(Dn[n - 1]);
        size_t rout = n == N ? 0 : ref::rank(Dn[n]);
        out.total[n] = F.L.tdim[n] - rin - rout;
    }
    return out;
}

} // namespace ref

} // namespace homcat
