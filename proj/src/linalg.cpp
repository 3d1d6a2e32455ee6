#include "homcat/linalg.hpp"

#include <algorithm>
#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcat {

namespace {

struct FpF {
    uint32_t p;
    using T = uint32_t;
    T add(T a, T b) const { return fp_add(a, b, p); }
    T sub(T a, T b) const { return fp_sub(a, b, p); }
    T mul(T a, T b) const { return fp_mul(a, b, p); }
    T inv(T a) const { return fp_inv(a, p); }
    T neg(T a) const { return a ? p - a : 0; }
    bool is_zero(T a) const { return a == 0; }
    T zero() const { return 0; }
    T one() const { return 1; }
};

struct QF {
    using T = mpq_class;
    T add(const T& a, const T& b) const { return a + b; }
    T sub(const T& a, const T& b) const { return a - b; }
    T mul(const T& a, const T& b) const { return a * b; }
    T inv(const T& a) const { return 1 / a; }
    T neg(const T& a) const { return -a; }
    bool is_zero(const T& a) const { return a == 0; }
    T zero() const { return T(0); }
    T one() const { return T(1); }
};

template <class F>
std::vector<typename F::T>& data_of(Matrix& m);
template <>
std::vector<uint32_t>& data_of<FpF>(Matrix& m) { return m.fp_data(); }
template <>
std::vector<mpq_class>& data_of<QF>(Matrix& m) { return m.q_data(); }

template <class F>
const std::vector<typename F::T>& cdata_of(const Matrix& m);
template <>
const std::vector<uint32_t>& cdata_of<FpF>(const Matrix& m) { return m.fp_data(); }
template <>
const std::vector<mpq_class>& cdata_of<QF>(const Matrix& m) { return m.q_data(); }

// Gauss-Jordan on flat row-major data. Pivot search is serial (first nonzero
// below the current row, so results are schedule-independent); row updates
// run in parallel.
template <class F>
void rref_impl(const F& f, std::vector<typename F::T>& a, size_t rows, size_t cols,
               std::vector<size_t>& pivots, bool parallel) {
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = rows;
        for (size_t i = r; i < rows; ++i)
            if (!f.is_zero(a[i * cols + c])) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        typename F::T s = f.inv(a[r * cols + c]);
        for (size_t j = c; j < cols; ++j) a[r * cols + j] = f.mul(a[r * cols + j], s);
        long nrows = long(rows);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel && rows * cols > 4096)
#endif
        for (long i = 0; i < nrows; ++i) {
            if (size_t(i) == r) continue;
            typename F::T m = a[size_t(i) * cols + c];
            if (f.is_zero(m)) continue;
            for (size_t j = c; j < cols; ++j)
                a[size_t(i) * cols + j] = f.sub(a[size_t(i) * cols + j], f.mul(m, a[r * cols + j]));
        }
        pivots.push_back(c);
        ++r;
    }
}

template <class F>
Echelon rref_typed(const F& f, const Matrix& A, bool parallel) {
    Echelon e;
    e.R = A;
    auto& a = data_of<F>(e.R);
    rref_impl(f, a, A.rows(), A.cols(), e.pivot_cols, parallel);
    return e;
}

Echelon rref_any(const Matrix& A, bool parallel) {
    switch (A.ring().kind) {
    case RingKind::PrimeField: return rref_typed(FpF{A.ring().p}, A, parallel);
    case RingKind::Rationals: return rref_typed(QF{}, A, parallel);
    default: throw NotAField("field elimination requested over Z");
    }
}

Matrix kernel_from_rref(const Echelon& e, const Matrix& A) {
    size_t cols = A.cols();
    std::vector<bool> is_piv(cols, false);
    for (size_t c : e.pivot_cols) is_piv[c] = true;
    std::vector<size_t> free_cols;
    for (size_t c = 0; c < cols; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    Matrix K(A.ring(), cols, free_cols.size());
    for (size_t k = 0; k < free_cols.size(); ++k) {
        size_t fc = free_cols[k];
        K.set_int(fc, k, 1);
        for (size_t row = 0; row < e.pivot_cols.size(); ++row) {
            Scalar v = e.R.get(row, fc);
            if (!v.is_zero()) K.set(e.pivot_cols[row], k, -v);
        }
    }
    return K;
}

} // namespace

Echelon rref(const Matrix& A) { return rref_any(A, true); }
size_t rank(const Matrix& A) { return rref_any(A, true).rank(); }
Matrix kernel_basis(const Matrix& A) {
    Echelon e = rref_any(A, true);
    return kernel_from_rref(e, A);
}

Matrix column_space_basis(const Matrix& A) {
    Echelon e = rref_any(A, true);
    return A.columns(e.pivot_cols);
}

bool in_column_span(const Matrix& Z, const Matrix& B) {
    if (Z.rows() != B.rows()) throw TypeMismatch("in_column_span: ambient dimensions differ");
    if (B.cols() == 0) return true;
    return rank(Z) == rank(Z.hstack(B));
}

size_t subquotient_dim(const Matrix& Z, const Matrix& B) {
    size_t rz = rank(Z);
    if (B.cols() == 0) return rz;
    if (Z.rows() != B.rows()) throw TypeMismatch("subquotient_dim: ambient dimensions differ");
    size_t rb = rank(B);
    if (rank(Z.hstack(B)) != rz)
        throw SubspaceViolation("subquotient_dim: columns of B leave the span of Z");
    return rz - rb;
}

std::optional<Matrix> solve(const Matrix& A, const Matrix& B) {
    if (A.rows() != B.rows()) throw TypeMismatch("solve: row counts differ");
    Echelon e = rref_any(A.hstack(B), true);
    for (size_t c : e.pivot_cols)
        if (c >= A.cols()) return std::nullopt;
    Matrix X(A.ring(), A.cols(), B.cols());
    for (size_t row = 0; row < e.pivot_cols.size(); ++row)
        for (size_t j = 0; j < B.cols(); ++j) X.set(e.pivot_cols[row], j, e.R.get(row, A.cols() + j));
    return X;
}

SubquotientBasis subquotient_basis(const Matrix& Z, const Matrix& B) {
    SubquotientBasis sq;
    sq.Z = Z;
    sq.B = column_space_basis(B);
    if (!in_column_span(Z, sq.B))
        throw SubspaceViolation("subquotient_basis: B is not contained in span(Z)");
    // extend basis of span(B) to span(Z) by sweeping Z's columns in order
    Matrix cur = sq.B;
    size_t r = rank(cur);
    size_t target = rank(Z);
    std::vector<size_t> chosen;
    for (size_t c = 0; c < Z.cols() && r < target; ++c) {
        Matrix cand = cur.hstack(Z.columns({c}));
        size_t rc = rank(cand);
        if (rc > r) {
            cur = cand;
            r = rc;
            chosen.push_back(c);
        }
    }
    sq.reps = Z.columns(chosen);
    return sq;
}

Matrix SubquotientBasis::class_coords(const Matrix& vecs) const {
    Matrix basis = B.cols() ? B.hstack(reps) : reps;
    auto x = solve(basis, vecs);
    if (!x) throw SubspaceViolation("class_coords: vector leaves the subquotient's cycle space");
    return x->rows_slice(B.cols(), reps.cols());
}

size_t BlockPairing::rho(long a, long b) const {
    if (b <= 0 || cnt.empty()) return 0;
    size_t s = 0;
    for (size_t i = 0; i < cnt.size(); ++i) {
        if (long(i) < a) continue;
        for (size_t j = 0; j < cnt[i].size(); ++j)
            if (long(j) < b) s += cnt[i][j];
    }
    return s;
}

namespace {

template <class F>
BlockPairing pairing_typed(const F& f, const Matrix& D, const std::vector<size_t>& col_block,
                           const std::vector<size_t>& row_block) {
    size_t rows = D.rows(), cols = D.cols();
    std::vector<size_t> corder(cols), rorder(rows);
    std::iota(corder.begin(), corder.end(), 0);
    std::iota(rorder.begin(), rorder.end(), 0);
    std::stable_sort(corder.begin(), corder.end(),
                     [&](size_t a, size_t b) { return col_block[a] > col_block[b]; });
    std::stable_sort(rorder.begin(), rorder.end(),
                     [&](size_t a, size_t b) { return row_block[a] > row_block[b]; });

    const auto& d = cdata_of<F>(D);
    std::vector<std::vector<typename F::T>> col(cols);
    long ncols = long(cols);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (rows * cols > 4096)
#endif
    for (long k = 0; k < ncols; ++k) {
        auto& v = col[size_t(k)];
        v.resize(rows);
        size_t src = corder[size_t(k)];
        for (size_t i = 0; i < rows; ++i) v[i] = d[rorder[i] * cols + src];
    }

    size_t maxc = 0, maxr = 0;
    for (size_t b : col_block) maxc = std::max(maxc, b);
    for (size_t b : row_block) maxr = std::max(maxr, b);
    BlockPairing out;
    out.cnt.assign(maxc + 1, std::vector<size_t>(maxr + 1, 0));

    std::vector<long> owner(rows, -1); // low position -> reduced column
    auto low_of = [&](const std::vector<typename F::T>& v) -> long {
        for (long i = long(rows) - 1; i >= 0; --i)
            if (!f.is_zero(v[size_t(i)])) return i;
        return -1;
    };
    for (size_t k = 0; k < cols; ++k) {
        auto& v = col[k];
        long low = low_of(v);
        while (low >= 0 && owner[size_t(low)] >= 0) {
            const auto& w = col[size_t(owner[size_t(low)])];
            typename F::T m = f.mul(v[size_t(low)], f.inv(w[size_t(low)]));
            for (size_t i = 0; i <= size_t(low); ++i) v[i] = f.sub(v[i], f.mul(m, w[i]));
            low = low_of(v);
        }
        if (low >= 0) {
            owner[size_t(low)] = long(k);
            out.cnt[col_block[corder[k]]][row_block[rorder[size_t(low)]]]++;
            out.total_rank++;
        }
    }
    return out;
}

} // namespace

BlockPairing filtered_rank_profile(const Matrix& D, const std::vector<size_t>& col_block,
                                   const std::vector<size_t>& row_block) {
    if (col_block.size() != D.cols() || row_block.size() != D.rows())
        throw TypeMismatch("filtered_rank_profile: block label count mismatch");
    if (D.rows() == 0 || D.cols() == 0) {
        BlockPairing out;
        size_t maxc = 0, maxr = 0;
        for (size_t b : col_block) maxc = std::max(maxc, b);
        for (size_t b : row_block) maxr = std::max(maxr, b);
        out.cnt.assign(maxc + 1, std::vector<size_t>(maxr + 1, 0));
        return out;
    }
    switch (D.ring().kind) {
    case RingKind::PrimeField: return pairing_typed(FpF{D.ring().p}, D, col_block, row_block);
    case RingKind::Rationals: return pairing_typed(QF{}, D, col_block, row_block);
    default: throw NotAField("filtered_rank_profile over Z");
    }
}

namespace ref {

Matrix matmul(const Matrix& A, const Matrix& B) {
    if (A.ring() != B.ring()) throw RingMismatch("ref::matmul ring mismatch");
    if (A.cols() != B.rows()) throw TypeMismatch("ref::matmul shape mismatch");
    Matrix out(A.ring(), A.rows(), B.cols());
    for (size_t i = 0; i < A.rows(); ++i)
        for (size_t j = 0; j < B.cols(); ++j) {
            Scalar acc = Scalar::zero(A.ring());
            for (size_t t = 0; t < A.cols(); ++t) acc = acc + A.get(i, t) * B.get(t, j);
            out.set(i, j, acc);
        }
    return out;
}

// Textbook Gauss-Jordan through the Scalar interface; deliberately written
// independently of the flat-array kernels above.
Echelon rref(const Matrix& A) {
    if (!A.ring().is_field()) throw NotAField("ref::rref over Z");
    Echelon e;
    e.R = A;
    Matrix& R = e.R;
    size_t r = 0;
    for (size_t c = 0; c < A.cols() && r < A.rows(); ++c) {
        size_t piv = A.rows();
        for (size_t i = r; i < A.rows(); ++i)
            if (!R.get(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == A.rows()) continue;
        if (piv != r)
            for (size_t j = 0; j < A.cols(); ++j) {
                Scalar t = R.get(piv, j);
                R.set(piv, j, R.get(r, j));
                R.set(r, j, t);
            }
        Scalar s = R.get(r, c).inverse();
        for (size_t j = 0; j < A.cols(); ++j) R.set(r, j, R.get(r, j) * s);
        for (size_t i = 0; i < A.rows(); ++i) {
            if (i == r) continue;
            Scalar m = R.get(i, c);
            if (m.is_zero()) continue;
            for (size_t j = 0; j < A.cols(); ++j) R.set(i, j, R.get(i, j) - m * R.get(r, j));
        }
        e.pivot_cols.push_back(c);
        ++r;
    }
    return e;
}

size_t rank(const Matrix& A) { return ref::rref(A).rank(); }

Matrix kernel_basis(const Matrix& A) {
    Echelon e = ref::rref(A);
    return kernel_from_rref(e, A);
}

} // namespace ref

} // namespace homcat
