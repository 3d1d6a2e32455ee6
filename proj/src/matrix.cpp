#include "homcat/matrix.hpp"

#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace homcat {

Matrix::Matrix(Ring ring, size_t rows, size_t cols) : ring_(ring), rows_(rows), cols_(cols) {
    size_t n = rows * cols;
    switch (ring_.kind) {
    case RingKind::Integers: zz_.assign(n, mpz_class(0)); break;
    case RingKind::Rationals: qq_.assign(n, mpq_class(0)); break;
    case RingKind::PrimeField: fp_.assign(n, 0); break;
    }
}

Matrix Matrix::identity(Ring ring, size_t n) {
    Matrix m(ring, n, n);
    for (size_t i = 0; i < n; ++i) m.set_int(i, i, 1);
    return m;
}

Matrix Matrix::from_int_rows(Ring ring, const std::vector<std::vector<long>>& rows) {
    size_t r = rows.size(), c = r ? rows[0].size() : 0;
    Matrix m(ring, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw TypeMismatch("ragged row list in matrix literal");
        for (size_t j = 0; j < c; ++j) m.set_int(i, j, rows[i][j]);
    }
    return m;
}

Scalar Matrix::get(size_t i, size_t j) const {
    size_t k = i * cols_ + j;
    switch (ring_.kind) {
    case RingKind::Integers: return Scalar::integer(zz_[k]);
    case RingKind::Rationals: return Scalar::rational(qq_[k]);
    case RingKind::PrimeField: return Scalar::from_int(ring_, long(fp_[k]));
    }
    return Scalar();
}

void Matrix::set(size_t i, size_t j, const Scalar& v) {
    if (v.ring() != ring_) throw RingMismatch("matrix/scalar ring mismatch");
    size_t k = i * cols_ + j;
    switch (ring_.kind) {
    case RingKind::Integers: zz_[k] = v.z(); break;
    case RingKind::Rationals: qq_[k] = v.q(); break;
    case RingKind::PrimeField: fp_[k] = v.fp(); break;
    }
}

void Matrix::set_int(size_t i, size_t j, long v) { set(i, j, Scalar::from_int(ring_, v)); }

bool Matrix::is_zero() const {
    switch (ring_.kind) {
    case RingKind::Integers:
        for (const auto& v : zz_)
            if (v != 0) return false;
        return true;
    case RingKind::Rationals:
        for (const auto& v : qq_)
            if (v != 0) return false;
        return true;
    case RingKind::PrimeField:
        for (auto v : fp_)
            if (v) return false;
        return true;
    }
    return true;
}

bool Matrix::operator==(const Matrix& o) const {
    if (ring_ != o.ring_ || rows_ != o.rows_ || cols_ != o.cols_) return false;
    switch (ring_.kind) {
    case RingKind::Integers: return zz_ == o.zz_;
    case RingKind::Rationals: return qq_ == o.qq_;
    case RingKind::PrimeField: return fp_ == o.fp_;
    }
    return false;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_same_ring(o);
    if (cols_ != o.rows_) throw TypeMismatch("matrix product shape mismatch");
    Matrix out(ring_, rows_, o.cols_);
    size_t n = rows_, m = o.cols_, k = cols_;
    switch (ring_.kind) {
    case RingKind::PrimeField: {
        uint64_t p = ring_.p;
        // accumulate in uint64; reduce as needed to avoid overflow
        const uint64_t guard = ~uint64_t(0) - uint64_t(p - 1) * (p - 1);
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n * m * k > 1u << 16)
#endif
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) {
                uint64_t acc = 0;
                for (size_t t = 0; t < k; ++t) {
                    acc += uint64_t(fp_[i * k + t]) * o.fp_[t * m + j];
                    if (acc >= guard) acc %= p;
                }
                out.fp_[i * m + j] = uint32_t(acc % p);
            }
        break;
    }
    case RingKind::Integers: {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n * m > 1024)
#endif
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) {
                mpz_class acc = 0;
                for (size_t t = 0; t < k; ++t) acc += zz_[i * k + t] * o.zz_[t * m + j];
                out.zz_[i * m + j] = acc;
            }
        break;
    }
    case RingKind::Rationals: {
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (n * m > 1024)
#endif
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) {
                mpq_class acc = 0;
                for (size_t t = 0; t < k; ++t) acc += qq_[i * k + t] * o.qq_[t * m + j];
                out.qq_[i * m + j] = acc;
            }
        break;
    }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_same_ring(o);
    if (rows_ != o.rows_ || cols_ != o.cols_) throw TypeMismatch("matrix sum shape mismatch");
    Matrix out(ring_, rows_, cols_);
    switch (ring_.kind) {
    case RingKind::Integers:
        for (size_t k = 0; k < zz_.size(); ++k) out.zz_[k] = zz_[k] + o.zz_[k];
        break;
    case RingKind::Rationals:
        for (size_t k = 0; k < qq_.size(); ++k) out.qq_[k] = qq_[k] + o.qq_[k];
        break;
    case RingKind::PrimeField:
        for (size_t k = 0; k < fp_.size(); ++k) out.fp_[k] = fp_add(fp_[k], o.fp_[k], ring_.p);
        break;
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
    Matrix out(ring_, rows_, cols_);
    switch (ring_.kind) {
    case RingKind::Integers:
        for (size_t k = 0; k < zz_.size(); ++k) out.zz_[k] = -zz_[k];
        break;
    case RingKind::Rationals:
        for (size_t k = 0; k < qq_.size(); ++k) out.qq_[k] = -qq_[k];
        break;
    case RingKind::PrimeField:
        for (size_t k = 0; k < fp_.size(); ++k) out.fp_[k] = fp_[k] ? ring_.p - fp_[k] : 0;
        break;
    }
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(ring_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out.set(j, i, get(i, j));
    return out;
}

Matrix Matrix::hstack(const Matrix& o) const {
    check_same_ring(o);
    if (rows_ != o.rows_) throw TypeMismatch("hstack row mismatch");
    Matrix out(ring_, rows_, cols_ + o.cols_);
    out.set_block(0, 0, *this);
    out.set_block(0, cols_, o);
    return out;
}

Matrix Matrix::vstack(const Matrix& o) const {
    check_same_ring(o);
    if (cols_ != o.cols_) throw TypeMismatch("vstack col mismatch");
    Matrix out(ring_, rows_ + o.rows_, cols_);
    out.set_block(0, 0, *this);
    out.set_block(rows_, 0, o);
    return out;
}

Matrix Matrix::columns(const std::vector<size_t>& idx) const {
    Matrix out(ring_, rows_, idx.size());
    for (size_t j = 0; j < idx.size(); ++j)
        for (size_t i = 0; i < rows_; ++i) out.set(i, j, get(i, idx[j]));
    return out;
}

Matrix Matrix::rows_slice(size_t i0, size_t n) const {
    Matrix out(ring_, n, cols_);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < cols_; ++j) out.set(i, j, get(i0 + i, j));
    return out;
}

void Matrix::set_block(size_t i0, size_t j0, const Matrix& B) {
    check_same_ring(B);
    for (size_t i = 0; i < B.rows_; ++i)
        for (size_t j = 0; j < B.cols_; ++j) set(i0 + i, j0 + j, B.get(i, j));
}

void Matrix::add_block(size_t i0, size_t j0, const Matrix& B, const Scalar& c) {
    check_same_ring(B);
    for (size_t i = 0; i < B.rows_; ++i)
        for (size_t j = 0; j < B.cols_; ++j) {
            Scalar v = get(i0 + i, j0 + j) + c * B.get(i, j);
            set(i0 + i, j0 + j, v);
        }
}

void Matrix::add_block(size_t i0, size_t j0, const Matrix& B, long c) {
    add_block(i0, j0, B, Scalar::from_int(ring_, c));
}

Matrix Matrix::cast_from_integers(Ring target) const {
    if (ring_.kind != RingKind::Integers) throw RingMismatch("cast_from_integers expects Z entries");
    Matrix out(target, rows_, cols_);
    for (size_t k = 0; k < zz_.size(); ++k) {
        switch (target.kind) {
        case RingKind::Integers: out.zz_[k] = zz_[k]; break;
        case RingKind::Rationals: out.qq_[k] = mpq_class(zz_[k]); break;
        case RingKind::PrimeField: out.fp_[k] = fp_of_mpz(zz_[k], target.p); break;
        }
    }
    return out;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << get(i, j).str();
    }
    os << "] (" << rows_ << "x" << cols_ << " over " << ring_.name() << ")";
    return os.str();
}

} // namespace homcat
