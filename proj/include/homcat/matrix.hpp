#pragma once

#include <cstddef>
#include <vector>

#include "homcat/ring.hpp"

namespace homcat {

// Dense exact matrix over one of the supported rings. Storage is row-major
// and ring-specialized (uint32 residues / mpz / mpq) so that the elimination
// kernels run on flat arrays. All entries share the matrix ring by
// construction; Scalar conversion happens only at the get/set boundary.
class Matrix {
public:
    Matrix() : ring_(Ring::Z()), rows_(0), cols_(0) {}
    Matrix(Ring ring, size_t rows, size_t cols); // zero matrix

    static Matrix identity(Ring ring, size_t n);
    // rows given as integer literals, mapped into the ring
    static Matrix from_int_rows(Ring ring, const std::vector<std::vector<long>>& rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Ring& ring() const { return ring_; }

    Scalar get(size_t i, size_t j) const;
    void set(size_t i, size_t j, const Scalar& v);
    void set_int(size_t i, size_t j, long v);

    bool is_zero() const;
    bool operator==(const Matrix&) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix operator*(const Matrix&) const;
    Matrix operator+(const Matrix&) const;
    Matrix operator-(const Matrix&) const;
    Matrix operator-() const;
    Matrix transposed() const;

    Matrix hstack(const Matrix&) const;
    Matrix vstack(const Matrix&) const;
    Matrix columns(const std::vector<size_t>& idx) const;
    Matrix rows_slice(size_t i0, size_t n) const;

    // this[i0.., j0..] = B  /  += c * B
    void set_block(size_t i0, size_t j0, const Matrix& B);
    void add_block(size_t i0, size_t j0, const Matrix& B, const Scalar& c);
    void add_block(size_t i0, size_t j0, const Matrix& B, long c);

    // entrywise embedding Z -> Q or Z -> F_p
    Matrix cast_from_integers(Ring target) const;

    std::string str() const; // small matrices, for messages/tests

    // flat typed storage, used by the elimination kernels
    std::vector<uint32_t>& fp_data() { return fp_; }
    const std::vector<uint32_t>& fp_data() const { return fp_; }
    std::vector<mpz_class>& z_data() { return zz_; }
    const std::vector<mpz_class>& z_data() const { return zz_; }
    std::vector<mpq_class>& q_data() { return qq_; }
    const std::vector<mpq_class>& q_data() const { return qq_; }

private:
    void check_same_ring(const Matrix& o) const {
        if (ring_ != o.ring_) throw RingMismatch("matrix rings differ: " + ring_.name() + " vs " + o.ring_.name());
    }

    Ring ring_;
    size_t rows_, cols_;
    std::vector<uint32_t> fp_;
    std::vector<mpz_class> zz_;
    std::vector<mpq_class> qq_;
};

} // namespace homcat
