#pragma once

#include <optional>
#include <vector>

#include "homcat/matrix.hpp"

namespace homcat {

// Field linear algebra (Q or F_p). Integer matrices are rejected with
// NotAField; the SNF route lives in snf.hpp.

struct Echelon {
    Matrix R;                       // reduced row echelon form
    std::vector<size_t> pivot_cols; // one per nonzero row, increasing
    size_t rank() const { return pivot_cols.size(); }
};

Echelon rref(const Matrix& A);
size_t rank(const Matrix& A);

// Columns form a basis of {x : A x = 0}; count = cols(A) - rank(A).
Matrix kernel_basis(const Matrix& A);

// Maximal independent subset of the columns, in column order.
Matrix column_space_basis(const Matrix& A);

// true iff every column of B lies in the column span of Z
bool in_column_span(const Matrix& Z, const Matrix& B);

// dim span(Z) - dim span(B); requires span(B) ⊆ span(Z) (SubspaceViolation).
size_t subquotient_dim(const Matrix& Z, const Matrix& B);

// X with A X = B, or nullopt when inconsistent (free variables set to zero)
std::optional<Matrix> solve(const Matrix& A, const Matrix& B);

// Subquotient span(Z)/span(B) with deterministic echelon-lift representatives.
// `reps` columns extend a basis of span(B) to one of span(Z); class_coords
// expresses vectors of span(Z) in the classes of those representatives.
struct SubquotientBasis {
    Matrix Z;
    Matrix B;
    Matrix reps;
    size_t dim() const { return reps.cols(); }
    Matrix class_coords(const Matrix& vecs) const;
};
SubquotientBasis subquotient_basis(const Matrix& Z, const Matrix& B);

// Filtered rank data of a block matrix, from one persistence-style column
// reduction: columns and rows are ordered by decreasing block label and each
// reduced column owns a distinct lowest nonzero row. By the pairing
// uniqueness lemma, rho(a, b) = rank of the submatrix on columns with block
// >= a and rows with block < b is the number of pivots landing in that
// corner, independent of reduction choices.
struct BlockPairing {
    std::vector<std::vector<size_t>> cnt; // cnt[col_block][row_block] pivots
    size_t total_rank = 0;
    size_t rho(long a, long b) const;
};
BlockPairing filtered_rank_profile(const Matrix& D, const std::vector<size_t>& col_block,
                                   const std::vector<size_t>& row_block);

// Serial reference implementations, kept for testing the OpenMP kernels and
// for the benchmark tool. Same contracts as the production functions.
namespace ref {
Matrix matmul(const Matrix& A, const Matrix& B);
Echelon rref(const Matrix& A);
size_t rank(const Matrix& A);
Matrix kernel_basis(const Matrix& A);
} // namespace ref

} // namespace homcat
