#include "homcat/snf.hpp"

#include "homcat/linalg.hpp"

#include <cstdlib>
#include <sstream>

namespace homcat {

std::string FgAbelianGroup::str() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank == 1) {
        os << "Z";
        first = false;
    } else if (rank > 1) {
        os << "Z^" << rank;
        first = false;
    }
    for (const auto& t : torsion) {
        os << (first ? "" : " + ") << "Z/" << t.get_str();
        first = false;
    }
    return os.str();
}

namespace {

// In-place SNF worker. Keeps U*A_orig*V = A at every step, together with
// Vinv = V^{-1} (needed for kernel coordinates).
struct SnfWork {
    std::vector<std::vector<mpz_class>> a; // rows x cols
    Matrix U, V, Vinv;
    size_t rows, cols;

    explicit SnfWork(const Matrix& A)
        : U(Matrix::identity(Ring::Z(), A.rows())),
          V(Matrix::identity(Ring::Z(), A.cols())),
          Vinv(Matrix::identity(Ring::Z(), A.cols())),
          rows(A.rows()),
          cols(A.cols()) {
        a.assign(rows, std::vector<mpz_class>(cols));
        const auto& d = A.z_data();
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j) a[i][j] = d[i * cols + j];
    }

    void swap_rows(size_t i, size_t j) {
        if (i == j) return;
        std::swap(a[i], a[j]);
        for (size_t k = 0; k < rows; ++k) {
            Scalar t = U.get(i, k);
            U.set(i, k, U.get(j, k));
            U.set(j, k, t);
        }
    }
    void swap_cols(size_t i, size_t j) {
        if (i == j) return;
        for (size_t k = 0; k < rows; ++k) std::swap(a[k][i], a[k][j]);
        for (size_t k = 0; k < cols; ++k) {
            Scalar t = V.get(k, i);
            V.set(k, i, V.get(k, j));
            V.set(k, j, t);
            t = Vinv.get(i, k);
            Vinv.set(i, k, Vinv.get(j, k));
            Vinv.set(j, k, t);
        }
    }
    // row_i += q * row_t
    void add_row(size_t i, size_t t, const mpz_class& q) {
        if (q == 0) return;
        for (size_t k = 0; k < cols; ++k) a[i][k] += q * a[t][k];
        for (size_t k = 0; k < rows; ++k)
            U.set(i, k, Scalar::integer(U.get(i, k).z() + q * U.get(t, k).z()));
    }
    // col_j += q * col_t
    void add_col(size_t j, size_t t, const mpz_class& q) {
        if (q == 0) return;
        for (size_t k = 0; k < rows; ++k) a[k][j] += q * a[k][t];
        for (size_t k = 0; k < cols; ++k)
            V.set(k, j, Scalar::integer(V.get(k, j).z() + q * V.get(k, t).z()));
        for (size_t k = 0; k < cols; ++k)
            Vinv.set(t, k, Scalar::integer(Vinv.get(t, k).z() - q * Vinv.get(j, k).z()));
    }
    void negate_row(size_t i) {
        for (size_t k = 0; k < cols; ++k) a[i][k] = -a[i][k];
        for (size_t k = 0; k < rows; ++k) U.set(i, k, -U.get(i, k));
    }
};

// quotient of a by b rounded to nearest (minimizes |a - q b|)
mpz_class div_nearest(const mpz_class& aa, const mpz_class& bb) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), aa.get_mpz_t(), bb.get_mpz_t());
    mpz_class ab = abs(bb);
    if (2 * r > ab) q += (bb > 0 ? 1 : -1);
    return q;
}

} // namespace

SmithForm smith_normal_form(const Matrix& A) {
    if (A.ring().kind != RingKind::Integers) throw TypeMismatch("smith_normal_form expects integer entries");
    SnfWork w(A);
    size_t m = std::min(w.rows, w.cols);
    SmithForm out;

    for (size_t t = 0; t < m; ++t) {
        for (;;) {
            // smallest |entry| in the trailing submatrix (pivot-minimizing)
            size_t bi = w.rows, bj = w.cols;
            mpz_class best;
            for (size_t i = t; i < w.rows; ++i)
                for (size_t j = t; j < w.cols; ++j) {
                    if (w.a[i][j] == 0) continue;
                    mpz_class v = abs(w.a[i][j]);
                    if (bi == w.rows || v < best) {
                        best = v;
                        bi = i;
                        bj = j;
                    }
                }
            if (bi == w.rows) goto done; // submatrix is zero
            w.swap_rows(t, bi);
            w.swap_cols(t, bj);

            bool clean = true;
            for (size_t i = t + 1; i < w.rows; ++i)
                if (w.a[i][t] != 0) {
                    w.add_row(i, t, -div_nearest(w.a[i][t], w.a[t][t]));
                    if (w.a[i][t] != 0) clean = false;
                }
            for (size_t j = t + 1; j < w.cols; ++j)
                if (w.a[t][j] != 0) {
                    w.add_col(j, t, -div_nearest(w.a[t][j], w.a[t][t]));
                    if (w.a[t][j] != 0) clean = false;
                }
            if (!clean) continue; // smaller remainders exist; re-pick pivot

            // pivot must divide the whole trailing submatrix
            bool divides = true;
            for (size_t i = t + 1; i < w.rows && divides; ++i)
                for (size_t j = t + 1; j < w.cols && divides; ++j)
                    if (w.a[i][j] % w.a[t][t] != 0) {
                        w.add_row(t, i, 1);
                        divides = false;
                    }
            if (divides) break;
        }
        if (w.a[t][t] < 0) w.negate_row(t);
    }
done:
    for (size_t t = 0; t < m; ++t) {
        if (w.a[t][t] == 0) break;
        if (w.a[t][t] < 0) w.negate_row(t);
        out.d.push_back(w.a[t][t]);
    }
    out.U = std::move(w.U);
    out.V = std::move(w.V);
    out.Vinv = std::move(w.Vinv);
    return out;
}

Matrix integer_kernel_basis(const Matrix& A) {
    if (A.cols() == 0) return Matrix(Ring::Z(), A.cols(), 0);
    if (A.rows() == 0) return Matrix::identity(Ring::Z(), A.cols());
    SmithForm s = smith_normal_form(A);
    std::vector<size_t> idx;
    for (size_t j = s.d.size(); j < A.cols(); ++j) idx.push_back(j);
    return s.V.columns(idx);
}

mpz_class det_z(const Matrix& A) {
    if (A.rows() != A.cols()) throw TypeMismatch("det_z on non-square matrix");
    size_t n = A.rows();
    if (n == 0) return 1;
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a[i][j] = A.get(i, j).z();
    mpz_class prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t piv = n;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv == n) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

FgAbelianGroup group_from_divisors(size_t free_gens, const std::vector<mpz_class>& e) {
    FgAbelianGroup g;
    g.rank = free_gens - e.size();
    for (const auto& v : e)
        if (v >= 2) g.torsion.push_back(v);
    return g;
}

} // namespace

FgAbelianGroup quotient_group(const Matrix& N, const Matrix& D) {
    if (N.rows() != D.rows()) throw TypeMismatch("quotient_group: ambient ranks differ");
    if (N.cols() == 0) {
        if (!D.is_zero()) throw SubspaceViolation("quotient_group: D nonzero but N spans 0");
        return FgAbelianGroup{};
    }
    SmithForm s = smith_normal_form(N);
    size_t r = s.d.size();
    Matrix Y = s.U * D;
    Matrix Yq(Ring::Z(), r, D.cols());
    for (size_t j = 0; j < D.cols(); ++j) {
        for (size_t i = 0; i < Y.rows(); ++i) {
            mpz_class v = Y.get(i, j).z();
            if (i < r) {
                if (v % s.d[i] != 0)
                    throw SubspaceViolation("quotient_group: generator outside the numerator lattice");
                Yq.set(i, j, Scalar::integer(v / s.d[i]));
            } else if (v != 0) {
                throw SubspaceViolation("quotient_group: generator outside the numerator lattice");
            }
        }
    }
    SmithForm sq = smith_normal_form(Yq);
    return group_from_divisors(r, sq.d);
}

FgAbelianGroup cohomology_at(const Matrix& d_in, const Matrix& d_out) {
    if (d_in.ring() != d_out.ring()) throw RingMismatch("cohomology_at: rings differ");
    size_t mid = d_out.cols();
    if (d_in.rows() != mid) throw TypeMismatch("cohomology_at: d_in lands in dim " +
                                               std::to_string(d_in.rows()) + ", d_out leaves dim " +
                                               std::to_string(mid));
    if (d_in.cols() > 0 && !(d_out * d_in).is_zero())
        throw NotAComplex("cohomology_at: d_out ∘ d_in != 0");

    if (d_out.ring().is_field()) {
        size_t ker = mid - rank(d_out);
        size_t im = d_in.cols() ? rank(d_in) : 0;
        FgAbelianGroup g;
        g.rank = ker - im;
        return g;
    }

    if (mid == 0) return FgAbelianGroup{};
    // integer case: kernel coordinates via SNF of d_out
    std::vector<size_t> kernel_idx;
    Matrix X(Ring::Z(), 0, 0);
    if (d_out.rows() == 0) {
        Matrix Xin = d_in.cols() ? d_in : Matrix(Ring::Z(), mid, 0);
        return quotient_group(Matrix::identity(Ring::Z(), mid), Xin);
    }
    SmithForm s = smith_normal_form(d_out);
    for (size_t j = s.d.size(); j < mid; ++j) kernel_idx.push_back(j);
    size_t k = kernel_idx.size();
    Matrix Y = d_in.cols() ? s.Vinv * d_in : Matrix(Ring::Z(), mid, 0);
    Matrix Xk(Ring::Z(), k, Y.cols());
    for (size_t j = 0; j < Y.cols(); ++j)
        for (size_t i = 0; i < k; ++i) Xk.set(i, j, Y.get(kernel_idx[i], j));
    SmithForm sq = smith_normal_form(Xk);
    return group_from_divisors(k, sq.d);
}

namespace {

Matrix torsion_columns(const std::vector<mpz_class>& tor) {
    size_t n = tor.size(), cnt = 0;
    for (const auto& t : tor)
        if (t != 0) ++cnt;
    Matrix R(Ring::Z(), n, cnt);
    size_t c = 0;
    for (size_t i = 0; i < n; ++i)
        if (tor[i] != 0) R.set(i, c++, Scalar::integer(tor[i]));
    return R;
}

bool zero_mod(const Matrix& M, const std::vector<mpz_class>& tor) {
    for (size_t i = 0; i < M.rows(); ++i)
        for (size_t j = 0; j < M.cols(); ++j) {
            mpz_class v = M.get(i, j).z();
            if (tor[i] == 0 ? v != 0 : v % tor[i] != 0) return false;
        }
    return true;
}

} // namespace

FgAbelianGroup presented_cohomology_at(const Matrix& d_in, const Matrix& d_out,
                                       const std::vector<mpz_class>& tor_mid,
                                       const std::vector<mpz_class>& tor_next) {
    size_t mid = d_out.cols();
    if (tor_mid.size() != mid || d_in.rows() != mid || tor_next.size() != d_out.rows())
        throw TypeMismatch("presented_cohomology_at: shape mismatch");
    if (mid == 0) return FgAbelianGroup{};

    if (d_in.cols() > 0 && !zero_mod(d_out * d_in, tor_next))
        throw NotAComplex("presented_cohomology_at: d_out ∘ d_in != 0 modulo target relations");
    // the middle relations must map into the next relations
    {
        Matrix scaled(Ring::Z(), d_out.rows(), mid);
        for (size_t j = 0; j < mid; ++j)
            for (size_t i = 0; i < d_out.rows(); ++i)
                scaled.set(i, j, Scalar::integer(tor_mid[j] * d_out.get(i, j).z()));
        if (!zero_mod(scaled, tor_next))
            throw NotAComplex("presented_cohomology_at: differential not defined on the quotient");
    }

    Matrix N;
    if (d_out.rows() == 0) {
        N = Matrix::identity(Ring::Z(), mid);
    } else {
        Matrix K = integer_kernel_basis(d_out.hstack(torsion_columns(tor_next)));
        N = K.rows_slice(0, mid);
    }
    Matrix D = torsion_columns(tor_mid);
    if (d_in.cols() > 0) D = d_in.hstack(D);
    return quotient_group(N, D);
}

} // namespace homcat
