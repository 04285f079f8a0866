#ifndef HERMENC_TRANSFORMS_HPP
#define HERMENC_TRANSFORMS_HPP

#include <vector>

#include "hermenc/gf.hpp"

namespace hermenc {

enum class MatrixRole { A, Aprime, Ainv, AprimeInv, D };

/// A q x q matrix over GF(q^2) acting on codeword columns.
struct ColumnMatrix {
    MatrixRole role;
    int n = 0;
    std::vector<elem> e;  // row-major

    ColumnMatrix() : role(MatrixRole::A) {}
    ColumnMatrix(MatrixRole r, int size) : role(r), n(size), e(static_cast<std::size_t>(size) * size, 0) {}
    elem& at(int r, int c) { return e[static_cast<std::size_t>(r) * n + c]; }
    elem at(int r, int c) const { return e[static_cast<std::size_t>(r) * n + c]; }
};

/// Column transform: entry (b, c) = (y0 + beta_c)^b, beta_c the row-c label.
ColumnMatrix build_A(const Field& f);
/// Last-column transform: column 0 is e0, entry (b, j+1) = gamma^(jb).
ColumnMatrix build_Aprime(const Field& f);
/// Closed-form inverses; the constructor verifies M * M^-1 = I and throws
/// std::logic_error on failure.
ColumnMatrix build_A_inverse(const Field& f);
ColumnMatrix build_Aprime_inverse(const Field& f);

std::vector<elem> apply(const Field& f, const ColumnMatrix& m, const std::vector<elem>& v);
ColumnMatrix matmul(const Field& f, const ColumnMatrix& a, const ColumnMatrix& b);

/// True iff the l x l submatrix of A on rows q-l..q-1, columns 0..l-1 and the
/// one of A' on rows 0..l-1, columns q-l..q-1 are both nonsingular.
bool check_corner_submatrices(const Field& f, int l);

/// D(l) has block form [[I_l, 0], [P, 0]] with P of shape (q-l) x l chosen so
/// the top q-l rows of M^-1 D(l) vanish; its columns are then codewords of the
/// code whose parity checks are the first q-l rows of M^-1. Valid for
/// 0 <= l <= q-1; the l = q column case is plain inversion and never builds D.
ColumnMatrix build_D(const Field& f, MatrixRole which, int l);

/// left_full = (x, solved y), right_full = (v, solved u); satisfies
/// M * left_full = right_full entrywise.
struct MixedSolveResult {
    std::vector<elem> left_full;
    std::vector<elem> right_full;
};

/// Per-field cache of A, A', their inverses and the D(l) families.
class TransformSet {
public:
    explicit TransformSet(const Field& f);

    const Field& field() const { return f_; }
    const ColumnMatrix& A() const { return A_; }
    const ColumnMatrix& Aprime() const { return Ap_; }
    const ColumnMatrix& A_inverse() const { return Ainv_; }
    const ColumnMatrix& Aprime_inverse() const { return ApInv_; }
    const ColumnMatrix& forward(MatrixRole which) const;
    const ColumnMatrix& inverse(MatrixRole which) const;
    const ColumnMatrix& D(MatrixRole which, int l) const;

    /// Solves M (x, y)^T = (v, u)^T for the trailing y (length l) and u
    /// (length q-l), given x (length q-l) and v (length l), through the
    /// cached D matrices. l = 0 and l = q take the degenerate direct paths.
    MixedSolveResult solve_mixed(MatrixRole which, int l, const std::vector<elem>& x,
                                 const std::vector<elem>& v) const;

private:
    Field f_;
    ColumnMatrix A_, Ap_, Ainv_, ApInv_;
    std::vector<ColumnMatrix> D_A_, D_Ap_;  // index l = 0..q-1
};

/// Convenience wrapper building a throwaway TransformSet.
MixedSolveResult solve_mixed(const Field& f, MatrixRole which, int l,
                             const std::vector<elem>& x, const std::vector<elem>& v);

}  // namespace hermenc

#endif
