#include "hermenc/transforms.hpp"

#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace hermenc {

namespace {

bool is_identity(const Field& f, const ColumnMatrix& m) {
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            if (m.at(r, c) != (r == c ? 1 : 0)) return false;
    (void)f;
    return true;
}

}  // namespace

ColumnMatrix build_A(const Field& f) {
    const int q = f.q();
    ColumnMatrix m(MatrixRole::A, q);
    for (int c = 0; c < q; ++c) {
        elem z = f.add(f.y0(), f.beta_of_row(c));
        for (int b = 0; b < q; ++b) m.at(b, c) = f.pow(z, b);
    }
    return m;
}

ColumnMatrix build_Aprime(const Field& f) {
    const int q = f.q();
    ColumnMatrix m(MatrixRole::Aprime, q);
    m.at(0, 0) = 1;
    for (int j = 0; j <= q - 2; ++j) {
        elem g = f.pow(f.gamma(), j);
        for (int b = 0; b < q; ++b) m.at(b, j + 1) = f.pow(g, b);
    }
    return m;
}

ColumnMatrix build_A_inverse(const Field& f) {
    const int q = f.q();
    ColumnMatrix m(MatrixRole::Ainv, q);
    for (int r = 0; r < q; ++r) {
        elem z = f.add(f.y0(), f.beta_of_row(r));
        // row = (1 + z^(q-1), z^(q-2), ..., z^0); char 2 turns the 1- into 1+.
        m.at(r, 0) = f.add(1, f.pow(z, q - 1));
        for (int c = 1; c < q; ++c) m.at(r, c) = f.pow(z, q - 1 - c);
    }
    if (!is_identity(f, matmul(f, m, build_A(f)))) {
        throw std::logic_error("closed-form A inverse failed the identity check");
    }
    return m;
}

ColumnMatrix build_Aprime_inverse(const Field& f) {
    const int q = f.q();
    ColumnMatrix m(MatrixRole::AprimeInv, q);
    m.at(0, 0) = 1;
    m.at(0, q - 1) = f.add(m.at(0, q - 1), 1);
    for (int t = 0; t <= q - 2; ++t) {
        elem g = f.pow(f.gamma(), t);
        for (int c = 1; c < q; ++c) m.at(t + 1, c) = f.pow(g, q - 1 - c);
    }
    if (!is_identity(f, matmul(f, m, build_Aprime(f)))) {
        throw std::logic_error("closed-form A' inverse failed the identity check");
    }
    return m;
}

std::vector<elem> apply(const Field& f, const ColumnMatrix& m, const std::vector<elem>& v) {
    if (static_cast<int>(v.size()) != m.n) throw std::invalid_argument("apply: vector length mismatch");
    std::vector<elem> out(m.n, 0);
    for (int r = 0; r < m.n; ++r) {
        elem acc = 0;
        for (int c = 0; c < m.n; ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

ColumnMatrix matmul(const Field& f, const ColumnMatrix& a, const ColumnMatrix& b) {
    ColumnMatrix out(a.role, a.n);
    for (int r = 0; r < a.n; ++r)
        for (int c = 0; c < a.n; ++c) {
            elem acc = 0;
            for (int t = 0; t < a.n; ++t) acc = f.add(acc, f.mul(a.at(r, t), b.at(t, c)));
            out.at(r, c) = acc;
        }
    return out;
}

bool check_corner_submatrices(const Field& f, int l) {
    const int q = f.q();
    if (l < 1 || l > q) throw std::invalid_argument("corner size l must be in [1, q]");
    ColumnMatrix A = build_A(f), Ap = build_Aprime(f);
    detail::Mat ca(l, l), cap(l, l);
    for (int r = 0; r < l; ++r)
        for (int c = 0; c < l; ++c) {
            ca.at(r, c) = A.at(q - l + r, c);
            cap.at(r, c) = Ap.at(r, q - l + c);
        }
    return detail::rank(f, ca) == l && detail::rank(f, cap) == l;
}

ColumnMatrix build_D(const Field& f, MatrixRole which, int l) {
    const int q = f.q();
    if (which != MatrixRole::A && which != MatrixRole::Aprime) {
        throw std::invalid_argument("build_D: role must be A or Aprime");
    }
    if (l < 0 || l >= q) {
        throw std::invalid_argument("build_D: l must be in [0, q-1]; fully known columns invert directly");
    }
    ColumnMatrix d(MatrixRole::D, q);
    if (l == 0) return d;  // all-zero

    ColumnMatrix Binv = (which == MatrixRole::A) ? build_A_inverse(f) : build_Aprime_inverse(f);
    // Top q-l rows of Binv, split at column l: [B11 | B12]. P solves
    // B12 P = B11 so that the top q-l rows of Binv * D vanish (char 2).
    const int t = q - l;
    detail::Mat B12(t, t), B11(t, l);
    for (int r = 0; r < t; ++r) {
        for (int c = 0; c < t; ++c) B12.at(r, c) = Binv.at(r, l + c);
        for (int c = 0; c < l; ++c) B11.at(r, c) = Binv.at(r, c);
    }
    detail::Mat P = detail::solve_square(f, B12, B11);

    for (int i = 0; i < l; ++i) d.at(i, i) = 1;
    for (int r = 0; r < t; ++r)
        for (int c = 0; c < l; ++c) d.at(l + r, c) = P.at(r, c);
    return d;
}

TransformSet::TransformSet(const Field& f)
    : f_(f),
      A_(build_A(f)),
      Ap_(build_Aprime(f)),
      Ainv_(build_A_inverse(f)),
      ApInv_(build_Aprime_inverse(f)) {
    for (int l = 0; l < f.q(); ++l) {
        D_A_.push_back(build_D(f, MatrixRole::A, l));
        D_Ap_.push_back(build_D(f, MatrixRole::Aprime, l));
    }
}

const ColumnMatrix& TransformSet::forward(MatrixRole which) const {
    if (which == MatrixRole::A) return A_;
    if (which == MatrixRole::Aprime) return Ap_;
    throw std::invalid_argument("forward: role must be A or Aprime");
}

const ColumnMatrix& TransformSet::inverse(MatrixRole which) const {
    if (which == MatrixRole::A) return Ainv_;
    if (which == MatrixRole::Aprime) return ApInv_;
    throw std::invalid_argument("inverse: role must be A or Aprime");
}

const ColumnMatrix& TransformSet::D(MatrixRole which, int l) const {
    const auto& fam = (which == MatrixRole::A) ? D_A_ : D_Ap_;
    return fam.at(l);
}

MixedSolveResult TransformSet::solve_mixed(MatrixRole which, int l, const std::vector<elem>& x,
                                           const std::vector<elem>& v) const {
    const int q = f_.q();
    if (l < 0 || l > q) throw std::invalid_argument("solve_mixed: l out of range");
    if (static_cast<int>(x.size()) != q - l || static_cast<int>(v.size()) != l) {
        throw std::invalid_argument("solve_mixed: expected |x| = q-l and |v| = l");
    }
    const ColumnMatrix& M = forward(which);
    MixedSolveResult res;

    if (l == 0) {
        res.left_full = x;
        res.right_full = apply(f_, M, x);
        return res;
    }
    if (l == q) {
        res.left_full = apply(f_, inverse(which), v);
        res.right_full = v;
        return res;
    }

    std::vector<elem> xz(x);
    xz.resize(q, 0);
    std::vector<elem> b = apply(f_, M, xz);

    std::vector<elem> bhat(q, 0);
    for (int i = 0; i < l; ++i) bhat[i] = f_.add(v[i], b[i]);

    std::vector<elem> btilde = apply(f_, D(which, l), bhat);

    std::vector<elem> corr = apply(f_, inverse(which), btilde);
    res.left_full.resize(q);
    for (int i = 0; i < q; ++i) res.left_full[i] = f_.add(xz[i], corr[i]);

    res.right_full.resize(q);
    for (int i = 0; i < q; ++i) res.right_full[i] = f_.add(btilde[i], b[i]);
    return res;
}

MixedSolveResult solve_mixed(const Field& f, MatrixRole which, int l, const std::vector<elem>& x,
                             const std::vector<elem>& v) {
    return TransformSet(f).solve_mixed(which, l, x, v);
}

}  // namespace hermenc
