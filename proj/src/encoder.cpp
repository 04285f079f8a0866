#include "hermenc/encoder.hpp"

#include <stdexcept>
#include <string>

#include "hermenc/row_code.hpp"
#include "hermenc/transforms.hpp"

namespace hermenc {

namespace {

void check_shape(const Field& f, const CodeArray& r, const char* who) {
    if (r.rows() != f.q() || r.cols() != f.q2()) {
        throw std::invalid_argument(std::string(who) + ": array must be q x q^2");
    }
}

std::vector<elem> column_of(const CodeArray& r, int j) {
    std::vector<elem> col(r.rows());
    for (int i = 0; i < r.rows(); ++i) col[i] = r.at(i, j);
    return col;
}

void set_column(CodeArray& r, int j, const std::vector<elem>& col) {
    for (int i = 0; i < r.rows(); ++i) r.at(i, j) = col[i];
}

}  // namespace

bool SyndromeTable::all_zero() const {
    for (elem v : values)
        if (v != 0) return false;
    return true;
}

std::vector<std::size_t> SyndromeTable::nonzero() const {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < values.size(); ++i)
        if (values[i] != 0) idx.push_back(i);
    return idx;
}

SyndromeTable syndromes_at(const Field& f, const CodeArray& r,
                           const std::vector<std::pair<int, int>>& monomials) {
    check_shape(f, r, "syndromes_at");
    auto pts = enumerate_points(f);
    SyndromeTable t;
    t.keys = monomials;
    t.values.reserve(monomials.size());
    for (auto [a, b] : monomials) {
        elem acc = 0;
        std::size_t idx = 0;
        for (int row = 0; row < f.q(); ++row) {
            for (int col = 0; col < f.q2(); ++col, ++idx) {
                elem rv = r.at(row, col);
                if (rv == 0) continue;
                const RationalPoint& p = pts[idx];
                acc = f.add(acc, f.mul(rv, f.mul(f.pow(p.x, a), f.pow(p.y, b))));
            }
        }
        t.values.push_back(acc);
    }
    return t;
}

SyndromeTable syndromes_direct(const CodeParams& p, const CodeArray& r) {
    return syndromes_at(p.field, r, p.basis);
}

SyndromeTable syndromes_fast(const CodeParams& p, const CodeArray& r) {
    const Field& f = p.field;
    check_shape(f, r, "syndromes_fast");
    const int q = f.q(), q2 = f.q2();

    ColumnMatrix A = build_A(f), Ap = build_Aprime(f);
    CodeArray rt(f);
    for (int j = 0; j < q2; ++j) {
        set_column(rt, j, apply(f, j == q2 - 1 ? Ap : A, column_of(r, j)));
    }

    SyndromeTable t;
    t.keys = p.basis;
    t.values.resize(p.basis.size());
    std::size_t pos = 0;
    for (int b = 0; b < q; ++b) {
        ExtendedCyclicCode e = make_Ei(p, b);
        std::vector<elem> row(rt.flat().begin() + static_cast<std::size_t>(b) * q2,
                              rt.flat().begin() + static_cast<std::size_t>(b + 1) * q2);
        std::vector<elem> syn = row_syndromes(e, row);
        for (int a = 0; a <= p.a_hat[b]; ++a) t.values[pos++] = syn[a];
    }
    // keys are grouped by b with a ascending, matching the fill order above
    return t;
}

bool is_codeword(const CodeParams& p, const CodeArray& r) {
    return syndromes_fast(p, r).all_zero();
}

EncodeResult encode(const CodeParams& p, const std::vector<elem>& info) {
    const Field& f = p.field;
    const int q = f.q(), q2 = f.q2();
    if (static_cast<int>(info.size()) != p.k) {
        throw std::invalid_argument("encode: expected " + std::to_string(p.k) +
                                    " information symbols, got " + std::to_string(info.size()));
    }

    // Information symbols land in d row-major along the staircase.
    CodeArray d(f);
    {
        std::size_t t = 0;
        for (int i = 0; i < q; ++i)
            for (int j = 0; j < p.info_len[i]; ++j) d.at(i, j) = info[t++];
    }

    TransformSet ts(f);
    std::vector<RowEncoderStream> streams;
    streams.reserve(q);
    for (int i = 0; i < q; ++i) streams.emplace_back(make_Ei(p, i));

    EncodeResult res{CodeArray(f), CodeArray(f)};
    for (int j = 0; j < q2; ++j) {
        const MatrixRole role = (j == q2 - 1) ? MatrixRole::Aprime : MatrixRole::A;
        const int l = q - p.b_hat[j];  // rows of r~ already determined by row encoders

        std::vector<elem> v(l);
        for (int i = 0; i < l; ++i) v[i] = streams[i].step();

        std::vector<elem> x(p.b_hat[j]);
        for (int i = 0; i < p.b_hat[j]; ++i) x[i] = d.at(i, j);

        MixedSolveResult sol = ts.solve_mixed(role, l, x, v);
        set_column(res.code, j, sol.left_full);
        set_column(res.rtilde, j, sol.right_full);

        // Rows still inside their information prefix consume the solved value.
        for (int i = l; i < q; ++i) {
            streams[i].push_info(sol.right_full[i]);
            streams[i].step();
        }
    }
    return res;
}

UniformParams make_uniform(const Field& f, int a_hat) {
    if (a_hat < 0 || a_hat > f.q2() - 2) {
        throw std::invalid_argument("uniform code needs 0 <= a_hat <= q^2 - 2");
    }
    UniformParams u{.field = f};
    u.a_hat = a_hat;
    u.row_dim = f.q2() - a_hat - 1;
    u.dim = u.row_dim * f.q();
    return u;
}

CodeArray encode_uniform(const UniformParams& u, const std::vector<elem>& d) {
    const Field& f = u.field;
    const int q = f.q(), q2 = f.q2();
    if (static_cast<int>(d.size()) != u.dim) {
        throw std::invalid_argument("encode_uniform: expected q x (q^2 - a_hat - 1) symbols");
    }

    // Columns of the data block through A.
    CodeArray rhat(f);
    ColumnMatrix A = build_A(f);
    for (int j = 0; j < u.row_dim; ++j) {
        std::vector<elem> col(q);
        for (int i = 0; i < q; ++i) col[i] = d[static_cast<std::size_t>(i) * u.row_dim + j];
        set_column(rhat, j, apply(f, A, col));
    }

    // Each row independently into its row code (same redundancy, shifted roots).
    for (int i = 0; i < q; ++i) {
        ExtendedCyclicCode e = make_row_code(f, i, u.a_hat);
        std::vector<elem> inf(e.dim);
        for (int j = 0; j < e.dim; ++j) inf[j] = rhat.at(i, j);
        std::vector<elem> word = encode_row(e, inf);
        for (int j = 0; j < q2; ++j) rhat.at(i, j) = word[j];
    }

    // Back through the inverse column transforms.
    CodeArray c(f);
    ColumnMatrix Ainv = build_A_inverse(f), ApInv = build_Aprime_inverse(f);
    for (int j = 0; j < q2; ++j) {
        set_column(c, j, apply(f, j == q2 - 1 ? ApInv : Ainv, column_of(rhat, j)));
    }
    return c;
}

}  // namespace hermenc
