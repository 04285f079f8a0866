#include "hermenc/code.hpp"

#include <stdexcept>
#include <string>

namespace hermenc {

std::vector<RationalPoint> enumerate_points(const Field& f) {
    const int q = f.q(), q2 = f.q2();
    std::vector<RationalPoint> pts;
    pts.reserve(static_cast<std::size_t>(q) * q2);
    for (int r = 0; r < q; ++r) {
        elem beta = f.beta_of_row(r);
        for (int c = 0; c < q2; ++c) {
            elem alpha = (c == q2 - 1) ? 0 : f.eps_pow(c);
            // P = (alpha, alpha^(q+1)(y0 + beta) + [alpha = 0] beta)
            elem y = f.mul(f.pow(alpha, q + 1), f.add(f.y0(), beta));
            if (alpha == 0) y = f.add(y, beta);
            RationalPoint p{alpha, beta, alpha, y};
            if (f.pow(p.x, q + 1) != f.add(f.pow(p.y, q), p.y)) {
                throw std::logic_error("generated point violates the curve equation");
            }
            pts.push_back(p);
        }
    }
    return pts;
}

CodeParams make_code(const Field& f, int m) {
    const int q = f.q(), q2 = f.q2();
    const int n = q * q2;
    const int lo = (q - 1) * (q + 1);
    const int hi = n - q - 1;
    if (m < lo || m > hi) {
        throw std::invalid_argument("m out of range: need " + std::to_string(lo) +
                                    " <= m <= " + std::to_string(hi) + ", got " +
                                    std::to_string(m));
    }

    CodeParams p{.field = f};
    p.m = m;
    p.n = n;
    p.g = q * (q - 1) / 2;

    p.a_hat.resize(q);
    for (int b = 0; b < q; ++b) {
        p.a_hat[b] = (m - b * (q + 1)) / q;  // >= 0 for m >= (q-1)(q+1)
        for (int a = 0; a <= p.a_hat[b]; ++a) p.basis.emplace_back(a, b);
    }
    // reorder to (a, b) grouped by b ascending, a ascending -- already so.

    p.info_len.resize(q);
    for (int i = 0; i < q; ++i) p.info_len[i] = q2 - p.a_hat[q - 1 - i] - 1;

    p.b_hat.assign(q2, 0);
    for (int j = 0; j < q2; ++j) {
        int cnt = 0;
        for (int i = 0; i < q; ++i)
            if (p.info_len[i] > j) ++cnt;
        p.b_hat[j] = cnt;
    }

    p.k = n - static_cast<int>(p.basis.size());

    const int dim_bound = n - p.g - q;
    if (p.k <= 0 || p.k > dim_bound) {
        throw std::invalid_argument("dimension restriction violated: need 0 < k <= " +
                                    std::to_string(dim_bound) + " (= q^3 - g - q), got k = " +
                                    std::to_string(p.k));
    }
    return p;
}

std::vector<std::pair<int, int>> info_positions(const CodeParams& p) {
    std::vector<std::pair<int, int>> pos;
    pos.reserve(p.k);
    for (int i = 0; i < p.field.q(); ++i)
        for (int j = 0; j < p.info_len[i]; ++j) pos.emplace_back(i, j);
    return pos;
}

}  // namespace hermenc
