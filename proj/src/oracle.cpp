#include "hermenc/oracle.hpp"

#include <stdexcept>
#include <string>

#include "linalg.hpp"

namespace hermenc {

ParityCheckMatrix build_H(const CodeParams& p) {
    const Field& f = p.field;
    auto pts = enumerate_points(f);
    ParityCheckMatrix h;
    h.rows = static_cast<int>(p.basis.size());
    h.cols = p.n;
    h.e.resize(static_cast<std::size_t>(h.rows) * h.cols);
    for (int r = 0; r < h.rows; ++r) {
        auto [a, b] = p.basis[r];
        for (int c = 0; c < h.cols; ++c) {
            h.e[static_cast<std::size_t>(r) * h.cols + c] =
                f.mul(f.pow(pts[c].x, a), f.pow(pts[c].y, b));
        }
    }
    return h;
}

std::vector<elem> apply_H(const CodeParams& p, const ParityCheckMatrix& h, const CodeArray& r) {
    const Field& f = p.field;
    const auto& flat = r.flat();
    if (static_cast<int>(flat.size()) != h.cols) {
        throw std::invalid_argument("apply_H: array size does not match H");
    }
    std::vector<elem> s(h.rows, 0);
    for (int row = 0; row < h.rows; ++row) {
        elem acc = 0;
        for (int c = 0; c < h.cols; ++c) acc = f.add(acc, f.mul(h.at(row, c), flat[c]));
        s[row] = acc;
    }
    return s;
}

namespace {

// Flat indices of the parity (non-information) positions, ascending.
std::vector<int> parity_indices(const CodeParams& p) {
    const int q = p.field.q(), q2 = p.field.q2();
    std::vector<int> idx;
    idx.reserve(p.basis.size());
    for (int i = 0; i < q; ++i)
        for (int j = p.info_len[i]; j < q2; ++j) idx.push_back(i * q2 + j);
    return idx;
}

}  // namespace

bool verify_information_set(const CodeParams& p) {
    ParityCheckMatrix h = build_H(p);
    auto idx = parity_indices(p);
    if (idx.size() != p.basis.size()) return false;
    detail::Mat sub(h.rows, static_cast<int>(idx.size()));
    for (int r = 0; r < h.rows; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c) sub.at(r, static_cast<int>(c)) = h.at(r, idx[c]);
    return detail::rank(p.field, sub) == h.rows;
}

CodeArray complete_systematic(const CodeParams& p, const std::vector<elem>& info, PivotOrder order) {
    const Field& f = p.field;
    if (static_cast<int>(info.size()) != p.k) {
        throw std::invalid_argument("complete_systematic: expected " + std::to_string(p.k) +
                                    " information symbols");
    }
    ParityCheckMatrix h = build_H(p);
    auto idx = parity_indices(p);

    CodeArray c(f);
    {
        std::size_t t = 0;
        for (int i = 0; i < f.q(); ++i)
            for (int j = 0; j < p.info_len[i]; ++j) c.at(i, j) = info[t++];
    }

    // H_parity * u = H_info * c_info (char 2): square system in the unknowns.
    detail::Mat m(h.rows, static_cast<int>(idx.size()));
    for (int r = 0; r < h.rows; ++r)
        for (std::size_t col = 0; col < idx.size(); ++col)
            m.at(r, static_cast<int>(col)) = h.at(r, idx[col]);

    detail::Mat rhs(h.rows, 1);
    {
        auto s = apply_H(p, h, c);  // parity slots are still zero here
        for (int r = 0; r < h.rows; ++r) rhs.at(r, 0) = s[r];
    }

    detail::Mat u = detail::solve_square(
        f, m, rhs, order == PivotOrder::FirstNonzero ? detail::Pivot::FirstNonzero : detail::Pivot::LastNonzero);
    for (std::size_t t = 0; t < idx.size(); ++t) {
        c.flat()[idx[t]] = u.at(static_cast<int>(t), 0);
    }
    return c;
}

}  // namespace hermenc
