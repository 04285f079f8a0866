#include "hermenc/row_code.hpp"

#include <stdexcept>

#include "linalg.hpp"

namespace hermenc {

namespace {

// Horner evaluation of the cyclic part c_0..c_{len-2} at xi.
elem eval_cyclic(const Field& f, const std::vector<elem>& c, int len, elem xi) {
    elem acc = 0;
    for (int t = len - 2; t >= 0; --t) acc = f.add(f.mul(acc, xi), c[t]);
    return acc;
}

}  // namespace

ExtendedCyclicCode make_row_code(const Field& f, int row_index, int a_hat) {
    if (a_hat < 0 || a_hat > f.q2() - 2) {
        throw std::invalid_argument("row code redundancy a_hat out of range");
    }
    ExtendedCyclicCode e{.field = f};
    e.length = f.q2();
    e.row_index = row_index;
    e.dim = f.q2() - a_hat - 1;
    e.roots.reserve(a_hat + 1);
    for (int a = 0; a <= a_hat; ++a) {
        e.roots.push_back(f.eps_pow(static_cast<long long>(a) + static_cast<long long>(row_index) * (f.q() + 1)));
    }
    return e;
}

ExtendedCyclicCode make_Ei(const CodeParams& p, int i) {
    return make_row_code(p.field, i, p.a_hat[i]);
}

std::vector<elem> encode_row(const ExtendedCyclicCode& e, const std::vector<elem>& info) {
    const Field& f = e.field;
    if (static_cast<int>(info.size()) != e.dim) {
        throw std::invalid_argument("encode_row: info length must equal code dimension");
    }
    const int len = e.length;
    const int nroots = static_cast<int>(e.roots.size());
    const int ncyc = nroots - 1;  // parity symbols in the cyclic part

    std::vector<elem> c(len, 0);
    for (int t = 0; t < e.dim; ++t) c[t] = info[t];

    if (ncyc > 0) {
        // Positions dim..len-2 must cancel the info evaluations at the
        // non-distinguished roots. The system matrix is a scaled Vandermonde
        // in distinct nonzero nodes, hence nonsingular.
        detail::Mat M(ncyc, ncyc), rhs(ncyc, 1);
        for (int a = 1; a <= ncyc; ++a) {
            long long le = f.log(e.roots[a]);
            for (int t = 0; t < ncyc; ++t) {
                M.at(a - 1, t) = f.eps_pow(le * (e.dim + t));
            }
            rhs.at(a - 1, 0) = eval_cyclic(f, c, len, e.roots[a]);
        }
        detail::Mat p = detail::solve_square(f, M, rhs);
        for (int t = 0; t < ncyc; ++t) c[e.dim + t] = p.at(t, 0);
    }

    c[len - 1] = eval_cyclic(f, c, len, e.roots[0]);
    return c;
}

std::vector<elem> row_syndromes(const ExtendedCyclicCode& e, const std::vector<elem>& c) {
    const Field& f = e.field;
    if (static_cast<int>(c.size()) != e.length) {
        throw std::invalid_argument("row_syndromes: word length must be q^2");
    }
    std::vector<elem> out(e.roots.size(), 0);
    out[0] = f.add(c[e.length - 1], eval_cyclic(f, c, e.length, e.roots[0]));
    for (std::size_t a = 1; a < e.roots.size(); ++a) {
        out[a] = eval_cyclic(f, c, e.length, e.roots[a]);
    }
    return out;
}

RowEncoderStream::RowEncoderStream(ExtendedCyclicCode e) : e_(std::move(e)) {
    info_.reserve(e_.dim);
}

void RowEncoderStream::push_info(elem v) {
    if (static_cast<int>(info_.size()) >= e_.dim) {
        throw std::logic_error("row encoder stream: info prefix already complete");
    }
    info_.push_back(v);
}

elem RowEncoderStream::step() {
    if (pos_ >= e_.length) {
        throw std::logic_error("row encoder stream: stepped past the codeword length");
    }
    if (pos_ < e_.dim) {
        if (pos_ >= static_cast<int>(info_.size())) {
            throw std::logic_error("row encoder stream: stepping ahead of pushed info");
        }
        return info_[pos_++];
    }
    if (!computed_) {
        word_ = encode_row(e_, info_);
        computed_ = true;
    }
    return word_[pos_++];
}

}  // namespace hermenc
