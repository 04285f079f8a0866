#include "hermenc/gf.hpp"

#include <stdexcept>
#include <string>

namespace hermenc {

namespace {

// Primitive polynomials over GF(2), one per supported degree 2s.
// Fixed so that every build is bit-reproducible.
constexpr std::uint32_t kPrimPoly[9] = {
    0,
    0x7,      // deg 2:  x^2 + x + 1
    0x13,     // deg 4:  x^4 + x + 1
    0x43,     // deg 6:  x^6 + x + 1
    0x11d,    // deg 8:  x^8 + x^4 + x^3 + x^2 + 1
    0x409,    // deg 10: x^10 + x^3 + 1
    0x1053,   // deg 12: x^12 + x^6 + x^4 + x + 1
    0x4443,   // deg 14: x^14 + x^10 + x^6 + x + 1
    0x1100b,  // deg 16: x^16 + x^12 + x^3 + x + 1
};

}  // namespace

Field::Field(int s) {
    if (s < 1 || s > 8) {
        throw std::invalid_argument("field exponent s must be in [1, 8], got " +
                                    std::to_string(s));
    }
    s_ = s;
    q_ = 1 << s;
    q2_ = 1 << (2 * s);
    modulus_ = kPrimPoly[s];

    auto tables = std::make_shared<Tables>();
    tables->alog.assign(q2_ - 1, 0);
    tables->log.assign(q2_, -1);

    std::uint32_t b = 1;
    for (int i = 0; i < q2_ - 1; ++i) {
        if (tables->log[b] != -1) {
            throw std::logic_error("primitive polynomial table is corrupt (x not primitive)");
        }
        tables->alog[i] = static_cast<elem>(b);
        tables->log[b] = i;
        b <<= 1;
        if (b & static_cast<std::uint32_t>(q2_)) b ^= modulus_;
    }
    if (b != 1) {
        throw std::logic_error("primitive polynomial table is corrupt (order mismatch)");
    }

    tables->sub_index.assign(q2_, -2);
    tables->sub_index[0] = -1;
    for (int j = 0; j <= q_ - 2; ++j) {
        tables->sub_index[tables->alog[static_cast<std::size_t>(j) * (q_ + 1)]] = j;
    }

    t_ = tables;
    gamma_ = t_->alog[static_cast<std::size_t>(q_ + 1) % (q2_ - 1)];

    // y0 + y0^q = 1 always has solutions; take the smallest encoding.
    y0_ = 0;
    bool found = false;
    for (int e = 0; e < q2_ && !found; ++e) {
        elem v = static_cast<elem>(e);
        if (add(v, pow(v, q_)) == 1) {
            y0_ = v;
            found = true;
        }
    }
    if (!found) {
        throw std::logic_error("no trace-one element found; field tables corrupt");
    }
}

elem Field::mul(elem a, elem b) const {
    if (a == 0 || b == 0) return 0;
    int sum = t_->log[a] + t_->log[b];
    if (sum >= q2_ - 1) sum -= q2_ - 1;
    return t_->alog[sum];
}

elem Field::inv(elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero in GF(q^2)");
    int e = (q2_ - 1 - t_->log[a]) % (q2_ - 1);
    return t_->alog[e];
}

elem Field::pow(elem a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    long long ord = q2_ - 1;
    long long r = (static_cast<long long>(t_->log[a]) * (e % ord)) % ord;
    if (r < 0) r += ord;
    return t_->alog[r];
}

elem Field::eps_pow(long long e) const {
    long long ord = q2_ - 1;
    long long r = e % ord;
    if (r < 0) r += ord;
    return t_->alog[r];
}

int Field::log(elem a) const {
    if (a == 0) throw std::domain_error("log of zero");
    return t_->log[a];
}

std::optional<int> Field::subfield_index(elem a) const {
    int v = t_->sub_index[a];
    if (v == -2) return std::nullopt;
    return v;
}

elem Field::beta_of_row(int r) const {
    if (r == 0) return 0;
    return t_->alog[static_cast<std::size_t>(r - 1) * (q_ + 1)];
}

Field build_field(int s) { return Field(s); }

elem solve_y0(const Field& f) {
    for (int e = 0; e < f.q2(); ++e) {
        elem v = static_cast<elem>(e);
        if (f.add(v, f.pow(v, f.q())) == 1) return v;
    }
    throw std::logic_error("trace equation y + y^q = 1 has no solution; tables corrupt");
}

}  // namespace hermenc
