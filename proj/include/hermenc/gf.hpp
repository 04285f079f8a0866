#ifndef HERMENC_GF_HPP
#define HERMENC_GF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace hermenc {

/// Polynomial-basis encoding of an element of GF(q^2), value < q^2.
using elem = std::uint16_t;

/// The field tower GF(q) inside GF(q^2) for q = 2^s, with the generators
/// the code construction needs:
///   epsilon  primitive in GF(q^2) (the residue of x mod the primitive polynomial)
///   gamma    = epsilon^(q+1), primitive in GF(q); the subfield image is
///             {0} u {gamma^j : 0 <= j <= q-2}
///   y0       the smallest element with y0 + y0^q = 1
///
/// Immutable after construction; cheap to copy (tables are shared).
/// All operations are pure and safe for concurrent use.
class Field {
public:
    /// q = 2^s, 1 <= s <= 8. Throws std::invalid_argument outside that range.
    explicit Field(int s);

    int s() const { return s_; }
    int q() const { return q_; }
    int q2() const { return q2_; }
    std::uint32_t modulus() const { return modulus_; }

    elem epsilon() const { return 2; }
    elem gamma() const { return gamma_; }
    elem y0() const { return y0_; }

    elem add(elem a, elem b) const { return static_cast<elem>(a ^ b); }
    elem mul(elem a, elem b) const;
    /// Throws std::domain_error on a = 0: a zero pivot always means a bug upstream.
    elem inv(elem a) const;
    /// a^e with 0^0 = 1; negative e requires a != 0.
    elem pow(elem a, long long e) const;
    /// epsilon^e for any integer e (reduced mod q^2-1).
    elem eps_pow(long long e) const;
    /// Discrete log base epsilon; a != 0.
    int log(elem a) const;

    /// j when a = gamma^j (0 <= j <= q-2), -1 when a = 0, nullopt when a is
    /// not in the subfield image.
    std::optional<int> subfield_index(elem a) const;

    bool in_subfield(elem a) const { return subfield_index(a).has_value(); }

    /// The subfield element used as row label r: 0 for row 0, gamma^(r-1) otherwise.
    elem beta_of_row(int r) const;

private:
    int s_, q_, q2_;
    std::uint32_t modulus_;
    elem gamma_, y0_;
    struct Tables {
        std::vector<elem> alog;      // alog[i] = epsilon^i, i in [0, q^2-2]
        std::vector<int> log;        // log[a], a != 0
        std::vector<int> sub_index;  // -1 zero, -2 not in subfield, else j
    };
    std::shared_ptr<const Tables> t_;
};

/// Deterministic construction for a supported exponent s.
Field build_field(int s);

/// Smallest e with e + e^q = 1; exhaustive search, used by Field and as an
/// independent check.
elem solve_y0(const Field& f);

}  // namespace hermenc

#endif
