#ifndef HERMENC_ENCODER_HPP
#define HERMENC_ENCODER_HPP

#include <utility>
#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace hermenc {

/// Syndrome values keyed by monomial exponents, in basis order.
struct SyndromeTable {
    std::vector<std::pair<int, int>> keys;  // (a, b)
    std::vector<elem> values;

    bool all_zero() const;
    /// Entries with nonzero value, for diagnostics.
    std::vector<std::size_t> nonzero() const;
};

/// Reference path: evaluates each basis monomial at every rational point.
SyndromeTable syndromes_direct(const CodeParams& p, const CodeArray& r);

/// Same, for an arbitrary monomial list (used by the uniform-case check).
SyndromeTable syndromes_at(const Field& f, const CodeArray& r,
                           const std::vector<std::pair<int, int>>& monomials);

/// Fast path: per-column transform r~_j = A_j r_j, then one root evaluation
/// per monomial on the rows of r~. Exactly equal to syndromes_direct.
SyndromeTable syndromes_fast(const CodeParams& p, const CodeArray& r);

bool is_codeword(const CodeParams& p, const CodeArray& r);

struct EncodeResult {
    CodeArray code;
    CodeArray rtilde;  // row i is a codeword of the row code E_i
};

/// Systematic encode of k information symbols placed row-major along the
/// staircase of information positions. The output agrees with info at every
/// information position and has an all-zero syndrome table.
EncodeResult encode(const CodeParams& p, const std::vector<elem>& info);

/// The warm-up code family with one redundancy bound shared by all rows:
/// syndromes vanish for all (a, b) with a <= a_hat, b <= q-1.
struct UniformParams {
    Field field;
    int a_hat = 0;
    int row_dim = 0;  // q^2 - a_hat - 1
    int dim = 0;      // row_dim * q
};

UniformParams make_uniform(const Field& f, int a_hat);

/// Whole-array procedure: column transform of the data block, independent
/// systematic row encodes, inverse column transforms. d is row-major
/// q x row_dim.
CodeArray encode_uniform(const UniformParams& u, const std::vector<elem>& d);

}  // namespace hermenc

#endif
