#ifndef HERMENC_ORACLE_HPP
#define HERMENC_ORACLE_HPP

#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace hermenc {

/// Dense |basis| x n parity-check matrix: row (a, b) holds x^a y^b evaluated
/// at each point, columns in enumerate_points order. Ground truth for every
/// structured path in the library; deliberately brute force.
struct ParityCheckMatrix {
    int rows = 0, cols = 0;
    std::vector<elem> e;
    elem at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

ParityCheckMatrix build_H(const CodeParams& p);

std::vector<elem> apply_H(const CodeParams& p, const ParityCheckMatrix& h, const CodeArray& r);

/// True iff the complement of the information positions indexes a full-rank
/// square submatrix of H, i.e. arbitrary information symbols extend uniquely.
bool verify_information_set(const CodeParams& p);

enum class PivotOrder { FirstNonzero, LastNonzero };

/// The unique codeword agreeing with info on the information positions, by
/// dense elimination. The pivot order knob only exercises uniqueness.
CodeArray complete_systematic(const CodeParams& p, const std::vector<elem>& info,
                              PivotOrder order = PivotOrder::FirstNonzero);

}  // namespace hermenc

#endif
