#ifndef HERMENC_ROW_CODE_HPP
#define HERMENC_ROW_CODE_HPP

#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace hermenc {

/// Length-q^2 extended cyclic code: the cyclic part (positions 0..q^2-2)
/// vanishes as a polynomial at every root except the distinguished roots[0],
/// and the extra position q^2-1 checks roots[0] itself. Positions 0..dim-1
/// are systematic, positions dim..q^2-1 carry parity, the extended check last.
struct ExtendedCyclicCode {
    Field field;
    int length = 0;     // q^2
    int row_index = 0;  // i
    int dim = 0;        // q^2 - a_hat - 1
    std::vector<elem> roots;  // epsilon^(a + i(q+1)), a = 0..a_hat
};

/// Root family for row i: a_hat + 1 consecutive epsilon powers offset by i(q+1).
ExtendedCyclicCode make_row_code(const Field& f, int row_index, int a_hat);
ExtendedCyclicCode make_Ei(const CodeParams& p, int i);

/// Systematic encode: output agrees with info on 0..dim-1 and satisfies every
/// root constraint. Throws std::invalid_argument on length mismatch.
std::vector<elem> encode_row(const ExtendedCyclicCode& e, const std::vector<elem>& info);

/// One evaluation per root, distinguished root first (with the extended
/// correction). All-zero exactly for codewords.
std::vector<elem> row_syndromes(const ExtendedCyclicCode& e, const std::vector<elem>& c);

/// Serial form of encode_row: push the dim info symbols as they become
/// available, call step() once per position. Echoes info, then emits parity;
/// stepping past q^2 positions throws.
class RowEncoderStream {
public:
    explicit RowEncoderStream(ExtendedCyclicCode e);

    void push_info(elem v);
    elem step();
    int position() const { return pos_; }

private:
    ExtendedCyclicCode e_;
    std::vector<elem> info_;
    std::vector<elem> word_;  // full codeword, computed when info completes
    bool computed_ = false;
    int pos_ = 0;
};

}  // namespace hermenc

#endif
