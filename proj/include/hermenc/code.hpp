#ifndef HERMENC_CODE_HPP
#define HERMENC_CODE_HPP

#include <utility>
#include <vector>

#include "hermenc/gf.hpp"

namespace hermenc {

/// Affine rational point of the curve x^(q+1) = y^q + y.
struct RationalPoint {
    elem alpha;  // column label
    elem beta;   // row label (subfield element)
    elem x;
    elem y;
};

/// A q x q^2 array over GF(q^2). Row r holds beta (0, gamma^0, gamma^1, ...),
/// column c holds alpha (epsilon^c for c < q^2-1, then alpha = 0 last).
class CodeArray {
public:
    CodeArray() : rows_(0), cols_(0) {}
    CodeArray(int rows, int cols) : rows_(rows), cols_(cols), v_(static_cast<std::size_t>(rows) * cols, 0) {}
    explicit CodeArray(const Field& f) : CodeArray(f.q(), f.q2()) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    elem& at(int r, int c) { return v_[static_cast<std::size_t>(r) * cols_ + c]; }
    elem at(int r, int c) const { return v_[static_cast<std::size_t>(r) * cols_ + c]; }

    /// Row-major flattening; also the point order of enumerate_points.
    const std::vector<elem>& flat() const { return v_; }
    std::vector<elem>& flat() { return v_; }

    bool operator==(const CodeArray&) const = default;

private:
    int rows_, cols_;
    std::vector<elem> v_;
};

/// All q^3 affine points in (row, column) order: index = row * q^2 + column.
std::vector<RationalPoint> enumerate_points(const Field& f);

/// Derived parameters of the code with pole-order bound m.
///
/// a_hat[b]    largest a with x^a y^b in the function space, floor((m - b(q+1))/q).
/// info_len[i] information symbols in row i of the data array, q^2 - a_hat[q-1-i] - 1;
///             non-increasing in i, so each column's information rows are a
///             top-aligned prefix.
/// b_hat[j]    information symbols in column j, |{i : info_len[i] > j}|.
struct CodeParams {
    Field field;
    int m = 0;
    int n = 0;  // q^3
    int g = 0;  // q(q-1)/2
    int k = 0;  // n - |basis|
    std::vector<std::pair<int, int>> basis;  // (a, b) monomial exponents
    std::vector<int> a_hat;
    std::vector<int> info_len;
    std::vector<int> b_hat;
};

/// Validates the supported m range and the dimension bound, then derives all
/// tables. Throws std::invalid_argument naming the violated bound.
CodeParams make_code(const Field& f, int m);

/// The k information positions (row, column), row-major along the staircase.
std::vector<std::pair<int, int>> info_positions(const CodeParams& p);

}  // namespace hermenc

#endif
