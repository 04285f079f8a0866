#ifndef HERMENC_SRC_LINALG_HPP
#define HERMENC_SRC_LINALG_HPP

// Internal dense linear algebra over GF(q^2). Desk scale only: plain
// Gaussian elimination, no pivot heuristics beyond nonzero search.

#include <stdexcept>
#include <vector>

#include "hermenc/gf.hpp"

namespace hermenc::detail {

// Row-major dense matrix helper.
struct Mat {
    int rows = 0, cols = 0;
    std::vector<elem> e;
    Mat() = default;
    Mat(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c, 0) {}
    elem& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
    elem at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
};

enum class Pivot { FirstNonzero, LastNonzero };

// Reduces [M | R] in place to reduced row echelon form of M. Returns rank.
inline int eliminate(const Field& f, Mat& m, Mat* rhs, Pivot pv = Pivot::FirstNonzero) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        if (pv == Pivot::FirstNonzero) {
            for (int r = rank; r < m.rows; ++r)
                if (m.at(r, col) != 0) { pivot = r; break; }
        } else {
            for (int r = m.rows - 1; r >= rank; --r)
                if (m.at(r, col) != 0) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(pivot, c), m.at(rank, c));
        if (rhs)
            for (int c = 0; c < rhs->cols; ++c) std::swap(rhs->at(pivot, c), rhs->at(rank, c));
        elem iv = f.inv(m.at(rank, col));
        for (int c = 0; c < m.cols; ++c) m.at(rank, c) = f.mul(m.at(rank, c), iv);
        if (rhs)
            for (int c = 0; c < rhs->cols; ++c) rhs->at(rank, c) = f.mul(rhs->at(rank, c), iv);
        for (int r = 0; r < m.rows; ++r) {
            if (r == rank) continue;
            elem factor = m.at(r, col);
            if (factor == 0) continue;
            for (int c = 0; c < m.cols; ++c)
                m.at(r, c) = f.add(m.at(r, c), f.mul(factor, m.at(rank, c)));
            if (rhs)
                for (int c = 0; c < rhs->cols; ++c)
                    rhs->at(r, c) = f.add(rhs->at(r, c), f.mul(factor, rhs->at(rank, c)));
        }
        ++rank;
    }
    return rank;
}

inline int rank(const Field& f, Mat m) { return eliminate(f, m, nullptr); }

// Solves square M X = R for X. Throws std::logic_error on a singular system:
// every solve in this codebase is backed by a nonsingularity lemma, so a
// singular matrix here is an implementation bug, not an input error.
inline Mat solve_square(const Field& f, Mat m, Mat rhs, Pivot pv = Pivot::FirstNonzero) {
    if (m.rows != m.cols || rhs.rows != m.rows) throw std::logic_error("solve_square: shape mismatch");
    int rk = eliminate(f, m, &rhs, pv);
    if (rk != m.rows) throw std::logic_error("solve_square: singular system (invariant violation)");
    return rhs;
}

inline Mat invert(const Field& f, const Mat& m) {
    Mat id(m.rows, m.rows);
    for (int i = 0; i < m.rows; ++i) id.at(i, i) = 1;
    return solve_square(f, m, id);
}

inline std::vector<elem> mat_vec(const Field& f, const Mat& m, const std::vector<elem>& v) {
    std::vector<elem> out(m.rows, 0);
    for (int r = 0; r < m.rows; ++r) {
        elem acc = 0;
        for (int c = 0; c < m.cols; ++c) acc = f.add(acc, f.mul(m.at(r, c), v[c]));
        out[r] = acc;
    }
    return out;
}

}  // namespace hermenc::detail

#endif
