#ifndef HERMENC_TESTS_TEST_UTIL_HPP
#define HERMENC_TESTS_TEST_UTIL_HPP

// Shared helpers for the test suites. The little Gaussian solver here is the
// independent reference for checking the structured solve paths, so it must
// not call into the library's linear algebra.

#include <random>
#include <stdexcept>
#include <vector>

#include "hermenc/code.hpp"
#include "hermenc/gf.hpp"

namespace testutil {

using hermenc::CodeArray;
using hermenc::elem;
using hermenc::Field;

inline elem random_elem(const Field& f, std::mt19937_64& rng) {
    return static_cast<elem>(rng() % f.q2());
}

inline std::vector<elem> random_vector(const Field& f, std::size_t n, std::mt19937_64& rng) {
    std::vector<elem> v(n);
    for (auto& x : v) x = random_elem(f, rng);
    return v;
}

inline CodeArray random_array(const Field& f, std::mt19937_64& rng) {
    CodeArray a(f);
    for (auto& x : a.flat()) x = random_elem(f, rng);
    return a;
}

// Plain row reduction, written here from scratch. Returns the rank.
inline int ref_rank(const Field& f, std::vector<std::vector<elem>> m) {
    if (m.empty()) return 0;
    const int rows = static_cast<int>(m.size());
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        elem iv = f.inv(m[rank][c]);
        for (auto& x : m[rank]) x = f.mul(x, iv);
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            elem fac = m[r][c];
            for (int cc = 0; cc < cols; ++cc) m[r][cc] = f.add(m[r][cc], f.mul(fac, m[rank][cc]));
        }
        ++rank;
    }
    return rank;
}

// Solves the square system m * sol = rhs; throws if singular.
inline std::vector<elem> ref_solve(const Field& f, std::vector<std::vector<elem>> m,
                                   std::vector<elem> rhs) {
    const int n = static_cast<int>(m.size());
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int r = c; r < n; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) throw std::runtime_error("ref_solve: singular");
        std::swap(m[piv], m[c]);
        std::swap(rhs[piv], rhs[c]);
        elem iv = f.inv(m[c][c]);
        for (auto& x : m[c]) x = f.mul(x, iv);
        rhs[c] = f.mul(rhs[c], iv);
        for (int r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            elem fac = m[r][c];
            for (int cc = 0; cc < n; ++cc) m[r][cc] = f.add(m[r][cc], f.mul(fac, m[c][cc]));
            rhs[r] = f.add(rhs[r], f.mul(fac, rhs[c]));
        }
    }
    return rhs;
}

// Independent route for the mixed known/unknown column system
//   M (x | y)^T = (v | u)^T,  |x| = q-l, |v| = l:
// rows 0..l-1 give an l x l system in y, rows l..q-1 then evaluate u.
struct MixedRef {
    std::vector<elem> left, right;
};

inline MixedRef mixed_reference(const Field& f, const std::vector<std::vector<elem>>& M, int l,
                                const std::vector<elem>& x, const std::vector<elem>& v) {
    const int q = static_cast<int>(M.size());
    MixedRef out;
    out.left.assign(q, 0);
    for (int i = 0; i < q - l; ++i) out.left[i] = x[i];
    if (l > 0) {
        std::vector<std::vector<elem>> sys(l, std::vector<elem>(l, 0));
        std::vector<elem> rhs(l, 0);
        for (int r = 0; r < l; ++r) {
            for (int c = 0; c < l; ++c) sys[r][c] = M[r][q - l + c];
            elem acc = v[r];
            for (int c = 0; c < q - l; ++c) acc = f.add(acc, f.mul(M[r][c], x[c]));
            rhs[r] = acc;  // char 2: v - M_known x = v + M_known x
        }
        auto y = ref_solve(f, sys, rhs);
        for (int i = 0; i < l; ++i) out.left[q - l + i] = y[i];
    }
    out.right.assign(q, 0);
    for (int r = 0; r < q; ++r) {
        elem acc = 0;
        for (int c = 0; c < q; ++c) acc = f.add(acc, f.mul(M[r][c], out.left[c]));
        out.right[r] = acc;
    }
    return out;
}

}  // namespace testutil

#endif
