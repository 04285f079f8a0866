#include <doctest.h>

#include <optional>
#include <set>

#include "hermenc/code.hpp"

using namespace hermenc;

TEST_CASE("point enumeration: count, distinctness, curve membership") {
    for (int s : {1, 2}) {
        Field f = build_field(s);
        auto pts = enumerate_points(f);
        REQUIRE(static_cast<int>(pts.size()) == f.q() * f.q2());
        std::set<std::pair<elem, elem>> seen;
        for (const auto& p : pts) {
            CHECK(f.pow(p.x, f.q() + 1) == f.add(f.pow(p.y, f.q()), p.y));
            seen.insert({p.x, p.y});
        }
        CHECK(seen.size() == pts.size());
    }
}

TEST_CASE("points with alpha = 0 are (0, beta)") {
    Field f = build_field(2);
    auto pts = enumerate_points(f);
    const int q2 = f.q2();
    for (int r = 0; r < f.q(); ++r) {
        const auto& p = pts[r * q2 + (q2 - 1)];  // last column carries alpha = 0
        CHECK(p.x == 0);
        CHECK(p.y == f.beta_of_row(r));
    }
    // and the (0,0) point collapses completely
    CHECK(pts[q2 - 1].x == 0);
    CHECK(pts[q2 - 1].y == 0);
}

TEST_CASE("q=2, m=4 parameter tables") {
    Field f = build_field(1);
    CodeParams p = make_code(f, 4);
    CHECK(p.n == 8);
    CHECK(p.g == 1);
    CHECK(p.k == 4);
    CHECK(p.basis == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {0, 1}});
    CHECK(p.a_hat == std::vector<int>{2, 0});
    CHECK(p.info_len == std::vector<int>{3, 1});
    CHECK(p.b_hat == std::vector<int>{2, 1, 1, 0});
}

TEST_CASE("m range validation") {
    Field f = build_field(1);
    CHECK_THROWS_AS(make_code(f, 2), std::invalid_argument);  // below (q-1)(q+1)
    CHECK_THROWS_AS(make_code(f, 6), std::invalid_argument);  // above q^3-q-1
    // boundary dimension k = q^3 - g - q is accepted
    CodeParams p3 = make_code(f, 3);
    CHECK(p3.k == 5);
    CHECK(p3.k == p3.n - p3.g - f.q());
}

TEST_CASE("q=4 parameter sets used throughout") {
    Field f = build_field(2);
    for (auto [m, k] : {std::pair{15, 54}, {19, 50}, {23, 46}}) {
        CodeParams p = make_code(f, m);
        CHECK(p.k == k);
        CHECK(p.n == 64);
        CHECK(p.g == 6);
        CHECK(p.n - p.k == static_cast<int>(p.basis.size()));
    }
}

TEST_CASE("table invariants hold across the m range") {
    for (int s : {1, 2, 3}) {
        Field f = build_field(s);
        const int q = f.q(), q2 = f.q2();
        for (int m = (q - 1) * (q + 1); m <= q * q2 - q - 1; ++m) {
            std::optional<CodeParams> built;
            try {
                built = make_code(f, m);
            } catch (const std::invalid_argument&) {
                continue;
            }
            const CodeParams& p = *built;
            int basis_count = 0;
            for (int b = 0; b < q; ++b) {
                CHECK(p.a_hat[b] == (m - b * (q + 1)) / q);
                CHECK(p.a_hat[b] >= 0);
                CHECK(p.a_hat[b] <= q2 - 2);
                if (b) CHECK(p.a_hat[b] <= p.a_hat[b - 1]);
                basis_count += p.a_hat[b] + 1;
            }
            CHECK(static_cast<int>(p.basis.size()) == basis_count);
            for (auto [a, b] : p.basis) CHECK(a * q + b * (q + 1) <= m);

            int il_sum = 0, bh_sum = 0;
            for (int i = 0; i < q; ++i) {
                CHECK(p.info_len[i] == q2 - p.a_hat[q - 1 - i] - 1);
                if (i) CHECK(p.info_len[i] <= p.info_len[i - 1]);
                il_sum += p.info_len[i];
            }
            for (int j = 0; j < q2; ++j) {
                if (j) CHECK(p.b_hat[j] <= p.b_hat[j - 1]);
                bh_sum += p.b_hat[j];
            }
            CHECK(p.b_hat[q2 - 1] == 0);
            CHECK(il_sum == p.k);
            CHECK(bh_sum == p.k);
            CHECK(p.k == p.n - basis_count);
        }
    }
}

TEST_CASE("information positions form the staircase") {
    Field f = build_field(1);
    CodeParams p = make_code(f, 4);
    auto pos = info_positions(p);
    CHECK(pos == std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {0, 2}, {1, 0}});

    for (auto [s, m] : {std::pair{1, 4}, {2, 19}}) {
        Field ff = build_field(s);
        CodeParams pp = make_code(ff, m);
        auto ip = info_positions(pp);
        CHECK(static_cast<int>(ip.size()) == pp.k);
        // column view: rows 0..b_hat(j)-1, the top-aligned prefix
        std::set<std::pair<int, int>> set(ip.begin(), ip.end());
        for (int j = 0; j < ff.q2(); ++j)
            for (int i = 0; i < ff.q(); ++i)
                CHECK(set.count({i, j}) == static_cast<std::size_t>(i < pp.b_hat[j] ? 1 : 0));
        CHECK(set.count({ff.q() - 1, ff.q2() - 1}) == 0);
    }
}
