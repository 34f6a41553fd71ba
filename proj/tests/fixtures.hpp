// Worked 9-vertex regression fixtures: the printed matrices and figures used
// across the suites, transcribed entry by entry.
#pragma once

#include <cmath>

#include "iepg/core.hpp"
#include "iepg/graphs.hpp"
#include "support.hpp"

namespace fixtures {

using testsup::make_sym;

// --- first worked example: spectrum {7,7,1,1,-3,-3,-3,-5,-5} over the
// clique-plus-independent-cluster graph ---

inline iepg::SymMatrix ex31_a() {
    const double b1 = -std::sqrt(33.0) / 2.0;
    const double b2 = std::sqrt(70.0) / 4.0;
    const double b3 = -std::sqrt(22.0) / 4.0;  // |b3| = sqrt(11/8)
    return make_sym({{6, 0, 0, b1},
                     {0, 0, 0, b2},
                     {0, 0, -4, b3},
                     {b1, b2, b3, -2}});
}

inline iepg::SymMatrix ex31_b() {
    const double p = 29.0 / 30.0, q = 37.0 / 15.0, t = 9.0 / 5.0;
    const double da = -31.0 / 30.0, db = -38.0 / 15.0, dc = -6.0 / 5.0;
    return make_sym({{da, p, q, t, t, 1},
                     {p, da, q, t, t, 1},
                     {q, q, db, t, t, 1},
                     {t, t, t, dc, t, 1},
                     {t, t, t, t, dc, 1},
                     {1, 1, 1, 1, 1, 2}});
}

inline iepg::SymMatrix ex31_c() {
    const double s66 = std::sqrt(66.0) / 4.0;
    const double s35 = std::sqrt(35.0) / 4.0;
    const double s11 = std::sqrt(11.0) / 4.0;
    const double p = 29.0 / 30.0, q = 37.0 / 15.0, t = 9.0 / 5.0;
    const double da = -31.0 / 30.0, db = -38.0 / 15.0, dc = -6.0 / 5.0;
    return make_sym({{6, 0, 0, -s66, s66, 0, 0, 0, 0},
                     {0, 0, 0, s35, -s35, 0, 0, 0, 0},
                     {0, 0, -4, -s11, s11, 0, 0, 0, 0},
                     {-s66, s35, -s11, da, p, q, t, t, 1},
                     {s66, -s35, s11, p, da, q, t, t, 1},
                     {0, 0, 0, q, q, db, t, t, 1},
                     {0, 0, 0, t, t, t, dc, t, 1},
                     {0, 0, 0, t, t, t, t, dc, 1},
                     {0, 0, 0, 1, 1, 1, 1, 1, 2}});
}

// --- second worked example: spectrum {7,-3^4,-5^4} over the same graph with
// the cluster completed into a triangle ---

inline iepg::SymMatrix ex32_a() {
    return make_sym({{-0.5, 2.5, 2.5, 2.5},
                     {2.5, -0.5, 2.5, 2.5},
                     {2.5, 2.5, -0.5, 2.5},
                     {2.5, 2.5, 2.5, -0.5}});
}

inline iepg::SymMatrix ex32_b() {
    const double g = 1.0 / 3.0, d = -14.0 / 3.0;
    const double p = -29.0 / 12.0, q = -23.0 / 12.0;
    return make_sym({{p, q, g, g, g, g},
                     {q, p, g, g, g, g},
                     {g, g, d, g, g, g},
                     {g, g, g, d, g, g},
                     {g, g, g, g, d, g},
                     {g, g, g, g, g, d}});
}

inline iepg::SymMatrix ex32_c() {
    const double h = -0.5, f = 2.5;
    const double w = 5.0 * std::sqrt(2.0) / 4.0;
    const double g = 1.0 / 3.0, d = -14.0 / 3.0;
    const double p = -29.0 / 12.0, q = -23.0 / 12.0;
    return make_sym({{h, f, f, w, -w, 0, 0, 0, 0},
                     {f, h, f, w, -w, 0, 0, 0, 0},
                     {f, f, h, w, -w, 0, 0, 0, 0},
                     {w, w, w, p, q, g, g, g, g},
                     {-w, -w, -w, q, p, g, g, g, g},
                     {0, 0, 0, g, g, d, g, g, g},
                     {0, 0, 0, g, g, g, d, g, g},
                     {0, 0, 0, g, g, g, g, d, g},
                     {0, 0, 0, g, g, g, g, g, d}});
}

// --- third worked example: spectrum {8,-1^3,-2^5} over the join
// K_4 v (K_2 u K_3) ---

inline iepg::SymMatrix ex33_a() {
    return make_sym({{2, 3, 3}, {3, 2, 3}, {3, 3, 2}});
}

inline iepg::SymMatrix ex33_b() {
    const double da = -32.0 / 21.0, e = 10.0 / 21.0;
    const double f = -6.0 / 7.0, g = 1.0 / 7.0, db = 8.0 / 7.0, dcv = -13.0 / 7.0;
    return make_sym({{da, e, e, f, g, g, g},
                     {e, da, e, f, g, g, g},
                     {e, e, da, f, g, g, g},
                     {f, f, f, db, g, g, g},
                     {g, g, g, g, dcv, g, g},
                     {g, g, g, g, g, dcv, g},
                     {g, g, g, g, g, g, dcv}});
}

inline iepg::SymMatrix ex33_m() {
    const double s = std::sqrt(3.0) / 2.0;
    const double da = -32.0 / 21.0, e = 10.0 / 21.0;
    const double f = -6.0 / 7.0, g = 1.0 / 7.0, db = 8.0 / 7.0, dcv = -13.0 / 7.0;
    return make_sym({{2, 3, -s, -s, -s, 3 * s, 0, 0, 0},
                     {3, 2, -s, -s, -s, 3 * s, 0, 0, 0},
                     {-s, -s, da, e, e, f, g, g, g},
                     {-s, -s, e, da, e, f, g, g, g},
                     {-s, -s, e, e, da, f, g, g, g},
                     {3 * s, 3 * s, f, f, f, db, g, g, g},
                     {0, 0, g, g, g, g, dcv, g, g},
                     {0, 0, g, g, g, g, g, dcv, g},
                     {0, 0, g, g, g, g, g, g, dcv}});
}

// --- the 5x5 pattern illustration from the opening discussion ---

inline iepg::SymMatrix intro_matrix() {
    return make_sym({{-1, 0.5, 0, 0, 0},
                     {0.5, 0, -2, 1, 0},
                     {0, -2, 1, -1, 0},
                     {0, 1, -1, 1, -1.5},
                     {0, 0, 0, -1.5, 2}});
}

inline iepg::GraphSpec intro_graph() {
    iepg::GraphSpec g(5);
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {2, 4}, {3, 4}, {4, 5}}) g.add_edge(a, b);
    return g;
}

// --- the 9-vertex figures: clique on {4..9}, cluster {1,2,3} attached to
// {4,5}; the second figure adds the triangle on the cluster ---

inline iepg::GraphSpec fig1_graph() {
    iepg::GraphSpec g(9);
    for (int i = 4; i <= 9; ++i)
        for (int j = i + 1; j <= 9; ++j) g.add_edge(i, j);
    for (int v : {1, 2, 3}) {
        g.add_edge(v, 4);
        g.add_edge(v, 5);
    }
    return g;
}

inline iepg::GraphSpec fig2_graph() {
    iepg::GraphSpec g = fig1_graph();
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    return g;
}

}  // namespace fixtures
