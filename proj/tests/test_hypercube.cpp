#include <algorithm>
#include <bit>
#include <set>

#include "doctest.h"
#include "hamcube/hypercube.hpp"

using namespace hamcube;

namespace {

Edge e(Vertex a, Vertex b) { return make_edge(a, b); }

}  // namespace

TEST_CASE("neighbors are the single-bit flips in ascending coordinate order") {
    CHECK(neighbors(Hypercube(2), 0b00) == std::vector<Vertex>{0b01, 0b10});
    CHECK(neighbors(Hypercube(1), 0) == std::vector<Vertex>{1});
    CHECK(neighbors(Hypercube(4), 0b0101) == std::vector<Vertex>{0b0100, 0b0111, 0b0001, 0b1101});
}

TEST_CASE("neighbors rejects out-of-range labels") {
    CHECK_THROWS_WITH_AS(neighbors(Hypercube(2), 4), doctest::Contains("out of range"), Error);
}

TEST_CASE("adjacency is symmetric and irreflexive") {
    const Hypercube g(4);
    for (Vertex v = 0; v < 16; ++v) {
        const auto nv = neighbors(g, v);
        CHECK(nv.size() == 4);
        CHECK(std::set<Vertex>(nv.begin(), nv.end()).size() == 4);
        for (Vertex u : nv) {
            CHECK(u != v);
            const auto nu = neighbors(g, u);
            CHECK(std::find(nu.begin(), nu.end(), v) != nu.end());
        }
    }
}

TEST_CASE("weight parity follows the population count") {
    CHECK(weight_parity(0b0000) == Parity::Even);
    CHECK(weight_parity(0b0110) == Parity::Even);
    CHECK(weight_parity(0b0111) == Parity::Odd);
}

TEST_CASE("parity classes split every cube in half") {
    for (unsigned n = 1; n <= 10; ++n) {
        Vertex even = 0;
        for (Vertex v = 0; v < (Vertex{1} << n); ++v)
            if (weight_parity(v) == Parity::Even) ++even;
        CHECK(even == (Vertex{1} << (n - 1)));
    }
}

TEST_CASE("graph stats match the closed-form counts") {
    CHECK(graph_stats(Hypercube(2)) == GraphStats{4, 4, 2});
    CHECK(graph_stats(Hypercube(4)) == GraphStats{16, 32, 4});
    CHECK(graph_stats(Hypercube(1)) == GraphStats{2, 1, 1});
}

TEST_CASE("split and join are inverse bit-field operations") {
    CHECK(split_label(2, 0b1101) == CopyCoordinates{0b11, 0b01});
    CHECK(split_label(2, 0b0000) == CopyCoordinates{0b00, 0b00});
    CHECK(split_label(1, 0b10) == CopyCoordinates{1, 0});

    for (unsigned m : {1u, 2u, 3u, 4u}) {
        for (Vertex v = 0; v < (Vertex{1} << (2 * m)); ++v) {
            const auto cc = split_label(m, v);
            CHECK(join_label(m, cc.copy, cc.inner) == v);
        }
    }
}

TEST_CASE("join is monotone in the inner label at fixed copy") {
    for (Vertex copy = 0; copy < 4; ++copy)
        for (Vertex inner = 0; inner + 1 < 4; ++inner)
            CHECK(join_label(2, copy, inner) < join_label(2, copy, inner + 1));
}

TEST_CASE("outside edges between copies 00 and 01 split by endpoint parity") {
    CHECK(outside_edge_set(2, 0b00, 0b01, Parity::Even) ==
          std::vector<Edge>{e(0b0000, 0b0100), e(0b0011, 0b0111)});
    CHECK(outside_edge_set(2, 0b00, 0b01, Parity::Odd) ==
          std::vector<Edge>{e(0b0001, 0b0101), e(0b0010, 0b0110)});
}

TEST_CASE("endpoint parity counts the copy bits too") {
    // Copy 01 has odd weight, so its even-parity endpoints carry odd inner labels.
    CHECK(outside_edge_set(2, 0b01, 0b11, Parity::Even) ==
          std::vector<Edge>{e(0b0101, 0b1101), e(0b0110, 0b1110)});
}

TEST_CASE("the two parity classes partition the cross-copy edges") {
    for (unsigned m : {1u, 2u, 3u}) {
        for (Vertex x = 0; x < (Vertex{1} << m); ++x) {
            for (unsigned k = 0; k < m; ++k) {
                const Vertex y = x ^ (Vertex{1} << k);
                const auto even = outside_edge_set(m, x, y, Parity::Even);
                const auto odd = outside_edge_set(m, x, y, Parity::Odd);
                CHECK(even.size() == (std::size_t{1} << (m - 1)));
                CHECK(odd.size() == (std::size_t{1} << (m - 1)));

                std::set<Edge> all(even.begin(), even.end());
                all.insert(odd.begin(), odd.end());
                CHECK(all.size() == (std::size_t{1} << m));  // disjoint union
                for (const Edge& edge : all) {
                    const auto a = split_label(m, edge.lo);
                    const auto b = split_label(m, edge.hi);
                    CHECK(a.inner == b.inner);
                    CHECK(((a.copy == x && b.copy == y) || (a.copy == y && b.copy == x)));
                }
            }
        }
    }
}

TEST_CASE("even set of (x,y) equals odd set of (y,x)") {
    for (unsigned m : {1u, 2u, 3u, 4u}) {
        for (Vertex x = 0; x < (Vertex{1} << m); ++x) {
            for (unsigned k = 0; k < m; ++k) {
                const Vertex y = x ^ (Vertex{1} << k);
                CHECK(outside_edge_set(m, x, y, Parity::Even) ==
                      outside_edge_set(m, y, x, Parity::Odd));
            }
        }
    }
}

TEST_CASE("outside_edge_set rejects non-adjacent copies") {
    CHECK_THROWS_WITH_AS(outside_edge_set(2, 0b00, 0b11, Parity::Even),
                         doctest::Contains("not adjacent"), Error);
    CHECK_THROWS_AS(outside_edge_set(2, 0b00, 0b00, Parity::Even), Error);
}

TEST_CASE("edge_dimension reads back the flipped coordinate") {
    CHECK(edge_dimension(e(0b0000, 0b0001)) == 0);
    CHECK(edge_dimension(e(0b0010, 0b0110)) == 2);
    CHECK_THROWS_AS(edge_dimension(e(0b00, 0b11)), Error);
}

TEST_CASE("binary rendering is fixed-width with the high bit first") {
    CHECK(to_binary(0b0011, 4) == "0011");
    CHECK(to_binary(0, 2) == "00");
    CHECK(to_binary(5, 3) == "101");
    CHECK_THROWS_AS(to_binary(4, 2), Error);  // label does not fit
}

TEST_CASE("parse_binary inverts to_binary and flags junk") {
    for (Vertex v = 0; v < 16; ++v) CHECK(parse_binary(to_binary(v, 4)) == v);
    CHECK(parse_binary("101") == 5);
    CHECK_THROWS_WITH_AS(parse_binary("01x1"), doctest::Contains("bad binary label"), Error);
    CHECK_THROWS_AS(parse_binary(""), Error);
}
