#include "kohnert/crystal.hpp"
#include "kohnert/error.hpp"

#include "figures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace kohnert;
using figures::tableau;

namespace {

struct NamedEdge {
    LabeledDiagram source;
    LabeledDiagram target;
    int color;
};

std::vector<int> colors_of(const CrystalGraph& g)
{
    std::vector<int> c;
    for (const CrystalEdge& e : g.edges)
        c.push_back(e.color);
    std::sort(c.begin(), c.end());
    return c;
}

void check_graph(const CrystalGraph& g, const std::vector<LabeledDiagram>& vertices,
                 const std::vector<NamedEdge>& edges)
{
    std::vector<LabeledDiagram> got = g.vertices, want = vertices;
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    REQUIRE(got == want);
    REQUIRE(g.edges.size() == edges.size());
    for (const NamedEdge& e : edges) {
        const CrystalEdge ce{*g.index_of(e.source), *g.index_of(e.target), e.color};
        CHECK(std::find(g.edges.begin(), g.edges.end(), ce) != g.edges.end());
    }
}

} // namespace

TEST_CASE("vertical pairing of the figure")
{
    const Diagram d = figures::diagram({". . . x", ". x . x x . x x", ". . x x x", "x . . x"});
    const VerticalPairing p = vertical_pairing(d, 2);
    std::vector<std::pair<Cell, Cell>> pairs = p.pairs;
    std::sort(pairs.begin(), pairs.end());
    const std::vector<std::pair<Cell, Cell>> expect{
        {{2, 3}, {3, 7}},
        {{2, 4}, {3, 4}},
        {{2, 5}, {3, 5}},
    };
    CHECK(pairs == expect);
    CHECK(p.unpaired_upper == std::vector<Cell>{{3, 2}, {3, 8}});
    CHECK(p.unpaired_lower.empty());

    auto once = raise_diagram(d, 2);
    REQUIRE(once);
    CHECK(*once == d.moved({3, 8}, {2, 8}));
    auto twice = raise_diagram(*once, 2);
    REQUIRE(twice);
    CHECK(*twice == once->moved({3, 2}, {2, 2}));
    CHECK_FALSE(raise_diagram(*twice, 2));
    CHECK_THROWS_AS(vertical_pairing(d, 0), InvalidInput);
}

TEST_CASE("lowering is the mirror of raising on diagrams")
{
    const Diagram d = figures::diagram({"x x", ". . x", "x x x"});
    // only column 3 pairs between rows 1 and 2
    const VerticalPairing p = vertical_pairing(d, 1);
    CHECK(p.pairs.size() == 1);
    CHECK(p.unpaired_lower == std::vector<Cell>{{1, 1}, {1, 2}});
    CHECK(lower_diagram(d, 1) == d.moved({1, 1}, {2, 1}));
}

TEST_CASE("lock raising on content (0,3,4)")
{
    const Composition a{0, 3, 4};
    const LabeledDiagram t0 = tableau({"3 3 3 3", ". 2", ". . 2 2"});
    REQUIRE(validate_lkt(t0, a));
    const auto t1 = raise_lkt(t0, a, 2);
    REQUIRE(t1);
    CHECK(*t1 == tableau({"3 3 3", ". 2 . 3", ". . 2 2"}));
    const auto t2 = raise_lkt(*t1, a, 2);
    REQUIRE(t2);
    CHECK(*t2 == tableau({"3 3", ". 2 3 3", ". . 2 2"}));
    // an unpaired box remains in row 3, but a 3 sits to its right
    CHECK_FALSE(vertical_pairing(t2->diagram(), 2).unpaired_upper.empty());
    CHECK_FALSE(raise_lkt(*t2, a, 2));
    // the key side keeps going on the same diagram
    CHECK(raise_diagram(t2->diagram(), 2));
}

TEST_CASE("crystals of (1,0,2,1) match the figure")
{
    const Composition a{1, 0, 2, 1};
    const LabeledDiagram A = tableau({"4", "3", "1 3"}), B = tableau({"4", "3 3", "1"}),
                         C = tableau({"4", ".", "3", "1 3"}), D = tableau({"3 3", "4", "1"}),
                         E = tableau({"4", ".", "3 3", "1"}), F = tableau({"4", "3", ".", "1 3"}),
                         G = tableau({"4", "3", ". 3", "1"}), H = tableau({"4", "3 3", ".", "1"});
    const CrystalGraph key = crystal_graph(a, CrystalKind::key);
    check_graph(key, {A, B, C, D, E, F, G, H},
                {{A, B, 1}, {C, E, 1}, {B, D, 2}, {C, F, 2}, {E, G, 2}, {G, H, 2}, {A, C, 3}, {B, E, 3}});
    CHECK(colors_of(key) == std::vector<int>{1, 1, 2, 2, 2, 2, 3, 3});
    CHECK(is_connected(key));
    CHECK(character(key) == key_polynomial(a));

    const LabeledDiagram I = tableau({". 4", "3 3", ". 1"}), J = tableau({"3 4", ". 3", ". 1"}),
                         K = tableau({". 4", ".", "3 3", ". 1"}), L = tableau({". 4", "3", ". 3", ". 1"}),
                         M = tableau({". 4", "3 3", ".", ". 1"});
    const CrystalGraph lock = crystal_graph(a, CrystalKind::lock);
    check_graph(lock, {I, J, K, L, M}, {{I, J, 2}, {K, L, 2}, {L, M, 2}, {I, K, 3}});
    CHECK(colors_of(lock) == std::vector<int>{2, 2, 2, 3});
    CHECK(is_connected(lock));
    CHECK(character(lock) == lock_polynomial(a));
    CHECK(I == lock_source_tableau(a));
    CHECK(M.diagram() == lock_diagram(a));
    CHECK(H.diagram() == key_diagram(a));
}

TEST_CASE("operators on trivial contents")
{
    const CrystalGraph g = crystal_graph({0, 0}, CrystalKind::lock);
    CHECK(g.vertices.size() == 1);
    CHECK(g.edges.empty());
    CHECK(is_connected(g));
    CHECK(is_connected(crystal_graph({2}, CrystalKind::key)));
}

TEST_CASE("kind names")
{
    CHECK(parse_crystal_kind("key") == CrystalKind::key);
    CHECK(parse_crystal_kind("kkt") == CrystalKind::key);
    CHECK(parse_crystal_kind("lock") == CrystalKind::lock);
    CHECK(parse_crystal_kind("lkt") == CrystalKind::lock);
    CHECK(to_string(CrystalKind::lock) == "lock");
    CHECK_THROWS_AS(parse_crystal_kind("kd"), InvalidInput);
}

TEST_CASE("raise and lower are mutually inverse on closures")
{
    for (const auto& parts : oracle::weak_compositions(4, 3)) {
        const Composition a(parts);
        for (const Diagram& seed : {key_diagram(a), lock_diagram(a)})
            for (const Diagram& d : kohnert_closure(seed))
                for (int i = 1; i < static_cast<int>(a.size()); ++i) {
                    if (auto up = raise_diagram(d, i))
                        CHECK(lower_diagram(*up, i) == d);
                    if (auto down = lower_diagram(d, i))
                        CHECK(raise_diagram(*down, i) == d);
                }
        for (CrystalKind kind : {CrystalKind::key, CrystalKind::lock}) {
            const auto vertices = kind == CrystalKind::key ? enumerate_kkt(a) : enumerate_lkt(a);
            for (const LabeledDiagram& t : vertices)
                for (int i = 1; i < static_cast<int>(a.size()); ++i) {
                    if (auto up = raise(kind, t, a, i))
                        CHECK(lower(kind, *up, a, i) == t);
                    if (auto down = lower(kind, t, a, i))
                        CHECK(raise(kind, *down, a, i) == t);
                }
        }
    }
}

TEST_CASE("raise and lower are mutually inverse on random diagrams")
{
    std::mt19937 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Cell> cells;
        for (int r = 1; r <= 5; ++r)
            for (int c = 1; c <= 5; ++c)
                if (coin(rng))
                    cells.push_back({r, c});
        const Diagram d(cells);
        for (int i = 1; i <= 5; ++i) {
            const VerticalPairing p = vertical_pairing(d, i);
            CHECK(p.pairs.size() + p.unpaired_upper.size() == d.row_cols(i + 1).size());
            CHECK(p.pairs.size() + p.unpaired_lower.size() == d.row_cols(i).size());
            if (auto up = raise_diagram(d, i))
                CHECK(lower_diagram(*up, i) == d);
            if (auto down = lower_diagram(d, i))
                CHECK(raise_diagram(*down, i) == d);
        }
    }
}

TEST_CASE("key crystal strings use every unpaired box")
{
    for (const auto& parts : oracle::weak_compositions(3, 3)) {
        const Composition a(parts);
        for (const LabeledDiagram& t : enumerate_kkt(a))
            for (int i = 1; i < static_cast<int>(a.size()); ++i) {
                std::size_t length = 0;
                for (auto cur = raise_kkt(t, a, i); cur; cur = raise_kkt(*cur, a, i))
                    ++length;
                CHECK(length == vertical_pairing(t.diagram(), i).unpaired_upper.size());
            }
    }
}
