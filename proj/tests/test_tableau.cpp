#include "kohnert/error.hpp"
#include "kohnert/tableau.hpp"

#include "figures.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>

using namespace kohnert;
using figures::tableau;

namespace {

std::vector<LabeledDiagram> sorted(std::vector<LabeledDiagram> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("labeled diagram basics")
{
    const LabeledDiagram t = tableau({"4", "3 3", ".", "1"});
    CHECK(t.size() == 4);
    CHECK(t.label_at({3, 2}) == 3);
    CHECK_FALSE(t.label_at({2, 1}));
    CHECK(t.max_label() == 4);
    CHECK(t.string_cells(3) == std::vector<Cell>{{3, 1}, {3, 2}});
    CHECK(content(t, 4) == Composition{1, 0, 2, 1});
    CHECK(content(t) == Composition{1, 0, 2, 1});
    CHECK(content(t, 6) == Composition{1, 0, 2, 1, 0, 0});
    CHECK(t.diagram() == key_diagram({1, 0, 2, 1}));
    CHECK_THROWS_AS(LabeledDiagram({{{1, 1}, 1}, {{1, 1}, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(LabeledDiagram({{{1, 1}, 0}}), std::invalid_argument);
}

TEST_CASE("KKT(0,3,2) is the nine tableaux of the figure")
{
    const std::vector<LabeledDiagram> expect{
        tableau({"3 3", "2 2 2", "."}),   tableau({"3 3", "2 2", ". . 2"}), tableau({"3 3", "2", ". 2 2"}),
        tableau({"3 3", ".", "2 2 2"}),   tableau({"3", "2 3", ". 2 2"}),   tableau({"3", ". 3", "2 2 2"}),
        tableau({"3 3", "2 2 2"}),        tableau({"3", "2 2 2", ". 3"}),   tableau({"2 2 2", "3 3"}),
    };
    const std::vector<LabeledDiagram> got = enumerate_kkt({0, 3, 2});
    CHECK(got.size() == 9);
    CHECK(sorted(got) == sorted(expect));
    for (const LabeledDiagram& t : expect)
        CHECK(validate_kkt(t, {0, 3, 2}));
}

TEST_CASE("LKT(0,2,3) is the seven tableaux of the figure")
{
    const std::vector<LabeledDiagram> expect{
        tableau({"3 3 3", ". 2 2", "."}), tableau({"3 3 3", ". 2", ". . 2"}), tableau({"3 3 3", ".", ". 2 2"}),
        tableau({"3 3", ". 2 3", ". . 2"}), tableau({"3 3", ". . 3", ". 2 2"}), tableau({"3", ". 3 3", ". 2 2"}),
        tableau({"3 3 3", ". 2 2"}),
    };
    const std::vector<LabeledDiagram> got = enumerate_lkt({0, 2, 3});
    CHECK(got.size() == 7);
    CHECK(sorted(got) == sorted(expect));
    CHECK(lock_source_tableau({0, 2, 3}) == tableau({"3 3 3", ". 2 2"}));
}

TEST_CASE("validators reject each broken condition")
{
    const Composition a{0, 3, 2};
    const LabeledDiagram good = tableau({"3", "2 3", ". 2 2"});
    REQUIRE(validate_kkt(good, a));
    // label 3 missing from column 2
    CHECK_FALSE(validate_kkt(tableau({"3", "2 .", ". 2 2 3"}), a));
    // flag: a 2 in row 3
    CHECK_FALSE(validate_kkt(tableau({"2 3", "3 2", ". . 2"}), a));
    // string 2 ascends from column 1 to 2
    CHECK_FALSE(validate_kkt(tableau({"3 3", ". 2", "2 . 2"}), a));
    // 2 above 3 in column 1 with no 2 in column 2
    REQUIRE(validate_kkt(tableau({"3", "2 3"}), {0, 1, 2}));
    CHECK_FALSE(validate_kkt(tableau({"2", "3 3"}), {0, 1, 2}));
    CHECK_FALSE(validate_kkt(good, {0, 2, 3}));

    const Composition b{0, 2, 3};
    CHECK(validate_lkt(tableau({"3 3", ". 2 3", ". . 2"}), b));
    // not right justified: 2 in columns 1,2
    CHECK_FALSE(validate_lkt(tableau({"3 3 3", "2 2"}), b));
    // column must strictly decrease downward
    CHECK_FALSE(validate_lkt(tableau({". 2 2", "3 3 3"}), b));
}

TEST_CASE("labeling a foreign diagram fails")
{
    CHECK_FALSE(label_key(figures::diagram({"x", "x"}), {0, 2}));
    CHECK_FALSE(label_lock(figures::diagram({"x x", "x"}), {1, 2}));
    CHECK(label_key(key_diagram({1, 0, 2, 1}), {1, 0, 2, 1}) == tableau({"4", "3 3", ".", "1"}));
    CHECK(label_lock(lock_diagram({1, 0, 2, 1}), {1, 0, 2, 1}) == tableau({". 4", "3 3", ".", ". 1"}));
}

TEST_CASE("labelings match a brute force filling oracle")
{
    for (const auto& parts : oracle::weak_compositions(3, 3)) {
        const Composition a(parts);
        for (const Diagram& d : kohnert_closure(key_diagram(a))) {
            auto fills = oracle::fillings(oracle::cells_of(d), parts, oracle::is_kkt);
            REQUIRE(fills.size() == 1);
            CHECK(label_key(d, a) == oracle::to_tableau(fills.front()));
        }
        for (const Diagram& d : kohnert_closure(lock_diagram(a))) {
            auto fills = oracle::fillings(oracle::cells_of(d), parts, oracle::is_lkt);
            REQUIRE(fills.size() == 1);
            CHECK(label_lock(d, a) == oracle::to_tableau(fills.front()));
        }
    }
}

TEST_CASE("in a bounding box the labelable diagrams are exactly the closure")
{
    const std::vector<std::vector<int>> cases{{1, 0, 2, 1}, {0, 3, 2}, {0, 2, 3}, {2, 1, 2}, {1, 2, 0}, {0, 1, 2}};
    for (const auto& parts : cases) {
        const Composition a(parts);
        const int n = static_cast<int>(parts.size());
        const int w = a.max_part();
        std::vector<LabeledDiagram> keys, locks;
        for (const oracle::Cells& cells : oracle::box_diagrams(n, w, a.total())) {
            for (const auto& f : oracle::fillings(cells, parts, oracle::is_kkt))
                keys.push_back(oracle::to_tableau(f));
            for (const auto& f : oracle::fillings(cells, parts, oracle::is_lkt))
                locks.push_back(oracle::to_tableau(f));
        }
        CAPTURE(a.to_string());
        CHECK(sorted(keys) == sorted(enumerate_kkt(a)));
        CHECK(sorted(locks) == sorted(enumerate_lkt(a)));
    }
}

TEST_CASE("enumeration follows closure order")
{
    const Composition a{1, 0, 2, 1};
    const auto keys = enumerate_kkt(a);
    const auto closure = kohnert_closure(key_diagram(a));
    REQUIRE(keys.size() == closure.size());
    for (std::size_t k = 0; k < keys.size(); ++k)
        CHECK(keys[k].diagram() == closure[k]);
    CHECK(enumerate_kkt({0, 0}) == std::vector<LabeledDiagram>{LabeledDiagram{}});
    CHECK(enumerate_lkt({0, 0}) == std::vector<LabeledDiagram>{LabeledDiagram{}});
}

TEST_CASE("source tableau has the flattened weight")
{
    for (const auto& parts : oracle::weak_compositions(4, 3)) {
        const Composition a(parts);
        const LabeledDiagram t = lock_source_tableau(a);
        std::vector<int> w = flatten(a).vec();
        w.resize(a.size(), 0);
        CHECK(weight_vector(t.diagram(), static_cast<int>(a.size())) == w);
        CHECK(validate_lkt(t, a));
    }
}

TEST_CASE("truncation")
{
    const LabeledDiagram t = tableau({"5 6 6", ". 5", "3 3 5", ". . 3", ". . 1"});
    const Composition a{1, 0, 3, 0, 3, 2};
    REQUIRE(validate_lkt(t, a));
    const LabeledDiagram cut = truncate_below(t, 5);
    CHECK(cut == tableau({"3 3", ". . 3", ". . 1"}));
    CHECK(truncated_content(a, 5) == Composition{1, 0, 3, 0, 0, 0});
    CHECK(validate_lkt(cut, truncated_content(a, 5)));
    CHECK(truncate_below(t, 1).empty());
    CHECK(truncate_below(t, 7) == t);

    // Dropping the widest strings keeps the old right edge.
    const LabeledDiagram u = lock_source_tableau({1, 0, 3});
    const LabeledDiagram v = truncate_below(u, 3);
    CHECK_FALSE(validate_lkt(v, truncated_content({1, 0, 3}, 3)));
    CHECK(validate_lkt(v, truncated_content({1, 0, 3}, 3), 3));
    CHECK_FALSE(validate_lkt(v, truncated_content({1, 0, 3}, 3), 0));
}

TEST_CASE("every truncation of every lock tableau is a lock tableau")
{
    for (const auto& parts : oracle::weak_compositions(4, 3)) {
        const Composition a(parts);
        for (const LabeledDiagram& t : enumerate_lkt(a))
            for (int l = 1; l <= static_cast<int>(a.size()) + 1; ++l)
                CHECK(validate_lkt(truncate_below(t, l), truncated_content(a, l), a.max_part()));
    }
}
