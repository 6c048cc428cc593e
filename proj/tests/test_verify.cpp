#include "kohnert/error.hpp"
#include "kohnert/verify.hpp"

#include <doctest.h>

#include <set>

using namespace kohnert;

TEST_CASE("sweep ranges")
{
    SweepRange r{2, 1, std::nullopt, false};
    const auto comps = compositions_in(r);
    const std::vector<Composition> expect{{0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(comps == expect);

    SweepRange capped{3, 2, 2, false};
    for (const Composition& a : compositions_in(capped))
        CHECK(a.total() <= 2);

    SweepRange standard;
    const auto all = compositions_in(standard);
    CHECK(all.size() == 4 + 16 + 64 + 256 + 2);
    std::set<Composition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const Composition& spot : spot_compositions())
        CHECK(distinct.count(spot));
    CHECK(all.back() == Composition{0, 3, 4});
}

TEST_CASE("each checker passes on the figure compositions")
{
    for (const Composition& a : spot_compositions()) {
        CAPTURE(a.to_string());
        CHECK(check_positivity(a) == std::nullopt);
        CHECK(check_injection(a) == std::nullopt);
        CHECK(check_intertwining(a) == std::nullopt);
        CHECK(check_connectivity(a) == std::nullopt);
        CHECK(check_characterizations(a) == std::nullopt);
        CHECK(check_agreement(a) == std::nullopt);
        CHECK(check_labeling(a) == std::nullopt);
        CHECK(check_crystal(a) == std::nullopt);
        CHECK(check_rectification(a) == std::nullopt);
    }
}

TEST_CASE("a sweep reports the first witness per composition, in order")
{
    SweepRange r{2, 2, std::nullopt, false};
    Checker odd = [](const Composition& a) -> std::optional<std::string> {
        if (a.total() % 2)
            return "odd total " + std::to_string(a.total());
        return std::nullopt;
    };
    const VerificationReport rep = run_sweep("odd", odd, r, 3);
    CHECK(rep.tested == 3 + 9);
    CHECK_FALSE(rep.passed());
    REQUIRE(rep.failures.size() == 5);
    CHECK(rep.failures[0].comp == Composition{1});
    CHECK(rep.failures[1].comp == Composition{0, 1});
    CHECK(rep.failures[4].comp == Composition{2, 1});
    CHECK(rep.failures[4].witness == "odd total 3");
}

TEST_CASE("faults inside a checker become failures")
{
    SweepRange r{1, 1, std::nullopt, false};
    Checker faulty = [](const Composition& a) -> std::optional<std::string> {
        if (a.total() == 1)
            throw TheoremViolation("boom");
        return std::nullopt;
    };
    const VerificationReport rep = run_sweep("faulty", faulty, r, 1);
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].witness == "fault: boom");
}

TEST_CASE("sweeps are deterministic across thread counts")
{
    SweepRange r{3, 2, std::nullopt, false};
    Checker c = [](const Composition& a) -> std::optional<std::string> {
        if (a.part(1) == 2)
            return a.to_string();
        return std::nullopt;
    };
    const auto one = run_sweep("x", c, r, 1);
    const auto many = run_sweep("x", c, r, 4);
    REQUIRE(one.failures.size() == many.failures.size());
    for (std::size_t k = 0; k < one.failures.size(); ++k)
        CHECK(one.failures[k].witness == many.failures[k].witness);
}

TEST_CASE("run_check")
{
    SweepRange r{3, 2, std::nullopt, false};
    const auto all = run_check("all", r);
    REQUIRE(all.size() == check_names().size());
    for (const auto& rep : all) {
        CAPTURE(rep.check);
        CHECK(rep.passed());
    }
    CHECK(run_check("positivity", r).size() == 1);
    CHECK_THROWS_AS(run_check("nonsense", r), InvalidInput);
    const std::string table = format_summary(all);
    CHECK(table.find("positivity") != std::string::npos);
    CHECK(table.find("FAIL") == std::string::npos);
}
