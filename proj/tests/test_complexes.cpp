#include "tbfloer/census.hpp"
#include "tbfloer/model_complex.hpp"
#include "tbfloer/svg.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <tuple>

using namespace tbfloer;

namespace {

struct ArrowDesc {
    std::string from, to;
    ArrowKind kind;
    auto key() const { return std::tie(from, to, kind); }
    bool operator<(const ArrowDesc& o) const { return key() < o.key(); }
    bool operator==(const ArrowDesc& o) const { return key() == o.key(); }
};

std::set<ArrowDesc> active_arrows(const ModelComplex& m) {
    std::set<ArrowDesc> out;
    for (const auto& a : m.arrows)
        if (a.active)
            out.insert({m.generators[a.source].label, m.generators[a.target].label, a.kind});
    return out;
}

long long count_active(const ModelComplex& m, ArrowKind kind) {
    long long n = 0;
    for (const auto& a : m.arrows)
        if (a.active && a.kind == kind) ++n;
    return n;
}

}  // namespace

TEST_CASE("stable complexes match the grading heights and interior arrow counts") {
    ModelComplex m = stable_complex(TwoBridgeKnot{11, 5});
    REQUIRE(m.grading_vector() == std::vector<long long>{-1, 0, 1, 0, -1, 0, 1, 0, -1, 0, 1});
    REQUIRE(count_active(m, ArrowKind::interior) == 5);
    REQUIRE(count_active(m, ArrowKind::exterior) == 0);

    m = stable_complex(TwoBridgeKnot{13, 5});
    REQUIRE(m.grading_vector() ==
            std::vector<long long>{0, 1, 2, 1, 0, -1, 0, 1, 0, -1, -2, -1, 0});
    REQUIRE(count_active(m, ArrowKind::interior) == 6);

    m = stable_complex(TwoBridgeKnot{3, 1});
    REQUIRE(m.grading_vector() == std::vector<long long>{-1, 0, 1});
    REQUIRE(active_arrows(m) == std::set<ArrowDesc>{{"x3", "x2", ArrowKind::interior}});

    m = stable_complex(TwoBridgeKnot{1, 1});
    REQUIRE(m.generators.size() == 1);
    REQUIRE(m.arrows.empty());
}

TEST_CASE("reflection of K(13,5) at level 0") {
    ModelComplex m = reflect(stable_complex(TwoBridgeKnot{13, 5}), 0);
    REQUIRE(m.grading_vector() ==
            std::vector<long long>{0, -1, -2, -1, 0, -1, 0, -1, 0, -1, -2, -1, 0});
    std::set<ArrowDesc> want{
        {"x1", "x2", ArrowKind::exterior},   {"x4", "x3", ArrowKind::exterior},
        {"x7", "x8", ArrowKind::exterior},   {"x7", "x6", ArrowKind::interior},
        {"x10", "x11", ArrowKind::interior}, {"x13", "x12", ArrowKind::interior}};
    REQUIRE(active_arrows(m) == want);
}

TEST_CASE("reflection of K(3,1) at level 0 switches everything off") {
    ModelComplex m = reflect(stable_complex(TwoBridgeKnot{3, 1}), 0);
    REQUIRE(m.grading_vector() == std::vector<long long>{-1, 0, -1});
    REQUIRE(active_arrows(m).empty());
}

TEST_CASE("reflection at or above the genus is the stable complex") {
    for (const auto& k : all_census_knots(15)) {
        ModelComplex stable = stable_complex(k);
        for (long long level : {genus(k), genus(k) + 1, genus(k) + 5}) {
            ModelComplex r = reflect(stable, level);
            REQUIRE(r.grading_vector() == stable.grading_vector());
            REQUIRE(active_arrows(r) == active_arrows(stable));
        }
    }
}

TEST_CASE("reflections at two levels agree below both") {
    for (const auto& k : all_census_knots(15)) {
        ModelComplex stable = stable_complex(k);
        long long g = genus(k);
        for (long long a = -g; a <= g; ++a)
            for (long long b = a; b <= g; ++b) {
                ModelComplex ra = reflect(stable, a), rb = reflect(stable, b);
                for (std::size_t i = 0; i < ra.generators.size(); ++i)
                    if (ra.generators[i].stable_level <= std::min(a, b))
                        REQUIRE(ra.generators[i].grading == rb.generators[i].grading);
            }
    }
}

TEST_CASE("reflect requires a stable complex") {
    ModelComplex r = reflect(stable_complex(TwoBridgeKnot{5, 3}), 0);
    REQUIRE_THROWS_AS(reflect(r, 1), std::invalid_argument);
}

TEST_CASE("subcomplex generators for the named examples") {
    ModelComplex c = surgery_subcomplex(TwoBridgeKnot{3, 1}, 0);
    REQUIRE(c.generators.size() == 1);
    REQUIRE(c.generators[0].label == "[x3,-1]");
    REQUIRE(c.generators[0].grading == -1);

    c = surgery_subcomplex(TwoBridgeKnot{13, 5}, 0);
    REQUIRE(c.generators.size() == 5);
    std::multiset<long long> gradings;
    for (const auto& g : c.generators) gradings.insert(g.grading);
    REQUIRE(gradings == std::multiset<long long>{0, -1, -1, -1, -2});
    std::set<std::string> labels;
    for (const auto& g : c.generators) labels.insert(g.label);
    REQUIRE(labels == std::set<std::string>{"[x2,-1]", "[x3,-1]", "[x3,-2]", "[x4,-1]",
                                            "[x8,-1]"});

    for (const auto& k : all_census_knots(15))
        REQUIRE(surgery_subcomplex(k, genus(k)).generators.empty());
}

TEST_CASE("subcomplex euler characteristic identity") {
    REQUIRE(verify_subcomplex_euler(TwoBridgeKnot{13, 5}, 0));
    REQUIRE(euler_characteristic(surgery_subcomplex(TwoBridgeKnot{13, 5}, 0)) == -1);
    REQUIRE(verify_subcomplex_euler(TwoBridgeKnot{3, 1}, 0));
    for (const auto& k : all_census_knots(15))
        for (long long s = 0; s <= genus(k) + 2; ++s) REQUIRE(verify_subcomplex_euler(k, s));
}

TEST_CASE("subcomplex generators are the truncation plus its reflection") {
    // truncation: [x_i, j] with j < 0 and grading >= k-1; reflection sends
    // [x_i, j] to [x_i, (k-1-eps_i) - j]
    for (const auto& k : all_census_knots(21)) {
        AlexanderData d = alexander_data(k);
        for (long long s = 0; s <= genus(k); ++s) {
            std::set<std::pair<std::size_t, long long>> expected;
            for (std::size_t i = 0; i < d.epsilon.size(); ++i) {
                long long eps = d.epsilon[i];
                for (long long j = -1; eps + 2 * j >= s - 1; --j) {
                    expected.insert({i, j});
                    expected.insert({i, (s - 1 - eps) - j});
                }
            }
            std::set<std::pair<std::size_t, long long>> got;
            ModelComplex c = surgery_subcomplex(k, s);
            for (const auto& g : c.generators) {
                // recover the generator index from the label "[xN,j]"
                auto comma = g.label.find(',');
                std::size_t idx = std::stoull(g.label.substr(2, comma - 2)) - 1;
                got.insert({idx, g.tower_index});
            }
            REQUIRE(got == expected);
        }
    }
}

TEST_CASE("stable homology is a single Z in grading sigma/2") {
    REQUIRE(check_stable_homology(TwoBridgeKnot{5, 3}));
    REQUIRE(check_stable_homology(TwoBridgeKnot{11, 5}));
    REQUIRE(check_stable_homology(TwoBridgeKnot{1, 1}));
    for (const auto& k : all_census_knots(21)) REQUIRE(check_stable_homology(k));
}

TEST_CASE("reflected complexes are valid chain complexes") {
    // construction of the graded complex enforces that every active arrow
    // drops the grading by one and that the differential squares to zero
    for (const auto& k : all_census_knots(21)) {
        ModelComplex stable = stable_complex(k);
        for (long long level = -genus(k); level <= genus(k); ++level) {
            GradedComplex c = reflect(stable, level).graded();
            REQUIRE(euler_characteristic(homology(c)) == euler_characteristic(c));
        }
    }
}

TEST_CASE("reflected complexes have euler characteristic +-1") {
    // 7 generators in even gradings, 6 in odd ones
    REQUIRE(euler_characteristic(reflect(stable_complex(TwoBridgeKnot{13, 5}), 0)) == 1);
    for (const auto& k : all_census_knots(15)) {
        ModelComplex stable = stable_complex(k);
        for (long long level = -genus(k); level <= genus(k); ++level) {
            long long chi = euler_characteristic(reflect(stable, level));
            REQUIRE((chi == 1 || chi == -1));
        }
    }
}

TEST_CASE("svg export draws dots, arrows and the reflection line") {
    std::string svg = render_svg(stable_complex(TwoBridgeKnot{11, 5}));
    REQUIRE(svg.find("<svg") != std::string::npos);
    std::size_t dots = 0, pos = 0;
    while ((pos = svg.find("<circle", pos)) != std::string::npos) {
        ++dots;
        pos += 7;
    }
    REQUIRE(dots == 11);
    REQUIRE(svg.find("stroke-dasharray") == std::string::npos);
    REQUIRE(svg.find("marker-end") != std::string::npos);

    svg = render_svg(reflect(stable_complex(TwoBridgeKnot{13, 5}), 0));
    std::size_t dashed = 0;
    pos = 0;
    while ((pos = svg.find("stroke-dasharray", pos)) != std::string::npos) {
        ++dashed;
        pos += 10;
    }
    REQUIRE(dashed == 3);
    REQUIRE(svg.find("#999999") != std::string::npos);

    svg = render_svg(ModelComplex{});
    REQUIRE(svg.find("<svg") != std::string::npos);
    REQUIRE(svg.find("<circle") == std::string::npos);
}

TEST_CASE("svg export surfaces I/O failures") {
    REQUIRE_THROWS_AS(write_svg(stable_complex(TwoBridgeKnot{3, 1}), "/nonexistent/dir/out.svg"),
                      std::runtime_error);
}
