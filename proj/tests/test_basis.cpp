#include <doctest.h>

#include "qmom/basis.hpp"

using namespace qmom;

TEST_SUITE_BEGIN("basis");

TEST_CASE("fermion enumeration order") {
    auto basis = enumerate_basis(SpeciesStatistics::Fermion, 4, 2);
    REQUIRE(basis.dimension() == 6);
    CHECK(basis.configs[0] == std::vector<int>{0, 1});
    CHECK(basis.configs[1] == std::vector<int>{0, 2});
    CHECK(basis.configs[2] == std::vector<int>{0, 3});
    CHECK(basis.configs[3] == std::vector<int>{1, 2});
    CHECK(basis.configs[4] == std::vector<int>{1, 3});
    CHECK(basis.configs[5] == std::vector<int>{2, 3});
}

TEST_CASE("boson enumeration order") {
    auto basis = enumerate_basis(SpeciesStatistics::Boson, 2, 3);
    REQUIRE(basis.dimension() == 4);
    CHECK(basis.configs[0] == std::vector<int>{3, 0});
    CHECK(basis.configs[1] == std::vector<int>{2, 1});
    CHECK(basis.configs[2] == std::vector<int>{1, 2});
    CHECK(basis.configs[3] == std::vector<int>{0, 3});
}

TEST_CASE("invalid spaces are rejected") {
    CHECK_THROWS_AS(enumerate_basis(SpeciesStatistics::Fermion, 4, 5), ValidationError);
    CHECK_THROWS_AS(enumerate_basis(SpeciesStatistics::Fermion, 0, 0), ValidationError);
}

TEST_CASE("dimension cap refusal reports the computed dimension") {
    try {
        enumerate_basis(SpeciesStatistics::Fermion, 30, 15);
        FAIL("expected ResourceCapError");
    } catch (const ResourceCapError& e) {
        CHECK(std::string(e.what()).find("155117520") != std::string::npos);
    }
    // a raised cap admits the same space
    CHECK(enumerate_basis(SpeciesStatistics::Fermion, 18, 9, 50000).dimension() == 48620);
}

TEST_CASE("index and configuration maps are mutually inverse") {
    for (auto stats : {SpeciesStatistics::Fermion, SpeciesStatistics::Boson}) {
        int N = stats == SpeciesStatistics::Fermion ? 7 : 4;
        auto basis = enumerate_basis(stats, N, 3);
        CHECK(BigInt(basis.dimension()) == space_dimension(stats, N, 3));
        for (std::size_t i = 0; i < basis.dimension(); ++i)
            CHECK(basis.index_of(basis.config_at(i)) == i);
        CHECK_THROWS_AS(basis.index_of({99, 100, 101}), ValidationError);
    }
}

TEST_CASE("vacuum and occupation bookkeeping") {
    auto vac = enumerate_basis(SpeciesStatistics::Fermion, 5, 0);
    CHECK(vac.dimension() == 1);
    CHECK(vac.configs[0].empty());
    auto bosons = enumerate_basis(SpeciesStatistics::Boson, 3, 4);
    for (const auto& cfg : bosons.configs) {
        int total = 0;
        for (int n : cfg) total += n;
        CHECK(total == 4);
    }
}

TEST_SUITE_END();
