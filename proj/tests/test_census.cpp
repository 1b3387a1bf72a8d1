#include <catch2/catch_amalgamated.hpp>

#include "gghlab/census.hpp"

#include <algorithm>

using namespace gghlab;

namespace {

std::vector<unsigned> sorted_dims(const std::vector<HModule>& mods) {
    std::vector<unsigned> dims;
    for (const auto& x : mods) dims.push_back(x.dim);
    std::sort(dims.begin(), dims.end());
    return dims;
}

} // namespace

TEST_CASE("partition numbers") {
    REQUIRE(partition_count(0) == 1);
    REQUIRE(partition_count(1) == 1);
    REQUIRE(partition_count(2) == 2);
    REQUIRE(partition_count(3) == 3);
    REQUIRE(partition_count(4) == 5);
    REQUIRE(partition_count(5) == 7);
    for (const auto& p : partitions_of(4)) REQUIRE(std::is_sorted(p.rbegin(), p.rend()));
}

TEST_CASE("rank two type A census") {
    auto census = typeA_tempered_census(2, Rat(2));
    REQUIRE(census.size() == 2);
    REQUIRE(sorted_dims(census) == std::vector<unsigned>({1, 2}));
    for (const auto& x : census) {
        REQUIRE(is_tempered(x) == Temperedness::tempered);
        if (x.dim == 1) REQUIRE(hom_dimension(x, typeA_one_dim(2, -1, Rat(1), Rat(2))) == 1);
    }
}

TEST_CASE("rank three type A census") {
    auto census = typeA_tempered_census(3, Rat(2));
    REQUIRE(census.size() == 3);
    REQUIRE(sorted_dims(census) == std::vector<unsigned>({1, 3, 6}));
    for (const auto& x : census) REQUIRE(is_tempered(x) == Temperedness::tempered);
}

TEST_CASE("wreath census at two levels and two positions") {
    auto census = tempered_census(2, 2, Rat(1), 2);
    REQUIRE(census.size() == 5);
    REQUIRE(census_count_formula(2, 2) == 5);

    std::vector<unsigned> dims;
    std::map<std::vector<unsigned>, unsigned> per_block;
    for (const auto& e : census) {
        dims.push_back(e.module.dim);
        per_block[e.block] += 1;
    }
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<unsigned>({1, 1, 2, 2, 2}));
    REQUIRE(per_block[std::vector<unsigned>({2, 0})] == 2);
    REQUIRE(per_block[std::vector<unsigned>({1, 1})] == 1);
    REQUIRE(per_block[std::vector<unsigned>({0, 2})] == 2);

    // entries are pairwise non-isomorphic
    for (unsigned i = 0; i < census.size(); ++i)
        for (unsigned j = i + 1; j < census.size(); ++j)
            REQUIRE(hom_dimension(census[i].module, census[j].module) == 0);
}

TEST_CASE("wreath census at two levels and three positions") {
    auto census = tempered_census(2, 3, Rat(1), 2);
    REQUIRE(census.size() == 10);
    REQUIRE(census_count_formula(2, 3) == 10);

    std::map<std::vector<unsigned>, unsigned> per_block;
    std::vector<unsigned> dims;
    for (const auto& e : census) {
        per_block[e.block] += 1;
        dims.push_back(e.module.dim);
    }
    REQUIRE(per_block[std::vector<unsigned>({3, 0})] == 3);
    REQUIRE(per_block[std::vector<unsigned>({0, 3})] == 3);
    REQUIRE(per_block[std::vector<unsigned>({2, 1})] == 2);
    REQUIRE(per_block[std::vector<unsigned>({1, 2})] == 2);
    std::sort(dims.begin(), dims.end());
    REQUIRE(dims == std::vector<unsigned>({1, 1, 3, 3, 3, 3, 6, 6, 6, 6}));
}
