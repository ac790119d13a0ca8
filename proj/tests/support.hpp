#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hvs/bfs_set.hpp"
#include "hvs/dsl.hpp"
#include "hvs/finite_field.hpp"
#include "hvs/hypervector_space.hpp"
#include "hvs/oracle.hpp"
#include "hvs/rational.hpp"

namespace fixtures {

inline hvs::Rational R(const std::string& s) { return hvs::Rational::parse(s); }

inline hvs::FiniteField f2() { return hvs::prime_field(2); }

/// The four-element golden space over F2. The scalar-0 row of the
/// hyperoperation is constantly {0,2}.
inline std::shared_ptr<const hvs::HyperVectorSpace> z4() {
    std::vector<std::vector<hvs::Elem>> add(4, std::vector<hvs::Elem>(4));
    for (hvs::Elem i = 0; i < 4; ++i) {
        for (hvs::Elem j = 0; j < 4; ++j) add[i][j] = (i + j) % 4;
    }
    std::vector<std::vector<std::vector<hvs::Elem>>> hop = {
        {{0, 2}, {0, 2}, {0, 2}, {0, 2}},
        {{0, 2}, {1, 2, 3}, {0, 2}, {1, 2, 3}},
    };
    return std::make_shared<const hvs::HyperVectorSpace>(hvs::HyperVectorSpace::make(
        {"0", "1", "2", "3"}, std::move(add), 0, f2(), std::move(hop)));
}

/// Structurally valid variant whose scalar-0 row degenerates to {0} away
/// from 0; H1 fails at 0∘(1+3). Negative-test material.
inline std::shared_ptr<const hvs::HyperVectorSpace> z4_broken_h1() {
    std::vector<std::vector<hvs::Elem>> add(4, std::vector<hvs::Elem>(4));
    for (hvs::Elem i = 0; i < 4; ++i) {
        for (hvs::Elem j = 0; j < 4; ++j) add[i][j] = (i + j) % 4;
    }
    std::vector<std::vector<std::vector<hvs::Elem>>> hop = {
        {{0, 2}, {0}, {0}, {0}},
        {{0, 2}, {1, 2, 3}, {0, 2}, {1, 2, 3}},
    };
    return std::make_shared<const hvs::HyperVectorSpace>(hvs::HyperVectorSpace::make(
        {"0", "1", "2", "3"}, std::move(add), 0, f2(), std::move(hop)));
}

inline std::shared_ptr<const hvs::HyperVectorSpace> z5() {
    return std::make_shared<const hvs::HyperVectorSpace>(
        hvs::classical_hvs_from_field(hvs::prime_field(5)));
}

inline hvs::BipolarFuzzySoftSet make_bfs(
    std::shared_ptr<const hvs::HyperVectorSpace> space,
    std::vector<std::string> params,
    std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rows) {
    std::vector<hvs::BipolarFuzzySet> grades;
    for (auto& [pos, neg] : rows) {
        hvs::BipolarFuzzySet g;
        for (auto& s : pos) g.pos.push_back(R(s));
        for (auto& s : neg) g.neg.push_back(R(s));
        grades.push_back(std::move(g));
    }
    return hvs::BipolarFuzzySoftSet::make(std::move(space), std::move(params),
                                          std::move(grades));
}

/// Layered grades peaking on {0,2}; passes every characterisation.
inline hvs::BipolarFuzzySoftSet g_base(std::shared_ptr<const hvs::HyperVectorSpace> v) {
    return make_bfs(std::move(v), {"c", "d", "e"},
                    {{{"1/2", "3/10", "1/2", "3/10"}, {"-2/5", "-1/5", "-2/5", "-1/5"}},
                     {{"7/10", "1/5", "7/10", "1/5"}, {"-3/5", "-3/10", "-3/5", "-3/10"}},
                     {{"4/5", "2/5", "4/5", "2/5"}, {"-7/10", "-1/2", "-7/10", "-1/2"}}});
}

/// Irregular grades; the cut {3} at (3/10,-2/5) is not a subhyperspace.
inline hvs::BipolarFuzzySoftSet g_skew(std::shared_ptr<const hvs::HyperVectorSpace> v) {
    return make_bfs(std::move(v), {"c", "d", "e"},
                    {{{"2/5", "3/10", "1/5", "7/10"}, {"-1/10", "-2/5", "-3/5", "-3/5"}},
                     {{"1", "1/2", "2/5", "1/10"}, {"-1/2", "-7/10", "-1/5", "-3/10"}},
                     {{"2/5", "0", "1/5", "4/5"}, {"0", "-1/10", "-7/10", "-1/2"}}});
}

/// Normal bfs-hvs: grades (1,-1) on {0,2}.
inline hvs::BipolarFuzzySoftSet f_norm(std::shared_ptr<const hvs::HyperVectorSpace> v) {
    return make_bfs(std::move(v), {"c", "d", "e"},
                    {{{"1", "2/5", "1", "2/5"}, {"-1", "-3/10", "-1", "-3/10"}},
                     {{"1", "3/5", "1", "3/5"}, {"-1", "-1/5", "-1", "-1/5"}},
                     {{"1", "1/10", "1", "1/10"}, {"-1", "-4/5", "-1", "-4/5"}}});
}

inline hvs::BipolarFuzzySoftSet constant_bfs(
    std::shared_ptr<const hvs::HyperVectorSpace> v, std::vector<std::string> params,
    const hvs::Rational& pos, const hvs::Rational& neg) {
    std::vector<hvs::BipolarFuzzySet> grades(
        params.size(), hvs::BipolarFuzzySet{
                           std::vector<hvs::Rational>(v->size(), pos),
                           std::vector<hvs::Rational>(v->size(), neg)});
    return hvs::BipolarFuzzySoftSet::make(std::move(v), std::move(params),
                                          std::move(grades));
}

inline hvs::oracle::GradeGrid grid3x3() {
    return hvs::oracle::GradeGrid::make({R("0"), R("1/2"), R("1")},
                                        {R("-1"), R("-1/2"), R("0")});
}

/// Structurally valid random document: cyclic addition (always an abelian
/// group), random non-empty hyperop cells, random in-range grades. The
/// hyperspace axioms need not hold; the format does not require them.
inline hvs::dsl::Document random_document(std::uint64_t seed) {
    hvs::oracle::SplitMix64 rng(seed);
    hvs::dsl::Document doc;

    const unsigned primes[] = {2, 3, 5};
    const unsigned p = primes[rng.index(3)];
    const std::string field_name = "F" + std::to_string(rng.index(90));
    doc.fields.emplace(field_name, hvs::prime_field(p));

    const std::size_t space_count = rng.index(3);
    std::vector<std::string> space_names;
    for (std::size_t s = 0; s < space_count; ++s) {
        const std::size_t n = 1 + rng.index(5);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) {
            labels.push_back((rng.index(2) ? "v" : "w") + std::to_string(i));
        }
        std::vector<std::vector<hvs::Elem>> add(n, std::vector<hvs::Elem>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                add[i][j] = static_cast<hvs::Elem>((i + j) % n);
            }
        }
        std::vector<std::vector<std::vector<hvs::Elem>>> hop(
            p, std::vector<std::vector<hvs::Elem>>(n));
        for (auto& row : hop) {
            for (auto& cell : row) {
                const std::uint64_t mask = 1 + rng.index((1u << n) - 1);
                for (std::size_t x = 0; x < n; ++x) {
                    if (mask & (1ull << x)) cell.push_back(static_cast<hvs::Elem>(x));
                }
            }
        }
        std::string name = "S" + std::to_string(s) + "_" + std::to_string(rng.index(50));
        auto space = std::make_shared<const hvs::HyperVectorSpace>(
            hvs::HyperVectorSpace::make(std::move(labels), std::move(add), 0,
                                        doc.fields.at(field_name), std::move(hop)));
        doc.spaces.emplace(name, hvs::dsl::Document::SpaceEntry{field_name, space});
        space_names.push_back(std::move(name));
    }

    if (!space_names.empty()) {
        const char* pool[] = {"0",    "1",    "1/2",  "3/10", "2/7",
                              "1/10", "5/11", "9/13", "1/3",  "7/9"};
        const std::size_t bfs_count = rng.index(4);
        for (std::size_t b = 0; b < bfs_count; ++b) {
            const std::string& space_name = space_names[rng.index(space_names.size())];
            const auto& space = doc.spaces.at(space_name).space;
            std::vector<std::string> params;
            for (std::size_t k = 0, kt = 1 + rng.index(3); k < kt; ++k) {
                params.push_back(std::string(1, static_cast<char>('p' + k)));
            }
            std::vector<hvs::BipolarFuzzySet> grades(params.size());
            for (auto& g : grades) {
                for (std::size_t x = 0; x < space->size(); ++x) {
                    g.pos.push_back(R(pool[rng.index(10)]));
                    g.neg.push_back(-R(pool[rng.index(10)]));
                }
            }
            doc.bfs_sets.emplace(
                "B" + std::to_string(b) + "_" + std::to_string(rng.index(50)),
                hvs::dsl::Document::BfsEntry{
                    space_name, hvs::BipolarFuzzySoftSet::make(space, params, grades)});
        }
    }
    return doc;
}

}  // namespace fixtures
