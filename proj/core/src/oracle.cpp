#include "hvs/oracle.hpp"

#include <algorithm>
#include <sstream>

#include "hvs/constructions.hpp"
#include "hvs/errors.hpp"

namespace hvs::oracle {

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

GradeGrid GradeGrid::make(std::vector<Rational> pos_levels,
                          std::vector<Rational> neg_levels) {
    auto check = [](const std::vector<Rational>& levels, bool positive) {
        if (levels.empty()) throw DomainError("grade grid must be non-empty");
        for (std::size_t i = 0; i < levels.size(); ++i) {
            bool ok = positive ? is_unit_grade(levels[i])
                               : is_negative_unit_grade(levels[i]);
            if (!ok) throw DomainError("grid level " + levels[i].str() + " out of range");
            if (i && !(levels[i - 1] < levels[i])) {
                throw DomainError("grid levels must be strictly ascending");
            }
        }
    };
    check(pos_levels, true);
    check(neg_levels, false);
    return GradeGrid{std::move(pos_levels), std::move(neg_levels)};
}

BipolarFuzzySoftSet random_bfs(std::shared_ptr<const HyperVectorSpace> space,
                               std::vector<std::string> params, const GradeGrid& grid,
                               std::uint64_t seed) {
    SplitMix64 rng(seed);
    const std::size_t n = space->size();
    std::vector<BipolarFuzzySet> grades(params.size());
    for (auto& g : grades) {
        g.pos.reserve(n);
        g.neg.reserve(n);
        for (std::size_t x = 0; x < n; ++x) {
            g.pos.push_back(grid.pos_levels[rng.index(grid.pos_levels.size())]);
            g.neg.push_back(grid.neg_levels[rng.index(grid.neg_levels.size())]);
        }
    }
    return BipolarFuzzySoftSet::make(std::move(space), std::move(params),
                                     std::move(grades));
}

BipolarFuzzySoftSet brute_force_min_bfs_hvs(const BipolarFuzzySoftSet& f,
                                            const GradeGrid& grid,
                                            std::uint64_t max_candidates) {
    const std::size_t n = f.space().size();
    const std::size_t m = f.param_count();
    const std::size_t cells = n * m;
    const std::uint64_t per_cell =
        static_cast<std::uint64_t>(grid.pos_levels.size()) * grid.neg_levels.size();

    std::uint64_t total = 1;
    for (std::size_t i = 0; i < cells; ++i) {
        if (total > max_candidates / per_cell) {
            throw CapacityError("brute-force candidate family exceeds the guard of " +
                                std::to_string(max_candidates) + " candidates");
        }
        total *= per_cell;
    }

    // odometer over (param, element) cells; each digit picks a (pos, neg) pair
    std::vector<std::size_t> digit(cells, 0);
    std::vector<BipolarFuzzySoftSet> minimal;
    while (true) {
        std::vector<BipolarFuzzySet> grades(m);
        for (std::size_t e = 0; e < m; ++e) {
            grades[e].pos.resize(n);
            grades[e].neg.resize(n);
            for (std::size_t x = 0; x < n; ++x) {
                const std::size_t d = digit[e * n + x];
                grades[e].pos[x] = grid.pos_levels[d / grid.neg_levels.size()];
                grades[e].neg[x] = grid.neg_levels[d % grid.neg_levels.size()];
            }
        }
        BipolarFuzzySoftSet cand =
            BipolarFuzzySoftSet::make(f.space_ptr(), f.params(), std::move(grades));
        if (bfs_contains(f, cand) && is_bfs_hvs_direct(cand)) {
            bool dominated = false;
            for (const auto& mcand : minimal) {
                if (bfs_contains(mcand, cand)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) {
                std::erase_if(minimal, [&](const BipolarFuzzySoftSet& mcand) {
                    return bfs_contains(cand, mcand);
                });
                minimal.push_back(std::move(cand));
            }
        }
        // advance the odometer
        std::size_t i = 0;
        for (; i < cells; ++i) {
            if (++digit[i] < per_cell) break;
            digit[i] = 0;
        }
        if (i == cells) break;
    }
    if (minimal.empty()) {
        throw Error("no grid-valued bfs-hvs contains the input");
    }
    if (minimal.size() > 1) {
        throw Error("minimum is not unique: " + std::to_string(minimal.size()) +
                    " incomparable minimal candidates");
    }
    return minimal.front();
}

std::string to_json(const SuiteReport& r) {
    std::ostringstream out;
    out << "{\"instances\":" << r.instances << ",\"flags\":{\"srd\":"
        << (r.srd ? "true" : "false") << ",\"sld\":" << (r.sld ? "true" : "false")
        << ",\"invertible\":" << (r.invertible ? "true" : "false") << "},\"checks\":{";
    bool first = true;
    for (const auto& [name, check] : r.checks) {
        if (!first) out << ",";
        first = false;
        out << "\"" << json_escape(name) << "\":{\"evaluated\":" << check.evaluated
            << ",\"held\":" << check.held << "}";
    }
    out << "},\"disagreements\":[";
    for (std::size_t i = 0; i < r.disagreements.size(); ++i) {
        if (i) out << ",";
        out << "{\"instance\":" << r.disagreements[i].instance << ",\"check\":\""
            << json_escape(r.disagreements[i].check) << "\",\"detail\":\""
            << json_escape(r.disagreements[i].detail) << "\"}";
    }
    out << "],\"construction_failures\":[";
    for (std::size_t i = 0; i < r.construction_failures.size(); ++i) {
        if (i) out << ",";
        out << r.construction_failures[i];
    }
    out << "]}";
    return out.str();
}

std::string to_text(const SuiteReport& r) {
    std::ostringstream out;
    out << "instances: " << r.instances << "\n";
    out << "flags: srd=" << (r.srd ? "true" : "false")
        << " sld=" << (r.sld ? "true" : "false")
        << " invertible=" << (r.invertible ? "true" : "false") << "\n";
    for (const auto& [name, check] : r.checks) {
        out << name << ": " << check.held << "/" << check.evaluated << " held\n";
    }
    out << "disagreements: " << r.disagreements.size() << "\n";
    for (const auto& a : r.disagreements) {
        out << "  instance " << a.instance << " [" << a.check << "] " << a.detail
            << "\n";
    }
    out << "construction failures: " << r.construction_failures.size();
    for (std::size_t i = 0; i < r.construction_failures.size(); ++i) {
        out << (i ? "," : " at") << " " << r.construction_failures[i];
    }
    out << "\n";
    return out.str();
}

namespace {

bool sum_lower_bound_holds(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h,
                           std::string& detail) {
    const HyperVectorSpace& v = g.space();
    BipolarFuzzySoftSet s = bfs_sum(g, h);
    for (std::size_t e = 0; e < s.param_count(); ++e) {
        const auto ge = g.param_index(s.params()[e]);
        const auto he = h.param_index(s.params()[e]);
        for (Elem y = 0; y < v.size(); ++y) {
            for (Elem z = 0; z < v.size(); ++z) {
                const Elem x = v.sum(y, z);
                if (s.pos(e, x) < min(g.pos(*ge, y), h.pos(*he, z)) ||
                    s.neg(e, x) > max(g.neg(*ge, y), h.neg(*he, z))) {
                    detail = "sum lower bound fails at parameter " + s.params()[e] +
                             ", y=" + v.labels[y] + ", z=" + v.labels[z];
                    return false;
                }
            }
        }
    }
    return true;
}

bool unit_scalar_containment_holds(const BipolarFuzzySoftSet& g, std::string& detail) {
    const FiniteField& k = g.space().field;
    if (!bfs_contains(g, bfs_scalar(k.one, g))) {
        detail = "G not contained in 1∘G";
        return false;
    }
    if (!bfs_contains(bfs_negate(g), bfs_scalar(k.neg(k.one), g))) {
        detail = "-G not contained in (-1)∘G";
        return false;
    }
    return true;
}

bool scalar_growth_holds(const BipolarFuzzySoftSet& g, std::string& detail) {
    const HyperVectorSpace& v = g.space();
    for (Scalar b = 0; b < v.field.size(); ++b) {
        if (b == v.field.zero) continue;
        BipolarFuzzySoftSet bg = bfs_scalar(b, g);
        for (std::size_t e = 0; e < g.param_count(); ++e) {
            for (Elem y = 0; y < v.size(); ++y) {
                if (bg.pos(e, y) < g.pos(e, y) || bg.neg(e, y) > g.neg(e, y)) {
                    detail = "scalar growth fails at b=" + v.field.labels[b] +
                             ", parameter " + g.params()[e] + ", y=" + v.labels[y];
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

SuiteReport equivalence_suite(const std::shared_ptr<const HyperVectorSpace>& space,
                              std::uint64_t n, std::uint64_t seed,
                              const GradeGrid& grid) {
    require_hvs(*space);
    const AxiomReport axioms = check_axioms(*space);

    SuiteReport report;
    report.instances = n;
    report.srd = axioms.srd;
    report.sld = axioms.sld;
    report.invertible = axioms.invertible;

    const std::vector<std::string> params{"p", "q"};
    auto record = [&](std::uint64_t instance, const std::string& check, bool held,
                      const std::string& detail) {
        auto& c = report.checks[check];
        ++c.evaluated;
        if (held) {
            ++c.held;
        } else {
            report.disagreements.push_back({instance, check, detail});
        }
    };

    for (std::uint64_t i = 0; i < n; ++i) {
        BipolarFuzzySoftSet g = random_bfs(space, params, grid, seed + 2 * i);
        BipolarFuzzySoftSet h = random_bfs(space, params, grid, seed + 2 * i + 1);

        const bool direct = is_bfs_hvs_direct(g);
        auto agree = [&](const std::string& name, bool verdict) {
            record(i, "direct=" + name, verdict == direct,
                   "direct=" + std::string(direct ? "true" : "false") + " " + name +
                       "=" + (verdict ? "true" : "false"));
        };
        agree("iff1", is_bfs_hvs_iff1(g));
        agree("levels", is_bfs_hvs_levels(g));
        if (axioms.sld) {
            agree("combo", is_bfs_hvs_combo(g));
            agree("scalarsum", is_bfs_hvs_scalarsum(g));
        }

        std::string detail;
        record(i, "sum_lower_bound", sum_lower_bound_holds(g, h, detail), detail);
        record(i, "unit_scalar_containment", unit_scalar_containment_holds(g, detail),
               detail);
        if (axioms.invertible && direct) {
            record(i, "invertible_scalar_growth", scalar_growth_holds(g, detail),
                   detail);
        }
    }

    if (axioms.invertible && axioms.srd) {
        const std::vector<std::string> pair_params{"p"};
        const std::uint64_t wanted = n / 4;
        const std::uint64_t base = seed + 2 * n;
        std::uint64_t produced = 0;
        for (std::uint64_t t = 0; produced < wanted && t < 20 * wanted + 20; ++t) {
            try {
                auto g = generate_bfs_hvs(
                             random_bfs(space, pair_params, grid, base + 2 * t))
                             .result;
                auto h = generate_bfs_hvs(
                             random_bfs(space, pair_params, grid, base + 2 * t + 1))
                             .result;
                bool held = true;
                std::string detail;
                for (Scalar b = 0; b < space->field.size() && held; ++b) {
                    if (b == space->field.zero) continue;
                    if (!(bfs_scalar(b, bfs_sum(g, h)) ==
                          bfs_sum(bfs_scalar(b, g), bfs_scalar(b, h)))) {
                        held = false;
                        detail = "b∘(G+H) differs from b∘G+b∘H at b=" +
                                 space->field.labels[b];
                    }
                }
                record(t, "scalar_sum_distributivity", held, detail);
                // the generated pair is bfs-hvs by construction, so the
                // scalar lower bound applies to it as well
                record(t, "invertible_scalar_growth", scalar_growth_holds(g, detail),
                       detail);
                record(t, "invertible_scalar_growth", scalar_growth_holds(h, detail),
                       detail);
                ++produced;
            } catch (const ConstructionStuckError&) {
                report.construction_failures.push_back(t);
            }
        }
    }
    return report;
}

}  // namespace hvs::oracle
