#include "hvs/constructions.hpp"

#include <algorithm>

#include "hvs/errors.hpp"

namespace hvs {

namespace {

void require_bfs_hvs(const BipolarFuzzySoftSet& g, const char* op) {
    if (auto w = bfs_hvs_violation(g)) {
        throw HypothesisError(std::string(op) + " requires a bfs-hvs input (" +
                              describe(g, *w) + ")");
    }
}

}  // namespace

BipolarFuzzySoftSet characteristic_bfs(std::shared_ptr<const HyperVectorSpace> space,
                                       const VectorSubset& x,
                                       std::vector<std::string> params,
                                       CharVariant variant) {
    const std::size_t n = space->size();
    BipolarFuzzySet grades;
    grades.pos.assign(n, Rational(0));
    grades.neg.assign(n, Rational(0));
    for (Elem e : x) {
        if (e >= n) throw StructuralError("subset element id out of range");
        if (variant != CharVariant::neg) grades.pos[e] = Rational(1);
        if (variant != CharVariant::pos) grades.neg[e] = Rational(-1);
    }
    std::vector<BipolarFuzzySet> table(params.size(), grades);
    return BipolarFuzzySoftSet::make(std::move(space), std::move(params),
                                     std::move(table));
}

BipolarFuzzySoftSet level_promote(const BipolarFuzzySoftSet& f, const std::string& e0,
                                  const Rational& alpha, const Rational& beta) {
    require_bfs_hvs(f, "level_promote");
    auto anchor = f.param_index(e0);
    if (!anchor) throw DomainError("unknown parameter '" + e0 + "'");
    LevelSoftSet levels = level_soft_set(f, alpha, beta);
    const VectorSubset& cut = levels.cuts[*anchor];

    std::vector<BipolarFuzzySet> table(f.grade_table());
    for (auto& grades : table) {
        for (Elem x : cut) {
            grades.pos[x] = Rational(1);
            grades.neg[x] = Rational(-1);
        }
    }
    return BipolarFuzzySoftSet::make(f.space_ptr(), f.params(), std::move(table));
}

GeneratedBfs generate_bfs_hvs(const BipolarFuzzySoftSet& f) {
    const HyperVectorSpace& v = f.space();
    require_hvs(v);
    const std::size_t n = v.size();
    const std::size_t m = f.param_count();

    // sup of f⁺ and inf of f⁻ per parameter over a region, plus the set of
    // region elements attaining all of them simultaneously
    auto extremes = [&](const std::vector<Elem>& region, std::vector<Rational>& sup,
                        std::vector<Rational>& inf) {
        sup.clear();
        inf.clear();
        for (std::size_t e = 0; e < m; ++e) {
            Rational s = f.pos(e, region.front());
            Rational t = f.neg(e, region.front());
            for (Elem x : region) {
                s = max(s, f.pos(e, x));
                t = min(t, f.neg(e, x));
            }
            sup.push_back(s);
            inf.push_back(t);
        }
    };
    auto attaining = [&](const std::vector<Elem>& region, const std::vector<Rational>& sup,
                         const std::vector<Rational>& inf) {
        VectorSubset u;
        for (Elem x : region) {
            bool all = true;
            for (std::size_t e = 0; e < m && all; ++e) {
                all = f.pos(e, x) == sup[e] && f.neg(e, x) == inf[e];
            }
            if (all) u.push_back(x);
        }
        return u;
    };
    auto stuck_message = [&](std::size_t step, const std::vector<Rational>& sup,
                             const std::vector<Rational>& inf) {
        std::string msg = "generate_bfs_hvs stuck at step " + std::to_string(step) +
                          ": no element attains";
        for (std::size_t e = 0; e < m; ++e) {
            msg += (e ? "," : "") + std::string(" (") + f.params()[e] + ": sup " +
                   sup[e].str() + ", inf " + inf[e].str() + ")";
        }
        msg += " simultaneously";
        return msg;
    };

    ShellDecomposition trace;
    std::vector<Rational> sup, inf;
    VectorSubset carrier = v.full_carrier();

    extremes(carrier, sup, inf);
    VectorSubset u0 = attaining(carrier, sup, inf);
    if (u0.empty()) {
        throw ConstructionStuckError(0, stuck_message(0, sup, inf));
    }
    trace.seeds.push_back(u0);
    trace.chain.push_back(span(v, u0));
    trace.shells.push_back(trace.chain.back());
    trace.pos_grades.push_back(sup);
    trace.neg_grades.push_back(inf);

    while (trace.chain.back().size() < n) {
        const VectorSubset& w_prev = trace.chain.back();
        VectorSubset rest;
        for (Elem x = 0; x < n; ++x) {
            if (!subset_contains(w_prev, x)) rest.push_back(x);
        }
        extremes(rest, sup, inf);
        VectorSubset ui = attaining(rest, sup, inf);
        if (ui.empty()) {
            throw ConstructionStuckError(trace.chain.size(),
                                         stuck_message(trace.chain.size(), sup, inf));
        }
        VectorSubset wi = span(v, subset_union(w_prev, ui));
        trace.seeds.push_back(std::move(ui));
        trace.shells.emplace_back();
        std::set_difference(wi.begin(), wi.end(), w_prev.begin(), w_prev.end(),
                            std::back_inserter(trace.shells.back()));
        trace.chain.push_back(std::move(wi));
        trace.pos_grades.push_back(sup);
        trace.neg_grades.push_back(inf);
    }

    std::vector<BipolarFuzzySet> table(m);
    for (std::size_t e = 0; e < m; ++e) {
        table[e].pos.assign(n, Rational(0));
        table[e].neg.assign(n, Rational(0));
        for (std::size_t i = 0; i < trace.shells.size(); ++i) {
            for (Elem x : trace.shells[i]) {
                table[e].pos[x] = trace.pos_grades[i][e];
                table[e].neg[x] = trace.neg_grades[i][e];
            }
        }
    }
    GeneratedBfs out{
        BipolarFuzzySoftSet::make(f.space_ptr(), f.params(), std::move(table)),
        std::move(trace)};
    return out;
}

bool is_normal(const BipolarFuzzySoftSet& g) {
    require_bfs_hvs(g, "is_normal");
    const Elem zero = g.space().zero;
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        if (g.pos(e, zero) != Rational(1) || g.neg(e, zero) != Rational(-1)) {
            return false;
        }
    }
    return true;
}

BipolarFuzzySoftSet normalize_shift(const BipolarFuzzySoftSet& g,
                                    NegativeShiftRule rule) {
    require_bfs_hvs(g, "normalize_shift");
    const Elem zero = g.space().zero;
    const std::size_t n = g.space().size();
    std::vector<BipolarFuzzySet> table(g.param_count());
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        const Rational pos_shift = Rational(1) - g.pos(e, zero);
        const Rational neg_shift = rule == NegativeShiftRule::anchor
                                       ? -(Rational(1) + g.neg(e, zero))
                                       : g.neg(e, zero) - Rational(1);
        table[e].pos.resize(n);
        table[e].neg.resize(n);
        for (Elem x = 0; x < n; ++x) {
            table[e].pos[x] = g.pos(e, x) + pos_shift;
            table[e].neg[x] = g.neg(e, x) + neg_shift;
            if (rule == NegativeShiftRule::mirror &&
                !is_negative_unit_grade(table[e].neg[x])) {
                throw DomainError("mirror shift leaves [-1,0]: parameter '" +
                                  g.params()[e] + "', element '" +
                                  g.space().labels[x] + "' maps to " +
                                  table[e].neg[x].str());
            }
        }
    }
    return BipolarFuzzySoftSet::make(g.space_ptr(), g.params(), std::move(table));
}

BipolarFuzzySoftSet normalize_scale(const BipolarFuzzySoftSet& g) {
    require_bfs_hvs(g, "normalize_scale");
    const Elem zero = g.space().zero;
    const std::size_t n = g.space().size();
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        if (g.pos(e, zero) == Rational(0) || g.neg(e, zero) == Rational(0)) {
            throw HypothesisError(
                "scale normalization requires non-zero grades at the zero vector; "
                "parameter '" +
                g.params()[e] + "' has (" + g.pos(e, zero).str() + "," +
                g.neg(e, zero).str() + ")");
        }
    }
    std::vector<BipolarFuzzySet> table(g.param_count());
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        table[e].pos.resize(n);
        table[e].neg.resize(n);
        for (Elem x = 0; x < n; ++x) {
            table[e].pos[x] = g.pos(e, x) / g.pos(e, zero);
            table[e].neg[x] = -(g.neg(e, x) / g.neg(e, zero));
        }
    }
    return BipolarFuzzySoftSet::make(g.space_ptr(), g.params(), std::move(table));
}

}  // namespace hvs
