#include "hvs/bfs_set.hpp"

#include <algorithm>
#include <set>

#include "hvs/errors.hpp"

namespace hvs {

namespace {

void require_same_space(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h) {
    if (!(g.space() == h.space())) {
        throw MismatchError("operands live over different spaces");
    }
}

const char* side_name(bool positive) { return positive ? "positive" : "negative"; }

}  // namespace

BipolarFuzzySoftSet BipolarFuzzySoftSet::make(
    std::shared_ptr<const HyperVectorSpace> space, std::vector<std::string> params,
    std::vector<BipolarFuzzySet> grades) {
    if (!space) throw StructuralError("bfs set without a space");
    if (params.size() != grades.size()) {
        throw StructuralError("parameter list and grade table differ in length");
    }
    std::set<std::string> seen;
    for (const auto& p : params) {
        if (!seen.insert(p).second) {
            throw StructuralError("duplicate parameter '" + p + "'");
        }
    }
    const std::size_t n = space->size();
    for (std::size_t i = 0; i < grades.size(); ++i) {
        if (grades[i].pos.size() != n || grades[i].neg.size() != n) {
            throw StructuralError("grade maps for parameter '" + params[i] +
                                  "' are not total over the carrier");
        }
        for (Elem x = 0; x < n; ++x) {
            if (!is_unit_grade(grades[i].pos[x])) {
                throw DomainError("positive grade " + grades[i].pos[x].str() +
                                  " out of [0,1] at parameter '" + params[i] +
                                  "', element '" + space->labels[x] + "'");
            }
            if (!is_negative_unit_grade(grades[i].neg[x])) {
                throw DomainError("negative grade " + grades[i].neg[x].str() +
                                  " out of [-1,0] at parameter '" + params[i] +
                                  "', element '" + space->labels[x] + "'");
            }
        }
    }
    BipolarFuzzySoftSet g;
    g.space_ = std::move(space);
    g.params_ = std::move(params);
    g.grades_ = std::move(grades);
    return g;
}

std::optional<std::size_t> BipolarFuzzySoftSet::param_index(
    const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i) {
        if (params_[i] == name) return i;
    }
    return std::nullopt;
}

bool BipolarFuzzySoftSet::operator==(const BipolarFuzzySoftSet& other) const {
    return *space_ == *other.space_ && params_ == other.params_ &&
           grades_ == other.grades_;
}

bool bfs_contains(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h) {
    require_same_space(g, h);
    const std::size_t n = g.space().size();
    for (std::size_t i = 0; i < g.param_count(); ++i) {
        auto j = h.param_index(g.params()[i]);
        if (!j) return false;
        for (Elem x = 0; x < n; ++x) {
            if (g.pos(i, x) > h.pos(*j, x)) return false;
            if (g.neg(i, x) < h.neg(*j, x)) return false;
        }
    }
    return true;
}

BipolarFuzzySoftSet bfs_sum(const BipolarFuzzySoftSet& g, const BipolarFuzzySoftSet& h) {
    require_same_space(g, h);
    const HyperVectorSpace& v = g.space();
    const std::size_t n = v.size();
    std::vector<std::string> params;
    std::vector<BipolarFuzzySet> grades;
    for (std::size_t i = 0; i < g.param_count(); ++i) {
        auto j = h.param_index(g.params()[i]);
        if (!j) continue;
        BipolarFuzzySet out;
        out.pos.assign(n, Rational(0));
        out.neg.assign(n, Rational(0));
        for (Elem x = 0; x < n; ++x) {
            bool first = true;
            Rational best_pos(0), best_neg(0);
            for (Elem y = 0; y < n; ++y) {
                for (Elem z = 0; z < n; ++z) {
                    if (v.sum(y, z) != x) continue;
                    Rational p = min(g.pos(i, y), h.pos(*j, z));
                    Rational q = max(g.neg(i, y), h.neg(*j, z));
                    if (first) {
                        best_pos = p;
                        best_neg = q;
                        first = false;
                    } else {
                        best_pos = max(best_pos, p);
                        best_neg = min(best_neg, q);
                    }
                }
            }
            // every x decomposes as x = x + 0, so first is always cleared
            out.pos[x] = best_pos;
            out.neg[x] = best_neg;
        }
        params.push_back(g.params()[i]);
        grades.push_back(std::move(out));
    }
    return BipolarFuzzySoftSet::make(g.space_ptr(), std::move(params), std::move(grades));
}

BipolarFuzzySoftSet bfs_scalar(Scalar b, const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    if (b >= v.field.size()) throw DomainError("scalar id out of range");
    const std::size_t n = v.size();
    std::vector<BipolarFuzzySet> grades;
    for (std::size_t i = 0; i < g.param_count(); ++i) {
        BipolarFuzzySet out;
        out.pos.assign(n, Rational(0));
        out.neg.assign(n, Rational(0));
        for (Elem x = 0; x < n; ++x) {
            bool any = false;
            Rational best_pos(0), best_neg(0);
            for (Elem r = 0; r < n; ++r) {
                if (!subset_contains(v.cell(b, r), x)) continue;
                if (!any) {
                    best_pos = g.pos(i, r);
                    best_neg = g.neg(i, r);
                    any = true;
                } else {
                    best_pos = max(best_pos, g.pos(i, r));
                    best_neg = min(best_neg, g.neg(i, r));
                }
            }
            out.pos[x] = any ? best_pos : Rational(0);
            out.neg[x] = any ? best_neg : Rational(0);
        }
        grades.push_back(std::move(out));
    }
    return BipolarFuzzySoftSet::make(g.space_ptr(), g.params(), std::move(grades));
}

BipolarFuzzySoftSet bfs_negate(const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    const std::size_t n = v.size();
    std::vector<BipolarFuzzySet> grades;
    for (std::size_t i = 0; i < g.param_count(); ++i) {
        BipolarFuzzySet out;
        out.pos.resize(n);
        out.neg.resize(n);
        for (Elem x = 0; x < n; ++x) {
            out.pos[x] = g.pos(i, v.neg[x]);
            out.neg[x] = g.neg(i, v.neg[x]);
        }
        grades.push_back(std::move(out));
    }
    return BipolarFuzzySoftSet::make(g.space_ptr(), g.params(), std::move(grades));
}

LevelSoftSet level_soft_set(const BipolarFuzzySoftSet& g, const Rational& alpha,
                            const Rational& beta) {
    if (!(alpha > Rational(0) && alpha <= Rational(1))) {
        throw DomainError("alpha " + alpha.str() + " outside (0,1]");
    }
    if (!(beta >= Rational(-1) && beta < Rational(0))) {
        throw DomainError("beta " + beta.str() + " outside [-1,0)");
    }
    LevelSoftSet out{alpha, beta, g.params(), {}};
    const std::size_t n = g.space().size();
    for (std::size_t i = 0; i < g.param_count(); ++i) {
        VectorSubset cut;
        for (Elem x = 0; x < n; ++x) {
            if (g.pos(i, x) >= alpha && g.neg(i, x) <= beta) cut.push_back(x);
        }
        out.cuts.push_back(std::move(cut));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::string describe(const BipolarFuzzySoftSet& g, const BfsHvsViolation& w) {
    const HyperVectorSpace& v = g.space();
    std::string out = "parameter " + g.params()[w.param] + ": ";
    if (w.kind == BfsHvsViolation::Kind::difference) {
        out += std::string(side_name(w.positive_side)) + " grade at " + v.labels[w.y] +
               "-" + v.labels[w.z] + "=" + v.labels[v.diff(w.y, w.z)] +
               " breaks the difference condition";
    } else {
        out += std::string(side_name(w.positive_side)) + " grades over " +
               v.field.labels[w.b] + "∘" + v.labels[w.y] + "=" +
               v.label_set(v.cell(w.b, w.y)) + " break the scalar condition";
    }
    return out;
}

std::optional<BfsHvsViolation> bfs_hvs_violation(const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    require_hvs(v);
    const std::size_t n = v.size();
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        for (Elem y = 0; y < n; ++y) {
            for (Elem z = 0; z < n; ++z) {
                const Elem d = v.diff(y, z);
                if (g.pos(e, d) < min(g.pos(e, y), g.pos(e, z))) {
                    return BfsHvsViolation{BfsHvsViolation::Kind::difference, e, true,
                                           y, z, 0};
                }
                if (g.neg(e, d) > max(g.neg(e, y), g.neg(e, z))) {
                    return BfsHvsViolation{BfsHvsViolation::Kind::difference, e, false,
                                           y, z, 0};
                }
            }
        }
        for (Scalar b = 0; b < v.field.size(); ++b) {
            for (Elem y = 0; y < n; ++y) {
                const auto& cell = v.cell(b, y);
                Rational lo = g.pos(e, cell.front());
                Rational hi = g.neg(e, cell.front());
                for (Elem r : cell) {
                    lo = min(lo, g.pos(e, r));
                    hi = max(hi, g.neg(e, r));
                }
                if (lo < g.pos(e, y)) {
                    return BfsHvsViolation{BfsHvsViolation::Kind::scalar, e, true,
                                           y, 0, b};
                }
                if (hi > g.neg(e, y)) {
                    return BfsHvsViolation{BfsHvsViolation::Kind::scalar, e, false,
                                           y, 0, b};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bfs_hvs_direct(const BipolarFuzzySoftSet& g) {
    return !bfs_hvs_violation(g).has_value();
}

std::string describe(const BipolarFuzzySoftSet& g, const Iff1Violation& w) {
    const HyperVectorSpace& v = g.space();
    std::string lhs;
    switch (w.part) {
        case Iff1Violation::Part::sum: lhs = "G+G"; break;
        case Iff1Violation::Part::negation: lhs = "-G"; break;
        case Iff1Violation::Part::scalar: lhs = v.field.labels[w.b] + "∘G"; break;
    }
    return lhs + " is not contained in G: " + side_name(w.positive_side) +
           " grade at parameter " + g.params()[w.param] + ", element " +
           v.labels[w.x];
}

namespace {

std::optional<Iff1Violation> containment_violation(const BipolarFuzzySoftSet& lhs,
                                                   const BipolarFuzzySoftSet& g,
                                                   Iff1Violation proto) {
    const std::size_t n = g.space().size();
    for (std::size_t e = 0; e < lhs.param_count(); ++e) {
        for (Elem x = 0; x < n; ++x) {
            if (lhs.pos(e, x) > g.pos(e, x)) {
                proto.param = e;
                proto.x = x;
                proto.positive_side = true;
                return proto;
            }
            if (lhs.neg(e, x) < g.neg(e, x)) {
                proto.param = e;
                proto.x = x;
                proto.positive_side = false;
                return proto;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

std::optional<Iff1Violation> iff1_violation(const BipolarFuzzySoftSet& g) {
    require_hvs(g.space());
    if (auto w = containment_violation(bfs_sum(g, g), g,
                                       Iff1Violation{Iff1Violation::Part::sum})) {
        return w;
    }
    if (auto w = containment_violation(bfs_negate(g), g,
                                       Iff1Violation{Iff1Violation::Part::negation})) {
        return w;
    }
    for (Scalar b = 0; b < g.space().field.size(); ++b) {
        Iff1Violation proto{Iff1Violation::Part::scalar};
        proto.b = b;
        if (auto w = containment_violation(bfs_scalar(b, g), g, proto)) return w;
    }
    return std::nullopt;
}

bool is_bfs_hvs_iff1(const BipolarFuzzySoftSet& g) {
    return !iff1_violation(g).has_value();
}

std::string describe(const BipolarFuzzySoftSet& g, const LevelsViolation& w) {
    return "cut of parameter " + g.params()[w.param] + " at (" + w.alpha.str() + "," +
           w.beta.str() + ") = " + g.space().label_set(w.cut) +
           " is not a subhyperspace (" + describe(g.space(), w.inner) + ")";
}

std::optional<LevelsViolation> levels_violation(const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    require_hvs(v);
    const std::size_t n = v.size();
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        std::set<Rational> alphas, betas;
        for (Elem x = 0; x < n; ++x) {
            if (g.pos(e, x) > Rational(0)) alphas.insert(g.pos(e, x));
            if (g.neg(e, x) < Rational(0)) betas.insert(g.neg(e, x));
        }
        auto check_cut = [&](const Rational& alpha,
                             const Rational& beta) -> std::optional<LevelsViolation> {
            VectorSubset cut;
            for (Elem x = 0; x < n; ++x) {
                if (g.pos(e, x) >= alpha && g.neg(e, x) <= beta) cut.push_back(x);
            }
            if (cut.empty()) return std::nullopt;
            if (auto inner = subhyperspace_violation(v, cut)) {
                return LevelsViolation{e, alpha, beta, std::move(cut), *inner};
            }
            return std::nullopt;
        };
        for (const Rational& alpha : alphas) {
            for (const Rational& beta : betas) {
                if (auto w = check_cut(alpha, beta)) return w;
            }
        }
        // Boundary thresholds: with a grade of 0 on one side, the defining
        // inequalities instantiate (alpha,beta) pairs that leave the open
        // ranges, so the closed-range cuts with one side unconstrained have
        // to hold as well; otherwise sets whose admissible joint cuts are
        // all empty could slip through.
        for (const Rational& alpha : alphas) {
            if (auto w = check_cut(alpha, Rational(0))) return w;
        }
        for (const Rational& beta : betas) {
            if (auto w = check_cut(Rational(0), beta)) return w;
        }
    }
    return std::nullopt;
}

bool is_bfs_hvs_levels(const BipolarFuzzySoftSet& g) {
    return !levels_violation(g).has_value();
}

std::string describe(const BipolarFuzzySoftSet& g, const ComboViolation& w) {
    const HyperVectorSpace& v = g.space();
    return "parameter " + g.params()[w.param] + ": " + side_name(w.positive_side) +
           " grades over " + v.field.labels[w.a] + "∘" + v.labels[w.x] + "+" +
           v.field.labels[w.b] + "∘" + v.labels[w.y] + " break the combined condition";
}

std::optional<ComboViolation> combo_violation(const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    require_hvs(v);
    AxiomReport r = check_axioms(v);
    if (!r.sld) {
        throw HypothesisError(
            "combined characterisation requires a strongly left distributive space");
    }
    const std::size_t n = v.size();
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        for (Scalar a = 0; a < v.field.size(); ++a) {
            for (Scalar b = 0; b < v.field.size(); ++b) {
                for (Elem x = 0; x < n; ++x) {
                    for (Elem y = 0; y < n; ++y) {
                        bool first = true;
                        Rational lo(0), hi(0);
                        for (Elem t1 : v.cell(a, x)) {
                            for (Elem t2 : v.cell(b, y)) {
                                const Elem t = v.sum(t1, t2);
                                if (first) {
                                    lo = g.pos(e, t);
                                    hi = g.neg(e, t);
                                    first = false;
                                } else {
                                    lo = min(lo, g.pos(e, t));
                                    hi = max(hi, g.neg(e, t));
                                }
                            }
                        }
                        if (lo < min(g.pos(e, x), g.pos(e, y))) {
                            return ComboViolation{e, a, b, x, y, true};
                        }
                        if (hi > max(g.neg(e, x), g.neg(e, y))) {
                            return ComboViolation{e, a, b, x, y, false};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bfs_hvs_combo(const BipolarFuzzySoftSet& g) {
    return !combo_violation(g).has_value();
}

std::string describe(const BipolarFuzzySoftSet& g, const ScalarSumViolation& w) {
    const HyperVectorSpace& v = g.space();
    return v.field.labels[w.b] + "∘G+" + v.field.labels[w.c] +
           "∘G is not contained in G: " + side_name(w.positive_side) +
           " grade at parameter " + g.params()[w.param] + ", element " + v.labels[w.x];
}

std::optional<ScalarSumViolation> scalarsum_violation(const BipolarFuzzySoftSet& g) {
    const HyperVectorSpace& v = g.space();
    require_hvs(v);
    AxiomReport r = check_axioms(v);
    if (!r.sld) {
        throw HypothesisError(
            "scalar-sum characterisation requires a strongly left distributive space");
    }
    const std::size_t n = v.size();
    for (Scalar b = 0; b < v.field.size(); ++b) {
        for (Scalar c = 0; c < v.field.size(); ++c) {
            BipolarFuzzySoftSet lhs = bfs_sum(bfs_scalar(b, g), bfs_scalar(c, g));
            for (std::size_t e = 0; e < lhs.param_count(); ++e) {
                for (Elem x = 0; x < n; ++x) {
                    if (lhs.pos(e, x) > g.pos(e, x)) {
                        return ScalarSumViolation{b, c, e, x, true};
                    }
                    if (lhs.neg(e, x) < g.neg(e, x)) {
                        return ScalarSumViolation{b, c, e, x, false};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_bfs_hvs_scalarsum(const BipolarFuzzySoftSet& g) {
    return !scalarsum_violation(g).has_value();
}

}  // namespace hvs
