#include "hvs/hypervector_space.hpp"

#include <algorithm>
#include <string>

#include "hvs/errors.hpp"

namespace hvs {

namespace {

VectorSubset set_sum(const HyperVectorSpace& v, const VectorSubset& a,
                     const VectorSubset& b) {
    VectorSubset out;
    out.reserve(a.size() * b.size());
    for (Elem x : a) {
        for (Elem y : b) out.push_back(v.sum(x, y));
    }
    return normalize_subset(std::move(out));
}

VectorSubset set_neg(const HyperVectorSpace& v, const VectorSubset& a) {
    VectorSubset out;
    out.reserve(a.size());
    for (Elem x : a) out.push_back(v.neg[x]);
    return normalize_subset(std::move(out));
}

VectorSubset scalar_orbit(const HyperVectorSpace& v, Scalar b, const VectorSubset& a) {
    VectorSubset out;
    for (Elem x : a) {
        const auto& cell = v.cell(b, x);
        out.insert(out.end(), cell.begin(), cell.end());
    }
    return normalize_subset(std::move(out));
}

void check_subset_arg(const HyperVectorSpace& v, const VectorSubset& s) {
    Elem prev = 0;
    bool first = true;
    for (Elem x : s) {
        if (x >= v.size()) throw StructuralError("subset element id out of range");
        if (!first && x <= prev) throw StructuralError("subset not sorted/unique");
        prev = x;
        first = false;
    }
}

}  // namespace

HyperVectorSpace HyperVectorSpace::make(
    std::vector<std::string> labels, std::vector<std::vector<Elem>> add, Elem zero,
    FiniteField field, std::vector<std::vector<std::vector<Elem>>> hyperop) {
    HyperVectorSpace v{std::move(labels), std::move(add), zero,
                       std::move(field),  std::move(hyperop), {}};
    const std::size_t n = v.labels.size();
    if (n == 0) throw StructuralError("carrier is empty");
    if (v.add.size() != n) throw StructuralError("add table row count mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        if (v.add[i].size() != n) {
            throw StructuralError("add table row for '" + v.labels[i] +
                                  "' has wrong length");
        }
        for (Elem e : v.add[i]) {
            if (e >= n) throw StructuralError("add cell out of range in row '" +
                                              v.labels[i] + "'");
        }
    }
    if (v.zero >= n) throw StructuralError("zero vector id out of range");
    validate_field(v.field);

    // (carrier, add) must be an abelian group with identity `zero`.
    for (Elem x = 0; x < n; ++x) {
        if (v.add[x][v.zero] != x) {
            throw StructuralError("additive identity fails at '" + v.labels[x] + "'");
        }
        for (Elem y = 0; y < n; ++y) {
            if (v.add[x][y] != v.add[y][x]) {
                throw StructuralError("vector addition not commutative at ('" +
                                      v.labels[x] + "','" + v.labels[y] + "')");
            }
            for (Elem z = 0; z < n; ++z) {
                if (v.add[v.add[x][y]][z] != v.add[x][v.add[y][z]]) {
                    throw StructuralError("vector addition not associative at ('" +
                                          v.labels[x] + "','" + v.labels[y] + "','" +
                                          v.labels[z] + "')");
                }
            }
        }
    }
    v.neg.assign(n, 0);
    for (Elem x = 0; x < n; ++x) {
        bool found = false;
        for (Elem y = 0; y < n; ++y) {
            if (v.add[x][y] == v.zero) {
                v.neg[x] = y;
                found = true;
                break;
            }
        }
        if (!found) {
            throw StructuralError("no additive inverse for '" + v.labels[x] + "'");
        }
    }

    const std::size_t k = v.field.size();
    if (v.hyperop.size() != k) throw StructuralError("hyperop table scalar rows mismatch");
    for (Scalar b = 0; b < k; ++b) {
        if (v.hyperop[b].size() != n) {
            throw StructuralError("hyperop row for scalar '" + v.field.labels[b] +
                                  "' has wrong length");
        }
        for (Elem x = 0; x < n; ++x) {
            auto& cell = v.hyperop[b][x];
            if (cell.empty()) {
                throw StructuralError("hyperop cell (" + v.field.labels[b] + "," +
                                      v.labels[x] + ") is empty");
            }
            for (Elem e : cell) {
                if (e >= n) {
                    throw StructuralError("hyperop cell (" + v.field.labels[b] + "," +
                                          v.labels[x] + ") has element out of range");
                }
            }
            cell = normalize_subset(std::move(cell));
        }
    }
    return v;
}

VectorSubset HyperVectorSpace::full_carrier() const {
    VectorSubset all(size());
    for (Elem x = 0; x < size(); ++x) all[x] = x;
    return all;
}

std::string HyperVectorSpace::label_set(const VectorSubset& s) const {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += labels[s[i]];
    }
    out += "}";
    return out;
}

AxiomReport check_axioms(const HyperVectorSpace& v) {
    const std::size_t n = v.size();
    const std::size_t k = v.field.size();
    AxiomReport r;
    r.h1.pass = r.h2.pass = r.h3.pass = r.h4.pass = r.h5.pass = true;
    r.srd = r.sld = r.invertible = true;

    for (Scalar b = 0; b < k && (r.h1.pass || r.srd); ++b) {
        for (Elem y = 0; y < n && (r.h1.pass || r.srd); ++y) {
            for (Elem z = 0; z < n && (r.h1.pass || r.srd); ++z) {
                const auto& lhs = v.cell(b, v.sum(y, z));
                auto rhs = set_sum(v, v.cell(b, y), v.cell(b, z));
                AxiomWitness w{AxiomWitness::Law::h1, {b}, {y, z}};
                if (r.h1.pass && !subset_of(lhs, rhs)) {
                    r.h1.pass = false;
                    r.h1.witness = w;
                }
                if (r.srd && lhs != rhs) {
                    r.srd = false;
                    w.law = AxiomWitness::Law::srd;
                    r.srd_witness = w;
                }
            }
        }
    }
    for (Scalar b = 0; b < k && (r.h2.pass || r.sld); ++b) {
        for (Scalar c = 0; c < k && (r.h2.pass || r.sld); ++c) {
            for (Elem y = 0; y < n && (r.h2.pass || r.sld); ++y) {
                const auto& lhs = v.cell(v.field.add[b][c], y);
                auto rhs = set_sum(v, v.cell(b, y), v.cell(c, y));
                AxiomWitness w{AxiomWitness::Law::h2, {b, c}, {y}};
                if (r.h2.pass && !subset_of(lhs, rhs)) {
                    r.h2.pass = false;
                    r.h2.witness = w;
                }
                if (r.sld && lhs != rhs) {
                    r.sld = false;
                    w.law = AxiomWitness::Law::sld;
                    r.sld_witness = w;
                }
            }
        }
    }
    for (Scalar b = 0; b < k && r.h3.pass; ++b) {
        for (Scalar c = 0; c < k && r.h3.pass; ++c) {
            for (Elem y = 0; y < n && r.h3.pass; ++y) {
                const auto& lhs = v.cell(v.field.mul[b][c], y);
                auto rhs = scalar_orbit(v, b, v.cell(c, y));
                if (!subset_of(lhs, rhs)) {
                    r.h3.pass = false;
                    r.h3.witness = AxiomWitness{AxiomWitness::Law::h3, {b, c}, {y}};
                }
            }
        }
    }
    for (Scalar b = 0; b < k && r.h4.pass; ++b) {
        for (Elem y = 0; y < n && r.h4.pass; ++y) {
            const auto& a1 = v.cell(b, v.neg[y]);
            const auto& a2 = v.cell(v.field.neg(b), y);
            auto a3 = set_neg(v, v.cell(b, y));
            if (!(a1 == a2 && a2 == a3)) {
                r.h4.pass = false;
                r.h4.witness = AxiomWitness{AxiomWitness::Law::h4, {b}, {y}};
            }
        }
    }
    for (Elem y = 0; y < n && r.h5.pass; ++y) {
        if (!subset_contains(v.cell(v.field.one, y), y)) {
            r.h5.pass = false;
            r.h5.witness = AxiomWitness{AxiomWitness::Law::h5, {}, {y}};
        }
    }
    for (Scalar b = 0; b < k && r.invertible; ++b) {
        if (b == v.field.zero) continue;
        const Scalar binv = v.field.inverse(b);
        for (Elem y = 0; y < n && r.invertible; ++y) {
            for (Elem x : v.cell(b, y)) {
                if (!subset_contains(v.cell(binv, x), y)) {
                    r.invertible = false;
                    r.invertible_witness =
                        AxiomWitness{AxiomWitness::Law::invertible, {b}, {y, x}};
                    break;
                }
            }
        }
    }
    return r;
}

bool witness_refutes(const HyperVectorSpace& v, const AxiomWitness& w) {
    using Law = AxiomWitness::Law;
    switch (w.law) {
        case Law::h1: {
            const auto& lhs = v.cell(w.scalars[0], v.sum(w.elems[0], w.elems[1]));
            auto rhs = set_sum(v, v.cell(w.scalars[0], w.elems[0]),
                               v.cell(w.scalars[0], w.elems[1]));
            return !subset_of(lhs, rhs);
        }
        case Law::srd: {
            const auto& lhs = v.cell(w.scalars[0], v.sum(w.elems[0], w.elems[1]));
            auto rhs = set_sum(v, v.cell(w.scalars[0], w.elems[0]),
                               v.cell(w.scalars[0], w.elems[1]));
            return lhs != rhs;
        }
        case Law::h2: {
            const auto& lhs = v.cell(v.field.add[w.scalars[0]][w.scalars[1]], w.elems[0]);
            auto rhs = set_sum(v, v.cell(w.scalars[0], w.elems[0]),
                               v.cell(w.scalars[1], w.elems[0]));
            return !subset_of(lhs, rhs);
        }
        case Law::sld: {
            const auto& lhs = v.cell(v.field.add[w.scalars[0]][w.scalars[1]], w.elems[0]);
            auto rhs = set_sum(v, v.cell(w.scalars[0], w.elems[0]),
                               v.cell(w.scalars[1], w.elems[0]));
            return lhs != rhs;
        }
        case Law::h3: {
            const auto& lhs = v.cell(v.field.mul[w.scalars[0]][w.scalars[1]], w.elems[0]);
            auto rhs = scalar_orbit(v, w.scalars[0], v.cell(w.scalars[1], w.elems[0]));
            return !subset_of(lhs, rhs);
        }
        case Law::h4: {
            const auto& a1 = v.cell(w.scalars[0], v.neg[w.elems[0]]);
            const auto& a2 = v.cell(v.field.neg(w.scalars[0]), w.elems[0]);
            auto a3 = set_neg(v, v.cell(w.scalars[0], w.elems[0]));
            return !(a1 == a2 && a2 == a3);
        }
        case Law::h5:
            return !subset_contains(v.cell(v.field.one, w.elems[0]), w.elems[0]);
        case Law::invertible: {
            const Scalar b = w.scalars[0];
            const Elem y = w.elems[0], x = w.elems[1];
            return subset_contains(v.cell(b, y), x) &&
                   !subset_contains(v.cell(v.field.inverse(b), x), y);
        }
    }
    return false;
}

std::string describe(const HyperVectorSpace& v, const AxiomWitness& w) {
    using Law = AxiomWitness::Law;
    auto sl = [&](std::size_t i) { return v.field.labels[w.scalars[i]]; };
    auto el = [&](std::size_t i) { return v.labels[w.elems[i]]; };
    switch (w.law) {
        case Law::h1:
            return "H1 fails at b=" + sl(0) + ", y=" + el(0) + ", z=" + el(1);
        case Law::srd:
            return "strict inclusion in H1 at b=" + sl(0) + ", y=" + el(0) +
                   ", z=" + el(1);
        case Law::h2:
            return "H2 fails at b=" + sl(0) + ", c=" + sl(1) + ", y=" + el(0);
        case Law::sld:
            return "strict inclusion in H2 at b=" + sl(0) + ", c=" + sl(1) +
                   ", y=" + el(0);
        case Law::h3:
            return "H3 fails at b=" + sl(0) + ", c=" + sl(1) + ", y=" + el(0);
        case Law::h4:
            return "H4 fails at b=" + sl(0) + ", y=" + el(0);
        case Law::h5:
            return "H5 fails at y=" + el(0);
        case Law::invertible:
            return "not invertible: " + el(1) + " in " + sl(0) + "∘" + el(0) + " but " +
                   el(0) + " not in " + v.field.labels[v.field.inverse(w.scalars[0])] +
                   "∘" + el(1);
    }
    return "";
}

void require_hvs(const HyperVectorSpace& v) {
    AxiomReport r = check_axioms(v);
    if (r.all_pass()) return;
    const AxiomReport::Entry* failed = nullptr;
    std::string which;
    if (!r.h1.pass) { failed = &r.h1; which = "H1"; }
    else if (!r.h2.pass) { failed = &r.h2; which = "H2"; }
    else if (!r.h3.pass) { failed = &r.h3; which = "H3"; }
    else if (!r.h4.pass) { failed = &r.h4; which = "H4"; }
    else { failed = &r.h5; which = "H5"; }
    throw HypothesisError("space is not a hypervector space: " + which + " fails (" +
                          describe(v, *failed->witness) + ")");
}

std::string describe(const HyperVectorSpace& v, const ShsViolation& w) {
    switch (w.kind) {
        case ShsViolation::Kind::empty:
            return "subset is empty";
        case ShsViolation::Kind::difference:
            return "difference " + v.labels[w.y] + "-" + v.labels[w.z] + "=" +
                   v.labels[v.diff(w.y, w.z)] + " escapes the subset";
        case ShsViolation::Kind::scalar:
            return "element " + v.labels[w.z] + " of " + v.field.labels[w.b] + "∘" +
                   v.labels[w.y] + " escapes the subset";
    }
    return "";
}

std::optional<ShsViolation> subhyperspace_violation(const HyperVectorSpace& v,
                                                    const VectorSubset& s) {
    check_subset_arg(v, s);
    if (s.empty()) return ShsViolation{ShsViolation::Kind::empty, 0, 0, 0};
    for (Elem y : s) {
        for (Elem z : s) {
            if (!subset_contains(s, v.diff(y, z))) {
                return ShsViolation{ShsViolation::Kind::difference, y, z, 0};
            }
        }
    }
    for (Scalar b = 0; b < v.field.size(); ++b) {
        for (Elem y : s) {
            for (Elem t : v.cell(b, y)) {
                if (!subset_contains(s, t)) {
                    return ShsViolation{ShsViolation::Kind::scalar, y, t, b};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_subhyperspace(const HyperVectorSpace& v, const VectorSubset& s) {
    return !subhyperspace_violation(v, s).has_value();
}

VectorSubset span(const HyperVectorSpace& v, const VectorSubset& s) {
    check_subset_arg(v, s);
    if (s.empty()) throw DomainError("span of the empty set is undefined");
    std::vector<bool> in(v.size(), false);
    for (Elem x : s) in[x] = true;
    bool changed = true;
    while (changed) {
        changed = false;
        auto insert = [&](Elem x) {
            if (!in[x]) {
                in[x] = true;
                changed = true;
            }
        };
        for (Elem x = 0; x < v.size(); ++x) {
            if (!in[x]) continue;
            insert(v.neg[x]);
            for (Elem y = x; y < v.size(); ++y) {
                if (in[y]) insert(v.sum(x, y));
            }
            for (Scalar b = 0; b < v.field.size(); ++b) {
                for (Elem t : v.cell(b, x)) insert(t);
            }
        }
    }
    VectorSubset out;
    for (Elem x = 0; x < v.size(); ++x) {
        if (in[x]) out.push_back(x);
    }
    return out;
}

std::vector<VectorSubset> enumerate_subhyperspaces(const HyperVectorSpace& v) {
    if (v.size() > 16) {
        throw CapacityError("subhyperspace enumeration is limited to carriers of at "
                            "most 16 elements (got " +
                            std::to_string(v.size()) + ")");
    }
    std::vector<VectorSubset> out;
    const std::uint32_t limit = 1u << v.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
        VectorSubset s;
        for (Elem x = 0; x < v.size(); ++x) {
            if (mask & (1u << x)) s.push_back(x);
        }
        if (is_subhyperspace(v, s)) out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const VectorSubset& a, const VectorSubset& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

HyperVectorSpace classical_hvs_from_field(const FiniteField& k) {
    validate_field(k);
    const std::size_t n = k.size();
    std::vector<std::vector<std::vector<Elem>>> hyperop(
        n, std::vector<std::vector<Elem>>(n));
    for (Scalar b = 0; b < n; ++b) {
        for (Elem x = 0; x < n; ++x) hyperop[b][x] = {k.mul[b][x]};
    }
    return HyperVectorSpace::make(k.labels, k.add, k.zero, k, std::move(hyperop));
}

}  // namespace hvs
