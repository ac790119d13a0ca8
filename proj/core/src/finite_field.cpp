#include "hvs/finite_field.hpp"

#include <string>

#include "hvs/errors.hpp"

namespace hvs {

namespace {

void check_table(const std::vector<std::vector<Scalar>>& t, std::size_t n,
                 const std::string& name) {
    if (t.size() != n) {
        throw StructuralError(name + " table has " + std::to_string(t.size()) +
                              " rows, expected " + std::to_string(n));
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (t[i].size() != n) {
            throw StructuralError(name + " table row " + std::to_string(i) + " has " +
                                  std::to_string(t[i].size()) + " entries, expected " +
                                  std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (t[i][j] >= n) {
                throw StructuralError(name + " cell (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is out of range");
            }
        }
    }
}

}  // namespace

void validate_field(const FiniteField& k) {
    const std::size_t n = k.labels.size();
    if (n < 2) throw StructuralError("field needs at least two elements");
    check_table(k.add, n, "add");
    check_table(k.mul, n, "mul");
    if (k.zero >= n || k.one >= n) throw StructuralError("field zero/one id out of range");
    if (k.zero == k.one) throw StructuralError("field zero and one coincide");

    auto law = [&](bool ok, const std::string& what) {
        if (!ok) throw StructuralError("field tables violate " + what);
    };
    for (Scalar a = 0; a < n; ++a) {
        law(k.add[a][k.zero] == a, "additive identity at " + k.labels[a]);
        law(k.mul[a][k.one] == a, "multiplicative identity at " + k.labels[a]);
        law(k.mul[a][k.zero] == k.zero, "annihilation at " + k.labels[a]);
        bool has_neg = false;
        for (Scalar b = 0; b < n; ++b) has_neg |= k.add[a][b] == k.zero;
        law(has_neg, "additive inverse at " + k.labels[a]);
        if (a != k.zero) {
            bool has_inv = false;
            for (Scalar b = 0; b < n; ++b) has_inv |= k.mul[a][b] == k.one;
            law(has_inv, "multiplicative inverse at " + k.labels[a]);
        }
        for (Scalar b = 0; b < n; ++b) {
            law(k.add[a][b] == k.add[b][a], "additive commutativity");
            law(k.mul[a][b] == k.mul[b][a], "multiplicative commutativity");
            if (a != k.zero && b != k.zero) {
                law(k.mul[a][b] != k.zero, "zero-divisor freeness");
            }
            for (Scalar c = 0; c < n; ++c) {
                law(k.add[k.add[a][b]][c] == k.add[a][k.add[b][c]], "additive associativity");
                law(k.mul[k.mul[a][b]][c] == k.mul[a][k.mul[b][c]],
                    "multiplicative associativity");
                law(k.mul[a][k.add[b][c]] == k.add[k.mul[a][b]][k.mul[a][c]],
                    "distributivity");
            }
        }
    }
}

FiniteField FiniteField::make(std::vector<std::string> labels,
                              std::vector<std::vector<Scalar>> add,
                              std::vector<std::vector<Scalar>> mul, Scalar zero,
                              Scalar one) {
    FiniteField k{std::move(labels), std::move(add), std::move(mul), zero, one};
    validate_field(k);
    return k;
}

Scalar FiniteField::neg(Scalar a) const {
    for (Scalar b = 0; b < size(); ++b) {
        if (add[a][b] == zero) return b;
    }
    throw StructuralError("no additive inverse for " + labels[a]);
}

Scalar FiniteField::inverse(Scalar a) const {
    if (a == zero) throw DomainError("zero has no multiplicative inverse");
    for (Scalar b = 0; b < size(); ++b) {
        if (mul[a][b] == one) return b;
    }
    throw StructuralError("no multiplicative inverse for " + labels[a]);
}

FiniteField prime_field(unsigned p) {
    std::vector<std::string> labels;
    std::vector<std::vector<Scalar>> add(p, std::vector<Scalar>(p));
    std::vector<std::vector<Scalar>> mul(p, std::vector<Scalar>(p));
    for (unsigned i = 0; i < p; ++i) {
        labels.push_back(std::to_string(i));
        for (unsigned j = 0; j < p; ++j) {
            add[i][j] = (i + j) % p;
            mul[i][j] = (i * j) % p;
        }
    }
    return FiniteField::make(std::move(labels), std::move(add), std::move(mul), 0, 1);
}

}  // namespace hvs
