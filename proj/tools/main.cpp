// hvs: command line front end for the finite hypervector space engine.
//
// Exit codes: 0 success / property holds; 1 a check ran and the answer is
// false (or checkers disagreed); 2 malformed input (parse error, unknown
// name, out-of-range argument); 3 capacity guard or theorem-hypothesis
// violation.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hvs/bfs_set.hpp"
#include "hvs/constructions.hpp"
#include "hvs/dsl.hpp"
#include "hvs/errors.hpp"
#include "hvs/hypervector_space.hpp"
#include "hvs/oracle.hpp"
#include "hvs/rational.hpp"

using json = nlohmann::ordered_json;

namespace {

struct CheckFailed {};  // verdict false: exit 1, output already printed

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) throw hvs::StructuralError("cannot open file '" + path + "'");
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

hvs::dsl::Document load(const std::string& path) {
    return hvs::dsl::parse_document(slurp(path));
}

const hvs::dsl::Document::SpaceEntry& find_space(const hvs::dsl::Document& doc,
                                                 const std::string& name) {
    auto it = doc.spaces.find(name);
    if (it == doc.spaces.end()) {
        throw hvs::StructuralError("unknown space '" + name + "'");
    }
    return it->second;
}

const hvs::dsl::Document::BfsEntry& find_bfs(const hvs::dsl::Document& doc,
                                             const std::string& name) {
    auto it = doc.bfs_sets.find(name);
    if (it == doc.bfs_sets.end()) {
        throw hvs::StructuralError("unknown bfs set '" + name + "'");
    }
    return it->second;
}

hvs::Scalar find_scalar(const hvs::FiniteField& k, const std::string& label) {
    for (hvs::Scalar b = 0; b < k.size(); ++b) {
        if (k.labels[b] == label) return b;
    }
    throw hvs::StructuralError("unknown scalar '" + label + "'");
}

hvs::VectorSubset parse_subset(const hvs::HyperVectorSpace& v, const std::string& arg) {
    hvs::VectorSubset out;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) {
        const auto begin = token.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = token.find_last_not_of(" \t");
        const std::string label = token.substr(begin, end - begin + 1);
        bool found = false;
        for (hvs::Elem x = 0; x < v.size(); ++x) {
            if (v.labels[x] == label) {
                out.push_back(x);
                found = true;
                break;
            }
        }
        if (!found) throw hvs::StructuralError("unknown element '" + label + "'");
    }
    return hvs::normalize_subset(std::move(out));
}

std::vector<hvs::Rational> parse_levels(const std::string& arg) {
    std::vector<hvs::Rational> out;
    std::string token;
    std::istringstream in(arg);
    while (std::getline(in, token, ',')) out.push_back(hvs::Rational::parse(token));
    return out;
}

// serializes a document holding just what the result needs: its field, its
// space and the result bfs set
std::string result_document(const hvs::dsl::Document& src, const std::string& space_name,
                            const std::string& as, const hvs::BipolarFuzzySoftSet& bfs) {
    const auto& entry = find_space(src, space_name);
    hvs::dsl::Document out;
    out.fields.emplace(entry.field_name, src.fields.at(entry.field_name));
    out.spaces.emplace(space_name, entry);
    out.bfs_sets.emplace(as, hvs::dsl::Document::BfsEntry{space_name, bfs});
    return hvs::dsl::serialize_document(out);
}

json grade_rows(const hvs::BipolarFuzzySoftSet& g) {
    json rows = json::object();
    for (std::size_t e = 0; e < g.param_count(); ++e) {
        json pos = json::array(), neg = json::array();
        for (hvs::Elem x = 0; x < g.space().size(); ++x) {
            pos.push_back(g.pos(e, x).str());
            neg.push_back(g.neg(e, x).str());
        }
        rows[g.params()[e]] = {{"pos", pos}, {"neg", neg}};
    }
    return rows;
}

// --- subcommand implementations --------------------------------------------

void run_check(const std::string& file, const std::string& space_name, bool as_json) {
    auto doc = load(file);
    const auto& v = *find_space(doc, space_name).space;
    hvs::AxiomReport r = hvs::check_axioms(v);

    auto witness_text = [&](const std::optional<hvs::AxiomWitness>& w) {
        return w ? hvs::describe(v, *w) : std::string();
    };
    if (as_json) {
        json out;
        json axioms = json::object();
        const std::pair<const char*, const hvs::AxiomReport::Entry*> entries[] = {
            {"h1", &r.h1}, {"h2", &r.h2}, {"h3", &r.h3}, {"h4", &r.h4}, {"h5", &r.h5}};
        for (auto [name, e] : entries) {
            axioms[name] = {{"pass", e->pass}};
            if (!e->pass) axioms[name]["witness"] = witness_text(e->witness);
        }
        out["axioms"] = axioms;
        out["srd"] = r.srd;
        out["sld"] = r.sld;
        out["invertible"] = r.invertible;
        if (!r.srd) out["srd_witness"] = witness_text(r.srd_witness);
        if (!r.sld) out["sld_witness"] = witness_text(r.sld_witness);
        if (!r.invertible) out["invertible_witness"] = witness_text(r.invertible_witness);
        std::cout << out.dump(2) << "\n";
    } else {
        const std::pair<const char*, const hvs::AxiomReport::Entry*> entries[] = {
            {"H1", &r.h1}, {"H2", &r.h2}, {"H3", &r.h3}, {"H4", &r.h4}, {"H5", &r.h5}};
        for (auto [name, e] : entries) {
            std::cout << name << ": " << (e->pass ? "pass" : "fail");
            if (!e->pass) std::cout << " (" << witness_text(e->witness) << ")";
            std::cout << "\n";
        }
        auto flag = [&](const char* name, bool value,
                        const std::optional<hvs::AxiomWitness>& w) {
            std::cout << name << ": " << (value ? "true" : "false");
            if (!value && w) std::cout << " (" << witness_text(w) << ")";
            std::cout << "\n";
        };
        flag("srd", r.srd, r.srd_witness);
        flag("sld", r.sld, r.sld_witness);
        flag("invertible", r.invertible, r.invertible_witness);
    }
    if (!r.all_pass()) throw CheckFailed{};
}

void run_check_bfs(const std::string& file, const std::string& bfs_name,
                   const std::string& method, bool as_json) {
    auto doc = load(file);
    const auto& g = find_bfs(doc, bfs_name).bfs;
    const bool sld = hvs::check_axioms(g.space()).sld;

    struct Row {
        std::string method;
        std::optional<bool> verdict;  // nullopt = refused
        std::string note;
    };
    std::vector<Row> rows;
    auto run_method = [&](const std::string& name) {
        if (name == "direct") {
            auto w = hvs::bfs_hvs_violation(g);
            rows.push_back({name, !w, w ? describe(g, *w) : ""});
        } else if (name == "iff1") {
            auto w = hvs::iff1_violation(g);
            rows.push_back({name, !w, w ? describe(g, *w) : ""});
        } else if (name == "levels") {
            auto w = hvs::levels_violation(g);
            rows.push_back({name, !w, w ? describe(g, *w) : ""});
        } else if (name == "combo") {
            auto w = hvs::combo_violation(g);
            rows.push_back({name, !w, w ? describe(g, *w) : ""});
        } else if (name == "scalarsum") {
            auto w = hvs::scalarsum_violation(g);
            rows.push_back({name, !w, w ? describe(g, *w) : ""});
        }
    };
    if (method == "all") {
        for (const char* name : {"direct", "iff1", "levels"}) run_method(name);
        for (const char* name : {"combo", "scalarsum"}) {
            if (sld) {
                run_method(name);
            } else {
                rows.push_back({name, std::nullopt,
                                "refused: space is not strongly left distributive"});
            }
        }
    } else {
        run_method(method);
    }

    bool any_true = false, any_false = false;
    for (const Row& row : rows) {
        if (row.verdict) (*row.verdict ? any_true : any_false) = true;
    }
    const bool disagree = any_true && any_false;

    if (as_json) {
        json out;
        json methods = json::object();
        for (const Row& row : rows) {
            if (row.verdict) {
                methods[row.method] = {{"verdict", *row.verdict}};
                if (!row.note.empty()) methods[row.method]["witness"] = row.note;
            } else {
                methods[row.method] = {{"refused", row.note}};
            }
        }
        out["methods"] = methods;
        out["disagreement"] = disagree;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Row& row : rows) {
            std::cout << row.method << ": ";
            if (row.verdict) {
                std::cout << (*row.verdict ? "true" : "false");
                if (!row.note.empty()) std::cout << " (" << row.note << ")";
            } else {
                std::cout << row.note;
            }
            std::cout << "\n";
        }
        if (disagree) std::cout << "disagreement: the checkers are inconsistent\n";
    }
    if (disagree || any_false) throw CheckFailed{};
}

void run_level(const std::string& file, const std::string& bfs_name,
               const std::string& alpha, const std::string& beta, bool as_json) {
    auto doc = load(file);
    const auto& g = find_bfs(doc, bfs_name).bfs;
    auto cuts = hvs::level_soft_set(g, hvs::Rational::parse(alpha),
                                    hvs::Rational::parse(beta));
    if (as_json) {
        json out;
        out["alpha"] = cuts.alpha.str();
        out["beta"] = cuts.beta.str();
        json per_param = json::object();
        for (std::size_t e = 0; e < cuts.params.size(); ++e) {
            json members = json::array();
            for (hvs::Elem x : cuts.cuts[e]) members.push_back(g.space().labels[x]);
            per_param[cuts.params[e]] = members;
        }
        out["cuts"] = per_param;
        std::cout << out.dump(2) << "\n";
    } else {
        for (std::size_t e = 0; e < cuts.params.size(); ++e) {
            std::cout << cuts.params[e] << ": " << g.space().label_set(cuts.cuts[e])
                      << "\n";
        }
    }
}

void run_span(const std::string& file, const std::string& space_name,
              const std::string& set_arg, bool as_json) {
    auto doc = load(file);
    const auto& v = *find_space(doc, space_name).space;
    auto result = hvs::span(v, parse_subset(v, set_arg));
    if (as_json) {
        json out = json::array();
        for (hvs::Elem x : result) out.push_back(v.labels[x]);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << v.label_set(result) << "\n";
    }
}

void run_enumerate(const std::string& file, const std::string& space_name,
                   bool as_json) {
    auto doc = load(file);
    const auto& v = *find_space(doc, space_name).space;
    auto all = hvs::enumerate_subhyperspaces(v);
    if (as_json) {
        json out = json::array();
        for (const auto& s : all) {
            json members = json::array();
            for (hvs::Elem x : s) members.push_back(v.labels[x]);
            out.push_back(members);
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& s : all) std::cout << v.label_set(s) << "\n";
    }
}

void run_generate(const std::string& file, const std::string& bfs_name,
                  const std::string& as, bool as_json) {
    auto doc = load(file);
    const auto& entry = find_bfs(doc, bfs_name);
    auto out = hvs::generate_bfs_hvs(entry.bfs);
    const auto& v = entry.bfs.space();

    if (as_json) {
        json trace = json::array();
        for (std::size_t i = 0; i < out.shells.chain.size(); ++i) {
            json step;
            step["seed"] = json::array();
            for (hvs::Elem x : out.shells.seeds[i]) step["seed"].push_back(v.labels[x]);
            step["span"] = json::array();
            for (hvs::Elem x : out.shells.chain[i]) step["span"].push_back(v.labels[x]);
            step["shell"] = json::array();
            for (hvs::Elem x : out.shells.shells[i]) step["shell"].push_back(v.labels[x]);
            json grades = json::object();
            for (std::size_t e = 0; e < entry.bfs.param_count(); ++e) {
                grades[entry.bfs.params()[e]] = {out.shells.pos_grades[i][e].str(),
                                                 out.shells.neg_grades[i][e].str()};
            }
            step["grades"] = grades;
            trace.push_back(step);
        }
        json root;
        root["chain"] = trace;
        root["result"] = grade_rows(out.result);
        std::cout << root.dump(2) << "\n";
    } else {
        for (std::size_t i = 0; i < out.shells.chain.size(); ++i) {
            std::cout << "# step " << i << ": seed " << v.label_set(out.shells.seeds[i])
                      << " span " << v.label_set(out.shells.chain[i]) << " grades";
            for (std::size_t e = 0; e < entry.bfs.param_count(); ++e) {
                std::cout << " " << entry.bfs.params()[e] << "=("
                          << out.shells.pos_grades[i][e].str() << ","
                          << out.shells.neg_grades[i][e].str() << ")";
            }
            std::cout << "\n";
        }
        std::cout << result_document(doc, entry.space_name, as, out.result);
    }
}

void run_verify(const std::string& file, const std::string& space_name, std::uint64_t n,
                std::uint64_t seed, const std::string& pos_grid,
                const std::string& neg_grid, bool as_json) {
    auto doc = load(file);
    auto grid = hvs::oracle::GradeGrid::make(parse_levels(pos_grid),
                                             parse_levels(neg_grid));
    auto report =
        hvs::oracle::equivalence_suite(find_space(doc, space_name).space, n, seed, grid);
    std::cout << (as_json ? hvs::oracle::to_json(report) + "\n"
                          : hvs::oracle::to_text(report));
    if (report.disagreement_count() != 0) throw CheckFailed{};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite hypervector spaces and bipolar fuzzy soft sets"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report instead of text");
    auto add_json_flag = [&as_json](CLI::App* sub) {
        sub->add_flag("--json", as_json, "emit a JSON report instead of text");
        return sub;
    };

    std::string file, space_name, bfs_name, other_name, set_arg;
    std::string alpha, beta, method = "all", mode, scalar, as = "result";
    std::uint64_t n = 200, seed = 42;
    std::string pos_grid = "0,1/2,1", neg_grid = "-1,-1/2,0";

    auto* check = add_json_flag(app.add_subcommand("check", "axiom report for a space"));
    check->add_option("file", file)->required();
    check->add_option("--space", space_name)->required();

    auto* check_bfs = add_json_flag(app.add_subcommand("check-bfs", "bfs-hvs verdict for a bfs set"));
    check_bfs->add_option("file", file)->required();
    check_bfs->add_option("--bfs", bfs_name)->required();
    check_bfs->add_option("--method", method)
        ->check(CLI::IsMember({"direct", "iff1", "levels", "combo", "scalarsum", "all"}));

    auto* level = add_json_flag(app.add_subcommand("level", "level cuts of a bfs set"));
    level->add_option("file", file)->required();
    level->add_option("--bfs", bfs_name)->required();
    level->add_option("--alpha", alpha)->required();
    level->add_option("--beta", beta)->required();

    auto* span_cmd = add_json_flag(app.add_subcommand("span", "span of a subset"));
    span_cmd->add_option("file", file)->required();
    span_cmd->add_option("--space", space_name)->required();
    span_cmd->add_option("--set", set_arg)->required();

    auto* sum = add_json_flag(app.add_subcommand("sum", "sum of two bfs sets"));
    sum->add_option("file", file)->required();
    sum->add_option("--bfs", bfs_name)->required();
    sum->add_option("--with", other_name)->required();
    sum->add_option("--as", as);

    auto* scale = add_json_flag(app.add_subcommand("scale", "scalar product of a bfs set"));
    scale->add_option("file", file)->required();
    scale->add_option("--bfs", bfs_name)->required();
    scale->add_option("--by", scalar)->required();
    scale->add_option("--as", as);

    auto* negate = add_json_flag(app.add_subcommand("negate", "negation of a bfs set"));
    negate->add_option("file", file)->required();
    negate->add_option("--bfs", bfs_name)->required();
    negate->add_option("--as", as);

    auto* generate = add_json_flag(app.add_subcommand("generate", "smallest enclosing bfs-hvs"));
    generate->add_option("file", file)->required();
    generate->add_option("--bfs", bfs_name)->required();
    generate->add_option("--as", as);

    auto* normalize = add_json_flag(app.add_subcommand("normalize", "shift or scale normalization"));
    normalize->add_option("file", file)->required();
    normalize->add_option("--bfs", bfs_name)->required();
    normalize->add_option("--mode", mode)->required()
        ->check(CLI::IsMember({"shift", "scale"}));
    normalize->add_option("--as", as);

    auto* verify = add_json_flag(app.add_subcommand("verify", "randomized theorem suite"));
    verify->add_option("file", file)->required();
    verify->add_option("--space", space_name)->required();
    verify->add_option("--n", n);
    verify->add_option("--seed", seed);
    verify->add_option("--pos-grid", pos_grid);
    verify->add_option("--neg-grid", neg_grid);

    auto* enumerate = add_json_flag(app.add_subcommand("enumerate-shs", "all subhyperspaces"));
    enumerate->add_option("file", file)->required();
    enumerate->add_option("--space", space_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*check) run_check(file, space_name, as_json);
        else if (*check_bfs) run_check_bfs(file, bfs_name, method, as_json);
        else if (*level) run_level(file, bfs_name, alpha, beta, as_json);
        else if (*span_cmd) run_span(file, space_name, set_arg, as_json);
        else if (*enumerate) run_enumerate(file, space_name, as_json);
        else if (*generate) run_generate(file, bfs_name, as, as_json);
        else if (*verify) run_verify(file, space_name, n, seed, pos_grid, neg_grid, as_json);
        else if (*sum) {
            auto doc = load(file);
            const auto& g = find_bfs(doc, bfs_name);
            const auto& h = find_bfs(doc, other_name);
            std::cout << result_document(doc, g.space_name, as,
                                         hvs::bfs_sum(g.bfs, h.bfs));
        } else if (*scale) {
            auto doc = load(file);
            const auto& g = find_bfs(doc, bfs_name);
            const hvs::Scalar b = find_scalar(g.bfs.space().field, scalar);
            std::cout << result_document(doc, g.space_name, as,
                                         hvs::bfs_scalar(b, g.bfs));
        } else if (*negate) {
            auto doc = load(file);
            const auto& g = find_bfs(doc, bfs_name);
            std::cout << result_document(doc, g.space_name, as, hvs::bfs_negate(g.bfs));
        } else if (*normalize) {
            auto doc = load(file);
            const auto& g = find_bfs(doc, bfs_name);
            auto result = mode == "shift" ? hvs::normalize_shift(g.bfs)
                                          : hvs::normalize_scale(g.bfs);
            std::cout << result_document(doc, g.space_name, as, result);
        }
    } catch (const CheckFailed&) {
        return 1;
    } catch (const hvs::CapacityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hvs::HypothesisError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hvs::ConstructionStuckError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const hvs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
