#include "hvs/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace hvs::dsl {

namespace {

struct Tok {
    std::string text;
    std::size_t line = 0;
    std::size_t col = 0;
};

const char* const kReserved[] = {"field", "space", "bfs",  "end", "elements",
                                 "carrier", "params", "zero", "one", "add",
                                 "mul",   "pos",   "neg",  "o"};

bool is_reserved(const std::string& word) {
    return std::find(std::begin(kReserved), std::end(kReserved), word) !=
           std::end(kReserved);
}

bool is_label(const std::string& word) {
    if (word.empty() || is_reserved(word)) return false;
    return std::all_of(word.begin(), word.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

[[noreturn]] void fail(const Tok& at, const std::string& message) {
    throw ParseError(at.line, at.col, message, at.text);
}

bool word_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' ||
           c == '/' || c == '-' || c == '+';
}

std::vector<Tok> tokenize_line(const std::string& line, std::size_t lineno) {
    std::vector<Tok> toks;
    std::size_t i = 0;
    while (i < line.size()) {
        char c = line[i];
        if (c == '#') break;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == ':' || c == '=' || c == '{' || c == '}' || c == ',') {
            toks.push_back({std::string(1, c), lineno, i + 1});
            ++i;
            continue;
        }
        if (word_char(c)) {
            std::size_t start = i;
            while (i < line.size() && word_char(line[i])) ++i;
            toks.push_back({line.substr(start, i - start), lineno, start + 1});
            continue;
        }
        toks.push_back({std::string(1, c), lineno, i + 1});
        fail(toks.back(), "unexpected character");
    }
    return toks;
}

struct Statement {
    std::vector<Tok> toks;
    const Tok& at(std::size_t i) const { return toks[i]; }
    std::size_t size() const { return toks.size(); }
};

// raw collected rows, resolved when the block ends
struct RawRow {
    Tok key;                 // row label (or first key token)
    std::vector<Tok> values;
};

struct FieldBuilder {
    Tok header;
    std::string name;
    std::vector<Tok> elements;
    std::optional<Tok> zero, one;
    std::vector<RawRow> add_rows, mul_rows;
};

struct HyperCell {
    Tok scalar;
    Tok vector;
    std::vector<Tok> members;
};

struct SpaceBuilder {
    Tok header;
    std::string name;
    std::optional<Tok> field_ref;
    std::vector<Tok> carrier;
    std::optional<Tok> zero;
    std::vector<RawRow> add_rows;
    std::vector<HyperCell> cells;
};

struct BfsBuilder {
    Tok header;
    std::string name;
    std::optional<Tok> space_ref;
    std::vector<Tok> params;
    std::vector<RawRow> pos_rows, neg_rows;
};

class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Document run() {
        std::istringstream in(text_);
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            auto toks = tokenize_line(line, lineno);
            if (toks.empty()) continue;
            dispatch(Statement{std::move(toks)});
        }
        if (field_ || space_ || bfs_) {
            Tok eof{"", lineno + 1, 1};
            fail(eof, "unterminated block (missing 'end')");
        }
        return std::move(doc_);
    }

private:
    void dispatch(const Statement& st) {
        const std::string& head = st.at(0).text;
        if (!field_ && !space_ && !bfs_) {
            if (head == "field") start_block(st, field_);
            else if (head == "space") start_block(st, space_);
            else if (head == "bfs") start_block(st, bfs_);
            else fail(st.at(0), "expected 'field', 'space' or 'bfs'");
            return;
        }
        if (head == "end") {
            if (st.size() != 1) fail(st.at(1), "unexpected token after 'end'");
            if (field_) finish_field(st.at(0));
            else if (space_) finish_space(st.at(0));
            else finish_bfs(st.at(0));
            return;
        }
        if (field_) field_statement(st);
        else if (space_) space_statement(st);
        else bfs_statement(st);
    }

    template <typename B>
    void start_block(const Statement& st, std::optional<B>& slot) {
        if (st.size() != 2) fail(st.at(0), "expected exactly one name after '" +
                                               st.at(0).text + "'");
        if (!is_label(st.at(1).text)) fail(st.at(1), "invalid name");
        slot.emplace();
        slot->header = st.at(1);
        slot->name = st.at(1).text;
    }

    // --- shared statement helpers ------------------------------------------

    // key ':' values...
    std::vector<Tok> keyed_values(const Statement& st, std::size_t key_len,
                                  std::size_t min_values) {
        if (st.size() < key_len + 1 || st.at(key_len).text != ":") {
            fail(st.at(std::min(key_len, st.size() - 1)), "expected ':'");
        }
        std::vector<Tok> values(
            st.toks.begin() + static_cast<std::ptrdiff_t>(key_len) + 1, st.toks.end());
        if (values.size() < min_values) {
            fail(st.at(st.size() - 1), "expected at least " +
                                           std::to_string(min_values) +
                                           " value(s) after ':'");
        }
        return values;
    }

    void expect_labels(const std::vector<Tok>& toks) {
        for (const Tok& t : toks) {
            if (!is_label(t.text)) fail(t, "invalid element id");
        }
    }

    void unique_key(const std::vector<RawRow>& rows, const Tok& key,
                    const std::string& what) {
        for (const auto& row : rows) {
            if (row.key.text == key.text) fail(key, "duplicate " + what);
        }
    }

    // --- field blocks -------------------------------------------------------

    void field_statement(const Statement& st) {
        FieldBuilder& b = *field_;
        const std::string& head = st.at(0).text;
        if (head == "elements") {
            if (!b.elements.empty()) fail(st.at(0), "duplicate 'elements'");
            b.elements = keyed_values(st, 1, 1);
            expect_labels(b.elements);
        } else if (head == "zero" || head == "one") {
            auto& slot = head == "zero" ? b.zero : b.one;
            if (slot) fail(st.at(0), "duplicate '" + head + "'");
            auto values = keyed_values(st, 1, 1);
            if (values.size() != 1) fail(values[1], "expected a single element id");
            slot = values[0];
        } else if (head == "add" || head == "mul") {
            if (st.size() < 2) fail(st.at(0), "expected row label");
            auto& rows = head == "add" ? b.add_rows : b.mul_rows;
            unique_key(rows, st.at(1), "'" + head + "' row");
            rows.push_back({st.at(1), keyed_values(st, 2, 1)});
        } else {
            fail(st.at(0), "unexpected statement in field block");
        }
    }

    std::map<std::string, std::size_t> index_of(const std::vector<Tok>& labels) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!index.emplace(labels[i].text, i).second) {
                fail(labels[i], "duplicate element id");
            }
        }
        return index;
    }

    template <typename Id>
    std::vector<std::vector<Id>> resolve_table(
        const std::vector<RawRow>& rows, const std::vector<Tok>& labels,
        const std::map<std::string, std::size_t>& index, const Tok& end_tok,
        const std::string& what) {
        std::vector<std::vector<Id>> table(labels.size());
        for (const RawRow& row : rows) {
            auto it = index.find(row.key.text);
            if (it == index.end()) fail(row.key, "unknown element id");
            if (row.values.size() != labels.size()) {
                fail(row.key, what + " row needs exactly " +
                                  std::to_string(labels.size()) + " entries");
            }
            auto& dest = table[it->second];
            for (const Tok& t : row.values) {
                auto jt = index.find(t.text);
                if (jt == index.end()) fail(t, "unknown element id");
                dest.push_back(static_cast<Id>(jt->second));
            }
        }
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (table[i].empty()) {
                fail(end_tok, "missing " + what + " row for '" + labels[i].text + "'");
            }
        }
        return table;
    }

    void finish_field(const Tok& end_tok) {
        FieldBuilder& b = *field_;
        if (doc_.fields.count(b.name)) fail(b.header, "duplicate field name");
        if (b.elements.empty()) fail(end_tok, "field block is missing 'elements'");
        if (!b.zero) fail(end_tok, "field block is missing 'zero'");
        if (!b.one) fail(end_tok, "field block is missing 'one'");
        auto index = index_of(b.elements);
        auto lookup = [&](const Tok& t) {
            auto it = index.find(t.text);
            if (it == index.end()) fail(t, "unknown element id");
            return static_cast<Scalar>(it->second);
        };
        auto add = resolve_table<Scalar>(b.add_rows, b.elements, index, end_tok, "add");
        auto mul = resolve_table<Scalar>(b.mul_rows, b.elements, index, end_tok, "mul");
        std::vector<std::string> labels;
        for (const Tok& t : b.elements) labels.push_back(t.text);
        try {
            doc_.fields.emplace(b.name,
                                FiniteField::make(std::move(labels), std::move(add),
                                                  std::move(mul), lookup(*b.zero),
                                                  lookup(*b.one)));
        } catch (const Error& e) {
            fail(b.header, e.what());
        }
        field_.reset();
    }

    // --- space blocks --------------------------------------------------------

    void space_statement(const Statement& st) {
        SpaceBuilder& b = *space_;
        const std::string& head = st.at(0).text;
        if (head == "field") {
            if (b.field_ref) fail(st.at(0), "duplicate 'field'");
            auto values = keyed_values(st, 1, 1);
            if (values.size() != 1) fail(values[1], "expected a single field name");
            b.field_ref = values[0];
        } else if (head == "carrier") {
            if (!b.carrier.empty()) fail(st.at(0), "duplicate 'carrier'");
            b.carrier = keyed_values(st, 1, 1);
            expect_labels(b.carrier);
        } else if (head == "zero") {
            if (b.zero) fail(st.at(0), "duplicate 'zero'");
            auto values = keyed_values(st, 1, 1);
            if (values.size() != 1) fail(values[1], "expected a single element id");
            b.zero = values[0];
        } else if (head == "add") {
            if (st.size() < 2) fail(st.at(0), "expected row label");
            unique_key(b.add_rows, st.at(1), "'add' row");
            b.add_rows.push_back({st.at(1), keyed_values(st, 2, 1)});
        } else {
            hyperop_statement(st);
        }
    }

    // SCALAR o VECTOR = { a , b }
    void hyperop_statement(const Statement& st) {
        SpaceBuilder& b = *space_;
        if (st.size() < 6 || st.at(1).text != "o") {
            fail(st.at(0), "expected 'add', 'carrier', 'field', 'zero' or a "
                           "hyperop cell like '1 o 0 = {0,2}'");
        }
        if (!is_label(st.at(0).text)) fail(st.at(0), "invalid scalar id");
        if (!is_label(st.at(2).text)) fail(st.at(2), "invalid element id");
        if (st.at(3).text != "=") fail(st.at(3), "expected '='");
        if (st.at(4).text != "{") fail(st.at(4), "expected '{'");
        HyperCell cell{st.at(0), st.at(2), {}};
        std::size_t i = 5;
        if (st.at(i).text == "}") {
            if (i + 1 != st.size()) fail(st.at(i + 1), "unexpected token after '}'");
            fail(st.at(4), "empty hyperop cell");
        }
        while (true) {
            if (i >= st.size()) fail(st.at(st.size() - 1), "unterminated cell");
            if (!is_label(st.at(i).text)) fail(st.at(i), "invalid element id");
            cell.members.push_back(st.at(i));
            ++i;
            if (i >= st.size()) fail(st.at(st.size() - 1), "unterminated cell");
            if (st.at(i).text == ",") {
                ++i;
                continue;
            }
            if (st.at(i).text == "}") {
                if (i + 1 != st.size()) fail(st.at(i + 1), "unexpected token after '}'");
                break;
            }
            fail(st.at(i), "expected ',' or '}'");
        }
        for (const HyperCell& existing : b.cells) {
            if (existing.scalar.text == cell.scalar.text &&
                existing.vector.text == cell.vector.text) {
                fail(cell.scalar, "duplicate hyperop cell");
            }
        }
        b.cells.push_back(std::move(cell));
    }

    void finish_space(const Tok& end_tok) {
        SpaceBuilder& b = *space_;
        if (doc_.spaces.count(b.name)) fail(b.header, "duplicate space name");
        if (!b.field_ref) fail(end_tok, "space block is missing 'field'");
        if (b.carrier.empty()) fail(end_tok, "space block is missing 'carrier'");
        if (!b.zero) fail(end_tok, "space block is missing 'zero'");
        auto field_it = doc_.fields.find(b.field_ref->text);
        if (field_it == doc_.fields.end()) fail(*b.field_ref, "unknown field");
        const FiniteField& field = field_it->second;

        auto index = index_of(b.carrier);
        auto add = resolve_table<Elem>(b.add_rows, b.carrier, index, end_tok, "add");
        auto zero_it = index.find(b.zero->text);
        if (zero_it == index.end()) fail(*b.zero, "unknown element id");

        std::map<std::string, std::size_t> scalar_index;
        for (std::size_t i = 0; i < field.labels.size(); ++i) {
            scalar_index.emplace(field.labels[i], i);
        }
        std::vector<std::vector<std::vector<Elem>>> hyperop(
            field.size(), std::vector<std::vector<Elem>>(b.carrier.size()));
        std::vector<std::vector<bool>> seen(field.size(),
                                            std::vector<bool>(b.carrier.size(), false));
        for (const HyperCell& cell : b.cells) {
            auto s = scalar_index.find(cell.scalar.text);
            if (s == scalar_index.end()) fail(cell.scalar, "unknown scalar id");
            auto x = index.find(cell.vector.text);
            if (x == index.end()) fail(cell.vector, "unknown element id");
            auto& dest = hyperop[s->second][x->second];
            for (const Tok& t : cell.members) {
                auto e = index.find(t.text);
                if (e == index.end()) fail(t, "unknown element id");
                dest.push_back(static_cast<Elem>(e->second));
            }
            seen[s->second][x->second] = true;
        }
        for (std::size_t s = 0; s < field.size(); ++s) {
            for (std::size_t x = 0; x < b.carrier.size(); ++x) {
                if (!seen[s][x]) {
                    fail(end_tok, "missing hyperop cell (" + field.labels[s] + "," +
                                      b.carrier[x].text + ")");
                }
            }
        }
        std::vector<std::string> labels;
        for (const Tok& t : b.carrier) labels.push_back(t.text);
        try {
            auto space = std::make_shared<const HyperVectorSpace>(HyperVectorSpace::make(
                std::move(labels), std::move(add),
                static_cast<Elem>(zero_it->second), field, std::move(hyperop)));
            doc_.spaces.emplace(b.name,
                                Document::SpaceEntry{b.field_ref->text, std::move(space)});
        } catch (const Error& e) {
            fail(b.header, e.what());
        }
        space_.reset();
    }

    // --- bfs blocks -----------------------------------------------------------

    void bfs_statement(const Statement& st) {
        BfsBuilder& b = *bfs_;
        const std::string& head = st.at(0).text;
        if (head == "space") {
            if (b.space_ref) fail(st.at(0), "duplicate 'space'");
            auto values = keyed_values(st, 1, 1);
            if (values.size() != 1) fail(values[1], "expected a single space name");
            b.space_ref = values[0];
        } else if (head == "params") {
            if (!b.params.empty()) fail(st.at(0), "duplicate 'params'");
            b.params = keyed_values(st, 1, 1);
            expect_labels(b.params);
        } else if (head == "pos" || head == "neg") {
            if (st.size() < 2) fail(st.at(0), "expected parameter id");
            auto& rows = head == "pos" ? b.pos_rows : b.neg_rows;
            unique_key(rows, st.at(1), "'" + head + "' row");
            rows.push_back({st.at(1), keyed_values(st, 2, 1)});
        } else {
            fail(st.at(0), "unexpected statement in bfs block");
        }
    }

    Rational parse_grade(const Tok& t) {
        try {
            return Rational::parse(t.text);
        } catch (const Error&) {
            fail(t, "malformed rational");
        }
    }

    void finish_bfs(const Tok& end_tok) {
        BfsBuilder& b = *bfs_;
        if (doc_.bfs_sets.count(b.name)) fail(b.header, "duplicate bfs name");
        if (!b.space_ref) fail(end_tok, "bfs block is missing 'space'");
        if (b.params.empty()) fail(end_tok, "bfs block is missing 'params'");
        auto space_it = doc_.spaces.find(b.space_ref->text);
        if (space_it == doc_.spaces.end()) fail(*b.space_ref, "unknown space");
        const auto& space = space_it->second.space;
        const std::size_t n = space->size();

        std::map<std::string, std::size_t> param_index;
        for (std::size_t i = 0; i < b.params.size(); ++i) {
            if (!param_index.emplace(b.params[i].text, i).second) {
                fail(b.params[i], "duplicate parameter id");
            }
        }
        std::vector<BipolarFuzzySet> grades(b.params.size());
        auto fill = [&](const std::vector<RawRow>& rows, bool positive) {
            for (const RawRow& row : rows) {
                auto it = param_index.find(row.key.text);
                if (it == param_index.end()) fail(row.key, "unknown parameter id");
                if (row.values.size() != n) {
                    fail(row.key, "grade row needs exactly " + std::to_string(n) +
                                      " entries (one per carrier element)");
                }
                auto& dest = positive ? grades[it->second].pos : grades[it->second].neg;
                for (const Tok& t : row.values) {
                    Rational r = parse_grade(t);
                    if (positive && !is_unit_grade(r)) {
                        fail(t, "grade out of range [0,1]");
                    }
                    if (!positive && !is_negative_unit_grade(r)) {
                        fail(t, "grade out of range [-1,0]");
                    }
                    dest.push_back(r);
                }
            }
        };
        fill(b.pos_rows, true);
        fill(b.neg_rows, false);
        for (std::size_t i = 0; i < b.params.size(); ++i) {
            if (grades[i].pos.empty()) {
                fail(end_tok, "missing pos row for parameter '" + b.params[i].text + "'");
            }
            if (grades[i].neg.empty()) {
                fail(end_tok, "missing neg row for parameter '" + b.params[i].text + "'");
            }
        }
        std::vector<std::string> params;
        for (const Tok& t : b.params) params.push_back(t.text);
        try {
            doc_.bfs_sets.emplace(
                b.name, Document::BfsEntry{b.space_ref->text,
                                           BipolarFuzzySoftSet::make(
                                               space, std::move(params),
                                               std::move(grades))});
        } catch (const Error& e) {
            fail(b.header, e.what());
        }
        bfs_.reset();
    }

    const std::string& text_;
    Document doc_;
    std::optional<FieldBuilder> field_;
    std::optional<SpaceBuilder> space_;
    std::optional<BfsBuilder> bfs_;
};

void write_row(std::ostream& out, const std::string& key,
               const std::vector<std::string>& values) {
    out << "  " << key << ":";
    for (const auto& v : values) out << " " << v;
    out << "\n";
}

}  // namespace

ParseError::ParseError(std::size_t line_, std::size_t column_,
                       const std::string& message_, std::string token_)
    : Error("line " + std::to_string(line_) + ", col " + std::to_string(column_) +
            ": " + message_),
      line(line_),
      column(column_),
      message(message_),
      token(std::move(token_)) {}

Document parse_document(const std::string& text) { return Parser(text).run(); }

std::string serialize_document(const Document& doc) {
    std::ostringstream out;
    bool first = true;
    auto gap = [&] {
        if (!first) out << "\n";
        first = false;
    };
    for (const auto& entry : doc.fields) {
        const std::string& name = entry.first;
        const FiniteField& field = entry.second;
        gap();
        out << "field " << name << "\n";
        write_row(out, "elements", field.labels);
        write_row(out, "zero", {field.labels[field.zero]});
        write_row(out, "one", {field.labels[field.one]});
        auto rows = [&](const char* key, const std::vector<std::vector<Scalar>>& t) {
            for (std::size_t i = 0; i < field.labels.size(); ++i) {
                std::vector<std::string> values;
                for (Scalar s : t[i]) values.push_back(field.labels[s]);
                write_row(out, std::string(key) + " " + field.labels[i], values);
            }
        };
        rows("add", field.add);
        rows("mul", field.mul);
        out << "end\n";
    }
    for (const auto& [name, entry] : doc.spaces) {
        gap();
        const HyperVectorSpace& v = *entry.space;
        out << "space " << name << "\n";
        write_row(out, "field", {entry.field_name});
        write_row(out, "carrier", v.labels);
        write_row(out, "zero", {v.labels[v.zero]});
        for (std::size_t i = 0; i < v.labels.size(); ++i) {
            std::vector<std::string> values;
            for (Elem e : v.add[i]) values.push_back(v.labels[e]);
            write_row(out, "add " + v.labels[i], values);
        }
        for (std::size_t b = 0; b < v.field.size(); ++b) {
            for (std::size_t x = 0; x < v.size(); ++x) {
                out << "  " << v.field.labels[b] << " o " << v.labels[x] << " = {";
                const auto& cell = v.hyperop[b][x];
                for (std::size_t i = 0; i < cell.size(); ++i) {
                    if (i) out << ",";
                    out << v.labels[cell[i]];
                }
                out << "}\n";
            }
        }
        out << "end\n";
    }
    for (const auto& [name, entry] : doc.bfs_sets) {
        gap();
        const BipolarFuzzySoftSet& g = entry.bfs;
        out << "bfs " << name << "\n";
        write_row(out, "space", {entry.space_name});
        write_row(out, "params", g.params());
        for (std::size_t i = 0; i < g.param_count(); ++i) {
            std::vector<std::string> pos, neg;
            for (Elem x = 0; x < g.space().size(); ++x) {
                pos.push_back(g.pos(i, x).str());
                neg.push_back(g.neg(i, x).str());
            }
            write_row(out, "pos " + g.params()[i], pos);
            write_row(out, "neg " + g.params()[i], neg);
        }
        out << "end\n";
    }
    return out.str();
}

}  // namespace hvs::dsl
