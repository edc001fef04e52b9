#include "nichols/io.hpp"

#include "nichols/errors.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace nichols {

namespace {

bool is_ident_start(char c)
{
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_ident_char(char c)
{
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// --- Spec files ------------------------------------------------------------

struct Value {
    bool is_list = false;
    std::string text;  // atoms only, trimmed
    std::vector<Value> items;
    int line = 0;
    int column = 0;
};

class SpecReader {
public:
    explicit SpecReader(std::string_view text) : text_(text) {}

    std::map<std::string, Value> read()
    {
        std::map<std::string, Value> entries;
        for (;;) {
            skip_blank(true);
            if (at_end()) break;
            const int key_line = line_, key_column = column_;
            if (!is_ident_start(peek())) fail("expected a key");
            std::string key;
            while (!at_end() && is_ident_char(peek())) key += get();
            skip_blank(false);
            if (at_end() || peek() != '=') fail("expected '=' after key '" + key + "'");
            get();
            skip_blank(false);
            Value v = value(false);
            skip_blank(false);
            if (!at_end() && peek() != '\n') fail("unexpected text after value");
            if (!entries.emplace(key, std::move(v)).second)
                throw ParseError("duplicate key '" + key + "'", key_line, key_column);
            keys_.emplace(key, std::pair{key_line, key_column});
        }
        return entries;
    }

    std::pair<int, int> key_position(const std::string& key) const { return keys_.at(key); }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    char get()
    {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    void skip_blank(bool newlines)
    {
        while (!at_end()) {
            const char c = peek();
            if (c == '#') {
                while (!at_end() && peek() != '\n') get();
            } else if (c == '\n' ? newlines : std::isspace(static_cast<unsigned char>(c))) {
                get();
            } else {
                break;
            }
        }
    }

    Value value(bool in_list)
    {
        Value v;
        v.line = line_;
        v.column = column_;
        if (!at_end() && peek() == '[') {
            get();
            v.is_list = true;
            skip_blank(true);
            if (!at_end() && peek() == ']') {
                get();
                return v;
            }
            for (;;) {
                skip_blank(true);
                v.items.push_back(value(true));
                skip_blank(true);
                if (at_end()) fail("unterminated '['");
                const char c = get();
                if (c == ']') break;
                if (c != ',') fail("expected ',' or ']'");
            }
            return v;
        }
        int depth = 0;
        std::string raw;
        while (!at_end()) {
            const char c = peek();
            if (c == '\n' || c == '#') break;
            if (depth == 0 && in_list && (c == ',' || c == ']')) break;
            if (c == '[' || c == ']') fail("unexpected bracket");
            if (c == '(') ++depth;
            if (c == ')') --depth;
            raw += get();
        }
        while (!raw.empty() && std::isspace(static_cast<unsigned char>(raw.back()))) raw.pop_back();
        if (raw.empty()) fail("expected a value");
        v.text = raw;
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
    std::map<std::string, std::pair<int, int>> keys_;
};

[[noreturn]] void fail_at(const Value& v, const std::string& what)
{
    throw ParseError(what, v.line, v.column);
}

int to_int(const Value& v)
{
    if (v.is_list) fail_at(v, "expected an integer");
    std::size_t used = 0;
    int out = 0;
    try {
        out = std::stoi(v.text, &used);
    } catch (const std::exception&) {
        fail_at(v, "expected an integer");
    }
    if (used != v.text.size()) fail_at(v, "expected an integer");
    return out;
}

const std::vector<Value>& list_of(const Value& v, std::size_t size, const char* what)
{
    if (!v.is_list) fail_at(v, std::string("expected a list for ") + what);
    if (v.items.size() != size)
        fail_at(v, std::string(what) + " must have " + std::to_string(size) + " entries, got " +
                       std::to_string(v.items.size()));
    return v.items;
}

}  // namespace

BraidingSpec parse_spec(std::string_view text)
{
    SpecReader reader(text);
    auto entries = reader.read();
    static const std::set<std::string> known{"dim", "names", "q", "cartan", "diag"};
    for (const auto& [key, v] : entries)
        if (!known.count(key)) {
            auto [l, c] = reader.key_position(key);
            throw ParseError("unknown key '" + key + "'", l, c);
        }
    if (!entries.count("dim")) throw ParseError("missing key 'dim'", 1, 1);
    const int dim = to_int(entries.at("dim"));
    if (dim < 1) fail_at(entries.at("dim"), "dim must be positive");
    const auto n = static_cast<std::size_t>(dim);

    std::vector<std::string> names;
    if (auto it = entries.find("names"); it != entries.end()) {
        std::set<std::string> seen;
        for (const auto& item : list_of(it->second, n, "names")) {
            if (item.is_list || !is_ident_start(item.text[0]) ||
                !std::all_of(item.text.begin(), item.text.end(), is_ident_char))
                fail_at(item, "generator names must be identifiers");
            if (item.text == "q") fail_at(item, "'q' is reserved for the formal variable");
            if (!seen.insert(item.text).second) fail_at(item, "duplicate generator name '" + item.text + "'");
            names.push_back(item.text);
        }
    }

    const bool has_q = entries.count("q"), has_cartan = entries.count("cartan");
    if (has_q && has_cartan) {
        auto [l, c] = reader.key_position("cartan");
        throw ParseError("'q' and 'cartan' are mutually exclusive", l, c);
    }
    if (!has_q && !has_cartan) throw ParseError("one of 'q' or 'cartan' is required", 1, 1);
    if (has_q && entries.count("diag")) {
        auto [l, c] = reader.key_position("diag");
        throw ParseError("'diag' only applies to 'cartan'", l, c);
    }

    if (has_q) {
        std::vector<std::vector<Scalar>> q;
        for (const auto& row : list_of(entries.at("q"), n, "q")) {
            q.emplace_back();
            for (const auto& item : list_of(row, n, "each row of q")) {
                if (item.is_list) fail_at(item, "expected a scalar");
                q.back().push_back(parse_scalar_at(item.text, item.line, item.column));
            }
        }
        return BraidingSpec(std::move(names), std::move(q));
    }

    std::vector<std::vector<int>> cartan;
    for (const auto& row : list_of(entries.at("cartan"), n, "cartan")) {
        cartan.emplace_back();
        for (const auto& item : list_of(row, n, "each row of cartan")) cartan.back().push_back(to_int(item));
    }
    std::vector<int> diag(n, 1);
    if (auto it = entries.find("diag"); it != entries.end()) {
        diag.clear();
        for (const auto& item : list_of(it->second, n, "diag")) {
            diag.push_back(to_int(item));
            if (diag.back() < 1) fail_at(item, "diag entries must be positive");
        }
    }
    return BraidingSpec::from_cartan(std::move(names), cartan, diag);
}

BraidingSpec load_spec(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error("cannot open spec file '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_spec(buffer.str());
}

// --- Elements ----------------------------------------------------------------

namespace {

class ElementParser {
public:
    ElementParser(std::string_view text, const BraidingSpec& spec) : text_(text), spec_(spec) {}

    TensorVector parse()
    {
        TensorVector out;
        skip();
        if (at_end()) fail("empty element");
        bool first = true;
        while (!at_end()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = peek() == '-' ? -1 : 1;
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            first = false;
            auto [coeff, word] = term();
            out.add_term(word, Scalar(sign) * coeff);
            skip();
        }
        return out;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    int column() const { return static_cast<int>(pos_) + 1; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, column()); }

    void skip()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    int integer(bool allow_sign)
    {
        std::size_t start = pos_;
        if (allow_sign && !at_end() && (peek() == '-' || peek() == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (digits == pos_) fail("expected an integer");
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    std::optional<int> exponent()
    {
        skip();
        if (at_end() || peek() != '^') return std::nullopt;
        ++pos_;
        skip();
        return integer(true);
    }

    std::pair<Scalar, Word> term()
    {
        Scalar coeff = 1;
        Word word;
        for (;;) {
            skip();
            if (at_end()) fail("expected a factor");
            const std::size_t start = pos_;
            const char c = peek();
            if (c == '(') {
                int depth = 0;
                do {
                    if (peek() == '(') ++depth;
                    if (peek() == ')') --depth;
                    ++pos_;
                } while (!at_end() && depth > 0);
                if (depth != 0) fail("unbalanced '('");
                exponent();
                coeff *= parse_scalar_at(text_.substr(start, pos_ - start), 1, static_cast<int>(start) + 1);
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                Rational r(integer(false));
                skip();
                if (!at_end() && peek() == '/') {
                    ++pos_;
                    skip();
                    const int den = integer(false);
                    if (den == 0) fail("division by zero");
                    r /= den;
                }
                coeff *= r;
            } else if (is_ident_start(c)) {
                std::string name;
                while (!at_end() && is_ident_char(peek())) name += text_[pos_++];
                if (name == "q") {
                    coeff *= RatFunc::q(exponent().value_or(1));
                } else {
                    const int letter = spec_.letter_index(name);
                    const int times = exponent().value_or(1);
                    if (times < 0) fail("letter exponents must be nonnegative");
                    word.insert(word.end(), static_cast<std::size_t>(times), letter);
                }
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            skip();
            if (at_end() || peek() != '*') break;
            ++pos_;
        }
        return {coeff, word};
    }

    std::string_view text_;
    const BraidingSpec& spec_;
    std::size_t pos_ = 0;
};

}  // namespace

TensorVector parse_element(std::string_view text, const BraidingSpec& spec)
{
    return ElementParser(text, spec).parse();
}

// --- Printing --------------------------------------------------------------

std::string format_word(const Word& w, const BraidingSpec& spec)
{
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t p = 0; p < w.size(); ++p) {
        if (p) out += "*";
        out += spec.names()[static_cast<std::size_t>(w[p])];
    }
    return out;
}

std::string format_vector(const TensorVector& v, const BraidingSpec& spec)
{
    if (v.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : v.terms()) {
        Scalar coeff = c;
        const bool negative = to_string(c)[0] == '-' && to_string(-c)[0] != '-';
        if (negative) coeff = -c;
        out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
        first = false;
        const std::string text = to_string(coeff);
        const bool bare = coeff.is_constant() || (coeff.is_polynomial() && coeff.num().is_monomial() && text[0] != '-');
        if (w.empty()) {
            out += bare ? text : "(" + text + ")";
        } else {
            if (!coeff.is_one()) out += (bare ? text : "(" + text + ")") + "*";
            out += format_word(w, spec);
        }
    }
    return out;
}

std::string format_multidegree(const Multidegree& m)
{
    std::string out = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(m[i]);
    }
    return out + "]";
}

}  // namespace nichols
