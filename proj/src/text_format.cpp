#include "pedalgeom/text_format.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace pedalgeom::text {

namespace {

bool is_key_start(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_key_char(char c) { return is_key_start(c) || is_digit(c) || c == '.'; }
bool is_symbol_char(char c) { return is_key_start(c) || is_digit(c) || c == '-'; }
bool is_number_char(char c) { return is_digit(c) || c == '-' || c == '+' || c == '.' || c == 'e' || c == 'E'; }

class LineParser {
public:
    LineParser(std::string_view line, std::size_t line_no) : s_(line), line_no_(line_no) {}

    // Returns false for blank and comment-only lines.
    bool entry(Entry& out) {
        skip_ws();
        if (done() || peek() == '#') {
            return false;
        }
        out.key = key();
        skip_ws();
        expect('=');
        skip_ws();
        out.value = value();
        skip_ws();
        if (!done() && peek() != '#') {
            fail("unexpected trailing characters");
        }
        return true;
    }

private:
    bool done() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }

    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError("line " + std::to_string(line_no_) + ", column " + std::to_string(pos_ + 1) + ": " + msg);
    }

    void skip_ws() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) {
            ++pos_;
        }
    }

    void expect(char c) {
        if (done() || peek() != c) {
            fail(std::string("expected '") + c + "'");
        }
        ++pos_;
    }

    std::string key() {
        if (done() || !is_key_start(peek())) {
            fail("expected a key");
        }
        const std::size_t start = pos_;
        while (!done() && is_key_char(peek())) {
            ++pos_;
        }
        return std::string(s_.substr(start, pos_ - start));
    }

    Value value() {
        if (done()) {
            fail("expected a value");
        }
        const char c = peek();
        if (c == '[') {
            return list();
        }
        if (c == '"') {
            return Value::string(quoted());
        }
        if (is_key_start(c)) {
            const std::size_t start = pos_;
            while (!done() && is_symbol_char(peek())) {
                ++pos_;
            }
            const std::string word(s_.substr(start, pos_ - start));
            if (word == "true") return Value::of(true);
            if (word == "false") return Value::of(false);
            if (word == "inf" || word == "nan" || word == "infinity") {
                pos_ = start;
                fail("non-finite numbers are not allowed");
            }
            return Value::symbol(word);
        }
        if (is_number_char(c)) {
            return number();
        }
        fail("unexpected character");
    }

    Value list() {
        expect('[');
        std::vector<Value> items;
        skip_ws();
        if (!done() && peek() == ']') {
            ++pos_;
            return Value::list(std::move(items));
        }
        while (true) {
            skip_ws();
            items.push_back(value());
            skip_ws();
            if (done()) {
                fail("unterminated list");
            }
            if (peek() == ']') {
                ++pos_;
                return Value::list(std::move(items));
            }
            expect(',');
        }
    }

    std::string quoted() {
        expect('"');
        std::string out;
        while (true) {
            if (done()) {
                fail("unterminated string");
            }
            const char c = s_[pos_++];
            if (c == '"') {
                return out;
            }
            if (c == '\\') {
                if (done()) {
                    fail("dangling escape");
                }
                const char e = s_[pos_++];
                if (e == 'n') out.push_back('\n');
                else if (e == '"' || e == '\\') out.push_back(e);
                else fail("unknown escape");
            } else {
                out.push_back(c);
            }
        }
    }

    Value number() {
        const std::size_t start = pos_;
        while (!done() && is_number_char(peek())) {
            ++pos_;
        }
        std::string_view tok = s_.substr(start, pos_ - start);
        if (!tok.empty() && tok.front() == '+') {
            tok.remove_prefix(1);
        }
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size()) {
            pos_ = start;
            fail("malformed number");
        }
        if (!std::isfinite(v)) {
            pos_ = start;
            fail("number out of range");
        }
        return Value::of(v);
    }

    std::string_view s_;
    std::size_t line_no_;
    std::size_t pos_ = 0;
};

void emit_value(const Value& v, std::string& out) {
    switch (v.kind) {
        case Value::Kind::Number:
            out += format_number(v.number);
            break;
        case Value::Kind::Bool:
            out += v.boolean ? "true" : "false";
            break;
        case Value::Kind::Symbol:
            out += v.text;
            break;
        case Value::Kind::String:
            out.push_back('"');
            for (const char c : v.text) {
                if (c == '\n') out += "\\n";
                else if (c == '"' || c == '\\') { out.push_back('\\'); out.push_back(c); }
                else out.push_back(c);
            }
            out.push_back('"');
            break;
        case Value::Kind::List:
            out.push_back('[');
            for (std::size_t i = 0; i < v.items.size(); ++i) {
                if (i > 0) out += ", ";
                emit_value(v.items[i], out);
            }
            out.push_back(']');
            break;
    }
}

[[noreturn]] void type_error(std::string_view key, const char* expected) {
    throw ParseError(std::string(key) + ": expected " + expected);
}

Point to_point(const Value& v, std::string_view key) {
    if (v.kind != Value::Kind::List || v.items.size() != 2 ||
        v.items[0].kind != Value::Kind::Number || v.items[1].kind != Value::Kind::Number) {
        type_error(key, "a point [x, y]");
    }
    return {v.items[0].number, v.items[1].number};
}

} // namespace

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

Value Value::of(double v) {
    Value out;
    out.kind = Kind::Number;
    out.number = v;
    return out;
}

Value Value::of(bool v) {
    Value out;
    out.kind = Kind::Bool;
    out.boolean = v;
    return out;
}

Value Value::string(std::string s) {
    Value out;
    out.kind = Kind::String;
    out.text = std::move(s);
    return out;
}

Value Value::symbol(std::string s) {
    Value out;
    out.kind = Kind::Symbol;
    out.text = std::move(s);
    return out;
}

Value Value::list(std::vector<Value> items) {
    Value out;
    out.kind = Kind::List;
    out.items = std::move(items);
    return out;
}

Value Value::numbers(const std::vector<double>& v) {
    std::vector<Value> items;
    items.reserve(v.size());
    for (const double x : v) {
        items.push_back(of(x));
    }
    return list(std::move(items));
}

Value Value::point(Point p) { return numbers({p.x, p.y}); }

Value Value::triangle(const Triangle& t) { return points({t.a, t.b, t.c}); }

Value Value::points(const std::vector<Point>& pts) {
    std::vector<Value> items;
    items.reserve(pts.size());
    for (const Point p : pts) {
        items.push_back(point(p));
    }
    return list(std::move(items));
}

void Document::set(std::string key, Value value) {
    for (Entry& e : entries_) {
        if (e.key == key) {
            e.value = std::move(value);
            return;
        }
    }
    entries_.push_back({std::move(key), std::move(value)});
}

const Value* Document::find(std::string_view key) const {
    for (const Entry& e : entries_) {
        if (e.key == key) {
            return &e.value;
        }
    }
    return nullptr;
}

const Value& Document::at(std::string_view key) const {
    const Value* v = find(key);
    if (v == nullptr) {
        throw ParseError(std::string(key) + ": missing required entry");
    }
    return *v;
}

double Document::number(std::string_view key) const {
    const Value& v = at(key);
    if (v.kind != Value::Kind::Number) type_error(key, "a number");
    return v.number;
}

bool Document::boolean(std::string_view key) const {
    const Value& v = at(key);
    if (v.kind != Value::Kind::Bool) type_error(key, "true or false");
    return v.boolean;
}

std::string Document::text(std::string_view key) const {
    const Value& v = at(key);
    if (v.kind != Value::Kind::String && v.kind != Value::Kind::Symbol) type_error(key, "a string or symbol");
    return v.text;
}

Point Document::point(std::string_view key) const { return to_point(at(key), key); }

Triangle Document::triangle(std::string_view key) const {
    const std::vector<Point> pts = points(key);
    if (pts.size() != 3) type_error(key, "three points");
    return {pts[0], pts[1], pts[2]};
}

std::vector<Point> Document::points(std::string_view key) const {
    const Value& v = at(key);
    if (v.kind != Value::Kind::List) type_error(key, "a list of points");
    std::vector<Point> out;
    out.reserve(v.items.size());
    for (const Value& item : v.items) {
        out.push_back(to_point(item, key));
    }
    return out;
}

std::vector<double> Document::numbers(std::string_view key) const {
    const Value& v = at(key);
    if (v.kind != Value::Kind::List) type_error(key, "a list of numbers");
    std::vector<double> out;
    for (const Value& item : v.items) {
        if (item.kind != Value::Kind::Number) type_error(key, "a list of numbers");
        out.push_back(item.number);
    }
    return out;
}

Document parse(std::string_view input) {
    Document doc;
    std::size_t line_no = 0;
    while (!input.empty()) {
        ++line_no;
        const std::size_t nl = input.find('\n');
        const std::string_view line = input.substr(0, nl);
        input = nl == std::string_view::npos ? std::string_view{} : input.substr(nl + 1);

        Entry e;
        if (!LineParser(line, line_no).entry(e)) {
            continue;
        }
        if (doc.contains(e.key)) {
            throw ParseError("line " + std::to_string(line_no) + ": duplicate key '" + e.key + "'");
        }
        doc.set(std::move(e.key), std::move(e.value));
    }
    return doc;
}

std::string emit(const Value& value) {
    std::string out;
    emit_value(value, out);
    return out;
}

std::string emit(const Document& doc) {
    std::string out;
    for (const Entry& e : doc.entries()) {
        out += e.key;
        out += " = ";
        emit_value(e.value, out);
        out.push_back('\n');
    }
    return out;
}

} // namespace pedalgeom::text
