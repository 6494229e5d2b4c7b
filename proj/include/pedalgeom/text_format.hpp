#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pedalgeom/core.hpp"

// Line-oriented key/value documents. One `key = value` entry per line; values
// are numbers, booleans, quoted strings, bare symbols or bracketed lists.
// Points are two-element lists. The full grammar is in docs/text_format.md.
namespace pedalgeom::text {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Value {
    enum class Kind { Number, Bool, String, Symbol, List };

    Kind kind = Kind::Number;
    double number = 0.0;
    bool boolean = false;
    std::string text;
    std::vector<Value> items;

    static Value of(double v);
    static Value of(bool v);
    static Value string(std::string s);
    static Value symbol(std::string s);
    static Value list(std::vector<Value> items);
    static Value numbers(const std::vector<double>& v);
    static Value point(Point p);
    static Value triangle(const Triangle& t);
    static Value points(const std::vector<Point>& pts);

    friend bool operator==(const Value&, const Value&) = default;
};

struct Entry {
    std::string key;
    Value value;
};

class Document {
public:
    /// Replaces an existing entry in place, otherwise appends.
    void set(std::string key, Value value);
    const Value* find(std::string_view key) const;
    bool contains(std::string_view key) const { return find(key) != nullptr; }
    const std::vector<Entry>& entries() const { return entries_; }

    // Typed accessors; all throw ParseError naming the key on mismatch.
    const Value& at(std::string_view key) const;
    double number(std::string_view key) const;
    bool boolean(std::string_view key) const;
    std::string text(std::string_view key) const;
    Point point(std::string_view key) const;
    Triangle triangle(std::string_view key) const;
    std::vector<Point> points(std::string_view key) const;
    std::vector<double> numbers(std::string_view key) const;

private:
    std::vector<Entry> entries_;
};

Document parse(std::string_view input);
std::string emit(const Document& doc);
std::string emit(const Value& value);

/// %.17g formatting, which round-trips every finite double.
std::string format_number(double v);

} // namespace pedalgeom::text
