#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace texdim {

// Minimal JSON value with canonical serialization: object keys sorted,
// doubles printed with 17 significant digits, no insignificant whitespace.
// Non-finite doubles are rejected; callers represent those as null plus an
// explicit flag.
class Json {
public:
    static Json null();
    static Json boolean(bool value);
    static Json integer(std::int64_t value);
    static Json number(double value);
    // Raw decimal integer token (arbitrary precision), emitted unquoted.
    static Json big_integer(std::string decimal_digits);
    static Json string(std::string value);
    static Json array();
    static Json object();

    Json& push(Json value);                       // arrays
    Json& set(const std::string& key, Json value);  // objects
    bool empty() const;

    std::string dump() const;

private:
    enum class Type { kNull, kBool, kInt, kDouble, kRaw, kString, kArray, kObject };
    Type type_ = Type::kNull;
    bool bool_value_ = false;
    std::int64_t int_value_ = 0;
    double double_value_ = 0.0;
    std::string text_;  // string payload or raw token
    std::vector<Json> items_;
    std::map<std::string, Json> members_;

    void write(std::string& out) const;
};

std::string json_escape(const std::string& text);

}  // namespace texdim
