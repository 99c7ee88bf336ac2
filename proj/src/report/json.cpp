#include "texdim/report/json.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace texdim {

Json Json::null() { return Json(); }

Json Json::boolean(bool value) {
    Json j;
    j.type_ = Type::kBool;
    j.bool_value_ = value;
    return j;
}

Json Json::integer(std::int64_t value) {
    Json j;
    j.type_ = Type::kInt;
    j.int_value_ = value;
    return j;
}

Json Json::number(double value) {
    if (!std::isfinite(value))
        throw std::domain_error("Json::number: non-finite value must be flagged, not emitted");
    Json j;
    j.type_ = Type::kDouble;
    j.double_value_ = value;
    return j;
}

Json Json::big_integer(std::string decimal_digits) {
    if (decimal_digits.empty())
        throw std::domain_error("Json::big_integer: empty token");
    for (std::size_t i = 0; i < decimal_digits.size(); ++i) {
        const char c = decimal_digits[i];
        if (!((c >= '0' && c <= '9') || (c == '-' && i == 0)))
            throw std::domain_error("Json::big_integer: not a decimal integer");
    }
    Json j;
    j.type_ = Type::kRaw;
    j.text_ = std::move(decimal_digits);
    return j;
}

Json Json::string(std::string value) {
    Json j;
    j.type_ = Type::kString;
    j.text_ = std::move(value);
    return j;
}

Json Json::array() {
    Json j;
    j.type_ = Type::kArray;
    return j;
}

Json Json::object() {
    Json j;
    j.type_ = Type::kObject;
    return j;
}

Json& Json::push(Json value) {
    if (type_ != Type::kArray) throw std::logic_error("Json::push on non-array");
    items_.push_back(std::move(value));
    return *this;
}

Json& Json::set(const std::string& key, Json value) {
    if (type_ != Type::kObject) throw std::logic_error("Json::set on non-object");
    members_[key] = std::move(value);
    return *this;
}

bool Json::empty() const {
    return type_ == Type::kArray ? items_.empty() : members_.empty();
}

std::string json_escape(const std::string& text) {
    std::string out;
    out.reserve(text.size() + 2);
    for (unsigned char c : text) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\b': out += "\\b"; break;
            case '\f': out += "\\f"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (c < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += static_cast<char>(c);
                }
        }
    }
    return out;
}

void Json::write(std::string& out) const {
    switch (type_) {
        case Type::kNull:
            out += "null";
            break;
        case Type::kBool:
            out += bool_value_ ? "true" : "false";
            break;
        case Type::kInt:
            out += std::to_string(int_value_);
            break;
        case Type::kDouble: {
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%.17g", double_value_);
            out += buf;
            break;
        }
        case Type::kRaw:
            out += text_;
            break;
        case Type::kString:
            out += '"';
            out += json_escape(text_);
            out += '"';
            break;
        case Type::kArray: {
            out += '[';
            bool first = true;
            for (const Json& item : items_) {
                if (!first) out += ',';
                first = false;
                item.write(out);
            }
            out += ']';
            break;
        }
        case Type::kObject: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : members_) {
                if (!first) out += ',';
                first = false;
                out += '"';
                out += json_escape(key);
                out += "\":";
                value.write(out);
            }
            out += '}';
            break;
        }
    }
}

std::string Json::dump() const {
    std::string out;
    write(out);
    return out;
}

}  // namespace texdim
