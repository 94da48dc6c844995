#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

namespace gcfp {

// Minimal streaming JSON writer. All finite reals are emitted with 17
// significant digits so serialized values round-trip to the same double;
// non-finite reals become null. Key order is the emission order, which keeps
// output bytes deterministic.
class JsonWriter {
public:
    void begin_object() { item(); out_ += '{'; stack_.push_back(false); }
    void end_object() { out_ += '}'; stack_.pop_back(); }
    void begin_array() { item(); out_ += '['; stack_.push_back(false); }
    void end_array() { out_ += ']'; stack_.pop_back(); }

    void key(std::string_view k) {
        item();
        quote(k);
        out_ += ':';
        pending_value_ = true;
    }

    void value(double v) {
        item();
        if (!std::isfinite(v)) {
            out_ += "null";
            return;
        }
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        out_ += buf;
    }

    void value(std::int64_t v) { item(); out_ += std::to_string(v); }
    void value(std::uint64_t v) { item(); out_ += std::to_string(v); }
    void value(int v) { value(static_cast<std::int64_t>(v)); }
    void value(bool v) { item(); out_ += v ? "true" : "false"; }
    void value(std::string_view s) { item(); quote(s); }
    void null() { item(); out_ += "null"; }

    const std::string& str() const { return out_; }

private:
    void item() {
        if (pending_value_) {
            pending_value_ = false;
            return;
        }
        if (!stack_.empty()) {
            if (stack_.back()) out_ += ',';
            stack_.back() = true;
        }
    }

    void quote(std::string_view s) {
        out_ += '"';
        for (char c : s) {
            switch (c) {
                case '"': out_ += "\\\""; break;
                case '\\': out_ += "\\\\"; break;
                case '\n': out_ += "\\n"; break;
                case '\t': out_ += "\\t"; break;
                case '\r': out_ += "\\r"; break;
                default:
                    if (static_cast<unsigned char>(c) < 0x20) {
                        char buf[8];
                        std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                        out_ += buf;
                    } else {
                        out_ += c;
                    }
            }
        }
        out_ += '"';
    }

    std::string out_;
    std::vector<bool> stack_;
    bool pending_value_ = false;
};

} // namespace gcfp
