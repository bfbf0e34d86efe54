#include "sdo/distance.hpp"

#include <stdexcept>

namespace sdo {

Weight Distance::value() const {
    if (!value_) {
        throw std::logic_error("value() on an Unreachable distance");
    }
    return *value_;
}

std::string Distance::to_string() const {
    return value_ ? std::to_string(*value_) : std::string("INF");
}

Distance Distance::parse(const std::string& text) {
    if (text == "INF") {
        return Distance();
    }
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size() || v < 0) {
        throw std::invalid_argument("bad distance literal: " + text);
    }
    return Distance(static_cast<Weight>(v));
}

}  // namespace sdo
