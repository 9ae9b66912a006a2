#include "pmetric/element_set.hpp"

#include <sstream>

#include "pmetric/error.hpp"

namespace pmetric {

ElementSet ElementSet::from_elements(const std::vector<int>& elements) {
    ElementSet s;
    for (int e : elements) {
        if (e < 1 || e > kMaxElements) throw ValidationError("element " + std::to_string(e) + " out of range");
        s.insert(e);
    }
    return s;
}

std::vector<int> ElementSet::elements() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
}

std::string ElementSet::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int e : elements()) {
        os << (first ? "" : ",") << e;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace pmetric
