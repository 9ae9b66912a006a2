#include "pmetric/metric.hpp"

#include <algorithm>
#include <climits>

#include "pmetric/error.hpp"

namespace pmetric {

ElementSet support(const FieldVector& x) {
    ElementSet s;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != 0) s.insert(static_cast<int>(i) + 1);
    return s;
}

int pweight(const Poset& p, const FieldVector& x) {
    if (x.size() != static_cast<std::size_t>(p.size()))
        throw ValidationError("vector of length " + std::to_string(x.size()) + " in a poset space of size " +
                              std::to_string(p.size()));
    return p.ideal_of(support(x)).size();
}

int pdist(const Poset& p, const FieldVector& x, const FieldVector& y) { return pweight(p, x - y); }

int min_pdistance(const Poset& p, const LinearCode& code) {
    if (code.length() != p.size()) throw ValidationError("code length does not match poset size");
    int best = INT_MAX;
    code.for_each_codeword([&](const FieldVector& w) {
        if (!w.is_zero()) best = std::min(best, pweight(p, w));
    });
    return best;
}

}  // namespace pmetric
