#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bartor/lin.hpp"

namespace bartor {

/* One graded basis element: an opaque id plus its degree.  Ordering is
 * (degree, id); ids are constructed, never parsed. */
struct BasisElement {
    int degree = 0;
    std::string id;

    auto operator<=>(const BasisElement&) const = default;
};

using Vec = Lin<BasisElement>;

/* flat key for elements of tensor products; degree = sum of parts */
using TupleKey = std::vector<BasisElement>;

inline int tuple_degree(const TupleKey& t) {
    int d = 0;
    for (const auto& b : t) d += b.degree;
    return d;
}

inline std::string tuple_id(const TupleKey& t) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += "⊗"; /* ⊗ */
        s += t[i].id;
    }
    return s;
}

inline BasisElement tuple_flat(const TupleKey& t) {
    return BasisElement{tuple_degree(t), tuple_id(t)};
}

using TLin = Lin<TupleKey>;

inline std::string vec_str(const Vec& v) {
    return v.str([](const BasisElement& b) { return b.id; });
}

/* dual basis element: same degree magnitude, id marked with ^ */
inline std::string dual_id(const std::string& id) {
    bool atomic = id.find_first_of("⊗·|[](),") == std::string::npos;
    return atomic ? id + "^" : "(" + id + ")^";
}

inline BasisElement dual_elem(const BasisElement& b) {
    return BasisElement{b.degree, dual_id(b.id)};
}

}  // namespace bartor
