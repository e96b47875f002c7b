#include "bartor/complex.hpp"

#include <algorithm>
#include <memory>

#include "bartor/koszul.hpp"

namespace bartor {

void GradedBasis::add(const BasisElement& b) {
    auto& v = by_deg[b.degree];
    auto it = std::lower_bound(v.begin(), v.end(), b);
    require(it == v.end() || *it != b, "GradedBasis::add: duplicate basis element " + b.id);
    v.insert(it, b);
}

bool GradedBasis::contains(const BasisElement& b) const {
    auto it = by_deg.find(b.degree);
    if (it == by_deg.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), b);
}

const std::vector<BasisElement>& GradedBasis::at(int deg) const {
    static const std::vector<BasisElement> empty;
    auto it = by_deg.find(deg);
    return it == by_deg.end() ? empty : it->second;
}

std::vector<BasisElement> GradedBasis::all() const {
    std::vector<BasisElement> out;
    for (const auto& [d, v] : by_deg) out.insert(out.end(), v.begin(), v.end());
    return out;
}

long GradedBasis::total() const {
    long n = 0;
    for (const auto& [d, v] : by_deg) n += static_cast<long>(v.size());
    return n;
}

int GradedBasis::min_degree() const {
    require(!by_deg.empty(), "GradedBasis::min_degree: empty basis");
    return by_deg.begin()->first;
}

int GradedBasis::max_degree() const {
    require(!by_deg.empty(), "GradedBasis::max_degree: empty basis");
    return by_deg.rbegin()->first;
}

Vec Complex::diff(const Vec& v) const {
    Vec out(ring);
    for (const auto& [k, c] : v.terms()) out.add_scaled(d(k), c);
    return out;
}

std::optional<std::string> Complex::check_d2() const {
    for (const auto& [deg, elems] : basis.by_deg) {
        for (const auto& b : elems) {
            Vec dd = diff(d(b));
            if (!dd.is_zero())
                return "d(d(" + b.id + ")) = " + vec_str(dd);
        }
    }
    return std::nullopt;
}

BasisElement Tensor2::flat(const BasisElement& a, const BasisElement& b) const {
    return tuple_flat(TupleKey{a, b});
}

const std::pair<BasisElement, BasisElement>& Tensor2::split(const BasisElement& f) const {
    auto it = parts.find(f.id);
    require(it != parts.end(), "Tensor2::split: unknown element " + f.id);
    return it->second;
}

Tensor2 tensor2(const Complex& A, const Complex& B) {
    require(A.ring == B.ring && A.d_deg == B.d_deg, "tensor2: incompatible complexes");
    Tensor2 t;
    t.cx.ring = A.ring;
    t.cx.d_deg = A.d_deg;
    for (const auto& [da, va] : A.basis.by_deg)
        for (const auto& a : va)
            for (const auto& [db, vb] : B.basis.by_deg)
                for (const auto& b : vb) {
                    BasisElement f = t.flat(a, b);
                    t.cx.basis.add(f);
                    t.parts.emplace(f.id, std::make_pair(a, b));
                }
    /* capture what the differential needs by value so the result is
     * self-contained */
    auto parts = std::make_shared<std::map<std::string, std::pair<BasisElement, BasisElement>>>(t.parts);
    Ring ring = t.cx.ring;
    auto dA = A.d;
    auto dB = B.d;
    t.cx.d = [parts, ring, dA, dB](const BasisElement& f) {
        auto it = parts->find(f.id);
        require(it != parts->end(), "tensor2 differential: unknown element " + f.id);
        const auto& [a, b] = it->second;
        Vec v(ring);
        Vec da = dA(a);
        for (const auto& [k, c] : da.terms()) v.add(tuple_flat({k, b}), c);
        Scalar sgn = Scalar::of(ring, koszul_sign(1, a.degree));
        Vec db = dB(b);
        for (const auto& [k, c] : db.terms()) v.add(tuple_flat({a, k}), c * sgn);
        return v;
    };
    return t;
}

}  // namespace bartor
