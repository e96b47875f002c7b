#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "bartor/basis.hpp"

namespace bartor {

/* Explicit basis of a graded module, listed per degree (a finite window of a
 * possibly larger object).  Within a degree, elements are kept sorted by id. */
struct GradedBasis {
    std::map<int, std::vector<BasisElement>> by_deg;

    void add(const BasisElement& b);
    bool contains(const BasisElement& b) const;
    const std::vector<BasisElement>& at(int deg) const;
    std::vector<BasisElement> all() const; /* degree-major order */
    long total() const;
    int rank(int deg) const { return static_cast<int>(at(deg).size()); }
    int min_degree() const;
    int max_degree() const;
};

/* Chain or cochain complex: windowed basis plus the differential given as a
 * function on basis elements (d_deg = -1 for chains, +1 for cochains). */
struct Complex {
    Ring ring;
    int d_deg = -1;
    GradedBasis basis;
    std::function<Vec(const BasisElement&)> d;

    Vec diff(const Vec& v) const;
    /* entrywise d∘d over the basis; returns a witness description on failure */
    std::optional<std::string> check_d2() const;
};

/* tensor product of two complexes, with flattened basis ids and a registry
 * to recover the factors */
struct Tensor2 {
    Complex cx;
    std::map<std::string, std::pair<BasisElement, BasisElement>> parts;

    BasisElement flat(const BasisElement& a, const BasisElement& b) const;
    const std::pair<BasisElement, BasisElement>& split(const BasisElement& f) const;
};

Tensor2 tensor2(const Complex& A, const Complex& B);

}  // namespace bartor
