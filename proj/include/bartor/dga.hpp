#pragma once

#include "bartor/complex.hpp"
#include "bartor/linop.hpp"

namespace bartor {

/* Augmented differential graded algebra, cohomologically graded (d of degree
 * +1).  The unit need not be a basis element; the augmentation is a linear
 * functional that takes value 1 on it.  `red` lists the basis of the
 * augmentation ideal; it must be a subset of the full basis, so reduced
 * elements live in the same coordinate space. */
struct Dga {
    std::string name;
    Ring ring{Ring::Q()};
    Complex cx;
    Vec unit{Ring::Q()};
    std::function<Scalar(const BasisElement&)> aug;
    std::function<Vec(const BasisElement&, const BasisElement&)> mul;
    GradedBasis red;

    Scalar aug_vec(const Vec& v) const;
    /* component of v in the augmentation ideal: v − ι(ε(v)) */
    Vec reduce(const Vec& v) const;
    Vec mul_vec(const Vec& a, const Vec& b) const;
    bool is_trivial() const { return red.total() == 0; }
};

/* Morphism of augmented dgas, stored as the underlying degree-0 linear map. */
struct DgaMap {
    std::string name;
    const Dga* src = nullptr;
    const Dga* tgt = nullptr;
    LinOp op{0, {}};

    Vec apply(const BasisElement& b) const { return op(b); }
    Vec apply_vec(const Vec& v) const { return op.apply(v); }
    /* check chain map, unit, augmentation, and multiplicativity on the
       source basis; returns a witness description on failure */
    std::optional<std::string> validate() const;
};

DgaMap identity_dga_map(const Dga& a);
DgaMap compose_dga_maps(const DgaMap& g, const DgaMap& f); /* g after f */

}  // namespace bartor
