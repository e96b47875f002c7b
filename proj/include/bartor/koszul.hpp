#pragma once

#include <vector>

#include "bartor/common.hpp"

namespace bartor {

/* sign picked up when two graded symbols pass each other */
inline int koszul_sign(long dega, long degb) {
    return ((dega & 1) && (degb & 1)) ? -1 : 1;
}

inline int pow_sign(long e) { return (e & 1) ? -1 : 1; }

/* Koszul sign of rearranging a word of graded symbols.
 *
 * Every formula here is a rearrangement of one word into another: the source
 * word lists the operation's inputs in order, preceded (conceptually at the
 * far left) by the maps that appear on the right-hand side.  Build the target
 * word left to right with var()/map_sym(); sign() is the product of
 * (-1)^(deg_i * deg_j) over all pairs that got swapped.  Variables carry
 * their source position; maps are assigned positions before all variables, in
 * order of appearance, so a map contributes exactly its degree times the
 * total degree of the variables written to its left. */
class KsWord {
  public:
    KsWord& var(long degree, long src) {
        w_.push_back({degree, src});
        return *this;
    }
    KsWord& map_sym(long degree) {
        w_.push_back({degree, next_map_++});
        return *this;
    }
    int sign() const {
        long e = 0;
        for (std::size_t i = 0; i < w_.size(); ++i)
            for (std::size_t j = i + 1; j < w_.size(); ++j)
                if (w_[i].src > w_[j].src) e += w_[i].deg * w_[j].deg;
        return pow_sign(e);
    }

  private:
    struct Sym {
        long deg;
        long src;
    };
    std::vector<Sym> w_;
    long next_map_ = -1000000;
};

}  // namespace bartor
