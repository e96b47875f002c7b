#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bartor/common.hpp"

namespace bartor {

/* A nondegenerate simplex of a simplicial set. */
struct SimplexKey {
    int dim = 0;
    std::string id;
    auto operator<=>(const SimplexKey&) const = default;
};

/* Normal form s_{j_1} s_{j_2} … s_{j_r} (base) with j_1 > j_2 > … > j_r and
 * base nondegenerate.  An empty word means the simplex itself is
 * nondegenerate. */
struct Simplex {
    std::vector<int> degens;
    SimplexKey base;

    int dim() const { return base.dim + static_cast<int>(degens.size()); }
    bool nondeg() const { return degens.empty(); }
    std::string str() const;
    auto operator<=>(const Simplex&) const = default;
};

inline Simplex nd(const SimplexKey& k) { return Simplex{{}, k}; }

/* Finite simplicial set: nondegenerate simplices with their faces stored
 * explicitly; all other simplicial operators are derived by pushing face and
 * degeneracy symbols through normal forms. */
class SimplicialSet {
  public:
    std::string name;

    /* dim-0 cells take no faces; dim-n cells take faces ∂_0 … ∂_n, whose
     * bases must already be present (add cells in dimension order) */
    void add(int dim, const std::string& id, std::vector<Simplex> faces = {});

    bool has(const std::string& id) const { return by_id_.count(id) != 0; }
    const SimplexKey& key(const std::string& id) const;
    const std::vector<SimplexKey>& nondeg(int dim) const;
    int top_dim() const;
    long n_cells() const;

    Simplex face(const Simplex& x, int i) const;
    Simplex degeneracy(const Simplex& x, int i) const;
    /* apply a strictly decreasing degeneracy word (rightmost first) */
    Simplex apply_degens(const std::vector<int>& word, Simplex x) const;

    /* checks ∂_i∂_j = ∂_{j-1}∂_i on every stored simplex; witness on failure */
    std::optional<std::string> validate() const;

  private:
    std::map<int, std::vector<SimplexKey>> cells_;
    std::map<std::string, std::vector<Simplex>> faces_;
    std::map<std::string, SimplexKey> by_id_;
};

/* x restricted along the monotone vertex map picking verts (nondecreasing,
 * values in 0..dim x): faces drop the complement, degeneracies repeat ties */
Simplex restrict_to(const SimplicialSet& X, const Simplex& x, const std::vector<int>& verts);
/* front p-face (vertices 0..p) and back q-face (last q+1 vertices) */
Simplex front_face(const SimplicialSet& X, const Simplex& x, int p);
Simplex back_face(const SimplicialSet& X, const Simplex& x, int q);

/* every normal form of the given dimension */
std::vector<Simplex> all_normal_forms(const SimplicialSet& X, int dim);

/* standard spaces */
SimplicialSet point_ss();
SimplicialSet delta_ss(int n);          /* cells = increasing vertex words "02", "012", … */
SimplicialSet boundary_delta_ss(int n);
SimplicialSet circle_ss();              /* one vertex, one edge */
SimplicialSet sphere2_ss();             /* one vertex, one 2-cell */

/* simplicial map, given on nondegenerate simplices */
struct SimplicialMap {
    std::string name;
    std::shared_ptr<const SimplicialSet> src;
    std::shared_ptr<const SimplicialSet> tgt;
    std::map<std::string, Simplex> image; /* nondeg id in src → normal form in tgt */

    Simplex apply(const Simplex& x) const;
    std::optional<std::string> validate() const; /* commutes with faces */
};

SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> X);
/* constant map onto a vertex of the target */
SimplicialMap constant_map(std::shared_ptr<const SimplicialSet> X,
                           std::shared_ptr<const SimplicialSet> Y, const std::string& vertex);

/* product simplicial set: nondegenerate n-cells are pairs of n-dimensional
 * normal forms with disjoint degeneracy sets */
struct ProductSS {
    SimplicialSet ss;
    std::map<std::string, std::pair<Simplex, Simplex>> parts;

    /* normal form in the product of an arbitrary equal-dimension pair */
    Simplex pair_simplex(Simplex a, Simplex b) const;
    const std::pair<Simplex, Simplex>& split(const std::string& id) const;
};

ProductSS product_ss(const SimplicialSet& X, const SimplicialSet& Y);

}  // namespace bartor
