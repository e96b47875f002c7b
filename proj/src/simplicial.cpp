#include "bartor/simplicial.hpp"

#include <algorithm>

namespace bartor {

std::string Simplex::str() const {
    if (degens.empty()) return base.id;
    std::string out = "s{";
    for (std::size_t i = 0; i < degens.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(degens[i]);
    }
    return out + "}" + base.id;
}

static void check_word(const Simplex& x) {
    for (std::size_t i = 0; i + 1 < x.degens.size(); ++i)
        require(x.degens[i] > x.degens[i + 1], "simplex word not strictly decreasing: " + x.str());
    /* s_j applied to an m-simplex needs 0 ≤ j ≤ m */
    int m = x.base.dim;
    for (auto it = x.degens.rbegin(); it != x.degens.rend(); ++it, ++m)
        require(*it >= 0 && *it <= m, "degeneracy index out of range: " + x.str());
}

void SimplicialSet::add(int dim, const std::string& id, std::vector<Simplex> faces) {
    require(dim >= 0, "add: negative dimension");
    require(!id.empty() && by_id_.count(id) == 0, "add: empty or duplicate id " + id);
    require(faces.size() == (dim == 0 ? 0u : static_cast<std::size_t>(dim) + 1),
            "add: " + id + " needs " + std::to_string(dim + 1) + " faces");
    for (const auto& f : faces) {
        require(by_id_.count(f.base.id) != 0, "add: " + id + " has unknown face base " + f.base.id);
        require(f.base == by_id_.at(f.base.id), "add: " + id + " face base mismatch");
        require(f.dim() == dim - 1, "add: " + id + " face of wrong dimension");
        check_word(f);
    }
    SimplexKey k{dim, id};
    by_id_.emplace(id, k);
    auto& v = cells_[dim];
    v.insert(std::lower_bound(v.begin(), v.end(), k), k);
    faces_.emplace(id, std::move(faces));
}

const SimplexKey& SimplicialSet::key(const std::string& id) const {
    auto it = by_id_.find(id);
    require(it != by_id_.end(), "unknown simplex id " + id);
    return it->second;
}

const std::vector<SimplexKey>& SimplicialSet::nondeg(int dim) const {
    static const std::vector<SimplexKey> empty;
    auto it = cells_.find(dim);
    return it == cells_.end() ? empty : it->second;
}

int SimplicialSet::top_dim() const {
    require(!cells_.empty(), "top_dim: empty simplicial set");
    return cells_.rbegin()->first;
}

long SimplicialSet::n_cells() const {
    long n = 0;
    for (const auto& [d, v] : cells_) n += static_cast<long>(v.size());
    return n;
}

Simplex SimplicialSet::face(const Simplex& x, int i) const {
    require(x.dim() >= 1 && i >= 0 && i <= x.dim(), "face: index out of range on " + x.str());
    if (x.nondeg()) return faces_.at(x.base.id)[static_cast<std::size_t>(i)];
    int j = x.degens.front();
    Simplex inner{{x.degens.begin() + 1, x.degens.end()}, x.base};
    if (i == j || i == j + 1) return inner;
    if (i < j) return degeneracy(face(inner, i), j - 1);
    return degeneracy(face(inner, i - 1), j);
}

Simplex SimplicialSet::degeneracy(const Simplex& x, int i) const {
    require(i >= 0 && i <= x.dim(), "degeneracy: index out of range on " + x.str());
    Simplex out = x;
    std::size_t pos = 0;
    /* s_i s_j = s_{j+1} s_i for i ≤ j pushes the new symbol inward */
    while (pos < out.degens.size() && i <= out.degens[pos]) {
        ++out.degens[pos];
        ++pos;
    }
    out.degens.insert(out.degens.begin() + static_cast<std::ptrdiff_t>(pos), i);
    return out;
}

Simplex SimplicialSet::apply_degens(const std::vector<int>& word, Simplex x) const {
    for (auto it = word.rbegin(); it != word.rend(); ++it) x = degeneracy(x, *it);
    return x;
}

std::optional<std::string> SimplicialSet::validate() const {
    for (const auto& [dim, keys] : cells_) {
        if (dim < 2) continue;
        for (const auto& k : keys) {
            Simplex x = nd(k);
            for (int j = 1; j <= dim; ++j)
                for (int i = 0; i < j; ++i) {
                    Simplex lhs = face(face(x, j), i);
                    Simplex rhs = face(face(x, i), j - 1);
                    if (lhs != rhs)
                        return "face identity fails on " + k.id + ": d" + std::to_string(i) +
                               " d" + std::to_string(j) + " = " + lhs.str() + " but d" +
                               std::to_string(j - 1) + " d" + std::to_string(i) + " = " +
                               rhs.str();
                }
        }
    }
    return std::nullopt;
}

Simplex restrict_to(const SimplicialSet& X, const Simplex& x, const std::vector<int>& verts) {
    int m = x.dim();
    require(!verts.empty(), "restrict_to: empty vertex list");
    for (std::size_t i = 0; i < verts.size(); ++i) {
        require(verts[i] >= 0 && verts[i] <= m, "restrict_to: vertex out of range");
        require(i == 0 || verts[i - 1] <= verts[i], "restrict_to: vertices must be nondecreasing");
    }
    /* injective part: drop complement of the value set, top index first */
    std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
    for (int v : verts) used[static_cast<std::size_t>(v)] = true;
    Simplex out = x;
    for (int i = m; i >= 0; --i)
        if (!used[static_cast<std::size_t>(i)]) out = X.face(out, i);
    /* surjective part: each tie at position p inserts s_{p-1}, left to right */
    for (std::size_t p = 1; p < verts.size(); ++p)
        if (verts[p] == verts[p - 1]) out = X.degeneracy(out, static_cast<int>(p) - 1);
    return out;
}

Simplex front_face(const SimplicialSet& X, const Simplex& x, int p) {
    std::vector<int> verts;
    for (int i = 0; i <= p; ++i) verts.push_back(i);
    return restrict_to(X, x, verts);
}

Simplex back_face(const SimplicialSet& X, const Simplex& x, int q) {
    std::vector<int> verts;
    for (int i = x.dim() - q; i <= x.dim(); ++i) verts.push_back(i);
    return restrict_to(X, x, verts);
}

static void decreasing_words(int lo, int hi, int len, std::vector<int>& cur,
                             std::vector<std::vector<int>>& out) {
    if (len == 0) {
        out.push_back(cur);
        return;
    }
    /* next (largest remaining) entry is picked first */
    for (int j = hi; j >= lo + len - 1; --j) {
        cur.push_back(j);
        decreasing_words(lo, j - 1, len - 1, cur, out);
        cur.pop_back();
    }
}

std::vector<Simplex> all_normal_forms(const SimplicialSet& X, int dim) {
    std::vector<Simplex> out;
    for (int bd = 0; bd <= dim; ++bd)
        for (const auto& k : X.nondeg(bd)) {
            std::vector<std::vector<int>> words;
            std::vector<int> cur;
            decreasing_words(0, dim - 1, dim - bd, cur, words);
            for (const auto& w : words) out.push_back(Simplex{w, k});
        }
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialSet point_ss() {
    SimplicialSet X;
    X.name = "pt";
    X.add(0, "*");
    return X;
}

static std::string vertex_word(const std::vector<int>& vs) {
    std::string s;
    for (int v : vs) s += std::to_string(v);
    return s;
}

static void add_delta_cells(SimplicialSet& X, int n, int max_card) {
    /* all strictly increasing subsets of {0..n}, by cardinality */
    for (int card = 1; card <= max_card; ++card) {
        std::vector<std::vector<int>> subs;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int next) -> void {
            if (static_cast<int>(cur.size()) == card) {
                subs.push_back(cur);
                return;
            }
            for (int v = next; v <= n; ++v) {
                cur.push_back(v);
                self(self, v + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        for (const auto& vs : subs) {
            if (card == 1) {
                X.add(0, vertex_word(vs));
                continue;
            }
            std::vector<Simplex> faces;
            for (int i = 0; i < card; ++i) {
                std::vector<int> f = vs;
                f.erase(f.begin() + i);
                faces.push_back(nd(X.key(vertex_word(f))));
            }
            X.add(card - 1, vertex_word(vs), std::move(faces));
        }
    }
}

SimplicialSet delta_ss(int n) {
    require(n >= 0 && n <= 6, "delta_ss: dimension out of supported range");
    SimplicialSet X;
    X.name = "delta" + std::to_string(n);
    add_delta_cells(X, n, n + 1);
    return X;
}

SimplicialSet boundary_delta_ss(int n) {
    require(n >= 1 && n <= 6, "boundary_delta_ss: dimension out of supported range");
    SimplicialSet X;
    X.name = "bdelta" + std::to_string(n);
    add_delta_cells(X, n, n); /* everything except the top cell */
    return X;
}

SimplicialSet circle_ss() {
    SimplicialSet X;
    X.name = "s1";
    X.add(0, "v");
    X.add(1, "e", {nd(X.key("v")), nd(X.key("v"))});
    return X;
}

SimplicialSet sphere2_ss() {
    SimplicialSet X;
    X.name = "s2";
    X.add(0, "v");
    Simplex sv{{0}, X.key("v")};
    X.add(2, "w", {sv, sv, sv});
    return X;
}

Simplex SimplicialMap::apply(const Simplex& x) const {
    auto it = image.find(x.base.id);
    require(it != image.end(), "simplicial map " + name + ": no image for " + x.base.id);
    return tgt->apply_degens(x.degens, it->second);
}

std::optional<std::string> SimplicialMap::validate() const {
    for (int d = 0; d <= src->top_dim(); ++d)
        for (const auto& k : src->nondeg(d)) {
            auto it = image.find(k.id);
            if (it == image.end()) return "no image for " + k.id;
            if (it->second.dim() != d) return "image of " + k.id + " has wrong dimension";
            for (int i = 0; i <= d && d >= 1; ++i) {
                Simplex lhs = apply(src->face(nd(k), i));
                Simplex rhs = tgt->face(it->second, i);
                if (lhs != rhs)
                    return "map does not commute with d" + std::to_string(i) + " on " + k.id;
            }
        }
    return std::nullopt;
}

SimplicialMap identity_map(std::shared_ptr<const SimplicialSet> X) {
    SimplicialMap f;
    f.name = "id";
    f.src = X;
    f.tgt = X;
    for (int d = 0; d <= X->top_dim(); ++d)
        for (const auto& k : X->nondeg(d)) f.image.emplace(k.id, nd(k));
    return f;
}

SimplicialMap constant_map(std::shared_ptr<const SimplicialSet> X,
                           std::shared_ptr<const SimplicialSet> Y, const std::string& vertex) {
    SimplicialMap f;
    f.name = "const:" + vertex;
    f.src = X;
    f.tgt = Y;
    SimplexKey v = Y->key(vertex);
    require(v.dim == 0, "constant_map: target is not a vertex");
    for (int d = 0; d <= X->top_dim(); ++d)
        for (const auto& k : X->nondeg(d)) {
            Simplex img = nd(v);
            for (int i = 0; i < d; ++i) img = Y->degeneracy(img, 0);
            f.image.emplace(k.id, img);
        }
    return f;
}

static std::string pair_id(const Simplex& a, const Simplex& b) {
    return "(" + a.str() + "," + b.str() + ")";
}

Simplex ProductSS::pair_simplex(Simplex a, Simplex b) const {
    require(a.dim() == b.dim(), "pair_simplex: dimension mismatch");
    std::vector<int> shared;
    for (;;) {
        int k = -1;
        for (int ja : a.degens)
            for (int jb : b.degens)
                if (ja == jb && ja > k) k = ja;
        if (k < 0) break;
        shared.push_back(k);
        auto extract = [k](std::vector<int>& w) {
            w.erase(std::find(w.begin(), w.end(), k));
            for (int& j : w)
                if (j > k) --j;
        };
        extract(a.degens);
        extract(b.degens);
    }
    return Simplex{std::move(shared), ss.key(pair_id(a, b))};
}

const std::pair<Simplex, Simplex>& ProductSS::split(const std::string& id) const {
    auto it = parts.find(id);
    require(it != parts.end(), "product: unknown cell " + id);
    return it->second;
}

ProductSS product_ss(const SimplicialSet& X, const SimplicialSet& Y) {
    ProductSS P;
    P.ss.name = X.name + "x" + Y.name;
    int top = X.top_dim() + Y.top_dim();
    for (int n = 0; n <= top; ++n) {
        std::vector<Simplex> xs = all_normal_forms(X, n);
        std::vector<Simplex> ys = all_normal_forms(Y, n);
        /* collect nondegenerate pairs of this dimension, in id order */
        std::vector<std::pair<Simplex, Simplex>> cells;
        for (const auto& a : xs)
            for (const auto& b : ys) {
                bool disjoint = true;
                for (int ja : a.degens)
                    for (int jb : b.degens)
                        if (ja == jb) disjoint = false;
                if (disjoint) cells.emplace_back(a, b);
            }
        std::sort(cells.begin(), cells.end(), [](const auto& l, const auto& r) {
            return pair_id(l.first, l.second) < pair_id(r.first, r.second);
        });
        for (const auto& [a, b] : cells) {
            std::string id = pair_id(a, b);
            if (n == 0) {
                P.ss.add(0, id);
            } else {
                std::vector<Simplex> faces;
                for (int i = 0; i <= n; ++i)
                    faces.push_back(P.pair_simplex(X.face(a, i), Y.face(b, i)));
                P.ss.add(n, id, std::move(faces));
            }
            P.parts.emplace(id, std::make_pair(a, b));
        }
    }
    return P;
}

}  // namespace bartor
