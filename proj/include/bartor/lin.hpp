#pragma once

#include <map>
#include <string>
#include <utility>

#include "bartor/scalar.hpp"

namespace bartor {

/* Sparse linear combination over an ordered basis-key type.  Zero
 * coefficients are erased eagerly, so term maps compare structurally. */
template <class K>
class Lin {
  public:
    explicit Lin(const Ring& r) : ring_(r) {}

    static Lin zero(const Ring& r) { return Lin(r); }
    static Lin basis(const Ring& r, K k) {
        Lin v(r);
        v.t_.emplace(std::move(k), Scalar::one(r));
        return v;
    }

    const Ring& ring() const { return ring_; }
    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const std::map<K, Scalar>& terms() const { return t_; }

    Scalar coeff(const K& k) const {
        auto it = t_.find(k);
        return it == t_.end() ? Scalar::zero(ring_) : it->second;
    }

    void add(const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t_.emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    void add_scaled(const Lin& o, const Scalar& c) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : o.t_) add(k, v * c);
    }

    Lin& operator+=(const Lin& o) {
        for (const auto& [k, v] : o.t_) add(k, v);
        return *this;
    }
    Lin& operator-=(const Lin& o) {
        for (const auto& [k, v] : o.t_) add(k, -v);
        return *this;
    }
    friend Lin operator+(Lin a, const Lin& b) { return a += b; }
    friend Lin operator-(Lin a, const Lin& b) { return a -= b; }

    void scale(const Scalar& c) {
        if (c.is_zero()) {
            t_.clear();
            return;
        }
        for (auto& [k, v] : t_) v *= c;
    }
    void negate() {
        for (auto& [k, v] : t_) v = -v;
    }
    Lin scaled(const Scalar& c) const {
        Lin r = *this;
        r.scale(c);
        return r;
    }

    bool operator==(const Lin& o) const { return ring_ == o.ring_ && t_ == o.t_; }
    bool operator!=(const Lin& o) const { return !(*this == o); }

    /* deterministic rendering given a key printer */
    template <class F>
    std::string str(F&& key_id) const {
        if (t_.empty()) return "0";
        std::string out;
        for (const auto& [k, v] : t_) {
            if (!out.empty()) out += " + ";
            out += v.str() + "*" + key_id(k);
        }
        return out;
    }

  private:
    Ring ring_;
    std::map<K, Scalar> t_;
};

}  // namespace bartor
