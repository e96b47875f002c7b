#include "bartor/scalar.hpp"

namespace bartor {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    /* extended Euclid; a nonzero mod p, p prime */
    long long t = 0, nt = 1;
    long long r = static_cast<long long>(p), nr = static_cast<long long>(a % p);
    while (nr != 0) {
        long long q = r / nr;
        long long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    require(r == 1, "mod_inverse: not invertible");
    if (t < 0) t += static_cast<long long>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

Ring Ring::Zmod(std::uint32_t p) {
    require(is_prime(p), "Ring::Zmod: modulus must be prime, got " + std::to_string(p));
    require(p < (1u << 31), "Ring::Zmod: modulus too large");
    return Ring{RingKind::Mod, p};
}

std::string Ring::name() const {
    switch (kind) {
        case RingKind::Rational: return "q";
        case RingKind::Integer: return "z";
        case RingKind::Mod: return "zmod:" + std::to_string(p);
    }
    fail("Ring::name: bad kind");
}

Ring Ring::parse(const std::string& s) {
    if (s == "q") return Q();
    if (s == "z") return Z();
    if (s.rfind("zmod:", 0) == 0) {
        const std::string body = s.substr(5);
        require(!body.empty() && body.find_first_not_of("0123456789") == std::string::npos,
                "Ring::parse: bad modulus in '" + s + "'");
        unsigned long v = std::stoul(body);
        require(v < (1ul << 31), "Ring::parse: modulus too large in '" + s + "'");
        return Zmod(static_cast<std::uint32_t>(v));
    }
    fail("Ring::parse: unknown coefficient ring '" + s + "' (expected q, z, or zmod:p)");
}

Scalar Scalar::of(const Ring& r, long v) {
    Scalar s(r);
    if (r.kind == RingKind::Mod) {
        long long m = v % static_cast<long long>(r.p);
        if (m < 0) m += r.p;
        s.r_ = static_cast<std::uint64_t>(m);
    } else {
        s.q_ = v;
    }
    return s;
}

Scalar Scalar::of_rat(const Ring& r, const mpq_class& q) {
    require(r.kind != RingKind::Mod, "Scalar::of_rat: not defined for Z/p");
    if (r.kind == RingKind::Integer)
        require(q.get_den() == 1, "Scalar::of_rat: non-integral value over Z");
    Scalar s(r);
    s.q_ = q;
    s.q_.canonicalize();
    return s;
}

bool Scalar::is_zero() const {
    return ring_.kind == RingKind::Mod ? r_ == 0 : q_ == 0;
}

void Scalar::check_same(const Scalar& o) const {
    require(ring_ == o.ring_, "Scalar: mixed-ring arithmetic (" + ring_.name() + " vs " + o.ring_.name() + ")");
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    if (ring_.kind == RingKind::Mod) {
        s.r_ = r_ == 0 ? 0 : ring_.p - r_;
    } else {
        s.q_ = -q_;
    }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    check_same(o);
    if (ring_.kind == RingKind::Mod) {
        r_ = (r_ + o.r_) % ring_.p;
    } else {
        q_ += o.q_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    check_same(o);
    if (ring_.kind == RingKind::Mod) {
        r_ = (r_ + ring_.p - o.r_) % ring_.p;
    } else {
        q_ -= o.q_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    check_same(o);
    if (ring_.kind == RingKind::Mod) {
        r_ = (r_ * o.r_) % ring_.p;
    } else {
        q_ *= o.q_;
    }
    return *this;
}

bool Scalar::is_unit() const {
    switch (ring_.kind) {
        case RingKind::Rational: return !is_zero();
        case RingKind::Mod: return !is_zero();
        case RingKind::Integer: return q_ == 1 || q_ == -1;
    }
    return false;
}

Scalar Scalar::inv() const {
    require(is_unit(), "Scalar::inv: not a unit in " + ring_.name());
    Scalar s(ring_);
    if (ring_.kind == RingKind::Mod) {
        s.r_ = mod_inverse(r_, ring_.p);
    } else {
        s.q_ = 1 / q_;
    }
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    if (!(ring_ == o.ring_)) return false;
    return ring_.kind == RingKind::Mod ? r_ == o.r_ : q_ == o.q_;
}

std::string Scalar::str() const {
    if (ring_.kind == RingKind::Mod) return std::to_string(r_);
    return q_.get_str();
}

const mpq_class& Scalar::rat() const {
    require(ring_.kind != RingKind::Mod, "Scalar::rat over Z/p");
    return q_;
}

std::uint64_t Scalar::residue() const {
    require(ring_.kind == RingKind::Mod, "Scalar::residue over " + ring_.name());
    return r_;
}

}  // namespace bartor
