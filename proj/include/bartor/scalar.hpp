#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "bartor/common.hpp"

namespace bartor {

enum class RingKind : std::uint8_t { Rational, Integer, Mod };

/* Coefficient ring descriptor: Q, Z, or Z/p for a prime p. */
struct Ring {
    RingKind kind = RingKind::Rational;
    std::uint32_t p = 0;

    static Ring Q() { return Ring{RingKind::Rational, 0}; }
    static Ring Z() { return Ring{RingKind::Integer, 0}; }
    static Ring Zmod(std::uint32_t p);

    bool is_field() const { return kind != RingKind::Integer; }
    std::string name() const;
    /* accepts "q", "z", "zmod:p" */
    static Ring parse(const std::string& s);

    bool operator==(const Ring&) const = default;
};

/* Exact scalar: GMP rational for Q/Z (denominator 1 enforced over Z),
 * residue in [0,p) for Z/p. Every value carries its ring; mixed-ring
 * arithmetic throws. */
class Scalar {
  public:
    Scalar() : ring_(Ring::Q()) {}

    static Scalar zero(const Ring& r) { return Scalar(r); }
    static Scalar one(const Ring& r) { return of(r, 1); }
    static Scalar of(const Ring& r, long v);
    static Scalar of_rat(const Ring& r, const mpq_class& q);

    const Ring& ring() const { return ring_; }
    bool is_zero() const;
    bool is_one() const { return *this == one(ring_); }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }

    bool is_unit() const;
    Scalar inv() const;

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    /* deterministic rendering: "7", "-3/2", residues as "k" */
    std::string str() const;

    const mpq_class& rat() const;        /* Q/Z only */
    std::uint64_t residue() const;       /* Mod only */

  private:
    explicit Scalar(const Ring& r) : ring_(r) {}
    void check_same(const Scalar& o) const;

    Ring ring_;
    mpq_class q_;
    std::uint64_t r_ = 0;
};

inline Scalar operator*(long a, const Scalar& b) { return Scalar::of(b.ring(), a) * b; }

}  // namespace bartor
