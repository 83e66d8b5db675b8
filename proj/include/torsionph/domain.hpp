#pragma once

// Exact coefficient domains: prime fields, the rationals and the integers.
// All three expose the same value-level interface so the sparse matrix and
// reduction code can be written once.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "torsionph/errors.hpp"

namespace torsionph {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Z/pZ for a prime p < 2^32. Elements are canonical residues 0..p-1.
class PrimeField {
public:
    using Element = std::uint32_t;

    PrimeField() : p_(2) {}
    /// Throws DomainError if p is not prime or does not fit in 32 bits.
    explicit PrimeField(std::uint64_t p);

    std::uint32_t characteristic() const noexcept { return p_; }

    Element zero() const noexcept { return 0; }
    Element one() const noexcept { return 1; }
    Element from_int(std::int64_t v) const noexcept;
    Element from_big(const BigInt& v) const;

    bool is_zero(Element a) const noexcept { return a == 0; }
    bool is_unit(Element a) const noexcept { return a != 0; }

    Element add(Element a, Element b) const noexcept {
        std::uint64_t s = std::uint64_t(a) + b;
        return Element(s >= p_ ? s - p_ : s);
    }
    Element sub(Element a, Element b) const noexcept { return a >= b ? a - b : Element(std::uint64_t(a) + p_ - b); }
    Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const noexcept { return Element(std::uint64_t(a) * b % p_); }
    Element inv(Element a) const;
    Element div(Element a, Element b) const { return mul(a, inv(b)); }

    std::string to_string(Element a) const { return std::to_string(a); }
    std::string name() const { return "Zp:" + std::to_string(p_); }

    bool operator==(const PrimeField&) const = default;

private:
    std::uint32_t p_;
};

/// The rationals; stands in for every characteristic-0 candidate field.
class RationalField {
public:
    using Element = Rational;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t v) const;
    Element from_big(const BigInt& v) const { return Element(v); }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_unit(const Element& a) const { return sgn(a) != 0; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element inv(const Element& a) const;
    Element div(const Element& a, const Element& b) const;

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Q"; }

    bool operator==(const RationalField&) const = default;
};

/// The integers. A ring, not a field: only +-1 are invertible.
class IntegerRing {
public:
    using Element = BigInt;

    Element zero() const { return Element(0); }
    Element one() const { return Element(1); }
    Element from_int(std::int64_t v) const;
    Element from_big(const BigInt& v) const { return v; }

    bool is_zero(const Element& a) const { return sgn(a) == 0; }
    bool is_unit(const Element& a) const { return mpz_cmpabs_ui(a.get_mpz_t(), 1) == 0; }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    /// Throws DomainError for 0 and UnitError for any other non-unit.
    Element inv(const Element& a) const;
    /// Exact division by a unit; same errors as inv.
    Element div(const Element& a, const Element& b) const;

    std::string to_string(const Element& a) const { return a.get_str(); }
    std::string name() const { return "Z"; }

    bool operator==(const IntegerRing&) const = default;
};

}  // namespace torsionph
