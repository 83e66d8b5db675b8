#include "torsionph/domain.hpp"

#include <array>
#include <limits>

namespace torsionph {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes as bases are deterministic for every 64-bit n.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

PrimeField::PrimeField(std::uint64_t p) {
    if (p > std::numeric_limits<std::uint32_t>::max())
        throw DomainError("modulus " + std::to_string(p) + " does not fit in 32 bits");
    if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::from_int(std::int64_t v) const noexcept {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Element>(r);
}

PrimeField::Element PrimeField::from_big(const BigInt& v) const {
    BigInt r;
    mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p_);
    return static_cast<Element>(r.get_ui());
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw DomainError("inverse of zero in " + name());
    // Extended Euclid on (a, p).
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p_, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
}

RationalField::Element RationalField::from_int(std::int64_t v) const {
    Element e;
    mpz_set_si(e.get_num_mpz_t(), v);
    return e;
}

RationalField::Element RationalField::inv(const Element& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero in Q");
    Element r = 1 / a;
    return r;
}

RationalField::Element RationalField::div(const Element& a, const Element& b) const {
    if (sgn(b) == 0) throw DomainError("division by zero in Q");
    Element r = a / b;
    return r;
}

IntegerRing::Element IntegerRing::from_int(std::int64_t v) const {
    Element e;
    mpz_set_si(e.get_mpz_t(), v);
    return e;
}

IntegerRing::Element IntegerRing::inv(const Element& a) const {
    if (sgn(a) == 0) throw DomainError("inverse of zero in Z");
    if (!is_unit(a)) throw UnitError("integer " + a.get_str() + " is not a unit");
    return a;
}

IntegerRing::Element IntegerRing::div(const Element& a, const Element& b) const {
    // b is +-1 here, so a / b == a * b.
    return a * inv(b);
}

}  // namespace torsionph
