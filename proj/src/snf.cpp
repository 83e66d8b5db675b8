#include "torsionph/snf.hpp"

#include <climits>
#include <cstdint>
#include <istream>
#include <sstream>
#include <string>

#include "torsionph/errors.hpp"

namespace torsionph {

namespace {

struct Overflow {};

template <class T>
struct Arith;

template <>
struct Arith<std::int64_t> {
    using T = std::int64_t;
    static T from(const BigInt& b) {
        if (!b.fits_slong_p()) throw Overflow{};
        return b.get_si();
    }
    static BigInt to_big(T v) { return BigInt(static_cast<long>(v)); }
    static bool zero(T a) { return a == 0; }
    static T abs(T a) {
        if (a == INT64_MIN) throw Overflow{};
        return a < 0 ? -a : a;
    }
    static T neg(T a) {
        if (a == INT64_MIN) throw Overflow{};
        return -a;
    }
    static T quot(T a, T b) {
        if (a == INT64_MIN && b == -1) throw Overflow{};
        return a / b;
    }
    static bool divides(T b, T a) { return b == -1 || a % b == 0; }
    // a - q * b
    static T sub_mul(T a, T q, T b) {
        T p, r;
        if (__builtin_mul_overflow(q, b, &p) || __builtin_sub_overflow(a, p, &r)) throw Overflow{};
        return r;
    }
    static T add(T a, T b) {
        T r;
        if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
        return r;
    }
};

template <>
struct Arith<BigInt> {
    using T = BigInt;
    static T from(const BigInt& b) { return b; }
    static BigInt to_big(const T& v) { return v; }
    static bool zero(const T& a) { return sgn(a) == 0; }
    static T abs(const T& a) { return ::abs(a); }
    static T neg(const T& a) { return -a; }
    static T quot(const T& a, const T& b) {
        T q;
        mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return q;
    }
    static bool divides(const T& b, const T& a) { return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0; }
    static T sub_mul(const T& a, const T& q, const T& b) { return a - q * b; }
    static T add(const T& a, const T& b) { return a + b; }
};

template <class T>
class Eliminator {
    using A = Arith<T>;

public:
    Eliminator(const IntMatrix& a, bool transforms) : rows_(a.size()), cols_(a.empty() ? 0 : a[0].size()), tr_(transforms) {
        d_.assign(rows_, std::vector<T>(cols_));
        for (std::size_t i = 0; i < rows_; ++i) {
            if (a[i].size() != cols_) throw UsageError("ragged integer matrix");
            for (std::size_t j = 0; j < cols_; ++j) d_[i][j] = A::from(a[i][j]);
        }
        if (tr_) {
            u_.assign(rows_, std::vector<T>(rows_, T(0)));
            for (std::size_t i = 0; i < rows_; ++i) u_[i][i] = T(1);
            v_.assign(cols_, std::vector<T>(cols_, T(0)));
            for (std::size_t j = 0; j < cols_; ++j) v_[j][j] = T(1);
        }
    }

    SmithNormalForm run() {
        const std::size_t diag = std::min(rows_, cols_);
        std::size_t t = 0;
        for (; t < diag; ++t) {
            if (!move_smallest_to(t)) break;
            for (;;) {
                bool dirty = false;
                for (std::size_t i = t + 1; i < rows_; ++i) {
                    if (A::zero(d_[i][t])) continue;
                    row_sub(i, t, A::quot(d_[i][t], d_[t][t]));
                    dirty |= !A::zero(d_[i][t]);
                }
                for (std::size_t j = t + 1; j < cols_; ++j) {
                    if (A::zero(d_[t][j])) continue;
                    col_sub(j, t, A::quot(d_[t][j], d_[t][t]));
                    dirty |= !A::zero(d_[t][j]);
                }
                if (dirty) {
                    move_smallest_in_cross(t);
                    continue;
                }
                // Row and column t are clear; the pivot must divide the rest.
                std::size_t bad_row = rows_;
                for (std::size_t i = t + 1; i < rows_ && bad_row == rows_; ++i)
                    for (std::size_t j = t + 1; j < cols_; ++j)
                        if (!A::divides(d_[t][t], d_[i][j])) {
                            bad_row = i;
                            break;
                        }
                if (bad_row == rows_) break;
                row_add(t, bad_row);
            }
            if (d_[t][t] < 0) row_negate(t);
        }

        SmithNormalForm out;
        for (std::size_t k = 0; k < t; ++k) out.invariant_factors.push_back(A::to_big(d_[k][k]));
        if (tr_) {
            out.left = to_big(u_);
            out.right = to_big(v_);
        }
        return out;
    }

private:
    static IntMatrix to_big(const std::vector<std::vector<T>>& m) {
        IntMatrix out(m.size());
        for (std::size_t i = 0; i < m.size(); ++i)
            for (const auto& x : m[i]) out[i].push_back(A::to_big(x));
        return out;
    }

    // Moves the smallest nonzero |entry| of rows/cols >= t into (t, t).
    bool move_smallest_to(std::size_t t) {
        const std::size_t rows = rows_, cols = cols_;
        std::size_t bi = rows, bj = cols;
        T best{};
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                if (A::zero(d_[i][j])) continue;
                T mag = A::abs(d_[i][j]);
                if (bi == rows || mag < best) {
                    best = mag;
                    bi = i;
                    bj = j;
                }
            }
        if (bi == rows) return false;
        swap_rows(t, bi);
        swap_cols(t, bj);
        return true;
    }

    void move_smallest_in_cross(std::size_t t) {
        std::size_t bi = t, bj = t;
        T best = A::zero(d_[t][t]) ? T(0) : A::abs(d_[t][t]);
        bool have = !A::zero(d_[t][t]);
        for (std::size_t i = t + 1; i < rows_; ++i) {
            if (A::zero(d_[i][t])) continue;
            T mag = A::abs(d_[i][t]);
            if (!have || mag < best) {
                best = mag;
                bi = i;
                bj = t;
                have = true;
            }
        }
        for (std::size_t j = t + 1; j < cols_; ++j) {
            if (A::zero(d_[t][j])) continue;
            T mag = A::abs(d_[t][j]);
            if (!have || mag < best) {
                best = mag;
                bi = t;
                bj = j;
                have = true;
            }
        }
        swap_rows(t, bi);
        swap_cols(t, bj);
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        std::swap(d_[a], d_[b]);
        if (tr_) std::swap(u_[a], u_[b]);
    }
    void swap_cols(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (auto& row : d_) std::swap(row[a], row[b]);
        if (tr_)
            for (auto& row : v_) std::swap(row[a], row[b]);
    }
    // row i -= q * row t
    void row_sub(std::size_t i, std::size_t t, const T& q) {
        for (std::size_t j = 0; j < cols_; ++j)
            if (!A::zero(d_[t][j])) d_[i][j] = A::sub_mul(d_[i][j], q, d_[t][j]);
        if (tr_)
            for (std::size_t j = 0; j < rows_; ++j)
                if (!A::zero(u_[t][j])) u_[i][j] = A::sub_mul(u_[i][j], q, u_[t][j]);
    }
    // col j -= q * col t
    void col_sub(std::size_t j, std::size_t t, const T& q) {
        for (std::size_t i = 0; i < rows_; ++i)
            if (!A::zero(d_[i][t])) d_[i][j] = A::sub_mul(d_[i][j], q, d_[i][t]);
        if (tr_)
            for (std::size_t i = 0; i < cols_; ++i)
                if (!A::zero(v_[i][t])) v_[i][j] = A::sub_mul(v_[i][j], q, v_[i][t]);
    }
    // row t += row i
    void row_add(std::size_t t, std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) d_[t][j] = A::add(d_[t][j], d_[i][j]);
        if (tr_)
            for (std::size_t j = 0; j < rows_; ++j) u_[t][j] = A::add(u_[t][j], u_[i][j]);
    }
    void row_negate(std::size_t t) {
        for (auto& x : d_[t]) x = A::neg(x);
        if (tr_)
            for (auto& x : u_[t]) x = A::neg(x);
    }

    std::size_t rows_, cols_;
    bool tr_;
    std::vector<std::vector<T>> d_, u_, v_;
};

}  // namespace

std::vector<BigInt> SmithNormalForm::torsion() const {
    std::vector<BigInt> out;
    for (const auto& a : invariant_factors)
        if (a > 1) out.push_back(a);
    return out;
}

SmithNormalForm smith_normal_form(const IntMatrix& a, bool with_transforms) {
    try {
        return Eliminator<std::int64_t>(a, with_transforms).run();
    } catch (const Overflow&) {
        return Eliminator<BigInt>(a, with_transforms).run();
    }
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t n = a.size();
    const std::size_t inner = b.size();
    const std::size_t m = b.empty() ? 0 : b[0].size();
    IntMatrix out(n, std::vector<BigInt>(m, 0));
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != inner) throw UsageError("matrix dimensions do not match");
        for (std::size_t k = 0; k < inner; ++k) {
            if (sgn(a[i][k]) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

IntMatrix read_int_matrix(std::istream& in) {
    IntMatrix m;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<BigInt> row;
        std::string tok;
        while (tokens >> tok) {
            BigInt value;
            if (value.set_str(tok, 10) != 0) throw ParseError(number, "expected an integer, got '" + tok + "'");
            row.push_back(value);
        }
        if (row.empty()) continue;
        if (!m.empty() && row.size() != m[0].size()) throw ParseError(number, "row length differs from the first row");
        m.push_back(std::move(row));
    }
    return m;
}

}  // namespace torsionph
