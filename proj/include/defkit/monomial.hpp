#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "defkit/error.hpp"

namespace defkit {

/// Exponent vector of fixed length (the ring's variable count).
struct Monomial {
    std::vector<std::uint32_t> e;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : e(std::move(exps)) {}

    std::size_t nvars() const { return e.size(); }

    std::uint64_t degree() const {
        return std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    }

    bool is_one() const {
        for (auto x : e) if (x != 0) return false;
        return true;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }

    bool divides(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    /// this / o, requires o | this.
    Monomial divide(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }

    static Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (std::size_t i = 0; i < a.e.size(); ++i)
            if (b.e[i] > r.e[i]) r.e[i] = b.e[i];
        return r;
    }

    static Monomial var(std::size_t nvars, std::size_t i, std::uint32_t k = 1) {
        Monomial m(nvars);
        m.e[i] = k;
        return m;
    }

    bool coprime(const Monomial& o) const {
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0 && o.e[i] != 0) return false;
        return true;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return h;
    }
};

/// Term orders. Global kinds are well-orders; NegDegRevLex is the local
/// order with 1 as the greatest monomial. Elimination(k) is a block order
/// (degrevlex on the first k variables, degrevlex tie-break on the rest)
/// which eliminates the first k variables.
struct MonomialOrder {
    enum class Kind { DegRevLex, Lex, NegDegRevLex, Elimination };

    Kind kind = Kind::DegRevLex;
    std::size_t block = 0; // first-block size for Elimination

    static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
    static MonomialOrder lex() { return {Kind::Lex, 0}; }
    static MonomialOrder local() { return {Kind::NegDegRevLex, 0}; }
    static MonomialOrder elimination(std::size_t first_block) {
        return {Kind::Elimination, first_block};
    }

    bool is_local() const { return kind == Kind::NegDegRevLex; }
    bool is_global() const { return !is_local(); }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int cmp(const Monomial& a, const Monomial& b) const {
        switch (kind) {
            case Kind::DegRevLex: return cmp_drl(a.e, b.e, 0, a.e.size());
            case Kind::Lex: {
                for (std::size_t i = 0; i < a.e.size(); ++i) {
                    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
                }
                return 0;
            }
            case Kind::NegDegRevLex: {
                // lower total degree is larger; ties as degrevlex
                std::uint64_t da = a.degree(), db = b.degree();
                if (da != db) return da < db ? 1 : -1;
                return cmp_drl(a.e, b.e, 0, a.e.size());
            }
            case Kind::Elimination: {
                int c = cmp_drl(a.e, b.e, 0, block);
                if (c != 0) return c;
                return cmp_drl(a.e, b.e, block, a.e.size());
            }
        }
        return 0;
    }

    bool less(const Monomial& a, const Monomial& b) const { return cmp(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }

    std::string name() const {
        switch (kind) {
            case Kind::DegRevLex: return "degrevlex";
            case Kind::Lex: return "lex";
            case Kind::NegDegRevLex: return "negdegrevlex";
            case Kind::Elimination: return "elimination(" + std::to_string(block) + ")";
        }
        return "?";
    }

private:
    static int cmp_drl(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b,
                       std::size_t lo, std::size_t hi) {
        std::uint64_t da = 0, db = 0;
        for (std::size_t i = lo; i < hi; ++i) { da += a[i]; db += b[i]; }
        if (da != db) return da > db ? 1 : -1;
        // revlex tie-break: last nonzero difference, negative wins
        for (std::size_t i = hi; i-- > lo;) {
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        return 0;
    }
};

/// Canonical fixed order used for polynomial storage and printing.
inline const MonomialOrder& canonical_order() {
    static const MonomialOrder ord = MonomialOrder::degrevlex();
    return ord;
}

} // namespace defkit
