#pragma once

#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include "defkit/monomial.hpp"
#include "defkit/rational.hpp"

namespace defkit {

/// A ring context is just the ordered list of variable names. Rings compare
/// by content so independently constructed rings over the same names compose.
class Ring {
public:
    explicit Ring(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    std::size_t nvars() const { return vars_.size(); }
    const std::vector<std::string>& vars() const { return vars_; }
    const std::string& var(std::size_t i) const { return vars_[i]; }

    /// Index of a variable name, or npos.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& name) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        return npos;
    }

    bool operator==(const Ring& o) const { return vars_ == o.vars_; }

private:
    std::vector<std::string> vars_;
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(std::vector<std::string> vars) {
    return std::make_shared<Ring>(std::move(vars));
}

struct Term {
    Monomial mono;
    Rational coeff;
};

/// Sparse exact multivariate polynomial. Terms are kept sorted descending in
/// the canonical (degrevlex) order with no zero coefficients stored; the zero
/// polynomial is the empty term list.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

    static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
    static Polynomial constant(const RingPtr& ring, const Rational& c);
    static Polynomial variable(const RingPtr& ring, std::size_t i);
    static Polynomial monomial(const RingPtr& ring, Monomial m, const Rational& c);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
    }

    /// Total degree; -1 for the zero polynomial.
    long long degree() const;
    /// Minimal total degree among terms; -1 for zero.
    long long min_degree() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial mul_term(const Monomial& m, const Rational& c) const;

    /// Exact partial derivative d/dx_i.
    Polynomial derivative(std::size_t i) const;

    /// Substitute images[i] for x_i simultaneously. Images live in the
    /// target ring; every image must share that ring.
    Polynomial substitute(const std::vector<Polynomial>& images, const RingPtr& target) const;

    /// Substitute a single variable, keeping the rest.
    Polynomial substitute_var(std::size_t i, const Polynomial& image) const;

    Rational evaluate(const std::vector<Rational>& point) const;

    /// Coefficient of a monomial (zero when absent).
    Rational coeff_of(const Monomial& m) const;

    /// Homogeneous part of the given total degree.
    Polynomial homogeneous_part(std::uint64_t deg) const;

    bool is_homogeneous() const;

    /// Multiply by the lcm of denominators, divide by the integer content,
    /// and make the canonical leading coefficient positive. Leaves zero alone.
    void normalize_primitive();

    /// Map into a ring containing (at least) the same variable names.
    Polynomial lift_to(const RingPtr& target) const;

    /// Grammar string (see parser); canonical term order, explicit '*' and '^'.
    std::string to_string() const;

    /// Build from unsorted raw terms (combines duplicates, drops zeros).
    static Polynomial from_terms(const RingPtr& ring, std::vector<Term> raw);

private:
    RingPtr ring_;
    std::vector<Term> terms_;

    void check_same_ring(const Polynomial& o) const;
};

inline Polynomial operator*(const Rational& c, const Polynomial& p) { return p * c; }

} // namespace defkit
