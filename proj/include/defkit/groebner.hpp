#pragma once

#include <optional>
#include <vector>

#include "defkit/config.hpp"
#include "defkit/polynomial.hpp"

namespace defkit {

/// Finite generator list; generators are non-zero.
struct Ideal {
    RingPtr ring;
    std::vector<Polynomial> gens;

    Ideal() = default;
    Ideal(RingPtr r, std::vector<Polynomial> g);

    bool is_zero_ideal() const { return gens.empty(); }
};

/// A completed standard basis. For global orders this is the unique reduced
/// Groebner basis (content-normalized, leading coefficients positive); for
/// local orders it is minimal (no leading monomial divides another) and
/// normalized, computed by Mora's weak normal form. Elements sorted by
/// leading monomial ascending in the order.
struct StandardBasis {
    RingPtr ring;
    MonomialOrder order;
    std::vector<Polynomial> elements;
    std::vector<Monomial> leading; // leading monomials, aligned with elements
    bool reduced = false;

    bool contains_unit() const {
        return elements.size() == 1 && elements[0].is_constant() && !elements[0].is_zero();
    }
};

/// Buchberger (global orders) / Mora (local orders) completion.
StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& ord,
                             const RunConfig& cfg = RunConfig::defaults());

/// Weak normal form of f against a completed basis: zero iff f lies in the
/// ideal (in the localization, for local orders). Global orders get the full
/// (tail-reduced) normal form.
Polynomial normal_form(const Polynomial& f, const StandardBasis& basis);

bool ideal_contains(const StandardBasis& basis, const Polynomial& f);

/// Vector-space dimension of the quotient determined by ord (local ring for
/// local orders); nullopt = infinite.
std::optional<std::uint64_t> colength(const Ideal& ideal, const MonomialOrder& ord,
                                      const RunConfig& cfg = RunConfig::defaults());

std::optional<std::uint64_t> colength(const StandardBasis& basis);

/// Monomials outside the leading ideal, ascending by (degree, degrevlex).
/// Throws InfiniteColength when the quotient is infinite-dimensional.
std::vector<Monomial> standard_monomials(const Ideal& ideal, const MonomialOrder& ord,
                                         const RunConfig& cfg = RunConfig::defaults());

std::vector<Monomial> standard_monomials(const StandardBasis& basis);

/// Krull dimension of R/I read off the leading ideal; -1 for the unit ideal.
long long dimension(const StandardBasis& basis);

/// Minimal generators of the leading ideal.
std::vector<Monomial> minimal_leading(const StandardBasis& basis);

} // namespace defkit
