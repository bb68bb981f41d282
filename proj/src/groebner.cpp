#include "defkit/groebner.hpp"

#include <algorithm>
#include <deque>
#include <functional>

namespace defkit {

Ideal::Ideal(RingPtr r, std::vector<Polynomial> g) : ring(std::move(r)) {
    for (auto& p : g) {
        if (p.is_zero()) continue;
        if (!(*p.ring() == *ring))
            throw Error(ErrorKind::RingMismatch, "ideal generator from a different ring");
        gens.push_back(std::move(p));
    }
}

namespace {

/// Engine-internal view: terms sorted descending in the active order.
struct OrdPoly {
    std::vector<Term> terms; // front = leading term
    long long ecart = 0;     // max total degree minus leading-monomial degree

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().mono; }
    const Rational& lc() const { return terms.front().coeff; }
};

OrdPoly to_ord(const Polynomial& p, const MonomialOrder& ord) {
    OrdPoly r;
    r.terms = p.terms();
    std::stable_sort(r.terms.begin(), r.terms.end(),
                     [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    if (!r.terms.empty()) {
        long long maxdeg = 0;
        for (const auto& t : r.terms)
            maxdeg = std::max<long long>(maxdeg, static_cast<long long>(t.mono.degree()));
        r.ecart = maxdeg - static_cast<long long>(r.terms.front().mono.degree());
    }
    return r;
}

Polynomial from_ord(const OrdPoly& p, const RingPtr& ring) {
    return Polynomial::from_terms(ring, p.terms);
}

void recompute_ecart(OrdPoly& p) {
    if (p.terms.empty()) { p.ecart = 0; return; }
    long long maxdeg = 0;
    for (const auto& t : p.terms)
        maxdeg = std::max<long long>(maxdeg, static_cast<long long>(t.mono.degree()));
    p.ecart = maxdeg - static_cast<long long>(p.terms.front().mono.degree());
}

/// Primitive integer normalization, positive leading coefficient.
void normalize(OrdPoly& p) {
    if (p.terms.empty()) return;
    Integer den(1);
    for (const auto& t : p.terms) {
        Integer d = t.coeff.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Integer content(0);
    for (const auto& t : p.terms) {
        Integer num = t.coeff.get_num() * den / t.coeff.get_den();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (sgn(p.terms.front().coeff) < 0) content = -content;
    Rational scale(den, content);
    scale.canonicalize();
    for (auto& t : p.terms) t.coeff *= scale;
}

/// p - c * x^m * q, all sorted descending in ord.
OrdPoly axpy(const OrdPoly& p, const Rational& c, const Monomial& m, const OrdPoly& q,
             const MonomialOrder& ord) {
    OrdPoly out;
    out.terms.reserve(p.terms.size() + q.terms.size());
    std::size_t i = 0, j = 0;
    while (i < p.terms.size() && j < q.terms.size()) {
        Monomial qm = q.terms[j].mono * m;
        int cv = ord.cmp(p.terms[i].mono, qm);
        if (cv > 0) {
            out.terms.push_back(p.terms[i++]);
        } else if (cv < 0) {
            out.terms.push_back({std::move(qm), -(c * q.terms[j].coeff)});
            ++j;
        } else {
            Rational v = p.terms[i].coeff - c * q.terms[j].coeff;
            if (!is_zero(v)) out.terms.push_back({p.terms[i].mono, std::move(v)});
            ++i; ++j;
        }
    }
    while (i < p.terms.size()) out.terms.push_back(p.terms[i++]);
    while (j < q.terms.size()) {
        out.terms.push_back({q.terms[j].mono * m, -(c * q.terms[j].coeff)});
        ++j;
    }
    recompute_ecart(out);
    return out;
}

/// Cancel the leading term of h against g.
OrdPoly reduce_lead(const OrdPoly& h, const OrdPoly& g, const MonomialOrder& ord) {
    Monomial m = h.lm().divide(g.lm());
    Rational c = h.lc() / g.lc();
    return axpy(h, c, m, g, ord);
}

OrdPoly spoly(const OrdPoly& f, const OrdPoly& g, const MonomialOrder& ord) {
    Monomial l = Monomial::lcm(f.lm(), g.lm());
    Monomial mf = l.divide(f.lm());
    Monomial mg = l.divide(g.lm());
    // lc(g)*x^mf*f - lc(f)*x^mg*g
    OrdPoly a;
    a.terms.reserve(f.terms.size());
    for (const auto& t : f.terms) a.terms.push_back({t.mono * mf, t.coeff * g.lc()});
    OrdPoly r = axpy(a, f.lc(), mg, g, ord);
    return r;
}

/// Mora's weak normal form (Greuel-Pfister 1.7.6). For global degree orders
/// every ecart is zero and this is plain leading-term reduction.
OrdPoly weak_nf(OrdPoly h, const std::vector<OrdPoly>& basis, const MonomialOrder& ord) {
    std::vector<const OrdPoly*> t_set;
    std::deque<OrdPoly> own; // Mora's intermediate reducers; deque keeps pointers stable
    t_set.reserve(basis.size());
    for (const auto& g : basis) t_set.push_back(&g);
    normalize(h);
    while (!h.is_zero()) {
        const OrdPoly* best = nullptr;
        for (const auto* g : t_set) {
            if (!g->lm().divides(h.lm())) continue;
            if (!best || g->ecart < best->ecart) best = g;
        }
        if (!best) break;
        if (best->ecart > h.ecart) {
            own.push_back(h);
            t_set.push_back(&own.back());
        }
        h = reduce_lead(h, *best, ord);
        normalize(h);
    }
    return h;
}

/// Full normal form for global orders: reduce every term, not just the lead.
OrdPoly full_nf_global(OrdPoly h, const std::vector<OrdPoly>& basis, const MonomialOrder& ord) {
    OrdPoly tail_done; // processed terms, none divisible by any LM
    while (!h.is_zero()) {
        const OrdPoly* red = nullptr;
        for (const auto& g : basis) {
            if (g.lm().divides(h.lm())) { red = &g; break; }
        }
        if (red) {
            h = reduce_lead(h, *red, ord);
        } else {
            tail_done.terms.push_back(h.terms.front());
            h.terms.erase(h.terms.begin());
        }
    }
    recompute_ecart(tail_done);
    return tail_done;
}

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t deg;
};

/// Deterministic pair choice: min (lcm degree, lcm order-compare, indices).
bool pair_before(const Pair& a, const Pair& b, const MonomialOrder& ord) {
    if (a.deg != b.deg) return a.deg < b.deg;
    int c = ord.cmp(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.j != b.j) return a.j < b.j;
    return a.i < b.i;
}

class Engine {
public:
    Engine(const Ideal& ideal, const MonomialOrder& ord, const RunConfig& cfg)
        : ring_(ideal.ring), ord_(ord), cfg_(cfg) {
        for (const auto& g : ideal.gens) {
            OrdPoly p = to_ord(g, ord_);
            if (p.is_zero()) continue;
            normalize(p);
            add_element(std::move(p));
        }
    }

    void complete() {
        while (!pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k)
                if (pair_before(pairs_[k], pairs_[best], ord_)) best = k;
            Pair pr = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();

            OrdPoly s = spoly(basis_[pr.i], basis_[pr.j], ord_);
            OrdPoly h = weak_nf(std::move(s), basis_, ord_);
            if (h.is_zero()) continue;
            normalize(h);
            add_element(std::move(h));
            if (basis_.size() > cfg_.max_basis)
                throw Error(ErrorKind::BudgetExceeded,
                            "standard basis exceeded max-basis budget");
        }
    }

    StandardBasis finish() {
        minimalize();
        bool fully_reduced = false;
        if (ord_.is_global()) {
            tail_reduce_global();
            fully_reduced = true;
        }
        for (auto& p : basis_) normalize(p);
        std::vector<std::size_t> idx(basis_.size());
        for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
        std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
            return ord_.less(basis_[a].lm(), basis_[b].lm());
        });
        StandardBasis out;
        out.ring = ring_;
        out.order = ord_;
        out.reduced = fully_reduced;
        for (auto k : idx) {
            out.leading.push_back(basis_[k].lm());
            out.elements.push_back(from_ord(basis_[k], ring_));
        }
        return out;
    }

private:
    RingPtr ring_;
    MonomialOrder ord_;
    RunConfig cfg_;
    std::vector<OrdPoly> basis_;
    std::vector<Pair> pairs_;

    void add_element(OrdPoly p) {
        std::size_t t = basis_.size();
        std::vector<Pair> fresh;
        for (std::size_t i = 0; i < t; ++i) {
            Pair pr{i, t, Monomial::lcm(basis_[i].lm(), p.lm()), 0};
            pr.deg = pr.lcm.degree();
            fresh.push_back(std::move(pr));
        }
        // product criterion
        std::vector<Pair> kept;
        for (auto& pr : fresh) {
            if (basis_[pr.i].lm().coprime(p.lm())) continue;
            kept.push_back(std::move(pr));
        }
        // Gebauer-Moeller M/F on the fresh pairs: drop (i,t) when another
        // fresh pair's lcm strictly divides it; keep one per equal lcm
        std::vector<bool> drop(kept.size(), false);
        for (std::size_t a = 0; a < kept.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < kept.size(); ++b) {
                if (a == b || drop[a]) continue;
                if (kept[b].lcm.divides(kept[a].lcm)) {
                    if (kept[a].lcm == kept[b].lcm) {
                        if (b < a) drop[a] = true;
                    } else if (!drop[b]) {
                        drop[a] = true;
                    }
                }
            }
        }
        for (std::size_t a = 0; a < kept.size(); ++a)
            if (!drop[a]) pairs_.push_back(kept[a]);
        basis_.push_back(std::move(p));
    }

    void minimalize() {
        std::vector<OrdPoly> kept;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis_.size(); ++j) {
                if (i == j) continue;
                if (!basis_[j].lm().divides(basis_[i].lm())) continue;
                if (basis_[j].lm() == basis_[i].lm() && j > i) continue;
                redundant = true;
                break;
            }
            if (!redundant) kept.push_back(basis_[i]);
        }
        basis_ = std::move(kept);
    }

    void tail_reduce_global() {
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::vector<OrdPoly> others;
            others.reserve(basis_.size() - 1);
            for (std::size_t j = 0; j < basis_.size(); ++j)
                if (j != i) others.push_back(basis_[j]);
            basis_[i] = full_nf_global(basis_[i], others, ord_);
        }
    }
};

std::vector<Monomial> minimal_monomials(std::vector<Monomial> lms) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < lms.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < lms.size(); ++j) {
            if (i == j) continue;
            if (!lms[j].divides(lms[i])) continue;
            if (lms[j] == lms[i] && j > i) continue;
            redundant = true;
            break;
        }
        if (!redundant) out.push_back(lms[i]);
    }
    return out;
}

/// Enumerate monomials outside the (minimal) leading monomial set.
/// Returns nullopt when infinite (missing pure power for some variable).
std::optional<std::vector<Monomial>> enumerate_standard(const std::vector<Monomial>& lead,
                                                        std::size_t nvars) {
    for (const auto& m : lead)
        if (m.is_one()) return std::vector<Monomial>{}; // unit ideal
    // finite iff every variable has a pure power among the leads
    std::vector<std::uint32_t> bound(nvars, 0);
    for (std::size_t v = 0; v < nvars; ++v) {
        for (const auto& m : lead) {
            bool pure = m.e[v] != 0;
            for (std::size_t w = 0; pure && w < nvars; ++w)
                if (w != v && m.e[w] != 0) pure = false;
            if (pure) {
                bound[v] = bound[v] == 0 ? m.e[v] : std::min(bound[v], m.e[v]);
            }
        }
        if (bound[v] == 0) return std::nullopt;
    }
    std::vector<Monomial> out;
    Monomial cur(nvars);
    std::function<void(std::size_t)> rec = [&](std::size_t v) {
        if (v == nvars) {
            for (const auto& m : lead)
                if (m.divides(cur)) return;
            out.push_back(cur);
            return;
        }
        for (std::uint32_t k = 0; k < bound[v]; ++k) {
            cur.e[v] = k;
            rec(v + 1);
        }
        cur.e[v] = 0;
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return canonical_order().less(a, b);
    });
    return out;
}

} // namespace

StandardBasis standard_basis(const Ideal& ideal, const MonomialOrder& ord,
                             const RunConfig& cfg) {
    Engine eng(ideal, ord, cfg);
    eng.complete();
    return eng.finish();
}

Polynomial normal_form(const Polynomial& f, const StandardBasis& basis) {
    std::vector<OrdPoly> ops;
    ops.reserve(basis.elements.size());
    for (const auto& g : basis.elements) ops.push_back(to_ord(g, basis.order));
    OrdPoly h = to_ord(f, basis.order);
    OrdPoly r = basis.order.is_global() ? full_nf_global(std::move(h), ops, basis.order)
                                        : weak_nf(std::move(h), ops, basis.order);
    return from_ord(r, basis.ring);
}

bool ideal_contains(const StandardBasis& basis, const Polynomial& f) {
    return normal_form(f, basis).is_zero();
}

std::vector<Monomial> minimal_leading(const StandardBasis& basis) {
    return minimal_monomials(basis.leading);
}

std::optional<std::uint64_t> colength(const StandardBasis& basis) {
    if (basis.elements.empty()) return std::nullopt; // zero ideal, full ring
    auto nvars = basis.ring->nvars();
    auto std_mons = enumerate_standard(minimal_leading(basis), nvars);
    if (!std_mons) return std::nullopt;
    return std_mons->size();
}

std::optional<std::uint64_t> colength(const Ideal& ideal, const MonomialOrder& ord,
                                      const RunConfig& cfg) {
    if (ideal.gens.empty()) return std::nullopt;
    return colength(standard_basis(ideal, ord, cfg));
}

std::vector<Monomial> standard_monomials(const StandardBasis& basis) {
    auto std_mons = basis.elements.empty()
                        ? std::nullopt
                        : enumerate_standard(minimal_leading(basis), basis.ring->nvars());
    if (!std_mons)
        throw Error(ErrorKind::InfiniteColength, "quotient is infinite-dimensional");
    return *std_mons;
}

std::vector<Monomial> standard_monomials(const Ideal& ideal, const MonomialOrder& ord,
                                         const RunConfig& cfg) {
    return standard_monomials(standard_basis(ideal, ord, cfg));
}

long long dimension(const StandardBasis& basis) {
    if (basis.elements.empty()) return static_cast<long long>(basis.ring->nvars());
    auto lead = minimal_leading(basis);
    std::size_t n = basis.ring->nvars();
    for (const auto& m : lead)
        if (m.is_one()) return -1; // unit ideal
    std::vector<std::uint32_t> support;
    support.reserve(lead.size());
    for (const auto& m : lead) {
        std::uint32_t mask = 0;
        for (std::size_t v = 0; v < n; ++v)
            if (m.e[v] != 0) mask |= (1u << v);
        support.push_back(mask);
    }
    long long best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool independent = true;
        for (auto m : support) {
            if ((m & ~s) == 0) { independent = false; break; }
        }
        if (independent)
            best = std::max<long long>(best, __builtin_popcount(s));
    }
    return best;
}

} // namespace defkit
