#include "defkit/polynomial.hpp"

#include <algorithm>

namespace defkit {

namespace {

bool canonical_greater(const Monomial& a, const Monomial& b) {
    return canonical_order().greater(a, b);
}

} // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Rational& c) {
    Polynomial p(ring);
    if (!is_zero(c)) p.terms_.push_back({Monomial(ring->nvars()), c});
    return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, std::size_t i) {
    if (i >= ring->nvars())
        throw Error(ErrorKind::IndexOutOfRange, "variable index out of range");
    Polynomial p(ring);
    p.terms_.push_back({Monomial::var(ring->nvars(), i), Rational(1)});
    return p;
}

Polynomial Polynomial::monomial(const RingPtr& ring, Monomial m, const Rational& c) {
    Polynomial p(ring);
    if (!is_zero(c)) p.terms_.push_back({std::move(m), c});
    return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> raw) {
    std::sort(raw.begin(), raw.end(), [](const Term& a, const Term& b) {
        return canonical_greater(a.mono, b.mono);
    });
    Polynomial p(ring);
    for (auto& t : raw) {
        if (is_zero(t.coeff)) continue;
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (is_zero(p.terms_.back().coeff)) p.terms_.pop_back();
        } else {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

void Polynomial::check_same_ring(const Polynomial& o) const {
    if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_))
        throw Error(ErrorKind::RingMismatch, "polynomials from different rings");
}

long long Polynomial::degree() const {
    long long d = -1;
    for (const auto& t : terms_)
        d = std::max<long long>(d, static_cast<long long>(t.mono.degree()));
    return d;
}

long long Polynomial::min_degree() const {
    if (terms_.empty()) return -1;
    std::uint64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return static_cast<long long>(d);
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same_ring(o);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        int c = canonical_order().cmp(terms_[i].mono, o.terms_[j].mono);
        if (c > 0) {
            r.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            r.terms_.push_back(o.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + o.terms_[j].coeff;
            if (!is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
            ++i; ++j;
        }
    }
    while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same_ring(o);
    std::vector<Term> raw;
    raw.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_)
            raw.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return from_terms(ring_, std::move(raw));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    if (is_zero(c)) return Polynomial(ring_);
    Polynomial r(*this);
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff)
            return false;
    return true;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
    if (is_zero(c)) return Polynomial(ring_);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    // multiplying by a fixed monomial preserves the canonical sort
    return r;
}

Polynomial Polynomial::derivative(std::size_t i) const {
    if (!ring_ || i >= ring_->nvars())
        throw Error(ErrorKind::IndexOutOfRange, "derivative index out of range");
    std::vector<Term> raw;
    for (const auto& t : terms_) {
        if (t.mono.e[i] == 0) continue;
        Term d{t.mono, t.coeff * Rational(static_cast<long>(t.mono.e[i]))};
        d.mono.e[i] -= 1;
        raw.push_back(std::move(d));
    }
    return from_terms(ring_, std::move(raw));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  const RingPtr& target) const {
    if (images.size() != ring_->nvars())
        throw Error(ErrorKind::CountMismatch, "substitution image count mismatch");
    Polynomial acc(target);
    for (const auto& t : terms_) {
        Polynomial prod = Polynomial::constant(target, t.coeff);
        for (std::size_t i = 0; i < images.size(); ++i) {
            for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) prod = prod * images[i];
        }
        acc = acc + prod;
    }
    return acc;
}

Polynomial Polynomial::substitute_var(std::size_t i, const Polynomial& image) const {
    std::vector<Polynomial> images;
    images.reserve(ring_->nvars());
    for (std::size_t j = 0; j < ring_->nvars(); ++j) {
        if (j == i) images.push_back(image);
        else images.push_back(Polynomial::variable(ring_, j));
    }
    return substitute(images, ring_);
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != ring_->nvars())
        throw Error(ErrorKind::CountMismatch, "evaluation point dimension mismatch");
    Rational acc(0);
    for (const auto& t : terms_) {
        Rational v = t.coeff;
        for (std::size_t i = 0; i < point.size(); ++i) {
            for (std::uint32_t k = 0; k < t.mono.e[i]; ++k) v *= point[i];
        }
        acc += v;
    }
    return acc;
}

Rational Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : terms_)
        if (t.mono == m) return t.coeff;
    return Rational(0);
}

Polynomial Polynomial::homogeneous_part(std::uint64_t deg) const {
    Polynomial r(ring_);
    for (const auto& t : terms_)
        if (t.mono.degree() == deg) r.terms_.push_back(t);
    return r;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    std::uint64_t d = terms_[0].mono.degree();
    for (const auto& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

void Polynomial::normalize_primitive() {
    if (terms_.empty()) return;
    Integer den(1);
    for (const auto& t : terms_) {
        Integer d = t.coeff.get_den();
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    Integer content(0);
    for (const auto& t : terms_) {
        Integer num = t.coeff.get_num() * den / t.coeff.get_den();
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    if (sgn(terms_[0].coeff) < 0) content = -content;
    Rational scale(den, content);
    scale.canonicalize();
    for (auto& t : terms_) t.coeff *= scale;
}

Polynomial Polynomial::lift_to(const RingPtr& target) const {
    std::vector<std::size_t> map(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
        std::size_t j = target->index_of(ring_->var(i));
        if (j == Ring::npos)
            throw Error(ErrorKind::UnknownVariable,
                        "variable '" + ring_->var(i) + "' missing in target ring");
        map[i] = j;
    }
    std::vector<Term> raw;
    raw.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(target->nvars());
        for (std::size_t i = 0; i < ring_->nvars(); ++i) m.e[map[i]] = t.mono.e[i];
        raw.push_back({std::move(m), t.coeff});
    }
    return from_terms(target, std::move(raw));
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        if (first) {
            if (sgn(c) < 0) { out += "-"; c = -c; }
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
            if (sgn(c) < 0) c = -c;
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < t.mono.e.size(); ++i) {
            if (t.mono.e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += ring_->var(i);
            if (t.mono.e[i] > 1) mono += "^" + std::to_string(t.mono.e[i]);
        }
        if (mono.empty()) {
            out += rational_to_string(c);
        } else if (c == Rational(1)) {
            out += mono;
        } else {
            out += rational_to_string(c) + "*" + mono;
        }
    }
    return out;
}

} // namespace defkit
