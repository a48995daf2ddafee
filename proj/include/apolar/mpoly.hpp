#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "apolar/ring.hpp"

namespace apolar {

// Exact multivariate polynomial in canonical form: terms sorted in strictly
// descending grevlex order, no zero coefficients, no duplicate monomials.
// Equal polynomials have identical term lists.
template <class F>
class MPoly {
public:
    using Elem = typename F::Elem;
    struct Term {
        Expo mono;
        Elem coef;
    };

    MPoly() = default;
    explicit MPoly(RingPtr ring) : ring_(std::move(ring)) {}

    static MPoly zero(RingPtr ring) { return MPoly(std::move(ring)); }
    static MPoly constant(RingPtr ring, const F& K, Elem c) {
        MPoly p(std::move(ring));
        if (!K.is_zero(c)) p.terms_.push_back({expo_zero(), c});
        return p;
    }
    static MPoly monomial(RingPtr ring, const F& K, Expo e, Elem c) {
        MPoly p(std::move(ring));
        if (!K.is_zero(c)) p.terms_.push_back({e, c});
        return p;
    }
    static MPoly variable(RingPtr ring, const F& K, int idx) {
        Expo e = expo_zero();
        e[idx] = 1;
        return monomial(std::move(ring), K, e, K.one());
    }

    const RingPtr& ring() const { return ring_; }
    int nvars() const { return ring_->nvars(); }
    bool is_zero() const { return terms_.empty(); }
    size_t nterms() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }

    const Term& lead() const { return terms_.front(); }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, expo_degree(t.mono, nvars()));
        return d;
    }

    bool homogeneous() const {
        if (terms_.empty()) return true;
        int d = expo_degree(terms_.front().mono, nvars());
        for (const auto& t : terms_)
            if (expo_degree(t.mono, nvars()) != d) return false;
        return true;
    }

    // Build from an arbitrary term list; sorts, merges and drops zeros.
    static MPoly from_terms(RingPtr ring, const F& K, std::vector<Term> ts) {
        MPoly p(std::move(ring));
        int n = p.nvars();
        std::sort(ts.begin(), ts.end(), [n](const Term& a, const Term& b) {
            return grevlex_cmp(a.mono, b.mono, n) > 0;
        });
        for (auto& t : ts) {
            if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
                p.terms_.back().coef = K.add(p.terms_.back().coef, t.coef);
                if (K.is_zero(p.terms_.back().coef)) p.terms_.pop_back();
            } else if (!K.is_zero(t.coef)) {
                p.terms_.push_back(t);
            }
        }
        return p;
    }

    MPoly plus(const MPoly& o, const F& K) const {
        check_same_ring(ring_, o.ring_);
        MPoly r(ring_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        size_t i = 0, j = 0;
        int n = nvars();
        while (i < terms_.size() && j < o.terms_.size()) {
            int c = grevlex_cmp(terms_[i].mono, o.terms_[j].mono, n);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                r.terms_.push_back(o.terms_[j++]);
            } else {
                Elem s = K.add(terms_[i].coef, o.terms_[j].coef);
                if (!K.is_zero(s)) r.terms_.push_back({terms_[i].mono, s});
                ++i;
                ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
        return r;
    }

    MPoly minus(const MPoly& o, const F& K) const { return plus(o.scaled(K.neg(K.one()), K), K); }

    MPoly scaled(Elem c, const F& K) const {
        MPoly r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Elem v = K.mul(t.coef, c);
            if (!K.is_zero(v)) r.terms_.push_back({t.mono, v});
        }
        return r;
    }

    // Multiply by a single term c * x^e.
    MPoly term_mul(const Expo& e, Elem c, const F& K) const {
        MPoly r(ring_);
        if (K.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        int n = nvars();
        for (const auto& t : terms_) {
            Elem v = K.mul(t.coef, c);
            if (!K.is_zero(v)) r.terms_.push_back({expo_add(t.mono, e, n), v});
        }
        return r;  // order is preserved by multiplication with a fixed monomial
    }

    MPoly times(const MPoly& o, const F& K) const {
        check_same_ring(ring_, o.ring_);
        MPoly acc(ring_);
        for (const auto& t : o.terms_) acc = acc.plus(term_mul(t.mono, t.coef, K), K);
        return acc;
    }

    MPoly monic(const F& K) const {
        if (is_zero()) return *this;
        return scaled(K.inv(terms_.front().coef), K);
    }

    bool operator==(const MPoly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || !(terms_[i].coef == o.terms_[i].coef))
                return false;
        return true;
    }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // Formal partial derivative with respect to variable i (used by the
    // derivation modules; this is d/dx, not contraction).
    MPoly derivative(int i, const F& K) const {
        MPoly r(ring_);
        for (const auto& t : terms_) {
            if (!t.mono[i]) continue;
            Elem c = K.mul(t.coef, K.from_int(t.mono[i]));
            if (K.is_zero(c)) continue;
            Expo e = t.mono;
            e[i] -= 1;
            r.terms_.push_back({e, c});
        }
        // Term order within a degree can change after differentiation.
        return from_terms(ring_, K, std::move(r.terms_));
    }

    std::string to_string(const F& K) const {
        if (terms_.empty()) return "0";
        std::string s;
        bool first = true;
        for (const auto& t : terms_) {
            std::string c = K.to_string(t.coef);
            bool neg = !c.empty() && c[0] == '-';
            std::string cabs = neg ? c.substr(1) : c;
            std::string m = monomial_to_string(t.mono, *ring_);
            std::string body;
            if (m == "1") {
                body = cabs;
            } else if (cabs == "1") {
                body = m;
            } else {
                body = cabs + "*" + m;
            }
            if (first) {
                s += (neg ? "-" : "") + body;
                first = false;
            } else {
                s += (neg ? " - " : " + ") + body;
            }
        }
        return s;
    }

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

// The divided-power contraction action of S on P:
//   x^a o X^b = X^(b-a) if b >= a componentwise, else 0,
// extended bilinearly. No binomial coefficients appear; this is deliberately
// not the differentiation action (the two differ in small characteristic).
template <class F>
MPoly<F> contract(const MPoly<F>& s, const MPoly<F>& big_f, const F& K) {
    check_same_ring(s.ring(), big_f.ring());
    int n = s.nvars();
    std::vector<typename MPoly<F>::Term> out;
    for (const auto& ts : s.terms()) {
        for (const auto& tf : big_f.terms()) {
            if (!expo_divides(ts.mono, tf.mono, n)) continue;
            out.push_back({expo_sub(tf.mono, ts.mono, n), K.mul(ts.coef, tf.coef)});
        }
    }
    return MPoly<F>::from_terms(s.ring(), K, std::move(out));
}

// Split a polynomial into its bidegree-homogeneous components, sorted by
// bidegree. Requires the ring to carry block tags.
template <class F>
std::vector<std::pair<Bidegree, MPoly<F>>> bidegree_components(const MPoly<F>& p, const F& K) {
    std::map<Bidegree, std::vector<typename MPoly<F>::Term>> buckets;
    for (const auto& t : p.terms()) buckets[p.ring()->bidegree(t.mono)].push_back(t);
    std::vector<std::pair<Bidegree, MPoly<F>>> out;
    for (auto& [bd, ts] : buckets)
        out.emplace_back(bd, MPoly<F>::from_terms(p.ring(), K, std::move(ts)));
    return out;
}

// Homogeneous component of total degree d.
template <class F>
MPoly<F> homogeneous_component(const MPoly<F>& p, int d, const F& K) {
    std::vector<typename MPoly<F>::Term> ts;
    for (const auto& t : p.terms())
        if (expo_degree(t.mono, p.nvars()) == d) ts.push_back(t);
    return MPoly<F>::from_terms(p.ring(), K, std::move(ts));
}

}  // namespace apolar
