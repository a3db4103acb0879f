#ifndef QHOLO_ALGEBRA_HPP
#define QHOLO_ALGEBRA_HPP

#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "qholo/scalar.hpp"
#include "qholo/spin.hpp"

namespace qholo {

inline constexpr double kPruneEps = 1e-14;

/// Sparse linear combination over the orthonormal basis {x_A} of the
/// mixed-spin algebra.  Immutable value semantics; every operation returns
/// a new element.  Products are pruned: the float backend drops magnitudes
/// below kPruneEps, the exact backend drops true zeros only.
template <class S>
class Element {
  public:
    using Traits = ScalarTraits<S>;
    using TermMap = std::map<Mask, S>;

    Element() = default;
    explicit Element(SpinRef spin) : spin_(std::move(spin)) {}
    Element(SpinRef spin, TermMap terms) : spin_(std::move(spin)), terms_(std::move(terms)) {
        for (auto& [m, c] : terms_) check_mask(m);
        prune();
    }

    static Element unit(SpinRef spin) { return basis(std::move(spin), 0); }

    static Element basis(SpinRef spin, Mask m) {
        Element e(std::move(spin));
        e.check_mask(m);
        e.terms_[m] = Traits::one();
        return e;
    }

    static Element generator(SpinRef spin, int i) {
        if (i < 0 || i >= spin->size()) throw std::invalid_argument("generator index out of range");
        return basis(std::move(spin), Mask{1} << i);
    }

    const SpinRef& spin() const { return spin_; }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    S coeff(Mask m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Traits::zero() : it->second;
    }

    void add_term(Mask m, const S& c) {
        check_mask(m);
        auto [it, fresh] = terms_.try_emplace(m, c);
        if (!fresh) it->second = it->second + c;
        if (Traits::negligible(it->second, kPruneEps)) terms_.erase(it);
    }

    friend Element operator+(const Element& a, const Element& b) {
        a.check_same_spin(b);
        Element r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }

    friend Element operator-(const Element& a, const Element& b) {
        a.check_same_spin(b);
        Element r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        return r;
    }

    friend Element operator*(const S& s, const Element& a) {
        Element r(a.spin_);
        for (const auto& [m, c] : a.terms_) r.add_term(m, s * c);
        return r;
    }

    /// Bilinear extension of the signed basis product.
    friend Element operator*(const Element& a, const Element& b) {
        a.check_same_spin(b);
        Element r(a.spin_ ? a.spin_ : b.spin_);
        const SpinMatrix& spin = *r.spin_;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                auto [sg, mc] = basis_product(ma, mb, spin);
                S c = ca * cb;
                if (sg < 0) c = -c;
                auto [it, fresh] = r.terms_.try_emplace(mc, c);
                if (!fresh) it->second = it->second + c;
            }
        r.prune();
        return r;
    }

    void check_same_spin(const Element& o) const {
        if (spin_ == o.spin_) return;
        if (spin_ && o.spin_ && *spin_ == *o.spin_) return;
        throw std::invalid_argument("spin-matrix mismatch between algebra elements");
    }

  private:
    void check_mask(Mask m) const {
        if (!spin_) throw std::logic_error("element has no spin matrix");
        int g = spin_->size();
        if (g < 64 && (m >> g) != 0) throw std::invalid_argument("multi-index exceeds generator count");
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = Traits::negligible(it->second, kPruneEps) ? terms_.erase(it) : std::next(it);
    }

    SpinRef spin_;
    TermMap terms_;
};

using FElement = Element<Complex>;
using XElement = Element<GaussRational>;

/// Conjugate-linear involution with x_A^* = reversal_sign(A) x_A.
template <class S>
Element<S> adjoint(const Element<S>& a) {
    Element<S> r(a.spin());
    for (const auto& [m, c] : a.terms()) {
        S cc = ScalarTraits<S>::conj(c);
        if (reversal_sign(m, *a.spin()) < 0) cc = -cc;
        r.add_term(m, cc);
    }
    return r;
}

/// tau(x_A) = delta_{A,empty}: the coefficient of the identity.
template <class S>
S trace(const Element<S>& a) {
    return a.coeff(0);
}

/// tau(a * b) without forming the product: only x_A x_A can hit the identity,
/// with sign reversal_sign(A).
template <class S>
S trace_of_product(const Element<S>& a, const Element<S>& b) {
    a.check_same_spin(b);
    S acc = ScalarTraits<S>::zero();
    const auto& small = a.term_count() <= b.term_count() ? a : b;
    const auto& big = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [m, c] : small.terms()) {
        S other = big.coeff(m);
        S term = c * other;
        if (reversal_sign(m, *a.spin()) < 0) term = -term;
        acc = acc + term;
    }
    return acc;
}

/// (a,b) = tau(b^* a).  The basis {x_A} is orthonormal, so this reduces to
/// the coefficient pairing.
template <class S>
S inner(const Element<S>& a, const Element<S>& b) {
    a.check_same_spin(b);
    S acc = ScalarTraits<S>::zero();
    for (const auto& [m, c] : a.terms()) acc = acc + c * ScalarTraits<S>::conj(b.coeff(m));
    return acc;
}

inline double norm_l2(const FElement& a) { return std::sqrt(std::max(0.0, inner(a, a).real())); }

/// e^{-tN}: multiplies the coefficient of x_A by e^{-t|A|}.
inline FElement number_semigroup(const FElement& a, double t) {
    if (t < 0) throw std::invalid_argument("number_semigroup: negative time");
    FElement r(a.spin());
    for (const auto& [m, c] : a.terms()) r.add_term(m, c * std::exp(-t * std::popcount(m)));
    return r;
}

/// tau((a^* a)^{r/2}) for even r, computed purely in the algebra.
template <class S>
S moment_even(const Element<S>& a, int r) {
    if (r <= 0 || r % 2 != 0) throw std::invalid_argument("moment_even: r must be a positive even integer");
    Element<S> m = adjoint(a) * a;
    if (r == 2) return trace(m);
    Element<S> p = m;  // p ends as m^{r/2 - 1}
    for (int k = 1; k < r / 2 - 1; ++k) p = p * m;
    return trace_of_product(p, m);
}

inline double norm_even(const FElement& a, int r) {
    double mom = std::max(0.0, moment_even(a, r).real());
    return std::pow(mom, 1.0 / r);
}

/// Splits by the parity of |A ∩ {(site,0),(site,1)}| under the convention
/// generator = 2*site + copy.  a == even + odd.
template <class S>
std::pair<Element<S>, Element<S>> grading_split(const Element<S>& a, int site) {
    if (site < 0 || 2 * site + 1 >= a.spin()->size()) throw std::invalid_argument("grading_split: invalid site");
    Mask site_mask = Mask{3} << (2 * site);
    Element<S> even(a.spin()), odd(a.spin());
    for (const auto& [m, c] : a.terms()) (std::popcount(m & site_mask) % 2 == 0 ? even : odd).add_term(m, c);
    return {even, odd};
}

}  // namespace qholo

#endif
