#include "goppa/poly.hpp"

#include <stdexcept>

namespace goppa {

namespace {
const FieldCtx& same_ctx(const Poly& a, const Poly& b) {
    if (a.ctx != b.ctx || a.ctx == nullptr)
        throw context_mismatch("polynomials belong to different contexts");
    return *a.ctx;
}

void normalize(Poly& a) {
    while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}
}  // namespace

Poly poly_zero(const FieldCtx& f) { return {&f, {}}; }

Poly poly_const(const FieldCtx& f, uint32_t a) {
    Poly out{&f, {a}};
    normalize(out);
    return out;
}

Poly poly_from(const FieldCtx& f, std::vector<uint32_t> coeffs) {
    Poly out{&f, std::move(coeffs)};
    normalize(out);
    return out;
}

Poly operator+(const Poly& a, const Poly& b) {
    const FieldCtx& f = same_ctx(a, b);
    Poly out{&f, std::vector<uint32_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.add(a.coeff(int(i)), b.coeff(int(i)));
    normalize(out);
    return out;
}

Poly operator-(const Poly& a, const Poly& b) {
    const FieldCtx& f = same_ctx(a, b);
    Poly out{&f, std::vector<uint32_t>(std::max(a.c.size(), b.c.size()), 0)};
    for (size_t i = 0; i < out.c.size(); ++i) out.c[i] = f.sub(a.coeff(int(i)), b.coeff(int(i)));
    normalize(out);
    return out;
}

Poly operator*(const Poly& a, const Poly& b) {
    const FieldCtx& f = same_ctx(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(f);
    Poly out{&f, std::vector<uint32_t>(a.c.size() + b.c.size() - 1, 0)};
    for (size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        for (size_t j = 0; j < b.c.size(); ++j)
            out.c[i + j] = f.add(out.c[i + j], f.mul(a.c[i], b.c[j]));
    }
    normalize(out);
    return out;
}

Poly poly_scale(const Poly& a, uint32_t s) {
    Poly out = a;
    for (auto& ci : out.c) ci = a.ctx->mul(ci, s);
    normalize(out);
    return out;
}

Poly poly_make_monic(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("cannot normalize the zero polynomial");
    return poly_scale(a, a.ctx->inv(a.c.back()));
}

std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den) {
    const FieldCtx& f = same_ctx(num, den);
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly rem = num;
    Poly quo{&f, {}};
    if (num.degree() >= den.degree()) quo.c.assign(size_t(num.degree() - den.degree()) + 1, 0);
    const uint32_t lead_inv = f.inv(den.c.back());
    while (!rem.is_zero() && rem.degree() >= den.degree()) {
        int shift = rem.degree() - den.degree();
        uint32_t coef = f.mul(rem.c.back(), lead_inv);
        quo.c[size_t(shift)] = coef;
        for (size_t i = 0; i < den.c.size(); ++i)
            rem.c[size_t(shift) + i] = f.sub(rem.c[size_t(shift) + i], f.mul(coef, den.c[i]));
        normalize(rem);
    }
    normalize(quo);
    return {quo, rem};
}

Poly poly_mod(const Poly& num, const Poly& den) { return poly_divmod(num, den).second; }

uint32_t poly_eval(const Poly& a, uint32_t x) {
    const FieldCtx& f = *a.ctx;
    uint32_t acc = 0;
    for (int i = a.degree(); i >= 0; --i) acc = f.add(f.mul(acc, x), a.c[size_t(i)]);
    return acc;
}

Poly poly_inverse_mod(const Poly& a, const Poly& mod) {
    const FieldCtx& f = same_ctx(a, mod);
    // extended Euclid: old_r*x + ... = gcd, tracking the a-cofactor only
    Poly old_r = mod, r = poly_mod(a, mod);
    Poly old_s = poly_zero(f), s = poly_const(f, 1);
    while (!r.is_zero()) {
        auto [q, rem] = poly_divmod(old_r, r);
        Poly new_s = old_s - q * s;
        old_r = r;
        r = rem;
        old_s = s;
        s = new_s;
    }
    if (old_r.degree() != 0)
        throw std::domain_error("element is not invertible modulo the given polynomial");
    return poly_mod(poly_scale(old_s, f.inv(old_r.c[0])), mod);
}

Poly poly_lift(const Embedding& emb, const Poly& a) {
    if (a.ctx != emb.src) throw context_mismatch("poly_lift: wrong source context");
    Poly out{emb.dst, a.c};
    for (auto& ci : out.c) ci = emb.map(ci);
    return out;
}

Poly minimal_polynomial(const Tower& tw, Fe alpha) {
    const int r = tw.params().r;
    if (tw.degree_over(alpha) != r)
        throw std::domain_error("minimal_polynomial requires an element of degree exactly r");
    const FieldCtx& top = tw.top();
    Poly prod = poly_const(top, 1);
    Fe conj = alpha;
    for (int i = 0; i < r; ++i) {
        Poly linear = poly_from(top, {top.neg(conj.rep), 1});  // x - conj
        prod = prod * linear;
        conj = tw.frobenius(conj, tw.params().n);
    }
    // coefficients land in the embedded mid field; pull back
    Poly out{&tw.mid(), prod.c};
    for (auto& ci : out.c) ci = tw.mid_to_top().pullback(ci);
    return out;
}

}  // namespace goppa
