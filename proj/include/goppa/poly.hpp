#ifndef GOPPA_POLY_HPP
#define GOPPA_POLY_HPP

#include <utility>
#include <vector>

#include "goppa/field.hpp"

// Dense univariate polynomials over one field context, constant term first.

namespace goppa {

struct Poly {
    const FieldCtx* ctx = nullptr;
    std::vector<uint32_t> c;  // normalized: empty for the zero polynomial

    int degree() const { return int(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    uint32_t coeff(int i) const { return i >= 0 && i < int(c.size()) ? c[i] : 0; }

    bool operator==(const Poly& o) const { return ctx == o.ctx && c == o.c; }
    bool operator!=(const Poly& o) const { return !(*this == o); }
};

Poly poly_zero(const FieldCtx& f);
Poly poly_const(const FieldCtx& f, uint32_t a);
Poly poly_from(const FieldCtx& f, std::vector<uint32_t> coeffs);  // normalizes

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly poly_scale(const Poly& a, uint32_t s);
Poly poly_make_monic(const Poly& a);

// quotient/remainder; divisor must be nonzero
std::pair<Poly, Poly> poly_divmod(const Poly& num, const Poly& den);
Poly poly_mod(const Poly& num, const Poly& den);

uint32_t poly_eval(const Poly& a, uint32_t x);

// inverse of a modulo mod (requires gcd(a, mod) = 1); extended Euclid
Poly poly_inverse_mod(const Poly& a, const Poly& mod);

// coefficient-wise image under an embedding
Poly poly_lift(const Embedding& emb, const Poly& a);

/* Monic minimal polynomial over F_{q^n} of a top-field element of degree
 * exactly r: the product of (x - alpha^{q^{n i}}) over the r conjugates,
 * with coefficients pulled back through the mid-to-top embedding.
 */
Poly minimal_polynomial(const Tower& tw, Fe alpha);

}  // namespace goppa

#endif
