#ifndef GOPPA_FIELD_HPP
#define GOPPA_FIELD_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "goppa/common.hpp"

/*
 * Exact arithmetic in the tower F_p < F_q < F_{q^n} < F_{q^{nr}}.
 *
 * Every field is realized as F_p[x]/(f) where f is the lexicographically
 * smallest primitive polynomial of the required degree (coefficient tuples
 * compared from the highest non-leading coefficient down, digits 0 < 1 < ...
 * < p-1). The residue class of x is the designated primitive element.
 *
 * Element representation: rep = sum c_i * p^i packs the coordinate vector
 * (c_0, ..., c_{d-1}) in the power basis of the modulus root. For p = 2 this
 * makes addition a XOR. Multiplicative structure goes through discrete-log
 * tables built once at construction.
 *
 * Discrete logs are reported in {1, ..., p^d - 1} with dlog(1) = p^d - 1,
 * so that dlog doubles as the column index of the fixed support order
 * (eps, eps^2, ..., eps^{q^n-1} = 1, 0); dlog(0) is the DLOG_ZERO sentinel.
 */

namespace goppa {

struct Params {
    int p = 0;  // prime characteristic
    int m = 0;  // q = p^m
    int n = 0;  // degree of F_{q^n} over F_q
    int r = 0;  // Goppa degree
    uint64_t q = 0, qn = 0, qnr = 0;  // field sizes (saturated, guarded at build)

    uint64_t code_length() const { return qn; }  // N
};

// Validates p prime, m,n >= 1, r >= 2. Throws std::invalid_argument.
Params make_params(int p, int m, int n, int r);

class FieldCtx {
public:
    static constexpr uint32_t DLOG_ZERO = 0xFFFFFFFFu;

    FieldCtx(int p, int degree, const Limits& lim);
    FieldCtx(const FieldCtx&) = delete;             // elements point at their context
    FieldCtx& operator=(const FieldCtx&) = delete;

    int characteristic() const { return p_; }
    int degree() const { return deg_; }
    uint32_t size() const { return size_; }
    uint32_t order() const { return size_ - 1; }    // multiplicative group order
    const std::vector<int>& modulus() const { return modulus_; }
    uint32_t primitive() const { return prim_; }

    uint32_t add(uint32_t a, uint32_t b) const {
        return p_ == 2 ? (a ^ b) : add_slow(a, b);
    }
    uint32_t neg(uint32_t a) const { return p_ == 2 ? a : neg_slow(a); }
    uint32_t sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }
    uint32_t mul(uint32_t a, uint32_t b) const {
        if (a == 0 || b == 0) return 0;
        return pow_[(uint64_t(log_[a]) + log_[b]) % order()];
    }
    uint32_t inv(uint32_t a) const;                 // throws on 0
    uint32_t pow(uint32_t a, int64_t e) const;      // 0^0 = 1; 0^neg throws
    uint32_t pow_of_primitive(uint64_t t) const { return pow_[t % order()]; }
    uint32_t dlog(uint32_t a) const { return log_[a]; }  // DLOG_ZERO for a = 0
    uint64_t elem_order(uint32_t a) const;          // throws on 0

    // x^{(q0)^e}; e may be any integer, reduced mod the q0-order of the field.
    uint32_t frobenius(uint32_t x, uint64_t q0, int64_t e) const;

    std::vector<int> coeffs(uint32_t rep) const;    // constant term first
    uint32_t from_coeffs(const std::vector<int>& c) const;

private:
    uint32_t add_slow(uint32_t a, uint32_t b) const;
    uint32_t neg_slow(uint32_t a) const;

    int p_ = 0, deg_ = 0;
    uint32_t size_ = 0, prim_ = 0;
    std::vector<int> modulus_;        // deg_+1 entries, constant first, monic
    std::vector<uint32_t> pow_;       // pow_[t] = rep of eps^t, t in [0, order)
    std::vector<uint32_t> log_;       // log_[rep] in {1..order}; log_[0] = DLOG_ZERO
};

// Element with its owning context; all operators check context identity.
struct Fe {
    uint32_t rep = 0;
    const FieldCtx* ctx = nullptr;

    bool is_zero() const { return rep == 0; }
    bool operator==(const Fe& o) const { return rep == o.rep && ctx == o.ctx; }
    bool operator!=(const Fe& o) const { return !(*this == o); }
};

namespace detail {
inline const FieldCtx& same_ctx(const Fe& a, const Fe& b) {
    if (a.ctx != b.ctx || a.ctx == nullptr)
        throw context_mismatch("field elements belong to different contexts");
    return *a.ctx;
}
}  // namespace detail

inline Fe operator+(Fe a, Fe b) { return {detail::same_ctx(a, b).add(a.rep, b.rep), a.ctx}; }
inline Fe operator-(Fe a, Fe b) { return {detail::same_ctx(a, b).sub(a.rep, b.rep), a.ctx}; }
inline Fe operator*(Fe a, Fe b) { return {detail::same_ctx(a, b).mul(a.rep, b.rep), a.ctx}; }
inline Fe operator-(Fe a) { return {a.ctx->neg(a.rep), a.ctx}; }
inline Fe operator/(Fe a, Fe b) { return {detail::same_ctx(a, b).mul(a.rep, b.ctx->inv(b.rep)), a.ctx}; }
inline Fe fe_pow(Fe a, int64_t e) { return {a.ctx->pow(a.rep, e), a.ctx}; }
inline Fe fe_zero(const FieldCtx& f) { return {0, &f}; }
inline Fe fe_one(const FieldCtx& f) { return {1, &f}; }

/* Injective ring homomorphism between two tower levels, realized as a full
 * forward table (source is desk scale) plus the inverse partial table used
 * for subfield membership tests and pullbacks.
 */
struct Embedding {
    static constexpr uint32_t NOT_IN_SUBFIELD = 0xFFFFFFFFu;

    const FieldCtx* src = nullptr;
    const FieldCtx* dst = nullptr;
    uint32_t image = 0;               // image of the source primitive element
    std::vector<uint32_t> fwd;        // src->size() entries
    std::vector<uint32_t> back;       // dst->size() entries or NOT_IN_SUBFIELD

    uint32_t map(uint32_t a) const { return fwd[a]; }
    Fe map(Fe a) const;
    bool contains(uint32_t b) const { return back[b] != NOT_IN_SUBFIELD; }
    uint32_t pullback(uint32_t b) const;  // throws std::domain_error if absent
};

class Tower {
public:
    static Tower build(const Params& params, const Limits& lim = {});

    const Params& params() const { return params_; }
    const FieldCtx& base() const { return *base_; }  // GF(q), degree m
    const FieldCtx& mid() const { return *mid_; }    // GF(q^n), degree nm
    const FieldCtx& top() const { return *top_; }    // GF(q^{nr}), degree nmr
    const Embedding& base_to_mid() const { return base_to_mid_; }
    const Embedding& mid_to_top() const { return mid_to_top_; }
    const Embedding& base_to_top() const { return base_to_top_; }  // the composite

    Fe base_elem(uint32_t rep) const { return {rep, base_.get()}; }
    Fe mid_elem(uint32_t rep) const { return {rep, mid_.get()}; }
    Fe top_elem(uint32_t rep) const { return {rep, top_.get()}; }

    // x^{q^e} for x in any tower context.
    Fe frobenius(Fe x, int64_t e) const;
    // [F_{q^n}(alpha) : F_{q^n}] for alpha in the top context; divides r.
    int degree_over(Fe alpha) const;

private:
    Tower() = default;
    Params params_;
    std::unique_ptr<FieldCtx> base_, mid_, top_;
    Embedding base_to_mid_, mid_to_top_, base_to_top_;
};

}  // namespace goppa

#endif
