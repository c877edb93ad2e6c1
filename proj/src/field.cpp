#include "goppa/field.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace goppa {

Params make_params(int p, int m, int n, int r) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (r < 2) throw std::invalid_argument("r must be >= 2 (maximal irreducible setting)");
    Params pr;
    pr.p = p;
    pr.m = m;
    pr.n = n;
    pr.r = r;
    pr.q = ipow_sat(uint64_t(p), unsigned(m));
    pr.qn = ipow_sat(uint64_t(p), unsigned(m) * unsigned(n));
    pr.qnr = ipow_sat(uint64_t(p), unsigned(m) * unsigned(n) * unsigned(r));
    return pr;
}

namespace {

// Multiply a coordinate vector by x and reduce by the monic modulus.
void mulx_inplace(std::vector<int>& cur, const std::vector<int>& mod, int p) {
    const int d = int(cur.size());
    const int carry = cur[d - 1];
    for (int i = d - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (carry != 0) {
        for (int i = 0; i < d; ++i) {
            int v = (cur[i] - carry * mod[i]) % p;
            cur[i] = v < 0 ? v + p : v;
        }
    }
}

uint32_t pack(const std::vector<int>& digits, int p) {
    uint32_t rep = 0;
    for (int i = int(digits.size()) - 1; i >= 0; --i) rep = rep * uint32_t(p) + uint32_t(digits[i]);
    return rep;
}

}  // namespace

FieldCtx::FieldCtx(int p, int degree, const Limits& lim) : p_(p), deg_(degree) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (degree < 1) throw std::invalid_argument("field degree must be >= 1");
    uint64_t sz = ipow_sat(uint64_t(p), unsigned(degree));
    if (sz > lim.max_field_size)
        throw size_guard_error("field of size p^" + std::to_string(degree) +
                               " exceeds the table guard");
    size_ = uint32_t(sz);

    /* Scan monic candidates x^d + c_{d-1}x^{d-1} + ... + c_0 in lex order on
     * (c_{d-1}, ..., c_0); that order coincides with the numeric order of the
     * packed value with c_{d-1} most significant. A candidate is accepted iff
     * the walk of x-powers first returns to 1 at step p^d - 1, which forces
     * both irreducibility and primitivity of x.
     */
    std::vector<int> cand(degree + 1, 0);
    cand[degree] = 1;
    std::vector<int> cur(degree, 0);
    const uint64_t ord = sz - 1;
    for (uint64_t v = 0; v < sz; ++v) {
        uint64_t t = v;
        for (int i = degree - 1; i >= 0; --i) {
            uint64_t pw = ipow_sat(uint64_t(p), unsigned(i));
            cand[i] = int(t / pw);
            t %= pw;
        }
        if (cand[0] == 0) continue;  // x not a unit
        std::fill(cur.begin(), cur.end(), 0);
        cur[0] = 1;
        pow_.assign(1, 1);
        pow_.reserve(ord);
        bool primitive = true;
        for (uint64_t step = 1; step < ord; ++step) {
            mulx_inplace(cur, cand, p);
            uint32_t rep = pack(cur, p);
            if (rep == 1) {
                primitive = false;
                break;
            }
            pow_.push_back(rep);
        }
        if (!primitive) continue;
        mulx_inplace(cur, cand, p);
        if (pack(cur, p) != 1) continue;  // x is not even a unit of full order
        modulus_ = cand;
        break;
    }
    if (modulus_.empty())
        throw std::logic_error("no primitive modulus found; impossible for prime p");

    prim_ = degree > 1 ? uint32_t(p) : pow_[1 % ord];
    if (ord == 1) prim_ = 1;  // GF(2): the only primitive element
    log_.assign(size_, DLOG_ZERO);
    for (uint64_t t = 1; t <= ord; ++t) log_[pow_[t % ord]] = uint32_t(t);
}

uint32_t FieldCtx::add_slow(uint32_t a, uint32_t b) const {
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < deg_; ++i) {
        uint32_t da = a % uint32_t(p_), db = b % uint32_t(p_);
        a /= uint32_t(p_);
        b /= uint32_t(p_);
        out += (da + db) % uint32_t(p_) * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

uint32_t FieldCtx::neg_slow(uint32_t a) const {
    uint32_t out = 0, mult = 1;
    for (int i = 0; i < deg_; ++i) {
        uint32_t da = a % uint32_t(p_);
        a /= uint32_t(p_);
        out += (da == 0 ? 0 : uint32_t(p_) - da) * mult;
        mult *= uint32_t(p_);
    }
    return out;
}

uint32_t FieldCtx::inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("inversion of zero");
    return pow_[(order() - log_[a] % order()) % order()];
}

uint32_t FieldCtx::pow(uint32_t a, int64_t e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("negative power of zero");
        return 0;
    }
    const int64_t ord = int64_t(order());
    int64_t t = (int64_t(log_[a]) % ord) * (e % ord) % ord;
    if (t < 0) t += ord;
    return pow_[uint64_t(t)];
}

uint64_t FieldCtx::elem_order(uint32_t a) const {
    if (a == 0) throw std::domain_error("order of zero");
    return order() / gcd_u64(order(), log_[a] % order());
}

uint32_t FieldCtx::frobenius(uint32_t x, uint64_t q0, int64_t e) const {
    if (x == 0) return 0;
    // distinct maps x -> x^{q0^e} repeat with period k = [field : F_{q0}]
    int64_t k = 1;
    for (uint64_t v = q0; v < size_; v *= q0) ++k;
    int64_t er = e % k;
    if (er < 0) er += k;
    return pow(x, int64_t(modpow(q0, uint64_t(er), order())));
}

std::vector<int> FieldCtx::coeffs(uint32_t rep) const {
    std::vector<int> out(deg_);
    for (int i = 0; i < deg_; ++i) {
        out[i] = int(rep % uint32_t(p_));
        rep /= uint32_t(p_);
    }
    return out;
}

uint32_t FieldCtx::from_coeffs(const std::vector<int>& c) const {
    if (int(c.size()) != deg_) throw std::invalid_argument("coefficient count != degree");
    uint32_t rep = 0;
    for (int i = deg_ - 1; i >= 0; --i) {
        if (c[i] < 0 || c[i] >= p_) throw std::invalid_argument("coefficient out of range");
        rep = rep * uint32_t(p_) + uint32_t(c[i]);
    }
    return rep;
}

Fe Embedding::map(Fe a) const {
    if (a.ctx != src) throw context_mismatch("embedding applied to foreign element");
    return {fwd[a.rep], dst};
}

uint32_t Embedding::pullback(uint32_t b) const {
    if (back[b] == NOT_IN_SUBFIELD)
        throw std::domain_error("element does not lie in the embedded subfield");
    return back[b];
}

namespace {

uint32_t eval_modulus(const FieldCtx& f, const std::vector<int>& mod, uint32_t x) {
    // Horner; modulus coefficients are prime-field digits, valid reps in any ctx.
    uint32_t acc = 0;
    for (int i = int(mod.size()) - 1; i >= 0; --i)
        acc = f.add(f.mul(acc, x), uint32_t(mod[i]));
    return acc;
}

Embedding make_embedding(const FieldCtx& src, const FieldCtx& dst) {
    if (dst.degree() % src.degree() != 0)
        throw std::invalid_argument("source degree does not divide target degree");
    // The source modulus splits in dst; take the root of smallest dlog.
    uint32_t image = 0;
    uint32_t best = 0xFFFFFFFFu;
    for (uint64_t t = 1; t <= dst.order(); ++t) {
        uint32_t z = dst.pow_of_primitive(t);
        if (eval_modulus(dst, src.modulus(), z) == 0) {
            image = z;
            best = uint32_t(t);
            break;  // dlog order is ascending in t
        }
    }
    if (best == 0xFFFFFFFFu)
        throw std::logic_error("source modulus has no root in the target field");

    Embedding emb;
    emb.src = &src;
    emb.dst = &dst;
    emb.image = image;
    emb.fwd.assign(src.size(), 0);
    emb.back.assign(dst.size(), Embedding::NOT_IN_SUBFIELD);
    emb.back[0] = 0;
    const uint64_t ilog = dst.dlog(image) % dst.order();
    for (uint64_t t = 0; t < src.order(); ++t) {
        uint32_t s = src.pow_of_primitive(t);
        uint32_t d = dst.pow_of_primitive(ilog * t % dst.order());
        emb.fwd[s] = d;
        emb.back[d] = s;
    }
    return emb;
}

Embedding compose_embeddings(const Embedding& lo, const Embedding& hi) {
    Embedding emb;
    emb.src = lo.src;
    emb.dst = hi.dst;
    emb.image = hi.fwd[lo.image];
    emb.fwd.assign(lo.src->size(), 0);
    emb.back.assign(hi.dst->size(), Embedding::NOT_IN_SUBFIELD);
    for (uint32_t a = 0; a < lo.src->size(); ++a) {
        uint32_t b = hi.fwd[lo.fwd[a]];
        emb.fwd[a] = b;
        emb.back[b] = a;
    }
    return emb;
}

}  // namespace

Tower Tower::build(const Params& params, const Limits& lim) {
    if (!is_prime(params.p) || params.m < 1 || params.n < 1 || params.r < 2)
        throw std::invalid_argument("invalid tower parameters");
    Tower tw;
    tw.params_ = params;
    tw.base_ = std::make_unique<FieldCtx>(params.p, params.m, lim);
    tw.mid_ = std::make_unique<FieldCtx>(params.p, params.m * params.n, lim);
    tw.top_ = std::make_unique<FieldCtx>(params.p, params.m * params.n * params.r, lim);
    tw.base_to_mid_ = make_embedding(*tw.base_, *tw.mid_);
    tw.mid_to_top_ = make_embedding(*tw.mid_, *tw.top_);
    tw.base_to_top_ = compose_embeddings(tw.base_to_mid_, tw.mid_to_top_);
    return tw;
}

Fe Tower::frobenius(Fe x, int64_t e) const {
    if (x.ctx != base_.get() && x.ctx != mid_.get() && x.ctx != top_.get())
        throw context_mismatch("element does not belong to this tower");
    return {x.ctx->frobenius(x.rep, params_.q, e), x.ctx};
}

int Tower::degree_over(Fe alpha) const {
    if (alpha.ctx != top_.get()) throw context_mismatch("degree_over expects a top-field element");
    const uint64_t qn = params_.qn;
    uint32_t cur = top_->frobenius(alpha.rep, qn, 1);
    int d = 1;
    while (cur != alpha.rep) {
        cur = top_->frobenius(cur, qn, 1);
        ++d;
    }
    return d;
}

}  // namespace goppa
