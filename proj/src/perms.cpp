#include "goppa/perms.hpp"

#include <algorithm>
#include <map>

namespace goppa {

ColumnPerm identity_perm(int n) {
    ColumnPerm p;
    p.img.resize(size_t(n));
    for (int i = 0; i < n; ++i) p.img[size_t(i)] = uint32_t(i);
    return p;
}

ColumnPerm compose(const ColumnPerm& a, const ColumnPerm& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of unequal size");
    ColumnPerm out;
    out.img.resize(a.img.size());
    for (size_t i = 0; i < a.img.size(); ++i) out.img[i] = a.img[b.img[i]];
    return out;
}

ColumnPerm inverse(const ColumnPerm& p) {
    ColumnPerm out;
    out.img.resize(p.img.size());
    for (size_t i = 0; i < p.img.size(); ++i) out.img[p.img[i]] = uint32_t(i);
    return out;
}

bool is_permutation(const ColumnPerm& p) {
    std::vector<bool> seen(p.img.size(), false);
    for (uint32_t v : p.img) {
        if (v >= p.img.size() || seen[v]) return false;
        seen[v] = true;
    }
    return true;
}

std::vector<int> cycle_lengths(const ColumnPerm& p) {
    std::vector<bool> seen(p.img.size(), false);
    std::vector<int> lens;
    for (size_t i = 0; i < p.img.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t cur = i;
        while (!seen[cur]) {
            seen[cur] = true;
            cur = p.img[cur];
            ++len;
        }
        lens.push_back(len);
    }
    std::sort(lens.rbegin(), lens.rend());
    return lens;
}

int perm_sign(const ColumnPerm& p) {
    int transpositions = 0;
    for (int len : cycle_lengths(p)) transpositions += len - 1;
    return transpositions % 2 == 0 ? 1 : -1;
}

std::string cycle_type_string(const ColumnPerm& p) {
    std::vector<int> lens = cycle_lengths(p);
    std::string out;
    for (size_t i = 0; i < lens.size();) {
        size_t j = i;
        while (j < lens.size() && lens[j] == lens[i]) ++j;
        if (!out.empty()) out += ' ';
        out += std::to_string(lens[i]) + '^' + std::to_string(j - i);
        i = j;
    }
    return out;
}

ColumnPerm column_perm(const Tower& tw, SemiaffineMap psi) {
    psi = canonical_map(tw, psi, tw.params().n);
    const FieldCtx& mid = tw.mid();
    const int N = int(mid.size());
    ColumnPerm out;
    out.img.resize(size_t(N));
    for (int pos = 0; pos < N; ++pos) {
        uint32_t z = support_element(mid, pos);
        out.img[size_t(pos)] = uint32_t(support_position(mid, apply_semiaffine(tw, psi, z)));
    }
    return out;
}

std::optional<SemiaffineMap> decode_semiaffine(const Tower& tw, const ColumnPerm& perm) {
    const FieldCtx& mid = tw.mid();
    const int N = int(mid.size());
    const int n = tw.params().n;
    const uint64_t q = tw.params().q;
    if (perm.size() != N || !is_permutation(perm)) return std::nullopt;

    const uint32_t eps = mid.primitive();
    const uint32_t shift = support_element(mid, int(perm.img[size_t(support_position(mid, 0))]));
    const uint32_t eps_image =
        support_element(mid, int(perm.img[size_t(support_position(mid, eps))]));
    for (int t = 0; t < n; ++t) {
        const uint32_t denom = mid.frobenius(eps, q, t);
        const uint32_t scale = mid.mul(mid.sub(eps_image, shift), mid.inv(denom));
        if (scale == 0) continue;
        SemiaffineMap psi{scale, shift, t};
        bool ok = true;
        for (int pos = 0; pos < N && ok; ++pos) {
            uint32_t z = support_element(mid, pos);
            ok = perm.img[size_t(pos)] ==
                 uint32_t(support_position(mid, apply_semiaffine(tw, psi, z)));
        }
        if (ok) return psi;
    }
    return std::nullopt;
}

std::optional<uint32_t> linking_delta(const Tower& tw, uint32_t zeta_mid, int j, Fe alpha,
                                      Fe beta) {
    if (zeta_mid == 0) throw std::invalid_argument("zeta must be nonzero");
    const FieldCtx& top = tw.top();
    const uint32_t zeta_top = tw.mid_to_top().map(zeta_mid);
    const uint32_t beta_qj = top.frobenius(beta.rep, tw.params().q, j);
    const uint32_t delta_top = top.sub(alpha.rep, top.mul(top.inv(zeta_top), beta_qj));
    if (!tw.mid_to_top().contains(delta_top)) return std::nullopt;
    return tw.mid_to_top().pullback(delta_top);
}

ColumnPerm linking_perm(const Tower& tw, uint32_t zeta_mid, int j, Fe alpha, Fe beta) {
    auto delta = linking_delta(tw, zeta_mid, j, alpha, beta);
    if (!delta)
        throw std::domain_error("quadruple does not link the parity rows: delta not in GF(q^n)");
    SemiaffineMap psi{tw.mid().inv(zeta_mid), *delta, j % tw.params().n};
    return column_perm(tw, psi);
}

bool verify_linking(const Tower& tw, const ColumnPerm& rho, const ParityRow& row_alpha,
                    const ParityRow& row_beta, uint32_t zeta_mid, int j) {
    const FieldCtx& top = tw.top();
    const uint32_t zeta_top = tw.mid_to_top().map(zeta_mid);
    if (rho.size() != int(row_alpha.entries.size())) return false;
    for (size_t pos = 0; pos < row_alpha.entries.size(); ++pos) {
        const uint32_t lhs = row_alpha.entries[rho.img[pos]];
        const uint32_t rhs =
            top.mul(zeta_top, top.frobenius(row_beta.entries[pos], tw.params().q, j));
        if (lhs != rhs) return false;
    }
    return true;
}

bool semiaffine_in_alternating(const Tower& tw) {
    const uint32_t eps = tw.mid().primitive();
    const SemiaffineMap gens[] = {{1, eps, 0}, {eps, 0, 0}, {1, 0, 1}};
    for (const auto& g : gens)
        if (perm_sign(column_perm(tw, g)) != 1) return false;
    return true;
}

bool AffineRep::is_translation() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (mat[size_t(i) * size_t(dim) + size_t(j)] != (i == j ? 1 : 0)) return false;
    return true;
}

AffineRep affine_embed(const Tower& tw, SemiaffineMap psi) {
    psi = canonical_map(tw, psi, tw.params().n);
    const FieldCtx& mid = tw.mid();
    const int d = mid.degree();
    AffineRep rep;
    rep.p = mid.characteristic();
    rep.dim = d;
    rep.mat.assign(size_t(d) * size_t(d), 0);

    const uint32_t b = apply_semiaffine(tw, psi, 0);
    std::vector<int> bc = mid.coeffs(b);
    rep.vec.assign(bc.begin(), bc.end());
    for (int col = 0; col < d; ++col) {
        uint32_t basis = mid.pow_of_primitive(uint64_t(col));
        uint32_t lin = mid.sub(apply_semiaffine(tw, psi, basis), b);
        std::vector<int> coords = mid.coeffs(lin);
        for (int row = 0; row < d; ++row)
            rep.mat[size_t(row) * size_t(d) + size_t(col)] = uint8_t(coords[size_t(row)]);
    }
    // the linear part of a semiaffine map is F_p-linear, so this cannot fire
    for (uint32_t z = 0; z < mid.size(); ++z) {
        std::vector<int> zc = mid.coeffs(z);
        std::vector<uint8_t> pt(zc.begin(), zc.end());
        std::vector<uint8_t> lhs = affine_apply(rep, pt);
        std::vector<int> want = mid.coeffs(apply_semiaffine(tw, psi, z));
        for (int i = 0; i < d; ++i)
            if (int(lhs[size_t(i)]) != want[size_t(i)])
                throw std::logic_error("affine embedding failed pointwise verification");
    }
    return rep;
}

AffineRep affine_compose(const AffineRep& f, const AffineRep& g) {
    if (f.p != g.p || f.dim != g.dim) throw std::invalid_argument("affine reps incompatible");
    const int d = f.dim, p = f.p;
    AffineRep out;
    out.p = p;
    out.dim = d;
    out.mat.assign(size_t(d) * size_t(d), 0);
    out.vec.assign(size_t(d), 0);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            int acc = 0;
            for (int k = 0; k < d; ++k)
                acc += int(f.mat[size_t(i) * size_t(d) + size_t(k)]) *
                       int(g.mat[size_t(k) * size_t(d) + size_t(j)]);
            out.mat[size_t(i) * size_t(d) + size_t(j)] = uint8_t(acc % p);
        }
        int acc = int(f.vec[size_t(i)]);
        for (int k = 0; k < d; ++k)
            acc += int(f.mat[size_t(i) * size_t(d) + size_t(k)]) * int(g.vec[size_t(k)]);
        out.vec[size_t(i)] = uint8_t(acc % p);
    }
    return out;
}

std::vector<uint8_t> affine_apply(const AffineRep& f, const std::vector<uint8_t>& point) {
    if (int(point.size()) != f.dim) throw std::invalid_argument("point dimension mismatch");
    std::vector<uint8_t> out(size_t(f.dim), 0);
    for (int i = 0; i < f.dim; ++i) {
        int acc = int(f.vec[size_t(i)]);
        for (int k = 0; k < f.dim; ++k)
            acc += int(f.mat[size_t(i) * size_t(f.dim) + size_t(k)]) * int(point[size_t(k)]);
        out[size_t(i)] = uint8_t(acc % f.p);
    }
    return out;
}

}  // namespace goppa
