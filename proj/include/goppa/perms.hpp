#ifndef GOPPA_PERMS_HPP
#define GOPPA_PERMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "goppa/actions.hpp"

/*
 * Column permutations of the length-N support.
 *
 * A ColumnPerm is a point map on positions: img[i] is where position i goes.
 * Two ways to apply it to a row vector:
 *   pull(p, v)[i] = v[p(i)]   -- how permuted parity rows are compared
 *   push(p, v)[p(i)] = v[i]   -- how codeword coordinates are reindexed
 * push is a left action (push(a, push(b, v)) = push(compose(a,b), v));
 * pull is push by the inverse.
 */

namespace goppa {

struct ColumnPerm {
    std::vector<uint32_t> img;

    int size() const { return int(img.size()); }
    bool operator==(const ColumnPerm& o) const { return img == o.img; }
    bool operator!=(const ColumnPerm& o) const { return !(*this == o); }
};

ColumnPerm identity_perm(int n);
ColumnPerm compose(const ColumnPerm& a, const ColumnPerm& b);  // i -> a(b(i))
ColumnPerm inverse(const ColumnPerm& p);
bool is_permutation(const ColumnPerm& p);

template <typename T>
std::vector<T> pull(const ColumnPerm& p, const std::vector<T>& v) {
    std::vector<T> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = v[p.img[i]];
    return out;
}

template <typename T>
std::vector<T> push(const ColumnPerm& p, const std::vector<T>& v) {
    std::vector<T> out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[p.img[i]] = v[i];
    return out;
}

int perm_sign(const ColumnPerm& p);
std::vector<int> cycle_lengths(const ColumnPerm& p);    // descending
std::string cycle_type_string(const ColumnPerm& p);     // e.g. "2^4 1^8"

// position map induced by psi in AGammaL(1,q^n) acting on the support
ColumnPerm column_perm(const Tower& tw, SemiaffineMap psi);

/* Inverse of column_perm: recovers the unique (a, b, t mod n), anchored at
 * the images of 0 and eps and then verified on all N positions. Returns
 * nothing when the permutation is not a semiaffine column action.
 */
std::optional<SemiaffineMap> decode_semiaffine(const Tower& tw, const ColumnPerm& perm);

/* The compatibility element delta = alpha - zeta^{-1} beta^{q^j}; the
 * quadruple links the parity rows iff delta lies in the embedded GF(q^n).
 */
std::optional<uint32_t> linking_delta(const Tower& tw, uint32_t zeta_mid, int j,
                                      Fe alpha, Fe beta);

/* The permutation rho with pull(rho, H_alpha) = zeta * H_beta^{q^j},
 * built as the column action of z -> zeta^{-1} z^{q^j} + delta.
 * Throws std::domain_error when the quadruple is incompatible.
 */
ColumnPerm linking_perm(const Tower& tw, uint32_t zeta_mid, int j, Fe alpha, Fe beta);

// entrywise check of the linking identity
bool verify_linking(const Tower& tw, const ColumnPerm& rho, const ParityRow& row_alpha,
                    const ParityRow& row_beta, uint32_t zeta_mid, int j);

// whether every generator of the semiaffine column group is even
bool semiaffine_in_alternating(const Tower& tw);

/* Image of psi inside AGL(nm, p): matrix and translation vector over F_p in
 * the power-basis coordinates of GF(q^n). Construction verifies the pair
 * against psi on every point.
 */
struct AffineRep {
    int p = 0;
    int dim = 0;
    std::vector<uint8_t> mat;  // row-major dim x dim
    std::vector<uint8_t> vec;

    bool operator==(const AffineRep& o) const {
        return p == o.p && dim == o.dim && mat == o.mat && vec == o.vec;
    }
    bool is_translation() const;
};

AffineRep affine_embed(const Tower& tw, SemiaffineMap psi);
AffineRep affine_compose(const AffineRep& f, const AffineRep& g);  // f after g
std::vector<uint8_t> affine_apply(const AffineRep& f, const std::vector<uint8_t>& point);

}  // namespace goppa

#endif
