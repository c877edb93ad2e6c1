#ifndef GOPPA_ACTIONS_HPP
#define GOPPA_ACTIONS_HPP

#include <vector>

#include "goppa/code.hpp"
#include "goppa/poly.hpp"

/*
 * Semiaffine actions.
 *
 * One triple (scale, shift, frob) serves two groups: as an element of
 * T = AGL(1,q^n)<sigma> it acts on roots by alpha -> scale*alpha^{q^frob} +
 * shift with frob counted mod nr; as an element of AGammaL(1,q^n) it acts on
 * points and polynomials with frob counted mod n. Composition therefore takes
 * the exponent modulus explicitly.
 */

namespace goppa {

struct SemiaffineMap {
    uint32_t scale = 1;  // mid-field rep, nonzero
    uint32_t shift = 0;  // mid-field rep
    int frob = 0;

    bool operator==(const SemiaffineMap& o) const {
        return scale == o.scale && shift == o.shift && frob == o.frob;
    }
};

SemiaffineMap canonical_map(const Tower& tw, SemiaffineMap psi, int exp_mod);
// f after g
SemiaffineMap compose_semiaffine(const Tower& tw, SemiaffineMap f, SemiaffineMap g, int exp_mod);
SemiaffineMap inverse_semiaffine(const Tower& tw, SemiaffineMap psi, int exp_mod);

// psi(z) = scale * z^{q^frob} + shift on the mid field
uint32_t apply_semiaffine(const Tower& tw, SemiaffineMap psi, uint32_t z_mid);

// the T-action on degree-r roots; preserves degree
Fe act_on_root(const Tower& tw, SemiaffineMap tau, Fe alpha);

// All elements of degree exactly r over F_{q^n}, ascending dlog.
struct RootSet {
    std::vector<uint32_t> members;
};
RootSet root_set(const Tower& tw, const Limits& lim = {});

// All monic irreducible degree-r polynomials, materialized from the roots.
struct PolyEntry {
    Poly poly;
    uint32_t min_root;  // dlog-least root, top-field rep
};
struct PolySet {
    std::vector<PolyEntry> entries;  // ascending by dlog of min_root
};
PolySet poly_set(const Tower& tw, const RootSet& roots);

// dlog-least root of an irreducible degree-r polynomial over the mid field
Fe min_root_of(const Tower& tw, const Poly& g);

/* Image of g under psi in AGammaL(1,q^n): the monic degree-r polynomial f
 * with g(alpha) = 0 iff f(beta) = 0 for beta = ((alpha-shift)/scale)^{q^{nr-t}}.
 * Computed as the minimal polynomial of the transformed root.
 */
Poly act_on_poly(const Tower& tw, SemiaffineMap psi, const Poly& g);

/* Independent route for the same action: with bar-ed q^t-th roots of the
 * data, f(x) is the monic normalization of sum_i gbar_i (abar x + bbar)^i.
 * Kept separate from act_on_poly so the two can be cross-checked.
 */
Poly act_on_poly_via_coefficients(const Tower& tw, SemiaffineMap psi, const Poly& g);

struct RootOrbit {
    uint32_t rep = 0;               // dlog-least member
    std::vector<uint32_t> members;  // ascending dlog
};
std::vector<RootOrbit> orbits_on_roots(const Tower& tw, const RootSet& roots,
                                       const Limits& lim = {});

struct PolyOrbit {
    int rep = 0;              // least PolySet index
    std::vector<int> members;  // ascending PolySet indices
};
std::vector<PolyOrbit> orbits_on_polys(const Tower& tw, const PolySet& polys,
                                       const Limits& lim = {});

/* True iff root -> minimal polynomial induces a bijection between the
 * T-orbits on the root set and the semiaffine orbits on the polynomial set.
 * False is an implementation fault, not a tolerated state.
 */
bool orbits_correspond(const Tower& tw, const std::vector<RootOrbit>& root_orbits,
                       const PolySet& polys, const std::vector<PolyOrbit>& poly_orbits);

}  // namespace goppa

#endif
