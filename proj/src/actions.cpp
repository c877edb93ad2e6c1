#include "goppa/actions.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

namespace goppa {

SemiaffineMap canonical_map(const Tower& tw, SemiaffineMap psi, int exp_mod) {
    if (psi.scale == 0) throw std::invalid_argument("semiaffine map with zero scale");
    if (psi.scale >= tw.mid().size() || psi.shift >= tw.mid().size())
        throw std::invalid_argument("semiaffine coefficients outside GF(q^n)");
    psi.frob %= exp_mod;
    if (psi.frob < 0) psi.frob += exp_mod;
    return psi;
}

SemiaffineMap compose_semiaffine(const Tower& tw, SemiaffineMap f, SemiaffineMap g, int exp_mod) {
    const FieldCtx& mid = tw.mid();
    const uint64_t q = tw.params().q;
    SemiaffineMap out;
    out.scale = mid.mul(f.scale, mid.frobenius(g.scale, q, f.frob));
    out.shift = mid.add(mid.mul(f.scale, mid.frobenius(g.shift, q, f.frob)), f.shift);
    out.frob = f.frob + g.frob;
    return canonical_map(tw, out, exp_mod);
}

SemiaffineMap inverse_semiaffine(const Tower& tw, SemiaffineMap psi, int exp_mod) {
    const FieldCtx& mid = tw.mid();
    const uint64_t q = tw.params().q;
    psi = canonical_map(tw, psi, exp_mod);
    const int tinv = (exp_mod - psi.frob) % exp_mod;
    const uint32_t ainv = mid.inv(psi.scale);
    SemiaffineMap out;
    out.scale = mid.frobenius(ainv, q, tinv);
    out.shift = mid.frobenius(mid.neg(mid.mul(psi.shift, ainv)), q, tinv);
    out.frob = tinv;
    return canonical_map(tw, out, exp_mod);
}

uint32_t apply_semiaffine(const Tower& tw, SemiaffineMap psi, uint32_t z_mid) {
    const FieldCtx& mid = tw.mid();
    if (psi.scale == 0) throw std::invalid_argument("semiaffine map with zero scale");
    return mid.add(mid.mul(psi.scale, mid.frobenius(z_mid, tw.params().q, psi.frob)), psi.shift);
}

Fe act_on_root(const Tower& tw, SemiaffineMap tau, Fe alpha) {
    if (tau.scale == 0) throw std::invalid_argument("semiaffine map with zero scale");
    if (alpha.ctx != &tw.top()) throw context_mismatch("act_on_root expects a top-field element");
    Fe zeta = tw.top_elem(tw.mid_to_top().map(tau.scale));
    Fe xi = tw.top_elem(tw.mid_to_top().map(tau.shift));
    return zeta * tw.frobenius(alpha, tau.frob) + xi;
}

RootSet root_set(const Tower& tw, const Limits& lim) {
    const FieldCtx& top = tw.top();
    const int r = tw.params().r;
    RootSet out;
    for (uint64_t t = 1; t <= top.order(); ++t) {
        uint32_t x = top.pow_of_primitive(t);
        if (tw.degree_over(tw.top_elem(x)) == r) out.members.push_back(x);
        if (out.members.size() > lim.max_root_set)
            throw size_guard_error("root set exceeds enumeration guard");
    }
    return out;
}

PolySet poly_set(const Tower& tw, const RootSet& roots) {
    const FieldCtx& top = tw.top();
    PolySet out;
    std::vector<bool> seen(top.size(), false);
    for (uint32_t root : roots.members) {
        if (seen[root]) continue;
        Fe conj = tw.top_elem(root);
        for (int i = 0; i < tw.params().r; ++i) {
            seen[conj.rep] = true;
            conj = tw.frobenius(conj, tw.params().n);
        }
        out.entries.push_back({minimal_polynomial(tw, tw.top_elem(root)), root});
    }
    if (out.entries.size() * size_t(tw.params().r) != roots.members.size())
        throw falsification_error("conjugacy classes do not tile the root set");
    return out;
}

Fe min_root_of(const Tower& tw, const Poly& g) {
    if (g.ctx != &tw.mid()) throw context_mismatch("expected a polynomial over GF(q^n)");
    const FieldCtx& top = tw.top();
    Poly lifted = poly_lift(tw.mid_to_top(), g);
    for (uint64_t t = 1; t <= top.order(); ++t) {
        uint32_t x = top.pow_of_primitive(t);
        if (poly_eval(lifted, x) == 0) return tw.top_elem(x);
    }
    throw std::domain_error("polynomial has no root in GF(q^{nr})");
}

Poly act_on_poly(const Tower& tw, SemiaffineMap psi, const Poly& g) {
    psi = canonical_map(tw, psi, tw.params().n);
    const FieldCtx& top = tw.top();
    const int nr = tw.params().n * tw.params().r;
    Fe alpha = min_root_of(tw, g);
    uint32_t ahat = tw.mid_to_top().map(psi.scale);
    uint32_t bhat = tw.mid_to_top().map(psi.shift);
    uint32_t beta = top.mul(top.sub(alpha.rep, bhat), top.inv(ahat));
    beta = top.frobenius(beta, tw.params().q, nr - psi.frob);
    return minimal_polynomial(tw, tw.top_elem(beta));
}

Poly act_on_poly_via_coefficients(const Tower& tw, SemiaffineMap psi, const Poly& g) {
    psi = canonical_map(tw, psi, tw.params().n);
    const FieldCtx& mid = tw.mid();
    const uint64_t q = tw.params().q;
    const int n = tw.params().n;
    const int e = (n - psi.frob) % n;  // q^e-th power = q^t-th root in GF(q^n)
    Poly affine = poly_from(mid, {mid.frobenius(psi.shift, q, e), mid.frobenius(psi.scale, q, e)});
    Poly acc = poly_zero(mid);
    for (int i = g.degree(); i >= 0; --i) {
        acc = acc * affine + poly_const(mid, mid.frobenius(g.coeff(i), q, e));
    }
    if (acc.degree() != g.degree())
        throw falsification_error("coefficient-route image degenerated in degree");
    return poly_make_monic(acc);
}

namespace {

std::vector<SemiaffineMap> group_generators(const Tower& tw) {
    const uint32_t eps = tw.mid().primitive();
    return {
        {eps, 0, 0},  // multiplication by the primitive element
        {1, eps, 0},  // translation by the primitive element
        {1, 0, 1},    // Frobenius
    };
}

}  // namespace

std::vector<RootOrbit> orbits_on_roots(const Tower& tw, const RootSet& roots, const Limits& lim) {
    if (roots.members.size() > lim.max_root_set)
        throw size_guard_error("root set exceeds orbit enumeration guard");
    const int nr = tw.params().n * tw.params().r;
    const auto gens = group_generators(tw);
    std::vector<bool> visited(tw.top().size(), false);
    std::vector<RootOrbit> orbits;
    for (uint32_t start : roots.members) {  // ascending dlog
        if (visited[start]) continue;
        RootOrbit orb;
        std::deque<uint32_t> queue{start};
        visited[start] = true;
        while (!queue.empty()) {
            uint32_t cur = queue.front();
            queue.pop_front();
            orb.members.push_back(cur);
            for (const auto& gen : gens) {
                uint32_t nxt = act_on_root(tw, canonical_map(tw, gen, nr), tw.top_elem(cur)).rep;
                if (!visited[nxt]) {
                    visited[nxt] = true;
                    queue.push_back(nxt);
                }
            }
        }
        std::sort(orb.members.begin(), orb.members.end(),
                  [&](uint32_t a, uint32_t b) { return tw.top().dlog(a) < tw.top().dlog(b); });
        orb.rep = orb.members.front();
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

std::vector<PolyOrbit> orbits_on_polys(const Tower& tw, const PolySet& polys, const Limits& lim) {
    if (polys.entries.size() > lim.max_poly_set)
        throw size_guard_error("polynomial set exceeds orbit enumeration guard");
    const auto gens = group_generators(tw);
    std::map<std::vector<uint32_t>, int> index_of;
    for (size_t i = 0; i < polys.entries.size(); ++i) index_of[polys.entries[i].poly.c] = int(i);

    std::vector<bool> visited(polys.entries.size(), false);
    std::vector<PolyOrbit> orbits;
    for (int start = 0; start < int(polys.entries.size()); ++start) {
        if (visited[size_t(start)]) continue;
        PolyOrbit orb;
        std::deque<int> queue{start};
        visited[size_t(start)] = true;
        while (!queue.empty()) {
            int cur = queue.front();
            queue.pop_front();
            orb.members.push_back(cur);
            for (const auto& gen : gens) {
                Poly img = act_on_poly(tw, gen, polys.entries[size_t(cur)].poly);
                auto it = index_of.find(img.c);
                if (it == index_of.end())
                    throw falsification_error("polynomial action left the irreducible set");
                if (!visited[size_t(it->second)]) {
                    visited[size_t(it->second)] = true;
                    queue.push_back(it->second);
                }
            }
        }
        std::sort(orb.members.begin(), orb.members.end());
        orb.rep = orb.members.front();
        orbits.push_back(std::move(orb));
    }
    return orbits;
}

bool orbits_correspond(const Tower& tw, const std::vector<RootOrbit>& root_orbits,
                       const PolySet& polys, const std::vector<PolyOrbit>& poly_orbits) {
    // polyset index of every root, via conjugacy
    std::vector<int> index_of_root(tw.top().size(), -1);
    for (size_t i = 0; i < polys.entries.size(); ++i) {
        Fe conj = tw.top_elem(polys.entries[i].min_root);
        for (int j = 0; j < tw.params().r; ++j) {
            index_of_root[conj.rep] = int(i);
            conj = tw.frobenius(conj, tw.params().n);
        }
    }
    std::vector<int> orbit_of_poly(polys.entries.size(), -1);
    for (size_t o = 0; o < poly_orbits.size(); ++o)
        for (int idx : poly_orbits[o].members) orbit_of_poly[size_t(idx)] = int(o);

    if (root_orbits.size() != poly_orbits.size()) return false;
    std::vector<bool> hit(poly_orbits.size(), false);
    for (const auto& orb : root_orbits) {
        std::vector<int> image;
        for (uint32_t root : orb.members) {
            int idx = index_of_root[root];
            if (idx < 0) return false;
            image.push_back(idx);
        }
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        const int target = orbit_of_poly[size_t(image.front())];
        std::vector<int> expected = poly_orbits[size_t(target)].members;
        if (image != expected) return false;  // S-orbit must cover one P-orbit exactly
        if (hit[size_t(target)]) return false;
        hit[size_t(target)] = true;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

}  // namespace goppa
