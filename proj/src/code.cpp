#include "goppa/code.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace goppa {

uint32_t support_element(const FieldCtx& mid, int pos) {
    const int N = int(mid.size());
    if (pos < 0 || pos >= N) throw std::out_of_range("support position out of range");
    if (pos == N - 1) return 0;
    return mid.pow_of_primitive(uint64_t(pos) + 1);
}

int support_position(const FieldCtx& mid, uint32_t rep) {
    if (rep == 0) return int(mid.size()) - 1;
    return int(mid.dlog(rep)) - 1;
}

ParityRow build_parity_row(const Tower& tw, Fe alpha) {
    if (tw.degree_over(alpha) != tw.params().r)
        throw std::domain_error("parity row requires a root of degree exactly r");
    const FieldCtx& top = tw.top();
    const int N = int(tw.mid().size());
    ParityRow row;
    row.alpha = alpha.rep;
    row.entries.resize(size_t(N));
    for (int i = 0; i < N; ++i) {
        uint32_t li = tw.mid_to_top().map(support_element(tw.mid(), i));
        row.entries[size_t(i)] = top.inv(top.sub(alpha.rep, li));
    }
    return row;
}

std::vector<int> rref_inplace(const FieldCtx& f, std::vector<std::vector<uint32_t>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    const int ncols = int(rows[0].size());
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < rows.size(); ++col) {
        size_t sel = rank;
        while (sel < rows.size() && rows[sel][size_t(col)] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const uint32_t scale = f.inv(rows[rank][size_t(col)]);
        for (int j = col; j < ncols; ++j) rows[rank][size_t(j)] = f.mul(rows[rank][size_t(j)], scale);
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][size_t(col)] == 0) continue;
            const uint32_t factor = rows[i][size_t(col)];
            for (int j = col; j < ncols; ++j)
                rows[i][size_t(j)] = f.sub(rows[i][size_t(j)], f.mul(factor, rows[rank][size_t(j)]));
        }
        pivots.push_back(col);
        ++rank;
    }
    rows.resize(rank);
    return pivots;
}

LinearCode make_code(const FieldCtx& f, int length, std::vector<std::vector<uint32_t>> rows) {
    for (const auto& r : rows)
        if (int(r.size()) != length) throw std::invalid_argument("generator row length mismatch");
    LinearCode code;
    code.field = &f;
    code.length = length;
    code.pivots = rref_inplace(f, rows);
    code.gen = std::move(rows);
    return code;
}

namespace {

// RREF over F_p on a small dense byte matrix; returns pivot columns.
std::vector<int> rref_modp(int p, std::vector<std::vector<uint8_t>>& a) {
    std::vector<int> pivots;
    if (a.empty()) return pivots;
    const int ncols = int(a[0].size());
    auto inv_modp = [p](int v) {
        for (int x = 1; x < p; ++x)
            if (v * x % p == 1) return x;
        throw std::logic_error("non-invertible pivot mod p");
    };
    size_t rank = 0;
    for (int col = 0; col < ncols && rank < a.size(); ++col) {
        size_t sel = rank;
        while (sel < a.size() && a[sel][size_t(col)] == 0) ++sel;
        if (sel == a.size()) continue;
        std::swap(a[rank], a[sel]);
        const int s = inv_modp(a[rank][size_t(col)]);
        for (int j = col; j < ncols; ++j)
            a[rank][size_t(j)] = uint8_t(a[rank][size_t(j)] * s % p);
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == rank || a[i][size_t(col)] == 0) continue;
            const int factor = a[i][size_t(col)];
            for (int j = col; j < ncols; ++j) {
                int v = (a[i][size_t(j)] - factor * a[rank][size_t(j)]) % p;
                a[i][size_t(j)] = uint8_t(v < 0 ? v + p : v);
            }
        }
        pivots.push_back(col);
        ++rank;
    }
    a.resize(rank);
    return pivots;
}

}  // namespace

LinearCode subfield_kernel(const Tower& tw, const std::vector<uint32_t>& entries_top) {
    const int p = tw.params().p;
    const int m = tw.params().m;
    const int N = int(entries_top.size());
    const FieldCtx& top = tw.top();
    const int D = top.degree();

    // F_p system: unknown (i, j) is the eps_q^j component of codeword symbol i
    std::vector<std::vector<uint8_t>> sys(size_t(D), std::vector<uint8_t>(size_t(N) * size_t(m), 0));
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < m; ++j) {
            uint32_t basis = tw.base_to_top().map(tw.base().pow_of_primitive(uint64_t(j)));
            std::vector<int> digits = top.coeffs(top.mul(entries_top[size_t(i)], basis));
            for (int d = 0; d < D; ++d) sys[size_t(d)][size_t(i) * size_t(m) + size_t(j)] = uint8_t(digits[size_t(d)]);
        }
    }
    std::vector<int> pivots = rref_modp(p, sys);

    // kernel basis from the free columns
    std::vector<bool> is_pivot(size_t(N) * size_t(m), false);
    for (int c : pivots) is_pivot[size_t(c)] = true;
    std::vector<std::vector<uint32_t>> rows;
    for (int fcol = 0; fcol < N * m; ++fcol) {
        if (is_pivot[size_t(fcol)]) continue;
        std::vector<int> sol(size_t(N) * size_t(m), 0);
        sol[size_t(fcol)] = 1;
        for (size_t t = 0; t < pivots.size(); ++t) {
            int v = -int(sys[t][size_t(fcol)]) % p;
            sol[size_t(pivots[t])] = v < 0 ? v + p : v;
        }
        std::vector<uint32_t> word(size_t(N));
        for (int i = 0; i < N; ++i) {
            std::vector<int> digits(sol.begin() + ptrdiff_t(i) * m, sol.begin() + ptrdiff_t(i + 1) * m);
            word[size_t(i)] = tw.base().from_coeffs(digits);
        }
        rows.push_back(std::move(word));
    }
    const size_t kernel_dim = rows.size();
    LinearCode code = make_code(tw.base(), N, std::move(rows));
    if (kernel_dim != size_t(m) * size_t(code.dim()))
        throw falsification_error("subfield kernel is not F_q-linear; internal fault");
    return code;
}

LinearCode subfield_subcode(const Tower& tw, const ParityRow& row) {
    return subfield_kernel(tw, row.entries);
}

bool check_goppa_condition(const Tower& tw, const std::vector<uint32_t>& codeword, const Poly& g) {
    if (g.ctx != &tw.mid()) throw context_mismatch("Goppa polynomial must live over GF(q^n)");
    const FieldCtx& mid = tw.mid();
    const int N = int(mid.size());
    if (int(codeword.size()) != N) throw std::invalid_argument("codeword length mismatch");
    Poly acc = poly_zero(mid);
    for (int i = 0; i < N; ++i) {
        if (codeword[size_t(i)] == 0) continue;
        Poly linear = poly_from(mid, {mid.neg(support_element(mid, i)), 1});
        Poly inv_lin = poly_inverse_mod(linear, g);
        acc = acc + poly_scale(inv_lin, tw.base_to_mid().map(codeword[size_t(i)]));
    }
    return poly_mod(acc, g).is_zero();
}

bool check_r_equations(const Tower& tw, const std::vector<uint32_t>& codeword, Fe alpha) {
    const FieldCtx& top = tw.top();
    const int N = int(tw.mid().size());
    if (int(codeword.size()) != N) throw std::invalid_argument("codeword length mismatch");
    Fe conj = alpha;
    for (int j = 0; j < tw.params().r; ++j) {
        uint32_t sum = 0;
        for (int i = 0; i < N; ++i) {
            if (codeword[size_t(i)] == 0) continue;
            uint32_t li = tw.mid_to_top().map(support_element(tw.mid(), i));
            uint32_t term = top.mul(tw.base_to_top().map(codeword[size_t(i)]),
                                    top.inv(top.sub(conj.rep, li)));
            sum = top.add(sum, term);
        }
        if (sum != 0) return false;
        conj = tw.frobenius(conj, tw.params().n);
    }
    return true;
}

GoppaCode code_of_root(const Tower& tw, Fe alpha) {
    GoppaCode gc;
    gc.root = alpha.rep;
    gc.goppa_poly = minimal_polynomial(tw, alpha);
    gc.parity = build_parity_row(tw, alpha);
    gc.code = subfield_subcode(tw, gc.parity);
    return gc;
}

namespace {

struct PackedRows {
    // p = 2 only: symbols are m-bit groups, XOR is field addition
    int nsym = 0, bits = 0;
    uint64_t low_mask = 0;  // lowest bit of every symbol group
    std::vector<uint64_t> scaled;  // k*q entries, scaled[j*q + a] = a * row_j

    int weight(uint64_t v) const {
        for (int s = 1; s < bits; ++s) v |= v >> s;
        return std::popcount(v & low_mask);
    }
};

bool packable(const LinearCode& c) {
    return c.field->characteristic() == 2 &&
           c.length * c.field->degree() <= 64;
}

PackedRows pack_rows(const LinearCode& c) {
    const FieldCtx& f = *c.field;
    PackedRows pr;
    pr.nsym = c.length;
    pr.bits = f.degree();
    for (int i = 0; i < pr.nsym; ++i) pr.low_mask |= uint64_t(1) << (i * pr.bits);
    const uint32_t q = f.size();
    pr.scaled.assign(size_t(c.dim()) * q, 0);
    for (int j = 0; j < c.dim(); ++j) {
        for (uint32_t a = 0; a < q; ++a) {
            uint64_t w = 0;
            for (int i = 0; i < pr.nsym; ++i)
                w |= uint64_t(f.mul(a, c.gen[size_t(j)][size_t(i)])) << (i * pr.bits);
            pr.scaled[size_t(j) * q + a] = w;
        }
    }
    return pr;
}

}  // namespace

void for_each_codeword(const LinearCode& code,
                       const std::function<void(const uint16_t*)>& fn) {
    const FieldCtx& f = *code.field;
    const uint32_t q = f.size();
    if (q > 0xFFFF) throw size_guard_error("symbol alphabet too large for enumeration");
    const int k = code.dim(), N = code.length;
    std::vector<std::vector<uint16_t>> buf(size_t(k) + 1, std::vector<uint16_t>(size_t(N), 0));
    // scaled row cache, k*q rows
    std::vector<std::vector<uint16_t>> scaled(size_t(k) * q, std::vector<uint16_t>(size_t(N)));
    for (int j = 0; j < k; ++j)
        for (uint32_t a = 0; a < q; ++a)
            for (int i = 0; i < N; ++i)
                scaled[size_t(j) * q + a][size_t(i)] =
                    uint16_t(f.mul(a, code.gen[size_t(j)][size_t(i)]));

    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            fn(buf[size_t(k)].data());
            return;
        }
        for (uint32_t a = 0; a < q; ++a) {
            const auto& sr = scaled[size_t(j) * q + a];
            for (int i = 0; i < N; ++i)
                buf[size_t(j) + 1][size_t(i)] = uint16_t(f.add(buf[size_t(j)][size_t(i)], sr[size_t(i)]));
            self(self, j + 1);
        }
    };
    if (k == 0) {
        fn(buf[0].data());
        return;
    }
    rec(rec, 0);
}

std::vector<uint64_t> weight_enumerator(const LinearCode& code, const Limits& lim) {
    if (code.dim() > lim.max_dim)
        throw size_guard_error("dimension " + std::to_string(code.dim()) +
                               " above enumeration guard");
    std::vector<uint64_t> W(size_t(code.length) + 1, 0);
    const int k = code.dim();
    if (k == 0) {
        W[0] = 1;
        return W;
    }
    if (packable(code)) {
        PackedRows pr = pack_rows(code);
        const uint32_t q = code.field->size();
        auto rec = [&](auto&& self, int j, uint64_t cur) -> void {
            if (j == k - 1) {
                for (uint32_t a = 0; a < q; ++a)
                    ++W[size_t(pr.weight(cur ^ pr.scaled[size_t(j) * q + a]))];
                return;
            }
            for (uint32_t a = 0; a < q; ++a)
                self(self, j + 1, cur ^ pr.scaled[size_t(j) * q + a]);
        };
        rec(rec, 0, 0);
        return W;
    }
    for_each_codeword(code, [&](const uint16_t* syms) {
        int w = 0;
        for (int i = 0; i < code.length; ++i) w += syms[i] != 0;
        ++W[size_t(w)];
    });
    return W;
}

int min_distance(const LinearCode& code, const Limits& lim) {
    std::vector<uint64_t> W = weight_enumerator(code, lim);
    for (size_t w = 1; w < W.size(); ++w)
        if (W[w] > 0) return int(w);
    return 0;  // zero code
}

LinearCode dual_code(const LinearCode& code) {
    const FieldCtx& f = *code.field;
    const int N = code.length, k = code.dim();
    std::vector<bool> is_pivot(size_t(N), false);
    for (int c : code.pivots) is_pivot[size_t(c)] = true;
    std::vector<std::vector<uint32_t>> rows;
    for (int fcol = 0; fcol < N; ++fcol) {
        if (is_pivot[size_t(fcol)]) continue;
        std::vector<uint32_t> v(size_t(N), 0);
        v[size_t(fcol)] = 1;
        for (int t = 0; t < k; ++t) v[size_t(code.pivots[size_t(t)])] = f.neg(code.gen[size_t(t)][size_t(fcol)]);
        rows.push_back(std::move(v));
    }
    return make_code(f, N, std::move(rows));
}

}  // namespace goppa
