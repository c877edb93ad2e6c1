#ifndef GOPPA_CODE_HPP
#define GOPPA_CODE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "goppa/poly.hpp"

/*
 * Goppa code construction over the fixed support order.
 *
 * Positions are 0-based throughout the library; position i < N-1 holds
 * eps^{i+1} and position N-1 holds 0, matching the 1-based column c <-> eps^c
 * convention of the serialized formats (column N <-> 0).
 */

namespace goppa {

// support order <-> field element, mid context
uint32_t support_element(const FieldCtx& mid, int pos);
int support_position(const FieldCtx& mid, uint32_t rep);

struct ParityRow {
    uint32_t alpha = 0;              // top-field rep
    std::vector<uint32_t> entries;   // top-field reps, entries[i] = 1/(alpha - L_i)
};

ParityRow build_parity_row(const Tower& tw, Fe alpha);

/* F_q-linear code in its unique reduced row-echelon generator form; the RREF
 * is the stored representation and code equality is representation equality.
 */
struct LinearCode {
    const FieldCtx* field = nullptr;
    int length = 0;
    std::vector<std::vector<uint32_t>> gen;  // RREF rows over *field
    std::vector<int> pivots;

    int dim() const { return int(gen.size()); }
    bool operator==(const LinearCode& o) const {
        return field == o.field && length == o.length && gen == o.gen;
    }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
};

// in-place reduced row echelon form; returns pivot columns, drops zero rows
std::vector<int> rref_inplace(const FieldCtx& f, std::vector<std::vector<uint32_t>>& rows);

LinearCode make_code(const FieldCtx& f, int length, std::vector<std::vector<uint32_t>> rows);

/* Kernel over F_q of one row of top-field entries: each unknown is written in
 * the F_p power basis of the embedded GF(q), the resulting F_p system is
 * solved exactly, and the solution space is re-reduced over F_q.
 */
LinearCode subfield_kernel(const Tower& tw, const std::vector<uint32_t>& entries_top);
LinearCode subfield_subcode(const Tower& tw, const ParityRow& row);

// sum over i of c_i/(x - L_i) = 0 mod g, inverses by extended Euclid in GF(q^n)[x]
bool check_goppa_condition(const Tower& tw, const std::vector<uint32_t>& codeword, const Poly& g);
// the r conjugate parity equations sum over i of c_i/(alpha^{q^{nj}} - L_i) = 0
bool check_r_equations(const Tower& tw, const std::vector<uint32_t>& codeword, Fe alpha);

struct GoppaCode {
    uint32_t root = 0;     // top-field rep of the defining root
    Poly goppa_poly;       // monic irreducible of degree r over the mid field
    ParityRow parity;
    LinearCode code;
};

GoppaCode code_of_root(const Tower& tw, Fe alpha);

// Exact codeword counts by weight; W[0] = 1, sum = q^k. Guarded by max_dim.
std::vector<uint64_t> weight_enumerator(const LinearCode& code, const Limits& lim = {});
// Smallest nonzero codeword weight; 0 for the zero code.
int min_distance(const LinearCode& code, const Limits& lim = {});

LinearCode dual_code(const LinearCode& code);

// enumerate all q^k codewords (generic path; symbols as field reps)
void for_each_codeword(const LinearCode& code,
                       const std::function<void(const uint16_t*)>& fn);

}  // namespace goppa

#endif
