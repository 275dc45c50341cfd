#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ffsc/fq.hpp"
#include "ffsc/scalar.hpp"

namespace ffsc {

// Dense polynomial over F_q.  Coefficients are trimmed, so deg(0) = -1 maps
// to an empty vector.
struct Poly {
    const FieldCtx* F = nullptr;
    std::vector<FqElem> c;  // c[i] multiplies T^i

    int deg() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0].v == 1; }
    FqElem lc() const { return c.empty() ? FqElem{0} : c.back(); }
    bool is_monic() const { return !c.empty() && c.back().v == 1; }
    FqElem coeff(int i) const {
        return (i < 0 || i >= static_cast<int>(c.size())) ? FqElem{0} : c[i];
    }
    void trim() {
        while (!c.empty() && c.back().v == 0) c.pop_back();
    }
    bool operator==(const Poly& o) const { return c == o.c; }
};

Poly poly_zero(const FieldCtx& F);
Poly poly_one(const FieldCtx& F);
Poly poly_T(const FieldCtx& F);
Poly poly_const(const FieldCtx& F, FqElem a);
Poly poly_from_ints(const FieldCtx& F, const std::vector<std::int64_t>& coeffs);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly neg(const Poly& a);
Poly mul(const Poly& a, const Poly& b);
Poly mul_elem(const Poly& a, FqElem s);
Poly shift(const Poly& a, int k);  // a * T^k, k >= 0

// Quotient and remainder; b != 0 but need not be monic.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
bool divides(const Poly& g, const Poly& f);
Poly divexact(const Poly& a, const Poly& b);

Poly monicize(const Poly& a);  // a / lc(a), a != 0
Poly gcd(const Poly& a, const Poly& b);  // monic (or 0)
// Inverse of a modulo g; nullopt when gcd(a, g) != 1.
std::optional<Poly> modular_inverse(const Poly& a, const Poly& g);
Poly pow_mod(const Poly& a, const BigInt& e, const Poly& g);

// |f| = q^deg f; |0| is rejected.
BigInt norm_abs(const Poly& f);

// --- enumeration -----------------------------------------------------------
// Monic polynomials of degree n are indexed by the base-q integer formed from
// the coefficients (c_0 least significant, lead coefficient excluded), giving
// a stable order: T^2 < T^2+1 < ... < T^2+T < ...
std::uint64_t npow(std::uint64_t q, int e);
std::uint64_t monic_count(const FieldCtx& F, int n);
Poly monic_by_index(const FieldCtx& F, int n, std::uint64_t idx);
std::uint64_t monic_index(const Poly& f);  // f monic

// Residues mod T^k (all polynomials of degree < k), same digit packing but
// including every coefficient.
std::uint64_t residue_count(const FieldCtx& F, int k);
Poly residue_by_index(const FieldCtx& F, int k, std::uint64_t idx);
std::uint64_t residue_index(const Poly& f, int k);  // deg f < k

// --- multiplicative structure ----------------------------------------------
struct Factorization {
    std::vector<std::pair<Poly, int>> primes;  // monic irreducibles, ascending
    FqElem unit;                               // leading coefficient of input
};

// Cached monic irreducibles of exact degree d, in enumeration order.
const std::vector<Poly>& irreducibles(const FieldCtx& F, int d);

Factorization factorize(const Poly& f);  // f != 0, trial division
bool is_irreducible(const Poly& f);

// Monic divisors sorted by (degree, enumeration index).
std::vector<Poly> divisors(const Poly& f);
// d_k(f) = number of ordered monic k-tuples with product ~ f; k >= 1.
BigInt divisor_count_dk(const Poly& f, int k = 2);
int moebius(const Poly& f);       // 0 unless squarefree
int omega(const Poly& f);         // # distinct irreducible factors
BigInt euler_phi(const Poly& f);  // # reduced residues mod f

// --- bulk tables -------------------------------------------------------------
// Smallest-prime-factor sieve over all monic polynomials of degree <= maxdeg,
// with divisor counts.  Built once per (field, maxdeg) and shared; the heavy
// correlation scans depend on O(1) divisor-count lookups.
class MonicTables {
public:
    static const MonicTables& get(const FieldCtx& F, int maxdeg);

    int maxdeg() const { return maxdeg_; }
    std::int64_t d_of(int deg, std::uint64_t code) const { return dtab_[deg][code]; }
    std::int64_t d_of(const Poly& f_monic) const;

    // Calls fn(prime_deg, prime_code, multiplicity) for each irreducible
    // factor of the monic polynomial with the given degree/index.
    void factor_walk(int deg, std::uint64_t code,
                     const std::function<void(int, std::uint64_t, int)>& fn) const;

private:
    MonicTables(const FieldCtx& F, int maxdeg);
    const FieldCtx* F_;
    int maxdeg_;
    // per degree: smallest factor (deg 0 == irreducible marker), cofactor code
    std::vector<std::vector<std::uint8_t>> spf_deg_;
    std::vector<std::vector<std::uint32_t>> spf_code_;
    std::vector<std::vector<std::uint32_t>> cof_code_;
    std::vector<std::vector<std::int32_t>> dtab_;
};

// --- text ---------------------------------------------------------------------
// Accepts e.g. "T^3+2*T+1", "2T^2-1", "1", "0".  An integer literal k < q
// denotes the field element with code k (for prime fields, the residue mod p;
// for extensions, base-p digit packing in the power basis); k >= q is an error.
Poly parse_poly(const FieldCtx& F, const std::string& text);
std::string to_string(const Poly& f);

}  // namespace ffsc
