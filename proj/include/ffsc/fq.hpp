#pragma once

#include <cstdint>
#include <vector>

#include "ffsc/scalar.hpp"

namespace ffsc {

// Element of F_q, q = p^eta.  The code packs the coordinates in the power
// basis 1, x, ..., x^{eta-1} as base-p digits, so for prime fields the code is
// the residue itself.
struct FqElem {
    std::uint32_t v = 0;
    bool operator==(const FqElem&) const = default;
};

// Immutable context for one finite field.  Multiplication runs through full
// discrete-log tables, which caps q at 2^16; everything this project touches
// stays far below that.
class FieldCtx {
public:
    std::uint32_t p = 0;
    std::uint32_t eta = 1;
    std::uint32_t q = 0;
    // Monic modulus of degree eta over F_p (coefficients c[0..eta]); empty for
    // eta == 1.  Chosen as the enumeration-least irreducible when defaulted.
    std::vector<std::uint32_t> modulus;

    FqElem zero() const { return {0}; }
    FqElem one() const { return {1}; }
    FqElem gen() const { return {gen_}; }
    FqElem from_base(std::uint32_t x) const { return {x % p}; }  // F_p -> F_q

    FqElem add(FqElem a, FqElem b) const;
    FqElem sub(FqElem a, FqElem b) const;
    FqElem neg(FqElem a) const;
    FqElem mul(FqElem a, FqElem b) const;
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, std::uint64_t e) const;

    std::uint32_t trace(FqElem a) const { return trace_[a.v]; }  // to F_p
    std::uint32_t dlog(FqElem a) const;  // a = gen^dlog(a), a != 0

    // e_q(a) = e_p(trace(a)) = exp(2 pi i trace(a) / p); exact for p = 2.
    Scalar additive_char(FqElem a) const {
        return Scalar::root_of_unity(trace_[a.v], p);
    }

private:
    friend const FieldCtx& make_field(std::uint32_t p, std::uint32_t eta);
    void build();

    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> exp_;    // gen^k, k in [0, q-1)
    std::vector<std::uint32_t> dlog_;   // inverse of exp_, dlog_[0] unused
    std::vector<std::uint32_t> trace_;  // per code
    FqElem mul_raw(FqElem a, FqElem b) const;  // poly mult mod modulus
};

// Returns a cached context; p must be prime and p^eta <= 2^16.
const FieldCtx& make_field(std::uint32_t p, std::uint32_t eta = 1);

// Splits q into (p, eta) and builds the field; rejects non prime powers.
const FieldCtx& make_field_q(std::uint32_t q);

inline Scalar additive_char_Fq(const FieldCtx& F, FqElem a) {
    return F.additive_char(a);
}
inline std::uint32_t discrete_log(const FieldCtx& F, FqElem a) {
    return F.dlog(a);
}

}  // namespace ffsc
