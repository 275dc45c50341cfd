#include "ffsc/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ffsc {

namespace {
void require_same_field(const Poly& a, const Poly& b) {
    if (a.F != b.F) throw std::invalid_argument("Poly: mixed field contexts");
}
}  // namespace

Poly poly_zero(const FieldCtx& F) { return Poly{&F, {}}; }
Poly poly_one(const FieldCtx& F) { return Poly{&F, {F.one()}}; }
Poly poly_T(const FieldCtx& F) { return Poly{&F, {F.zero(), F.one()}}; }

Poly poly_const(const FieldCtx& F, FqElem a) {
    Poly r{&F, {a}};
    r.trim();
    return r;
}

Poly poly_from_ints(const FieldCtx& F, const std::vector<std::int64_t>& coeffs) {
    Poly r{&F, {}};
    r.c.reserve(coeffs.size());
    for (std::int64_t x : coeffs) {
        std::int64_t m = x % F.p;
        if (m < 0) m += F.p;
        r.c.push_back(F.from_base(static_cast<std::uint32_t>(m)));
    }
    r.trim();
    return r;
}

Poly add(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const FieldCtx& F = *a.F;
    Poly r{&F, {}};
    r.c.resize(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = F.add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
    r.trim();
    return r;
}

Poly neg(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = a.F->neg(x);
    return r;
}

Poly sub(const Poly& a, const Poly& b) { return add(a, neg(b)); }

Poly mul(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    const FieldCtx& F = *a.F;
    if (a.is_zero() || b.is_zero()) return poly_zero(F);
    Poly r{&F, std::vector<FqElem>(a.c.size() + b.c.size() - 1, F.zero())};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].v == 0) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) {
            if (b.c[j].v == 0) continue;
            r.c[i + j] = F.add(r.c[i + j], F.mul(a.c[i], b.c[j]));
        }
    }
    r.trim();
    return r;
}

Poly mul_elem(const Poly& a, FqElem s) {
    Poly r = a;
    for (auto& x : r.c) x = a.F->mul(x, s);
    r.trim();
    return r;
}

Poly shift(const Poly& a, int k) {
    if (a.is_zero() || k == 0) return a;
    Poly r{a.F, std::vector<FqElem>(a.c.size() + k, a.F->zero())};
    std::copy(a.c.begin(), a.c.end(), r.c.begin() + k);
    return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_field(a, b);
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    const FieldCtx& F = *a.F;
    Poly rem = a;
    if (a.deg() < b.deg()) return {poly_zero(F), rem};
    Poly quo{&F, std::vector<FqElem>(a.deg() - b.deg() + 1, F.zero())};
    FqElem inv_lc = F.inv(b.lc());
    while (!rem.is_zero() && rem.deg() >= b.deg()) {
        int d = rem.deg() - b.deg();
        FqElem cfac = F.mul(rem.lc(), inv_lc);
        quo.c[d] = cfac;
        for (int i = 0; i <= b.deg(); ++i)
            rem.c[d + i] = F.sub(rem.c[d + i], F.mul(cfac, b.c[i]));
        rem.trim();
    }
    quo.trim();
    return {quo, rem};
}

Poly mod(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& g, const Poly& f) { return mod(f, g).is_zero(); }

Poly divexact(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("Poly: divexact with nonzero remainder");
    return q;
}

Poly monicize(const Poly& a) {
    if (a.is_zero()) throw std::domain_error("Poly: monicize(0)");
    if (a.is_monic()) return a;
    return mul_elem(a, a.F->inv(a.lc()));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = mod(x, y);
        x = y;
        y = r;
    }
    if (x.is_zero()) return x;
    return monicize(x);
}

std::optional<Poly> modular_inverse(const Poly& a, const Poly& g) {
    require_same_field(a, g);
    const FieldCtx& F = *a.F;
    if (g.deg() < 1) {
        // everything is invertible mod a unit modulus; inverse is 0 == 1 there
        return poly_zero(F);
    }
    // extended Euclid on (a mod g, g)
    Poly r0 = g, r1 = mod(a, g);
    Poly s0 = poly_zero(F), s1 = poly_one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly s2 = sub(s0, mul(q, s1));
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r0.deg() != 0) return std::nullopt;  // gcd not a unit
    return mod(mul_elem(s0, F.inv(r0.c[0])), g);
}

Poly pow_mod(const Poly& a, const BigInt& e, const Poly& g) {
    if (e < 0) throw std::invalid_argument("pow_mod: negative exponent");
    Poly base = mod(a, g);
    Poly r = mod(poly_one(*a.F), g);
    BigInt k = e;
    while (k > 0) {
        if ((k & 1) != 0) r = mod(mul(r, base), g);
        k >>= 1;
        if (k > 0) base = mod(mul(base, base), g);
    }
    return r;
}

BigInt norm_abs(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("norm_abs(0)");
    BigInt r = 1;
    for (int i = 0; i < f.deg(); ++i) r *= f.F->q;
    return r;
}

std::uint64_t npow(std::uint64_t q, int e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
        if (r > UINT64_MAX / q) throw std::overflow_error("npow overflow");
        r *= q;
    }
    return r;
}

std::uint64_t monic_count(const FieldCtx& F, int n) { return npow(F.q, n); }

Poly monic_by_index(const FieldCtx& F, int n, std::uint64_t idx) {
    Poly r{&F, std::vector<FqElem>(n + 1, F.zero())};
    for (int i = 0; i < n; ++i) {
        r.c[i] = FqElem{static_cast<std::uint32_t>(idx % F.q)};
        idx /= F.q;
    }
    r.c[n] = F.one();
    return r;
}

std::uint64_t monic_index(const Poly& f) {
    if (!f.is_monic()) throw std::invalid_argument("monic_index: not monic");
    std::uint64_t code = 0;
    for (int i = f.deg() - 1; i >= 0; --i) code = code * f.F->q + f.c[i].v;
    return code;
}

std::uint64_t residue_count(const FieldCtx& F, int k) { return npow(F.q, k); }

Poly residue_by_index(const FieldCtx& F, int k, std::uint64_t idx) {
    Poly r{&F, std::vector<FqElem>(k, F.zero())};
    for (int i = 0; i < k; ++i) {
        r.c[i] = FqElem{static_cast<std::uint32_t>(idx % F.q)};
        idx /= F.q;
    }
    r.trim();
    return r;
}

std::uint64_t residue_index(const Poly& f, int k) {
    if (f.deg() >= k) throw std::invalid_argument("residue_index: degree too large");
    std::uint64_t code = 0;
    for (int i = k - 1; i >= 0; --i) code = code * f.F->q + f.coeff(i).v;
    return code;
}

// --- irreducibles cache -------------------------------------------------------

namespace {
struct IrrCache {
    std::mutex mu;
    // per field pointer: by degree
    std::map<const FieldCtx*, std::vector<std::vector<Poly>>> lists;
};
IrrCache& irr_cache() {
    static IrrCache c;
    return c;
}

bool trial_irreducible(const Poly& f, const std::vector<std::vector<Poly>>& by_deg) {
    for (int e = 1; e <= f.deg() / 2; ++e)
        for (const Poly& g : by_deg[e])
            if (divides(g, f)) return false;
    return true;
}
}  // namespace

const std::vector<Poly>& irreducibles(const FieldCtx& F, int d) {
    if (d < 1) throw std::invalid_argument("irreducibles: degree must be >= 1");
    IrrCache& c = irr_cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto& by_deg = c.lists[&F];
    if (static_cast<int>(by_deg.size()) <= d) {
        if (by_deg.empty()) by_deg.resize(1);
        for (int e = static_cast<int>(by_deg.size()); e <= d; ++e) {
            std::vector<Poly> found;
            for (std::uint64_t idx = 0; idx < monic_count(F, e); ++idx) {
                Poly f = monic_by_index(F, e, idx);
                if (trial_irreducible(f, by_deg)) found.push_back(f);
            }
            by_deg.push_back(std::move(found));
        }
    }
    return by_deg[d];
}

bool is_irreducible(const Poly& f) {
    if (f.deg() < 1) return false;
    for (int e = 1; e <= f.deg() / 2; ++e)
        for (const Poly& g : irreducibles(*f.F, e))
            if (divides(g, f)) return false;
    return true;
}

Factorization factorize(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factorize(0)");
    Factorization out;
    out.unit = f.lc();
    Poly rest = monicize(f);
    for (int e = 1; !rest.is_one() && e <= rest.deg() / 2; ++e) {
        for (const Poly& P : irreducibles(*f.F, e)) {
            if (P.deg() > rest.deg() / 2) break;
            int mult = 0;
            while (true) {
                auto [q, r] = divmod(rest, P);
                if (!r.is_zero()) break;
                rest = q;
                ++mult;
            }
            if (mult > 0) out.primes.emplace_back(P, mult);
            if (rest.is_one()) break;
        }
    }
    if (!rest.is_one()) out.primes.emplace_back(rest, 1);  // prime remainder
    return out;
}

std::vector<Poly> divisors(const Poly& f) {
    Factorization fac = factorize(f);
    std::vector<Poly> out{poly_one(*f.F)};
    for (const auto& [P, e] : fac.primes) {
        std::vector<Poly> next;
        next.reserve(out.size() * (e + 1));
        Poly pk = poly_one(*f.F);
        for (int k = 0; k <= e; ++k) {
            for (const Poly& d : out) next.push_back(mul(d, pk));
            if (k < e) pk = mul(pk, P);
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
        if (a.deg() != b.deg()) return a.deg() < b.deg();
        return monic_index(a) < monic_index(b);
    });
    return out;
}

namespace {
BigInt binom_big(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}
}  // namespace

BigInt divisor_count_dk(const Poly& f, int k) {
    if (k < 1) throw std::invalid_argument("divisor_count_dk: k >= 1");
    BigInt r = 1;
    for (const auto& [P, e] : factorize(f).primes) r *= binom_big(e + k - 1, k - 1);
    return r;
}

int moebius(const Poly& f) {
    int w = 0;
    for (const auto& [P, e] : factorize(f).primes) {
        if (e > 1) return 0;
        ++w;
    }
    return (w % 2 == 0) ? 1 : -1;
}

int omega(const Poly& f) { return static_cast<int>(factorize(f).primes.size()); }

BigInt euler_phi(const Poly& f) {
    BigInt r = 1;
    for (const auto& [P, e] : factorize(f).primes) {
        BigInt np = norm_abs(P);
        BigInt pk = 1;
        for (int i = 1; i < e; ++i) pk *= np;
        r *= pk * (np - 1);
    }
    return r;
}

// --- MonicTables ----------------------------------------------------------------

MonicTables::MonicTables(const FieldCtx& F, int maxdeg) : F_(&F), maxdeg_(maxdeg) {
    const std::uint64_t q = F.q;
    if (npow(q, maxdeg) > (1ull << 31))
        throw std::invalid_argument("MonicTables: table too large");
    spf_deg_.resize(maxdeg + 1);
    spf_code_.resize(maxdeg + 1);
    cof_code_.resize(maxdeg + 1);
    dtab_.resize(maxdeg + 1);
    for (int d = 0; d <= maxdeg; ++d) {
        std::uint64_t n = npow(q, d);
        spf_deg_[d].assign(n, 0);  // 0 == irreducible / unit marker
        spf_code_[d].assign(n, 0);
        cof_code_[d].assign(n, 0);
        dtab_[d].assign(n, 1);
    }
    // degree-ascending sieve; first mark wins, so spf is the enumeration-least
    // irreducible factor
    for (int e = 1; e <= maxdeg; ++e) {
        const std::uint64_t ne = npow(q, e);
        for (std::uint64_t pc = 0; pc < ne; ++pc) {
            if (spf_deg_[e][pc] != 0) continue;  // composite
            Poly P = monic_by_index(*F_, e, pc);
            for (int j = 1; e + j <= maxdeg; ++j) {
                const int dd = e + j;
                const std::uint64_t nj = npow(q, j);
                for (std::uint64_t mc = 0; mc < nj; ++mc) {
                    Poly M = mul(P, monic_by_index(*F_, j, mc));
                    std::uint64_t code = monic_index(M);
                    if (spf_deg_[dd][code] == 0) {
                        spf_deg_[dd][code] = static_cast<std::uint8_t>(e);
                        spf_code_[dd][code] = static_cast<std::uint32_t>(pc);
                        cof_code_[dd][code] = static_cast<std::uint32_t>(mc);
                    }
                }
            }
        }
    }
    // divisor counts bottom-up: d(f) = (e+1) d(f / P^e)
    for (int d = 1; d <= maxdeg; ++d) {
        const std::uint64_t n = npow(q, d);
        for (std::uint64_t code = 0; code < n; ++code) {
            if (spf_deg_[d][code] == 0) {
                dtab_[d][code] = 2;  // irreducible
                continue;
            }
            int pd = spf_deg_[d][code];
            std::uint64_t pc = spf_code_[d][code];
            int e = 1;
            int td = d - pd;
            std::uint64_t tc = cof_code_[d][code];
            while (td > pd ? (spf_deg_[td][tc] == pd && spf_code_[td][tc] == pc)
                           : (td == pd && tc == pc)) {
                if (td == pd && tc == pc) {
                    // last factor equals P itself
                    ++e;
                    td = 0;
                    tc = 0;
                    break;
                }
                ++e;
                tc = cof_code_[td][tc];
                td -= pd;
            }
            dtab_[d][code] = (e + 1) * dtab_[td][tc];
        }
    }
}

void MonicTables::factor_walk(
    int deg, std::uint64_t code,
    const std::function<void(int, std::uint64_t, int)>& fn) const {
    while (deg > 0) {
        if (spf_deg_[deg][code] == 0) {
            fn(deg, code, 1);
            return;
        }
        const int pd = spf_deg_[deg][code];
        const std::uint64_t pc = spf_code_[deg][code];
        int e = 1;
        int td = deg - pd;
        std::uint64_t tc = cof_code_[deg][code];
        while (td > 0) {
            if (td == pd && tc == pc) {
                ++e;
                td = 0;
                tc = 0;
                break;
            }
            if (td > pd && spf_deg_[td][tc] == pd && spf_code_[td][tc] == pc) {
                ++e;
                tc = cof_code_[td][tc];
                td -= pd;
            } else {
                break;
            }
        }
        fn(pd, pc, e);
        deg = td;
        code = tc;
    }
}

std::int64_t MonicTables::d_of(const Poly& f_monic) const {
    return d_of(f_monic.deg(), monic_index(f_monic));
}

const MonicTables& MonicTables::get(const FieldCtx& F, int maxdeg) {
    static std::mutex mu;
    static std::map<const FieldCtx*, std::unique_ptr<MonicTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(&F);
    if (it == cache.end() || it->second->maxdeg_ < maxdeg) {
        auto t = std::make_unique<MonicTables>(MonicTables(F, maxdeg));
        cache[&F] = std::move(t);
        it = cache.find(&F);
    }
    return *it->second;
}

// --- text ------------------------------------------------------------------------

namespace {
[[noreturn]] void parse_fail(const std::string& text, const char* why) {
    throw std::invalid_argument("parse_poly: " + std::string(why) + " in '" + text + "'");
}
}  // namespace

Poly parse_poly(const FieldCtx& F, const std::string& text) {
    Poly out = poly_zero(F);
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto skip_ws = [&] {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= n) parse_fail(text, "empty input");
    bool first = true;
    while (true) {
        skip_ws();
        if (i >= n) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            parse_fail(text, "expected '+' or '-' between terms");
        }
        first = false;
        // coefficient (optional)
        bool have_coeff = false;
        std::uint64_t coeff = 1;
        if (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
            have_coeff = true;
            coeff = 0;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                coeff = coeff * 10 + static_cast<std::uint64_t>(text[i] - '0');
                if (coeff > F.q * 16ull) parse_fail(text, "coefficient too large");
                ++i;
            }
            skip_ws();
            if (i < n && text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        // variable part (optional)
        int expo = 0;
        if (i < n && (text[i] == 'T' || text[i] == 't')) {
            ++i;
            expo = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i])))
                    parse_fail(text, "expected exponent after '^'");
                expo = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    expo = expo * 10 + (text[i] - '0');
                    if (expo > 64) parse_fail(text, "exponent too large");
                    ++i;
                }
            }
        } else if (!have_coeff) {
            parse_fail(text, "expected coefficient or 'T'");
        }
        FqElem ce;
        if (F.eta == 1) {
            ce = F.from_base(static_cast<std::uint32_t>(coeff % F.p));
        } else {
            if (coeff >= F.q) parse_fail(text, "coefficient code exceeds q");
            ce = FqElem{static_cast<std::uint32_t>(coeff)};
        }
        if (sign < 0) ce = F.neg(ce);
        if (ce.v != 0) {
            if (static_cast<int>(out.c.size()) <= expo) out.c.resize(expo + 1, F.zero());
            out.c[expo] = F.add(out.c[expo], ce);
        }
        skip_ws();
    }
    out.trim();
    return out;
}

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = f.deg(); i >= 0; --i) {
        FqElem ci = f.c[i];
        if (ci.v == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0) {
            s += std::to_string(ci.v);
        } else {
            if (ci.v != 1) s += std::to_string(ci.v) + "*";
            s += "T";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace ffsc
