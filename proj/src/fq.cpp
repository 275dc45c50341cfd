#include "ffsc/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ffsc {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

using PPoly = std::vector<std::uint32_t>;  // F_p coefficients, trimmed

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i])
            for (std::size_t j = 0; j < b.size(); ++j)
                r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// a mod b, b monic
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
    ptrim(a);
    while (a.size() >= b.size() && !a.empty()) {
        std::uint32_t c = a.back();
        std::size_t d = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[d + i] = (a[d + i] + (p - 1) * c % p * b[i]) % p;
        ptrim(a);
    }
    return a;
}

bool divides(const PPoly& g, const PPoly& f, std::uint32_t p) {
    return pmod(f, g, p).empty();
}

// Irreducibility by trial division; degrees here are tiny.
bool p_irreducible(const PPoly& f, std::uint32_t p,
                   const std::vector<std::vector<PPoly>>& irr_by_deg) {
    int d = static_cast<int>(f.size()) - 1;
    for (int e = 1; e <= d / 2; ++e)
        for (const PPoly& g : irr_by_deg[e])
            if (divides(g, f, p)) return false;
    return true;
}

PPoly code_to_ppoly(std::uint64_t code, int deg, std::uint32_t p) {
    PPoly c(deg + 1, 0);
    for (int i = 0; i < deg; ++i) {
        c[i] = static_cast<std::uint32_t>(code % p);
        code /= p;
    }
    c[deg] = 1;
    return c;
}

// Enumeration-least monic irreducible of the requested degree.
PPoly default_modulus(std::uint32_t p, std::uint32_t eta) {
    std::vector<std::vector<PPoly>> irr(eta + 1);
    for (std::uint32_t d = 1; d <= eta; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            PPoly f = code_to_ppoly(code, static_cast<int>(d), p);
            if (!p_irreducible(f, p, irr)) continue;
            if (d == eta) return f;
            irr[d].push_back(f);
        }
    }
    throw std::logic_error("default_modulus: no irreducible found");
}

}  // namespace

FqElem FieldCtx::add(FqElem a, FqElem b) const {
    if (eta == 1) return {(a.v + b.v) % p};
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < eta; ++i) {
        std::uint32_t da = a.v % p, db = b.v % p;
        a.v /= p;
        b.v /= p;
        r += (da + db) % p * mul;
        mul *= p;
    }
    return {r};
}

FqElem FieldCtx::neg(FqElem a) const {
    if (eta == 1) return {(p - a.v) % p};
    std::uint32_t r = 0, mul = 1;
    for (std::uint32_t i = 0; i < eta; ++i) {
        std::uint32_t d = a.v % p;
        a.v /= p;
        r += (p - d) % p * mul;
        mul *= p;
    }
    return {r};
}

FqElem FieldCtx::sub(FqElem a, FqElem b) const { return add(a, neg(b)); }

FqElem FieldCtx::mul_raw(FqElem a, FqElem b) const {
    PPoly pa, pb;
    for (std::uint32_t i = 0, v = a.v; i < eta; ++i, v /= p) pa.push_back(v % p);
    for (std::uint32_t i = 0, v = b.v; i < eta; ++i, v /= p) pb.push_back(v % p);
    ptrim(pa);
    ptrim(pb);
    PPoly r = pmod(pmul(pa, pb, p), modulus, p);
    std::uint32_t code = 0;
    for (std::size_t i = r.size(); i-- > 0;) code = code * p + r[i];
    return {code};
}

FqElem FieldCtx::mul(FqElem a, FqElem b) const {
    if (a.v == 0 || b.v == 0) return {0};
    return {exp_[(dlog_[a.v] + dlog_[b.v]) % (q - 1)]};
}

FqElem FieldCtx::inv(FqElem a) const {
    if (a.v == 0) throw std::domain_error("FieldCtx: inverse of zero");
    return {exp_[(q - 1 - dlog_[a.v]) % (q - 1)]};
}

FqElem FieldCtx::pow(FqElem a, std::uint64_t e) const {
    if (a.v == 0) return e == 0 ? one() : zero();
    return {exp_[static_cast<std::size_t>(dlog_[a.v] * (e % (q - 1)) % (q - 1))]};
}

std::uint32_t FieldCtx::dlog(FqElem a) const {
    if (a.v == 0) throw std::domain_error("FieldCtx: dlog of zero");
    return dlog_[a.v];
}

void FieldCtx::build() {
    if (eta == 1) {
        modulus.clear();
    } else if (modulus.empty()) {
        modulus = default_modulus(p, eta);
    }
    // find a generator: smallest code whose multiplicative order is q-1
    exp_.assign(q - 1, 0);
    dlog_.assign(q, 0);
    for (std::uint32_t cand = 1; cand < q; ++cand) {
        std::uint32_t x = cand;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = mul_raw({x}, {cand}).v;
            ++ord;
            if (ord > q) throw std::logic_error("FieldCtx: modulus not irreducible");
        }
        if (ord == q - 1) {
            gen_ = cand;
            break;
        }
    }
    if (gen_ == 0) throw std::logic_error("FieldCtx: no generator found");
    std::uint32_t x = 1;
    for (std::uint32_t k = 0; k < q - 1; ++k) {
        exp_[k] = x;
        dlog_[x] = k;
        x = mul_raw({x}, {gen_}).v;
    }
    // trace(a) = sum of a^(p^i), lands in F_p (code < p)
    trace_.assign(q, 0);
    for (std::uint32_t v = 0; v < q; ++v) {
        FqElem acc{0}, t{v};
        for (std::uint32_t i = 0; i < eta; ++i) {
            acc = add(acc, t);
            FqElem s = t;
            for (std::uint32_t j = 1; j < p; ++j) s = mul_raw(s, t);
            t = s;  // t^p
        }
        if (acc.v >= p) throw std::logic_error("FieldCtx: trace left F_p");
        trace_[v] = acc.v;
    }
}

const FieldCtx& make_field(std::uint32_t p, std::uint32_t eta) {
    if (!is_prime_u32(p)) throw std::invalid_argument("make_field: p is not prime");
    if (eta < 1) throw std::invalid_argument("make_field: eta must be >= 1");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < eta; ++i) {
        q *= p;
        if (q > (1u << 16)) throw std::invalid_argument("make_field: q exceeds 2^16");
    }

    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FieldCtx>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(p, eta);
    auto it = cache.find(key);
    if (it == cache.end()) {
        auto ctx = std::make_unique<FieldCtx>();
        ctx->p = p;
        ctx->eta = eta;
        ctx->q = static_cast<std::uint32_t>(q);
        ctx->build();
        it = cache.emplace(key, std::move(ctx)).first;
    }
    return *it->second;
}

const FieldCtx& make_field_q(std::uint32_t q) {
    if (q < 2) throw std::invalid_argument("make_field_q: q must be >= 2");
    std::uint32_t p = q;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t eta = 0;
    std::uint32_t t = q;
    while (t % p == 0) {
        t /= p;
        ++eta;
    }
    if (t != 1) throw std::invalid_argument("make_field_q: q is not a prime power");
    return make_field(p, eta);
}

}  // namespace ffsc
