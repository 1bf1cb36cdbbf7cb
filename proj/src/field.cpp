#include "gcq/field.hpp"

#include <algorithm>
#include <string>

namespace gcq {

namespace {

constexpr std::uint32_t kMaxOrder = 1u << 16;
constexpr std::uint32_t kTableLimit = 256;

std::uint64_t modpow_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    std::uint64_t r = 1 % mod;
    base %= mod;
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

// ---- arithmetic on GF(p)[x] used only during construction -----------------
// Polynomials are coefficient vectors mod p, no trailing zeros.

using PPoly = std::vector<std::uint32_t>;

void ptrim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
    }
    ptrim(r);
    return r;
}

// Remainder of a by monic f.
PPoly pmod(PPoly a, const PPoly& f, std::uint32_t p) {
    const std::size_t df = f.size() - 1;
    while (a.size() > df) {
        const std::uint32_t c = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (c != 0) {
            for (std::size_t j = 0; j < f.size(); ++j) {
                std::uint64_t t = static_cast<std::uint64_t>(c) * f[j] % p;
                a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
            }
        }
        a.pop_back();
        ptrim(a);
        if (a.size() <= df) break;
    }
    ptrim(a);
    return a;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, std::uint32_t p) {
    return pmod(pmul(a, b, p), f, p);
}

PPoly ppowmod(PPoly base, std::uint64_t exp, const PPoly& f, std::uint32_t p) {
    PPoly r{1};
    while (exp > 0) {
        if (exp & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        exp >>= 1;
    }
    return r;
}

PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
    while (!b.empty()) {
        // reduce a mod b; b need not be monic
        std::uint64_t lead_inv = modpow_u64(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            std::uint64_t c = a.back() * lead_inv % p;
            std::size_t shift = a.size() - b.size();
            if (c != 0) {
                for (std::size_t j = 0; j < b.size(); ++j) {
                    std::uint64_t t = c * b[j] % p;
                    a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + p - t) % p);
                }
            }
            ptrim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// Degree-e monic f is irreducible over GF(p) iff gcd(f, x^{p^k} - x) = 1 for
// 1 <= k < e and x^{p^e} = x mod f.
bool irreducible(const PPoly& f, std::uint32_t p, std::uint32_t e) {
    const PPoly x{0, 1};
    PPoly g = pmod(x, f, p); // x^{p^0}
    for (std::uint32_t k = 1; k <= e; ++k) {
        g = ppowmod(g, p, f, p); // x^{p^k} mod f
        if (k == e) return g == pmod(x, f, p);
        // h = g - x
        PPoly h = g;
        if (h.size() < 2) h.resize(2, 0);
        h[1] = (h[1] + p - 1) % p;
        ptrim(h);
        if (h.empty()) return false; // every factor has degree dividing k < e
        PPoly d = pgcd(h, f, p);
        if (d.size() != 1) return false;
    }
    return true;
}

} // namespace

Field Field::make(std::uint32_t q) {
    if (q > kMaxOrder)
        throw overflow("field order " + std::to_string(q) + " exceeds 2^16");
    if (q < 2)
        throw not_prime_power(std::to_string(q) + " is not a prime power");

    // q = p^e with p the smallest (hence only) prime divisor
    std::uint32_t p = 0;
    for (std::uint32_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) { p = d; break; }
    }
    if (p == 0) p = q; // q itself is prime
    std::uint32_t e = 0;
    std::uint32_t rest = q;
    while (rest % p == 0) { rest /= p; ++e; }
    if (rest != 1)
        throw not_prime_power(std::to_string(q) + " is not a prime power");

    Field f;
    f.p_ = p;
    f.e_ = e;
    f.q_ = q;

    if (e == 1) {
        f.modulus_ = {0, 1}; // x; unused by arithmetic
    } else {
        // smallest monic irreducible of degree e by integer encoding
        std::uint64_t qe = 1;
        for (std::uint32_t i = 0; i < e; ++i) qe *= p;
        for (std::uint64_t t = 0; t < qe; ++t) {
            PPoly cand(e + 1, 0);
            std::uint64_t v = t;
            for (std::uint32_t i = 0; i < e; ++i) { cand[i] = v % p; v /= p; }
            cand[e] = 1;
            if (irreducible(cand, p, e)) {
                f.modulus_.assign(cand.begin(), cand.end());
                break;
            }
        }
        // a monic irreducible of every degree exists, so modulus_ is set
    }

    if (q <= kTableLimit) {
        auto t = std::make_shared<Tables>();
        t->add.resize(static_cast<std::size_t>(q) * q);
        t->mul.resize(static_cast<std::size_t>(q) * q);
        t->neg.resize(q);
        t->inv.resize(q, 0);
        for (Elem a = 0; a < q; ++a) {
            t->neg[a] = static_cast<std::uint16_t>(f.neg_generic(a));
            for (Elem b = 0; b < q; ++b) {
                t->add[a * q + b] = static_cast<std::uint16_t>(f.add_generic(a, b));
                t->mul[a * q + b] = static_cast<std::uint16_t>(f.mul_generic(a, b));
            }
        }
        for (Elem a = 1; a < q; ++a) {
            for (Elem b = 1; b < q; ++b) {
                if (t->mul[a * q + b] == 1) { t->inv[a] = static_cast<std::uint16_t>(b); break; }
            }
        }
        f.tables_ = std::move(t);
    }
    return f;
}

std::uint64_t Field::modulus_encoding() const noexcept {
    std::uint64_t enc = 0;
    std::uint64_t w = 1;
    for (std::uint32_t c : modulus_) {
        enc += c * w;
        w *= p_;
    }
    return enc;
}

Elem Field::add_generic(Elem a, Elem b) const noexcept {
    if (e_ == 1) {
        Elem s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t s = a % p_ + b % p_;
        if (s >= p_) s -= p_;
        r += s * w;
        a /= p_;
        b /= p_;
        w *= p_;
    }
    return r;
}

Elem Field::neg_generic(Elem a) const noexcept {
    if (e_ == 1) return a == 0 ? 0 : q_ - a;
    Elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        std::uint32_t d = a % p_;
        r += (d == 0 ? 0 : p_ - d) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

Elem Field::scalar_generic(std::uint32_t c, Elem a) const noexcept {
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(c) * a % p_);
    Elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += static_cast<Elem>(static_cast<std::uint64_t>(c) * (a % p_) % p_) * w;
        a /= p_;
        w *= p_;
    }
    return r;
}

Elem Field::mul_generic(Elem a, Elem b) const noexcept {
    if (e_ == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);

    // convolve base-p digit vectors, then reduce mod the modulus
    std::uint32_t da[17], db[17];
    for (std::uint32_t i = 0; i < e_; ++i) { da[i] = a % p_; a /= p_; }
    for (std::uint32_t i = 0; i < e_; ++i) { db[i] = b % p_; b /= p_; }
    std::uint64_t prod[33] = {0};
    for (std::uint32_t i = 0; i < e_; ++i) {
        if (da[i] == 0) continue;
        for (std::uint32_t j = 0; j < e_; ++j)
            prod[i + j] += static_cast<std::uint64_t>(da[i]) * db[j];
    }
    for (std::uint32_t d = 2 * e_ - 2; d >= e_; --d) {
        std::uint64_t c = prod[d] % p_;
        prod[d] = 0;
        if (c != 0) {
            std::uint64_t cc = p_ - c; // subtract c*modulus == add (p-c)*modulus
            for (std::uint32_t j = 0; j < e_; ++j)
                prod[d - e_ + j] += cc * modulus_[j];
        }
        if (d == e_) break;
    }
    Elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < e_; ++i) {
        r += static_cast<Elem>(prod[i] % p_) * w;
        w *= p_;
    }
    return r;
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw zero_inverse("inverse of the zero element");
    detail::count_field_inversion();
    if (tables_) return tables_->inv[a];
    return pow(a, q_ - 2);
}

Elem Field::pow(Elem a, std::uint64_t k) const {
    Elem r = 1;
    while (k > 0) {
        if (k & 1) r = mul(r, a);
        a = mul(a, a);
        k >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> Field::coords(Elem a) const {
    std::vector<std::uint32_t> d(e_);
    for (std::uint32_t i = 0; i < e_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

Elem Field::from_coords(const std::vector<std::uint32_t>& digits) const {
    Elem r = 0, w = 1;
    for (std::uint32_t i = 0; i < e_ && i < digits.size(); ++i) {
        r += digits[i] % p_ * w;
        w *= p_;
    }
    return r;
}

namespace {

// C(a, b) mod p for 0 <= b <= a < p: multiplicative formula plus one
// Fermat inverse. Integer arithmetic only.
std::uint32_t digit_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t j = 1; j <= b; ++j) {
        num = num * ((a - b + j) % p) % p;
        den = den * (j % p) % p;
    }
    return static_cast<std::uint32_t>(num * modpow_u64(den, p - 2, p) % p);
}

} // namespace

std::uint32_t binomial_mod_p(std::uint64_t i, std::uint64_t k, std::uint32_t p) {
    std::uint64_t r = 1;
    while ((i > 0 || k > 0) && r != 0) {
        r = r * digit_binom(i % p, k % p, p) % p;
        i /= p;
        k /= p;
    }
    return static_cast<std::uint32_t>(r);
}

} // namespace gcq
