#include "gcq/poly.hpp"

#include <algorithm>

namespace gcq {

namespace {

void require_same_field(const DensePoly& f, const DensePoly& g) {
    if (f.field() != g.field())
        throw field_mismatch("polynomials over different fields");
}

} // namespace

DensePoly::DensePoly(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_) {
        if (!field_.valid(c))
            throw bad_element("coefficient encoding out of range");
    }
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DensePoly DensePoly::constant(const Field& field, Elem c) {
    return DensePoly(field, std::vector<Elem>{c});
}

DensePoly DensePoly::x_pow_minus_one(const Field& field, std::size_t n) {
    std::vector<Elem> c(n + 1, 0);
    c[0] = field.neg(1);
    c[n] = 1;
    return DensePoly(field, std::move(c));
}

DensePoly poly_add(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Elem> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.add(x, y);
    }
    return DensePoly(F, std::move(r));
}

DensePoly poly_neg(const DensePoly& f) {
    const Field& F = f.field();
    std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
    for (Elem& c : r) c = F.neg(c);
    return DensePoly(F, std::move(r));
}

DensePoly poly_sub(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Elem> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        Elem x = i < a.size() ? a[i] : 0;
        Elem y = i < b.size() ? b[i] : 0;
        r[i] = F.sub(x, y);
    }
    return DensePoly(F, std::move(r));
}

DensePoly poly_scalar(Elem c, const DensePoly& f) {
    const Field& F = f.field();
    if (!F.valid(c)) throw bad_element("scalar encoding out of range");
    std::vector<Elem> r(f.coeffs().begin(), f.coeffs().end());
    for (Elem& x : r) x = F.mul(c, x);
    return DensePoly(F, std::move(r));
}

DensePoly poly_shift(const DensePoly& f, std::size_t k) {
    if (f.is_zero() || k == 0) return f;
    std::vector<Elem> r(f.coeffs().size() + k, 0);
    std::copy(f.coeffs().begin(), f.coeffs().end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return DensePoly(f.field(), std::move(r));
}

Elem poly_eval(const DensePoly& f, Elem a) {
    const Field& F = f.field();
    if (!F.valid(a)) throw bad_element("evaluation point out of range");
    Elem acc = 0;
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = F.add(F.mul(acc, a), c[i]);
    return acc;
}

DensePoly poly_mul(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    const Field& F = f.field();
    if (f.is_zero() || g.is_zero()) return DensePoly::zero(F);
    const auto& a = f.coeffs();
    const auto& b = g.coeffs();
    std::vector<Elem> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
        }
    }
    return DensePoly(F, std::move(r));
}

std::pair<DensePoly, DensePoly> poly_divmod(const DensePoly& f, const DensePoly& g) {
    require_same_field(f, g);
    if (g.is_zero()) throw division_by_zero_poly("division by the zero polynomial");
    detail::count_poly_division();
    const Field& F = f.field();
    const std::size_t dg = *g.degree();
    if (f.is_zero() || *f.degree() < dg)
        return {DensePoly::zero(F), f};

    std::vector<Elem> rem(f.coeffs().begin(), f.coeffs().end());
    std::vector<Elem> quot(rem.size() - dg, 0);
    const Elem lead_inv = F.inv(g.coeffs()[dg]);
    for (std::size_t i = rem.size(); i-- > dg;) {
        Elem c = rem[i];
        if (c == 0) continue;
        Elem qc = F.mul(c, lead_inv);
        quot[i - dg] = qc;
        // rem -= qc * g * x^{i-dg}
        for (std::size_t j = 0; j <= dg; ++j) {
            Elem t = F.mul(qc, g.coeffs()[j]);
            rem[i - dg + j] = F.sub(rem[i - dg + j], t);
        }
    }
    return {DensePoly(F, std::move(quot)), DensePoly(F, std::move(rem))};
}

DensePoly poly_monic(const DensePoly& f) {
    if (f.is_zero()) throw zero_polynomial("monic form of the zero polynomial");
    const Field& F = f.field();
    Elem lead = f.coeffs().back();
    if (lead == 1) return f;
    return poly_scalar(F.inv(lead), f);
}

DensePoly poly_gcd(const DensePoly& f, const DensePoly& g) {
    if (f.is_zero() && g.is_zero()) throw both_zero("gcd(0, 0) is undefined");
    DensePoly a = f, b = g;
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(a);
}

} // namespace gcq
