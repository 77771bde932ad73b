#include "resolvdim/field.hpp"

#include <algorithm>
#include <string>

#include "resolvdim/error.hpp"

namespace resolvdim {
namespace {

struct TabledPoly {
    std::uint32_t q;
    std::vector<std::uint32_t> poly;  // constant term first, monic
};

// One fixed monic irreducible polynomial per extension field order.
const std::vector<TabledPoly>& tabled_polys() {
    static const std::vector<TabledPoly> table = {
        {4, {1, 1, 1}},        // x^2 + x + 1
        {8, {1, 1, 0, 1}},     // x^3 + x + 1
        {16, {1, 1, 0, 0, 1}}, // x^4 + x + 1
        {9, {1, 0, 1}},        // x^2 + 1
        {25, {2, 0, 1}},       // x^2 + 2
        {27, {1, 2, 0, 1}},    // x^3 + 2x + 1
    };
    return table;
}

bool is_prime(std::uint32_t x) {
    if (x < 2) return false;
    for (std::uint32_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

// Writes q = p^m if q is a prime power.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    std::uint32_t d = 2;
    while (q % d != 0) ++d;
    p = d;
    m = 0;
    while (q % d == 0) {
        q /= d;
        ++m;
    }
    return q == 1;
}

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b over GF(p), b monic.
Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
        trim(a);
    }
    return a;
}

Poly digits(std::uint32_t rep, std::uint32_t p, std::uint32_t m) {
    Poly d(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        d[i] = rep % p;
        rep /= p;
    }
    return d;
}

std::uint32_t pack(const Poly& d, std::uint32_t p) {
    std::uint32_t rep = 0;
    for (std::size_t i = d.size(); i-- > 0;) rep = rep * p + d[i];
    return rep;
}

}  // namespace

bool is_irreducible_mod_p(std::span<const std::uint32_t> monic_poly, std::uint32_t p) {
    Poly f(monic_poly.begin(), monic_poly.end());
    trim(f);
    if (f.size() < 2 || f.back() != 1) return false;
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        // Every monic polynomial of degree d: p^d choices of lower coefficients.
        std::uint32_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint32_t low = 0; low < count; ++low) {
            Poly g = digits(low, p, static_cast<std::uint32_t>(d));
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

bool Field::is_supported(std::uint32_t q) noexcept {
    return std::find(std::begin(kSupportedOrders), std::end(kSupportedOrders), q) !=
           std::end(kSupportedOrders);
}

Field::Field(std::uint32_t q) : q_(q), p_(0), m_(0) {
    if (!prime_power(q, p_, m_))
        throw Error(ErrorCode::UnsupportedOrder, "field order " + std::to_string(q) + " is not a prime power");
    if (!is_supported(q))
        throw Error(ErrorCode::UnsupportedOrder,
                    "field order " + std::to_string(q) + " is a prime power but not tabled");
    if (m_ > 1) {
        for (const auto& t : tabled_polys())
            if (t.q == q) poly_ = t.poly;
        if (!is_irreducible_mod_p(poly_, p_))
            throw Error(ErrorCode::UnsupportedOrder,
                        "tabled reduction polynomial for q=" + std::to_string(q) + " is reducible");
    } else if (!is_prime(q)) {
        throw Error(ErrorCode::UnsupportedOrder, "field order " + std::to_string(q) + " is not prime");
    }

    const std::size_t qq = std::size_t(q_) * q_;
    add_.resize(qq);
    mul_.resize(qq);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    for (std::uint32_t a = 0; a < q_; ++a) {
        const Poly da = digits(a, p_, m_);
        Poly na(m_);
        for (std::uint32_t i = 0; i < m_; ++i) na[i] = (p_ - da[i]) % p_;
        neg_[a] = static_cast<std::uint8_t>(pack(na, p_));
        for (std::uint32_t b = 0; b < q_; ++b) {
            const Poly db = digits(b, p_, m_);
            Poly sum(m_);
            for (std::uint32_t i = 0; i < m_; ++i) sum[i] = (da[i] + db[i]) % p_;
            add_[std::size_t(a) * q_ + b] = static_cast<std::uint8_t>(pack(sum, p_));

            Poly prod(2 * m_, 0);
            for (std::uint32_t i = 0; i < m_; ++i)
                for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
            if (m_ > 1) prod = poly_mod(prod, poly_, p_);
            else
                trim(prod);
            prod.resize(m_, 0);
            mul_[std::size_t(a) * q_ + b] = static_cast<std::uint8_t>(pack(prod, p_));
        }
    }
    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul_[std::size_t(a) * q_ + b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

void Field::check(FieldElement a) const {
    if (a.rep >= q_)
        throw Error(ErrorCode::OutOfRange,
                    "element " + std::to_string(a.rep) + " not in GF(" + std::to_string(q_) + ")");
}

std::size_t Field::index(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return std::size_t(a.rep) * q_ + b.rep;
}

FieldElement Field::add(FieldElement a, FieldElement b) const { return {add_[index(a, b)]}; }

FieldElement Field::sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }

FieldElement Field::neg(FieldElement a) const {
    check(a);
    return {neg_[a.rep]};
}

FieldElement Field::mul(FieldElement a, FieldElement b) const { return {mul_[index(a, b)]}; }

FieldElement Field::inv(FieldElement a) const {
    check(a);
    if (a.rep == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return {inv_[a.rep]};
}

}  // namespace resolvdim
