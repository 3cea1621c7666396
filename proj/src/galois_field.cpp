#include "incfree/galois_field.hpp"

#include <map>
#include <string>

#include "incfree/error.hpp"

namespace incfree {

namespace {

using Poly = std::vector<std::size_t>;  // coefficients, constant term first

Poly digits(std::size_t value, std::size_t p, std::size_t len) {
    Poly out(len, 0);
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = value % p;
        value /= p;
    }
    return out;
}

std::size_t from_digits(const Poly& d, std::size_t p) {
    std::size_t value = 0;
    for (std::size_t i = d.size(); i-- > 0;) value = value * p + d[i];
    return value;
}

// Remainder of a modulo monic m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::size_t p) {
    const std::size_t dm = m.size() - 1;
    for (std::size_t i = a.size(); i-- > dm;) {
        std::size_t c = a[i] % p;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dm; ++j) {
            std::size_t idx = i - dm + j;
            a[idx] = (a[idx] + p * p - (c * m[j]) % p) % p;
        }
    }
    a.resize(dm);
    return a;
}

bool is_irreducible(const Poly& m, std::size_t p) {
    const std::size_t d = m.size() - 1;
    // Trial division by every monic polynomial of degree 1..d/2.
    for (std::size_t df = 1; df * 2 <= d; ++df) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < df; ++i) count *= p;
        for (std::size_t low = 0; low < count; ++low) {
            Poly f = digits(low, p, df);
            f.push_back(1);
            Poly r = poly_mod(m, f, p);
            bool zero = true;
            for (auto c : r) zero = zero && c == 0;
            if (zero) return false;
        }
    }
    return true;
}

Poly find_modulus(std::size_t q, std::size_t p, std::size_t e) {
    static const std::map<std::size_t, Poly> fixed = {
        {4, {1, 1, 1}},     // x^2 + x + 1
        {8, {1, 1, 0, 1}},  // x^3 + x + 1
        {9, {1, 0, 1}},     // x^2 + 1
    };
    if (auto it = fixed.find(q); it != fixed.end()) return it->second;
    if (e == 1) return {0, 1};
    for (std::size_t low = 0; low < q; ++low) {
        Poly m = digits(low, p, e);
        m.push_back(1);
        if (is_irreducible(m, p)) return m;
    }
    throw Error(ErrorKind::NotPrimePower, "no irreducible polynomial found for q=" + std::to_string(q));
}

}  // namespace

std::pair<std::size_t, std::size_t> prime_power_decomposition(std::size_t q) {
    if (q < 2) return {0, 0};
    std::size_t p = 0;
    for (std::size_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) return {q, 1};
    std::size_t e = 0;
    while (q % p == 0) {
        q /= p;
        ++e;
    }
    if (q != 1) return {0, 0};
    return {p, e};
}

GaloisField::GaloisField(std::size_t q) : order_(q) {
    auto [p, e] = prime_power_decomposition(q);
    if (p == 0) throw Error(ErrorKind::NotPrimePower, std::to_string(q) + " is not a prime power", {q});
    if (q > max_order)
        throw Error(ErrorKind::TooLarge, "field order " + std::to_string(q) + " exceeds " + std::to_string(max_order), {q});
    characteristic_ = p;
    degree_ = e;
    modulus_ = find_modulus(q, p, e);

    add_.resize(q * q);
    mul_.resize(q * q);
    neg_.resize(q);
    inv_.assign(q, 0);

    std::vector<Poly> polys(q);
    for (std::size_t a = 0; a < q; ++a) polys[a] = digits(a, p, e);

    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            Poly s(e);
            for (std::size_t i = 0; i < e; ++i) s[i] = (polys[a][i] + polys[b][i]) % p;
            add_[a * q + b] = static_cast<Element>(from_digits(s, p));

            Poly prod(2 * e - 1, 0);
            for (std::size_t i = 0; i < e; ++i)
                for (std::size_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + polys[a][i] * polys[b][j]) % p;
            if (prod.size() >= modulus_.size()) prod = poly_mod(prod, modulus_, p);
            prod.resize(e, 0);
            mul_[a * q + b] = static_cast<Element>(from_digits(prod, p));
        }
    }
    for (std::size_t a = 0; a < q; ++a) {
        for (std::size_t b = 0; b < q; ++b) {
            if (add_[a * q + b] == 0) neg_[a] = static_cast<Element>(b);
            if (mul_[a * q + b] == 1) inv_[a] = static_cast<Element>(b);
        }
    }
}

}  // namespace incfree
