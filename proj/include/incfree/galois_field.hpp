#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace incfree {

/// Finite field GF(p^e) with full operation tables.
///
/// Elements are the integers 0..q-1; element `a` encodes the polynomial whose
/// base-p digits are its coefficients (least significant digit = constant
/// term), reduced modulo a fixed monic irreducible polynomial of degree e.
/// 0 and 1 are the additive and multiplicative identities.
class GaloisField {
public:
    using Element = std::uint32_t;

    /// Largest supported order; tables are q*q entries.
    static constexpr std::size_t max_order = 1024;

    /// Throws Error(NotPrimePower) for q that is not a prime power (q < 2
    /// included) and Error(TooLarge) above max_order.
    explicit GaloisField(std::size_t q);

    std::size_t order() const noexcept { return order_; }
    std::size_t characteristic() const noexcept { return characteristic_; }
    std::size_t degree() const noexcept { return degree_; }
    /// Coefficients of the modulus, constant term first, leading 1 last.
    const std::vector<std::size_t>& modulus() const noexcept { return modulus_; }

    Element add(Element a, Element b) const noexcept { return add_[a * order_ + b]; }
    Element mul(Element a, Element b) const noexcept { return mul_[a * order_ + b]; }
    Element neg(Element a) const noexcept { return neg_[a]; }
    Element sub(Element a, Element b) const noexcept { return add(a, neg(b)); }
    /// Multiplicative inverse; `a` must be nonzero.
    Element inv(Element a) const noexcept { return inv_[a]; }

private:
    std::size_t order_;
    std::size_t characteristic_ = 0;
    std::size_t degree_ = 0;
    std::vector<std::size_t> modulus_;
    std::vector<Element> add_;
    std::vector<Element> mul_;
    std::vector<Element> neg_;
    std::vector<Element> inv_;
};

/// Returns (p, e) with q = p^e, or (0, 0) when q is not a prime power.
std::pair<std::size_t, std::size_t> prime_power_decomposition(std::size_t q);

}  // namespace incfree
