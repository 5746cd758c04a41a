#include "vinbergkit/polynomial.hpp"

namespace vinbergkit {

QPoly primitive_part(const QPoly& p) {
    if (p.is_zero()) return p;
    Integer den = 1, num = 0;
    for (const auto& c : p.coeffs()) den = lcm(den, c.den());
    for (const auto& c : p.coeffs()) num = gcd(num, Integer(c.num() * (den / c.den())));
    Rational scale(den, num);
    if (p.lead().sign() < 0) scale = -scale;
    return scale * p;
}

std::vector<Integer> integer_coeffs(const QPoly& primitive) {
    std::vector<Integer> out;
    out.reserve(primitive.coeffs().size());
    for (const auto& c : primitive.coeffs()) {
        if (!c.is_integer()) throw InternalError("integer_coeffs on non-integral polynomial");
        out.push_back(c.num());
    }
    return out;
}

QPoly from_integers(const std::vector<Integer>& c) {
    std::vector<Rational> q;
    q.reserve(c.size());
    for (const auto& v : c) q.emplace_back(v);
    return QPoly(std::move(q));
}

}  // namespace vinbergkit
