#include "vinbergkit/rational.hpp"

#include <algorithm>
#include <ostream>

#include "vinbergkit/error.hpp"

namespace vinbergkit {

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ArithmeticError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational number: '" + s + "'");
    }
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_.get_str(); }

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return Rational(1) / pow(base, -exponent);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(d.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return Rational(n, d);
}

Integer floor(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

Integer ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
    return q;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Integer lcm(const Integer& a, const Integer& b) {
    Integer l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

Integer ipow(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw ArithmeticError("valuation of zero");
    Integer m = n;
    int v = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

int valuation(const Rational& r, const Integer& p) {
    return valuation(r.num(), p) - valuation(r.den(), p);
}

bool is_probable_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

Integer pollard_brent(const Integer& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    for (unsigned long c = 1;; ++c) {
        Integer y = 2, x, g = 1, q = 1, ys;
        unsigned long r = 1, m = 64;
        auto f = [&](const Integer& v) {
            Integer w = v * v + c;
            mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
            return w;
        };
        while (g == 1) {
            x = y;
            for (unsigned long i = 0; i < r; ++i) y = f(y);
            unsigned long k = 0;
            while (k < r && g == 1) {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    Integer d = x - y;
                    q = q * abs(d);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                g = gcd(q, n);
                k += m;
            }
            r *= 2;
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs(Integer(x - ys)), n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(const Integer& n, std::map<Integer, int>& out) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    Integer d = pollard_brent(n);
    factor_into(d, out);
    factor_into(Integer(n / d), out);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n) {
    if (n == 0) throw ArithmeticError("factorization of zero");
    std::map<Integer, int> out;
    Integer m = abs(n);
    for (unsigned long p = 2; p < 10000 && m > 1; ++p) {
        if (p > 2 && p % 2 == 0) continue;
        if (Integer(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            m /= p;
            ++out[Integer(p)];
        }
    }
    factor_into(m, out);
    return out;
}

Integer squarefree_part(const Integer& n) {
    if (n == 0) throw ArithmeticError("squarefree part of zero");
    Integer s = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_integer(n))
        if (e % 2) s *= p;
    return s;
}

Integer squarefree_class(const Rational& r) {
    if (r.is_zero()) throw ArithmeticError("square class of zero");
    return squarefree_part(Integer(r.num() * r.den()));
}

bool is_perfect_square(const Integer& n, Integer* root) {
    if (n < 0) return false;
    if (!mpz_perfect_square_p(n.get_mpz_t())) return false;
    if (root) mpz_sqrt(root->get_mpz_t(), n.get_mpz_t());
    return true;
}

bool is_rational_square(const Rational& r, Rational* root) {
    Integer a, b;
    if (!is_perfect_square(r.num(), &a) || !is_perfect_square(r.den(), &b)) return false;
    if (root) *root = Rational(a, b);
    return true;
}

int kronecker(const Integer& a, const Integer& n) {
    return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

Integer mod_reduce(const Rational& r, const Integer& m) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), r.raw().get_den_mpz_t(), m.get_mpz_t()))
        throw ArithmeticError("denominator not invertible modulo " + m.get_str());
    Integer v = r.num() * inv;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    return v;
}

long euler_phi(long m) {
    if (m < 1) throw ArithmeticError("euler_phi of non-positive integer");
    long result = m, n = m;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

}  // namespace vinbergkit
