#include "vinbergkit/quadratic.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <sstream>

namespace vinbergkit {

namespace {

constexpr long kInfinity = std::numeric_limits<long>::max() / 4;

long val_or_inf(const Rational& r, const Integer& p) { return r.is_zero() ? kInfinity : valuation(r, p); }

Integer mod(const Integer& a, const Integer& m) {
    Integer r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer powmod(const Integer& b, const Integer& e, const Integer& m) {
    Integer r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

Integer invmod(const Integer& a, const Integer& m) {
    Integer r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t())) throw ArithmeticError("not invertible");
    return r;
}

Integer common_denominator(const QuadElem& x) { return lcm(x.u.den(), x.v.den()); }

}  // namespace

// ---------------------------------------------------------------------------
// QuadElem
// ---------------------------------------------------------------------------

QuadElem::QuadElem(Integer d_, Rational u_, Rational v_) : d(std::move(d_)), u(std::move(u_)), v(std::move(v_)) {
    if (d == 1) {
        u += v;
        v = Rational(0);
    }
}

QuadElem QuadElem::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    Rational n = norm();
    return {d, u / n, -v / n};
}

int QuadElem::sign(int s) const {
    if (v.is_zero()) return u.sign();
    int sv = v.sign() * s;
    if (u.is_zero()) return sv;
    int su = u.sign();
    if (su == sv) return su;
    Rational lhs = u * u, rhs = Rational(d) * v * v;
    return lhs > rhs ? su : sv;
}

std::string QuadElem::str() const {
    if (v.is_zero()) return u.str();
    std::ostringstream os;
    std::string root = "sqrt(" + d.get_str() + ")";
    if (!u.is_zero()) os << u << (v.sign() < 0 ? " - " : " + ");
    else if (v.sign() < 0) os << "-";
    Rational a = abs(v);
    if (a != Rational(1)) os << a << "*";
    os << root;
    return os.str();
}

QuadElem operator+(const QuadElem& a, const QuadElem& b) { return {a.d, a.u + b.u, a.v + b.v}; }
QuadElem operator-(const QuadElem& a, const QuadElem& b) { return {a.d, a.u - b.u, a.v - b.v}; }
QuadElem operator-(const QuadElem& a) { return {a.d, -a.u, -a.v}; }
QuadElem operator*(const QuadElem& a, const QuadElem& b) {
    return {a.d, a.u * b.u + Rational(a.d) * a.v * b.v, a.u * b.v + a.v * b.u};
}
QuadElem operator/(const QuadElem& a, const QuadElem& b) { return a * b.inverse(); }
bool operator==(const QuadElem& a, const QuadElem& b) { return a.u == b.u && a.v == b.v; }

QuadElem pow(const QuadElem& a, long e) {
    if (e < 0) return pow(a.inverse(), -e);
    QuadElem r(a.d, Rational(1)), b = a;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// QuadraticField
// ---------------------------------------------------------------------------

QuadraticField::QuadraticField(Integer d) : d_(std::move(d)) {
    if (d_ == 0 || squarefree_part(d_) != d_) throw ArithmeticError("quadratic field needs a squarefree d");
}

QuadraticField QuadraticField::of(const FieldPtr& f) {
    if (f->degree() > 2) throw ArithmeticError("field of degree " + std::to_string(f->degree()) + " is not quadratic");
    return QuadraticField(f->degree() == 1 ? Integer(1) : quadratic_discriminant_class(f));
}

bool QuadraticField::omega_half() const { return !is_rationals() && mod(d_, 4) == 1; }

Integer QuadraticField::discriminant() const {
    if (is_rationals()) return 1;
    return omega_half() ? d_ : Integer(4 * d_);
}

QuadElem QuadraticField::from(const AlgebraicNumber& a) const {
    QuadraticCoords q = quadratic_coords(a);
    if (!q.v.is_zero() && q.d != d_)
        throw ArithmeticError("element " + a.str() + " does not lie in " + name());
    return {d_, q.u, q.v};
}

AlgebraicNumber QuadraticField::to_algebraic(const QuadElem& x, const FieldPtr& target) const {
    AlgebraicNumber r = *coerce(AlgebraicNumber(x.u), target);
    if (x.v.is_zero()) return r;
    AlgebraicNumber root = sqrt(*coerce(AlgebraicNumber(d_), target));
    auto in = coerce(root, target);
    if (!in) throw ArithmeticError(name() + " is not contained in the target field");
    return r + AlgebraicNumber(x.v) * *in;
}

bool QuadraticField::is_integral(const QuadElem& x) const {
    return x.trace().is_integer() && x.norm().is_integer();
}

std::string QuadraticField::name() const { return is_rationals() ? "Q" : "Q(sqrt(" + d_.get_str() + "))"; }

// ---------------------------------------------------------------------------
// Places
// ---------------------------------------------------------------------------

std::strong_ordering operator<=>(const Place& a, const Place& b) {
    if (a.is_real() != b.is_real()) return a.is_real() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (a.is_real()) return b.sign <=> a.sign;
    if (int c = cmp(a.p, b.p)) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(a.residue, b.residue)) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
}

std::string Place::kind_name() const {
    switch (kind) {
        case Kind::Real: return "real";
        case Kind::Rational: return "prime";
        case Kind::Split: return "split";
        case Kind::Inert: return "inert";
        case Kind::Ramified: return "ramified";
    }
    return "";
}

std::string Place::label(const QuadraticField& f) const {
    const std::string root = "sqrt(" + f.d().get_str() + ")";
    const std::string ps = p.get_str();
    switch (kind) {
        case Kind::Real:
            return f.is_rationals() ? "inf" : (sign > 0 ? "inf+" : "inf-");
        case Kind::Rational:
            return ps;
        case Kind::Inert:
            return "(" + ps + ")";
        case Kind::Ramified:
            if (p == 2 && mod(f.d(), 4) == 3) return "(2, 1 + " + root + ")";
            return "(" + ps + ", " + root + ")";
        case Kind::Split: {
            if (p == 2) {
                std::string w = "(1 + " + root + ")/2";
                return residue == 0 ? "(2, " + w + ")" : "(2, " + w + " - " + residue.get_str() + ")";
            }
            Integer s = f.omega_half() ? mod(2 * residue - 1, p) : residue;
            return "(" + ps + ", " + root + " - " + s.get_str() + ")";
        }
    }
    return "";
}

std::vector<Place> real_places(const QuadraticField& f) {
    if (f.is_rationals()) return {Place{Place::Kind::Real, 0, 1, 0}};
    if (!f.is_real()) return {};
    return {Place{Place::Kind::Real, 0, 1, 0}, Place{Place::Kind::Real, 0, -1, 0}};
}

bool sqrt_mod_prime(const Integer& a_in, const Integer& p, Integer* root) {
    Integer a = mod(a_in, p);
    if (a == 0) {
        *root = 0;
        return true;
    }
    if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return false;
    // Tonelli-Shanks
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
    Integer c = powmod(z, q, p);
    Integer r = powmod(a, (q + 1) / 2, p);
    Integer t = powmod(a, q, p);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = mod(tt * tt, p);
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j) b = mod(b * b, p);
        r = mod(r * b, p);
        c = mod(b * b, p);
        t = mod(t * c, p);
        m = i;
    }
    *root = r;
    return true;
}

std::vector<Place> places_above(const QuadraticField& f, const Integer& p) {
    if (f.is_rationals()) return {Place{Place::Kind::Rational, p, 1, 0}};
    int k = kronecker(f.discriminant(), p);
    if (k == 0) return {Place{Place::Kind::Ramified, p, 1, 0}};
    if (k < 0) return {Place{Place::Kind::Inert, p, 1, 0}};
    std::vector<Integer> roots;
    if (p == 2) {
        roots = {0, 1};
    } else {
        Integer s;
        sqrt_mod_prime(f.d(), p, &s);
        if (f.omega_half()) {
            Integer half = invmod(2, p);
            roots = {mod((1 + s) * half, p), mod((1 - s) * half, p)};
        } else {
            roots = {s, mod(-s, p)};
        }
        std::sort(roots.begin(), roots.end());
    }
    return {Place{Place::Kind::Split, p, 1, roots[0]}, Place{Place::Kind::Split, p, 1, roots[1]}};
}

std::vector<Integer> support_primes(const QuadElem& x) {
    std::set<Integer> out;
    auto add = [&](const Integer& n) {
        if (n == 0 || n == 1 || n == -1) return;
        for (const auto& [q, e] : factor_integer(n)) out.insert(q);
    };
    Rational n = x.norm();
    add(n.num());
    add(n.den());
    add(common_denominator(x));
    return {out.begin(), out.end()};
}

PAdicApprox padic_image(const QuadElem& x, const Place& place, long precision) {
    if (x.is_zero()) throw ArithmeticError("p-adic image of zero");
    const Integer& p = place.p;
    if (place.kind == Place::Kind::Rational || x.v.is_zero()) {
        long val = valuation(x.u, p);
        Rational unit = x.u / pow(Rational(p), val);
        return {val, mod_reduce(unit, ipow(p, static_cast<unsigned long>(precision)))};
    }
    if (place.kind != Place::Kind::Split) throw ArithmeticError("p-adic image needs a split place");
    Integer C = common_denominator(x);
    Integer X = (x.u * Rational(C)).num(), Y = (x.v * Rational(C)).num();
    Integer N = X * X - x.d * Y * Y;
    long K = valuation(N, p) + precision + 2;
    Integer pk = ipow(p, static_cast<unsigned long>(K));
    bool half = mod(x.d, 4) == 1;
    // Newton lift of the root of the minimal polynomial of w
    Integer w = place.residue;
    Integer c0 = half ? Integer(-(x.d - 1) / 4) : Integer(-x.d);
    Integer c1 = half ? Integer(-1) : Integer(0);
    for (int iter = 0; iter < 200; ++iter) {
        Integer fw = mod(w * w + c1 * w + c0, pk);
        if (fw == 0) break;
        Integer dfw = mod(2 * w + c1, pk);
        w = mod(w - fw * invmod(dfw, pk), pk);
    }
    Integer s = half ? mod(2 * w - 1, pk) : w;
    Integer num = mod(X + Y * s, pk);
    long vn = valuation(num, p);
    long vc = valuation(C, p);
    Integer pc = ipow(p, static_cast<unsigned long>(vc));
    Integer pv = ipow(p, static_cast<unsigned long>(vn));
    Integer mprec = ipow(p, static_cast<unsigned long>(precision));
    Integer unit = mod(Integer(num / pv) * invmod(Integer(C / pc), mprec), mprec);
    return {vn - vc, unit};
}

long valuation(const QuadElem& x, const Place& place) {
    if (x.is_zero()) throw ArithmeticError("valuation of zero");
    const Integer& p = place.p;
    switch (place.kind) {
        case Place::Kind::Real:
            throw ArithmeticError("valuation at a real place");
        case Place::Kind::Rational:
            return valuation(x.u, p);
        case Place::Kind::Inert:
            if (p == 2 && mod(x.d, 4) == 1)
                return std::min(val_or_inf(x.u - x.v, p), val_or_inf(Rational(2) * x.v, p));
            return std::min(val_or_inf(x.u, p), val_or_inf(x.v, p));
        case Place::Kind::Ramified: {
            Rational A = x.u, B = x.v;
            if (p == 2 && mod(x.d, 4) == 3) A = x.u - x.v;
            long a = val_or_inf(A, p), b = val_or_inf(B, p);
            return std::min(a == kInfinity ? kInfinity : 2 * a, b == kInfinity ? kInfinity : 2 * b + 1);
        }
        case Place::Kind::Split:
            return padic_image(x, place, 1).val;
    }
    return 0;
}

}  // namespace vinbergkit
