#include "vinbergkit/algnum.hpp"

#include <cstdlib>
#include <map>
#include <ostream>
#include <sstream>

#include "vinbergkit/factor.hpp"

namespace vinbergkit {

int starting_precision_digits() {
    static const int digits = [] {
        const char* env = std::getenv("VINBERGKIT_PRECISION_DIGITS");
        if (!env) return 30;
        int v = std::atoi(env);
        return v < 1 ? 1 : (v > 10000 ? 10000 : v);
    }();
    return digits;
}

namespace {

Rational starting_eps() {
    static const Rational eps(Integer(1), ipow(Integer(10), static_cast<unsigned long>(starting_precision_digits())));
    return eps;
}

using Coords = std::vector<Rational>;

bool coords_zero(const Coords& c) {
    for (const auto& v : c)
        if (!v.is_zero()) return false;
    return true;
}

QPoly coords_poly(const Coords& c) { return QPoly(c); }

Coords poly_coords(const QPoly& p, int degree) {
    Coords c(static_cast<size_t>(degree), Rational(0));
    for (int i = 0; i <= p.degree() && i < degree; ++i) c[static_cast<size_t>(i)] = p[i];
    return c;
}

/// Exact incremental span over Q with expression in terms of the inserted vectors.
class Span {
public:
    size_t size() const { return rows_.size(); }

    std::optional<Coords> express(const Coords& v) const {
        Coords residual = v;
        Coords comb(rows_.size(), Rational(0));
        reduce(residual, comb);
        if (!coords_zero(residual)) return std::nullopt;
        return comb;
    }

    bool add(const Coords& v) {
        Coords residual = v;
        Coords comb(rows_.size() + 1, Rational(0));
        reduce(residual, comb);
        size_t pivot = 0;
        while (pivot < residual.size() && residual[pivot].is_zero()) ++pivot;
        if (pivot == residual.size()) return false;
        Rational inv = Rational(1) / residual[pivot];
        for (auto& x : residual) x *= inv;
        for (auto& x : comb) x = -x * inv;
        comb.back() = inv;
        for (auto& r : rows_) r.comb.push_back(Rational(0));
        rows_.push_back({std::move(residual), pivot, std::move(comb)});
        return true;
    }

private:
    struct Row {
        Coords v;
        size_t pivot;
        Coords comb;
    };

    // v -= sum c_k row_k; comb accumulates sum c_k T_k over the inserted vectors.
    void reduce(Coords& v, Coords& comb) const {
        for (const auto& r : rows_) {
            Rational c = v[r.pivot];
            if (c.is_zero()) continue;
            for (size_t i = r.pivot; i < v.size(); ++i)
                if (!r.v[i].is_zero()) v[i] -= c * r.v[i];
            for (size_t j = 0; j < r.comb.size(); ++j)
                if (!r.comb[j].is_zero()) comb[j] += c * r.comb[j];
        }
    }

    std::vector<Row> rows_;
};

Coords multiply(const NumberField& f, const Coords& a, const Coords& b) {
    int d = f.degree();
    if (d == 1) return {a[0] * b[0]};
    std::vector<Rational> conv(static_cast<size_t>(2 * d - 1), Rational(0));
    for (int i = 0; i < d; ++i) {
        if (a[static_cast<size_t>(i)].is_zero()) continue;
        for (int j = 0; j < d; ++j)
            if (!b[static_cast<size_t>(j)].is_zero())
                conv[static_cast<size_t>(i + j)] += a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)];
    }
    Coords out(conv.begin(), conv.begin() + d);
    for (int k = d; k < 2 * d - 1; ++k) {
        const Rational& c = conv[static_cast<size_t>(k)];
        if (c.is_zero()) continue;
        const Coords& pk = f.power(k);
        for (int i = 0; i < d; ++i) out[static_cast<size_t>(i)] += c * pk[static_cast<size_t>(i)];
    }
    return out;
}

// ---------------------------------------------------------------------------
// Registry of field inclusions: source generator -> coordinates in target.
// ---------------------------------------------------------------------------

struct Inclusion {
    FieldPtr source;
    Coords image;
};

struct Registry {
    std::mutex mutex;
    std::map<const NumberField*, std::pair<FieldPtr, std::vector<Inclusion>>> incoming;
    std::map<std::pair<const NumberField*, const NumberField*>, FieldPtr> composita;
};

Registry& registry() {
    static Registry r;
    return r;
}

void register_inclusion(const FieldPtr& source, const FieldPtr& target, Coords image) {
    if (source.get() == target.get()) return;
    auto& r = registry();
    std::lock_guard<std::mutex> lock(r.mutex);
    auto& entry = r.incoming[target.get()];
    entry.first = target;
    for (const auto& inc : entry.second)
        if (inc.source.get() == source.get()) return;
    entry.second.push_back({source, std::move(image)});
}

/// Evaluates the source polynomial `c` at `image` inside `target`.
Coords apply_image(const Coords& c, const Coords& image, const NumberField& target) {
    int d = target.degree();
    Coords acc(static_cast<size_t>(d), Rational(0));
    for (size_t i = c.size(); i-- > 0;) {
        acc = multiply(target, acc, image);
        acc[0] += c[i];
    }
    return acc;
}

Coords generator_coords(const NumberField& f) {
    Coords c(static_cast<size_t>(f.degree()), Rational(0));
    if (f.degree() > 1) c[1] = 1;
    return c;
}

std::optional<Coords> find_image_rec(const FieldPtr& source, const FieldPtr& target,
                                     std::vector<const NumberField*>& visiting) {
    if (source->identical(*target)) return generator_coords(*target);
    for (auto* v : visiting)
        if (v == target.get()) return std::nullopt;
    std::vector<Inclusion> parents;
    {
        auto& r = registry();
        std::lock_guard<std::mutex> lock(r.mutex);
        auto it = r.incoming.find(target.get());
        if (it != r.incoming.end()) parents = it->second.second;
    }
    for (const auto& inc : parents)
        if (inc.source->identical(*source)) return inc.image;
    visiting.push_back(target.get());
    for (const auto& inc : parents) {
        if (inc.source->degree() < source->degree()) continue;
        if (inc.source->degree() % source->degree()) continue;
        if (auto img = find_image_rec(source, inc.source, visiting)) {
            visiting.pop_back();
            return apply_image(*img, inc.image, *target);
        }
    }
    visiting.pop_back();
    return std::nullopt;
}

std::optional<Coords> find_image(const FieldPtr& source, const FieldPtr& target) {
    if (source->degree() > target->degree() || target->degree() % source->degree()) return std::nullopt;
    std::vector<const NumberField*> visiting;
    auto img = find_image_rec(source, target, visiting);
    if (img && !source->identical(*target)) register_inclusion(source, target, *img);
    return img;
}

/// Coordinates over the field of a real algebraic number given a rational
/// minimal polynomial h of the number and an oracle for it: returns the
/// field Q(gamma) with an integral generator theta = D*gamma.
struct MadeField {
    FieldPtr field;
    AlgebraicNumber gamma;
    Rational scale;
};

MadeField make_field(const QPoly& h_in, const RealOracle& oracle) {
    QPoly h = monic(h_in);
    if (h.degree() == 1) return {NumberField::rationals(), AlgebraicNumber(-h[0]), Rational(1)};
    if (h.degree() > kMaxFieldDegree)
        throw ArithmeticError("field degree " + std::to_string(h.degree()) + " exceeds the cap of " +
                              std::to_string(kMaxFieldDegree));
    Integer D = 1;
    for (const auto& c : h.coeffs()) D = lcm(D, c.den());
    int n = h.degree();
    std::vector<Rational> H(static_cast<size_t>(n + 1));
    Integer pw = 1;
    for (int i = n; i >= 0; --i) {
        H[static_cast<size_t>(i)] = h[i] * Rational(pw);
        pw *= D;
    }
    QPoly Hp(H);
    auto roots = isolate_real_roots(Hp);
    Rational eps = starting_eps();
    std::vector<int> candidates;
    for (;;) {
        Interval g = oracle(eps);
        Interval t = Rational(D) * g;
        candidates.clear();
        for (size_t i = 0; i < roots.size(); ++i) {
            if (!roots[i].overlaps(t)) continue;
            roots[i] = refine_root(Hp, roots[i], eps);
            if (roots[i].overlaps(t)) candidates.push_back(static_cast<int>(i));
        }
        if (candidates.size() == 1) break;
        if (candidates.empty()) throw InternalError("adjoined root not found among real roots");
        eps = eps * eps;
    }
    FieldPtr F = NumberField::create(Hp, candidates[0]);
    AlgebraicNumber gamma = F->generator() * AlgebraicNumber(Rational(Integer(1), D));
    return {F, gamma, Rational(D)};
}

/// Index of the factor vanishing at the number described by the oracle.
size_t select_factor(const std::vector<QPoly>& factors, const RealOracle& oracle) {
    std::vector<std::vector<QPoly>> seqs;
    for (const auto& f : factors) seqs.push_back(sturm_sequence(f));
    Rational eps = starting_eps();
    for (;;) {
        Interval iv = oracle(eps);
        std::vector<size_t> hits;
        bool unique = true;
        for (size_t i = 0; i < factors.size(); ++i) {
            int c = count_roots(seqs[i], iv.lo, iv.hi) + (sign_at(factors[i], iv.lo) == 0 ? 1 : 0);
            if (c > 0) hits.push_back(i);
            if (c > 1) unique = false;
        }
        if (hits.size() == 1 && unique) return hits[0];
        if (hits.empty()) throw InternalError("no factor vanishes at the adjoined root");
        eps = eps * eps;
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

bool Embedding::is_identity() const { return root_index == field->designated_root(); }

NumberField::NumberField(QPoly minpoly, std::vector<Interval> roots, int designated)
    : minpoly_(std::move(minpoly)), roots_(std::move(roots)), designated_(designated), cache_(roots_) {
    int d = degree();
    powers_.reserve(static_cast<size_t>(2 * d - 1));
    Coords cur(static_cast<size_t>(d), Rational(0));
    cur[0] = 1;
    for (int k = 0; k < 2 * d - 1; ++k) {
        powers_.push_back(cur);
        if (d == 1) {
            cur[0] = -minpoly_[0] * cur[0];
            continue;
        }
        Rational top = cur.back();
        for (int i = d - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
        cur[0] = 0;
        if (!top.is_zero())
            for (int i = 0; i < d; ++i) cur[static_cast<size_t>(i)] -= top * minpoly_[i];
    }
}

FieldPtr NumberField::rationals() {
    static const FieldPtr q(new NumberField(QPoly{Rational(0), Rational(1)}, {Interval(Rational(0))}, 0));
    return q;
}

FieldPtr NumberField::create(const QPoly& minpoly, int root_index) {
    if (minpoly.degree() < 1 || !(minpoly.lead() == Rational(1)))
        throw ArithmeticError("minimal polynomial must be monic of positive degree");
    for (const auto& c : minpoly.coeffs())
        if (!c.is_integer()) throw ArithmeticError("minimal polynomial must be integral");
    if (minpoly.degree() == 1 && minpoly[0].is_zero()) return rationals();
    auto roots = isolate_real_roots(minpoly);
    if (root_index < 0 || root_index >= static_cast<int>(roots.size()))
        throw ArithmeticError("designated root index out of range");
    return FieldPtr(new NumberField(minpoly, std::move(roots), root_index));
}

Interval NumberField::root_enclosure(const Rational& eps, int index) const {
    if (index < 0) index = designated_;
    std::lock_guard<std::mutex> lock(cache_mutex_);
    Interval& iv = cache_[static_cast<size_t>(index)];
    if (iv.width() > eps) iv = refine_root(minpoly_, iv, eps);
    return iv;
}

std::vector<Embedding> NumberField::embeddings() const {
    std::vector<Embedding> out;
    for (int i = 0; i < real_root_count(); ++i) out.push_back({shared_from_this(), i});
    return out;
}

AlgebraicNumber NumberField::generator() const {
    return AlgebraicNumber(shared_from_this(), generator_coords(*this));
}

AlgebraicNumber NumberField::from_coords(std::vector<Rational> coords) const {
    return AlgebraicNumber(shared_from_this(), std::move(coords));
}

bool NumberField::identical(const NumberField& other) const {
    return this == &other || (designated_ == other.designated_ && minpoly_ == other.minpoly_);
}

std::string NumberField::str() const {
    if (is_rationals()) return "Q";
    if (degree() == 2) return "Q(sqrt(" + quadratic_discriminant_class(shared_from_this()).get_str() + "))";
    std::ostringstream os;
    os << "Q(a), " << minpoly_.str("a") << " = 0, a ~ " << generator().to_double();
    return os.str();
}

// ---------------------------------------------------------------------------
// AlgebraicNumber
// ---------------------------------------------------------------------------

AlgebraicNumber::AlgebraicNumber() : field_(NumberField::rationals()), c_{Rational(0)} {}
AlgebraicNumber::AlgebraicNumber(int v) : field_(NumberField::rationals()), c_{Rational(v)} {}
AlgebraicNumber::AlgebraicNumber(long v) : field_(NumberField::rationals()), c_{Rational(v)} {}
AlgebraicNumber::AlgebraicNumber(const Integer& v) : field_(NumberField::rationals()), c_{Rational(v)} {}
AlgebraicNumber::AlgebraicNumber(const Rational& v) : field_(NumberField::rationals()), c_{v} {}

AlgebraicNumber::AlgebraicNumber(FieldPtr field, std::vector<Rational> coords)
    : field_(std::move(field)), c_(std::move(coords)) {
    if (static_cast<int>(c_.size()) != field_->degree())
        throw InternalError("coordinate vector length differs from the field degree");
}

bool AlgebraicNumber::is_zero() const { return coords_zero(c_); }

bool AlgebraicNumber::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return false;
    return true;
}

Rational AlgebraicNumber::to_rational() const {
    if (!is_rational()) throw ArithmeticError("element is not rational: " + str());
    return c_[0];
}

Interval AlgebraicNumber::enclosure(const Rational& eps, int root_index) const {
    if (is_rational()) return Interval(c_[0]);
    QPoly p = coords_poly(c_);
    Rational w = eps;
    for (;;) {
        Interval iv = evaluate(p, field_->root_enclosure(w, root_index));
        if (iv.width() <= eps) return iv;
        w = w * w;
        if (w > eps / Rational(1 << 20)) w = eps / Rational(1 << 20);
    }
}

int AlgebraicNumber::sign(int root_index) const {
    if (is_rational()) return c_[0].sign();
    QPoly p = coords_poly(c_);
    Rational w = starting_eps();
    for (;;) {
        int s = evaluate(p, field_->root_enclosure(w, root_index)).certain_sign();
        if (s) return s;
        w = w * w;
    }
}

double AlgebraicNumber::to_double(int root_index) const {
    return enclosure(Rational(Integer(1), ipow(Integer(2), 60)), root_index).mid().to_double();
}

AlgebraicNumber AlgebraicNumber::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero");
    if (field_->degree() == 1) return AlgebraicNumber(field_, {Rational(1) / c_[0]});
    auto [g, s, t] = ext_gcd(coords_poly(c_), field_->minpoly());
    if (g.degree() != 0) throw InternalError("minimal polynomial is reducible");
    return AlgebraicNumber(field_, poly_coords(s % field_->minpoly(), field_->degree()));
}

namespace {

void unify(AlgebraicNumber& a, AlgebraicNumber& b) {
    if (a.field().get() == b.field().get()) return;
    FieldPtr f = common_field(a.field(), b.field());
    if (a.field().get() != f.get()) a = *coerce(a, f);
    if (b.field().get() != f.get()) b = *coerce(b, f);
}

}  // namespace

AlgebraicNumber& AlgebraicNumber::operator+=(const AlgebraicNumber& o) {
    AlgebraicNumber b = o;
    unify(*this, b);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator-=(const AlgebraicNumber& o) {
    AlgebraicNumber b = o;
    unify(*this, b);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= b.c_[i];
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator*=(const AlgebraicNumber& o) {
    if (o.is_rational()) {
        Rational s = o.c_[0];
        for (auto& v : c_) v *= s;
        return *this;
    }
    if (is_rational()) {
        Rational s = c_[0];
        *this = o;
        for (auto& v : c_) v *= s;
        return *this;
    }
    AlgebraicNumber b = o;
    unify(*this, b);
    c_ = multiply(*field_, c_, b.c_);
    return *this;
}

AlgebraicNumber& AlgebraicNumber::operator/=(const AlgebraicNumber& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero");
    if (o.is_rational()) {
        Rational s = Rational(1) / o.c_[0];
        for (auto& v : c_) v *= s;
        return *this;
    }
    AlgebraicNumber b = o;
    unify(*this, b);
    return *this *= b.inverse();
}

AlgebraicNumber operator-(const AlgebraicNumber& a) {
    AlgebraicNumber r = a;
    for (auto& v : r.c_) v = -v;
    return r;
}

bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    if (a.is_rational() && b.is_rational()) return a.c_[0] == b.c_[0];
    if (a.field_->identical(*b.field_)) return a.c_ == b.c_;
    return (a - b).is_zero();
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return c_[0].str();
    if (field_->degree() == 2) {
        auto q = quadratic_coords(*this);
        std::ostringstream os;
        std::string root = "sqrt(" + q.d.get_str() + ")";
        if (!q.u.is_zero()) os << q.u << (q.v.sign() < 0 ? " - " : " + ");
        else if (q.v.sign() < 0) os << "-";
        Rational v = abs(q.v);
        if (v != Rational(1)) os << v << "*";
        os << root;
        return os.str();
    }
    return coords_poly(c_).str("a");
}

std::ostream& operator<<(std::ostream& os, const AlgebraicNumber& a) { return os << a.str(); }

AlgebraicNumber abs(const AlgebraicNumber& a) { return a.sign() < 0 ? -a : a; }

AlgebraicNumber pow(const AlgebraicNumber& a, int e) {
    if (e < 0) return pow(a.inverse(), -e);
    AlgebraicNumber r(1), b = a;
    while (e) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Coercion and fields
// ---------------------------------------------------------------------------

FieldPtr field_of_rationals() { return NumberField::rationals(); }

std::optional<AlgebraicNumber> coerce(const AlgebraicNumber& a, const FieldPtr& target) {
    if (a.field()->identical(*target)) return AlgebraicNumber(target, a.coords());
    if (a.is_rational()) {
        Coords c(static_cast<size_t>(target->degree()), Rational(0));
        c[0] = a.coords()[0];
        return AlgebraicNumber(target, std::move(c));
    }
    auto img = find_image(a.field(), target);
    if (!img) return std::nullopt;
    return AlgebraicNumber(target, apply_image(a.coords(), *img, *target));
}

FieldPtr common_field(const FieldPtr& a, const FieldPtr& b) {
    if (a->identical(*b) || b->is_rationals()) return a;
    if (a->is_rationals()) return b;
    if (find_image(a, b)) return b;
    if (find_image(b, a)) return a;
    return compositum(a, b);
}

FieldPtr common_field(const std::vector<AlgebraicNumber>& elements) {
    FieldPtr f = NumberField::rationals();
    for (const auto& e : elements)
        if (!e.is_rational()) f = common_field(f, e.field());
    return f;
}

Adjoined adjoin_root(const FieldPtr& f_in, const APoly& g_in, const RealOracle& root) {
    FieldPtr F = f_in;
    for (const auto& c : g_in.coeffs()) F = common_field(F, c.field());
    if (g_in.degree() < 1) throw ArithmeticError("cannot adjoin a root of a constant");
    std::vector<Coords> g;
    AlgebraicNumber lead_inv = (*coerce(g_in.lead(), F)).inverse();
    for (const auto& c : g_in.coeffs()) g.push_back((*coerce(c * lead_inv, F)).coords());
    const int d = F->degree(), e = g_in.degree();
    if (d * e > 2 * kMaxFieldDegree)
        throw ArithmeticError("adjunction of degree " + std::to_string(d * e) + " exceeds the field degree cap");

    if (d == 1) {
        std::vector<Rational> rc;
        for (const auto& c : g) rc.push_back(c[0]);
        auto factors = irreducible_factors(QPoly(rc));
        auto made = make_field(factors[select_factor(factors, root)], root);
        if (made.field->is_rationals()) return {F, *coerce(made.gamma, F)};
        return {made.field, made.gamma};
    }

    auto mul_y_plus_ktheta = [&](const std::vector<Coords>& w, long k) {
        std::vector<Coords> out(static_cast<size_t>(e), Coords(static_cast<size_t>(d), Rational(0)));
        const Coords& top = w[static_cast<size_t>(e - 1)];
        for (int j = e - 1; j > 0; --j) out[static_cast<size_t>(j)] = w[static_cast<size_t>(j - 1)];
        if (!coords_zero(top))
            for (int j = 0; j < e; ++j) {
                Coords t = multiply(*F, top, g[static_cast<size_t>(j)]);
                for (int i = 0; i < d; ++i) out[static_cast<size_t>(j)][static_cast<size_t>(i)] -= t[static_cast<size_t>(i)];
            }
        if (k) {
            Coords th = generator_coords(*F);
            for (int j = 0; j < e; ++j) {
                Coords t = multiply(*F, w[static_cast<size_t>(j)], th);
                for (int i = 0; i < d; ++i)
                    out[static_cast<size_t>(j)][static_cast<size_t>(i)] += Rational(k) * t[static_cast<size_t>(i)];
            }
        }
        return out;
    };
    auto flatten = [&](const std::vector<Coords>& w) {
        Coords v;
        v.reserve(static_cast<size_t>(d * e));
        for (const auto& b : w) v.insert(v.end(), b.begin(), b.end());
        return v;
    };

    for (long k = 0;; ++k) {
        const int n = d * e;
        Span span;
        std::vector<Coords> w(static_cast<size_t>(e), Coords(static_cast<size_t>(d), Rational(0)));
        w[0][0] = 1;
        bool independent = true;
        for (int m = 0; m < n; ++m) {
            if (!span.add(flatten(w))) {
                independent = false;
                break;
            }
            w = mul_y_plus_ktheta(w, k);
        }
        if (!independent) continue;
        Coords c = *span.express(flatten(w));
        std::vector<Rational> N(c.size() + 1);
        for (size_t i = 0; i < c.size(); ++i) N[i] = -c[i];
        N.back() = 1;
        std::vector<Coords> th(static_cast<size_t>(e), Coords(static_cast<size_t>(d), Rational(0)));
        th[0] = generator_coords(*F);
        Coords a = *span.express(flatten(th));

        RealOracle gamma_oracle = [&, k](const Rational& eps) {
            Rational half = eps / Rational(2);
            Interval y = root(half);
            if (k == 0) return y;
            Interval t = F->root_enclosure(half / Rational(k));
            return y + Rational(k) * t;
        };
        auto factors = irreducible_factors(QPoly(N));
        const QPoly& h = factors[select_factor(factors, gamma_oracle)];
        if (h.degree() > kMaxFieldDegree)
            throw ArithmeticError("field degree " + std::to_string(h.degree()) + " exceeds the cap of " +
                                  std::to_string(kMaxFieldDegree));
        auto made = make_field(h, gamma_oracle);
        const FieldPtr& E = made.field;
        AlgebraicNumber theta_e(E, Coords(static_cast<size_t>(E->degree()), Rational(0)));
        for (size_t i = a.size(); i-- > 0;) theta_e = theta_e * made.gamma + AlgebraicNumber(a[i]);
        AlgebraicNumber y_e = made.gamma - AlgebraicNumber(Rational(k)) * theta_e;

        auto eval_g = [&](const FieldPtr& K, const Coords& theta_img, const AlgebraicNumber& y) {
            AlgebraicNumber acc(K, Coords(static_cast<size_t>(K->degree()), Rational(0)));
            for (int j = e; j >= 0; --j) {
                Coords cj = j == e ? Coords{} : g[static_cast<size_t>(j)];
                AlgebraicNumber coef = j == e ? AlgebraicNumber(1)
                                              : AlgebraicNumber(K, apply_image(cj, theta_img, *K));
                acc = acc * y + coef;
            }
            return acc;
        };

        if (E->degree() == d) {
            // Root already in F: pull y back along theta -> theta_e.
            Span back;
            AlgebraicNumber p(1);
            for (int i = 0; i < d; ++i) {
                back.add((*coerce(p, E)).coords());
                p *= theta_e;
            }
            auto yc = back.express((*coerce(y_e, E)).coords());
            if (!yc) throw InternalError("isomorphic adjunction failed to pull back");
            AlgebraicNumber y(F, *yc);
            if (!eval_g(F, generator_coords(*F), y).is_zero())
                throw InternalError("adjoined root does not satisfy its polynomial");
            return {F, y};
        }
        if (!coerce(theta_e, E)) throw InternalError("lost generator");
        Coords theta_img = (*coerce(theta_e, E)).coords();
        if (!AlgebraicNumber(E, apply_image(F->minpoly().coeffs(), theta_img, *E)).is_zero() ||
            !eval_g(E, theta_img, *coerce(y_e, E)).is_zero())
            throw InternalError("primitive element verification failed");
        register_inclusion(F, E, theta_img);
        return {E, *coerce(y_e, E)};
    }
}

Adjoined adjoin_root(const QPoly& g, const Interval& isolating) {
    QPoly f = squarefree_part(g);
    auto seq = sturm_sequence(f);
    int c = count_roots(seq, isolating.lo, isolating.hi) + (sign_at(f, isolating.lo) == 0 ? 1 : 0);
    if (c != 1)
        throw ArithmeticError("interval [" + isolating.lo.str() + ", " + isolating.hi.str() + "] contains " +
                              std::to_string(c) + " roots, expected exactly one");
    Interval start = isolating;
    if (sign_at(f, start.lo) == 0) start = Interval(start.lo);
    else if (sign_at(f, start.hi) == 0) start = Interval(start.hi);
    auto oracle = [f, start](const Rational& eps) { return refine_root(f, start, eps); };
    std::vector<AlgebraicNumber> coeffs;
    for (const auto& v : f.coeffs()) coeffs.emplace_back(v);
    return adjoin_root(NumberField::rationals(), APoly(coeffs), oracle);
}

namespace {

RealOracle sqrt_oracle(const AlgebraicNumber& x, int sign) {
    return [x, sign](const Rational& eps) {
        Rational w = eps * eps;
        for (;;) {
            Interval xi = x.enclosure(w);
            if (xi.lo.sign() > 0) {
                Interval s = sqrt_enclosure(xi, eps / Rational(4));
                if (s.width() <= eps) return sign > 0 ? s : -s;
            }
            w = w * w;
        }
    };
}

}  // namespace

Adjoined adjoin_sqrt(const FieldPtr& f, const AlgebraicNumber& x_in, int sign) {
    FieldPtr F = common_field(f, x_in.field());
    AlgebraicNumber x = *coerce(x_in, F);
    if (x.is_zero()) return {F, AlgebraicNumber(F, Coords(static_cast<size_t>(F->degree()), Rational(0)))};
    if (x.sign() < 0) throw ArithmeticError("square root of a negative number: " + x.str());
    if (x.is_rational()) {
        Rational r;
        if (is_rational_square(x.to_rational(), &r))
            return {F, *coerce(AlgebraicNumber(sign > 0 ? r : -r), F)};
    }
    APoly g{-x, AlgebraicNumber(0), AlgebraicNumber(1)};
    return adjoin_root(F, g, sqrt_oracle(x, sign));
}

AlgebraicNumber sqrt(const AlgebraicNumber& x) { return adjoin_sqrt(x.field(), x, 1).root; }

FieldPtr compositum(const FieldPtr& a, const FieldPtr& b) {
    if (a->identical(*b) || b->is_rationals()) return a;
    if (a->is_rationals()) return b;
    auto key = std::make_pair(a.get(), b.get());
    {
        auto& r = registry();
        std::lock_guard<std::mutex> lock(r.mutex);
        auto it = r.composita.find(key);
        if (it != r.composita.end()) return it->second;
    }
    std::vector<AlgebraicNumber> mp;
    for (const auto& c : b->minpoly().coeffs()) mp.emplace_back(c);
    auto res = adjoin_root(a, APoly(mp), [b](const Rational& eps) { return b->root_enclosure(eps); });
    register_inclusion(b, res.field, (*coerce(res.root, res.field)).coords());
    {
        auto& r = registry();
        std::lock_guard<std::mutex> lock(r.mutex);
        r.composita[key] = res.field;
        r.composita[std::make_pair(b.get(), a.get())] = res.field;
        r.incoming[a.get()].first = a;
        r.incoming[b.get()].first = b;
    }
    return res.field;
}

AlgebraicNumber to_field(const AlgebraicNumber& a, const FieldPtr& target) {
    if (auto c = coerce(a, target)) return *c;
    if (auto e = express_in(a, target)) return *e;
    throw ArithmeticError(a.str() + " does not lie in " + target->str());
}

std::optional<AlgebraicNumber> express_in(const AlgebraicNumber& a, const FieldPtr& target) {
    if (auto c = coerce(a, target)) return c;
    FieldPtr C = common_field(a.field(), target);
    AlgebraicNumber ac = *coerce(a, C);
    auto img = find_image(target, C);
    if (!img) throw InternalError("compositum lost an inclusion");
    Span span;
    Coords p(static_cast<size_t>(C->degree()), Rational(0));
    p[0] = 1;
    for (int i = 0; i < target->degree(); ++i) {
        span.add(p);
        p = multiply(*C, p, *img);
    }
    auto sol = span.express(ac.coords());
    if (!sol) return std::nullopt;
    return AlgebraicNumber(target, *sol);
}

bool is_subfield(const FieldPtr& a, const FieldPtr& b) {
    if (a->is_rationals()) return true;
    if (b->degree() % a->degree()) return false;
    if (find_image(a, b)) return true;
    return compositum(b, a)->degree() == b->degree();
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a->degree() == b->degree() && is_subfield(a, b);
}

// ---------------------------------------------------------------------------
// Element invariants
// ---------------------------------------------------------------------------

QPoly minimal_polynomial(const AlgebraicNumber& a) {
    if (a.is_rational()) return QPoly{-a.to_rational(), Rational(1)};
    const NumberField& F = *a.field();
    Span span;
    Coords p(static_cast<size_t>(F.degree()), Rational(0));
    p[0] = 1;
    for (;;) {
        if (auto c = span.express(p)) {
            std::vector<Rational> mp(c->size() + 1);
            for (size_t i = 0; i < c->size(); ++i) mp[i] = -(*c)[i];
            mp.back() = 1;
            return QPoly(mp);
        }
        span.add(p);
        p = multiply(F, p, a.coords());
    }
}

bool is_algebraic_integer(const AlgebraicNumber& a) {
    QPoly mp = minimal_polynomial(a);
    for (const auto& c : mp.coeffs())
        if (!c.is_integer()) return false;
    return true;
}

Rational norm(const AlgebraicNumber& a) {
    QPoly mp = minimal_polynomial(a);
    int m = mp.degree();
    Rational n0 = m % 2 ? -mp[0] : mp[0];
    return pow(n0, static_cast<long>(a.field()->degree() / m));
}

Rational trace(const AlgebraicNumber& a) {
    QPoly mp = minimal_polynomial(a);
    return -mp[mp.degree() - 1] * Rational(a.field()->degree() / mp.degree());
}

std::optional<AlgebraicNumber> is_square(const AlgebraicNumber& a) {
    if (a.is_zero()) return a;
    const FieldPtr& F = a.field();
    for (int i = 0; i < F->real_root_count(); ++i)
        if (a.sign(i) < 0) return std::nullopt;
    if (a.is_rational()) {
        Rational r;
        if (is_rational_square(a.to_rational(), &r)) return *coerce(AlgebraicNumber(r), F);
        if (F->is_rationals()) return std::nullopt;
    }
    if (!is_rational_square(norm(a))) return std::nullopt;
    auto res = adjoin_sqrt(F, a, 1);
    if (res.field->degree() != F->degree()) return std::nullopt;
    return *coerce(res.root, F);
}

Subfield subfield_generated(const std::vector<AlgebraicNumber>& elements) {
    FieldPtr F = common_field(elements);
    std::vector<AlgebraicNumber> xs;
    for (const auto& e : elements) xs.push_back(*coerce(e, F));
    const size_t D = static_cast<size_t>(F->degree());
    auto powers_span = [&](const AlgebraicNumber& g) {
        Span s;
        Coords p(D, Rational(0));
        p[0] = 1;
        while (s.add(p)) p = multiply(*F, p, g.coords());
        return s;
    };
    AlgebraicNumber gamma(F, Coords(D, Rational(0)));
    Span span = powers_span(gamma);
    for (const auto& x : xs) {
        if (span.express(x.coords())) continue;
        for (long k = 1;; ++k) {
            AlgebraicNumber cand = gamma + AlgebraicNumber(Rational(k)) * x;
            Span s = powers_span(cand);
            if (s.express(gamma.coords()) && s.express(x.coords())) {
                gamma = cand;
                span = std::move(s);
                break;
            }
        }
    }
    if (span.size() == D) {
        FieldPtr K = F;
        return {K, K->generator(), xs};
    }
    QPoly h = minimal_polynomial(gamma);
    auto made = make_field(h, [gamma](const Rational& eps) { return gamma.enclosure(eps); });
    const FieldPtr& K = made.field;
    std::vector<AlgebraicNumber> out;
    for (const auto& x : xs) {
        Coords c = *span.express(x.coords());
        AlgebraicNumber acc(K, Coords(static_cast<size_t>(K->degree()), Rational(0)));
        for (size_t i = c.size(); i-- > 0;) acc = acc * made.gamma + AlgebraicNumber(c[i]);
        out.push_back(*coerce(acc, K));
    }
    AlgebraicNumber theta_in_f = AlgebraicNumber(made.scale) * gamma;
    if (!K->is_rationals()) register_inclusion(K, F, theta_in_f.coords());
    return {K, K->is_rationals() ? AlgebraicNumber(0) : theta_in_f, out};
}

bool is_totally_real(const FieldPtr& f) { return f->is_totally_real(); }
std::vector<Embedding> embeddings(const FieldPtr& f) { return f->embeddings(); }

// ---------------------------------------------------------------------------
// Cyclotomic values
// ---------------------------------------------------------------------------

namespace {

QPoly cyclotomic(long n) {
    static std::mutex mutex;
    static std::map<long, QPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    QPoly p = QPoly::monomial(Rational(1), static_cast<int>(n)) - QPoly{Rational(1)};
    for (long d = 1; d < n; ++d)
        if (n % d == 0) p = exact_div(p, cyclotomic(d));
    std::lock_guard<std::mutex> lock(mutex);
    cache[n] = p;
    return p;
}

/// Minimal polynomial of 2cos(pi/m), from Phi_{2m} via z + 1/z = w.
QPoly two_cos_minpoly(long m) {
    QPoly phi = cyclotomic(2 * m);
    int r = phi.degree() / 2;
    QPoly w = QPoly::x();
    std::vector<QPoly> C{QPoly{Rational(2)}, w};
    for (int k = 2; k <= r; ++k) C.push_back(w * C[static_cast<size_t>(k - 1)] - C[static_cast<size_t>(k - 2)]);
    QPoly P{phi[r]};
    for (int k = 1; k <= r; ++k) P += phi[r + k] * C[static_cast<size_t>(k)];
    return P;
}

}  // namespace

AlgebraicNumber cos_pi_over(long m) {
    if (m < 2) throw ArithmeticError("cos(pi/m) requires m >= 2");
    static std::mutex mutex;
    static std::map<long, AlgebraicNumber> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    QPoly P = two_cos_minpoly(m);
    AlgebraicNumber value;
    if (P.degree() == 1) {
        value = AlgebraicNumber(-P[0] / Rational(2));
    } else {
        FieldPtr F = NumberField::create(P, static_cast<int>(isolate_real_roots(P).size()) - 1);
        value = F->generator() * AlgebraicNumber(Rational(1, 2));
    }
    std::lock_guard<std::mutex> lock(mutex);
    cache.emplace(m, value);
    return value;
}

// ---------------------------------------------------------------------------
// Quadratic coordinates
// ---------------------------------------------------------------------------

namespace {

struct QuadData {
    Integer d;
    Rational b;   // theta = (-b + s*sqrt(d)) / 2
    Rational s;   // signed
};

QuadData quad_data(const FieldPtr& f) {
    const QPoly& mp = f->minpoly();
    Rational b = mp[1], c = mp[0];
    Integer disc = (b * b - Rational(4) * c).num();
    Integer d = squarefree_part(disc);
    Integer s2 = disc / d, s;
    is_perfect_square(s2, &s);
    AlgebraicNumber t = f->generator() + AlgebraicNumber(b / Rational(2));
    Rational ss(s);
    if (t.sign() < 0) ss = -ss;
    return {d, b, ss};
}

}  // namespace

Integer quadratic_discriminant_class(const FieldPtr& f) {
    if (f->is_rationals()) return 1;
    if (f->degree() != 2) throw ArithmeticError("not a quadratic field");
    return quad_data(f).d;
}

QuadraticCoords quadratic_coords(const AlgebraicNumber& a) {
    const FieldPtr& f = a.field();
    if (a.is_rational()) {
        Integer d = f->degree() == 2 ? quad_data(f).d : Integer(1);
        return {d, a.coords()[0], Rational(0)};
    }
    if (f->degree() != 2) throw ArithmeticError("element does not lie in a field of degree <= 2");
    auto q = quad_data(f);
    const Rational& x = a.coords()[0];
    const Rational& y = a.coords()[1];
    return {q.d, x - y * q.b / Rational(2), y * q.s / Rational(2)};
}

}  // namespace vinbergkit
