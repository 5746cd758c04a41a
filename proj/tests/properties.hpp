#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"

namespace testkit {

struct SuiteResult {
    SuiteResult(std::string n) : name(std::move(n)) {}

    std::string name;
    long cases = 0;
    long failures = 0;
    std::string first_failure;

    void check(bool ok, const std::string& what) {
        ++cases;
        if (!ok) {
            if (!failures) first_failure = what;
            ++failures;
        }
    }
    bool passed() const { return cases > 0 && failures == 0; }
    std::string summary() const {
        std::ostringstream os;
        os << name << ": " << cases << " cases, " << failures << " failures";
        if (failures) os << " (first: " << first_failure << ")";
        return os.str();
    }
};

inline long random_nonzero(long range) {
    long x = 0;
    while (x == 0) x = uniform(-range, range);
    return x;
}

inline Rational random_nonzero_rational() {
    return Rational(Integer(random_nonzero(60)), Integer(uniform(1, 12)));
}

inline std::vector<Integer> places_of(const std::vector<Rational>& xs) {
    std::vector<Integer> ps{Integer(0), Integer(2)};
    for (const auto& x : xs)
        for (Integer m : {Integer(abs(x).num()), x.den()}) {
            while (m % 2 == 0) m /= 2;
            for (long p = 3; m > 1; p += 2) {
                if (p * p > m) {
                    ps.push_back(m);
                    break;
                }
                if (m % p == 0) {
                    ps.push_back(Integer(p));
                    while (m % p == 0) m /= p;
                }
            }
        }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    return ps;
}

/// Bimultiplicativity, symmetry, (a,-a) = 1 and the product formula over Q.
inline std::vector<SuiteResult> hilbert_laws_Q(int per_law) {
    SuiteResult bimult{"Hilbert bimultiplicativity over Q"}, sym{"Hilbert symmetry over Q"},
        neg{"Hilbert (a,-a) = 1 over Q"}, prod{"Hilbert product formula over Q"};
    for (int k = 0; k < per_law; ++k) {
        Rational a = random_nonzero_rational(), a2 = random_nonzero_rational(), b = random_nonzero_rational();
        auto ps = places_of({a, a2, b});
        int product = 1;
        bool ok_b = true, ok_s = true, ok_n = true;
        for (const auto& p : ps) {
            int ab = hilbert_symbol(a, b, p);
            ok_b &= hilbert_symbol(a * a2, b, p) == ab * hilbert_symbol(a2, b, p);
            ok_s &= hilbert_symbol(b, a, p) == ab;
            ok_n &= hilbert_symbol(a, -a, p) == 1;
            product *= ab;
        }
        std::string tag = "a=" + a.str() + " a'=" + a2.str() + " b=" + b.str();
        bimult.check(ok_b, tag);
        sym.check(ok_s, tag);
        neg.check(ok_n, tag);
        prod.check(product == 1, tag);
    }
    return {bimult, sym, neg, prod};
}

/// Same laws over a real quadratic field at every candidate place.
inline std::vector<SuiteResult> hilbert_laws_quadratic(long d, int per_law) {
    QuadraticField f{Integer(d)};
    std::string fname = f.name();
    SuiteResult bimult{"Hilbert bimultiplicativity over " + fname}, sym{"Hilbert symmetry over " + fname},
        neg{"Hilbert (a,-a) = 1 over " + fname};
    auto rnd = [&] {
        QuadElem x = f.element(0);
        while (x.norm().is_zero()) x = f.element(Rational(uniform(-15, 15)), Rational(uniform(-6, 6)));
        return x;
    };
    for (int k = 0; k < per_law; ++k) {
        QuadElem a = rnd(), a2 = rnd(), b = rnd();
        auto places = candidate_places(f, {a, a2, b, a * a2, -a});
        bool ok_b = true, ok_s = true, ok_n = true;
        for (const auto& p : places) {
            int ab = hilbert_symbol(a, b, p, f);
            ok_b &= hilbert_symbol(a * a2, b, p, f) == ab * hilbert_symbol(a2, b, p, f);
            ok_s &= hilbert_symbol(b, a, p, f) == ab;
            ok_n &= hilbert_symbol(a, -a, p, f) == 1;
        }
        std::string tag = "a=" + a.str() + " a'=" + a2.str() + " b=" + b.str();
        bimult.check(ok_b, tag);
        sym.check(ok_s, tag);
        neg.check(ok_n, tag);
    }
    return {bimult, sym, neg};
}

/// psd_exact against the Sturm oracle on random symmetric matrices.
inline SuiteResult psd_vs_oracle(int count) {
    SuiteResult r{"psd_exact vs Sturm oracle"};
    for (int k = 0; k < count; ++k) {
        const int n = static_cast<int>(uniform(1, 8));
        QMatrix M;
        switch (k % 4) {
            case 0: M = random_symmetric(n); break;
            case 1: {
                const int rank = static_cast<int>(uniform(0, n));
                QMatrix B(rank, n);
                for (int i = 0; i < rank; ++i)
                    for (int j = 0; j < n; ++j) B(i, j) = random_rational(4, 2);
                M = rank ? multiply<Rational>(B.transpose(), B) : QMatrix(QMatrix::Zero(n, n));
                break;
            }
            case 2: {
                QMatrix B(n, n);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) B(i, j) = random_rational(3, 2);
                M = multiply<Rational>(B.transpose(), B);
                M(0, 0) -= Rational(1, 50);
                break;
            }
            default: {
                M = random_symmetric(n, 2);
                for (int i = 0; i < n; ++i) M(i, i) += Rational(2 * n);
            }
        }
        std::ostringstream os;
        os << "case " << k << " n=" << n;
        r.check(psd_exact(M) == psd_oracle(to_rows(M)), os.str());
    }
    return r;
}

inline AMatrix random_invertible(int n, const FieldPtr& K) {
    while (true) {
        AMatrix P(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                Rational a = uniform(0, 2) ? random_rational(3, 2) : Rational(0);
                P(i, j) = K->is_rationals() || uniform(0, 1) ? AlgebraicNumber(a)
                                                             : AlgebraicNumber(a) * K->generator();
            }
        for (int i = 0; i < n; ++i) P(i, i) += AlgebraicNumber(1);
        if (inverse(P)) return P;
    }
}

/// S^T M S = D on corpus forms and random symmetric nonsingular matrices.
inline SuiteResult diagonalization_transcripts(const std::vector<VinbergForm>& forms, int random_count) {
    SuiteResult r{"diagonalization transcripts"};
    for (const auto& q : forms) r.check(verify_diagonalization(q.matrix, q.diagonalization), "corpus form");
    int made = 0;
    while (made < random_count) {
        QMatrix M = random_symmetric(static_cast<int>(uniform(2, 7)));
        if (det_gauss(to_rows(M)).is_zero()) continue;
        ++made;
        auto D = diagonalize(M);
        r.check(verify_diagonalization(M, D), "random matrix " + std::to_string(made));
    }
    return r;
}

/// Hasse invariant of P^T M P for random invertible P.
inline SuiteResult hasse_independence(const std::vector<VinbergForm>& forms, int per_form) {
    SuiteResult r{"Hasse invariant independent of diagonalization"};
    for (const auto& q : forms) {
        if (q.field->degree() > 2) continue;
        QuadraticField f = QuadraticField::of(q.field);
        BrauerClass ref = hasse_invariant(f, to_quadratic(f, q.diagonal()));
        const int n = static_cast<int>(q.matrix.rows());
        for (int k = 0; k < per_form; ++k) {
            AMatrix P = random_invertible(n, q.field);
            AMatrix M = multiply<AlgebraicNumber>(multiply<AlgebraicNumber>(P.transpose(), q.matrix), P);
            auto D = diagonalize(M);
            std::vector<AlgebraicNumber> diag;
            for (const auto& x : D.diagonal) diag.push_back(to_field(x, q.field));
            BrauerClass s = hasse_invariant(f, to_quadratic(f, diag));
            r.check(s == ref && verify_diagonalization(M, D), "form over " + f.name() + " trial " + std::to_string(k));
        }
    }
    return r;
}

/// a_{N-1} = (-1)^{N-1} N, a_r = 0 for r < N-(n+1), signature (n,1,N-n-1).
inline SuiteResult gram_structure(const std::vector<Loaded>& graphs) {
    SuiteResult r{"Gram characteristic polynomial structure"};
    for (const auto& l : graphs) {
        const int N = l.gm.size(), n = l.gm.dim;
        auto chi = char_poly_gram(l.gm).poly;
        bool ok = chi.degree() == N && chi[N] == AlgebraicNumber(1);
        // det(G - tI) = (-1)^N chi(t)
        AlgebraicNumber a = N % 2 ? -chi[N - 1] : chi[N - 1];
        ok &= a == AlgebraicNumber((N - 1) % 2 ? -N : N);
        for (int k = 0; k < N - (n + 1); ++k) ok &= chi[k].is_zero();
        ok &= !chi[N - (n + 1)].is_zero();
        Signature s = gram_signature(l.gm);
        ok &= s.positive == n && s.negative == 1 && s.zero == N - n - 1;
        r.check(ok, l.graph.name);
    }
    return r;
}

/// Palindromicity by parity, divisibility of chi_{C_T}, an eigenvalue > 1.
inline SuiteResult coxeter_structure(const std::vector<Loaded>& graphs) {
    SuiteResult r{"Coxeter characteristic polynomial structure"};
    for (const auto& l : graphs) {
        const int N = l.gm.size();
        std::vector<int> order(static_cast<size_t>(N));
        for (int i = 0; i < N; ++i) order[static_cast<size_t>(i)] = i;
        bool ok = false;
        try {
            auto c = coxeter_char_poly(l.gm, order);
            APoly lin{AlgebraicNumber(-1), AlgebraicNumber(1)};
            APoly back = c.chi_C;
            for (int k = 0; k < c.radical; ++k) back = back * lin;
            bool divides = back.degree() == c.chi_T.degree();
            for (int k = 0; divides && k <= back.degree(); ++k)
                divides = to_field(back[k], l.gm.field) == c.chi_T[k];
            ok = divides && c.chi_C.degree() == l.gm.dim + 1 &&
                 is_palindromic(c.chi_C, c.radical % 2 ? -1 : 1) && c.roots_above_one >= 1 && c.lambda &&
                 c.lambda->lo > Rational(1);
        } catch (const std::exception&) {
            ok = false;
        }
        r.check(ok, l.graph.name);
    }
    return r;
}

struct RelabelSnapshot {
    FieldPtr field;
    VinbergRing ring;
    Arithmeticity cls;
    std::vector<std::string> hasse;
    VinbergForm form;
};

inline RelabelSnapshot snapshot(const CoxeterGraph& g, int base) {
    RecordOptions o;
    o.coxeter = false;
    o.base_vertex = base;
    o.walk_length = 0;
    auto r = compute_record(g, o);
    RelabelSnapshot s{r.field.field, r.ring, r.arithmeticity.value, {}, r.form};
    if (r.hasse) s.hasse = r.hasse->labels();
    return s;
}

/// Invariants unchanged under random vertex permutations.
inline SuiteResult relabeling_invariance(const std::vector<Loaded>& graphs, int perms) {
    SuiteResult r{"relabeling invariance"};
    for (const auto& l : graphs) {
        RelabelSnapshot ref = snapshot(l.graph, 0);
        const bool self_unsupported =
            similarity_decision(ref.form, ref.form, true).status == SimilarityVerdict::Status::Unsupported;
        for (int k = 0; k < perms; ++k) {
            auto perm = random_permutation(l.graph.rank);
            CoxeterGraph h = relabel(l.graph, perm);
            int base = static_cast<int>(std::find(perm.begin(), perm.end(), 0) - perm.begin());
            RelabelSnapshot s = snapshot(h, base);
            bool ok = same_field(ref.field, s.field) && compare_rings(ref.ring, s.ring) == RingComparison::Equal &&
                      ref.cls == s.cls && ref.hasse == s.hasse;
            RelabelSnapshot t = snapshot(h, static_cast<int>(uniform(0, l.graph.rank - 1)));
            auto sim = similarity_decision(ref.form, t.form, true).status;
            ok &= sim == (self_unsupported ? SimilarityVerdict::Status::Unsupported : SimilarityVerdict::Status::Similar);
            r.check(ok, l.graph.name + " permutation " + std::to_string(k));
        }
    }
    return r;
}

/// Brute-force symbols at the inert dyadic place of Q(sqrt(5)), the ramified
/// dyadic place of Q(sqrt(2)) and the inert place above 3 in Q(sqrt(5)).
inline SuiteResult local_symbol_oracle(int per_place) {
    SuiteResult r{"local Hilbert symbols vs brute-force oracle"};
    struct Case {
        long d;
        long prime;
        QuotRing ring;
        std::function<bool(long, long)> small_valuation;
    };
    std::vector<Case> cases = {
        {5, 2, {1, 1, 32, 32}, [](long u, long v) { return u % 4 || v % 4; }},
        {2, 2, {0, 2, 16, 8}, [](long u, long v) { return u % 2 || v % 2; }},
        {5, 3, {1, 1, 27, 27}, [](long u, long v) { return u % 9 || v % 9; }},
    };
    for (auto& c : cases) {
        QuadraticField f{Integer(c.d)};
        Place place = places_above(f, Integer(c.prime)).front();
        auto to_elem = [&](long x, long y) {
            return c.d == 5 ? f.element(Rational(2 * x + y, 2), Rational(y, 2)) : f.element(Rational(x), Rational(y));
        };
        auto rnd = [&] {
            while (true) {
                long x = uniform(-20, 20), y = uniform(-20, 20);
                if ((x || y) && c.small_valuation(x, y)) return std::pair<long, long>{x, y};
            }
        };
        for (int k = 0; k < per_place; ++k) {
            auto a = rnd(), b = rnd();
            int expect = hilbert_oracle_quot(c.ring, c.ring.red(a.first, a.second), c.ring.red(b.first, b.second));
            QuadElem qa = to_elem(a.first, a.second), qb = to_elem(b.first, b.second);
            int got = hilbert_symbol(qa, qb, place, f);
            r.check(got == expect, "(" + qa.str() + ", " + qb.str() + ") at " + place.label(f));
        }
    }
    return r;
}

/// Symbols over Q_p against the brute-force solution count.
inline SuiteResult rational_symbol_oracle(int count) {
    SuiteResult r{"Hilbert symbols over Q vs brute-force oracle"};
    const long primes[] = {0, 2, 3, 5, 7};
    for (int k = 0; k < count; ++k) {
        long a = squarefree_part_long(random_nonzero(70)), b = squarefree_part_long(random_nonzero(70));
        long p = primes[k % 5];
        int got = hilbert_symbol(Rational(a), Rational(b), Integer(p));
        r.check(got == hilbert_oracle_Q(a, b, p),
                "(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + std::to_string(p));
    }
    return r;
}

}  // namespace testkit
