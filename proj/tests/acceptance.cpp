#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <sstream>

#include "properties.hpp"

using namespace testkit;

namespace {

using S = ComparisonVerdict::Status;
using R = ComparisonVerdict::Reason;

struct Criterion {
    std::ostringstream log;
    bool ok = true;

    void expect(bool cond, const std::string& what) {
        log << "    " << (cond ? "ok   " : "FAIL ") << what << "\n";
        ok &= cond;
    }
    void suite(const SuiteResult& r) { expect(r.passed(), r.summary()); }
};

InvariantRecord record(const std::string& f, bool coxeter = false) {
    RecordOptions o;
    o.coxeter = coxeter;
    return compute_record(load_graph(corpus(f)), o);
}

FieldPtr quadratic(long d) { return NumberField::create(QPoly{Rational(-d), Rational(0), Rational(1)}, 1); }

bool has_reason(const ComparisonVerdict& v, R r) { return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end(); }

/// A real number given by its minimal polynomial and an interval.
bool is_value(const AlgebraicNumber& x, const QPoly& minpoly, double lo, double hi) {
    double d = x.to_double();
    return minimal_polynomial(x) == minpoly && d > lo && d < hi;
}

void pyramids(Criterion& c) {
    auto a = record("pyramids/g1.cox"), b = record("pyramids/g2.cox");
    c.expect(same_field(a.field.field, quadratic(2)), "K(G1) = Q(sqrt 2) [" + field_name(a.field.field) + "]");
    c.expect(same_field(b.field.field, quadratic(5)), "K(G2) = Q(sqrt 5) [" + field_name(b.field.field) + "]");
    AlgebraicNumber t1 = cycle_value(a.gram, {3, 4, 5}), t2 = cycle_value(b.gram, {3, 4, 5});
    c.expect(is_value(t1, QPoly{Rational(-8), Rational(0), Rational(1)}, -3, -2), "G1 tail triangle = -2 sqrt 2 [" + t1.str() + "]");
    c.expect(is_value(t2, QPoly{Rational(1), Rational(-3), Rational(1)}, 2, 3),
             "G2 tail triangle = (3 + sqrt 5)/2 [computed " + std::to_string(t2.to_double()) + ", minimal polynomial " +
                 minimal_polynomial(t2).str() + "]");
    auto v = compare(a, b);
    c.expect(v.status == S::Incommensurable && v.reason == R::VinbergFieldDiffers,
             "compare: " + to_string(v.status) + " (" + to_string(v.reason) + ")");
}

void napier(Criterion& c) {
    auto a = record("napier/g1.cox"), b = record("napier/g2.cox");
    c.expect(same_field(a.field.field, quadratic(5)) && same_field(b.field.field, quadratic(5)), "both fields Q(sqrt 5)");
    for (const auto* r : {&a, &b})
        c.expect(r->arithmeticity.value == Arithmeticity::QuasiArithmetic,
                 r->name + " quasi-arithmetic, not arithmetic [" + to_string(r->arithmeticity.value) + "]");
    if (!a.hasse || !b.hasse) {
        c.expect(false, "Hasse invariants computed");
        return;
    }
    bool two = false, five = false;
    for (const auto& p : a.hasse->ram) {
        two |= p.kind == Place::Kind::Inert && p.p == 2;
        five |= p.kind == Place::Kind::Ramified && p.p == 5;
    }
    c.expect(a.hasse->ram.size() == 2 && two && five, "Ram(G1) = {inert above 2, ramified above 5} [" + a.hasse->str() + "]");
    c.expect(b.hasse->trivial(), "Ram(G2) empty [" + b.hasse->str() + "]");
    auto s = similarity_decision(a.form, b.form, true);
    c.expect(s.status == SimilarityVerdict::Status::NotSimilar, "similarity: " + s.status_name());
    auto v = compare(a, b);
    c.expect(v.status == S::Incommensurable && has_reason(v, R::FormsNotSimilar),
             "compare: " + to_string(v.status) + ", reasons include forms-not-similar (primary: " + to_string(v.reason) + ")");
}

void cubes(Criterion& c) {
    auto a = record("cube/g1.cox"), b = record("cube/g2.cox"), d = record("cube/g3.cox");
    c.expect(a.ring.str() == "Z[1/3]", "R(G1) = Z[1/3] [" + a.ring.str() + "]");
    c.expect(b.ring.str() == "Z[1/2]", "R(G2) = Z[1/2] [" + b.ring.str() + "]");
    auto v = compare(a, b);
    c.expect(v.status == S::Incommensurable && v.reason == R::VinbergRingDiffers,
             "compare G1 G2: " + to_string(v.status) + " (" + to_string(v.reason) + ")");
    QuadraticField Q;
    BrauerClass ref = quaternion_class(Q, Q.element(-1), Q.element(3));
    std::vector<AlgebraicNumber> q2{AlgebraicNumber(4), AlgebraicNumber(3), AlgebraicNumber(15), AlgebraicNumber(-15)};
    std::vector<AlgebraicNumber> q3{AlgebraicNumber(4), AlgebraicNumber(3), AlgebraicNumber(Rational(-225, 4)),
                                    AlgebraicNumber(Rational(225, 4))};
    for (auto [r, diag] : {std::pair{&b, &q2}, std::pair{&d, &q3}}) {
        AlgebraicNumber det(1);
        for (const auto& x : *diag) det = det * x;
        c.expect(same_square_class(r->form.det, AlgebraicNumber(-3)) && same_square_class(det, AlgebraicNumber(-3)),
                 r->name + " det class -3");
        c.expect(r->form.signature == Signature{3, 1, 0}, r->name + " signature (3,1)");
        c.expect(r->hasse && *r->hasse == ref && hasse_invariant(Q, to_quadratic(Q, *diag)) == ref,
                 r->name + " Hasse class = (-1,3) [" + (r->hasse ? r->hasse->str() : "none") + "]");
    }
    auto w = compare(b, d);
    c.expect(w.status == S::NotDistinguished, "compare G2 G3: " + to_string(w.status));
}

void totient(Criterion& c) {
    std::vector<long> expect{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 22, 24, 30};
    auto got = admissible_m(5);
    std::string s;
    for (long m : got) s += (s.empty() ? "" : ",") + std::to_string(m);
    c.expect(got == expect, "admissible_m(5) = {" + s + "}");
}

void field_equalities(Criterion& c) {
    int groups = 0;
    for (const auto& f : corpus_files()) {
        Loaded l = load(f);
        if (!classify(l.gm, l.vf).quasi_arithmetic()) continue;
        ++groups;
        bool kg = same_field(char_poly_gram(l.gm).field.field, l.vf.field);
        std::set<std::vector<int>> orders;
        std::vector<int> id(static_cast<size_t>(l.gm.size()));
        for (int i = 0; i < l.gm.size(); ++i) id[static_cast<size_t>(i)] = i;
        orders.insert(id);
        orders.insert(std::vector<int>(id.rbegin(), id.rend()));
        while (orders.size() < 4) orders.insert(random_permutation(l.gm.size()));
        bool kc = true;
        for (const auto& o : orders) kc &= same_field(coxeter_char_poly(l.gm, o).field.field, l.vf.field);
        c.expect(kg && kc, l.graph.name + ": K = K(G) = K(C) over " + std::to_string(orders.size()) + " orders [" +
                               field_name(l.vf.field) + "]");
    }
    c.expect(groups >= 8, std::to_string(groups) + " quasi-arithmetic groups checked");
}

void properties(Criterion& c) {
    for (const auto& r : hilbert_laws_Q(500)) c.suite(r);
    c.suite(psd_vs_oracle(200));
    std::vector<Loaded> all;
    std::vector<VinbergForm> forms;
    for (const auto& f : corpus_files()) {
        all.push_back(load(f));
        forms.push_back(vinberg_form(all.back().gm, all.back().vf));
    }
    c.suite(diagonalization_transcripts(forms, 50));
    c.suite(hasse_independence(forms, 5));
    c.suite(gram_structure(all));
    c.suite(coxeter_structure(all));
    c.suite(relabeling_invariance(all, 20));
}

struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&)> run;
};

}  // namespace

int main(int argc, char** argv) {
    std::vector<Entry> entries{
        {1, "pyramid pair", pyramids},
        {2, "Napier pair", napier},
        {3, "cube pairs", cubes},
        {4, "totient bound", totient},
        {5, "quasi-arithmetic field equalities", field_equalities},
        {6, "property suites", properties},
    };
    int only = 0;
    bool verbose = false;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--criterion") && i + 1 < argc) only = std::atoi(argv[++i]);
        if (!std::strcmp(argv[i], "-v")) verbose = true;
    }
    int failed = 0;
    for (auto& e : entries) {
        if (only && e.id != only) continue;
        Criterion c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            e.run(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s criterion %d: %s (%.1fs)\n", c.ok ? "PASS" : "FAIL", e.id, e.title, secs);
        if (verbose || !c.ok) std::cout << c.log.str();
        failed += !c.ok;
    }
    return failed ? 1 : 0;
}
