#include <doctest.h>

#include "properties.hpp"

using namespace testkit;

namespace {

std::vector<int> identity_order(int n) {
    std::vector<int> o(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) o[static_cast<size_t>(i)] = i;
    return o;
}

AMatrix power(const AMatrix& M, int k) {
    AMatrix R = identity<AlgebraicNumber>(M.rows());
    for (int i = 0; i < k; ++i) R = multiply<AlgebraicNumber>(R, M);
    return R;
}

bool is_identity(const AMatrix& M) {
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j)
            if (!(M(i, j) == AlgebraicNumber(i == j ? 1 : 0))) return false;
    return true;
}

}  // namespace

TEST_CASE("Gram characteristic polynomial") {
    GramMatrix id;
    id.dim = 2;
    id.G = identity<AlgebraicNumber>(3);
    id.field = field_of_rationals();
    auto r = char_poly_gram(id);
    APoly lin{AlgebraicNumber(-1), AlgebraicNumber(1)};
    CHECK(r.poly == lin * lin * lin);
    CHECK(r.field.field->is_rationals());

    std::vector<Loaded> all;
    for (const auto& f : corpus_files()) all.push_back(load(f));
    auto s = gram_structure(all);
    INFO(s.summary());
    CHECK(s.passed());
}

TEST_CASE("Tits reflections") {
    for (long m = 2; m <= 12; ++m) {
        CAPTURE(m);
        std::string edge = m == 2 ? "" : "edge 1 2 angle " + std::to_string(m) + "\n";
        CoxeterGraph g = parse_graph("dim 2\nrank 3\n" + edge, {false});
        GramMatrix gm = gram_matrix(g);
        auto R = tits_matrices(gm);
        for (const auto& r : R) CHECK(is_identity(multiply<AlgebraicNumber>(r, r)));
        AMatrix C = multiply<AlgebraicNumber>(R[0], R[1]);
        for (int k = 1; k < m; ++k) CHECK_FALSE(is_identity(power(C, static_cast<int>(k))));
        CHECK(is_identity(power(C, static_cast<int>(m))));
        if (m == 2) CHECK(C == multiply<AlgebraicNumber>(R[1], R[0]));
    }
    GramMatrix one;
    one.dim = 0;
    one.G = identity<AlgebraicNumber>(1);
    one.field = field_of_rationals();
    CHECK(tits_matrices(one)[0](0, 0) == AlgebraicNumber(-1));
}

TEST_CASE("U identity and Coxeter transformation") {
    for (const auto& f : corpus_files()) {
        CAPTURE(f);
        Loaded l = load(f);
        auto R = tits_matrices(l.gm);
        auto order = random_permutation(l.gm.size());
        AMatrix P = identity<AlgebraicNumber>(l.gm.size());
        for (int v : order) P = multiply<AlgebraicNumber>(P, R[static_cast<size_t>(v)]);
        CHECK(P == coxeter_transformation(l.gm, order));
        CHECK(check_U_identity(l.gm, order));
    }
    CHECK_THROWS_AS(coxeter_transformation(load("cube/g1.cox").gm, {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(coxeter_transformation(load("cube/g1.cox").gm, {0, 1, 2, 3, 4, 4}), ValidationError);
}

TEST_CASE("Coxeter polynomial structure") {
    std::vector<Loaded> all;
    for (const auto& f : corpus_files()) all.push_back(load(f));
    auto s = coxeter_structure(all);
    INFO(s.summary());
    CHECK(s.passed());
}

TEST_CASE("largest eigenvalue agrees with floating point") {
    Loaded l = load("simplices/535.cox");
    auto c = coxeter_char_poly(l.gm, identity_order(4));
    REQUIRE(c.lambda);
    auto C = coxeter_transformation(l.gm, identity_order(4));
    std::vector<double> v{1, 1, 1, 1};
    for (int it = 0; it < 2000; ++it) {
        std::vector<double> w(4, 0.0);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) w[static_cast<size_t>(i)] += C(i, j).to_double() * v[static_cast<size_t>(j)];
        double n = 0;
        for (double x : w) n = std::max(n, std::abs(x));
        for (auto& x : w) x /= n;
        v = w;
    }
    std::vector<double> w(4, 0.0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) w[static_cast<size_t>(i)] += C(i, j).to_double() * v[static_cast<size_t>(j)];
    double lambda = w[0] / v[0];
    CHECK(c.lambda->lo.to_double() <= lambda + 1e-6);
    CHECK(c.lambda->hi.to_double() >= lambda - 1e-6);
}

TEST_CASE("field equalities for quasi-arithmetic groups, several orders") {
    for (const auto& f : corpus_files()) {
        CAPTURE(f);
        Loaded l = load(f);
        if (!classify(l.gm, l.vf).quasi_arithmetic()) continue;
        CHECK(same_field(char_poly_gram(l.gm).field.field, l.vf.field));
        auto as_entry = [&](const APoly& q) {
            std::vector<AlgebraicNumber> cs;
            for (const auto& x : q.coeffs()) cs.push_back(to_field(x, l.gm.field));
            return APoly(cs);
        };
        auto id = identity_order(l.gm.size());
        APoly ref = as_entry(coxeter_char_poly(l.gm, id).chi_C);
        // reversed order gives C^-1
        CHECK(as_entry(coxeter_char_poly(l.gm, std::vector<int>(id.rbegin(), id.rend())).chi_C) == ref);
        for (int k = 0; k < 10; ++k) {
            auto c = coxeter_char_poly(l.gm, random_permutation(l.gm.size()));
            CHECK(same_field(c.field.field, l.vf.field));
            CHECK(is_palindromic(c.chi_C, c.radical % 2 ? -1 : 1));
        }
    }
}

TEST_CASE("root counting") {
    APoly p{AlgebraicNumber(-6), AlgebraicNumber(11), AlgebraicNumber(-6), AlgebraicNumber(1)};
    CHECK(count_roots_above(p, Rational(1)) == 2);
    CHECK(count_roots_above(p, Rational(0)) == 3);
    CHECK(count_roots_above(p, Rational(5, 2)) == 1);
    CHECK(is_palindromic(APoly{AlgebraicNumber(1), AlgebraicNumber(3), AlgebraicNumber(1)}, 1));
    CHECK(is_palindromic(APoly{AlgebraicNumber(1), AlgebraicNumber(0), AlgebraicNumber(-1)}, -1));
}
