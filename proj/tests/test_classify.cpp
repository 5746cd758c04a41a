#include <doctest.h>

#include "support.hpp"

using namespace testkit;

namespace {

Arithmeticity class_of(const std::string& f) {
    Loaded l = load(f);
    return classify(l.gm, l.vf).value;
}

/// Floating point conjugates of G, eigenvalues by Jacobi rotation.
std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> A) {
    const size_t n = A.size();
    for (int sweep = 0; sweep < 100; ++sweep)
        for (size_t p = 0; p < n; ++p)
            for (size_t q = p + 1; q < n; ++q) {
                if (std::abs(A[p][q]) < 1e-15) continue;
                double theta = (A[q][q] - A[p][p]) / (2 * A[p][q]);
                double t = (theta >= 0 ? 1 : -1) / (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (size_t k = 0; k < n; ++k) {
                    double akp = A[k][p], akq = A[k][q];
                    A[k][p] = c * akp - s * akq;
                    A[k][q] = s * akp + c * akq;
                }
                for (size_t k = 0; k < n; ++k) {
                    double apk = A[p][k], aqk = A[q][k];
                    A[p][k] = c * apk - s * aqk;
                    A[q][k] = s * apk + c * aqk;
                }
            }
    std::vector<double> ev;
    for (size_t i = 0; i < n; ++i) ev.push_back(A[i][i]);
    return ev;
}

}  // namespace

TEST_CASE("arithmeticity of the corpus") {
    CHECK(class_of("pyramids/g1.cox") == Arithmeticity::NqArithmetic);
    CHECK(class_of("pyramids/g2.cox") == Arithmeticity::NqArithmetic);
    CHECK(class_of("napier/g1.cox") == Arithmeticity::QuasiArithmetic);
    CHECK(class_of("napier/g2.cox") == Arithmeticity::QuasiArithmetic);
    for (const char* f : {"cube/g1.cox", "cube/g2.cox", "cube/g3.cox"}) CHECK(class_of(f) == Arithmeticity::QuasiArithmetic);
    for (const char* f : {"simplices/336.cox", "simplices/435.cox", "simplices/535.cox", "simplices/5333.cox"})
        CHECK(class_of(f) == Arithmeticity::Arithmetic);
    CHECK(class_of("simplices/536.cox") == Arithmeticity::NqArithmetic);
}

TEST_CASE("conjugate positivity agrees with floating point eigenvalues") {
    for (const char* f : {"pyramids/g1.cox", "pyramids/g2.cox", "simplices/535.cox", "simplices/536.cox"}) {
        CAPTURE(f);
        Loaded l = load(f);
        ArithClass c = classify(l.gm, l.vf);
        for (const auto& e : embeddings(l.gm.field)) {
            if (embedding_fixes(l.vf.generator, e.root_index)) continue;
            std::vector<std::vector<double>> G(static_cast<size_t>(l.gm.size()));
            for (int i = 0; i < l.gm.size(); ++i)
                for (int j = 0; j < l.gm.size(); ++j) G[static_cast<size_t>(i)].push_back(l.gm.G(i, j).to_double(e.root_index));
            auto ev = jacobi_eigenvalues(G);
            bool psd = std::all_of(ev.begin(), ev.end(), [](double x) { return x > -1e-9; });
            if (!psd) CHECK(c.value == Arithmeticity::NqArithmetic);
            if (c.value != Arithmeticity::NqArithmetic) CHECK(psd);
        }
    }
}

TEST_CASE("witnesses") {
    Loaded l = load("cube/g1.cox");
    ArithClass c = classify(l.gm, l.vf);
    REQUIRE(!c.witnesses.empty());
    CHECK(c.witnesses.back().code == "non-integral-cycle");
    CHECK_FALSE(is_algebraic_integer(cycle_value(l.gm, c.witnesses.back().cycle)));
    Loaded p = load("pyramids/g1.cox");
    CHECK(classify(p.gm, p.vf).witnesses.front().code == "not-psd");
}

TEST_CASE("admissible m from the totient bound") {
    std::vector<long> expect{2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 14, 15, 16, 18, 20, 22, 24, 30};
    CHECK(admissible_m(5) == expect);
    for (int d = 1; d <= 4; ++d) {
        auto got = admissible_m(d);
        for (long m = 2; m <= 400; ++m) {
            long phi = 0;
            for (long k = 1; k <= m; ++k) phi += std::gcd(k, m) == 1;
            CHECK((phi <= 2 * d) == std::binary_search(got.begin(), got.end(), m));
        }
    }
}

TEST_CASE("Lanner subgraphs") {
    Loaded s = load("simplices/535.cox");
    auto L = lanner_subgraphs(s.graph, s.gm);
    REQUIRE(L.size() == 1);
    CHECK(L.front() == std::vector<int>{0, 1, 2, 3});
    Loaded n = load("napier/g1.cox");
    for (const auto& sub : lanner_subgraphs(n.graph, n.gm))
        for (size_t a = 0; a < sub.size(); ++a)
            for (size_t b = a + 1; b < sub.size(); ++b)
                if (const EdgeLabel* e = n.graph.edge(sub[a], sub[b])) CHECK(e->kind == EdgeLabel::Kind::Angle);
}

TEST_CASE("field watchlist") {
    CoxeterGraph g = parse_graph("dim 3\nrank 4\nedge 1 2 angle 5\nedge 2 3 angle 3\nedge 3 4 angle 6\nflag cofinite\n");
    GramMatrix gm = gram_matrix(g);
    VinbergField vf = vinberg_field(gm);
    ArithClass fake{Arithmeticity::QuasiArithmetic, {}, {}};
    auto adv = field_watchlist(g, gm, vf, fake);
    REQUIRE_FALSE(adv.empty());
    CHECK(adv.front().code == "noncocompact-field");

    CoxeterGraph big = parse_graph("dim 3\nrank 4\nedge 1 2 angle 60\nedge 2 3 angle 3\nedge 3 4 angle 3\n", {false});
    auto viol = totient_bound_check(big, 2);
    REQUIRE(viol.size() == 1);
    CHECK(viol.front().m == 60);
    CHECK(viol.front().phi == 16);

    for (const auto& f : corpus_files()) {
        Loaded l = load(f);
        auto a = field_watchlist(l.graph, l.gm, l.vf, classify(l.gm, l.vf));
        CHECK(a.empty());
    }
}
