#include "vinbergkit/classify.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "vinbergkit/real_roots.hpp"

namespace vinbergkit {

std::string to_string(Arithmeticity a) {
    switch (a) {
        case Arithmeticity::Arithmetic: return "arithmetic";
        case Arithmeticity::QuasiArithmetic: return "quasi-arithmetic";
        case Arithmeticity::NqArithmetic: return "nq-arithmetic";
    }
    return "";
}

bool embedding_fixes(const AlgebraicNumber& x, int root_index) {
    if (x.is_rational()) return true;
    QPoly p = minimal_polynomial(x);
    auto roots = isolate_real_roots(p);
    auto locate = [&](int idx) {
        Rational eps(1, 1 << 10);
        for (int iter = 0; iter < 64; ++iter) {
            Interval e = x.enclosure(eps, idx);
            int hit = -1, count = 0;
            for (size_t k = 0; k < roots.size(); ++k)
                if (roots[k].overlaps(e)) {
                    hit = static_cast<int>(k);
                    ++count;
                }
            if (count == 1) return hit;
            eps /= Rational(1 << 16);
        }
        throw InternalError("could not separate the conjugates of " + x.str());
    };
    return locate(-1) == locate(root_index);
}

ArithClass classify(const GramMatrix& gm, const VinbergField& vf) {
    ArithClass out;
    const FieldPtr& E = gm.field;
    if (!is_totally_real(E)) {
        out.value = Arithmeticity::NqArithmetic;
        out.witnesses.push_back({"not-totally-real",
                                 "entry field has " + std::to_string(E->degree() - E->real_root_count()) +
                                     " non-real embeddings",
                                 -1, -1, {}});
        return out;
    }
    bool psd_all = true;
    if (!vf.field->is_rationals()) {
        auto chi = characteristic_polynomial(gm.G);
        for (int idx = 0; idx < E->degree(); ++idx) {
            if (embedding_fixes(vf.generator, idx)) continue;
            out.conjugate_embeddings.push_back(idx);
            int offending = -1;
            if (!psd_from_charpoly(chi, idx, &offending)) {
                psd_all = false;
                out.witnesses.push_back({"not-psd",
                                         "conjugate Gram matrix under embedding " + std::to_string(idx) +
                                             " fails the sign test at coefficient t^" + std::to_string(offending),
                                         idx, offending, {}});
                break;
            }
        }
    }
    if (!psd_all) {
        out.value = Arithmeticity::NqArithmetic;
        return out;
    }
    const std::size_t k = out.conjugate_embeddings.size();
    out.witnesses.push_back({"psd",
                             k ? "all " + std::to_string(k) + " conjugate Gram matrices are positive semidefinite"
                               : std::string("no embedding moves the Vinberg field"),
                             -1, -1, {}});
    for (const auto& c : vf.cycles) {
        if (!is_algebraic_integer(c.in_field)) {
            out.value = Arithmeticity::QuasiArithmetic;
            out.witnesses.push_back({"non-integral-cycle", "cycle value " + c.in_field.str() + " is not integral", -1,
                                     -1, c.indices});
            return out;
        }
    }
    out.value = Arithmeticity::Arithmetic;
    out.witnesses.push_back({"integral", "all cycle values are algebraic integers", -1, -1, {}});
    return out;
}

std::vector<long> admissible_m(int d) {
    if (d < 1) throw Error("degree must be positive");
    std::vector<long> out;
    long bound = std::max<long>(6, 4L * d * d);
    for (long m = 2; m <= bound; ++m)
        if (euler_phi(m) <= 2L * d) out.push_back(m);
    return out;
}

std::vector<TotientViolation> totient_bound_check(const CoxeterGraph& g, int d) {
    std::vector<TotientViolation> out;
    for (const auto& [key, label] : g.edges) {
        if (label.kind != EdgeLabel::Kind::Angle) continue;
        long phi = euler_phi(label.m);
        if (phi > 2L * d) out.push_back({key.first, key.second, label.m, phi});
    }
    return out;
}

namespace {

AMatrix principal(const AMatrix& G, const std::vector<int>& s) {
    const auto k = static_cast<Eigen::Index>(s.size());
    AMatrix M(k, k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) M(i, j) = G(s[static_cast<size_t>(i)], s[static_cast<size_t>(j)]);
    return M;
}

void subsets(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> lanner_subgraphs(const CoxeterGraph& g, const GramMatrix& gm) {
    std::vector<std::vector<int>> out;
    const int N = gm.size();
    for (int k = 3; k <= std::min(5, N); ++k) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        subsets(N, k, 0, cur, all);
        for (const auto& s : all) {
            bool angles = true;
            for (size_t a = 0; a < s.size() && angles; ++a)
                for (size_t b = a + 1; b < s.size() && angles; ++b)
                    if (const EdgeLabel* e = g.edge(s[a], s[b]); e && e->kind != EdgeLabel::Kind::Angle) angles = false;
            if (!angles) continue;
            Signature sig = signature(principal(gm.G, s));
            if (sig.positive != k - 1 || sig.negative != 1 || sig.zero != 0) continue;
            bool spherical = true;
            for (int drop = 0; drop < k && spherical; ++drop) {
                std::vector<int> t;
                for (int i = 0; i < k; ++i)
                    if (i != drop) t.push_back(s[static_cast<size_t>(i)]);
                if (signature(principal(gm.G, t)).positive != k - 1) spherical = false;
            }
            if (spherical) out.push_back(s);
        }
    }
    return out;
}

std::vector<FieldPtr> lanner_field_list() {
    static std::once_flag once;
    static std::vector<FieldPtr> list;
    std::call_once(once, [] {
        auto root = [](long d) { return sqrt(AlgebraicNumber(d)); };
        list.push_back(field_of_rationals());
        for (long d : {2, 3, 5, 6}) list.push_back(root(d).field());
        list.push_back(subfield_generated({root(2), root(3)}).field);
        list.push_back(subfield_generated({root(2), root(5)}).field);
        for (long m : {7, 9, 11, 15, 16, 20}) list.push_back(cos_pi_over(m % 2 ? m : m / 2).field());
    });
    return list;
}

std::vector<Advisory> field_watchlist(const CoxeterGraph& g, const GramMatrix& gm, const VinbergField& vf,
                                      const ArithClass& cls) {
    std::vector<Advisory> out;
    if (cls.quasi_arithmetic() && g.cofinite && !g.cocompact && !vf.field->is_rationals())
        out.push_back({"noncocompact-field", "non-cocompact quasi-arithmetic group with Vinberg field " +
                                                 vf.field->str() + " (expected Q)"});
    if (cls.quasi_arithmetic() && g.cocompact) {
        auto lanner = lanner_subgraphs(g, gm);
        if (!lanner.empty()) {
            bool listed = false;
            for (const auto& L : lanner_field_list())
                if (L->degree() == vf.field->degree() && same_field(L, vf.field)) {
                    listed = true;
                    break;
                }
            if (!listed)
                out.push_back({"field-outside-list", "cocompact quasi-arithmetic group with a Lanner subgraph of order " +
                                                         std::to_string(lanner.front().size()) +
                                                         " has Vinberg field " + vf.field->str() +
                                                         " outside the admissible list"});
        }
    }
    for (const auto& v : totient_bound_check(g, vf.field->degree())) {
        std::ostringstream os;
        os << "edge " << v.i + 1 << "-" << v.j + 1 << " has angle pi/" << v.m << " with phi(" << v.m << ") = " << v.phi
           << " > " << 2 * vf.field->degree();
        out.push_back({"totient-bound", os.str()});
    }
    return out;
}

}  // namespace vinbergkit
