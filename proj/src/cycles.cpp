#include "vinbergkit/cycles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace vinbergkit {

namespace {

std::vector<std::vector<int>> adjacency(const GramMatrix& gm) {
    const int N = gm.size();
    std::vector<std::vector<int>> adj(static_cast<size_t>(N));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            if (i != j && !gm.G(i, j).is_zero()) adj[static_cast<size_t>(i)].push_back(j);
    return adj;
}

}  // namespace

std::vector<Cycle> enumerate_simple_cycles(const GramMatrix& gm, std::size_t cap) {
    const int N = gm.size();
    auto adj = adjacency(gm);
    std::vector<Cycle> out;
    auto push = [&](Cycle c) {
        if (out.size() >= cap)
            throw Error("more than " + std::to_string(cap) + " simple cycles; raise the cap if this is intended");
        out.push_back(std::move(c));
    };
    for (int i = 0; i < N; ++i)
        for (int j : adj[static_cast<size_t>(i)])
            if (i < j) push({i, j});
    std::vector<char> on_path(static_cast<size_t>(N), 0);
    Cycle path;
    std::function<void(int, int)> dfs = [&](int start, int v) {
        for (int w : adj[static_cast<size_t>(v)]) {
            if (w == start && path.size() >= 3 && path[1] < path.back()) push(path);
            if (w <= start || on_path[static_cast<size_t>(w)]) continue;
            on_path[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            dfs(start, w);
            path.pop_back();
            on_path[static_cast<size_t>(w)] = 0;
        }
    };
    for (int s = 0; s < N; ++s) {
        path = {s};
        on_path[static_cast<size_t>(s)] = 1;
        dfs(s, s);
        on_path[static_cast<size_t>(s)] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
}

AlgebraicNumber cycle_value(const GramMatrix& gm, const Cycle& cycle) {
    const size_t l = cycle.size();
    if (l == 0) throw Error("empty cycle");
    AlgebraicNumber v(Rational(ipow(2, l)));
    if (l == 1) return v * gm.G(cycle[0], cycle[0]);
    for (size_t k = 0; k < l; ++k) {
        v *= gm.G(cycle[k], cycle[(k + 1) % l]);
        if (v.is_zero()) break;
    }
    return v;
}

VinbergField vinberg_field(const GramMatrix& gm, std::size_t cap) {
    VinbergField vf;
    auto cycles = enumerate_simple_cycles(gm, cap);
    std::vector<AlgebraicNumber> values, distinct;
    std::vector<size_t> slot;
    for (const auto& c : cycles) {
        AlgebraicNumber v = cycle_value(gm, c);
        auto it = std::find(distinct.begin(), distinct.end(), v);
        slot.push_back(static_cast<size_t>(it - distinct.begin()));
        if (it == distinct.end()) distinct.push_back(v);
        values.push_back(std::move(v));
    }
    Subfield sub = subfield_generated(distinct.empty() ? std::vector<AlgebraicNumber>{AlgebraicNumber(1)} : distinct);
    vf.field = sub.field;
    vf.generator = sub.generator;
    for (size_t k = 0; k < cycles.size(); ++k)
        vf.cycles.push_back({cycles[k], values[k], sub.elements[slot[k]]});
    return vf;
}

// ---------------------------------------------------------------------------
// Rings
// ---------------------------------------------------------------------------

VinbergRing ring_from_values(const FieldPtr& K, const std::vector<AlgebraicNumber>& values) {
    VinbergRing r;
    r.field = K;
    if (K->degree() == 1) {
        r.kind = VinbergRing::Kind::Rational;
        std::set<Integer> primes;
        for (const auto& v : values)
            for (const auto& [p, e] : factor_integer(v.to_rational().den())) primes.insert(p);
        for (const auto& p : primes) r.inverted *= p;
        return r;
    }
    if (K->degree() == 2) {
        r.kind = VinbergRing::Kind::Quadratic;
        r.quad = QuadraticField::of(K);
        std::set<Place> bad;
        for (const auto& v : values) {
            if (v.is_zero()) continue;
            QuadElem x = r.quad.from(v);
            if (r.quad.is_integral(x)) continue;
            for (const auto& p : support_primes(x))
                for (const auto& P : places_above(r.quad, p))
                    if (valuation(x, P) < 0) bad.insert(P);
        }
        r.inverted_primes.assign(bad.begin(), bad.end());
        return r;
    }
    r.kind = VinbergRing::Kind::Opaque;
    for (const auto& v : values) {
        if (is_algebraic_integer(v)) continue;
        if (std::find(r.generators.begin(), r.generators.end(), v) == r.generators.end()) r.generators.push_back(v);
    }
    std::sort(r.generators.begin(), r.generators.end(),
              [](const AlgebraicNumber& a, const AlgebraicNumber& b) { return a.str() < b.str(); });
    return r;
}

VinbergRing vinberg_ring(const VinbergField& vf) {
    std::vector<AlgebraicNumber> values;
    for (const auto& c : vf.cycles) values.push_back(c.in_field);
    return ring_from_values(vf.field, values);
}

std::string VinbergRing::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Rational:
            if (inverted == 1) return "Z";
            os << "Z[1/" << inverted << "]";
            return os.str();
        case Kind::Quadratic: {
            if (inverted_primes.empty()) return "O_K";
            os << "O_K[";
            for (size_t i = 0; i < inverted_primes.size(); ++i)
                os << (i ? ", " : "") << "1/" << inverted_primes[i].label(quad);
            os << "]";
            return os.str();
        }
        case Kind::Opaque: {
            if (generators.empty()) return "O_K";
            os << "O_K[";
            for (size_t i = 0; i < generators.size(); ++i) os << (i ? ", " : "") << generators[i];
            os << "]";
            return os.str();
        }
    }
    return "";
}

RingComparison compare_rings(const VinbergRing& a, const VinbergRing& b) {
    if (!same_field(a.field, b.field)) return RingComparison::Different;
    if (a.kind != b.kind) return RingComparison::Unknown;
    switch (a.kind) {
        case VinbergRing::Kind::Rational:
            return a.inverted == b.inverted ? RingComparison::Equal : RingComparison::Different;
        case VinbergRing::Kind::Quadratic:
            if (!(a.quad == b.quad)) return RingComparison::Unknown;
            return a.inverted_primes == b.inverted_primes ? RingComparison::Equal : RingComparison::Different;
        case VinbergRing::Kind::Opaque: {
            if (a.generators.size() != b.generators.size()) return RingComparison::Unknown;
            for (const auto& g : a.generators)
                if (std::find(b.generators.begin(), b.generators.end(), g) == b.generators.end())
                    return RingComparison::Unknown;
            return RingComparison::Equal;
        }
    }
    return RingComparison::Unknown;
}

WalkCheck closed_walk_check(const GramMatrix& gm, const VinbergField& vf, const VinbergRing& ring, int max_length) {
    WalkCheck out;
    out.max_length = max_length;
    const int N = gm.size();
    auto adj = adjacency(gm);
    // closed walks up to length max_length, identified by their edge multiset
    std::set<std::map<std::pair<int, int>, int>> classes;
    std::map<std::pair<int, int>, int> used;
    std::function<void(int, int, int)> walk = [&](int start, int v, int len) {
        if (len >= 2 && v == start) classes.insert(used);
        if (len == max_length) return;
        for (int w : adj[static_cast<size_t>(v)]) {
            std::pair<int, int> e{std::min(v, w), std::max(v, w)};
            ++used[e];
            walk(start, w, len + 1);
            if (--used[e] == 0) used.erase(e);
        }
    };
    for (int s = 0; s < N; ++s) walk(s, s, 0);
    out.walk_classes = classes.size();
    std::vector<AlgebraicNumber> values;
    for (const auto& c : vf.cycles) values.push_back(c.in_field);
    for (const auto& cls : classes) {
        AlgebraicNumber v(1);
        long len = 0;
        for (const auto& [e, m] : cls) {
            v *= pow(gm.G(e.first, e.second), m);
            len += m;
        }
        v *= AlgebraicNumber(Rational(ipow(2, static_cast<unsigned long>(len))));
        auto in = express_in(v, vf.field);
        if (!in) {
            out.consistent = false;
            return out;
        }
        values.push_back(*in);
    }
    out.consistent = compare_rings(ring_from_values(vf.field, values), ring) == RingComparison::Equal;
    return out;
}

}  // namespace vinbergkit
