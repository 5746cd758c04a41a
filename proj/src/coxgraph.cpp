#include "vinbergkit/coxgraph.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace vinbergkit {

// ---------------------------------------------------------------------------
// Expression parser
// ---------------------------------------------------------------------------

namespace {

class ExprParser {
public:
    ExprParser(std::string_view text, int line, int column) : s_(text), line_(line), col0_(column) {}

    AlgebraicNumber parse() {
        AlgebraicNumber v = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what, line_, col0_ + static_cast<int>(pos_));
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }

    bool accept_word(std::string_view w) {
        skip();
        if (s_.substr(pos_, w.size()) != w) return false;
        size_t end = pos_ + w.size();
        if (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) return false;
        pos_ = end;
        return true;
    }

    Integer integer_literal() {
        skip();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Rational number() {
        Integer whole = integer_literal();
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string frac(s_.substr(start, pos_ - start));
            if (frac.empty()) return Rational(whole);
            Integer den = ipow(Integer(10), frac.size());
            return Rational(whole) + Rational(Integer(frac), den);
        }
        return Rational(whole);
    }

    Rational rational_expr() {
        size_t at = pos_;
        AlgebraicNumber v = expr();
        if (!v.is_rational()) {
            pos_ = at;
            fail("expected a rational value");
        }
        return v.to_rational();
    }

    AlgebraicNumber expr() {
        AlgebraicNumber v = term();
        for (;;) {
            if (accept('+'))
                v = v + term();
            else if (accept('-'))
                v = v - term();
            else
                return v;
        }
    }

    AlgebraicNumber term() {
        AlgebraicNumber v = unary();
        for (;;) {
            if (accept('*')) {
                v = v * unary();
            } else if (accept('/')) {
                size_t at = pos_;
                AlgebraicNumber d = unary();
                if (d.is_zero()) {
                    pos_ = at;
                    fail("division by zero");
                }
                v = v / d;
            } else {
                return v;
            }
        }
    }

    AlgebraicNumber unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    AlgebraicNumber power() {
        AlgebraicNumber v = factor();
        if (accept('^')) {
            bool negative = accept('-');
            Integer e = integer_literal();
            if (e > 64) fail("exponent too large");
            int k = static_cast<int>(e.get_si());
            if (negative && v.is_zero()) fail("division by zero");
            v = pow(v, negative ? -k : k);
        }
        return v;
    }

    AlgebraicNumber factor() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) return AlgebraicNumber(number());
        if (accept('(')) {
            AlgebraicNumber v = expr();
            expect(')');
            return v;
        }
        size_t at = pos_;
        if (accept_word("sqrt")) {
            expect('(');
            AlgebraicNumber x = expr();
            expect(')');
            if (x.sign() < 0) {
                pos_ = at;
                fail("square root of a negative number");
            }
            return sqrt(x);
        }
        if (accept_word("cos")) {
            expect('(');
            if (!accept_word("pi")) fail("expected 'pi'");
            expect('/');
            Integer m = integer_literal();
            expect(')');
            if (m < 2 || m > 100000) {
                pos_ = at;
                fail("cos(pi/m) requires 2 <= m <= 100000");
            }
            return cos_pi_over(m.get_si());
        }
        if (accept_word("root")) {
            expect('(');
            std::vector<Rational> coeffs{rational_expr()};
            while (accept(',')) coeffs.push_back(rational_expr());
            expect(';');
            Rational lo = rational_expr();
            expect(',');
            Rational hi = rational_expr();
            expect(')');
            QPoly p(coeffs);
            if (p.degree() < 1 || lo > hi) {
                pos_ = at;
                fail("root() needs a non-constant polynomial and lo <= hi");
            }
            try {
                return adjoin_root(p, Interval(lo, hi)).root;
            } catch (const ArithmeticError& e) {
                pos_ = at;
                fail(e.what());
            }
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    size_t pos_ = 0;
    int line_;
    int col0_;
};

}  // namespace

AlgebraicNumber parse_expression(std::string_view text, int line, int column) {
    try {
        return ExprParser(text, line, column).parse();
    } catch (const ParseError&) {
        throw;
    } catch (const ArithmeticError& e) {
        throw ParseError(e.what(), line, column);
    }
}

// ---------------------------------------------------------------------------
// Graph model
// ---------------------------------------------------------------------------

bool operator==(const EdgeLabel& a, const EdgeLabel& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == EdgeLabel::Kind::Angle) return a.m == b.m;
    if (a.kind == EdgeLabel::Kind::Dotted) return a.weight == b.weight;
    return true;
}

const EdgeLabel* CoxeterGraph::edge(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = edges.find({i, j});
    return it == edges.end() ? nullptr : &it->second;
}

bool operator==(const CoxeterGraph& a, const CoxeterGraph& b) {
    return a.dim == b.dim && a.rank == b.rank && a.cocompact == b.cocompact && a.cofinite == b.cofinite &&
           a.edges == b.edges;
}

namespace {

struct LineReader {
    std::string line;
    int number;
    size_t pos = 0;

    void skip() {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
    }
    int column() const { return static_cast<int>(pos) + 1; }
    bool at_end() {
        skip();
        return pos >= line.size();
    }
    std::string word() {
        skip();
        size_t start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        return line.substr(start, pos - start);
    }
    [[noreturn]] void fail(const std::string& what, int col = 0) const {
        throw ParseError(what, number, col ? col : column());
    }
    long integer(const std::string& what) {
        skip();
        int col = column();
        std::string w = word();
        if (w.empty()) fail("expected " + what, col);
        for (char c : w)
            if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected " + what + ", got '" + w + "'", col);
        if (w.size() > 9) fail(what + " out of range", col);
        return std::stol(w);
    }
    void end() {
        if (!at_end()) fail("unexpected trailing text '" + line.substr(pos) + "'");
    }
};

}  // namespace

CoxeterGraph parse_graph(std::string_view text, const ParseOptions& options) {
    CoxeterGraph g;
    std::istringstream in{std::string(text)};
    std::string raw;
    int number = 0;
    int dim_line = 0, rank_line = 0;
    struct PendingEdge {
        int i, j;
        EdgeLabel label;
        int line, column;
    };
    std::vector<PendingEdge> pending;
    while (std::getline(in, raw)) {
        ++number;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        LineReader r{raw, number};
        if (r.at_end()) continue;
        int kw_col = r.column();
        std::string kw = r.word();
        if (kw == "dim") {
            if (dim_line) r.fail("duplicate 'dim' (first on line " + std::to_string(dim_line) + ")", kw_col);
            g.dim = static_cast<int>(r.integer("dimension"));
            if (g.dim < 2) r.fail("dimension must be at least 2", kw_col);
            dim_line = number;
            r.end();
        } else if (kw == "rank") {
            if (rank_line) r.fail("duplicate 'rank' (first on line " + std::to_string(rank_line) + ")", kw_col);
            g.rank = static_cast<int>(r.integer("rank"));
            if (g.rank < 1) r.fail("rank must be positive", kw_col);
            rank_line = number;
            r.end();
        } else if (kw == "name") {
            r.skip();
            g.name = r.line.substr(r.pos);
            while (!g.name.empty() && std::isspace(static_cast<unsigned char>(g.name.back()))) g.name.pop_back();
        } else if (kw == "flag") {
            int col = r.column();
            std::string f = r.word();
            if (f == "cofinite")
                g.cofinite = true;
            else if (f == "cocompact")
                g.cocompact = g.cofinite = true;
            else
                r.fail("unknown flag '" + f + "'", col);
            r.end();
        } else if (kw == "edge") {
            int col = kw_col;
            int i = static_cast<int>(r.integer("vertex index"));
            int j = static_cast<int>(r.integer("vertex index"));
            int kind_col = r.column();
            std::string kind = r.word();
            EdgeLabel label;
            if (kind == "angle") {
                int mcol = r.column();
                long m = r.integer("angle denominator");
                if (m < 3) r.fail("angle m requires m >= 3", mcol);
                label = EdgeLabel::angle(m);
                r.end();
            } else if (kind == "inf") {
                label = EdgeLabel::parallel();
                r.end();
            } else if (kind == "dotted") {
                r.skip();
                int wcol = r.column();
                std::string w = r.line.substr(r.pos);
                if (w.find_first_not_of(" \t") == std::string::npos) r.fail("missing dotted weight");
                while (!w.empty() && std::isspace(static_cast<unsigned char>(w.back()))) w.pop_back();
                AlgebraicNumber v = parse_expression(w, number, wcol);
                if ((v - AlgebraicNumber(1)).sign() <= 0)
                    r.fail("dotted weight must exceed 1 (it is the hyperbolic cosine of a positive length)", wcol);
                label = EdgeLabel::dotted(v, w);
            } else {
                r.fail("expected 'angle', 'inf' or 'dotted', got '" + kind + "'", kind_col);
            }
            pending.push_back({i, j, std::move(label), number, col});
        } else {
            r.fail("unknown keyword '" + kw + "'", kw_col);
        }
    }
    if (!dim_line) throw ParseError("missing 'dim' line");
    if (!rank_line) throw ParseError("missing 'rank' line");
    if (g.rank < g.dim + 1)
        throw ParseError("rank " + std::to_string(g.rank) + " is below dim + 1 = " + std::to_string(g.dim + 1),
                         rank_line, 1);
    for (auto& e : pending) {
        if (e.i < 1 || e.j < 1 || e.i > g.rank || e.j > g.rank)
            throw ParseError("vertex index out of range 1.." + std::to_string(g.rank), e.line, e.column);
        if (e.i == e.j) throw ParseError("self-loop on vertex " + std::to_string(e.i), e.line, e.column);
        std::pair<int, int> key{std::min(e.i, e.j) - 1, std::max(e.i, e.j) - 1};
        if (g.edges.count(key))
            throw ParseError("duplicate edge " + std::to_string(key.first + 1) + "-" + std::to_string(key.second + 1),
                             e.line, e.column);
        g.edges.emplace(key, std::move(e.label));
    }
    if (options.check_signature) check_signature(gram_matrix(g));
    return g;
}

CoxeterGraph load_graph(const std::string& path, const ParseOptions& options) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    CoxeterGraph g = parse_graph(ss.str(), options);
    if (g.name.empty()) {
        auto slash = path.find_last_of('/');
        g.name = slash == std::string::npos ? path : path.substr(slash + 1);
    }
    return g;
}

std::string format_graph(const CoxeterGraph& g) {
    std::ostringstream os;
    if (!g.name.empty()) os << "name " << g.name << "\n";
    os << "dim " << g.dim << "\n";
    os << "rank " << g.rank << "\n";
    for (const auto& [key, label] : g.edges) {
        os << "edge " << key.first + 1 << " " << key.second + 1 << " ";
        switch (label.kind) {
            case EdgeLabel::Kind::Angle:
                os << "angle " << label.m;
                break;
            case EdgeLabel::Kind::Parallel:
                os << "inf";
                break;
            case EdgeLabel::Kind::Dotted:
                os << "dotted " << label.weight_text;
                break;
        }
        os << "\n";
    }
    if (g.cocompact)
        os << "flag cocompact\n";
    else if (g.cofinite)
        os << "flag cofinite\n";
    return os.str();
}

CoxeterGraph relabel(const CoxeterGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.rank) throw Error("permutation size differs from the rank");
    std::vector<int> inv(perm.size());
    for (size_t i = 0; i < perm.size(); ++i) inv[static_cast<size_t>(perm[i])] = static_cast<int>(i);
    CoxeterGraph out = g;
    out.edges.clear();
    for (const auto& [key, label] : g.edges) {
        int a = inv[static_cast<size_t>(key.first)], b = inv[static_cast<size_t>(key.second)];
        out.edges.emplace(std::make_pair(std::min(a, b), std::max(a, b)), label);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Gram matrix
// ---------------------------------------------------------------------------

GramMatrix gram_matrix(const CoxeterGraph& g) {
    const int N = g.rank;
    std::vector<AlgebraicNumber> entries;
    std::vector<std::pair<int, int>> where;
    for (const auto& [key, label] : g.edges) {
        AlgebraicNumber v;
        switch (label.kind) {
            case EdgeLabel::Kind::Angle:
                v = -cos_pi_over(label.m);
                break;
            case EdgeLabel::Kind::Parallel:
                v = AlgebraicNumber(-1);
                break;
            case EdgeLabel::Kind::Dotted:
                v = -label.weight;
                break;
        }
        entries.push_back(v);
        where.push_back(key);
    }
    Subfield sub = subfield_generated(entries);
    GramMatrix gm;
    gm.dim = g.dim;
    gm.field = sub.field;
    AlgebraicNumber zero = *coerce(AlgebraicNumber(0), sub.field);
    AlgebraicNumber one = *coerce(AlgebraicNumber(1), sub.field);
    gm.G = AMatrix::Constant(N, N, zero);
    for (int i = 0; i < N; ++i) gm.G(i, i) = one;
    for (size_t k = 0; k < where.size(); ++k) {
        auto [i, j] = where[k];
        gm.G(i, j) = sub.elements[k];
        gm.G(j, i) = sub.elements[k];
    }
    return gm;
}

Signature gram_signature(const GramMatrix& gm, int root_index) {
    return signature(gm.G, root_index);
}

void check_signature(const GramMatrix& gm) {
    Signature s = gram_signature(gm);
    const int n = gm.dim, N = gm.size();
    if (s.positive != n || s.negative != 1 || s.zero != N - n - 1) {
        std::ostringstream os;
        os << "Gram matrix has " << s.positive << " positive, " << s.negative << " negative and " << s.zero
           << " zero eigenvalues; expected signature (" << n << ",1) with " << N - n - 1 << " zero eigenvalues";
        throw ValidationError(os.str());
    }
}

}  // namespace vinbergkit
