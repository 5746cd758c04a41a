#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vinbergkit/algnum.hpp"
#include "vinbergkit/matrix.hpp"

namespace vinbergkit {

/// Parses an exact real algebraic number:
///
///   expr   := term (('+'|'-') term)*
///   term   := unary (('*'|'/') unary)*
///   unary  := ('-'|'+') unary | power
///   power  := factor ('^' integer)?
///   factor := number | '(' expr ')' | 'sqrt' '(' expr ')'
///           | 'cos' '(' 'pi' '/' integer ')'
///           | 'root' '(' expr (',' expr)* ';' expr ',' expr ')'
///
/// `number` is an integer or a decimal literal. `root(c0, ..., cd; lo, hi)`
/// is the unique real root in [lo, hi] of c0 + c1 t + ... + cd t^d, with
/// rational coefficients and bounds. Positions in errors are reported
/// relative to `line` and `column`.
AlgebraicNumber parse_expression(std::string_view text, int line = 0, int column = 1);

struct EdgeLabel {
    enum class Kind { Angle, Parallel, Dotted };
    Kind kind = Kind::Angle;
    long m = 3;
    AlgebraicNumber weight;
    std::string weight_text;

    static EdgeLabel angle(long m) { return {Kind::Angle, m, {}, {}}; }
    static EdgeLabel parallel() { return {Kind::Parallel, 0, {}, {}}; }
    static EdgeLabel dotted(AlgebraicNumber w, std::string text) {
        return {Kind::Dotted, 0, std::move(w), std::move(text)};
    }
    friend bool operator==(const EdgeLabel& a, const EdgeLabel& b);
};

/// Coxeter graph of a polyhedron in hyperbolic n-space with N facets.
/// Vertices are 0-based internally and 1-based in files; unlisted pairs are
/// right angles.
struct CoxeterGraph {
    std::string name;
    int dim = 0;
    int rank = 0;
    std::map<std::pair<int, int>, EdgeLabel> edges;
    bool cocompact = false;
    bool cofinite = false;

    const EdgeLabel* edge(int i, int j) const;
    friend bool operator==(const CoxeterGraph& a, const CoxeterGraph& b);
};

struct ParseOptions {
    bool check_signature = true;
};

CoxeterGraph parse_graph(std::string_view text, const ParseOptions& options = {});
CoxeterGraph load_graph(const std::string& path, const ParseOptions& options = {});
std::string format_graph(const CoxeterGraph& g);

/// Vertex i of the result is vertex perm[i] of g.
CoxeterGraph relabel(const CoxeterGraph& g, const std::vector<int>& perm);

struct GramMatrix {
    int dim = 0;
    AMatrix G;
    /// Entry field: generated by all entries.
    FieldPtr field;

    int size() const { return static_cast<int>(G.rows()); }
};

GramMatrix gram_matrix(const CoxeterGraph& g);

/// Eigenvalue signs of the Gram matrix under an embedding of its entry field.
Signature gram_signature(const GramMatrix& gm, int root_index = -1);

/// Throws ValidationError unless the signature is n positive, one negative and
/// N - n - 1 zero eigenvalues.
void check_signature(const GramMatrix& gm);

}  // namespace vinbergkit
