#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "graphalg/graph.hpp"
#include "graphalg/scalar.hpp"

namespace graphalg {

// Finite path in a fixed graph; empty paths carry their anchor vertex.
struct Path {
    std::vector<uint32_t> edges;
    uint32_t anchor = 0;  // source vertex; meaningful alone when edges is empty

    size_t length() const { return edges.size(); }
    bool empty() const { return edges.empty(); }
    friend bool operator==(const Path& a, const Path& b) {
        return a.edges == b.edges && (!a.edges.empty() || a.anchor == b.anchor);
    }
    friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
        if (a.edges.size() != b.edges.size()) return a.edges.size() <=> b.edges.size();
        if (a.edges.empty()) return a.anchor <=> b.anchor;
        return a.edges <=> b.edges;
    }
};

// alpha beta* with range(alpha) = range(beta).
struct Monomial {
    Path alpha, beta;
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
        size_t la = a.alpha.length() + a.beta.length();
        size_t lb = b.alpha.length() + b.beta.length();
        if (la != lb) return la <=> lb;
        if (auto c = a.alpha <=> b.alpha; c != 0) return c;
        return a.beta <=> b.beta;
    }
};

class LeavittAlgebra;

// Normal-form element of the Leavitt path algebra over the Gaussian
// rationals. Every stored monomial is irreducible for the algebra's special
// edge system and no coefficient is zero.
class Element {
public:
    Element() = default;

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, GaussianRational>& terms() const { return terms_; }
    const std::shared_ptr<const LeavittAlgebra>& algebra() const { return algebra_; }

    friend bool operator==(const Element& a, const Element& b) {
        return a.terms_ == b.terms_;
    }

private:
    friend class LeavittAlgebra;
    std::shared_ptr<const LeavittAlgebra> algebra_;
    std::map<Monomial, GaussianRational> terms_;
};

// The Leavitt path algebra L(E) over the Gaussian rationals, together with a
// choice of one "special" edge per regular vertex. The relation
// v = sum_{s(e)=v} e e* is oriented to eliminate the special edge, turning
// the alpha beta* spanning set into a linear basis.
class LeavittAlgebra : public std::enable_shared_from_this<LeavittAlgebra> {
public:
    // special_edges maps vertex name -> emitted edge name; unspecified regular
    // vertices default to their lexicographically least edge id.
    static std::shared_ptr<const LeavittAlgebra> make(
        Graph g, const std::map<std::string, std::string>& special_edges = {});

    const Graph& graph() const { return graph_; }
    // special edge of a regular vertex (edge index)
    uint32_t special_edge(uint32_t v) const { return special_[v]; }

    Element zero() const;
    Element vertex(uint32_t v) const;
    Element edge(uint32_t e) const;
    Element ghost(uint32_t e) const;  // e*
    Element from_terms(std::map<Monomial, GaussianRational> raw) const;

    Element add(const Element& x, const Element& y) const;
    Element scale(const GaussianRational& c, const Element& x) const;
    Element multiply(const Element& x, const Element& y) const;
    Element star(const Element& x) const;
    std::map<long long, Element> grade_components(const Element& x) const;
    // e -> a e, e* -> a^-1 e*, vertices fixed; a must be nonzero
    Element scaling_action(const GaussianRational& a, const Element& x) const;

    // Normal form of a raw term map. pick, when given, selects which
    // reducible monomial to rewrite next (arg: number of current candidates;
    // returns an index) — used to exercise confluence.
    Element normal_form(std::map<Monomial, GaussianRational> raw,
                        const std::function<size_t(size_t)>& pick = nullptr) const;

    // Number of irreducible monomials; requires an acyclic graph.
    BigInt dimension() const;

    // Element grammar:
    //   expr   := term ('+' term)*
    //   term   := [scalar] factor ('.' factor)*
    //   factor := IDENT | IDENT "'" | 'adj' '(' expr ')'
    //   scalar := RATIONAL | RATIONAL 'i' | '(' RATIONAL ('+'|'-') RATIONAL 'i' ')'
    // The bare numeral 0 denotes the zero element.
    Element parse(std::string_view text) const;
    std::string print(const Element& x) const;

    uint32_t path_range(const Path& p) const {
        return p.empty() ? p.anchor : graph_.edge(p.edges.back()).dst;
    }
    uint32_t path_source(const Path& p) const {
        return p.empty() ? p.anchor : graph_.edge(p.edges.front()).src;
    }

private:
    explicit LeavittAlgebra(Graph g) : graph_(std::move(g)) {}

    Graph graph_;
    std::vector<uint32_t> special_;  // per vertex; UINT32_MAX at sinks

    bool reducible(const Monomial& m) const;
    void check_same(const Element& x, const Element& y) const;
    void add_term(std::map<Monomial, GaussianRational>& acc, Monomial m,
                  const GaussianRational& c) const;
    std::optional<Monomial> mono_product(const Monomial& a, const Monomial& b) const;
    std::string print_monomial(const Monomial& m) const;
};

}  // namespace graphalg
