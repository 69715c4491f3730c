#include "graphalg/elements.hpp"

#include <algorithm>
#include <cctype>

#include "graphalg/errors.hpp"

namespace graphalg {

std::shared_ptr<const LeavittAlgebra> LeavittAlgebra::make(
    Graph g, const std::map<std::string, std::string>& special_edges) {
    auto alg = std::shared_ptr<LeavittAlgebra>(new LeavittAlgebra(std::move(g)));
    const Graph& gr = alg->graph_;
    alg->special_.assign(gr.vertex_count(), UINT32_MAX);
    for (uint32_t v = 0; v < gr.vertex_count(); ++v) {
        uint32_t best = UINT32_MAX;
        for (uint32_t e : gr.out_edges(v))
            if (best == UINT32_MAX || gr.edge(e).name < gr.edge(best).name) best = e;
        alg->special_[v] = best;
    }
    for (const auto& [vname, ename] : special_edges) {
        auto v = gr.find_vertex(vname);
        if (!v) throw std::invalid_argument("special edge override: unknown vertex " + vname);
        auto e = gr.find_edge(ename);
        if (!e) throw std::invalid_argument("special edge override: unknown edge " + ename);
        if (gr.edge(*e).src != *v)
            throw std::invalid_argument("special edge override: edge " + ename +
                                        " does not leave vertex " + vname);
        alg->special_[*v] = *e;
    }
    return alg;
}

bool LeavittAlgebra::reducible(const Monomial& m) const {
    if (m.alpha.empty() || m.beta.empty()) return false;
    uint32_t ea = m.alpha.edges.back(), eb = m.beta.edges.back();
    return ea == eb && special_[graph_.edge(ea).src] == ea;
}

void LeavittAlgebra::check_same(const Element& x, const Element& y) const {
    const LeavittAlgebra* a = x.algebra_ ? x.algebra_.get() : this;
    const LeavittAlgebra* b = y.algebra_ ? y.algebra_.get() : this;
    if (a != b) throw std::invalid_argument("elements belong to different algebras");
}

void LeavittAlgebra::add_term(std::map<Monomial, GaussianRational>& acc, Monomial m,
                              const GaussianRational& c) const {
    auto it = acc.find(m);
    if (it == acc.end()) {
        if (!c.is_zero()) acc.emplace(std::move(m), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

Element LeavittAlgebra::normal_form(std::map<Monomial, GaussianRational> raw,
                                    const std::function<size_t(size_t)>& pick) const {
    for (;;) {
        std::vector<Monomial> reducibles;
        for (const auto& [m, c] : raw)
            if (reducible(m)) reducibles.push_back(m);
        if (reducibles.empty()) break;
        const Monomial target = reducibles[pick ? pick(reducibles.size()) % reducibles.size() : 0];

        GaussianRational coeff = raw.at(target);
        raw.erase(target);
        // alpha' c (beta' c)*  ->  alpha' beta'* - sum_{e != c, s(e)=s(c)} (alpha' e)(beta' e)*
        uint32_t c_edge = target.alpha.edges.back();
        uint32_t v = graph_.edge(c_edge).src;
        Monomial stripped;
        stripped.alpha.edges.assign(target.alpha.edges.begin(), target.alpha.edges.end() - 1);
        stripped.alpha.anchor = stripped.alpha.empty() ? v : graph_.edge(stripped.alpha.edges.front()).src;
        stripped.beta.edges.assign(target.beta.edges.begin(), target.beta.edges.end() - 1);
        stripped.beta.anchor = stripped.beta.empty() ? v : graph_.edge(stripped.beta.edges.front()).src;
        add_term(raw, stripped, coeff);
        for (uint32_t e : graph_.out_edges(v)) {
            if (e == c_edge) continue;
            Monomial sib = stripped;
            sib.alpha.edges.push_back(e);
            sib.beta.edges.push_back(e);
            add_term(raw, std::move(sib), -coeff);
        }
    }
    Element out;
    out.algebra_ = shared_from_this();
    out.terms_ = std::move(raw);
    return out;
}

Element LeavittAlgebra::zero() const {
    Element out;
    out.algebra_ = shared_from_this();
    return out;
}

Element LeavittAlgebra::vertex(uint32_t v) const {
    if (v >= graph_.vertex_count()) throw std::invalid_argument("vertex index out of range");
    Monomial m{Path{{}, v}, Path{{}, v}};
    return from_terms({{m, GaussianRational(1)}});
}

Element LeavittAlgebra::edge(uint32_t e) const {
    if (e >= graph_.edge_count()) throw std::invalid_argument("edge index out of range");
    Monomial m{Path{{e}, graph_.edge(e).src}, Path{{}, graph_.edge(e).dst}};
    return from_terms({{m, GaussianRational(1)}});
}

Element LeavittAlgebra::ghost(uint32_t e) const {
    if (e >= graph_.edge_count()) throw std::invalid_argument("edge index out of range");
    Monomial m{Path{{}, graph_.edge(e).dst}, Path{{e}, graph_.edge(e).src}};
    return from_terms({{m, GaussianRational(1)}});
}

Element LeavittAlgebra::from_terms(std::map<Monomial, GaussianRational> raw) const {
    auto valid_path = [&](const Path& p) {
        if (p.empty()) return p.anchor < graph_.vertex_count();
        for (uint32_t e : p.edges)
            if (e >= graph_.edge_count()) return false;
        for (size_t i = 0; i + 1 < p.edges.size(); ++i)
            if (graph_.edge(p.edges[i]).dst != graph_.edge(p.edges[i + 1]).src) return false;
        return p.anchor == graph_.edge(p.edges.front()).src;
    };
    for (auto it = raw.begin(); it != raw.end();) {
        if (!valid_path(it->first.alpha) || !valid_path(it->first.beta))
            throw std::invalid_argument("monomial contains a non-composing path");
        if (path_range(it->first.alpha) != path_range(it->first.beta))
            throw std::invalid_argument("monomial ranges disagree");
        if (it->second.is_zero())
            it = raw.erase(it);
        else
            ++it;
    }
    return normal_form(std::move(raw));
}

Element LeavittAlgebra::add(const Element& x, const Element& y) const {
    check_same(x, y);
    std::map<Monomial, GaussianRational> acc = x.terms();
    for (const auto& [m, c] : y.terms()) add_term(acc, m, c);
    Element out;
    out.algebra_ = shared_from_this();
    out.terms_ = std::move(acc);
    return out;
}

Element LeavittAlgebra::scale(const GaussianRational& c, const Element& x) const {
    Element out;
    out.algebra_ = shared_from_this();
    if (c.is_zero()) return out;
    for (const auto& [m, k] : x.terms()) out.terms_.emplace(m, c * k);
    return out;
}

std::optional<Monomial> LeavittAlgebra::mono_product(const Monomial& a, const Monomial& b) const {
    const Path& beta = a.beta;
    const Path& gamma = b.alpha;
    if (path_source(beta) != path_source(gamma)) return std::nullopt;
    if (beta.length() <= gamma.length()) {
        // gamma = beta gamma'  ->  (alpha gamma') delta*
        if (!std::equal(beta.edges.begin(), beta.edges.end(), gamma.edges.begin()))
            return std::nullopt;
        Monomial out;
        out.alpha = a.alpha;
        out.alpha.edges.insert(out.alpha.edges.end(), gamma.edges.begin() + beta.length(),
                               gamma.edges.end());
        if (!out.alpha.edges.empty()) out.alpha.anchor = graph_.edge(out.alpha.edges.front()).src;
        out.beta = b.beta;
        return out;
    }
    // beta = gamma beta'  ->  alpha (delta beta')*
    if (!std::equal(gamma.edges.begin(), gamma.edges.end(), beta.edges.begin()))
        return std::nullopt;
    Monomial out;
    out.alpha = a.alpha;
    out.beta = b.beta;
    out.beta.edges.insert(out.beta.edges.end(), beta.edges.begin() + gamma.length(),
                          beta.edges.end());
    if (!out.beta.edges.empty()) out.beta.anchor = graph_.edge(out.beta.edges.front()).src;
    return out;
}

Element LeavittAlgebra::multiply(const Element& x, const Element& y) const {
    check_same(x, y);
    std::map<Monomial, GaussianRational> acc;
    for (const auto& [ma, ca] : x.terms())
        for (const auto& [mb, cb] : y.terms())
            if (auto m = mono_product(ma, mb)) add_term(acc, std::move(*m), ca * cb);
    return normal_form(std::move(acc));
}

Element LeavittAlgebra::star(const Element& x) const {
    std::map<Monomial, GaussianRational> acc;
    for (const auto& [m, c] : x.terms())
        acc.emplace(Monomial{m.beta, m.alpha}, c.conj());
    return normal_form(std::move(acc));
}

std::map<long long, Element> LeavittAlgebra::grade_components(const Element& x) const {
    std::map<long long, Element> out;
    for (const auto& [m, c] : x.terms()) {
        long long d = static_cast<long long>(m.alpha.length()) -
                      static_cast<long long>(m.beta.length());
        auto [it, fresh] = out.try_emplace(d, zero());
        it->second.terms_.emplace(m, c);
    }
    return out;
}

Element LeavittAlgebra::scaling_action(const GaussianRational& a, const Element& x) const {
    if (a.is_zero()) throw std::invalid_argument("scaling action requires a nonzero scalar");
    Element out;
    out.algebra_ = shared_from_this();
    for (const auto& [m, c] : x.terms()) {
        long long d = static_cast<long long>(m.alpha.length()) -
                      static_cast<long long>(m.beta.length());
        out.terms_.emplace(m, c * a.pow(d));
    }
    return out;
}

BigInt LeavittAlgebra::dimension() const {
    if (!graph_.is_acyclic()) throw std::invalid_argument("dimension: graph has a cycle");
    // enumerate every finite path, then count pairs with a common range that
    // do not both end in the special edge of that edge's source
    std::vector<std::vector<Path>> by_range(graph_.vertex_count());
    std::vector<Path> stack;
    for (uint32_t v = 0; v < graph_.vertex_count(); ++v)
        by_range[v].push_back(Path{{}, v});
    auto dfs = [&](auto&& self, Path p) -> void {
        uint32_t end = path_range(p);
        for (uint32_t e : graph_.out_edges(end)) {
            Path q = p;
            q.edges.push_back(e);
            if (q.edges.size() == 1) q.anchor = graph_.edge(e).src;
            by_range[graph_.edge(e).dst].push_back(q);
            self(self, std::move(q));
        }
    };
    for (uint32_t v = 0; v < graph_.vertex_count(); ++v) dfs(dfs, Path{{}, v});

    BigInt count(0);
    for (uint32_t u = 0; u < graph_.vertex_count(); ++u) {
        for (const Path& a : by_range[u])
            for (const Path& b : by_range[u]) {
                Monomial m{a, b};
                if (!reducible(m)) count += BigInt(1);
            }
    }
    return count;
}

// ---- grammar ----------------------------------------------------------------

namespace {

struct ElemToken {
    enum Kind { Ident, Number, Plus, Minus, Dot, LParen, RParen, Prime, Imag, End } kind;
    std::string text;
    size_t column;
};

class ElemLexer {
public:
    explicit ElemLexer(std::string_view s) : s_(s) {}

    ElemToken next() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\n' ||
                                    s_[pos_] == '\r'))
            ++pos_;
        size_t col = pos_ + 1;
        if (pos_ >= s_.size()) return {ElemToken::End, "", col};
        char c = s_[pos_];
        if (c == '+') { ++pos_; return {ElemToken::Plus, "+", col}; }
        if (c == '.') { ++pos_; return {ElemToken::Dot, ".", col}; }
        if (c == '(') { ++pos_; return {ElemToken::LParen, "(", col}; }
        if (c == ')') { ++pos_; return {ElemToken::RParen, ")", col}; }
        if (c == '\'') { ++pos_; return {ElemToken::Prime, "'", col}; }
        if (c == '-') {
            if (pos_ + 1 < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_ + 1])))
                return lex_number(col);
            ++pos_;
            return {ElemToken::Minus, "-", col};
        }
        if (isdigit(static_cast<unsigned char>(c))) return lex_number(col);
        if (c == 'i' && !follows_ident_char(pos_ + 1)) { ++pos_; return {ElemToken::Imag, "i", col}; }
        if (isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            return {ElemToken::Ident, std::string(s_.substr(start, pos_ - start)), col};
        }
        throw ParseError(1, col, std::string("unexpected character '") + c + "'");
    }

private:
    bool follows_ident_char(size_t p) const {
        return p < s_.size() && (isalnum(static_cast<unsigned char>(s_[p])) || s_[p] == '_');
    }
    ElemToken lex_number(size_t col) {
        size_t start = pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError(1, pos_ + 1, "expected denominator digits");
            while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        }
        return {ElemToken::Number, std::string(s_.substr(start, pos_ - start)), col};
    }
    std::string_view s_;
    size_t pos_ = 0;
};

Rational parse_rational(const std::string& text, size_t column) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt den(text.substr(slash + 1));
    if (den.is_zero()) throw ParseError(1, column, "zero denominator in scalar");
    return Rational(BigInt(text.substr(0, slash)), std::move(den));
}

class ElemParser {
public:
    ElemParser(const LeavittAlgebra& alg, std::string_view text) : alg_(alg), lex_(text) {
        advance();
    }

    Element parse_expr() {
        Element acc = parse_term();
        while (cur_.kind == ElemToken::Plus) {
            advance();
            acc = alg_.add(acc, parse_term());
        }
        if (cur_.kind != ElemToken::End)
            throw ParseError(1, cur_.column, "unexpected trailing input");
        return acc;
    }

private:
    void advance() { cur_ = lex_.next(); }

    Element parse_term() {
        GaussianRational coeff(1);
        bool have_scalar = false;
        if (cur_.kind == ElemToken::Number || cur_.kind == ElemToken::LParen) {
            coeff = parse_scalar();
            have_scalar = true;
        }
        if (cur_.kind != ElemToken::Ident) {
            // a lone 0 denotes the zero element
            if (have_scalar && coeff.is_zero()) return alg_.zero();
            throw ParseError(1, cur_.column, "expected a generator");
        }
        Element acc = parse_factor();
        while (cur_.kind == ElemToken::Dot) {
            advance();
            if (cur_.kind != ElemToken::Ident)
                throw ParseError(1, cur_.column, "expected a generator after '.'");
            acc = alg_.multiply(acc, parse_factor());
        }
        return alg_.scale(coeff, acc);
    }

    GaussianRational parse_scalar() {
        if (cur_.kind == ElemToken::LParen) {
            advance();
            if (cur_.kind != ElemToken::Number)
                throw ParseError(1, cur_.column, "expected rational inside scalar");
            Rational re = parse_rational(cur_.text, cur_.column);
            advance();
            int sgn;
            if (cur_.kind == ElemToken::Plus) {
                sgn = 1;
                advance();
            } else if (cur_.kind == ElemToken::Minus) {
                sgn = -1;
                advance();
            } else if (cur_.kind == ElemToken::Number && cur_.text[0] == '-') {
                sgn = 1;  // the sign is folded into the numeral
            } else {
                throw ParseError(1, cur_.column, "expected '+' or '-' in complex scalar");
            }
            if (cur_.kind != ElemToken::Number)
                throw ParseError(1, cur_.column, "expected rational imaginary part");
            Rational im = parse_rational(cur_.text, cur_.column);
            if (sgn < 0) im = -im;
            advance();
            if (cur_.kind != ElemToken::Imag)
                throw ParseError(1, cur_.column, "expected 'i' in complex scalar");
            advance();
            if (cur_.kind != ElemToken::RParen)
                throw ParseError(1, cur_.column, "expected ')' closing scalar");
            advance();
            return GaussianRational(re, im);
        }
        Rational r = parse_rational(cur_.text, cur_.column);
        advance();
        if (cur_.kind == ElemToken::Imag) {
            advance();
            return GaussianRational(Rational(0), r);
        }
        return GaussianRational(r);
    }

    Element parse_factor() {
        std::string name = cur_.text;
        size_t col = cur_.column;
        advance();
        if (name == "adj" && cur_.kind == ElemToken::LParen) {
            advance();
            Element inner = parse_inner_expr();
            if (cur_.kind != ElemToken::RParen)
                throw ParseError(1, cur_.column, "expected ')' closing adj");
            advance();
            return alg_.star(inner);
        }
        bool prime = false;
        if (cur_.kind == ElemToken::Prime) {
            prime = true;
            advance();
        }
        auto e = alg_.graph().find_edge(name);
        auto v = alg_.graph().find_vertex(name);
        if (prime) {
            if (!e) throw ParseError(1, col, "unknown edge " + name);
            return alg_.ghost(*e);
        }
        if (e && v) throw ParseError(1, col, "ambiguous identifier " + name);
        if (e) return alg_.edge(*e);
        if (v) return alg_.vertex(*v);
        throw ParseError(1, col, "unknown generator " + name);
    }

    Element parse_inner_expr() {
        Element acc = parse_term();
        while (cur_.kind == ElemToken::Plus) {
            advance();
            acc = alg_.add(acc, parse_term());
        }
        return acc;
    }

    const LeavittAlgebra& alg_;
    ElemLexer lex_;
    ElemToken cur_;
};

}  // namespace

Element LeavittAlgebra::parse(std::string_view text) const {
    ElemParser p(*this, text);
    return p.parse_expr();
}

std::string LeavittAlgebra::print_monomial(const Monomial& m) const {
    if (m.alpha.empty() && m.beta.empty()) return graph_.vertex_name(m.alpha.anchor);
    std::vector<std::string> parts;
    for (uint32_t e : m.alpha.edges) parts.push_back(graph_.edge(e).name);
    for (size_t i = m.beta.edges.size(); i-- > 0;)
        parts.push_back(graph_.edge(m.beta.edges[i]).name + "'");
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += ".";
        out += parts[i];
    }
    return out;
}

std::string LeavittAlgebra::print(const Element& x) const {
    if (x.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : x.terms()) {
        if (!first) out += " + ";
        first = false;
        if (!c.is_one()) {
            out += c.to_string();
            out += " ";
        }
        out += print_monomial(m);
    }
    return out;
}

}  // namespace graphalg
