// graphalg — exact invariants, classification and comparison of graph
// algebras of finite directed graphs, plus symbolic Leavitt path algebra
// arithmetic.
//
// Exit codes: 0 success, 1 capacity exceeded, 2 parse error, 3 bad argument.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graphalg/classify.hpp"
#include "graphalg/compare.hpp"
#include "graphalg/elements.hpp"
#include "graphalg/enumerate.hpp"
#include "graphalg/errors.hpp"
#include "graphalg/json_io.hpp"
#include "graphalg/ktheory.hpp"

namespace {

using namespace graphalg;

constexpr int kExitOk = 0;
constexpr int kExitCapacity = 1;
constexpr int kExitParse = 2;
constexpr int kExitBadArg = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GraphInput load_input(const std::string& path) {
    try {
        return parse_graph_input(read_file(path));
    } catch (const ParseError& pe) {
        throw ParseError(pe.line(), pe.column(), path + ": " + pe.message());
    }
}

const Graph& base_of(const GraphInput& in) {
    return std::holds_alternative<Graph>(in) ? std::get<Graph>(in)
                                             : std::get<StabilizedGraph>(in).base;
}

struct Options {
    std::string format = "json";
    std::string special_edges;
};

std::map<std::string, std::string> parse_special_edges(const std::string& arg) {
    std::map<std::string, std::string> out;
    if (arg.empty()) return out;
    std::stringstream ss(arg);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
            throw std::invalid_argument("--special-edges expects v=e,...");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

void emit_text(const Json& j, const std::string& prefix) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            emit_text(value, prefix.empty() ? key : prefix + "." + key);
    } else if (j.is_array()) {
        std::cout << prefix << ":";
        for (const auto& item : j) {
            if (item.is_string())
                std::cout << " " << item.get<std::string>();
            else
                std::cout << " " << item.dump();
        }
        std::cout << "\n";
    } else {
        std::cout << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const Json& j, const Options& opt) {
    if (opt.format == "json")
        std::cout << j.dump() << "\n";
    else
        emit_text(j, "");
}

int cmd_classify(const std::string& file, const Options& opt) {
    Classification c = classify(base_of(load_input(file)));
    emit(classification_json(c), opt);
    return kExitOk;
}

int cmd_invariants(const std::string& file, const Options& opt) {
    GraphInput in = load_input(file);
    Json j;
    if (std::holds_alternative<Graph>(in)) {
        const Graph& g = std::get<Graph>(in);
        j = invariants_json(k0(g), k1(g), det_sign(g));
    } else {
        const StabilizedGraph& s = std::get<StabilizedGraph>(in);
        j = invariants_json(k0(s), k1(s), DetSign{});
    }
    emit(j, opt);
    return kExitOk;
}

int cmd_compare(const std::string& fileE, const std::string& fileF, const std::string& relation,
                const std::string& algebra, const Options& opt) {
    Relation rel;
    if (relation == "iso" || relation == "isomorphism") rel = Relation::isomorphism;
    else if (relation == "morita") rel = Relation::morita;
    else throw std::invalid_argument("--relation must be iso or morita");
    AlgebraKind alg;
    if (algebra == "leavitt") alg = AlgebraKind::leavitt;
    else if (algebra == "cstar") alg = AlgebraKind::cstar;
    else throw std::invalid_argument("--algebra must be leavitt or cstar");

    GraphInput inE = load_input(fileE), inF = load_input(fileF);
    Verdict v;
    if (std::holds_alternative<Graph>(inE) && std::holds_alternative<Graph>(inF)) {
        v = compare(std::get<Graph>(inE), std::get<Graph>(inF), rel, alg);
    } else if (!std::holds_alternative<Graph>(inE) && !std::holds_alternative<Graph>(inF)) {
        v = compare_stabilized(std::get<StabilizedGraph>(inE), std::get<StabilizedGraph>(inF),
                               rel, alg);
    } else if (rel == Relation::morita) {
        // Morita equivalence is insensitive to stabilization
        v = compare(base_of(inE), base_of(inF), rel, alg);
        v.justifications.insert(v.justifications.begin(), justification::minfty_bridge);
    } else {
        // a unital algebra is never isomorphic to a stabilization
        v = Verdict{rel, alg, Answer::NO, {justification::unit_mismatch}};
    }
    emit(verdict_json(v), opt);
    return kExitOk;
}

int cmd_transform(const std::string& file, const std::string& op, const Options&) {
    GraphInput in = load_input(file);
    if (op == "stabilize") {
        std::cout << to_dsl(GraphInput(stabilize(base_of(in))));
        return kExitOk;
    }
    if (op.rfind("matn=", 0) == 0) {
        long long n;
        try {
            n = std::stoll(op.substr(5));
        } catch (...) {
            throw std::invalid_argument("--op matn=N expects an integer");
        }
        if (n < 1) throw std::invalid_argument("--op matn=N expects N >= 1");
        std::cout << base_of(in).mat_n(static_cast<size_t>(n)).to_dsl();
        return kExitOk;
    }
    throw std::invalid_argument("--op must be matn=N or stabilize");
}

int cmd_census(const Options& opt) {
    emit(census_json(run_census()), opt);
    return kExitOk;
}

int cmd_elem(const std::string& file, const std::string& expr, const Options& opt) {
    GraphInput in = load_input(file);
    auto alg = LeavittAlgebra::make(base_of(in), parse_special_edges(opt.special_edges));
    Element x = alg->parse(expr);
    std::cout << alg->print(x) << "\n";
    return kExitOk;
}

int cmd_parse(const std::string& file, const Options&) {
    std::cout << to_dsl(load_input(file));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph algebra invariants, classification and comparison"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--special-edges", opt.special_edges,
                   "override special edges for element rewriting, v=e,...");

    std::string file, fileE, fileF, relation = "iso", algebra = "cstar", op;
    std::string expr;

    auto* classify_cmd = app.add_subcommand("classify", "classify the graph algebra");
    classify_cmd->add_option("file", file)->required();

    auto* inv_cmd = app.add_subcommand("invariants", "K-theory and determinant invariants");
    inv_cmd->add_option("file", file)->required();

    auto* cmp_cmd = app.add_subcommand("compare", "compare two graph algebras");
    cmp_cmd->add_option("fileE", fileE)->required();
    cmp_cmd->add_option("fileF", fileF)->required();
    cmp_cmd->add_option("--relation", relation, "iso or morita");
    cmp_cmd->add_option("--algebra", algebra, "leavitt or cstar");

    auto* tr_cmd = app.add_subcommand("transform", "graph transformations");
    tr_cmd->add_option("file", file)->required();
    tr_cmd->add_option("--op", op, "matn=N or stabilize")->required();

    app.add_subcommand("census", "small purely-infinite-simple graph census");

    auto* elem_cmd = app.add_subcommand("elem", "evaluate a Leavitt path algebra expression");
    elem_cmd->add_option("file", file)->required();
    elem_cmd->add_option("--eval", expr, "expression to normalize")->required();

    auto* parse_cmd = app.add_subcommand("parse", "parse and re-emit a graph");
    parse_cmd->add_option("file", file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitBadArg;
    }

    try {
        if (app.got_subcommand("classify")) return cmd_classify(file, opt);
        if (app.got_subcommand("invariants")) return cmd_invariants(file, opt);
        if (app.got_subcommand("compare")) return cmd_compare(fileE, fileF, relation, algebra, opt);
        if (app.got_subcommand("transform")) return cmd_transform(file, op, opt);
        if (app.got_subcommand("census")) return cmd_census(opt);
        if (app.got_subcommand("elem")) return cmd_elem(file, expr, opt);
        if (app.got_subcommand("parse")) return cmd_parse(file, opt);
    } catch (const ParseError& pe) {
        std::cerr << "parse error: " << pe.what() << "\n";
        return kExitParse;
    } catch (const CapacityError& ce) {
        std::cerr << "capacity error: " << ce.what() << "\n";
        return kExitCapacity;
    } catch (const std::invalid_argument& ia) {
        std::cerr << "error: " << ia.what() << "\n";
        return kExitBadArg;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return kExitCapacity;
    }
    return kExitBadArg;
}
