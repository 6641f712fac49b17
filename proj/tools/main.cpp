// diograph: build maximal Diophantine graphs, reproduce their invariant
// table, check the necessary/sufficient labelability conditions, and run the
// exact labeling search. Thin front end over the libdiograph C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "diograph/diograph.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1; // not-diophantine / none / invalid labeling
constexpr int kExitUnknown = 2;  // budget exhausted
constexpr int kExitInput = 3;    // bad input or usage

struct ContextDeleter {
    void operator()(dio_context* c) const { dio_context_free(c); }
};
struct GraphDeleter {
    void operator()(dio_graph* g) const { dio_graph_free(g); }
};
using ContextPtr = std::unique_ptr<dio_context, ContextDeleter>;
using GraphPtr = std::unique_ptr<dio_graph, GraphDeleter>;

struct StringDeleter {
    void operator()(char* s) const { dio_string_free(s); }
};
using StringPtr = std::unique_ptr<char, StringDeleter>;

int fail(const std::string& message) {
    std::cerr << "diograph: " << message << "\n";
    return kExitInput;
}

int fail_status() { return fail(dio_last_error()); }

ContextPtr make_context() {
    uint64_t limit = 0;
    if (const char* env = std::getenv("DIOGRAPH_SIEVE_LIMIT")) {
        char* end = nullptr;
        limit = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0') {
            std::cerr << "diograph: ignoring malformed DIOGRAPH_SIEVE_LIMIT\n";
            limit = 0;
        }
    }
    return ContextPtr(dio_context_new(limit));
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return false;
    std::ostringstream ss;
    ss << in.rdbuf();
    out = ss.str();
    return true;
}

std::string guess_format(const std::string& path) {
    const auto dot = path.rfind('.');
    const std::string ext = dot == std::string::npos ? "" : path.substr(dot + 1);
    if (ext == "json")
        return "json";
    if (ext == "g6" || ext == "graph6")
        return "graph6";
    return "edges";
}

// Loads a graph file, optionally padding to a requested order.
int load_graph(const std::string& path, const std::string& format_override, uint32_t pad_n,
               GraphPtr& out) {
    std::string text;
    if (!read_file(path, text))
        return fail("cannot read " + path);
    const std::string fmt = format_override.empty() ? guess_format(path) : format_override;
    dio_graph* raw = nullptr;
    if (dio_graph_parse(text.c_str(), fmt.c_str(), &raw) != DIO_OK)
        return fail_status();
    out.reset(raw);
    if (pad_n > 0) {
        dio_graph* padded = nullptr;
        if (dio_graph_with_order(out.get(), pad_n, &padded) != DIO_OK)
            return fail_status();
        out.reset(padded);
    }
    return kExitOk;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream outf(path, std::ios::binary);
    if (!outf)
        return fail("cannot write " + path);
    outf << text;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximal Diophantine graphs and labelability checks"};
    app.require_subcommand(1);

    uint64_t arg_n = 0, arg_from = 0, arg_to = 0, arg_budget = 0;
    uint32_t arg_order = 0;
    std::string arg_graph, arg_labels, arg_format = "edges", arg_input_format, arg_out;
    bool flag_csv = false, flag_audit = false, flag_early = false;
    double arg_time_limit = 0; // reserved; budgets are the primary guard

    auto* cmd_build = app.add_subcommand("build", "emit the maximal Diophantine graph D_n");
    cmd_build->add_option("n", arg_n, "order")->required();
    cmd_build->add_option("--format", arg_format, "edges|json|graph6|dot");
    cmd_build->add_option("-o,--output", arg_out, "write to file instead of stdout");

    auto* cmd_profile = app.add_subcommand("profile", "closed-form D_n invariants as JSON");
    cmd_profile->add_option("n", arg_n, "order")->required();
    cmd_profile->add_flag("--audit", flag_audit, "force exact-solver cross-checks");

    auto* cmd_table = app.add_subcommand("table", "D_n bounds table for a range of n");
    cmd_table->add_option("from", arg_from, "first order")->required();
    cmd_table->add_option("to", arg_to, "last order")->required();
    cmd_table->add_flag("--csv", flag_csv, "CSV instead of aligned text");
    cmd_table->add_flag("--audit", flag_audit, "force exact-solver cross-checks");

    auto* cmd_check = app.add_subcommand("check", "necessary/sufficient conditions report");
    cmd_check->add_option("--graph", arg_graph, "graph file")->required();
    cmd_check->add_option("--n", arg_order, "compare against D_n of this order (pads G)");
    cmd_check->add_option("--budget", arg_budget, "exact-solver node budget");
    cmd_check->add_option("--input-format", arg_input_format, "edges|json|graph6");
    cmd_check->add_flag("--early-exit", flag_early, "stop at the first failing condition");

    auto* cmd_label = app.add_subcommand("label", "exact Diophantine labeling search");
    cmd_label->add_option("--graph", arg_graph, "graph file")->required();
    cmd_label->add_option("--n", arg_order, "pad to this order first");
    cmd_label->add_option("--budget", arg_budget, "search node budget (default 10^6)");
    cmd_label->add_option("--input-format", arg_input_format, "edges|json|graph6");

    auto* cmd_verify = app.add_subcommand("verify", "check a claimed labeling certificate");
    cmd_verify->add_option("--graph", arg_graph, "graph file")->required();
    cmd_verify->add_option("--labels", arg_labels, "certificate file [[vertex,label],...]")
        ->required();
    cmd_verify->add_option("--input-format", arg_input_format, "edges|json|graph6");

    auto* cmd_export = app.add_subcommand("export", "convert a graph file between formats");
    cmd_export->add_option("--graph", arg_graph, "graph file")->required();
    cmd_export->add_option("--format", arg_format, "edges|json|graph6|dot")->required();
    cmd_export->add_option("--input-format", arg_input_format, "edges|json|graph6");
    cmd_export->add_option("-o,--output", arg_out, "write to file instead of stdout");

    app.add_option("--time-limit", arg_time_limit,
                   "wall-clock guard in seconds (0 = off, budgets remain primary)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInput;
    }

    ContextPtr ctx = make_context();
    if (!ctx)
        return fail_status();

    if (cmd_build->parsed()) {
        dio_graph* raw = nullptr;
        if (dio_build_dn(ctx.get(), arg_n, &raw) != DIO_OK)
            return fail_status();
        GraphPtr g(raw);
        char* text = nullptr;
        if (dio_graph_serialize(g.get(), arg_format.c_str(), &text) != DIO_OK)
            return fail_status();
        StringPtr s(text);
        return write_output(s.get(), arg_out);
    }

    if (cmd_profile->parsed()) {
        char* text = nullptr;
        if (dio_profile_json(ctx.get(), arg_n, flag_audit ? 1 : 0, &text) != DIO_OK)
            return fail_status();
        StringPtr s(text);
        std::cout << s.get() << "\n";
        return kExitOk;
    }

    if (cmd_table->parsed()) {
        char* text = nullptr;
        if (dio_table(ctx.get(), arg_from, arg_to, flag_csv ? 1 : 0, flag_audit ? 1 : 0,
                      &text) != DIO_OK)
            return fail_status();
        StringPtr s(text);
        std::cout << s.get();
        return kExitOk;
    }

    if (cmd_check->parsed()) {
        GraphPtr g;
        if (int rc = load_graph(arg_graph, arg_input_format, arg_order, g))
            return rc;
        char* json = nullptr;
        int overall = 0, has_unknown = 0;
        if (dio_check_conditions(ctx.get(), g.get(), arg_budget, arg_time_limit,
                                 flag_early ? 1 : 0, &json, &overall, &has_unknown) != DIO_OK)
            return fail_status();
        StringPtr s(json);
        std::cout << s.get() << "\n";
        if (overall == DIO_NOT_DIOPHANTINE)
            return kExitNegative;
        return has_unknown ? kExitUnknown : kExitOk;
    }

    if (cmd_label->parsed()) {
        GraphPtr g;
        if (int rc = load_graph(arg_graph, arg_input_format, arg_order, g))
            return rc;
        char* json = nullptr;
        int verdict = 0;
        if (dio_find_labeling(ctx.get(), g.get(), arg_budget, arg_time_limit, &json,
                              &verdict) != DIO_OK)
            return fail_status();
        StringPtr s(json);
        std::cout << s.get() << "\n";
        if (verdict == DIO_LABELED)
            return kExitOk;
        return verdict == DIO_NONE ? kExitNegative : kExitUnknown;
    }

    if (cmd_verify->parsed()) {
        GraphPtr g;
        if (int rc = load_graph(arg_graph, arg_input_format, 0, g))
            return rc;
        std::string labels;
        if (!read_file(arg_labels, labels))
            return fail("cannot read " + arg_labels);
        int valid = 0;
        if (dio_verify_labeling(ctx.get(), g.get(), labels.c_str(), &valid) != DIO_OK)
            return fail_status();
        std::cout << (valid ? "valid" : "invalid") << "\n";
        return valid ? kExitOk : kExitNegative;
    }

    if (cmd_export->parsed()) {
        GraphPtr g;
        if (int rc = load_graph(arg_graph, arg_input_format, 0, g))
            return rc;
        char* text = nullptr;
        if (dio_graph_serialize(g.get(), arg_format.c_str(), &text) != DIO_OK)
            return fail_status();
        StringPtr s(text);
        return write_output(s.get(), arg_out);
    }

    return fail("no subcommand");
}
