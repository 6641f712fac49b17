#include "diograph/diograph.h"

#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "conditions.hpp"
#include "graph_io.hpp"
#include "labeler.hpp"
#include "maximal.hpp"
#include "report.hpp"

struct dio_context {
    dio::PrimeTable table;
};

struct dio_graph {
    dio::Graph g;
};

namespace {

thread_local std::string g_last_error;

dio_status status_of(const dio::Error& e) {
    switch (e.code()) {
    case dio::ErrorCode::argument:
        return DIO_ERR_ARGUMENT;
    case dio::ErrorCode::range:
        return DIO_ERR_RANGE;
    case dio::ErrorCode::resource:
        return DIO_ERR_RESOURCE;
    case dio::ErrorCode::parse:
        return DIO_ERR_PARSE;
    case dio::ErrorCode::internal:
        return DIO_ERR_INTERNAL;
    }
    return DIO_ERR_INTERNAL;
}

template <typename Fn>
dio_status guarded(Fn&& fn) {
    try {
        fn();
        return DIO_OK;
    } catch (const dio::Error& e) {
        g_last_error = e.what();
        return status_of(e);
    } catch (const std::bad_alloc&) {
        g_last_error = "out of memory";
        return DIO_ERR_RESOURCE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return DIO_ERR_INTERNAL;
    }
}

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

dio_status require(bool ok, const char* message) {
    if (!ok) {
        g_last_error = message;
        return DIO_ERR_ARGUMENT;
    }
    return DIO_OK;
}

} // namespace

extern "C" {

const char* dio_last_error(void) { return g_last_error.c_str(); }

void dio_string_free(char* s) { delete[] s; }

dio_context* dio_context_new(uint64_t sieve_limit) {
    dio_context* ctx = nullptr;
    const dio_status st = guarded([&] {
        ctx = new dio_context{
            dio::PrimeTable(sieve_limit == 0 ? dio::PrimeTable::kDefaultLimit : sieve_limit)};
    });
    return st == DIO_OK ? ctx : nullptr;
}

void dio_context_free(dio_context* ctx) { delete ctx; }

uint64_t dio_context_sieve_limit(const dio_context* ctx) {
    return ctx ? ctx->table.limit() : 0;
}

dio_status dio_graph_parse(const char* text, const char* format, dio_graph** out) {
    if (auto st = require(text && format && out, "dio_graph_parse: null argument"))
        return st;
    return guarded([&] {
        *out = new dio_graph{dio::parse_graph(text, dio::parse_format(format))};
    });
}

dio_status dio_graph_serialize(const dio_graph* g, const char* format, char** out) {
    if (auto st = require(g && format && out, "dio_graph_serialize: null argument"))
        return st;
    return guarded([&] {
        *out = dup_string(dio::serialize_graph(g->g, dio::parse_format(format)));
    });
}

dio_status dio_graph_with_order(const dio_graph* g, uint32_t n, dio_graph** out) {
    if (auto st = require(g && out, "dio_graph_with_order: null argument"))
        return st;
    return guarded([&] { *out = new dio_graph{dio::pad_to_order(g->g, static_cast<int>(n))}; });
}

uint32_t dio_graph_order(const dio_graph* g) {
    return g ? static_cast<uint32_t>(g->g.order()) : 0;
}

uint64_t dio_graph_edge_count(const dio_graph* g) { return g ? g->g.edge_count() : 0; }

void dio_graph_free(dio_graph* g) { delete g; }

dio_status dio_build_dn(dio_context* ctx, uint64_t n, dio_graph** out) {
    if (auto st = require(ctx && out, "dio_build_dn: null argument"))
        return st;
    return guarded([&] { *out = new dio_graph{dio::build_dn(n).graph()}; });
}

dio_status dio_profile_json(dio_context* ctx, uint64_t n, int audit, char** out) {
    if (auto st = require(ctx && out, "dio_profile_json: null argument"))
        return st;
    return guarded([&] {
        dio::ProfileOptions opts;
        opts.force_audit = audit != 0;
        *out = dup_string(dio::profile_to_json(dio::profile(ctx->table, n, opts)));
    });
}

dio_status dio_table(dio_context* ctx, uint64_t from, uint64_t to, int csv, int audit,
                     char** out) {
    if (auto st = require(ctx && out, "dio_table: null argument"))
        return st;
    return guarded([&] {
        dio::ProfileOptions opts;
        opts.force_audit = audit != 0;
        *out = dup_string(dio::render_table(ctx->table, from, to, csv != 0, opts));
    });
}

dio_status dio_check_conditions(dio_context* ctx, const dio_graph* g, uint64_t budget,
                                double time_limit, int early_exit, char** json_out,
                                int* overall_out, int* has_unknown_out) {
    if (auto st = require(ctx && g, "dio_check_conditions: null argument"))
        return st;
    return guarded([&] {
        dio::CheckOptions opts;
        if (budget > 0)
            opts.exact_budget = budget;
        opts.time_limit_seconds = time_limit;
        opts.early_exit = early_exit != 0;
        const dio::ConditionReport rep = dio::check_conditions(ctx->table, g->g, opts);
        if (json_out)
            *json_out = dup_string(dio::to_json(rep));
        if (overall_out) {
            switch (rep.overall) {
            case dio::Overall::possibly_diophantine:
                *overall_out = DIO_POSSIBLY_DIOPHANTINE;
                break;
            case dio::Overall::not_diophantine:
                *overall_out = DIO_NOT_DIOPHANTINE;
                break;
            case dio::Overall::diophantine:
                *overall_out = DIO_DIOPHANTINE;
                break;
            }
        }
        if (has_unknown_out) {
            bool unknown = rep.sufficient.verdict == dio::Verdict::unknown;
            for (const auto& c : rep.conditions)
                unknown |= c.verdict == dio::Verdict::unknown;
            *has_unknown_out = unknown ? 1 : 0;
        }
    });
}

dio_status dio_find_labeling(dio_context* ctx, const dio_graph* g, uint64_t budget,
                             double time_limit, char** json_out, int* verdict_out) {
    if (auto st = require(ctx && g, "dio_find_labeling: null argument"))
        return st;
    return guarded([&] {
        dio::FindOptions opts;
        if (budget > 0)
            opts.node_budget = budget;
        opts.time_limit_seconds = time_limit;
        const dio::LabelRule rule = dio::diophantine_rule(g->g.order());
        const dio::LabelingOutcome outcome = dio::find_labeling(g->g, rule, opts);
        if (json_out)
            *json_out = dup_string(dio::to_json(outcome));
        if (verdict_out) {
            switch (outcome.verdict) {
            case dio::LabelingOutcome::Verdict::labeled:
                *verdict_out = DIO_LABELED;
                break;
            case dio::LabelingOutcome::Verdict::none:
                *verdict_out = DIO_NONE;
                break;
            case dio::LabelingOutcome::Verdict::unknown:
                *verdict_out = DIO_UNKNOWN;
                break;
            }
        }
    });
}

dio_status dio_verify_labeling(dio_context* ctx, const dio_graph* g, const char* labels_json,
                               int* valid_out) {
    if (auto st = require(ctx && g && labels_json && valid_out,
                          "dio_verify_labeling: null argument"))
        return st;
    return guarded([&] {
        const auto pairs = dio::labeling_from_json(labels_json);
        const int n = g->g.order();
        if (static_cast<int>(pairs.size()) != n)
            throw dio::ArgumentError("verify: labeling must cover every vertex exactly once");
        std::vector<dio::u64> labels(n, 0);
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            const auto& [v, l] = pairs[i];
            if (v < 1 || v > n)
                throw dio::ArgumentError("verify: vertex out of range");
            if (i > 0 && pairs[i - 1].first == v)
                throw dio::ArgumentError("verify: duplicate vertex in labeling");
            labels[v - 1] = l;
        }
        const dio::LabelRule rule = dio::diophantine_rule(n);
        *valid_out = dio::verify_labeling(g->g, labels, rule) ? 1 : 0;
    });
}

} // extern "C"
