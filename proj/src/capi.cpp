#include "indturan/indturan.h"

#include "commands.hpp"
#include "error.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

struct it_graph {
  indturan::GraphRecord record;
};

namespace {

thread_local std::string last_error;

it_status status_of(indturan::ErrorCode code) {
  using indturan::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidArgument: return IT_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return IT_PARSE_ERROR;
    case ErrorCode::EmptyQuery: return IT_EMPTY_QUERY;
    case ErrorCode::InvalidPartition: return IT_INVALID_PARTITION;
    case ErrorCode::EmptyGraph: return IT_EMPTY_GRAPH;
    case ErrorCode::DegenerateRoot: return IT_DEGENERATE_ROOT;
    case ErrorCode::Multigraph: return IT_MULTIGRAPH;
    case ErrorCode::NotBipartite: return IT_NOT_BIPARTITE;
    case ErrorCode::EmptyBlowup: return IT_EMPTY_BLOWUP;
    case ErrorCode::NotQualified: return IT_NOT_QUALIFIED;
    case ErrorCode::CertificateInvalid: return IT_CERTIFICATE_INVALID;
    case ErrorCode::TooLarge: return IT_TOO_LARGE;
    case ErrorCode::NoPartition: return IT_NO_PARTITION;
    case ErrorCode::NotKssFree: return IT_NOT_KSS_FREE;
    case ErrorCode::HypothesisUnmet: return IT_HYPOTHESIS_UNMET;
    case ErrorCode::BadBlowup: return IT_BAD_BLOWUP;
    case ErrorCode::NotSemiInduced: return IT_NOT_SEMI_INDUCED;
  }
  return IT_INTERNAL;
}

char* copy_out(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
it_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return IT_OK;
  } catch (const indturan::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("ParseError: ") + e.what();
    return IT_PARSE_ERROR;
  } catch (const std::exception& e) {
    last_error = e.what();
    return IT_INTERNAL;
  } catch (...) {
    last_error = "unknown failure";
    return IT_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  indturan::require(p != nullptr, indturan::ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

}  // namespace

extern "C" {

void it_string_free(char* s) { std::free(s); }

const char* it_last_error(void) { return last_error.c_str(); }

const char* it_status_name(it_status status) {
  static const char* const names[] = {"Ok",          "InvalidArgument", "ParseError",        "EmptyQuery",
                                      "InvalidPartition", "EmptyGraph", "DegenerateRoot",    "Multigraph",
                                      "NotBipartite", "EmptyBlowup",    "NotQualified",      "CertificateInvalid",
                                      "TooLarge",    "NoPartition",     "NotKssFree",        "HypothesisUnmet",
                                      "BadBlowup",   "NotSemiInduced",  "Internal"};
  const auto i = static_cast<int>(status);
  return i >= 0 && i <= IT_INTERNAL ? names[i] : "Unknown";
}

it_status it_graph_from_json(const char* json, it_graph** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    auto record = indturan::graph_from_json(nlohmann::json::parse(json));
    *out = new it_graph{std::move(record)};
  });
}

it_status it_family_build(const char* descriptor, it_graph** out) {
  return guarded([&] {
    need(descriptor, "descriptor");
    need(out, "out");
    *out = new it_graph{indturan::build_family(descriptor)};
  });
}

void it_graph_free(it_graph* g) { delete g; }

int it_graph_order(const it_graph* g) { return g != nullptr ? g->record.graph.order() : -1; }

int it_graph_size(const it_graph* g) { return g != nullptr ? g->record.graph.size() : -1; }

it_status it_graph_to_json(const it_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(indturan::dump(indturan::to_json(g->record)));
  });
}

it_status it_graph_to_dot(const it_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(indturan::to_dot(g->record));
  });
}

it_status it_rho(const it_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(indturan::to_string(indturan::rho(indturan::as_rooted(g->record))));
  });
}

it_status it_balanced(const it_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = copy_out(indturan::dump(indturan::to_json(indturan::is_balanced(indturan::as_rooted(g->record)))));
  });
}

it_status it_realize(int64_t a, int64_t b, int l, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_out(indturan::dump(indturan::realize_command(a, b, l)));
  });
}

it_status it_sweep(int a_max, int b_max, int threads, char** out) {
  return guarded([&] {
    need(out, "out");
    *out = copy_out(indturan::dump(indturan::sweep_command(a_max, b_max, threads)));
  });
}

it_status it_extremal(int n, const it_graph* h, int s, const char* mode, int threads, int max_n, char** out) {
  return guarded([&] {
    need(h, "pattern");
    need(mode, "mode");
    need(out, "out");
    const auto m = indturan::parse_extremal_mode(mode);
    if (max_n <= 0) max_n = m == indturan::ExtremalMode::Bip ? 7 : 8;
    *out = copy_out(indturan::dump(indturan::extremal_command(n, h->record, s, m, threads, max_n)));
  });
}

it_status it_embed(const char* kind, const char* request_json, uint64_t seed, char** out, char** trace) {
  return guarded([&] {
    need(kind, "kind");
    need(request_json, "request");
    need(out, "out");
    const auto result = indturan::embed_command(kind, nlohmann::json::parse(request_json), seed);
    *out = copy_out(indturan::dump(result.result));
    if (trace != nullptr) *trace = copy_out(indturan::dump(result.trace));
  });
}

it_status it_check(const char* kind, int trials, uint64_t seed, int threads, char** out) {
  return guarded([&] {
    need(kind, "kind");
    need(out, "out");
    *out = copy_out(indturan::dump(indturan::check_command(kind, trials, seed, threads)));
  });
}

}  // extern "C"
