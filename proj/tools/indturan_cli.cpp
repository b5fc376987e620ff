#include "indturan/indturan.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct DomainError {
  it_status status;
};

struct Owned {
  char* text = nullptr;
  ~Owned() { it_string_free(text); }
};

using GraphPtr = std::unique_ptr<it_graph, decltype(&it_graph_free)>;

void check(it_status status) {
  if (status != IT_OK) throw DomainError{status};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CLI::ValidationError("cannot read " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CLI::ValidationError("cannot write " + path);
  out << text;
}

GraphPtr load_graph(const std::string& descriptor, const std::string& input) {
  it_graph* g = nullptr;
  if (!descriptor.empty())
    check(it_family_build(descriptor.c_str(), &g));
  else
    check(it_graph_from_json(read_file(input).c_str(), &g));
  return {g, &it_graph_free};
}

int budget_default(const std::string& mode) {
  if (const char* env = std::getenv("INDTURAN_EXTREMAL_MAX_N")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return mode == "bip" ? 7 : 8;
}

std::string sweep_table(const std::string& json) {
  const auto rows = nlohmann::json::parse(json);
  std::ostringstream out;
  out << "a\tb\texponent\tbase\treductions\tcheck\n";
  for (const auto& r : rows) {
    std::string base = r["base"]["kind"].get<std::string>();
    for (const auto& [key, value] : r["base"].items())
      if (key != "kind") base += "," + key + "=" + std::to_string(value.get<int>());
    out << r["a"].get<long long>() << '\t' << r["b"].get<long long>() << '\t' << r["exponent"].get<std::string>() << '\t'
        << base << '\t' << r["reductions"].get<int>() << '\t' << r["check"].get<std::string>() << '\n';
  }
  return out.str();
}

void add_graph_source(CLI::App* cmd, std::string& family, std::string& input) {
  auto* f = cmd->add_option("--family", family, "family descriptor, e.g. Trt:r=3,t=1");
  auto* i = cmd->add_option("--input", input, "graph JSON file");
  f->excludes(i);
  cmd->callback([cmd, f, i] {
    if (f->count() + i->count() != 1) throw CLI::RequiredError("exactly one of --family / --input for " + cmd->get_name());
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced Turan / rooted power toolkit"};
  app.require_subcommand(1);
  std::string family, input, out, format = "json";
  std::int64_t a = 0, b = 0;
  int l = 2, amax = 6, bmax = 50, threads = 1, n = 0, s = 2, max_n = 0, trials = 200;
  std::uint64_t seed = 1;
  std::string mode = "star", pattern, pattern_input, request, trace_path, kind;

  auto* fam = app.add_subcommand("family", "build a family and print it");
  fam->add_option("--desc", family, "family descriptor")->required();
  fam->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  fam->add_option("-o,--out", out, "output file");

  auto* rho = app.add_subcommand("rho", "rooted density of a family");
  add_graph_source(rho, family, input);

  auto* bal = app.add_subcommand("balanced", "balancedness report");
  add_graph_source(bal, family, input);
  bal->add_option("-o,--out", out, "output file");

  auto* real = app.add_subcommand("realize", "certificate for the exponent 2 - a/b");
  real->add_option("--a", a)->required();
  real->add_option("--b", b)->required();
  real->add_option("--l", l, "power parameter");
  real->add_option("-o,--out", out, "output file");

  auto* sweep = app.add_subcommand("sweep", "certificates for every qualifying a/b");
  sweep->add_option("--amax", amax);
  sweep->add_option("--bmax", bmax);
  sweep->add_option("--threads", threads);
  sweep->add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  sweep->add_option("-o,--out", out, "output file");

  auto* ext = app.add_subcommand("extremal", "exact ex*, ex or ex*_bip by exhaustive search");
  ext->set_help_flag("--help", "print this help message and exit");
  ext->add_option("--n", n)->required();
  ext->add_option("--s", s);
  auto* pat = ext->add_option("--pattern,--h", pattern, "pattern descriptor, e.g. cycle:n=4");
  auto* pat_in = ext->add_option("--pattern-input", pattern_input, "pattern graph JSON file");
  pat->excludes(pat_in);
  auto* mode_opt = ext->add_option("--mode", mode, "star, plain or bip")->check(CLI::IsMember({"star", "plain", "bip"}));
  bool bip = false;
  ext->add_flag("--bip", bip, "same as --mode bip")->excludes(mode_opt);
  ext->add_option("--threads", threads);
  ext->add_option("--max-n", max_n, "vertex budget (default from INDTURAN_EXTREMAL_MAX_N)");
  ext->add_option("-o,--out", out, "output file");

  auto* emb = app.add_subcommand("embed", "run an embedding procedure on a JSON request");
  emb->add_option("kind", kind, "tree, keylemma, asym or extract")
      ->required()
      ->check(CLI::IsMember({"tree", "keylemma", "asym", "extract"}));
  emb->add_option("--request", request, "request JSON file")->required();
  emb->add_option("--seed", seed);
  emb->add_option("--trace", trace_path, "write the trace JSON here");
  emb->add_option("-o,--out", out, "output file");

  auto* chk = app.add_subcommand("check", "seeded lemma fuzzing");
  chk->add_option("kind", kind, "badset, rich or kst")->required()->check(CLI::IsMember({"badset", "rich", "kst"}));
  chk->add_option("--trials", trials);
  chk->add_option("--seed", seed);
  chk->add_option("--threads", threads);
  chk->add_option("-o,--out", out, "output file");

  auto* exp = app.add_subcommand("export", "convert a graph JSON file");
  exp->add_option("--input", input, "graph JSON file")->required();
  exp->add_option("--format", format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
  exp->add_option("-o,--out", out, "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Owned text;
    if (fam->parsed()) {
      auto g = load_graph(family, "");
      check(format == "dot" ? it_graph_to_dot(g.get(), &text.text) : it_graph_to_json(g.get(), &text.text));
      emit(text.text, out);
    } else if (rho->parsed()) {
      auto g = load_graph(family, input);
      check(it_rho(g.get(), &text.text));
      std::cout << text.text << '\n';
    } else if (bal->parsed()) {
      auto g = load_graph(family, input);
      check(it_balanced(g.get(), &text.text));
      emit(text.text, out);
    } else if (real->parsed()) {
      check(it_realize(a, b, l, &text.text));
      emit(text.text, out);
    } else if (sweep->parsed()) {
      check(it_sweep(amax, bmax, threads, &text.text));
      emit(format == "table" ? sweep_table(text.text) : std::string(text.text), out);
    } else if (ext->parsed()) {
      if (bip) mode = "bip";
      if (pattern.empty() && pattern_input.empty()) throw CLI::RequiredError("--pattern or --pattern-input");
      auto h = load_graph(pattern, pattern_input);
      check(it_extremal(n, h.get(), s, mode.c_str(), threads, max_n > 0 ? max_n : budget_default(mode), &text.text));
      emit(text.text, out);
    } else if (emb->parsed()) {
      Owned trace;
      check(it_embed(kind.c_str(), read_file(request).c_str(), seed, &text.text, trace_path.empty() ? nullptr : &trace.text));
      if (!trace_path.empty()) emit(trace.text, trace_path);
      emit(text.text, out);
    } else if (chk->parsed()) {
      check(it_check(kind.c_str(), trials, seed, threads, &text.text));
      emit(text.text, out);
    } else if (exp->parsed()) {
      auto g = load_graph("", input);
      check(format == "dot" ? it_graph_to_dot(g.get(), &text.text) : it_graph_to_json(g.get(), &text.text));
      emit(text.text, out);
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << it_last_error() << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
