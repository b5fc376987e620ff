#pragma once

#include "serialize.hpp"

#include <cstdint>
#include <string_view>

namespace indturan {

/// JSON-level operations shared by the C API and the command-line tool.

Json realize_command(std::int64_t a, std::int64_t b, int l);

Json sweep_command(int a_max, int b_max, int threads);

enum class ExtremalMode { Star, Plain, Bip };

/// Throws InvalidArgument for an unknown mode name ("star", "plain", "bip").
ExtremalMode parse_extremal_mode(std::string_view name);

Json extremal_command(int n, const GraphRecord& h, int s, ExtremalMode mode, int threads, int max_n);

struct EmbedResult {
  Json result;
  Json trace;
};

/**
 * kind is tree, keylemma, asym or extract. Requests:
 *   tree:     {host, L?: {vertices, edges}, tree, d}
 *   keylemma: {host (with partition), L?, template, parts, rich_sets?, thresholds?}
 *   asym:     {host (with partition), M?, template, delta_y, thresholds?}
 *   extract:  {host, f (with roots), copies, l, s}
 * L and M default to the cross edges of the host partition (the whole host
 * for tree).
 */
EmbedResult embed_command(std::string_view kind, const Json& request, std::uint64_t seed);

/// kind is badset, rich or kst.
Json check_command(std::string_view kind, int trials, std::uint64_t seed, int threads);

}  // namespace indturan
