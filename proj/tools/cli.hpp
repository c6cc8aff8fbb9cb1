#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stabring/group.hpp"

namespace stabring::cli {

struct RunConfig {
  enum class Command {
    stability,
    norm,
    sidon,
    singer,
    halfgraph,
    bounds,
    interval,
    verify,
  };
  enum class Output { json, csv, text };

  Command command = Command::verify;
  Output output = Output::json;

  std::string group_spec;  // "Z/12" or "Z/2xZ/3xZ/4", case-insensitive
  std::string set_spec;    // "1,2,4" indices or "(0,1),(1,2)" residue tuples
  std::string set_file;    // one set per line, comma-separated indices
  std::optional<int> max_k;

  std::string groups_spec = "Z/2..Z/10";  // verify: ranges and/or group specs
  bool exhaustive = false;
  std::optional<int> sample;
  std::uint64_t seed = 0;

  std::int64_t q = 0;          // singer
  int k = 0;                   // halfgraph / interval
  double tol = 1e-9;           // interval
  std::string multinomial;     // bounds: "2,2,2"
  std::string representation;  // bounds: "k,s"
};

/**
 * Executes one command.  Reports go to `out`; timing and diagnostics go to
 * `err` so that report bytes depend only on the config.  Returns 0 on
 * success, 1 if any emitted record fails its inequality, 2 on bad input.
 */
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/** Parses "Z/12" or "Z/2xZ/3xZ/4" (case-insensitive). */
FiniteAbelianGroup parse_group_spec(const std::string& spec);

/** Parses "Z/2..Z/10,Z/2xZ/2": comma list of ranges and single specs. */
std::vector<FiniteAbelianGroup> parse_group_list(const std::string& spec);

/** Parses element indices "0,2,5" or residue tuples "(0,1),(1,0)". */
std::vector<std::int64_t> parse_set_spec(const FiniteAbelianGroup& g,
                                         const std::string& spec);

/** Round-trips the double exactly: printf %.17g. */
std::string format_double(double v);

/**
 * xorshift64: x ^= x<<13; x ^= x>>7; x ^= x<<17.  A zero seed is replaced by
 * 0x9E3779B97F4A7C15 (the generator has no zero state).  Random subsets take
 * one step per element and include it iff the top bit of the new state is set.
 */
struct XorShift64 {
  std::uint64_t state;

  explicit XorShift64(std::uint64_t seed)
      : state(seed ? seed : 0x9E3779B97F4A7C15ull) {}

  std::uint64_t next() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  }
};

}  // namespace stabring::cli
