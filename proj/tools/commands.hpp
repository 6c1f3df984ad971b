#pragma once

/// @file commands.hpp
/// @brief The subcommands of the qmzv tool, writing to a stream and returning the exit status.

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace qmzv::cli {

/// "a..b", "a" or "a,b,c".
std::vector<unsigned> parse_range(const std::string& text);
/// "auto" gives nullopt, otherwise a comma-separated list.
std::optional<std::vector<unsigned>> parse_primes(const std::string& text);

struct HsumArgs {
  std::string variant = "plain";
  unsigned p = 0;
  unsigned n = 1;
  std::string index;
  std::string s;
  std::string format = "text";
};
int run_hsum(const HsumArgs& a, std::ostream& out);

struct VerifyArgs {
  std::string id;
  std::vector<unsigned> p;
  /// Empty: n = 1, or every upper limit 1..8 for bradley.
  std::vector<unsigned> n;
  /// Empty: every index up to max_weight.
  std::string index;
  unsigned max_weight = 5;
  std::string variant = "both";
  std::string form = "both";
  std::vector<unsigned> l;
  std::vector<unsigned> k;
  std::vector<unsigned> m;
  bool quiet = false;
};
int run_verify(const VerifyArgs& a, std::ostream& out);

struct DimsArgs {
  std::string family;
  std::string weights;
  std::string primes = "auto";
  std::string format = "csv";
  std::string engine = "fraction-free";
  std::string cache_dir;
};
int run_dims(const DimsArgs& a, std::ostream& out);

struct MineArgs {
  std::string family;
  unsigned weight = 0;
  std::string primes = "auto";
  std::string emit;
  std::string engine = "fraction-free";
  std::string cache_dir;
};
int run_mine(const MineArgs& a, std::ostream& out);

struct MemberArgs {
  std::string target;
  std::string span;
  std::string engine = "fraction-free";
  std::string cache_dir;
};
int run_member(const MemberArgs& a, std::ostream& out);

struct LimitsArgs {
  std::string index;
  std::vector<unsigned> m;
  unsigned order = 3;
  unsigned digits = 50;
  std::string format = "csv";
};
int run_limits(const LimitsArgs& a, std::ostream& out);

struct TablesArgs {
  std::string data;
  std::string out_dir = "tables";
  /// Compute every listed cell instead of stopping at default_max_k.
  bool full = false;
  std::vector<std::string> only;
  std::string cache_dir;
};
int run_tables(const TablesArgs& a, std::ostream& out);

}  // namespace qmzv::cli
