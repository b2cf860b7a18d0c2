#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qfrob/rootdatum.hpp"

namespace qfrob {

enum class Check { LAMBDA, THEOREM, BASE_CASE, KKKO, SPLIT_AXIOMS, REDUCTION };

const char* to_string(Check c);
std::optional<Check> parse_check(const std::string& s);

// Bad campaign file; the message carries the line and field.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Letters and indices are 0-based here; the file uses 1-based ones.
struct Campaign {
  std::string name;
  std::string type;  // preset name or "custom"
  IMat cartan;
  IVec symmetrizers;
  Word word;
  std::vector<int> l_values;

  std::optional<IMat> lambda;  // unset: take the oracle's
  IVec gamma;                  // empty: all zero

  std::optional<std::vector<std::vector<int>>> sequences;  // explicit list
  int depth = 0;
  bool prune = true;

  std::optional<std::vector<std::vector<int>>> exponents;  // explicit list
  std::optional<int> max_entry;                            // unset: l

  std::vector<Check> checks;
  int split_trials = 1000;
  std::optional<int> reduction_prefix;  // unset: half the word
  uint64_t seed = 1;

  CartanData datum() const;
  bool wants(Check c) const;
};

Campaign parse_campaign(const std::string& text, const std::string& source = "<config>");
Campaign load_campaign(const std::string& path);

bool is_prime(int n);

}  // namespace qfrob
