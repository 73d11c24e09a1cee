#pragma once

#include <string>
#include <vector>

#include "renflow/toy.hpp"

namespace renflow {

// Reference values for the toy-model tables: the character expansions on
// normal coordinates, the flow families at shift exponent 0, their
// counterterms, beta functions and renormalized characters.  Each entry
// compares one displayed coefficient (or scalar polynomial) exactly.
struct GoldenEntry {
  std::string group;     // "toy", "flow", "lax", "counterterm", "beta", "ren"
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct Section8Report {
  std::vector<GoldenEntry> entries;
  bool all_pass() const;
  std::vector<const GoldenEntry*> group(const std::string& g) const;
};

Section8Report reproduce_section8(const ToyConfig& cfg = {});

std::string section8_text(const Section8Report& report);
std::string section8_json(const Section8Report& report, int indent = 2);

// Aligned text rendering of the toy table itself.
std::string toy_table_text(const ToyConfig& cfg);
std::string toy_table_json(const ToyConfig& cfg, int indent = 2);

}  // namespace renflow
