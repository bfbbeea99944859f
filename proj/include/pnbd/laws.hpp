#pragma once

// The law registry and runner: each law sweeps an instance set (generated
// suites by default, or a parsed instance file) and tallies pass / fail /
// skip, with serialized witnesses for failures and findings for documented
// degeneracies.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pnbd/classify.hpp"
#include "pnbd/instance.hpp"

namespace pnbd {

struct LawOptions {
  std::uint64_t seed = 1;
  int probe_bound = 2;
  long long budget_ms = 0;  // 0 = unlimited, per law
  const InstanceFile* file = nullptr;
  std::size_t sample_pairs = 10000;  // seeded 3-point pair sample size
};

struct LawOutcome {
  std::string id;
  std::string summary;
  long long pass = 0, fail = 0, skip = 0;
  std::map<std::string, long long> skip_reasons;
  std::vector<std::string> findings;
  std::vector<Witness> fail_witnesses;  // capped
  double wall_ms = 0;
  bool budget_exhausted = false;
};

struct LawReport {
  std::vector<LawOutcome> outcomes;
  bool all_passed() const;
  long long total_failures() const;
};

struct LawInfo {
  std::string id;
  std::string summary;
};

const std::vector<LawInfo>& law_registry();
bool law_exists(const std::string& id);

// Runs the selected laws (all when `ids` is empty). Unknown ids throw
// DomainError. Deterministic for fixed options.
LawReport run_laws(const std::vector<std::string>& ids, const LawOptions& opts);

// The harness's standing instance suites.
struct Suites {
  std::vector<PreNbdSystem> finset_small;   // all systems on 0..2-point sets
  std::vector<PreNbdSystem> fingrp_small;   // builtin groups <= 8 with nu/up/nabla
  ObjPtr three;                             // the 3-point set
  std::vector<PreNbdSystem> three_systems;  // all systems on it
};
const Suites& standing_suites();

}  // namespace pnbd
