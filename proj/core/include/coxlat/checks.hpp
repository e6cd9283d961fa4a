#pragma once

#include <string>
#include <vector>

#include "coxlat/rootsys.hpp"

namespace coxlat {

/*
  One verification result.  status is "pass", "fail", or
  "unknown-limit"; a fail always carries a concrete witness, an
  unknown-limit names the exhausted bound.  ms is wall time.
*/
struct CheckReport {
  std::string check;
  std::string system;
  std::string instance;
  std::string status;
  std::string witness;
  long long ms = 0;
};

// Registered check ids, in the order run_check handles them.
const std::vector<std::string>& check_ids();

// True for ids probing open conjectures, false for proved statements.
// A conjecture counterexample is a finding, not a build failure.
bool is_conjecture(const std::string& id);

// One JSON line, keys check, system, instance, status, witness, ms.
std::string to_jsonl(const CheckReport& r);

/*
  Run one registered check over the table; label names the system in
  the reports.  Unknown ids throw input_error.  A table too truncated
  or too large for the check yields a single unknown-limit report
  instead of a guess.
*/
std::vector<CheckReport> run_check(const std::string& id, const RootTable& t,
                                   const std::string& label);

}  // namespace coxlat
