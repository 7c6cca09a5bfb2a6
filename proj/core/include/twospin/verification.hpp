// verification.hpp: property suites behind `twospin verify` and `twospin oracle-check`

#pragma once

#include <cstdint>
#include <vector>

#include "twospin/experiments.hpp"

namespace twospin {

struct VerifyOptions {
    std::uint64_t seed = 20050613;
    int random_trials = 50;
};

std::vector<CheckResult> verify_qmath(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_single_mode(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_fock_oracle(const VerifyOptions& opt = {}, double tolerance = 1e-7);
std::vector<CheckResult> verify_bath(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_experiments(const VerifyOptions& opt = {});
std::vector<CheckResult> verify_csv(const VerifyOptions& opt = {});

// Every suite above, in module order.
std::vector<CheckResult> run_property_suite(const VerifyOptions& opt = {});

}  // namespace twospin
