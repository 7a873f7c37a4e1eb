#ifndef MIXPORT_VERIFY_HPP
#define MIXPORT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mixport/block_props.hpp"
#include "mixport/channels.hpp"

namespace mixport {
namespace verify {

struct SuiteResult {
    std::string name;
    bool asserted = true; // asserted suites must end with zero failures
    long checks = 0;
    long failures = 0;
    double max_abs_err = 0.0;
    std::vector<std::string> notes;
};

struct VerifyReport {
    std::uint64_t seed = 0;
    long samples = 0;
    std::vector<blockprops::PropertyReport> properties;
    std::vector<SuiteResult> suites;
};

// Individual suites. The channel-taking overloads exist so a corrupted
// matrix can be fed in deliberately; production code passes the catalog
// build.
SuiteResult meps_exactness_suite(const channels::Channel& channel, std::uint64_t seed,
                                 int inputs = 64);
SuiteResult distortion_oracle_suite();
SuiteResult concurrence_identity_suite();
SuiteResult entropy_identity_suite();
SuiteResult peres_horodecki_suite(std::uint64_t seed, long samples);
SuiteResult probability_completeness_suite(std::uint64_t seed);
SuiteResult werner_average_suite();
SuiteResult crossing_point_suite();

VerifyReport run_all(std::uint64_t seed, long samples);

// True when every asserted property and suite reports zero violations
// (Fischer link included); claims under test may carry findings.
bool all_asserted_pass(const VerifyReport& report);

} // namespace verify
} // namespace mixport

#endif
