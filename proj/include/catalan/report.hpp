#ifndef CATALAN_REPORT_HPP
#define CATALAN_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace catalan {

// One offending parameter tuple from a scan, with the value that broke the claim.
struct ScanFailure {
    std::vector<std::pair<std::string, std::string>> params;
    std::string value;
};

struct ScanReport {
    std::string id;
    std::string ranges;
    long long trials = 0;
    long long rejected = 0; // pole-locus draws redrawn during fuzzing
    std::vector<ScanFailure> failures;

    bool passed() const { return failures.empty(); }
};

struct IdentityCheck {
    std::string id;
    std::string params;
    std::string lhs;
    std::string rhs;
    bool equal = false;
};

} // namespace catalan

#endif
