#define DOCTEST_CONFIG_IMPLEMENT
#include "doctest.h"

#include <cstdio>

#include "secant/spectrum.hpp"

// Every spectrum assembled while the tests run is audited against the
// universal lower bound; a single violation fails the binary.
int main(int argc, char** argv) {
    doctest::Context ctx(argc, argv);
    const int rc = ctx.run();
    if (ctx.shouldExit()) return rc;
    const auto audit = secant::lower_bound_audit();
    if (audit.violations != 0) {
        std::fprintf(stderr, "lower-bound audit: %llu violations in %llu spectra\n",
                     static_cast<unsigned long long>(audit.violations),
                     static_cast<unsigned long long>(audit.checked));
        return 1;
    }
    return rc;
}
