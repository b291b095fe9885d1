// Acceptance table: one line per criterion, exit status 1 if any fails.

#include <cstdio>
#include <cstdlib>
#include <exception>

#include "freespec/verify.hpp"

int main(int argc, char** argv) {
    freespec::VerifyOptions opts;
    if (argc > 1) opts.seed = std::strtoull(argv[1], nullptr, 10);
    bool ok = true;
    for (int id = 1; id <= 10; ++id) {
        try {
            const auto r = freespec::verify_criterion(id, opts);
            std::printf("%s\n", freespec::format_line(r).c_str());
            ok = ok && r.pass();
        } catch (const std::exception& e) {
            std::printf("FAIL  %d. threw: %s\n", id, e.what());
            ok = false;
        }
        std::fflush(stdout);
    }
    std::printf("%s\n", ok ? "all criteria passed" : "some criteria failed");
    return ok ? 0 : 1;
}
