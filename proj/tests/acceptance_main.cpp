#include "acceptance.hpp"
#include "cli.hpp"

#include <iostream>

int main()
{
    wkit::accept::Options options;
    options.threads = wkit::cli::threads_from_environment();
    int failed = 0;
    for (const auto& r : wkit::accept::run(options)) {
        std::cout << wkit::accept::format(r) << std::endl;
        if (!r.passed)
            ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
