#include "qosp/verify.hpp"

#include <iostream>

int main()
{
    bool ok = true;
    for (const auto& r : qosp::run_suite("all")) {
        std::cout << qosp::format_line(r) << '\n';
        if (!r.supplementary) ok = ok && r.pass;
    }
    std::cout << (ok ? "ACCEPTANCE: PASS" : "ACCEPTANCE: FAIL") << '\n';
    return ok ? 0 : 1;
}
