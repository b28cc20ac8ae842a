// Acceptance suite: runs every criterion of the verification battery and
// prints one pass/fail line per criterion. Exit status 0 iff everything
// passes.

#include <cstdio>
#include <string>

#include "glmn/repro.hpp"
#include "glmn/tableau.hpp"

namespace {

// independent oracle for the quotient-count criterion: direct enumeration of
// all fillings, filtered by the row/column conditions
long brute_ssyt(const glmn::Partition& shape, int alphabet) {
    const int size = shape.size();
    if (size == 0) return 1;
    std::vector<int> flat(size, 1);
    long count = 0;
    for (;;) {
        if (glmn::Tableau::from_flat(shape, flat).semistandard()) ++count;
        int pos = size - 1;
        while (pos >= 0 && flat[pos] == alphabet) flat[pos--] = 1;
        if (pos < 0) break;
        ++flat[pos];
    }
    return count;
}

bool cross_check_enumeration() {
    for (int m = 1; m <= 3; ++m)
        for (int size = 0; size <= 5; ++size)
            for (const auto& shape : glmn::list_partitions(std::min(m, std::max(size, 1)), size))
                if (static_cast<long>(glmn::enumerate_semistandard(shape, m).size()) !=
                    brute_ssyt(shape, m))
                    return false;
    return true;
}

}  // namespace

int main() {
    bool ok = true;

    // the library's semistandard enumeration against direct filling search;
    // the quotient-dimension criterion leans on this count
    bool enum_ok = cross_check_enumeration();
    std::printf("%s [0] semistandard enumeration matches direct filling search\n",
                enum_ok ? "PASS" : "FAIL");
    ok = ok && enum_ok;

    glmn::ReproOptions options;
    for (const auto& r : glmn::run_acceptance(options)) {
        std::printf("%s [%d] %s (%.1fs)\n", r.pass ? "PASS" : "FAIL", r.id, r.title.c_str(),
                    r.seconds);
        if (!r.pass) std::printf("    %s\n", r.detail.c_str());
        ok = ok && r.pass;
    }
    std::printf("%s\n", ok ? "acceptance: all criteria pass" : "acceptance: FAILURES");
    return ok ? 0 : 1;
}
