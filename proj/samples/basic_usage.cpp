// Decompose a partition, then average a hook statistic over a Plancherel layer.

#include "hookwalk/operators.hpp"
#include "hookwalk/suites.hpp"

#include <iostream>

using namespace hookwalk;

int main()
{
    const Partition lambda{18, 7, 6};
    const auto dec = decompose(lambda, 3);
    std::cout << "lambda = " << to_string(lambda) << ", t = 3\n";
    std::cout << "  core      " << to_string(dec.core) << '\n';
    for (std::size_t i = 0; i < dec.quotients.size(); ++i)
        std::cout << "  quotient " << i << "  " << to_string(dec.quotients[i]) << '\n';
    std::cout << "  round trip " << (recompose(dec) == lambda ? "ok" : "BROKEN") << '\n';

    // Sum of h^2 over hooks divisible by 2, G-weighted, starting from the empty 2-core.
    const PartitionStatistic g{2, true, {parse_stat_spec("hook:t=2,j=0,pow=2")}, std::nullopt};
    std::cout << g.describe() << '\n';
    const auto table = certify_polynomiality(g, Partition{}, 2, 2);
    for (std::size_t n = 0; n < table.values.size(); ++n) std::cout << "  n=" << n << "  " << table.values[n] << '\n';
    std::cout << "  degree <= 2: " << (table.certified ? "certified" : "refuted") << '\n';
}
