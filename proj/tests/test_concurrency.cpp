#include <doctest.h>

#include "yf/boundary.hpp"
#include "yf/graph.hpp"
#include "yf/path_count.hpp"

#include <thread>
#include <vector>

using namespace yf;

// The memoized operations share their tables across threads; concurrent
// callers must see the same values as a sequential run.
TEST_CASE("memoized counts are safe and deterministic under concurrent use") {
    clear_path_count_caches();
    const auto level8 = enumerate_level(8);
    const Word target = Word::parse("212212");

    std::vector<BigInt> sequential;
    for (const Word& y : level8)
        sequential.push_back(d_closed(Word::parse("11"), y) + d_bruteforce(Word::parse("2"), y) +
                             d_to_empty(y));

    clear_path_count_caches();
    std::vector<std::vector<BigInt>> per_thread(4);
    std::vector<std::thread> threads;
    for (auto& out : per_thread)
        threads.emplace_back([&, &out = out] {
            for (const Word& y : level8)
                out.push_back(d_closed(Word::parse("11"), y) + d_bruteforce(Word::parse("2"), y) +
                              d_to_empty(y));
            // mix in f-table and measure traffic over the same memo tables
            for (std::size_t z = 0; z <= target.length(); ++z)
                for (std::size_t yy = 0; yy <= target.rank(); ++yy)
                    (void)f_eval(target, yy, z);
            (void)mu_finite(InfiniteWordSpec::parse("geometric:1"), Word::parse("121"), 9);
        });
    for (auto& t : threads)
        t.join();
    for (const auto& out : per_thread)
        CHECK(out == sequential);
}
