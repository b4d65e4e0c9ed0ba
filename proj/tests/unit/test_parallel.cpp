#include "weilforms/parallel.hpp"

#include <doctest.h>

#include <atomic>
#include <stdexcept>
#include <vector>

using namespace weilforms;

TEST_SUITE("parallel") {

TEST_CASE("every index runs exactly once") {
    for (unsigned workers : {1u, 2u, 8u}) {
        std::vector<std::atomic<int>> hits(1000);
        threaded_for(workers)(hits.size(), [&](std::size_t i) { hits[i]++; });
        for (const auto& h : hits) CHECK(h.load() == 1);
    }
    std::vector<long> seq(50), par(50);
    sequential_for()(seq.size(), [&](std::size_t i) { seq[i] = static_cast<long>(i * i); });
    threaded_for(4)(par.size(), [&](std::size_t i) { par[i] = static_cast<long>(i * i); });
    CHECK(seq == par);
    threaded_for(4)(0, [](std::size_t) { FAIL("no work expected"); });
}

TEST_CASE("exceptions reach the caller") {
    auto body = [](std::size_t i) {
        if (i == 17) throw std::runtime_error("boom");
    };
    CHECK_THROWS_WITH(threaded_for(4)(100, body), "boom");
    CHECK_THROWS_WITH(sequential_for()(100, body), "boom");
}

}
