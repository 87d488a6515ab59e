#include "cospec/enumerate.hpp"
#include "cospec/json_io.hpp"
#include "cospec/verify.hpp"

#include <doctest.h>

using namespace cospec;

namespace {

SuiteReport run(const std::string& name, SuiteOptions o) { return run_suite(name, o); }

std::size_t counter(const SuiteReport& r, const std::string& name) {
    for (const auto& [k, v] : r.counters)
        if (k == name)
            return v;
    return 0;
}

} // namespace

TEST_SUITE("verify") {

TEST_CASE("suite names") {
    const auto& names = suite_names();
    CHECK(names.size() == 10);
    CHECK_THROWS(run_suite("nope", {}));
}

TEST_CASE("corpus counts") {
    CHECK(corpus_graphs(1, 4).size() == 1 + 2 + 4 + 11);
    CHECK(corpus_graphs(5, 5).size() == 34);
}

TEST_CASE("small suites pass") {
    SuiteOptions o;
    o.n_max = 5;
    for (const std::string name : {"gfhf", "prop-nec", "regularity", "sc-implies-ac", "walks"}) {
        CAPTURE(name);
        const SuiteReport r = run(name, o);
        CHECK(r.ok());
        CHECK(r.checked > 0);
        CHECK(r.failures.empty());
    }
    o = {};
    o.n_max = 5;
    const SuiteReport g = run("gknj", o);
    CHECK(g.ok());
    // Four checks per (n, j).
    CHECK(g.checked == 4 * (3 + 4 + 5));
    o = {};
    o.trials = 30;
    CHECK(run("rowlinson", o).ok());
    CHECK(run("schwenk", o).ok());
    o = {};
    o.n_max = 3;
    o.trials = 2;
    CHECK(run("chains", o).ok());
}

TEST_CASE("odd cycle pairs pass and even ones are reported") {
    SuiteOptions o;
    o.n_min = 3;
    o.n_max = 6;
    const SuiteReport r = run("cycles", o);
    CHECK(r.checked == 4);
    CHECK(r.passed == 2);
    CHECK(r.failures.size() == 2);
    CHECK_FALSE(r.ok());
}

TEST_CASE("reports do not depend on the worker count") {
    for (const std::string name : {"gfhf", "walks", "schwenk"}) {
        SuiteOptions o;
        o.n_max = 5;
        o.trials = 40;
        o.workers = 1;
        const std::string one = to_json(run(name, o)).dump();
        o.workers = 8;
        CHECK(to_json(run(name, o)).dump() == one);
    }
}

TEST_CASE("custom corpus") {
    SuiteOptions o;
    o.corpus = all_graphs(4);
    const SuiteReport r = run("regularity", o);
    CHECK(r.ok());
    // Four regular classes (empty, 2K2, C4, K4) against seven irregular ones.
    CHECK(r.checked == 4 * 7);
    o.corpus = all_graphs_up_to(5);
    const SuiteReport s = run("sc-implies-ac", o);
    CHECK(s.ok());
    CHECK(counter(s, "almost_cospectral") <= s.checked);
}

} // TEST_SUITE
