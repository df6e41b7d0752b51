#include <doctest.h>

#include <numeric>
#include <random>

#include "mprisk/cost_model.hpp"
#include "mprisk/error.hpp"
#include "mprisk/text_io.hpp"
#include "test_support.hpp"

using namespace mprisk;

namespace {

std::vector<std::string> names(const LabelSet& ls, const std::vector<std::size_t>& idx) {
    std::vector<std::string> out;
    for (auto i : idx) out.push_back(ls[i]);
    return out;
}

}  // namespace

TEST_CASE("Table 1 ordered cost vectors") {
    const auto t = testing::table1();
    const auto& cm = t.matrix;
    const auto& ls = cm.labels();
    CHECK(ls.labels() == std::vector<std::string>{"SL", "DP", "SS", "DE", "AT", "RR", "CO", "TL", "AO", "RO"});

    const auto at = ordered_cost_vector(cm, ls.index_of("AT"));
    CHECK(at.values == std::vector<double>{123, 117, 110, 50, 45.5, 41.5, 39, 30, 0});
    CHECK(at.size() == 9);
    CHECK(names(ls, at.groups[1]) == std::vector<std::string>{"DP", "DE"});
    CHECK(names(ls, at.groups.back()) == std::vector<std::string>{"AT"});

    const auto ss = ordered_cost_vector(cm, ls.index_of("SS"));
    CHECK(ss.values == std::vector<double>{165, 105, 103, 102, 99.5, 86.5, 82, 77.5, 0});
    CHECK(names(ls, ss.groups[6]) == std::vector<std::string>{"RR", "CO"});

    // Every column: strictly descending, groups partition the labels, last value is the diagonal zero.
    for (std::size_t i = 0; i < cm.size(); ++i) {
        const auto ocv = ordered_cost_vector(cm, i);
        std::vector<int> seen(cm.size(), 0);
        for (std::size_t j = 0; j < ocv.size(); ++j) {
            if (j) CHECK(ocv.values[j] < ocv.values[j - 1]);
            for (auto k : ocv.groups[j]) {
                ++seen[k];
                CHECK(cm(k, i) == ocv.values[j]);
            }
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
        CHECK(ocv.values.back() == 0.0);
    }
}

TEST_CASE("small hand case") {
    const CostMatrix cm(LabelSet({"A", "B"}), {0, 5, 7, 0});
    const auto ocv = ordered_cost_vector(cm, 0);
    CHECK(ocv.values == std::vector<double>{7, 0});
    CHECK(ocv.groups == std::vector<std::vector<std::size_t>>{{1}, {0}});
}

TEST_CASE("cost matrix validation") {
    const LabelSet ls({"A", "B"});
    CHECK_THROWS_AS(CostMatrix(ls, {1, 5, 7, 0}), ValidationError);
    CHECK_THROWS_AS(CostMatrix(ls, {0, -5, 7, 0}), ValidationError);
    CHECK_THROWS_AS(CostMatrix(ls, {0, NAN, 7, 0}), ValidationError);
    CHECK_THROWS_AS(CostMatrix(ls, {0, 5, 7}), ValidationError);
}

TEST_CASE("cost_distribution") {
    const auto cm = testing::table1().matrix;
    const std::size_t at = cm.labels().index_of("AT");
    const std::vector<double> uniform(10, 0.1);
    const auto d = cost_distribution(ordered_cost_vector(cm, at), uniform);
    CHECK(d.values == ordered_cost_vector(cm, at).values);
    CHECK(d.probs[1] == doctest::Approx(0.2).epsilon(1e-15));
    for (std::size_t j = 0; j < d.probs.size(); ++j) {
        if (j != 1) CHECK(d.probs[j] == doctest::Approx(0.1).epsilon(1e-15));
    }

    std::vector<double> point(10, 0.0);
    point[at] = 1.0;
    const auto p = cost_distribution(ordered_cost_vector(cm, at), point);
    CHECK(p.probs.back() == 1.0);
    CHECK(std::accumulate(p.probs.begin(), p.probs.end() - 1, 0.0) == 0.0);

    std::mt19937_64 rng(4);
    std::exponential_distribution<double> e(1.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> cells(10);
        double s = 0.0;
        for (auto& c : cells) s += (c = e(rng));
        for (auto& c : cells) c /= s;
        const double total = std::accumulate(cells.begin(), cells.end(), 0.0);
        const auto dist = cost_distribution(ordered_cost_vector(cm, trial % 10), cells);
        CHECK(std::abs(std::accumulate(dist.probs.begin(), dist.probs.end(), 0.0) - total) <= 1e-9);
    }

    const std::vector<double> short_cells(9, 1.0 / 9);
    CHECK_THROWS_AS(cost_distribution(ordered_cost_vector(cm, 0), short_cells), ValidationError);
}

TEST_CASE("ordered cost vector is invariant under paired row permutations") {
    const auto cm = testing::table1().matrix;
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::size_t> perm(cm.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto pm = cm.permuted(perm);
        for (std::size_t i = 0; i < cm.size(); ++i) {
            // New label k is old label perm[k]; column i of pm is column perm[i] of cm.
            const auto a = ordered_cost_vector(cm, perm[i]);
            const auto b = ordered_cost_vector(pm, i);
            CHECK(a.values == b.values);
            for (std::size_t j = 0; j < a.size(); ++j) {
                std::vector<std::string> ga = names(cm.labels(), a.groups[j]);
                std::vector<std::string> gb = names(pm.labels(), b.groups[j]);
                std::sort(ga.begin(), ga.end());
                std::sort(gb.begin(), gb.end());
                CHECK(ga == gb);
            }
        }
    }
}

TEST_CASE("cost CSV round-trips bit-exactly") {
    const auto path = testing::source_path("costs/gtsrb10.csv");
    const std::string original = text::read_file(path);
    const auto table = parse_cost_csv(original);
    CHECK(table.corner == "Sign");
    CHECK(format_cost_csv(table) == original);
    CHECK(table.matrix.max_cost() == 500.0);
    CHECK(table.matrix(table.matrix.labels().index_of("DE"), table.matrix.labels().index_of("RR")) == 500.0);
}

TEST_CASE("cost CSV rejects malformed tables") {
    CHECK_NOTHROW(parse_cost_csv("Sign,A,B\nA,0,5\nB,7,0\n"));
    CHECK_NOTHROW(parse_cost_csv("Sign,A,B\r\nA,0,5\r\nB,7,0\r\n"));
    CHECK_THROWS_AS(parse_cost_csv("Sign,A,B\nB,0,5\nA,7,0\n"), ValidationError);
    CHECK_THROWS_AS(parse_cost_csv("Sign,A,B\nA,0,5\nB,7\n"), ValidationError);
    CHECK_THROWS_AS(parse_cost_csv("Sign,A,B\nA,0,x\nB,7,0\n"), ValidationError);
    CHECK_THROWS_AS(parse_cost_csv("Sign,A,B\nA,0,5\n"), ValidationError);
    CHECK_THROWS_AS(parse_cost_csv("Sign,A,B\nA,2,5\nB,7,0\n"), ValidationError);
    CHECK_THROWS_AS(parse_cost_csv(""), ValidationError);
    CHECK_THROWS_AS(load_cost_csv("/nonexistent/costs.csv"), IoError);
}
