#include <doctest.h>

#include "domlab/cfsp.hpp"
#include "domlab/error.hpp"
#include "domlab/generators.hpp"
#include "oracles.hpp"

using namespace domlab;
using oracle::error_of;

namespace {

TaskMatrix M(std::vector<std::string> rows) { return TaskMatrix::from_rows(rows); }

}  // namespace

TEST_CASE("task matrices") {
    TaskMatrix m = M({"011", "100"});
    CHECK(m.jobs() == 2);
    CHECK(m.machines() == 3);
    CHECK(m.at(0, 1));
    CHECK(!m.at(1, 1));
    CHECK(m.task_count() == 3);
    CHECK(m.column_count(0) == 1);
    CHECK(m.rows() == std::vector<std::string>{"011", "100"});
    CHECK(error_of([] { M({"01", "1"}); }) == ErrorCode::ParseError);
    CHECK(error_of([] { M({"0a"}); }) == ErrorCode::ParseError);
    CHECK(error_of([] { M({}); }) == ErrorCode::ParseError);
    CHECK(error_of([] { TaskMatrix(0, 2); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("schedule validity and switch counts") {
    TaskMatrix m = M({"11", "11"});
    Schedule good{{0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(is_valid_schedule(m, good));
    CHECK(switch_count(good) == 1);
    Schedule job_order{{0, 1}, {0, 0}, {1, 0}, {1, 1}};
    CHECK(!is_valid_schedule(m, job_order));
    Schedule machine_order{{1, 0}, {0, 0}, {0, 1}, {1, 1}};
    CHECK(!is_valid_schedule(m, machine_order));
    Schedule missing{{0, 0}, {1, 0}, {0, 1}};
    CHECK(!is_valid_schedule(m, missing));
    Schedule twice{{0, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
    CHECK(!is_valid_schedule(m, twice));
    Schedule zigzag{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    CHECK(is_valid_schedule(m, zigzag));
    CHECK(switch_count(zigzag) == 3);
    CHECK(switch_count(Schedule{}) == 0);
}

TEST_CASE("delta_min examples") {
    CHECK(delta_min(M({"1"})).switches == 0);
    CHECK(delta_min(M({"11", "11"})).switches == 1);
    CHECK(delta_min(M({"10", "01"})).switches == 1);
    CHECK(delta_min(M({"111"})).switches == 2);
    CHECK(delta_min(M({"1", "1", "1"})).switches == 0);
    auto empty = delta_min(M({"00", "00"}));
    CHECK(empty.switches == 0);
    CHECK(empty.schedule.empty());
}

TEST_CASE("fixed start machine") {
    CHECK(delta_min(M({"1"}), 0).switches == 0);
    CHECK(delta_min(M({"11"}), 1).switches == 2);
    CHECK(delta_min(M({"11"}), 0).switches == 1);
    CHECK(delta_min(M({"00"}), 1).switches == 0);
    CHECK(error_of([] { delta_min(M({"11"}), 2); }) == ErrorCode::InvalidArgument);
    CHECK(error_of([] { delta_min(M({"11"}), -1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("delta_min matches schedule enumeration on every 3x3 matrix") {
    for (const TaskMatrix& m : all_matrices(3, 3))
        for (StartMachine s : {StartMachine{}, StartMachine{0}, StartMachine{2}}) {
            auto r = delta_min(m, s);
            REQUIRE(r.switches == delta_min_bruteforce(m, s));
            REQUIRE(is_valid_schedule(m, r.schedule));
            int cost = switch_count(r.schedule);
            if (s && !r.schedule.empty() && r.schedule.front().machine != *s) ++cost;
            REQUIRE(cost == r.switches);
        }
}

TEST_CASE("delta_min on random rectangular matrices") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        TaskMatrix m = random_matrix(2 + static_cast<int>(seed % 3), 2 + static_cast<int>(seed % 4), 0.4, seed);
        if (m.task_count() > 10) continue;
        REQUIRE(delta_min(m).switches == delta_min_bruteforce(m));
    }
}

TEST_CASE("lower bound by nonempty machines") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        TaskMatrix m = random_matrix(4, 4, 0.5, seed);
        int busy = 0;
        for (int p = 0; p < m.machines(); ++p) busy += m.column_count(p) > 0 ? 1 : 0;
        REQUIRE(delta_min(m).switches >= std::max(0, busy - 1));
    }
}

TEST_CASE("size guards") {
    TaskMatrix big(11, 1);
    for (int j = 0; j < 11; ++j) big.set(j, 0, true);
    CHECK(error_of([&] { delta_min_bruteforce(big); }) == ErrorCode::TooLarge);
    TaskMatrix huge(20, 20);
    for (int j = 0; j < 20; ++j)
        for (int p = 0; p < 20; ++p) huge.set(j, p, true);
    CHECK(error_of([&] { delta_min(huge); }) == ErrorCode::TooLarge);
}

TEST_CASE("block diagonal composition") {
    std::vector<TaskMatrix> blocks{M({"1"}), M({"11"})};
    TaskMatrix d = block_diagonal(blocks);
    CHECK(d.rows() == std::vector<std::string>{"100", "011"});
    CHECK(error_of([] { block_diagonal(std::vector<TaskMatrix>{}); }) == ErrorCode::InvalidArgument);

    std::vector<TaskMatrix> two{M({"1"}), M({"1"})};
    CHECK(composition_offset(two) == 1);
    std::vector<TaskMatrix> one{M({"11", "11"})};
    CHECK(composition_offset(one) == 0);
    std::vector<TaskMatrix> with_empty{M({"1"}), M({"0"}), M({"1"})};
    CHECK(composition_offset(with_empty) == 1);
    for (int b = 1; b <= 4; ++b) {
        std::vector<TaskMatrix> col(static_cast<std::size_t>(b), M({"1", "1"}));
        REQUIRE(composition_offset(col) == b - 1);
    }
}

TEST_CASE("exact CFSP and target sets") {
    CHECK(exact_cfsp(M({"11", "11"}), ExactSet::make({1, 3}, 0)));
    CHECK(!exact_cfsp(M({"11", "11"}), ExactSet::make({0, 2}, 0)));
    CHECK(exact_cfsp(M({"11"}), ExactSet::make({2}, 0), 1));
    CHECK(sk_from_z(4, 3).values() == std::vector<int>{5, 7, 9});
    CHECK(sk_from_z(0, 1).values() == std::vector<int>{1});
    CHECK(sk_from_z(2, 2, 1).values() == std::vector<int>{4, 6});
    CHECK(error_of([] { sk_from_z(3, 2); }) == ErrorCode::OddZ);
    CHECK(error_of([] { sk_from_z(2, 0); }) == ErrorCode::InvalidArgument);
}
