#include <doctest.h>

#include <stdexcept>

#include "jscc/model.hpp"

using namespace jscc;

TEST_CASE("validate accepts an ordinary parameter set") {
    SourceModel model{1.0, 1.0, 0.3};
    ChannelSpec channel{10.0, 1.0};
    Allocation alloc{1.0, 2.0};
    CHECK(!validate(model, channel, alloc).has_value());
}

TEST_CASE("rho outside [-1, 1] is rejected by name") {
    CHECK_THROWS_WITH_AS(SourceModel(1.0, 1.0, 1.2), "rho out of range", std::invalid_argument);
    CHECK_THROWS_AS(SourceModel(1.0, 1.0, -1.0000001), std::invalid_argument);
    CHECK_NOTHROW(SourceModel(1.0, 1.0, -1.0));
    CHECK_NOTHROW(SourceModel(1.0, 1.0, 1.0));
}

TEST_CASE("pa above the power budget is a joint violation") {
    SourceModel model{1.0, 1.0, 0.3};
    ChannelSpec channel{10.0, 1.0};
    Allocation alloc{1.0, 11.0};  // constructible, pa bound needs the channel
    const auto err = validate(model, channel, alloc);
    REQUIRE(err.has_value());
    CHECK(*err == "pa exceeds power budget");
    CHECK_THROWS_AS(require_valid(model, channel, alloc), std::invalid_argument);
}

TEST_CASE("nonpositive variances are rejected") {
    CHECK_THROWS_AS(SourceModel(0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(SourceModel(1.0, -2.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelSpec(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelSpec(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(ChannelSpec(1.0, 1.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(Allocation(-0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(Allocation(0.5, -1.0), std::invalid_argument);
}

TEST_CASE("n_actual defaults to the design noise") {
    ChannelSpec channel{10.0, 2.0};
    CHECK(channel.n_actual == 2.0);
    CHECK(channel.matched());
    ChannelSpec worse{10.0, 1.0, 4.0};  // degradation studies are allowed
    CHECK(!worse.matched());
}

TEST_CASE("scheme tags round-trip through their names") {
    for (Scheme s : {Scheme::Uncoded, Scheme::NaiveDpc, Scheme::DigitalDpc, Scheme::Hda}) {
        CHECK(scheme_from_string(to_string(s)) == s);
    }
    CHECK(!scheme_from_string("analog").has_value());
}

TEST_CASE("cognitive config checks its own invariants") {
    CHECK_NOTHROW(CognitiveConfig(1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.0));
    CHECK_THROWS_AS(CognitiveConfig(0.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(CognitiveConfig(1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 1.5), std::invalid_argument);
    CHECK_THROWS_AS(CognitiveConfig(1.0, 1.0, 0.5, 0.5, 1.0, 1.0, 0.0, -1.0), std::invalid_argument);
}
