// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "jcas/config_file.hpp"
#include "jcas/error.hpp"

using namespace jcas;

TEST_CASE("values, comments and sections")
{
    const auto doc = parse_config(R"(# leading comment
top = 1

[alpha]
x = 2.5e3      # trailing comment
name = "has # inside"
flag = true
list = [1, 2.5, -3]
empty = []

[[item]]
k = 1
[[item]]
k = 2
)");
    REQUIRE(doc.sections.size() == 4);
    CHECK(doc.sections[0].name.empty());
    CHECK(doc.sections[0].number("top") == 1.0);
    const auto* a = doc.find("alpha");
    REQUIRE(a != nullptr);
    CHECK(a->number("x") == 2500.0);
    CHECK(a->text("name") == "has # inside");
    CHECK(std::get<bool>(a->values.at("flag")));
    CHECK(a->numbers("list") == std::vector<double>{1.0, 2.5, -3.0});
    CHECK(a->numbers("empty").empty());
    const auto items = doc.all("item");
    REQUIRE(items.size() == 2);
    CHECK(items[0]->array_item);
    CHECK(items[1]->number("k") == 2.0);
    CHECK(doc.find("missing") == nullptr);
}

TEST_CASE("typed accessors reject wrong kinds")
{
    const auto doc = parse_config("[s]\nn = 3\nf = 2.5\nneg = -1\nt = \"x\"\n");
    const auto& s = *doc.find("s");
    CHECK(s.count("n") == 3);
    CHECK_THROWS_AS(s.count("f"), ConfigError);
    CHECK_THROWS_AS(s.count("neg"), ConfigError);
    CHECK_THROWS_AS(s.number("t"), ConfigError);
    CHECK_THROWS_AS(s.text("n"), ConfigError);
    CHECK_THROWS_AS(s.number("absent"), ConfigError);
}

TEST_CASE("syntax errors carry a line number")
{
    for (const char* bad : {"[s]\nx\n", "[s]\nx = \n", "[s\n", "[]\n", "[s]\nx = \"open\n", "[s]\nx = [1, 2\n",
                            "[s]\nx = [1, \"a\"]\n", "[s]\nx = 1\nx = 2\n", "[s]\n[s]\n", "[s]\nx = 1 2\n",
                            "[s]\n = 3\n"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(parse_config(bad), ConfigError);
    }
    try {
        parse_config("[s]\nok = 1\n\nbroken\n");
        FAIL("expected a parse error");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("line 4") != std::string::npos);
    }
}

TEST_CASE("ofdm section overrides defaults")
{
    const auto doc = parse_config("[ofdm]\nn_sensing_freq = 240\nn_sensing_time = 240\nn_diag = 240\n"
                                  "carrier_freq_hz = 77e9\n");
    const auto cfg = ofdm_config_from(doc);
    CHECK(cfg.n_diag == 240);
    CHECK(cfg.carrier_freq == 77e9);
    CHECK(cfg.freq_spacing() == 14);
    CHECK(cfg.subcarrier_spacing == 120e3);

    CHECK(ofdm_config_from(parse_config("[scene]\nx = 1\n")) == OfdmConfig{});
    CHECK_THROWS_AS(ofdm_config_from(parse_config("[ofdm]\nbogus = 1\n")), ConfigError);
    CHECK_THROWS_AS(ofdm_config_from(parse_config("[ofdm]\nn_sensing_freq = 500\n")), ConfigError);
    CHECK_THROWS_AS(ofdm_config_from(parse_config("[ofdm]\nn_subcarriers = 2.5\n")), ConfigError);
}

TEST_CASE("missing file")
{
    CHECK_THROWS_AS(load_config("/nonexistent/file.toml"), ConfigError);
}
