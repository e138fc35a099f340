#include "cli.hpp"
#include "vest/errors.hpp"
#include "vest/expr.hpp"
#include "vest/nilgroup.hpp"

#include <gtest/gtest.h>

using namespace vest;
using namespace vest::cli;

namespace {

RunConfig config(std::string instance)
{
	RunConfig cfg;
	cfg.instance = std::move(instance);
	return cfg;
}

} // namespace

TEST(CliConfig, Validation)
{
	EXPECT_NO_THROW(validate(config("heisenberg3")));
	EXPECT_NO_THROW(validate(config("pair-r3")));
	EXPECT_THROW(validate(config("nope")), ConfigError);
	auto bad = config("abelian-2");
	bad.max_p = -1;
	EXPECT_THROW(validate(bad), ConfigError);
	bad = config("abelian-2");
	bad.trials = 0;
	EXPECT_THROW(validate(bad), ConfigError);
	bad = config("abelian-2");
	bad.max_deg = 0;
	EXPECT_THROW(validate(bad), ConfigError);
	bad = config("abelian-2");
	bad.coeff_rep = "standard";
	EXPECT_THROW(validate(bad), ConfigError);
	bad = config("pair-r2");
	bad.coeff_rep = "adjoint";
	EXPECT_THROW(validate(bad), ConfigError);
	auto ok = config("heisenberg3");
	ok.coeff_rep = "standard";
	EXPECT_NO_THROW(validate(ok));
}

TEST(CliConfig, InstanceRegistry)
{
	std::vector<std::string> names;
	for (auto &i : instances())
		names.push_back(i.name);
	for (auto n : {"abelian-2", "abelian-3", "heisenberg3", "filiform4", "pair-r1", "pair-r2", "pair-r3",
	               "cech-circle3", "matrix"})
		EXPECT_NE(std::find(names.begin(), names.end(), n), names.end()) << n;
	EXPECT_TRUE(is_group_instance("filiform4"));
	EXPECT_FALSE(is_group_instance("pair-r2"));
	EXPECT_EQ(pair_dimension("pair-r2"), 2);
	EXPECT_FALSE(pair_dimension("matrix").has_value());
}

TEST(CliVerify, SmallRunsPass)
{
	for (auto name : {"abelian-2", "pair-r1", "cech-circle3", "matrix"}) {
		auto cfg = config(name);
		cfg.max_p = 1;
		cfg.trials = 3;
		auto rep = run_verify(cfg);
		EXPECT_TRUE(rep.ok()) << name;
	}
}

TEST(CliReport, SchemaAndDeterminism)
{
	auto cfg = config("cech-circle3");
	cfg.trials = 3;
	cfg.seed = 11;
	auto a = report_json(cfg, run_verify(cfg));
	auto b = report_json(cfg, run_verify(cfg));
	EXPECT_EQ(a.dump(), b.dump());
	EXPECT_EQ(a["schema_version"], report_schema_version);
	EXPECT_TRUE(a["ok"].get<bool>());
	ASSERT_TRUE(a["checks"].is_array());
	bool witness = false;
	for (auto &c : a["checks"]) {
		EXPECT_TRUE(c.contains("instance") && c.contains("check") && c.contains("status") &&
		            c.contains("seed") && c.contains("counterexample"));
		if (c["status"] == "expected-fail")
			witness = witness || !c["counterexample"].get<std::string>().empty();
	}
	EXPECT_TRUE(witness);
}

TEST(CliApplyMap, Examples)
{
	auto cfg = config("abelian-2");
	auto alg = group_by_name("abelian-2")->algebra_ptr();
	EXPECT_EQ(parse_ce(apply_map(cfg, MapKind::ve, "(g1_1*g2_2 - g1_2*g2_1) * 1/2"), alg),
	          parse_ce("e1/\\e2", alg));
	EXPECT_EQ(parse_poly(apply_map(cfg, MapKind::integrate, "e1/\\e2")),
	          parse_poly("(g1_1*g2_2 - g1_2*g2_1) * 1/2"));
	EXPECT_EQ(parse_ce(apply_map(cfg, MapKind::ve, "5", 0), alg), parse_ce("5", alg));

	auto pair = config("pair-r1");
	EXPECT_EQ(parse_poly(apply_map(pair, MapKind::integrate, "dy_1")), parse_poly("m1_1 - m0_1"));
	EXPECT_THROW(apply_map(cfg, MapKind::ve, "g1_1 ^"), ParseError);
}

TEST(CliApplyMap, RoundTrip)
{
	for (auto name : {"heisenberg3", "filiform4"}) {
		auto cfg = config(name);
		auto alg = group_by_name(name)->algebra_ptr();
		for (auto text : {"e1", "e1/\\e2 - 2*e3/\\e1", "e1/\\e2/\\e3"}) {
			auto f = apply_map(cfg, MapKind::integrate, text);
			auto back = apply_map(cfg, MapKind::ve, f, parse_ce(text, alg).degree());
			EXPECT_EQ(parse_ce(back, alg), parse_ce(text, alg)) << name << " " << text << " -> " << f;
		}
	}
}
