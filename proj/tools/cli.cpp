#include "cli.hpp"

#include "vest/expr.hpp"
#include "vest/suites.hpp"

#include <algorithm>
#include <regex>

namespace vest::cli {

namespace {

// highest i among variables named <prefix><i>_<j>
int highest_index(const std::vector<MultiPoly> &values, char prefix, int dim)
{
	static const std::regex slot(R"(([gm])(\d+)_(\d+))");
	int top = 0;
	for (auto &f : values)
		for (auto &v : f.support()) {
			std::smatch m;
			if (!std::regex_match(v, m, slot) || m[1].str()[0] != prefix)
				throw UnknownVariable(v + " is not a cochain variable here");
			int i = std::stoi(m[2]), j = std::stoi(m[3]);
			if (j < 1 || j > dim || i < (prefix == 'g' ? 1 : 0))
				throw UnknownVariable(v + " is out of range for dimension " + std::to_string(dim));
			top = std::max(top, i);
		}
	return top;
}

} // namespace

std::vector<InstanceInfo> instances()
{
	std::vector<InstanceInfo> out;
	for (auto &g : registered_groups())
		out.push_back({g, "van Est double complex of the group " + g});
	for (int n = 1; n <= 3; ++n)
		out.push_back({"pair-r" + std::to_string(n),
		               "pair groupoid of R^" + std::to_string(n) + " (Alexander-Spanier)"});
	out.push_back({"cech-circle3", "Cech-de Rham complex of a three-arc circle cover"});
	out.push_back({"matrix", "random finite-dimensional matrix double complex"});
	return out;
}

bool is_group_instance(const std::string &name)
{
	auto g = registered_groups();
	return std::find(g.begin(), g.end(), name) != g.end();
}

std::optional<int> pair_dimension(const std::string &name)
{
	for (int n = 1; n <= 3; ++n)
		if (name == "pair-r" + std::to_string(n))
			return n;
	return std::nullopt;
}

void validate(const RunConfig &cfg)
{
	auto all = instances();
	if (std::none_of(all.begin(), all.end(), [&](auto &i) { return i.name == cfg.instance; }))
		throw ConfigError("unknown instance '" + cfg.instance + "'");
	if (cfg.max_p < 0 || cfg.max_p > 4)
		throw ConfigError("--max-p must lie in [0, 4]");
	if (cfg.max_deg < 1)
		throw ConfigError("--max-deg must be positive");
	if (cfg.trials < 1)
		throw ConfigError("--trials must be positive");
	if (cfg.coeff_rep != "trivial" && !is_group_instance(cfg.instance))
		throw ConfigError("--coeff-rep applies to group instances only");
	if (is_group_instance(cfg.instance)) {
		try {
			rep_by_name(group_by_name(cfg.instance), cfg.coeff_rep);
		} catch (const UnknownInstance &e) {
			throw ConfigError(e.what());
		}
	}
}

Report run_verify(const RunConfig &cfg)
{
	validate(cfg);
	SuiteOptions opt;
	opt.max_p = cfg.max_p;
	opt.max_deg = cfg.max_deg;
	opt.trials = cfg.trials;
	opt.seed = cfg.seed;
	if (is_group_instance(cfg.instance)) {
		auto g = group_by_name(cfg.instance);
		return group_suite(VanEstComplex(g, rep_by_name(g, cfg.coeff_rep)), opt);
	}
	if (auto n = pair_dimension(cfg.instance))
		return pair_suite(*n, opt);
	if (cfg.instance == "cech-circle3") {
		opt.max_p = std::min(opt.max_p, 1);
		return cech_suite(CechComplex(CircleCover::three_arcs()), opt);
	}
	return matrix_suite(MatrixComplex::random(cfg.seed), opt);
}

nlohmann::json report_json(const RunConfig &cfg, const Report &rep)
{
	nlohmann::json checks = nlohmann::json::array();
	for (auto &c : rep.checks) {
		nlohmann::json j{{"instance", c.instance},
		                 {"check", c.check},
		                 {"bidegree", nullptr},
		                 {"status", c.status()},
		                 {"trials", c.trials},
		                 {"seed", c.seed},
		                 {"counterexample", c.counterexample}};
		if (c.bidegree)
			j["bidegree"] = {c.bidegree->p, c.bidegree->q};
		if (!c.trace.empty()) {
			nlohmann::json steps = nlohmann::json::array();
			for (auto &s : c.trace)
				steps.push_back({{"op", s.op}, {"bidegree", {s.at.p, s.at.q}}, {"element", s.snapshot}});
			j["trace"] = steps;
		}
		checks.push_back(std::move(j));
	}
	return {{"schema_version", report_schema_version},
	        {"config",
	         {{"instance", cfg.instance},
	          {"max_p", cfg.max_p},
	          {"max_deg", cfg.max_deg},
	          {"trials", cfg.trials},
	          {"seed", cfg.seed},
	          {"coeff_rep", cfg.coeff_rep}}},
	        {"ok", rep.ok()},
	        {"checks", checks}};
}

std::string apply_map(const RunConfig &cfg, MapKind map, const std::string &input,
                      std::optional<int> degree)
{
	validate(cfg);
	if (is_group_instance(cfg.instance)) {
		auto g = group_by_name(cfg.instance);
		auto rep = rep_by_name(g, cfg.coeff_rep);
		if (map == MapKind::integrate) {
			auto alpha = parse_ce(input, g->algebra_ptr(), rep->dim());
			if (degree && *degree != alpha.degree())
				throw DegreeMismatch("input has degree " + std::to_string(alpha.degree()));
			return r_closed(VanEstComplex(g, rep), alpha).str();
		}
		auto e = parse_expr(input);
		if (e.has_atoms())
			throw DegreeMismatch("ve expects a cochain, not a form");
		auto values = e.to_poly_vector();
		if (static_cast<int>(values.size()) != rep->dim())
			throw DegreeMismatch("cochain has " + std::to_string(values.size()) +
			                     " components, representation has " + std::to_string(rep->dim()));
		int top = highest_index(values, 'g', g->dim());
		int p = degree.value_or(top);
		if (p < top)
			throw DegreeMismatch("cochain uses slot " + std::to_string(top) + " but degree is " +
			                     std::to_string(p));
		return ve_closed(GroupCochain{g, rep, p, values}).str();
	}
	if (auto n = pair_dimension(cfg.instance)) {
		if (map == MapKind::integrate) {
			auto alpha = parse_form(input, pair_chart(*n));
			if (degree && *degree != alpha.degree())
				throw DegreeMismatch("input has degree " + std::to_string(alpha.degree()));
			return pair_r(alpha).value.str();
		}
		auto f = parse_poly(input);
		int top = highest_index({f}, 'm', *n);
		int p = degree.value_or(top);
		if (p < top)
			throw DegreeMismatch("cochain uses point " + std::to_string(top) + " but degree is " +
			                     std::to_string(p));
		return pair_ve(ASCochain{*n, p, f}).str();
	}
	throw ConfigError("maps are defined for group and pair instances only");
}

} // namespace vest::cli
