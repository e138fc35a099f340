#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace vest;

namespace {

std::string read_input(const std::string &path)
{
	if (path == "-") {
		std::stringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path);
	if (!in)
		throw ConfigError("cannot read " + path);
	std::stringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void print_summary(const Report &rep)
{
	int bad = 0;
	for (auto &c : rep.checks) {
		if (!c.ok())
			++bad;
		std::cout << c.status() << "  " << c.instance << "  " << c.check;
		if (c.bidegree)
			std::cout << " " << c.bidegree->str();
		std::cout << "  trials=" << c.trials << "\n";
		if (!c.ok() || !c.expect_pass)
			std::cout << "    " << c.counterexample << "\n";
	}
	std::cout << rep.checks.size() << " checks, " << bad << " unexpected\n";
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"vest: exact perturbation-lemma and van Est checks"};
	app.require_subcommand(1);

	cli::RunConfig cfg;
	auto add_common = [&](CLI::App *sub) {
		sub->add_option("--instance", cfg.instance, "instance name (see list-instances)")->required();
		sub->add_option("--coeff-rep", cfg.coeff_rep, "coefficient representation: trivial, adjoint, standard");
	};

	auto *verify = app.add_subcommand("verify", "run the verification suite of an instance");
	add_common(verify);
	verify->add_option("--max-p", cfg.max_p, "highest horizontal degree");
	verify->add_option("--max-deg", cfg.max_deg, "polynomial degree of random samples");
	verify->add_option("--trials", cfg.trials, "random samples per check and bidegree");
	verify->add_option("--seed", cfg.seed, "base seed");
	verify->add_option("--report", cfg.report_path, "write the JSON report here ('-' for stdout)");

	std::string input_path;
	std::optional<int> degree;
	auto add_map = [&](const char *name, const char *help) {
		auto *sub = app.add_subcommand(name, help);
		add_common(sub);
		sub->add_option("input", input_path, "expression file ('-' for stdin)")->required();
		sub->add_option("--degree", degree, "cochain degree (default: highest slot used)");
		return sub;
	};
	auto *ve = add_map("ve", "van Est differentiation of a group or Alexander-Spanier cochain");
	auto *integrate = add_map("integrate", "van Est integration of a Lie algebra or de Rham form");

	auto *list = app.add_subcommand("list-instances", "print the registered instances");

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		app.exit(e);
		return cli::exit_usage;
	}

	try {
		if (*list) {
			for (auto &i : cli::instances())
				std::cout << i.name << "\t" << i.description << "\n";
			return cli::exit_ok;
		}
		if (*verify) {
			auto rep = cli::run_verify(cfg);
			if (cfg.report_path == "-") {
				std::cout << cli::report_json(cfg, rep).dump(2) << "\n";
			} else {
				print_summary(rep);
				if (!cfg.report_path.empty()) {
					std::ofstream out(cfg.report_path);
					if (!out)
						throw ConfigError("cannot write " + cfg.report_path);
					out << cli::report_json(cfg, rep).dump(2) << "\n";
				}
			}
			return rep.ok() ? cli::exit_ok : cli::exit_check_failure;
		}
		auto kind = *ve ? cli::MapKind::ve : cli::MapKind::integrate;
		(void)integrate;
		std::cout << cli::apply_map(cfg, kind, read_input(input_path), degree) << "\n";
		return cli::exit_ok;
	} catch (const Error &e) {
		std::cerr << e.what() << "\n";
		return cli::exit_usage;
	}
}
