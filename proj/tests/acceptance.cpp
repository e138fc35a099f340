#include "vest/suites.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace vest;

namespace {

const std::vector<std::string> groups{"abelian-2", "abelian-3", "heisenberg3", "filiform4"};

VanEstComplex trivial_complex(const std::string &name)
{
	auto g = group_by_name(name);
	return VanEstComplex(g, PolyRep::trivial(g));
}

struct Outcome {
	bool ok = true;
	std::string detail;

	void take(const CheckResult &c)
	{
		if (ok && !c.ok()) {
			ok = false;
			detail = c.instance + " " + c.check + (c.bidegree ? " " + c.bidegree->str() : "") + " [" +
			         c.status() + "] " + c.counterexample;
		}
	}
	void take(const Report &r)
	{
		for (auto &c : r.checks)
			take(c);
	}
	void require(bool cond, const std::string &why)
	{
		if (ok && !cond) {
			ok = false;
			detail = why;
		}
	}
};

int count_checks(const Report &r, const std::string &name, int min_trials)
{
	int n = 0;
	for (auto &c : r.checks)
		if (c.check == name && c.trials >= min_trials)
			++n;
	return n;
}

Outcome perturbation_lemma()
{
	Outcome o;
	VerifyOptions vo;
	vo.max_p = 3;
	vo.max_q = 3;
	vo.trials = 25;
	auto mc = MatrixComplex::random(1);
	auto mrep = verify_instance(mc.instance(), mc.sampler(), vo);
	o.take(mrep);
	o.require(count_checks(mrep, "perturbed_homotopy", 25) == 16, "matrix bidegrees not all covered");

	SuiteOptions so;
	so.max_p = 2;
	so.trials = 25;
	auto grep = verify_group_instance(trivial_complex("heisenberg3"), so, 2);
	o.take(grep);
	o.require(count_checks(grep, "perturbed_homotopy", 25) == 9, "group bidegrees not all covered");
	return o;
}

Outcome ve_after_r()
{
	Outcome o;
	for (auto &g : groups) {
		auto cx = trivial_complex(g);
		for (int p = 0; p <= 3; ++p)
			o.take(ve_right_inverse(cx, p));
	}
	return o;
}

Outcome ve_closed_vs_zigzag()
{
	Outcome o;
	SuiteOptions so;
	so.trials = 50;
	so.max_deg = 2;
	for (auto &g : groups) {
		auto cx = trivial_complex(g);
		for (int p = 0; p <= 3; ++p) {
			auto c = ve_equivalence(cx, p, so);
			o.require(c.trials >= 50, "too few samples");
			o.take(c);
		}
	}
	return o;
}

Outcome r_closed_vs_zigzag()
{
	Outcome o;
	for (auto &g : groups) {
		auto cx = trivial_complex(g);
		for (int p = 0; p <= 3; ++p)
			o.take(r_equivalence(cx, p));
	}
	return o;
}

Outcome cochain_maps()
{
	Outcome o;
	SuiteOptions so;
	so.trials = 25;
	so.max_p = 2;
	for (auto &g : groups) {
		auto cx = trivial_complex(g);
		for (int p = 0; p <= 2; ++p) {
			o.take(ve_cochain_map(cx, p, so));
			o.take(r_cochain_map(cx, p, so));
		}
		auto rep = verify_group_instance(cx, so, std::min(2, cx.dim()));
		o.take(rep);
		for (auto name : {"d_squared", "delta_squared", "h_delta_homotopy", "k_d_homotopy", "side_h_k",
		                  "side_p_k"})
			o.require(count_checks(rep, name, 25) > 0, std::string("missing check ") + name);
	}
	return o;
}

Outcome pair_groupoid()
{
	Outcome o;
	SuiteOptions so;
	so.trials = 25;
	for (int n = 1; n <= 3; ++n)
		for (int p = 0; p <= std::min(n, 3); ++p) {
			o.take(pair_right_inverse(n, p, 2));
			o.take(pair_decomposable(n, p, so));
		}
	return o;
}

Outcome cech_circle()
{
	Outcome o;
	CechComplex cc(CircleCover::three_arcs());
	o.take(cech_winding(cc));
	auto w = cech_back_and_forth_witness(cc);
	o.take(w);
	o.require(w.counterexample.rfind("witness: ", 0) == 0, "no stored witness");
	return o;
}

Outcome normalized_subcomplex()
{
	Outcome o;
	SuiteOptions so;
	so.trials = 25;
	so.max_p = 3;
	for (auto &g : groups) {
		auto cx = trivial_complex(g);
		for (int p = 1; p <= 3; ++p)
			o.take(r_normalized(cx, p, so));
		auto rep = verify_group_instance(cx, so, std::min(2, cx.dim()));
		o.require(count_checks(rep, "side_h_h", 25) > 0 && count_checks(rep, "side_p_h", 25) > 0,
		          "normalized side checks missing");
		for (auto &c : rep.checks)
			if (c.check == "side_h_h" || c.check == "side_p_h")
				o.take(c);
	}
	return o;
}

Outcome intertwining_identities()
{
	Outcome o;
	SuiteOptions so;
	so.trials = 10;
	so.max_p = 3;
	auto rep = intertwining(trivial_complex("heisenberg3"), so);
	o.require(!rep.checks.empty(), "no intertwining checks");
	o.require(count_checks(rep, "lie_h_intertwining", 10) > 0, "Lie derivative identity not checked");
	o.take(rep);
	return o;
}

struct Criterion {
	int id;
	const char *label;
	double budget_s;
	std::function<Outcome()> run;
};

} // namespace

int main()
{
	const std::vector<Criterion> criteria{
	    {1, "perturbed homotopy on matrix and heisenberg3 instances", 10, perturbation_lemma},
	    {2, "VE after R is the identity on basis elements, p <= 3", 60, ve_after_r},
	    {3, "closed VE equals the zigzag on 50 cochains per degree", 120, ve_closed_vs_zigzag},
	    {4, "closed R equals the zigzag on basis elements, p <= 3", 60, r_closed_vs_zigzag},
	    {5, "cochain maps and double complex identities", 0, cochain_maps},
	    {6, "pair groupoid VE after R and the decomposable formula", 60, pair_groupoid},
	    {7, "circle collating and back-and-forth witness", 0, cech_circle},
	    {8, "normalized outputs and h h = 0, p h = 0", 0, normalized_subcomplex},
	    {9, "intertwining identities on heisenberg3", 0, intertwining_identities},
	};
	int failures = 0;
	for (auto &c : criteria) {
		auto start = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.run();
		} catch (const std::exception &e) {
			o.ok = false;
			o.detail = std::string("exception: ") + e.what();
		}
		double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
		if (o.ok && c.budget_s > 0 && secs > c.budget_s) {
			o.ok = false;
			o.detail = "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget";
		}
		std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.label, secs,
		            o.ok ? "" : " -- ", o.detail.c_str());
		std::fflush(stdout);
		if (!o.ok)
			++failures;
	}
	return failures == 0 ? 0 : 1;
}
