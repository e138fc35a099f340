#include "vest/suites.hpp"

#include <algorithm>

namespace vest {

namespace {

std::vector<int> trial_indices(int n)
{
	std::vector<int> v(n);
	for (int i = 0; i < n; ++i)
		v[i] = i;
	return v;
}

RatVector random_direction(Rng &rng, int n)
{
	RatVector xi(n);
	for (auto &c : xi)
		c = random_coefficient(rng);
	return xi;
}

std::string mismatch(const std::string &input, const std::string &lhs, const std::string &rhs)
{
	return "input " + input + " | lhs " + lhs + " | rhs " + rhs;
}

std::string group_label(const VanEstComplex &cx)
{
	return cx.group().name() + "/" + cx.rep_ptr()->name();
}

std::vector<std::string> fiber_names(int n)
{
	std::vector<std::string> v;
	for (int j = 1; j <= n; ++j)
		v.push_back(fiber_var(j));
	return v;
}

} // namespace

std::vector<CEElement> ce_basis(const VanEstComplex &cx, int p)
{
	std::vector<CEElement> out;
	for (auto &idx : index_subsets(cx.dim(), p))
		for (int c = 0; c < cx.vdim(); ++c)
			out.push_back(CEElement::basis(cx.group().algebra_ptr(), cx.vdim(), idx, c));
	return out;
}

Report verify_group_instance(const VanEstComplex &cx, const SuiteOptions &opt, int max_q)
{
	VerifyOptions vo;
	vo.max_p = opt.max_p;
	vo.max_q = max_q;
	vo.trials = opt.trials;
	vo.seed = opt.seed;
	return verify_instance(cx.instance(), cx.sampler(opt.max_deg), vo);
}

CheckResult ve_right_inverse(const VanEstComplex &cx, int p)
{
	return check_cases(group_label(cx), "ve_r_identity", Bidegree{p, 0}, ce_basis(cx, p),
	                   [&](const CEElement &a) -> TrialOutcome {
		                   auto back = ve_closed(r_closed(cx, a));
		                   if (back == a)
			                   return std::nullopt;
		                   return mismatch(a.str(), back.str(), a.str());
	                   });
}

CheckResult ve_equivalence(const VanEstComplex &cx, int p, const SuiteOptions &opt)
{
	return run_trials(group_label(cx), "ve_closed_vs_zigzag", Bidegree{p, 0}, opt.trials, opt.seed,
	                  [&](Rng &rng) -> TrialOutcome {
		                  auto f = cx.random_cochain(rng, p, opt.max_deg);
		                  auto a = ve_closed(f), b = ve_zigzag(cx, f);
		                  if (a == b)
			                  return std::nullopt;
		                  return mismatch(f.str(), a.str(), b.str());
	                  });
}

CheckResult r_equivalence(const VanEstComplex &cx, int p)
{
	return check_cases(group_label(cx), "r_closed_vs_zigzag", Bidegree{p, 0}, ce_basis(cx, p),
	                   [&](const CEElement &a) -> TrialOutcome {
		                   auto x = r_closed(cx, a), y = r_zigzag(cx, a);
		                   if (x == y)
			                   return std::nullopt;
		                   return mismatch(a.str(), x.str(), y.str());
	                   });
}

CheckResult ve_cochain_map(const VanEstComplex &cx, int p, const SuiteOptions &opt)
{
	const auto &rep = cx.rep_ptr()->infinitesimal();
	return run_trials(group_label(cx), "ve_cochain_map", Bidegree{p, 0}, opt.trials, opt.seed,
	                  [&](Rng &rng) -> TrialOutcome {
		                  auto f = cx.random_cochain(rng, p, opt.max_deg);
		                  auto lhs = ve_closed(group_delta(f));
		                  auto rhs = ce_diff(ve_closed(f), rep);
		                  if (lhs == rhs)
			                  return std::nullopt;
		                  return mismatch(f.str(), lhs.str(), rhs.str());
	                  });
}

CheckResult r_cochain_map(const VanEstComplex &cx, int p, const SuiteOptions &opt)
{
	const auto &rep = cx.rep_ptr()->infinitesimal();
	return run_trials(group_label(cx), "r_cochain_map", Bidegree{p, 0}, opt.trials, opt.seed,
	                  [&](Rng &rng) -> TrialOutcome {
		                  auto a = cx.random_ce(rng, p);
		                  auto lhs = r_closed(cx, ce_diff(a, rep));
		                  auto rhs = group_delta(r_closed(cx, a));
		                  if (lhs == rhs)
			                  return std::nullopt;
		                  return mismatch(a.str(), lhs.str(), rhs.str());
	                  });
}

CheckResult r_normalized(const VanEstComplex &cx, int p, const SuiteOptions &opt)
{
	auto cases = ce_basis(cx, p);
	Rng rng(derive_seed(opt.seed, "r-normalized", p));
	for (int t = 0; t < opt.trials; ++t)
		cases.push_back(cx.random_ce(rng, p));
	return check_cases(group_label(cx), "r_normalized", Bidegree{p, 0}, cases,
	                   [&](const CEElement &a) -> TrialOutcome {
		                   auto f = r_closed(cx, a);
		                   for (int slot = 1; slot <= p; ++slot) {
			                   auto u = insert_unit(f, slot);
			                   if (!u.is_zero())
				                   return "input " + a.str() + " | slot " + std::to_string(slot) +
				                          " | value " + u.str();
		                   }
		                   return std::nullopt;
	                   });
}

Report intertwining(const VanEstComplex &cx, const SuiteOptions &opt)
{
	Report rep;
	const std::string label = group_label(cx);
	const int n = cx.dim();
	for (int p = 1; p <= opt.max_p; ++p) {
		rep.add(run_trials(label, "j_intertwines_nabla", Bidegree{p, 0}, opt.trials, opt.seed,
		                   [&](Rng &rng) -> TrialOutcome {
			                   auto f = cx.random_cochain(rng, p, opt.max_deg);
			                   auto xi = random_direction(rng, n);
			                   for (int i = 0; i <= p; ++i) {
				                   auto lhs = cx.j_hat(nabla(i, xi, f));
				                   auto rhs = cx.nabla(i, xi, cx.j_hat(f));
				                   if (!(lhs == rhs))
					                   return "slot " + std::to_string(i) + " " +
					                          mismatch(f.str(), lhs.str(), rhs.str());
			                   }
			                   return std::nullopt;
		                   }));
		for (int q = 0; q <= std::min(2, n); ++q) {
			Bidegree b{p, q};
			auto sample = [&](Rng &rng) { return cx.random_element(rng, b, opt.max_deg); };
			rep.add(run_trials(label, "nabla_commutes", b, opt.trials, opt.seed,
			                   [&](Rng &rng) -> TrialOutcome {
				                   auto psi = sample(rng);
				                   auto xi = random_direction(rng, n);
				                   auto zeta = random_direction(rng, n);
				                   for (int i = 0; i <= p; ++i) {
					                   auto nab = [&](const BigradedElement &x) { return cx.nabla(i, xi, x); };
					                   if (q < n && !(cx.d(nab(psi)) == nab(cx.d(psi))))
						                   return "d, slot " + std::to_string(i) + ", element " + psi.str();
					                   if (q > 0 && !(cx.contract(nab(psi), zeta) == nab(cx.contract(psi, zeta))))
						                   return "contraction, slot " + std::to_string(i) + ", element " +
						                          psi.str();
					                   if (!(cx.lie_derivative(nab(psi), zeta) ==
					                         nab(cx.lie_derivative(psi, zeta))))
						                   return "Lie derivative, slot " + std::to_string(i) + ", element " +
						                          psi.str();
				                   }
				                   return std::nullopt;
			                   }));
			rep.add(run_trials(label, "h_intertwines_nabla", b, opt.trials, opt.seed,
			                   [&](Rng &rng) -> TrialOutcome {
				                   auto psi = sample(rng);
				                   auto xi = random_direction(rng, n);
				                   for (int i = 0; i < p; ++i) {
					                   auto lhs = cx.h(cx.nabla(i, xi, psi));
					                   auto rhs = cx.nabla(i, xi, cx.h(psi));
					                   if (!(lhs == rhs))
						                   return "slot " + std::to_string(i) + " " +
						                          mismatch(psi.str(), lhs.str(), rhs.str());
				                   }
				                   return std::nullopt;
			                   }));
			rep.add(run_trials(label, "lie_h_intertwining", b, opt.trials, opt.seed,
			                   [&](Rng &rng) -> TrialOutcome {
				                   auto psi = sample(rng);
				                   auto xi = random_direction(rng, n);
				                   auto lhs = cx.lie_derivative(cx.h(psi), xi);
				                   auto rhs = cx.h(cx.lie_derivative(psi, xi) - cx.nabla(p, xi, psi));
				                   if (lhs == rhs)
					                   return std::nullopt;
				                   return mismatch(psi.str(), lhs.str(), rhs.str());
			                   }));
		}
	}
	return rep;
}

Report group_suite(const VanEstComplex &cx, const SuiteOptions &opt)
{
	Report rep = verify_group_instance(cx, opt, std::min(opt.max_p, cx.dim()));
	for (int p = 0; p <= opt.max_p; ++p) {
		rep.add(ve_right_inverse(cx, p));
		rep.add(ve_equivalence(cx, p, opt));
		rep.add(r_equivalence(cx, p));
		rep.add(r_normalized(cx, p, opt));
		if (p < opt.max_p) {
			rep.add(ve_cochain_map(cx, p, opt));
			rep.add(r_cochain_map(cx, p, opt));
		}
	}
	rep.append(intertwining(cx, opt));
	return rep;
}

std::vector<PolyForm> monomial_forms(int n, int p, int max_deg)
{
	Chart ch = pair_chart(n);
	std::vector<MultiPoly> monos;
	std::vector<int> expo(n, 0);
	auto rec = [&](auto &&self, int j, int left) -> void {
		if (j == n) {
			std::vector<std::pair<std::string, int>> pw;
			for (int k = 0; k < n; ++k)
				if (expo[k])
					pw.emplace_back(fiber_var(k + 1), expo[k]);
			monos.push_back(MultiPoly::monomial(Rat(1), pw));
			return;
		}
		for (int e = 0; e <= left; ++e) {
			expo[j] = e;
			self(self, j + 1, left - e);
		}
		expo[j] = 0;
	};
	rec(rec, 0, max_deg);
	std::vector<PolyForm> out;
	for (auto &idx : index_subsets(n, p))
		for (auto &m : monos) {
			PolyForm a(ch, p);
			a.add(idx, m);
			out.push_back(a);
		}
	return out;
}

CheckResult pair_right_inverse(int n, int p, int max_deg)
{
	return check_cases("pair-r" + std::to_string(n), "pair_ve_r_identity", Bidegree{p, 0},
	                   monomial_forms(n, p, max_deg), [](const PolyForm &a) -> TrialOutcome {
		                   auto back = pair_ve(pair_r(a));
		                   if (back == a)
			                   return std::nullopt;
		                   return mismatch(a.str(), back.str(), a.str());
	                   });
}

CheckResult pair_r_equivalence(int n, int p, int max_deg)
{
	return check_cases("pair-r" + std::to_string(n), "pair_r_closed_vs_zigzag", Bidegree{p, 0},
	                   monomial_forms(n, p, max_deg), [](const PolyForm &a) -> TrialOutcome {
		                   auto x = pair_r(a), y = pair_r_zigzag(a);
		                   if (x.value == y.value)
			                   return std::nullopt;
		                   return mismatch(a.str(), x.value.str(), y.value.str());
	                   });
}

CheckResult pair_ve_equivalence(int n, int p, const SuiteOptions &opt)
{
	auto sampler = pair_sampler(n, opt.max_deg);
	return run_trials("pair-r" + std::to_string(n), "pair_ve_closed_vs_zigzag", Bidegree{p, 0},
	                  opt.trials, opt.seed, [&](Rng &rng) -> TrialOutcome {
		                  auto f = sampler.y(p, rng);
		                  auto a = pair_ve(f), b = pair_ve_zigzag(f);
		                  if (a == b)
			                  return std::nullopt;
		                  return mismatch(f.value.str(), a.str(), b.str());
	                  });
}

CheckResult pair_decomposable(int n, int p, const SuiteOptions &opt)
{
	auto names = fiber_names(n);
	return run_trials("pair-r" + std::to_string(n), "pair_ve_decomposable", Bidegree{p, 0},
	                  opt.trials, opt.seed, [&](Rng &rng) -> TrialOutcome {
		                  std::vector<MultiPoly> factors;
		                  for (int i = 0; i <= p; ++i)
			                  factors.push_back(random_poly(rng, names, opt.max_deg, 3));
		                  auto f = decomposable(n, factors);
		                  auto a = pair_ve(f), b = pair_ve_decomposable(n, factors);
		                  if (a == b)
			                  return std::nullopt;
		                  return mismatch(f.value.str(), a.str(), b.str());
	                  });
}

CheckResult pair_cochain_maps(int n, int p, const SuiteOptions &opt)
{
	auto sampler = pair_sampler(n, opt.max_deg);
	return run_trials("pair-r" + std::to_string(n), "pair_cochain_maps", Bidegree{p, 0}, opt.trials,
	                  opt.seed, [&](Rng &rng) -> TrialOutcome {
		                  auto f = sampler.y(p, rng);
		                  auto lhs = pair_ve(as_delta(f)), rhs = exterior_d(pair_ve(f));
		                  if (!(lhs == rhs))
			                  return "ve: " + mismatch(f.value.str(), lhs.str(), rhs.str());
		                  auto a = sampler.x(p, rng);
		                  auto l2 = pair_r(exterior_d(a)), r2 = as_delta(pair_r(a));
		                  if (!(l2.value == r2.value))
			                  return "r: " + mismatch(a.str(), l2.value.str(), r2.value.str());
		                  return std::nullopt;
	                  });
}

Report pair_suite(int n, const SuiteOptions &opt)
{
	VerifyOptions vo;
	vo.max_p = opt.max_p;
	vo.max_q = n;
	vo.trials = opt.trials;
	vo.seed = opt.seed;
	Report rep = verify_instance(pair_instance(n), pair_sampler(n, opt.max_deg), vo);
	for (int p = 0; p <= std::min(opt.max_p, n); ++p) {
		rep.add(pair_right_inverse(n, p, opt.max_deg));
		rep.add(pair_r_equivalence(n, p, opt.max_deg));
	}
	for (int p = 0; p <= opt.max_p; ++p) {
		rep.add(pair_ve_equivalence(n, p, opt));
		rep.add(pair_decomposable(n, p, opt));
		rep.add(pair_cochain_maps(n, p, opt));
	}
	return rep;
}

CechCochain winding_cocycle(const CechComplex &cc)
{
	// c_{last,0} = 1, stored on the sorted edge
	CechCochain c;
	c.p = 1;
	c.add(IndexSet{0, cc.cover().size() - 1}, Rat(-1));
	return c;
}

CheckResult cech_winding(const CechComplex &cc)
{
	std::vector<CechCochain> cases{winding_cocycle(cc)};
	return check_cases("cech-circle3", "collate_winding", Bidegree{1, 0}, cases,
	                   [&](const CechCochain &c) -> TrialOutcome {
		                   auto w = cc.collate(c);
		                   Rat total = circle_integral(w);
		                   if (total == Rat(1))
			                   return std::nullopt;
		                   return "cocycle " + c.str() + " | collated " + w.str() + " | integral " +
		                          total.str();
	                   });
}

CheckResult cech_coboundary(const CechComplex &cc, const SuiteOptions &opt)
{
	return run_trials("cech-circle3", "collate_coboundary", Bidegree{1, 0}, opt.trials, opt.seed,
	                  [&](Rng &rng) -> TrialOutcome {
		                  auto c = cc.cochain_delta(cc.random_cochain(rng, 0));
		                  auto w = cc.collate(c);
		                  Rat total = circle_integral(w);
		                  if (total.is_zero())
			                  return std::nullopt;
		                  return "cocycle " + c.str() + " | integral " + total.str();
	                  });
}

CheckResult cech_back_and_forth_witness(const CechComplex &cc)
{
	std::vector<CircleForm> cases{CircleForm{1, PwPoly(Rat(1))}};
	auto r = check_cases("cech-circle3", "back_and_forth_witness", Bidegree{0, 1}, cases,
	                     [&](const CircleForm &a) -> TrialOutcome {
		                     auto back = cc.collate(cc.cech_image(a));
		                     if (back == a)
			                     return "composite is the identity on " + a.str();
		                     Rat diff = circle_integral(back - a);
		                     if (!diff.is_zero())
			                     return "difference has integral " + diff.str();
		                     return std::nullopt;
	                     });
	if (r.passed)
		r.counterexample = "witness: " + cases[0].str() + " -> " +
		                   cc.collate(cc.cech_image(cases[0])).str();
	return r;
}

Report cech_suite(const CechComplex &cc, const SuiteOptions &opt)
{
	VerifyOptions vo;
	vo.max_p = opt.max_p;
	vo.max_q = 1;
	vo.trials = opt.trials;
	vo.seed = opt.seed;
	vo.side_conditions_hold = false;
	Report rep = verify_instance(cc.instance(), cc.sampler(opt.max_deg), vo);
	rep.add(cech_winding(cc));
	rep.add(cech_coboundary(cc, opt));
	rep.add(cech_back_and_forth_witness(cc));
	return rep;
}

CheckResult matrix_neumann_dense(const MatrixComplex &mc, const SuiteOptions &opt)
{
	auto inst = mc.instance();
	auto sampler = mc.sampler();
	std::vector<Bidegree> blocks;
	for (int p = 0; p <= mc.top(); ++p)
		for (int q = 0; q <= mc.top(); ++q)
			blocks.push_back({p, q});
	return check_cases(inst.name, "neumann_dense", std::nullopt, blocks,
	                   [&](Bidegree b) -> TrialOutcome {
		                   for (int t : trial_indices(opt.trials)) {
			                   Rng rng(derive_seed(opt.seed, "neumann-dense", b.p, b.q, t));
			                   auto x = sampler.element(b, rng);
			                   auto lhs = neumann_apply(inst, Direction::Horizontal, b, x);
			                   auto rhs = mc.dense_neumann(x);
			                   if (!tot_equal(lhs, rhs))
				                   return mismatch(x.str(), tot_str(lhs), tot_str(rhs));
		                   }
		                   return std::nullopt;
	                   });
}

Report matrix_suite(const MatrixComplex &mc, const SuiteOptions &opt)
{
	VerifyOptions vo;
	vo.max_p = std::min(opt.max_p, mc.top());
	vo.max_q = mc.top();
	vo.trials = opt.trials;
	vo.seed = opt.seed;
	Report rep = verify_instance(mc.instance(), mc.sampler(), vo);
	rep.add(matrix_neumann_dense(mc, opt));
	return rep;
}

} // namespace vest
