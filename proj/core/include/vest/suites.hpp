#pragma once

#include "vest/cech.hpp"
#include "vest/matrix_complex.hpp"
#include "vest/pairgpd.hpp"
#include "vest/vanest.hpp"

#include <cstdint>

namespace vest {

struct SuiteOptions {
	int max_p = 3;
	int max_deg = 2;
	int trials = 25;
	std::uint64_t seed = 1;
};

// Deterministic check over an enumerated case list; stops at the first failure.
template <class Case, class F>
CheckResult check_cases(const std::string &instance, const std::string &check,
                        std::optional<Bidegree> b, const std::vector<Case> &cases, F &&fn)
{
	std::vector<TrialOutcome> outcomes(cases.size());
	parallel_for(static_cast<int>(cases.size()), [&](int i) {
		try {
			outcomes[i] = fn(cases[i]);
		} catch (const std::exception &e) {
			outcomes[i] = std::string("exception: ") + e.what();
		}
	});
	CheckResult r;
	r.instance = instance;
	r.check = check;
	r.bidegree = b;
	r.trials = static_cast<int>(cases.size());
	for (size_t i = 0; i < cases.size(); ++i)
		if (outcomes[i]) {
			r.passed = false;
			r.counterexample = "case " + std::to_string(i) + ": " + *outcomes[i];
			break;
		}
	return r;
}

// CE basis elements e^I (x) v_c for |I| = p
std::vector<CEElement> ce_basis(const VanEstComplex &cx, int p);

// group instance
Report verify_group_instance(const VanEstComplex &cx, const SuiteOptions &opt, int max_q);
CheckResult ve_right_inverse(const VanEstComplex &cx, int p);
CheckResult ve_equivalence(const VanEstComplex &cx, int p, const SuiteOptions &opt);
CheckResult r_equivalence(const VanEstComplex &cx, int p);
CheckResult ve_cochain_map(const VanEstComplex &cx, int p, const SuiteOptions &opt);
CheckResult r_cochain_map(const VanEstComplex &cx, int p, const SuiteOptions &opt);
CheckResult r_normalized(const VanEstComplex &cx, int p, const SuiteOptions &opt);
Report intertwining(const VanEstComplex &cx, const SuiteOptions &opt);
Report group_suite(const VanEstComplex &cx, const SuiteOptions &opt);

// pair groupoid of R^n
std::vector<PolyForm> monomial_forms(int n, int p, int max_deg);
CheckResult pair_right_inverse(int n, int p, int max_deg);
CheckResult pair_r_equivalence(int n, int p, int max_deg);
CheckResult pair_ve_equivalence(int n, int p, const SuiteOptions &opt);
CheckResult pair_decomposable(int n, int p, const SuiteOptions &opt);
CheckResult pair_cochain_maps(int n, int p, const SuiteOptions &opt);
Report pair_suite(int n, const SuiteOptions &opt);

// Cech-de Rham on the circle
CechCochain winding_cocycle(const CechComplex &cc);
CheckResult cech_winding(const CechComplex &cc);
CheckResult cech_coboundary(const CechComplex &cc, const SuiteOptions &opt);
// composite on a global 1-form differs from the identity, with zero integral difference
CheckResult cech_back_and_forth_witness(const CechComplex &cc);
Report cech_suite(const CechComplex &cc, const SuiteOptions &opt);

// random matrix double complex
CheckResult matrix_neumann_dense(const MatrixComplex &mc, const SuiteOptions &opt);
Report matrix_suite(const MatrixComplex &mc, const SuiteOptions &opt);

} // namespace vest
