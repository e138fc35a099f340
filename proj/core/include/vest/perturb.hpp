#pragma once

#include "vest/errors.hpp"
#include "vest/parallel.hpp"
#include "vest/sampling.hpp"

#include <climits>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vest {

struct Bidegree {
	int p = 0;
	int q = 0;
	friend auto operator<=>(const Bidegree &, const Bidegree &) = default;
	std::string str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

struct TraceStep {
	std::string op;
	Bidegree at;
	std::string snapshot;
};
using ZigzagTrace = std::vector<TraceStep>;

// Operators act on elements of a definite bidegree. Element types must provide
// is_zero(), +=, binary +/-, unary -, == and str().
template <class D, class X, class Y> struct DoubleComplexInstance {
	using Element = D;
	using XElement = X;
	using YElement = Y;

	std::string name;
	// the complex vanishes beyond these bidegrees
	int max_p = INT_MAX;
	int max_q = INT_MAX;

	std::function<D(Bidegree, const D &)> d;     // (p,q) -> (p,q+1)
	std::function<D(Bidegree, const D &)> delta; // (p,q) -> (p+1,q)
	std::function<D(Bidegree, const D &)> h;     // (p,q) -> (p-1,q), p >= 1
	std::function<X(int, const D &)> p_hat;      // (0,q) -> X^q
	std::function<D(int, const X &)> i_hat;      // X^q -> (0,q)
	std::function<X(int)> zero_x;

	std::function<D(Bidegree, const D &)> k; // (p,q) -> (p,q-1), q >= 1; optional
	std::function<Y(int, const D &)> q_hat;  // (p,0) -> Y^p
	std::function<D(int, const Y &)> j_hat;  // Y^p -> (p,0)
	std::function<Y(int)> zero_y;

	bool has_vertical_inclusion() const { return static_cast<bool>(j_hat); }
	bool has_vertical_homotopy() const { return static_cast<bool>(k); }
};

template <class D> using Tot = std::map<Bidegree, D>;

template <class D> void tot_add(Tot<D> &t, Bidegree b, const D &x)
{
	if (x.is_zero())
		return;
	auto it = t.find(b);
	if (it == t.end()) {
		t.emplace(b, x);
		return;
	}
	it->second += x;
	if (it->second.is_zero())
		t.erase(it);
}

template <class D> void tot_add(Tot<D> &t, const Tot<D> &o)
{
	for (auto &[b, x] : o)
		tot_add(t, b, x);
}

template <class D> Tot<D> tot_neg(Tot<D> t)
{
	for (auto &[b, x] : t)
		x = -x;
	return t;
}

template <class D> bool tot_equal(const Tot<D> &a, const Tot<D> &b)
{
	for (auto &[k, v] : a) {
		auto it = b.find(k);
		if (it == b.end() ? !v.is_zero() : !(v == it->second))
			return false;
	}
	for (auto &[k, v] : b)
		if (!a.count(k) && !v.is_zero())
			return false;
	return true;
}

template <class D> std::string tot_str(const Tot<D> &t)
{
	if (t.empty())
		return "0";
	std::string out;
	for (auto &[b, x] : t)
		out += (out.empty() ? "" : "; ") + b.str() + ": " + x.str();
	return out;
}

template <class D> Tot<D> tot_single(Bidegree b, const D &x)
{
	Tot<D> t;
	tot_add(t, b, x);
	return t;
}

enum class Direction { Horizontal, Vertical };

namespace detail {

template <class I, class D>
std::optional<D> apply_d(const I &inst, Bidegree b, const D &x)
{
	if (b.q + 1 > inst.max_q || x.is_zero())
		return std::nullopt;
	return inst.d(b, x);
}

template <class I, class D>
std::optional<D> apply_delta(const I &inst, Bidegree b, const D &x)
{
	if (b.p + 1 > inst.max_p || x.is_zero())
		return std::nullopt;
	return inst.delta(b, x);
}

template <class I, class D>
std::optional<D> apply_h(const I &inst, Bidegree b, const D &x)
{
	if (b.p == 0 || x.is_zero())
		return std::nullopt;
	return inst.h(b, x);
}

template <class I, class D>
std::optional<D> apply_k(const I &inst, Bidegree b, const D &x)
{
	if (b.q == 0 || x.is_zero() || !inst.k)
		return std::nullopt;
	return inst.k(b, x);
}

} // namespace detail

template <class I> using ElemOf = typename I::Element;

template <class I> Tot<ElemOf<I>> tot_d(const I &inst, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r;
	for (auto &[b, x] : t)
		if (auto y = detail::apply_d(inst, b, x))
			tot_add(r, Bidegree{b.p, b.q + 1}, *y);
	return r;
}

template <class I> Tot<ElemOf<I>> tot_delta(const I &inst, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r;
	for (auto &[b, x] : t)
		if (auto y = detail::apply_delta(inst, b, x))
			tot_add(r, Bidegree{b.p + 1, b.q}, *y);
	return r;
}

template <class I> Tot<ElemOf<I>> tot_h(const I &inst, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r;
	for (auto &[b, x] : t)
		if (auto y = detail::apply_h(inst, b, x))
			tot_add(r, Bidegree{b.p - 1, b.q}, *y);
	return r;
}

template <class I> Tot<ElemOf<I>> tot_k(const I &inst, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r;
	for (auto &[b, x] : t)
		if (auto y = detail::apply_k(inst, b, x))
			tot_add(r, Bidegree{b.p, b.q - 1}, *y);
	return r;
}

template <class I> Tot<ElemOf<I>> tot_total_diff(const I &inst, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r = tot_d(inst, t);
	tot_add(r, tot_delta(inst, t));
	return r;
}

// (1+dh)^{-1} x (Horizontal) or (1+delta k)^{-1} x (Vertical) as a finite sum
template <class I>
Tot<ElemOf<I>> neumann_apply(const I &inst, Direction dir, Bidegree b, const ElemOf<I> &x,
                             ZigzagTrace *trace = nullptr)
{
	using D = ElemOf<I>;
	Tot<D> out;
	D cur = x;
	Bidegree at = b;
	const int bound = (dir == Direction::Horizontal ? b.p : b.q) + 1;
	int terms = 0;
	while (!cur.is_zero()) {
		if (++terms > bound)
			throw NonTermination("Neumann series exceeded " + std::to_string(bound) + " terms");
		tot_add(out, at, cur);
		if (dir == Direction::Horizontal) {
			auto hx = detail::apply_h(inst, at, cur);
			if (!hx)
				break;
			Bidegree hb{at.p - 1, at.q};
			if (trace)
				trace->push_back({"h", hb, hx->str()});
			auto dhx = detail::apply_d(inst, hb, *hx);
			if (!dhx)
				break;
			at = Bidegree{at.p - 1, at.q + 1};
			if (trace)
				trace->push_back({"d", at, dhx->str()});
			cur = -*dhx;
		} else {
			auto kx = detail::apply_k(inst, at, cur);
			if (!kx)
				break;
			Bidegree kb{at.p, at.q - 1};
			if (trace)
				trace->push_back({"k", kb, kx->str()});
			auto dkx = detail::apply_delta(inst, kb, *kx);
			if (!dkx)
				break;
			at = Bidegree{at.p + 1, at.q - 1};
			if (trace)
				trace->push_back({"delta", at, dkx->str()});
			cur = -*dkx;
		}
	}
	return out;
}

template <class I>
Tot<ElemOf<I>> tot_neumann(const I &inst, Direction dir, const Tot<ElemOf<I>> &t)
{
	Tot<ElemOf<I>> r;
	for (auto &[b, x] : t)
		tot_add(r, neumann_apply(inst, dir, b, x));
	return r;
}

// h' = h (1+dh)^{-1}
template <class I> Tot<ElemOf<I>> tot_h_prime(const I &inst, const Tot<ElemOf<I>> &t)
{
	return tot_h(inst, tot_neumann(inst, Direction::Horizontal, t));
}

// p' = p (1+dh)^{-1}, landing in X^n for total degree n
template <class I>
typename I::XElement p_prime(const I &inst, int n, const Tot<ElemOf<I>> &t)
{
	auto nt = tot_neumann(inst, Direction::Horizontal, t);
	auto it = nt.find(Bidegree{0, n});
	return it == nt.end() ? inst.zero_x(n) : inst.p_hat(n, it->second);
}

template <class I>
typename I::XElement zigzag_xy(const I &inst, int p, const typename I::YElement &y,
                               ZigzagTrace *trace = nullptr)
{
	if (!inst.j_hat)
		throw Error("instance " + inst.name + " has no vertical inclusion");
	auto x = inst.j_hat(p, y);
	if (trace)
		trace->push_back({"j", Bidegree{p, 0}, x.str()});
	auto nt = neumann_apply(inst, Direction::Horizontal, Bidegree{p, 0}, x, trace);
	auto it = nt.find(Bidegree{0, p});
	auto out = it == nt.end() ? inst.zero_x(p) : inst.p_hat(p, it->second);
	if (trace)
		trace->push_back({"p", Bidegree{0, p}, out.str()});
	return out;
}

template <class I>
typename I::YElement zigzag_yx(const I &inst, int p, const typename I::XElement &x,
                               ZigzagTrace *trace = nullptr)
{
	if (!inst.k || !inst.q_hat)
		throw Error("instance " + inst.name + " has no vertical homotopy");
	auto d = inst.i_hat(p, x);
	if (trace)
		trace->push_back({"i", Bidegree{0, p}, d.str()});
	auto nt = neumann_apply(inst, Direction::Vertical, Bidegree{0, p}, d, trace);
	auto it = nt.find(Bidegree{p, 0});
	auto out = it == nt.end() ? inst.zero_y(p) : inst.q_hat(p, it->second);
	if (trace)
		trace->push_back({"q", Bidegree{p, 0}, out.str()});
	return out;
}

struct CheckResult {
	std::string instance;
	std::string check;
	std::optional<Bidegree> bidegree;
	bool expect_pass = true;
	bool passed = true;
	int trials = 0;
	std::uint64_t seed = 0;
	std::string counterexample;
	ZigzagTrace trace;

	bool ok() const { return passed == expect_pass; }
	std::string status() const
	{
		if (expect_pass)
			return passed ? "pass" : "fail";
		return passed ? "unexpected-pass" : "expected-fail";
	}
};

struct Report {
	std::vector<CheckResult> checks;

	bool ok() const
	{
		for (auto &c : checks)
			if (!c.ok())
				return false;
		return true;
	}
	void append(const Report &o) { checks.insert(checks.end(), o.checks.begin(), o.checks.end()); }
	void add(CheckResult c) { checks.push_back(std::move(c)); }
};

// nullopt means the trial passed; otherwise a description of the counterexample
using TrialOutcome = std::optional<std::string>;

template <class F>
CheckResult run_trials(const std::string &instance, const std::string &check,
                       std::optional<Bidegree> b, int trials, std::uint64_t seed, F &&trial)
{
	std::vector<TrialOutcome> outcomes(trials);
	parallel_for(trials, [&](int t) {
		Rng rng(derive_seed(seed, instance + "/" + check, b ? b->p : -1, b ? b->q : -1, t));
		try {
			outcomes[t] = trial(rng);
		} catch (const std::exception &e) {
			outcomes[t] = std::string("exception: ") + e.what();
		}
	});
	CheckResult r;
	r.instance = instance;
	r.check = check;
	r.bidegree = b;
	r.trials = trials;
	r.seed = seed;
	for (int t = 0; t < trials; ++t)
		if (outcomes[t]) {
			r.passed = false;
			r.counterexample = "trial " + std::to_string(t) + ": " + *outcomes[t];
			break;
		}
	return r;
}

// Folds per-bidegree results of a check that is expected to fail somewhere.
inline CheckResult expect_failure(const std::vector<CheckResult> &parts, std::string instance,
                                  std::string check)
{
	CheckResult r;
	r.instance = std::move(instance);
	r.check = std::move(check);
	r.expect_pass = false;
	for (auto &p : parts) {
		r.trials += p.trials;
		r.seed = p.seed;
		if (!p.passed && r.passed) {
			r.passed = false;
			r.bidegree = p.bidegree;
			r.counterexample = p.counterexample;
		}
	}
	return r;
}

template <class D, class X, class Y> struct Sampler {
	std::function<D(Bidegree, Rng &)> element;
	std::function<X(int, Rng &)> x;
	std::function<Y(int, Rng &)> y;
	// elements of the normalized subcomplex, where h h = 0 and p h = 0
	std::function<D(Bidegree, Rng &)> normalized;
};

struct VerifyOptions {
	int max_p = 2;
	int max_q = 2;
	int trials = 25;
	std::uint64_t seed = 1;
	// the instance claims h k = 0 and p k = 0
	bool side_conditions_hold = true;
};

template <class D> TrialOutcome compare_tot(const Tot<D> &x, const Tot<D> &lhs, const Tot<D> &rhs)
{
	if (tot_equal(lhs, rhs))
		return std::nullopt;
	return "element " + tot_str(x) + " | lhs " + tot_str(lhs) + " | rhs " + tot_str(rhs);
}

template <class D, class X, class Y>
Report verify_instance(const DoubleComplexInstance<D, X, Y> &inst, const Sampler<D, X, Y> &sampler,
                       const VerifyOptions &opt)
{
	Report rep;
	const int pmax = std::min(opt.max_p, inst.max_p);
	const int qmax = std::min(opt.max_q, inst.max_q);
	const bool vertical = inst.has_vertical_homotopy() && inst.has_vertical_inclusion();
	auto sample = [&](Bidegree b, Rng &rng) { return tot_single(b, sampler.element(b, rng)); };

	std::vector<CheckResult> side_hk, side_pk, back_forth;
	for (int p = 0; p <= pmax; ++p)
		for (int q = 0; q <= qmax; ++q) {
			Bidegree b{p, q};
			auto trial = [&](std::string name, auto &&body) {
				rep.add(run_trials(inst.name, name, b, opt.trials, opt.seed, body));
			};
			trial("d_squared", [&](Rng &rng) {
				auto x = sample(b, rng);
				return compare_tot(x, tot_d(inst, tot_d(inst, x)), Tot<D>{});
			});
			trial("delta_squared", [&](Rng &rng) {
				auto x = sample(b, rng);
				return compare_tot(x, tot_delta(inst, tot_delta(inst, x)), Tot<D>{});
			});
			trial("d_delta_anticommute", [&](Rng &rng) {
				auto x = sample(b, rng);
				auto lhs = tot_d(inst, tot_delta(inst, x));
				tot_add(lhs, tot_delta(inst, tot_d(inst, x)));
				return compare_tot(x, lhs, Tot<D>{});
			});
			trial("h_delta_homotopy", [&](Rng &rng) {
				auto x = sample(b, rng);
				auto lhs = tot_h(inst, tot_delta(inst, x));
				tot_add(lhs, tot_delta(inst, tot_h(inst, x)));
				auto rhs = x;
				if (p == 0 && x.count(b))
					tot_add(rhs, b, -inst.i_hat(q, inst.p_hat(q, x.at(b))));
				return compare_tot(x, lhs, rhs);
			});
			trial("perturbed_homotopy", [&](Rng &rng) {
				auto x = sample(b, rng);
				auto lhs = tot_h_prime(inst, tot_total_diff(inst, x));
				tot_add(lhs, tot_total_diff(inst, tot_h_prime(inst, x)));
				auto rhs = x;
				int n = p + q;
				if (n <= inst.max_q) {
					auto px = p_prime(inst, n, x);
					if (!px.is_zero())
						tot_add(rhs, Bidegree{0, n}, -inst.i_hat(n, px));
				}
				return compare_tot(x, lhs, rhs);
			});
			if (vertical) {
				trial("k_d_homotopy", [&](Rng &rng) {
					auto x = sample(b, rng);
					auto lhs = tot_k(inst, tot_d(inst, x));
					tot_add(lhs, tot_d(inst, tot_k(inst, x)));
					auto rhs = x;
					if (q == 0 && x.count(b))
						tot_add(rhs, b, -inst.j_hat(p, inst.q_hat(p, x.at(b))));
					return compare_tot(x, lhs, rhs);
				});
				auto hk = run_trials(inst.name, "side_h_k", b, opt.trials, opt.seed, [&](Rng &rng) {
					auto x = sample(b, rng);
					return compare_tot(x, tot_h(inst, tot_k(inst, x)), Tot<D>{});
				});
				auto pk = run_trials(inst.name, "side_p_k", b, opt.trials, opt.seed, [&](Rng &rng) {
					auto x = sample(b, rng);
					auto kx = tot_k(inst, x);
					auto it = kx.find(Bidegree{0, q - 1});
					if (p != 0 || it == kx.end())
						return TrialOutcome{};
					auto v = inst.p_hat(q - 1, it->second);
					if (v.is_zero())
						return TrialOutcome{};
					return TrialOutcome{"element " + tot_str(x) + " | p k x = " + v.str()};
				});
				if (opt.side_conditions_hold) {
					rep.add(hk);
					rep.add(pk);
				} else {
					side_hk.push_back(hk);
					side_pk.push_back(pk);
				}
			}
		}

	if (sampler.normalized) {
		for (int p = 1; p <= pmax; ++p)
			for (int q = 0; q <= qmax; ++q) {
				Bidegree b{p, q};
				rep.add(run_trials(inst.name, "side_h_h", b, opt.trials, opt.seed, [&](Rng &rng) {
					auto x = tot_single(b, sampler.normalized(b, rng));
					return compare_tot(x, tot_h(inst, tot_h(inst, x)), Tot<D>{});
				}));
				if (p != 1)
					continue;
				rep.add(run_trials(inst.name, "side_p_h", b, opt.trials, opt.seed, [&](Rng &rng) {
					auto x = sampler.normalized(b, rng);
					auto v = inst.p_hat(q, inst.h(b, x));
					if (v.is_zero())
						return TrialOutcome{};
					return TrialOutcome{"element " + x.str() + " | p h x = " + v.str()};
				}));
			}
	}

	for (int q = 0; q <= qmax; ++q) {
		Bidegree b{0, q};
		rep.add(run_trials(inst.name, "p_i_identity", b, opt.trials, opt.seed, [&](Rng &rng) {
			auto x = sampler.x(q, rng);
			auto back = inst.p_hat(q, inst.i_hat(q, x));
			if (back == x)
				return TrialOutcome{};
			return TrialOutcome{"x " + x.str() + " | p i x = " + back.str()};
		}));
		rep.add(run_trials(inst.name, "p_prime_i_identity", b, opt.trials, opt.seed, [&](Rng &rng) {
			auto x = sampler.x(q, rng);
			auto back = p_prime(inst, q, tot_single(b, inst.i_hat(q, x)));
			if (back == x)
				return TrialOutcome{};
			return TrialOutcome{"x " + x.str() + " | p' i x = " + back.str()};
		}));
	}
	if (inst.has_vertical_inclusion() && sampler.y) {
		for (int p = 0; p <= pmax; ++p) {
			Bidegree b{p, 0};
			rep.add(run_trials(inst.name, "q_j_identity", b, opt.trials, opt.seed, [&](Rng &rng) {
				auto y = sampler.y(p, rng);
				auto back = inst.q_hat(p, inst.j_hat(p, y));
				if (back == y)
					return TrialOutcome{};
				return TrialOutcome{"y " + y.str() + " | q j y = " + back.str()};
			}));
		}
	}
	if (vertical) {
		for (int p = 0; p <= std::min(pmax, qmax); ++p) {
			Bidegree b{0, p};
			auto r = run_trials(inst.name, "back_and_forth", b, opt.trials, opt.seed, [&](Rng &rng) {
				auto x = sampler.x(p, rng);
				auto back = zigzag_xy(inst, p, zigzag_yx(inst, p, x));
				if (back == x)
					return TrialOutcome{};
				return TrialOutcome{"x " + x.str() + " | composite " + back.str()};
			});
			if (opt.side_conditions_hold)
				rep.add(r);
			else
				back_forth.push_back(r);
		}
		if (!opt.side_conditions_hold) {
			rep.add(expect_failure(side_hk, inst.name, "side_h_k"));
			rep.add(expect_failure(side_pk, inst.name, "side_p_k"));
			rep.add(expect_failure(back_forth, inst.name, "back_and_forth"));
		}
	}
	return rep;
}

} // namespace vest
