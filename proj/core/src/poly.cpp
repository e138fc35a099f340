#include "vest/poly.hpp"

#include "vest/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <memory>
#include <mutex>
#include <tuple>
#include <unordered_map>

namespace vest {

namespace {

struct VarKey {
	int block = 4;
	long a = 0;
	long b = 0;
};

bool parse_uint(std::string_view s, long &out)
{
	if (s.empty() || s.size() > 9)
		return false;
	long v = 0;
	for (char c : s) {
		if (!std::isdigit(static_cast<unsigned char>(c)))
			return false;
		v = v * 10 + (c - '0');
	}
	out = v;
	return true;
}

VarKey key_of(std::string_view s)
{
	VarKey k;
	if (s.size() >= 2 && s[0] == 't' && parse_uint(s.substr(1), k.a)) {
		k.block = 0;
		return k;
	}
	if (s.size() >= 3 && s[0] == 'y' && s[1] == '_' && parse_uint(s.substr(2), k.a)) {
		k.block = 3;
		return k;
	}
	if (s.size() >= 4 && (s[0] == 'g' || s[0] == 'm')) {
		auto us = s.find('_');
		if (us != std::string_view::npos && parse_uint(s.substr(1, us - 1), k.a) &&
		    parse_uint(s.substr(us + 1), k.b)) {
			k.block = s[0] == 'g' ? 1 : 2;
			return k;
		}
	}
	k = VarKey{};
	return k;
}

std::atomic<int> g_degree_cap{24};

int exponent_degree(const Exponent &e)
{
	int d = 0;
	for (auto x : e)
		d += x;
	return d;
}

void check_cap(int deg)
{
	if (deg > degree_cap())
		throw DegreeOverflow("total degree " + std::to_string(deg) + " exceeds cap " +
		                     std::to_string(degree_cap()));
}

} // namespace

bool var_less(std::string_view a, std::string_view b)
{
	VarKey ka = key_of(a), kb = key_of(b);
	if (std::tie(ka.block, ka.a, ka.b) != std::tie(kb.block, kb.a, kb.b))
		return std::tie(ka.block, ka.a, ka.b) < std::tie(kb.block, kb.a, kb.b);
	return a < b;
}

struct VarSet::Data {
	std::vector<std::string> names;
	std::unordered_map<std::string, size_t> index;
};

namespace {

std::mutex g_varset_mutex;

std::map<std::vector<std::string>, std::unique_ptr<VarSet::Data>> &varset_registry()
{
	static std::map<std::vector<std::string>, std::unique_ptr<VarSet::Data>> reg;
	return reg;
}

std::map<std::pair<const VarSet::Data *, const VarSet::Data *>, const VarSet::Data *> &
union_cache()
{
	static std::map<std::pair<const VarSet::Data *, const VarSet::Data *>, const VarSet::Data *>
	    cache;
	return cache;
}

// caller holds g_varset_mutex
const VarSet::Data *intern_locked(std::vector<std::string> names)
{
	auto &reg = varset_registry();
	auto it = reg.find(names);
	if (it != reg.end())
		return it->second.get();
	auto d = std::make_unique<VarSet::Data>();
	d->names = names;
	for (size_t i = 0; i < names.size(); ++i)
		d->index.emplace(names[i], i);
	auto *raw = d.get();
	reg.emplace(std::move(names), std::move(d));
	return raw;
}

std::vector<std::string> canonical(std::vector<std::string> names)
{
	std::sort(names.begin(), names.end(),
	          [](const std::string &a, const std::string &b) { return var_less(a, b); });
	names.erase(std::unique(names.begin(), names.end()), names.end());
	return names;
}

} // namespace

VarSet::VarSet()
{
	static const Data *empty = [] {
		std::lock_guard lock(g_varset_mutex);
		return intern_locked({});
	}();
	data_ = empty;
}

VarSet VarSet::of(std::vector<std::string> names)
{
	names = canonical(std::move(names));
	std::lock_guard lock(g_varset_mutex);
	return VarSet(intern_locked(std::move(names)));
}

VarSet VarSet::unite(const VarSet &a, const VarSet &b)
{
	if (a == b || b.empty())
		return a;
	if (a.empty())
		return b;
	auto key = std::minmax(a.data_, b.data_);
	{
		std::lock_guard lock(g_varset_mutex);
		auto it = union_cache().find(key);
		if (it != union_cache().end())
			return VarSet(it->second);
	}
	std::vector<std::string> names = a.names();
	names.insert(names.end(), b.names().begin(), b.names().end());
	names = canonical(std::move(names));
	std::lock_guard lock(g_varset_mutex);
	const Data *d = intern_locked(std::move(names));
	union_cache().emplace(key, d);
	return VarSet(d);
}

size_t VarSet::size() const { return data_->names.size(); }
const std::string &VarSet::operator[](size_t i) const { return data_->names[i]; }
const std::vector<std::string> &VarSet::names() const { return data_->names; }

std::optional<size_t> VarSet::index_of(std::string_view name) const
{
	auto it = data_->index.find(std::string(name));
	if (it == data_->index.end())
		return std::nullopt;
	return it->second;
}

bool VarSet::subset_of(const VarSet &other) const
{
	if (*this == other)
		return true;
	for (auto &n : names())
		if (!other.contains(n))
			return false;
	return true;
}

int degree_cap() { return g_degree_cap.load(); }
void set_degree_cap(int cap) { g_degree_cap.store(std::clamp(cap, 1, 255)); }

MultiPoly::MultiPoly(const Rat &c)
{
	if (!c.is_zero())
		terms_.emplace(Exponent{}, c);
}

MultiPoly MultiPoly::variable(std::string_view name)
{
	MultiPoly r;
	r.vars_ = VarSet::of({std::string(name)});
	r.terms_.emplace(Exponent{1}, Rat(1));
	return r;
}

MultiPoly MultiPoly::from_terms(VarSet vars, Terms terms)
{
	MultiPoly r;
	r.vars_ = vars;
	for (auto it = terms.begin(); it != terms.end();) {
		if (it->second.is_zero() || it->first.size() != vars.size()) {
			if (!it->second.is_zero())
				throw ShapeMismatch("exponent length does not match variable set");
			it = terms.erase(it);
		} else {
			++it;
		}
	}
	r.terms_ = std::move(terms);
	return r;
}

MultiPoly MultiPoly::monomial(const Rat &c, const std::vector<std::pair<std::string, int>> &powers)
{
	MultiPoly r(c);
	for (auto &[name, e] : powers)
		r *= pow(variable(name), static_cast<unsigned>(e));
	return r;
}

bool MultiPoly::is_constant() const
{
	for (auto &[e, c] : terms_)
		if (exponent_degree(e) > 0)
			return false;
	return true;
}

Rat MultiPoly::constant_term() const
{
	auto it = terms_.find(Exponent(vars_.size(), 0));
	return it == terms_.end() ? Rat(0) : it->second;
}

int MultiPoly::total_degree() const
{
	int d = is_zero() ? -1 : 0;
	for (auto &[e, c] : terms_)
		d = std::max(d, exponent_degree(e));
	return d;
}

int MultiPoly::degree_in(std::string_view var) const
{
	auto i = vars_.index_of(var);
	if (!i)
		return 0;
	int d = 0;
	for (auto &[e, c] : terms_)
		d = std::max<int>(d, e[*i]);
	return d;
}

std::vector<std::string> MultiPoly::support() const
{
	std::vector<bool> used(vars_.size(), false);
	for (auto &[e, c] : terms_)
		for (size_t i = 0; i < e.size(); ++i)
			if (e[i])
				used[i] = true;
	std::vector<std::string> out;
	for (size_t i = 0; i < used.size(); ++i)
		if (used[i])
			out.push_back(vars_[i]);
	return out;
}

MultiPoly MultiPoly::aligned(const VarSet &superset) const
{
	if (superset == vars_)
		return *this;
	std::vector<size_t> idx(vars_.size());
	for (size_t i = 0; i < vars_.size(); ++i) {
		auto j = superset.index_of(vars_[i]);
		if (!j)
			throw ShapeMismatch("variable " + vars_[i] + " missing from target set");
		idx[i] = *j;
	}
	MultiPoly r;
	r.vars_ = superset;
	for (auto &[e, c] : terms_) {
		Exponent f(superset.size(), 0);
		for (size_t i = 0; i < e.size(); ++i)
			f[idx[i]] = e[i];
		r.terms_.emplace(std::move(f), c);
	}
	return r;
}

MultiPoly MultiPoly::trimmed() const
{
	auto sup = support();
	if (sup.size() == vars_.size())
		return *this;
	VarSet small = VarSet::of(sup);
	std::vector<std::pair<size_t, size_t>> keep;
	for (size_t i = 0; i < small.size(); ++i)
		keep.emplace_back(*vars_.index_of(small[i]), i);
	MultiPoly r;
	r.vars_ = small;
	for (auto &[e, c] : terms_) {
		Exponent f(small.size(), 0);
		for (auto [from, to] : keep)
			f[to] = e[from];
		r.terms_.emplace(std::move(f), c);
	}
	return r;
}

MultiPoly MultiPoly::coefficient(std::string_view var, int k) const
{
	auto i = vars_.index_of(var);
	if (!i)
		return k == 0 ? *this : MultiPoly();
	MultiPoly r;
	r.vars_ = vars_;
	for (auto &[e, c] : terms_) {
		if (e[*i] != k)
			continue;
		Exponent f = e;
		f[*i] = 0;
		r.terms_.emplace(std::move(f), c);
	}
	return r;
}

std::string MultiPoly::str() const
{
	if (terms_.empty())
		return "0";
	std::vector<const Terms::value_type *> order;
	for (auto &t : terms_)
		order.push_back(&t);
	std::sort(order.begin(), order.end(), [](auto *a, auto *b) {
		int da = exponent_degree(a->first), db = exponent_degree(b->first);
		if (da != db)
			return da > db;
		return a->first > b->first;
	});
	std::string out;
	bool first = true;
	for (auto *t : order) {
		const Rat &c = t->second;
		std::string mono;
		for (size_t i = 0; i < t->first.size(); ++i) {
			int e = t->first[i];
			if (!e)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += vars_[i];
			if (e > 1)
				mono += "^" + std::to_string(e);
		}
		Rat mag = c.sign() < 0 ? -c : c;
		if (first)
			out += c.sign() < 0 ? "-" : "";
		else
			out += c.sign() < 0 ? " - " : " + ";
		if (mono.empty())
			out += mag.str();
		else if (mag.is_one())
			out += mono;
		else
			out += mag.str() + "*" + mono;
		first = false;
	}
	return out;
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &o)
{
	if (o.is_zero())
		return *this;
	if (!(vars_ == o.vars_)) {
		VarSet u = VarSet::unite(vars_, o.vars_);
		if (!(u == vars_))
			*this = aligned(u);
		if (!(u == o.vars_))
			return *this += o.aligned(u);
	}
	for (auto &[e, c] : o.terms_) {
		auto [it, inserted] = terms_.try_emplace(e, c);
		if (!inserted) {
			it->second += c;
			if (it->second.is_zero())
				terms_.erase(it);
		}
	}
	return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &o) { return *this += -o; }

MultiPoly &MultiPoly::operator*=(const MultiPoly &o)
{
	*this = *this * o;
	return *this;
}

MultiPoly operator-(MultiPoly a)
{
	for (auto &[e, c] : a.terms_)
		c = -c;
	return a;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
	if (a.is_zero() || b.is_zero())
		return MultiPoly();
	if (b.is_constant() && !(a.vars_ == b.vars_)) {
		Rat c = b.constant_term();
		MultiPoly r = a;
		for (auto &[e, x] : r.terms_)
			x *= c;
		return r;
	}
	if (a.is_constant() && !(a.vars_ == b.vars_))
		return b * a;
	VarSet u = VarSet::unite(a.vars_, b.vars_);
	MultiPoly sa, sb;
	const MultiPoly &A = a.vars_ == u ? a : (sa = a.aligned(u));
	const MultiPoly &B = b.vars_ == u ? b : (sb = b.aligned(u));
	check_cap(A.total_degree() + B.total_degree());
	MultiPoly r;
	r.vars_ = u;
	Exponent e(u.size());
	for (auto &[ea, ca] : A.terms_) {
		for (auto &[eb, cb] : B.terms_) {
			for (size_t i = 0; i < e.size(); ++i)
				e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
			auto [it, inserted] = r.terms_.try_emplace(e, ca);
			if (inserted)
				it->second *= cb;
			else
				it->second += ca * cb;
		}
	}
	for (auto it = r.terms_.begin(); it != r.terms_.end();)
		it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
	return r;
}

bool operator==(const MultiPoly &a, const MultiPoly &b)
{
	if (a.vars_ == b.vars_)
		return a.terms_ == b.terms_;
	if (a.terms_.size() != b.terms_.size())
		return false;
	VarSet u = VarSet::unite(a.vars_, b.vars_);
	return a.aligned(u).terms_ == b.aligned(u).terms_;
}

MultiPoly scale(const Rat &c, const MultiPoly &f)
{
	if (c.is_zero())
		return MultiPoly();
	MultiPoly r = f;
	return r * MultiPoly(c);
}

MultiPoly pow(const MultiPoly &f, unsigned e)
{
	MultiPoly r(Rat(1));
	MultiPoly b = f;
	while (e) {
		if (e & 1)
			r *= b;
		e >>= 1;
		if (e)
			b *= b;
	}
	return r;
}

MultiPoly diff(const MultiPoly &f, std::string_view var)
{
	auto i = f.vars().index_of(var);
	if (!i)
		return MultiPoly();
	MultiPoly::Terms out;
	for (auto &[e, c] : f.terms()) {
		if (!e[*i])
			continue;
		Exponent g = e;
		g[*i] -= 1;
		out.emplace(std::move(g), c * Rat(e[*i]));
	}
	return MultiPoly::from_terms(f.vars(), std::move(out));
}

MultiPoly defint01(const MultiPoly &f, std::string_view var)
{
	auto i = f.vars().index_of(var);
	if (!i)
		return f;
	MultiPoly::Terms out;
	for (auto &[e, c] : f.terms()) {
		Exponent g = e;
		int k = g[*i];
		g[*i] = 0;
		Rat v = c / Rat(k + 1);
		auto [it, inserted] = out.try_emplace(std::move(g), v);
		if (!inserted)
			it->second += v;
	}
	return MultiPoly::from_terms(f.vars(), std::move(out));
}

MultiPoly subst(const MultiPoly &f, const std::map<std::string, MultiPoly> &assignment)
{
	if (assignment.empty() || f.is_zero())
		return f;
	const VarSet &fv = f.vars();
	const size_t n = fv.size();
	std::vector<const MultiPoly *> img(n, nullptr);
	std::vector<bool> used(n, false);
	for (auto &[e, c] : f.terms())
		for (size_t i = 0; i < n; ++i)
			if (e[i])
				used[i] = true;
	bool any = false;
	std::vector<std::string> names;
	for (size_t i = 0; i < n; ++i) {
		if (!used[i])
			continue;
		auto it = assignment.find(fv[i]);
		if (it == assignment.end()) {
			names.push_back(fv[i]);
		} else {
			img[i] = &it->second;
			any = true;
			for (auto &s : it->second.support())
				names.push_back(s);
		}
	}
	if (!any)
		return f;
	VarSet rv = VarSet::of(names);
	const size_t m = rv.size();

	// per-variable plan: keep (target index), monomial image, or heavy image
	enum class Kind { Unused, Keep, Mono, Zero, Heavy };
	std::vector<Kind> kind(n, Kind::Unused);
	std::vector<size_t> target(n, 0);
	std::vector<Rat> mono_coef(n);
	std::vector<std::vector<int>> mono_exp(n);
	std::vector<size_t> heavy_slot(n, 0);
	std::vector<MultiPoly> heavy;
	for (size_t i = 0; i < n; ++i) {
		if (!used[i])
			continue;
		if (!img[i]) {
			kind[i] = Kind::Keep;
			target[i] = *rv.index_of(fv[i]);
		} else if (img[i]->is_zero()) {
			kind[i] = Kind::Zero;
		} else if (img[i]->size() == 1) {
			kind[i] = Kind::Mono;
			auto &[e, c] = *img[i]->terms().begin();
			mono_coef[i] = c;
			mono_exp[i].assign(m, 0);
			for (size_t k = 0; k < e.size(); ++k)
				if (e[k])
					mono_exp[i][*rv.index_of(img[i]->vars()[k])] = e[k];
		} else {
			kind[i] = Kind::Heavy;
			heavy_slot[i] = heavy.size();
			heavy.push_back(img[i]->trimmed().aligned(rv));
		}
	}

	std::map<std::vector<std::uint8_t>, MultiPoly::Terms> groups;
	std::vector<int> acc(m);
	for (auto &[e, c] : f.terms()) {
		Rat coef = c;
		std::fill(acc.begin(), acc.end(), 0);
		std::vector<std::uint8_t> key(heavy.size(), 0);
		bool zero = false;
		for (size_t i = 0; i < n && !zero; ++i) {
			if (!e[i])
				continue;
			switch (kind[i]) {
			case Kind::Keep:
				acc[target[i]] += e[i];
				break;
			case Kind::Zero:
				zero = true;
				break;
			case Kind::Mono:
				coef *= pow(mono_coef[i], e[i]);
				for (size_t k = 0; k < m; ++k)
					acc[k] += mono_exp[i][k] * e[i];
				break;
			case Kind::Heavy:
				key[heavy_slot[i]] = e[i];
				break;
			case Kind::Unused:
				break;
			}
		}
		if (zero)
			continue;
		int deg = 0;
		for (int a : acc)
			deg += a;
		check_cap(deg);
		Exponent ex(m);
		for (size_t k = 0; k < m; ++k)
			ex[k] = static_cast<std::uint8_t>(acc[k]);
		auto &bucket = groups[key];
		auto [it, inserted] = bucket.try_emplace(std::move(ex), coef);
		if (!inserted)
			it->second += coef;
	}

	std::vector<std::vector<MultiPoly>> powers(heavy.size());
	auto power = [&](size_t h, int k) -> const MultiPoly & {
		auto &ps = powers[h];
		if (ps.empty())
			ps.push_back(MultiPoly(Rat(1)));
		while (static_cast<int>(ps.size()) <= k)
			ps.push_back(ps.back() * heavy[h]);
		return ps[k];
	};
	MultiPoly result = MultiPoly::from_terms(rv, {});
	for (auto &[key, terms] : groups) {
		MultiPoly part = MultiPoly::from_terms(rv, std::move(terms));
		for (size_t h = 0; h < key.size(); ++h)
			if (key[h])
				part *= power(h, key[h]);
		result += part;
	}
	return result;
}

MultiPoly eval(const MultiPoly &f, const std::map<std::string, Rat> &values)
{
	std::map<std::string, MultiPoly> a;
	for (auto &[k, v] : values)
		a.emplace(k, MultiPoly(v));
	return subst(f, a).trimmed();
}

Rat eval_rat(const MultiPoly &f, const std::map<std::string, Rat> &values)
{
	MultiPoly r = eval(f, values);
	if (!r.is_constant())
		throw UnknownVariable("evaluation left free variables in " + r.str());
	return r.constant_term();
}

std::string slot_var(int slot, int coord)
{
	return "g" + std::to_string(slot) + "_" + std::to_string(coord);
}
std::string point_var(int point, int coord)
{
	return "m" + std::to_string(point) + "_" + std::to_string(coord);
}
std::string fiber_var(int coord) { return "y_" + std::to_string(coord); }
std::string cube_var(int i) { return "t" + std::to_string(i); }

std::vector<MultiPoly> slot_point(int slot, int dim)
{
	std::vector<MultiPoly> v;
	for (int j = 1; j <= dim; ++j)
		v.push_back(MultiPoly::variable(slot_var(slot, j)));
	return v;
}

std::vector<MultiPoly> fiber_point(int dim)
{
	std::vector<MultiPoly> v;
	for (int j = 1; j <= dim; ++j)
		v.push_back(MultiPoly::variable(fiber_var(j)));
	return v;
}

std::vector<MultiPoly> base_point(int point, int dim)
{
	std::vector<MultiPoly> v;
	for (int j = 1; j <= dim; ++j)
		v.push_back(MultiPoly::variable(point_var(point, j)));
	return v;
}

} // namespace vest
