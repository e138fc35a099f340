#include "vest/cech.hpp"

#include "vest/liealg.hpp"
#include "vest/sampling.hpp"

#include <algorithm>
#include <tuple>

namespace vest {

namespace {

Rat floor_rat(const Rat &x)
{
	mpz_class q;
	mpz_fdiv_q(q.get_mpz_t(), x.value().get_num_mpz_t(), x.value().get_den_mpz_t());
	return Rat(mpq_class(q));
}

MultiPoly shifted(const MultiPoly &f, const Rat &k)
{
	if (k.is_zero())
		return f;
	return subst(f, {{PwPoly::var(), PwPoly::x() + MultiPoly(k)}}).trimmed();
}

// integral from a to X of f, as a polynomial in X (= x)
MultiPoly integral_from(const MultiPoly &f, const Rat &a)
{
	const std::string s = "s";
	MultiPoly X = PwPoly::x();
	MultiPoly span = X - MultiPoly(a);
	MultiPoly inner = subst(f, {{PwPoly::var(), MultiPoly(a) + MultiPoly::variable(s) * span}});
	return (span * defint01(inner, s)).trimmed();
}

Rat definite(const MultiPoly &f, const Rat &a, const Rat &b)
{
	return eval_rat(integral_from(f, a), {{PwPoly::var(), b}});
}

struct Segment {
	Rat u, v; // lifted endpoints
	MultiPoly f;  // polynomial in the lifted coordinate
};

// zero outside the union of segments
PwPoly from_segments(const std::vector<Segment> &segs)
{
	std::vector<Rat> br{Rat(0)};
	for (auto &s : segs) {
		br.push_back(circle_mod(s.u));
		br.push_back(circle_mod(s.v));
	}
	std::sort(br.begin(), br.end());
	br.erase(std::unique(br.begin(), br.end()), br.end());
	std::vector<MultiPoly> pieces;
	for (size_t i = 0; i < br.size(); ++i) {
		Rat end = i + 1 < br.size() ? br[i + 1] : Rat(1);
		Rat mid = (br[i] + end) / Rat(2);
		MultiPoly piece;
		for (auto &s : segs)
			for (long k = -1; k <= 1; ++k) {
				Rat lifted = mid + Rat(k);
				if (s.u < lifted && lifted < s.v)
					piece = shifted(s.f, Rat(k));
			}
		pieces.push_back(piece);
	}
	return PwPoly(br, pieces);
}

// lifted points where f may change, inside (lo, hi)
std::vector<Rat> lifted_breaks(const PwPoly &f, const Arc &arc)
{
	std::vector<Rat> out;
	for (auto &b : f.breaks())
		for (long k = -1; k <= 1; ++k) {
			Rat l = b + Rat(k);
			if (arc.lo < l && l < arc.hi)
				out.push_back(l);
		}
	return out;
}

} // namespace

Rat circle_mod(const Rat &x) { return x - floor_rat(x); }

const std::string &PwPoly::var()
{
	static const std::string v = "x";
	return v;
}

MultiPoly PwPoly::x() { return MultiPoly::variable(var()); }

PwPoly::PwPoly() : breaks_{Rat(0)}, pieces_{MultiPoly()} {}

PwPoly::PwPoly(const Rat &c) : breaks_{Rat(0)}, pieces_{MultiPoly(c)} {}

PwPoly::PwPoly(std::vector<Rat> breaks, std::vector<MultiPoly> pieces)
    : breaks_(std::move(breaks)), pieces_(std::move(pieces))
{
	if (breaks_.empty() || breaks_.size() != pieces_.size() || !breaks_[0].is_zero())
		throw ShapeMismatch("piecewise polynomial needs a break at 0 and one piece per break");
	for (size_t i = 0; i + 1 < breaks_.size(); ++i)
		if (!(breaks_[i] < breaks_[i + 1]))
			throw ShapeMismatch("breakpoints must increase");
	if (!(breaks_.back() < Rat(1)))
		throw ShapeMismatch("breakpoints must lie in [0,1)");
	for (auto &p : pieces_)
		for (auto &v : p.support())
			if (v != var())
				throw UnknownVariable("piecewise polynomial in x uses " + v);
	canonicalize();
}

void PwPoly::canonicalize()
{
	std::vector<Rat> br{breaks_[0]};
	std::vector<MultiPoly> pc{pieces_[0].trimmed()};
	for (size_t i = 1; i < breaks_.size(); ++i) {
		MultiPoly p = pieces_[i].trimmed();
		if (p == pc.back())
			continue;
		br.push_back(breaks_[i]);
		pc.push_back(std::move(p));
	}
	breaks_ = std::move(br);
	pieces_ = std::move(pc);
}

Rat PwPoly::piece_end(size_t i) const { return i + 1 < breaks_.size() ? breaks_[i + 1] : Rat(1); }

bool PwPoly::is_zero() const
{
	for (auto &p : pieces_)
		if (!p.is_zero())
			return false;
	return true;
}

std::string PwPoly::str() const
{
	if (pieces_.size() == 1)
		return pieces_[0].str();
	std::string s;
	for (size_t i = 0; i < pieces_.size(); ++i)
		s += (i ? " | " : "") + breaks_[i].str() + ": " + pieces_[i].str();
	return "{" + s + "}";
}

PwPoly PwPoly::refined(const std::vector<Rat> &extra) const
{
	std::vector<Rat> br = breaks_;
	for (auto &e : extra)
		br.push_back(circle_mod(e));
	std::sort(br.begin(), br.end());
	br.erase(std::unique(br.begin(), br.end()), br.end());
	PwPoly r;
	r.breaks_ = br;
	r.pieces_.clear();
	size_t j = 0;
	for (auto &b : br) {
		while (j + 1 < breaks_.size() && !(b < breaks_[j + 1]))
			++j;
		r.pieces_.push_back(pieces_[j]);
	}
	return r;
}

PwPoly PwPoly::derivative() const
{
	return map_pieces([](size_t, const MultiPoly &p) { return diff(p, var()); });
}

Rat PwPoly::integral() const
{
	Rat total(0);
	for (size_t i = 0; i < pieces_.size(); ++i)
		total += definite(pieces_[i], breaks_[i], piece_end(i));
	return total;
}

Rat PwPoly::right_value(const Rat &at) const
{
	Rat a = circle_mod(at);
	size_t j = 0;
	while (j + 1 < breaks_.size() && !(a < breaks_[j + 1]))
		++j;
	return eval_rat(pieces_[j], {{var(), a}});
}

Rat PwPoly::left_value(const Rat &at) const
{
	Rat a = circle_mod(at);
	if (a.is_zero())
		return eval_rat(pieces_.back(), {{var(), Rat(1)}});
	size_t j = 0;
	while (j + 1 < breaks_.size() && breaks_[j + 1] < a)
		++j;
	return eval_rat(pieces_[j], {{var(), a}});
}

bool PwPoly::continuous() const
{
	for (auto &b : breaks_)
		if (left_value(b) != right_value(b))
			return false;
	return true;
}

PwPoly &PwPoly::operator+=(const PwPoly &o)
{
	PwPoly a = refined(o.breaks_), b = o.refined(breaks_);
	for (size_t i = 0; i < a.pieces_.size(); ++i)
		a.pieces_[i] += b.pieces_[i];
	a.canonicalize();
	return *this = std::move(a);
}

PwPoly &PwPoly::operator-=(const PwPoly &o) { return *this += -o; }

PwPoly operator-(PwPoly a)
{
	for (auto &p : a.pieces_)
		p = -p;
	return a;
}

PwPoly operator*(const PwPoly &x, const PwPoly &y)
{
	PwPoly a = x.refined(y.breaks_), b = y.refined(x.breaks_);
	for (size_t i = 0; i < a.pieces_.size(); ++i)
		a.pieces_[i] = a.pieces_[i] * b.pieces_[i];
	a.canonicalize();
	return a;
}

bool operator==(const PwPoly &x, const PwPoly &y)
{
	PwPoly a = x.refined(y.breaks_), b = y.refined(x.breaks_);
	for (size_t i = 0; i < a.pieces_.size(); ++i)
		if (!(a.pieces_[i] == b.pieces_[i]))
			return false;
	return true;
}

bool Arc::contains(const Rat &circle_point) const
{
	Rat l = lift(circle_point);
	return lo < l && l < hi;
}

Rat Arc::lift(const Rat &circle_point) const
{
	Rat c = circle_mod(circle_point);
	return c - floor_rat(c - lo);
}

Rat Arc::midpoint() const { return (lo + hi) / Rat(2); }

std::string Arc::str() const { return "(" + lo.str() + ", " + hi.str() + ")"; }

std::vector<Arc> intersect(const Arc &a, const Arc &b)
{
	std::vector<Arc> out;
	for (long k = -1; k <= 1; ++k) {
		Rat lo = std::max(a.lo, b.lo + Rat(k));
		Rat hi = std::min(a.hi, b.hi + Rat(k));
		if (lo < hi)
			out.push_back(Arc{lo, hi});
	}
	return out;
}

PwPoly restrict_to(const PwPoly &f, const Arc &arc)
{
	PwPoly r = f.refined({arc.lo, arc.hi});
	const auto &br = r.breaks();
	return r.map_pieces([&](size_t i, const MultiPoly &p) {
		Rat end = i + 1 < br.size() ? br[i + 1] : Rat(1);
		return arc.contains((br[i] + end) / Rat(2)) ? p : MultiPoly();
	});
}

PwPoly on_arc(const Arc &arc, const MultiPoly &f) { return from_segments({{arc.lo, arc.hi, f}}); }

PwPoly primitive_on_arc(const PwPoly &f, const Arc &arc, const Rat &base)
{
	Rat b = arc.lift(base);
	if (!(arc.lo < b && b < arc.hi))
		throw ShapeMismatch("basepoint outside its arc");
	std::vector<Rat> pts = lifted_breaks(f, arc);
	pts.push_back(arc.lo);
	pts.push_back(arc.hi);
	pts.push_back(b);
	std::sort(pts.begin(), pts.end());
	pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
	auto local = [&](const Rat &u, const Rat &v) {
		Rat mid = (u + v) / Rat(2);
		Rat c = circle_mod(mid);
		PwPoly one = f.refined({});
		size_t j = 0;
		while (j + 1 < one.breaks().size() && !(c < one.breaks()[j + 1]))
			++j;
		return shifted(one.pieces()[j], c - mid);
	};
	size_t bi = std::find(pts.begin(), pts.end(), b) - pts.begin();
	std::vector<Segment> segs;
	Rat value(0);
	for (size_t i = bi; i + 1 < pts.size(); ++i) {
		MultiPoly g = local(pts[i], pts[i + 1]);
		MultiPoly F = MultiPoly(value) + integral_from(g, pts[i]);
		segs.push_back({pts[i], pts[i + 1], F});
		value = eval_rat(F, {{PwPoly::var(), pts[i + 1]}});
	}
	value = Rat(0);
	for (size_t i = bi; i > 0; --i) {
		MultiPoly g = local(pts[i - 1], pts[i]);
		MultiPoly F = MultiPoly(value) + integral_from(g, pts[i]);
		segs.push_back({pts[i - 1], pts[i], F});
		value = eval_rat(F, {{PwPoly::var(), pts[i - 1]}});
	}
	return from_segments(segs);
}

PwPoly hat(const Rat &a, const Rat &b, const Rat &c, const Rat &d)
{
	if (!(a < b && b <= c && c < d && d - a < Rat(1)))
		throw InvalidCover("hat function needs a < b <= c < d within one turn");
	MultiPoly X = PwPoly::x();
	std::vector<Segment> segs{{a, b, scale(Rat(1) / (b - a), X - MultiPoly(a))},
	                          {c, d, scale(Rat(1) / (d - c), MultiPoly(d) - X)}};
	if (b < c)
		segs.push_back({b, c, MultiPoly(1)});
	return from_segments(segs);
}

std::shared_ptr<const CircleCover> CircleCover::make(std::vector<Arc> arcs, std::vector<PwPoly> pou)
{
	if (arcs.empty() || arcs.size() != pou.size())
		throw InvalidCover("need one partition function per arc");
	auto cov = std::make_shared<CircleCover>();
	PwPoly sum;
	for (size_t i = 0; i < arcs.size(); ++i) {
		const Arc &a = arcs[i];
		if (!(a.lo < a.hi) || !(a.hi - a.lo < Rat(1)))
			throw InvalidCover("arc " + a.str() + " must be proper and nonempty");
		const PwPoly &chi = pou[i];
		for (size_t j = 0; j < chi.pieces().size(); ++j) {
			if (chi.pieces()[j].is_zero())
				continue;
			Rat start = chi.breaks()[j];
			Rat end = j + 1 < chi.breaks().size() ? chi.breaks()[j + 1] : Rat(1);
			Rat l = a.lift(start);
			if (!(a.lo < l && l + (end - start) < a.hi))
				throw InvalidCover("partition function " + std::to_string(i) +
				                   " is not supported inside its arc");
		}
		sum += chi;
	}
	if (!(sum == PwPoly(Rat(1))))
		throw InvalidCover("partition of unity does not sum to 1");
	cov->arcs_ = std::move(arcs);
	cov->pou_ = std::move(pou);
	const int n = static_cast<int>(cov->arcs_.size());
	for (int p = 0; p < n; ++p) {
		std::vector<IndexSet> level;
		for (auto &idx : index_subsets(n, p + 1)) {
			std::vector<Arc> parts{cov->arcs_[idx[0]]};
			for (size_t r = 1; r < idx.size(); ++r) {
				std::vector<Arc> next;
				for (auto &piece : parts)
					for (auto &c : intersect(piece, cov->arcs_[idx[r]]))
						next.push_back(c);
				parts = std::move(next);
			}
			if (parts.empty())
				continue;
			if (parts.size() > 1) {
				std::string name;
				for (int i : idx)
					name += std::to_string(i);
				throw NonContractibleIntersection("intersection U_" + name + " is disconnected");
			}
			cov->domain_.emplace(idx, parts[0]);
			cov->base_.emplace(idx, circle_mod(parts[0].midpoint()));
			level.push_back(idx);
		}
		if (level.empty())
			break;
		cov->nerve_.push_back(std::move(level));
	}
	return cov;
}

std::shared_ptr<const CircleCover> CircleCover::three_arcs()
{
	static const auto cov = [] {
		auto r = [](long a, long b) { return Rat(a, b); };
		std::vector<Arc> arcs{{r(-1, 4), r(1, 4)}, {r(1, 12), r(7, 12)}, {r(5, 12), r(11, 12)}};
		std::vector<PwPoly> pou{hat(r(-5, 24), r(-3, 24), r(3, 24), r(5, 24)),
		                        hat(r(3, 24), r(5, 24), r(11, 24), r(13, 24)),
		                        hat(r(11, 24), r(13, 24), r(19, 24), r(21, 24))};
		return make(std::move(arcs), std::move(pou));
	}();
	return cov;
}

const std::vector<IndexSet> &CircleCover::simplices(int p) const
{
	static const std::vector<IndexSet> none;
	if (p < 0 || p >= static_cast<int>(nerve_.size()))
		return none;
	return nerve_[p];
}

PwPoly CechForm::component(IndexSet idx) const
{
	int s = sort_with_sign(idx);
	if (s == 0)
		return PwPoly();
	auto it = comps.find(idx);
	if (it == comps.end())
		return PwPoly();
	return s > 0 ? it->second : -it->second;
}

void CechForm::add(IndexSet idx, const PwPoly &f)
{
	int s = sort_with_sign(idx);
	if (s == 0 || f.is_zero())
		return;
	auto it = comps.find(idx);
	PwPoly v = (it == comps.end() ? PwPoly() : it->second) + (s > 0 ? f : -f);
	if (v.is_zero()) {
		if (it != comps.end())
			comps.erase(it);
	} else {
		comps[idx] = std::move(v);
	}
}

std::string CechForm::str() const
{
	if (comps.empty())
		return "0";
	std::string s;
	for (auto &[idx, f] : comps) {
		std::string name;
		for (int i : idx)
			name += std::to_string(i);
		s += (s.empty() ? "" : "; ") + name + ": " + f.str() + (q == 1 ? " dx" : "");
	}
	return s;
}

CechForm &CechForm::operator+=(const CechForm &o)
{
	if (comps.empty()) {
		p = o.p;
		q = o.q;
	}
	for (auto &[idx, f] : o.comps)
		add(idx, f);
	return *this;
}

CechForm &CechForm::operator-=(const CechForm &o) { return *this += -o; }

CechForm operator-(CechForm a)
{
	for (auto &[idx, f] : a.comps)
		f = -f;
	return a;
}

bool operator==(const CechForm &a, const CechForm &b)
{
	if (a.comps.size() != b.comps.size())
		return false;
	for (auto ia = a.comps.begin(), ib = b.comps.begin(); ia != a.comps.end(); ++ia, ++ib)
		if (ia->first != ib->first || !(ia->second == ib->second))
			return false;
	return true;
}

std::string CircleForm::str() const
{
	if (q == 0)
		return coeff.str();
	return "(" + coeff.str() + ")*dx";
}

CircleForm &CircleForm::operator+=(const CircleForm &o)
{
	if (coeff.is_zero())
		q = o.q;
	coeff += o.coeff;
	return *this;
}

CircleForm &CircleForm::operator-=(const CircleForm &o)
{
	if (coeff.is_zero())
		q = o.q;
	coeff -= o.coeff;
	return *this;
}

void CechCochain::add(IndexSet idx, const Rat &c)
{
	int s = sort_with_sign(idx);
	if (s == 0 || c.is_zero())
		return;
	Rat v = values[idx] + (s > 0 ? c : -c);
	if (v.is_zero())
		values.erase(idx);
	else
		values[idx] = v;
}

std::string CechCochain::str() const
{
	if (values.empty())
		return "0";
	std::string s;
	for (auto &[idx, c] : values) {
		std::string name;
		for (int i : idx)
			name += std::to_string(i);
		s += (s.empty() ? "" : "; ") + name + ": " + c.str();
	}
	return s;
}

CechCochain &CechCochain::operator+=(const CechCochain &o)
{
	if (values.empty())
		p = o.p;
	for (auto &[idx, c] : o.values)
		add(idx, c);
	return *this;
}

CechCochain &CechCochain::operator-=(const CechCochain &o) { return *this += -o; }

CechCochain operator-(CechCochain a)
{
	for (auto &[idx, c] : a.values)
		c = -c;
	return a;
}

CechForm CechComplex::delta(const CechForm &w) const
{
	CechForm r{w.p + 1, w.q, {}};
	for (auto &J : cover_->simplices(w.p + 1)) {
		PwPoly sum;
		for (size_t k = 0; k < J.size(); ++k) {
			IndexSet face = J;
			face.erase(face.begin() + static_cast<long>(k));
			PwPoly f = w.component(face);
			sum += k % 2 ? -f : f;
		}
		r.add(J, restrict_to(sum, cover_->domain(J)));
	}
	return r;
}

CechForm CechComplex::d(const CechForm &w) const
{
	CechForm r{w.p, w.q + 1, {}};
	if (w.q >= 1)
		return r;
	for (auto &[idx, f] : w.comps) {
		PwPoly df = f.derivative();
		r.add(idx, w.p % 2 ? -df : df);
	}
	return r;
}

CechForm CechComplex::h(const CechForm &w) const
{
	if (w.p == 0)
		throw DegreeMismatch("h needs p >= 1");
	CechForm r{w.p - 1, w.q, {}};
	for (auto &I : cover_->simplices(w.p - 1)) {
		PwPoly sum;
		for (int j = 0; j < cover_->size(); ++j) {
			IndexSet jI{j};
			jI.insert(jI.end(), I.begin(), I.end());
			PwPoly f = w.component(jI);
			if (!f.is_zero())
				sum += cover_->chi(j) * f;
		}
		r.add(I, restrict_to(sum, cover_->domain(I)));
	}
	return r;
}

CechForm CechComplex::k(const CechForm &w) const
{
	if (w.q == 0)
		throw DegreeMismatch("k needs q >= 1");
	CechForm r{w.p, w.q - 1, {}};
	for (auto &[idx, f] : w.comps) {
		PwPoly F = primitive_on_arc(f, cover_->domain(idx), cover_->basepoint(idx));
		r.add(idx, w.p % 2 ? -F : F);
	}
	return r;
}

CircleForm CechComplex::p_hat(const CechForm &w) const
{
	if (w.p != 0)
		throw DegreeMismatch("p-hat needs p = 0");
	CircleForm r{w.q, PwPoly()};
	for (int i = 0; i < cover_->size(); ++i)
		r.coeff += cover_->chi(i) * w.component({i});
	return r;
}

CechForm CechComplex::i_hat(const CircleForm &a) const
{
	CechForm r{0, a.q, {}};
	for (int i = 0; i < cover_->size(); ++i)
		r.add({i}, restrict_to(a.coeff, cover_->arcs()[i]));
	return r;
}

CechCochain CechComplex::q_hat(const CechForm &w) const
{
	if (w.q != 0)
		throw DegreeMismatch("q-hat needs q = 0");
	CechCochain r{w.p, {}};
	for (auto &[idx, f] : w.comps)
		r.add(idx, f.right_value(cover_->basepoint(idx)));
	return r;
}

CechForm CechComplex::j_hat(const CechCochain &c) const
{
	CechForm r{c.p, 0, {}};
	for (auto &[idx, v] : c.values) {
		if (!cover_->nonempty(idx))
			throw InvalidCover("cochain value on an empty intersection");
		r.add(idx, on_arc(cover_->domain(idx), MultiPoly(v)));
	}
	return r;
}

CechCochain CechComplex::cochain_delta(const CechCochain &c) const
{
	CechCochain r{c.p + 1, {}};
	for (auto &J : cover_->simplices(c.p + 1))
		for (size_t k = 0; k < J.size(); ++k) {
			IndexSet face = J;
			face.erase(face.begin() + static_cast<long>(k));
			auto it = c.values.find(face);
			if (it != c.values.end())
				r.add(J, k % 2 ? -it->second : it->second);
		}
	return r;
}

CircleForm CechComplex::collate(const CechCochain &c, ZigzagTrace *trace) const
{
	if (!cochain_delta(c).is_zero())
		throw NotCocycle("Cech cochain " + c.str() + " is not a cocycle");
	return zigzag_xy(instance(), c.p, c, trace);
}

CechCochain CechComplex::cech_image(const CircleForm &a, ZigzagTrace *trace) const
{
	return zigzag_yx(instance(), a.q, a, trace);
}

CechForm CechComplex::random_element(Rng &rng, Bidegree b, int max_deg) const
{
	CechForm r{b.p, b.q, {}};
	if (b.q > 1)
		return r;
	for (auto &I : cover_->simplices(b.p))
		r.add(I, on_arc(cover_->domain(I), random_poly(rng, {PwPoly::var()}, max_deg, 3)));
	return r;
}

CircleForm CechComplex::random_global(Rng &rng, int q, int max_deg) const
{
	MultiPoly X = PwPoly::x();
	MultiPoly f = random_poly(rng, {PwPoly::var()}, max_deg, 3);
	if (q == 0)
		f = MultiPoly(random_coefficient(rng)) + X * (MultiPoly(1) - X) * f;
	PwPoly g({Rat(0)}, {f});
	// mix in the partition functions for genuinely piecewise samples
	for (int i = 0; i < cover_->size(); ++i)
		g += cover_->chi(i) * PwPoly(random_coefficient(rng));
	return CircleForm{q, q <= 1 ? g : PwPoly()};
}

CechCochain CechComplex::random_cochain(Rng &rng, int p) const
{
	CechCochain c{p, {}};
	for (auto &I : cover_->simplices(p))
		c.add(I, random_coefficient(rng));
	return c;
}

CechComplex::Instance CechComplex::instance() const
{
	auto self = std::make_shared<const CechComplex>(*this);
	Instance in;
	in.name = "cech-circle" + std::to_string(cover_->size());
	in.max_p = cover_->max_p();
	in.max_q = 1;
	in.d = [self](Bidegree, const CechForm &w) { return self->d(w); };
	in.delta = [self](Bidegree, const CechForm &w) { return self->delta(w); };
	in.h = [self](Bidegree, const CechForm &w) { return self->h(w); };
	in.p_hat = [self](int, const CechForm &w) { return self->p_hat(w); };
	in.i_hat = [self](int, const CircleForm &a) { return self->i_hat(a); };
	in.zero_x = [](int q) { return CircleForm{q, PwPoly()}; };
	in.k = [self](Bidegree, const CechForm &w) { return self->k(w); };
	in.q_hat = [self](int, const CechForm &w) { return self->q_hat(w); };
	in.j_hat = [self](int, const CechCochain &c) { return self->j_hat(c); };
	in.zero_y = [](int p) { return CechCochain{p, {}}; };
	return in;
}

Sampler<CechForm, CircleForm, CechCochain> CechComplex::sampler(int max_deg) const
{
	auto self = std::make_shared<const CechComplex>(*this);
	Sampler<CechForm, CircleForm, CechCochain> s;
	s.element = [self, max_deg](Bidegree b, Rng &rng) { return self->random_element(rng, b, max_deg); };
	s.x = [self, max_deg](int q, Rng &rng) { return self->random_global(rng, q, max_deg); };
	s.y = [self](int p, Rng &rng) { return self->random_cochain(rng, p); };
	return s;
}

Rat circle_integral(const CircleForm &a)
{
	if (a.q != 1)
		throw DegreeMismatch("only 1-forms integrate over the circle");
	return a.coeff.integral();
}

} // namespace vest
