#include "zarchow/series.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "zarchow/chamber.hpp"
#include "zarchow/errors.hpp"
#include "zarchow/zariski.hpp"

namespace zarchow {

namespace {

bool lex_positive(const ExpVec& v) {
    for (int x : v) {
        if (x > 0)
            return true;
        if (x < 0)
            return false;
    }
    return false;
}

ExpVec to_expvec(const Vec& v) {
    ExpVec e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_integer())
            throw DomainError("not-integral", "expected an integer vector, got " + v.str());
        e[i] = static_cast<int>(to_int64(v[i].numerator()));
    }
    return e;
}

Integer binomial(int n, int k) {
    if (k < 0 || k > n)
        return Integer(0);
    Integer r = 1;
    for (int i = 0; i < k; ++i) {
        r *= Integer(n - i);
        r /= Integer(i + 1);
    }
    return r;
}

MultiPoly factor_poly(std::size_t arity, const DenomFactor& f) {
    // (1 - t^v)^m expanded by the binomial theorem.
    MultiPoly p(arity);
    for (int j = 0; j <= f.mult; ++j) {
        ExpVec e(arity, 0);
        for (std::size_t i = 0; i < arity; ++i)
            e[i] = f.v[i] * j;
        Integer c = binomial(f.mult, j);
        if (j % 2 == 1)
            c = -c;
        p.add_term(e, c);
    }
    return p;
}

std::vector<int> divisors_ascending(int n) {
    std::vector<int> out;
    for (int d = 1; d <= n; ++d)
        if (n % d == 0)
            out.push_back(d);
    return out;
}

} // namespace

// --- RationalSeries ---------------------------------------------------------

RationalSeries::RationalSeries(MultiPoly num, std::vector<DenomFactor> den)
    : num_(std::move(num)), den_(std::move(den)), arity_(num_.arity()) {
    canonicalize();
}

void RationalSeries::canonicalize() {
    for (const auto& f : den_) {
        if (f.v.size() != arity_)
            throw DomainError("bad-series", "denominator factor arity mismatch");
        if (std::all_of(f.v.begin(), f.v.end(), [](int x) { return x == 0; }))
            throw DomainError("bad-series", "denominator factor with zero exponent");
        if (f.mult <= 0)
            throw DomainError("bad-series", "denominator multiplicity must be positive");
    }
    if (num_.is_zero()) {
        den_.clear();
        laurent_ = false;
        return;
    }
    std::map<ExpVec, int> merged;
    for (const auto& f : den_)
        merged[f.v] += f.mult;
    den_.clear();
    laurent_ = false;
    for (const auto& [v, m] : merged) {
        den_.push_back(DenomFactor{v, m});
        if (!lex_positive(v))
            laurent_ = true;
    }
}

RationalSeries RationalSeries::monomial(const ExpVec& e, const Integer& c) {
    return RationalSeries(MultiPoly::monomial(e, c), {});
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
    if (arity_ != o.arity_)
        throw DomainError("bad-series", "arity mismatch in series addition");
    std::map<ExpVec, int> mine, theirs, common;
    for (const auto& f : den_)
        mine[f.v] = f.mult;
    for (const auto& f : o.den_)
        theirs[f.v] = f.mult;
    common = mine;
    for (const auto& [v, m] : theirs)
        common[v] = std::max(common[v], m);

    MultiPoly a = num_, b = o.num_;
    for (const auto& [v, m] : common) {
        const int need_a = m - (mine.count(v) ? mine[v] : 0);
        const int need_b = m - (theirs.count(v) ? theirs[v] : 0);
        if (need_a > 0)
            a = a * factor_poly(arity_, DenomFactor{v, need_a});
        if (need_b > 0)
            b = b * factor_poly(arity_, DenomFactor{v, need_b});
    }
    num_ = a + b;
    den_.clear();
    for (const auto& [v, m] : common)
        den_.push_back(DenomFactor{v, m});
    if (certified_window_ && o.certified_window_)
        certified_window_ = std::min(*certified_window_, *o.certified_window_);
    else if (o.certified_window_)
        certified_window_ = o.certified_window_;
    canonicalize();
    return *this;
}

RationalSeries& RationalSeries::operator-=(const RationalSeries& o) {
    RationalSeries neg = o;
    neg.num_ = -neg.num_;
    return *this += neg;
}

RationalSeries RationalSeries::shifted(const ExpVec& e) const {
    RationalSeries r = *this;
    r.num_ = r.num_.shifted(e);
    r.canonicalize();
    return r;
}

RationalSeries RationalSeries::scaled(const MultiPoly& p) const {
    RationalSeries r = *this;
    r.num_ = r.num_ * p;
    r.canonicalize();
    return r;
}

RationalSeries RationalSeries::remapped(const std::vector<std::vector<int>>& m) const {
    MultiPoly num = num_.remapped(m);
    std::vector<DenomFactor> den;
    for (const auto& f : den_) {
        ExpVec v(m.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < arity_; ++j)
                v[i] += m[i][j] * f.v[j];
        den.push_back(DenomFactor{v, f.mult});
    }
    RationalSeries r(std::move(num), std::move(den));
    r.certified_window_ = certified_window_;
    return r;
}

std::string RationalSeries::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    os << "(" << num_.str() << ")";
    if (!den_.empty()) {
        os << " / (";
        for (std::size_t i = 0; i < den_.size(); ++i) {
            if (i)
                os << " ";
            os << "(1 - " << monomial_str(den_[i].v, arity_) << ")";
            if (den_[i].mult > 1)
                os << "^" << den_[i].mult;
        }
        os << ")";
    }
    return os.str();
}

// --- expansion ---------------------------------------------------------------

std::map<ExpVec, Integer> expand(const RationalSeries& r, long degree_bound,
                                 const std::vector<long>& grading) {
    std::vector<long> w = grading;
    if (w.empty())
        w.assign(r.arity(), 1);
    if (w.size() != r.arity())
        throw DomainError("bad-grading", "grading arity mismatch");
    auto wdeg = [&](const ExpVec& e) {
        long s = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            s += w[i] * e[i];
        return s;
    };
    for (const auto& f : r.denominator())
        if (wdeg(f.v) <= 0)
            throw DomainError("laurent-shift-required",
                              "grading is not positive on denominator exponent " +
                                  monomial_str(f.v, r.arity()));

    // Reachable support: numerator exponents pushed forward along the
    // denominator steps while the graded degree stays within the bound.
    std::vector<ExpVec> frontier;
    std::map<ExpVec, Integer> coeff;
    for (const auto& [e, c] : r.numerator().terms()) {
        if (wdeg(e) > degree_bound)
            continue;
        if (!coeff.count(e))
            frontier.push_back(e);
        coeff[e] += c;
    }
    std::vector<ExpVec> support;
    std::map<ExpVec, bool> seen;
    for (const auto& e : frontier)
        seen[e] = true;
    while (!frontier.empty()) {
        ExpVec e = frontier.back();
        frontier.pop_back();
        support.push_back(e);
        for (const auto& f : r.denominator()) {
            ExpVec ne(e.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                ne[i] = e[i] + f.v[i];
            if (wdeg(ne) > degree_bound || seen.count(ne))
                continue;
            seen[ne] = true;
            frontier.push_back(ne);
        }
    }
    std::sort(support.begin(), support.end(), [&](const ExpVec& a, const ExpVec& b) {
        const long da = wdeg(a), db = wdeg(b);
        if (da != db)
            return da < db;
        return a < b;
    });

    // S <- S * 1/(1 - t^v) via S[e] += S[e - v], in increasing graded order.
    for (const auto& f : r.denominator()) {
        for (int rep = 0; rep < f.mult; ++rep) {
            for (const auto& e : support) {
                ExpVec prev(e.size());
                for (std::size_t i = 0; i < e.size(); ++i)
                    prev[i] = e[i] - f.v[i];
                auto it = coeff.find(prev);
                if (it != coeff.end())
                    coeff[e] += it->second;
            }
        }
    }
    std::map<ExpVec, Integer> out;
    for (const auto& [e, c] : coeff)
        if (!c.is_zero())
            out[e] = c;
    return out;
}

std::vector<Integer> expand1(const RationalSeries& r, int degree_bound) {
    if (r.arity() != 1)
        throw DomainError("bad-series", "expand1 needs a single-variable series");
    const auto table = expand(r, degree_bound);
    std::vector<Integer> out(degree_bound + 1, Integer(0));
    for (const auto& [e, c] : table)
        if (e[0] >= 0 && e[0] <= degree_bound)
            out[e[0]] = c;
    return out;
}

// --- quasi-polynomial fitting -------------------------------------------------

Rational QuasiPolynomial::value(long n) const {
    const int res = static_cast<int>(((n % period) + period) % period);
    const auto& [a, b, c] = coeffs[res];
    const Rational rn{(long long)n};
    return a * rn * rn + b * rn + c;
}

bool QuasiPolynomial::constant_a() const {
    for (const auto& t : coeffs)
        if (t[0] != coeffs[0][0])
            return false;
    return true;
}

bool QuasiPolynomial::constant_b() const {
    for (const auto& t : coeffs)
        if (t[1] != coeffs[0][1])
            return false;
    return true;
}

QuasiPolynomial quasi_poly_fit(const std::vector<Integer>& values, int max_period) {
    const long len = static_cast<long>(values.size());
    for (int r = 1; r <= max_period; ++r) {
        // Every residue class needs three points to pin the quadratic down
        // plus at least one more to verify against.
        if (len < 4L * r)
            continue;
        bool ok = true;
        int onset = 0;
        std::vector<std::array<Rational, 3>> table(r);
        for (int res = 0; res < r && ok; ++res) {
            std::vector<long> ns;
            for (long n = res; n < len; n += r)
                ns.push_back(n);
            if (ns.size() < 4) {
                ok = false;
                break;
            }
            // Interpolate on the last three points of the class.
            Mat vand(3, 3);
            Vec rhs(3);
            for (int k = 0; k < 3; ++k) {
                const long n = ns[ns.size() - 3 + k];
                vand(k, 0) = Rational((long long)n) * Rational((long long)n);
                vand(k, 1) = Rational((long long)n);
                vand(k, 2) = Rational(1);
                rhs[k] = Rational(values[n]);
            }
            const SolveResult sol = solve_linear(vand, rhs);
            if (sol.status != SolveStatus::unique) {
                ok = false;
                break;
            }
            const Rational a = sol.solution[0], b = sol.solution[1], c = sol.solution[2];
            table[res] = {a, b, c};
            long first_good = ns.back() + 1;
            for (auto it = ns.rbegin(); it != ns.rend(); ++it) {
                const long n = *it;
                const Rational rn{(long long)n};
                if (a * rn * rn + b * rn + c != Rational(values[n]))
                    break;
                first_good = n;
            }
            // The interpolation points themselves must lie beyond the onset.
            if (first_good > ns[ns.size() - 3]) {
                ok = false;
                break;
            }
            onset = std::max(onset, static_cast<int>(first_good));
        }
        if (ok) {
            QuasiPolynomial q;
            q.period = r;
            q.onset = onset;
            q.coeffs = std::move(table);
            return q;
        }
    }
    throw DomainError("no-fit", "no quasi-polynomial of period <= " +
                                    std::to_string(max_period) + " fits the data");
}

// --- rationalization core -----------------------------------------------------

namespace {

// Multiply-truncate-verify kernel. Computes f = F * prod (1 - u^w)^m on the
// grid [0, box+window]^r and accepts when f vanishes outside [0, box]^r.
// Exponents are local (the k-indexing of the coset being rationalized).
std::optional<MultiPoly>
numerator_within(const std::function<Integer(const std::vector<int>&)>& oracle,
                 const std::vector<std::pair<std::vector<int>, int>>& factors,
                 const std::vector<int>& box, const std::vector<int>& window) {
    const std::size_t r = box.size();
    std::vector<int> ext(r);
    std::size_t total = 1;
    for (std::size_t i = 0; i < r; ++i) {
        ext[i] = box[i] + window[i];
        total *= static_cast<std::size_t>(ext[i] + 1);
    }
    std::vector<std::size_t> stride(r);
    {
        std::size_t acc = 1;
        for (std::size_t i = r; i-- > 0;) {
            stride[i] = acc;
            acc *= static_cast<std::size_t>(ext[i] + 1);
        }
    }
    std::vector<Integer> grid(total);
    std::vector<int> e(r, 0);
    for (std::size_t pos = 0; pos < total; ++pos) {
        grid[pos] = oracle(e);
        for (std::size_t i = r; i-- > 0;) {
            if (e[i] < ext[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
    }
    for (const auto& [w, mult] : factors) {
        std::size_t off = 0;
        for (std::size_t i = 0; i < r; ++i)
            off += stride[i] * static_cast<std::size_t>(w[i]);
        for (int rep = 0; rep < mult; ++rep) {
            // Reverse row-major pass: e - w has a smaller flat index.
            std::vector<int> cur(r);
            for (std::size_t i = 0; i < r; ++i)
                cur[i] = ext[i];
            for (std::size_t pos = total; pos-- > 0;) {
                bool inside = true;
                for (std::size_t i = 0; i < r; ++i)
                    if (cur[i] < w[i]) {
                        inside = false;
                        break;
                    }
                if (inside)
                    grid[pos] -= grid[pos - off];
                for (std::size_t i = r; i-- > 0;) {
                    if (cur[i] > 0) {
                        --cur[i];
                        break;
                    }
                    cur[i] = ext[i];
                }
            }
        }
    }
    MultiPoly f(r);
    std::fill(e.begin(), e.end(), 0);
    for (std::size_t pos = 0; pos < total; ++pos) {
        bool in_box = true;
        for (std::size_t i = 0; i < r; ++i)
            if (e[i] > box[i]) {
                in_box = false;
                break;
            }
        if (!grid[pos].is_zero()) {
            if (!in_box)
                return std::nullopt;
            ExpVec ee(e.begin(), e.end());
            f.add_term(ee, grid[pos]);
        }
        for (std::size_t i = r; i-- > 0;) {
            if (e[i] < ext[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
        }
    }
    return f;
}

} // namespace

// --- poincare_series ----------------------------------------------------------

RationalSeries poincare_series(const SeqOracle& h, bool effective, int r_hint,
                               const SeriesOptions& opts) {
    if (r_hint < 1)
        throw DomainError("bad-period-hint", "period hint must be positive");
    std::map<int, Integer> cache;
    auto oracle = [&](const std::vector<int>& e) {
        auto it = cache.find(e[0]);
        if (it == cache.end())
            it = cache.emplace(e[0], h(e[0])).first;
        return it->second;
    };
    for (int r : divisors_ascending(r_hint)) {
        std::vector<std::pair<std::vector<int>, int>> factors;
        if (effective) {
            factors.push_back({{1}, 2});
            factors.push_back({{r}, 1});
        } else {
            factors.push_back({{r}, 3});
        }
        const int box = effective ? r + 2 : 3 * r;
        const int window = opts.window_mult * box;
        auto f = numerator_within(oracle, factors, {box}, {window});
        if (!f)
            continue;
        std::vector<DenomFactor> den;
        if (effective) {
            den.push_back(DenomFactor{{1}, 2});
            den.push_back(DenomFactor{{r}, 1});
        } else {
            den.push_back(DenomFactor{{r}, 3});
        }
        RationalSeries out(std::move(*f), std::move(den));
        out.set_certified_window(window);
        return out;
    }
    throw DomainError("not-rational-within-window",
                      "no candidate period among the divisors of " +
                          std::to_string(r_hint) + " verified");
}

// --- cone_series ---------------------------------------------------------------

namespace {

struct PointCache {
    const H0Oracle& h;
    std::map<ExpVec, Integer> cache;
    Integer operator()(const ExpVec& e) {
        auto it = cache.find(e);
        if (it == cache.end())
            it = cache.emplace(e, h(e)).first;
        return it->second;
    }
};

} // namespace

RationalSeries cone_series(const SimplicialCone& s, const H0Oracle& h,
                           const SeriesOptions& opts) {
    const std::size_t arity = s.ambient_dim();
    const std::size_t r = s.gens.size();
    if (r == 0) {
        // The zero cone: its single lattice point is the origin.
        return RationalSeries::monomial(ExpVec(arity, 0), h(ExpVec(arity, 0)));
    }
    std::vector<ExpVec> steps;
    for (const Vec& g : s.gens)
        steps.push_back(to_expvec(g));
    const std::vector<Vec> lambda = fundamental_parallelepiped(s);

    PointCache cached{h, {}};
    auto ambient = [&](const ExpVec& base, const std::vector<int>& k) {
        ExpVec e = base;
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t i = 0; i < arity; ++i)
                e[i] += k[j] * steps[j][i];
        return e;
    };

    for (int growth = 0; growth <= opts.max_box_growth; ++growth) {
        const int b = 3 + growth;
        const std::vector<int> box(r, b), window(r, opts.window_mult * b);
        std::vector<std::pair<std::vector<int>, int>> factors;
        for (std::size_t j = 0; j < r; ++j) {
            std::vector<int> unit(r, 0);
            unit[j] = 1;
            factors.push_back({unit, 3});
        }
        MultiPoly num(arity);
        bool all_ok = true;
        for (const Vec& ev : lambda) {
            const ExpVec e0 = to_expvec(ev);
            auto coset_oracle = [&](const std::vector<int>& k) { return cached(ambient(e0, k)); };
            auto f = numerator_within(coset_oracle, factors, box, window);
            if (!f) {
                all_ok = false;
                break;
            }
            for (const auto& [le, c] : f->terms()) {
                std::vector<int> k(le.begin(), le.end());
                num.add_term(ambient(e0, k), c);
            }
        }
        if (!all_ok)
            continue;
        std::vector<DenomFactor> den;
        for (std::size_t j = 0; j < r; ++j)
            den.push_back(DenomFactor{steps[j], 3});
        RationalSeries out(std::move(num), std::move(den));
        out.set_certified_window(opts.window_mult * b);
        return out;
    }
    throw DomainError("coset-not-rational-within-window",
                      "no parallelepiped coset rationalization verified");
}

// --- inclusion_exclusion --------------------------------------------------------

namespace {

std::string cone_key(const RationalCone& c) {
    std::vector<Vec> gens = c.generators();
    std::sort(gens.begin(), gens.end());
    std::ostringstream os;
    for (const auto& g : gens)
        os << g.str() << ";";
    return os.str();
}

struct IeContext {
    const H0Oracle& h;
    const SeriesOptions& opts;
    std::map<std::string, RationalSeries> memo;
};

RationalSeries ie_series_of_cone(const RationalCone& c, IeContext& ctx) {
    const std::string key = cone_key(c);
    auto hit = ctx.memo.find(key);
    if (hit != ctx.memo.end())
        return hit->second;

    RationalSeries result = RationalSeries::zero(c.ambient_dim());
    if (c.is_zero_cone()) {
        result = RationalSeries::monomial(ExpVec(c.ambient_dim(), 0),
                                          ctx.h(ExpVec(c.ambient_dim(), 0)));
    } else {
        const std::vector<SimplicialCone> simplices = triangulate(c);
        if (simplices.size() == 1) {
            result = cone_series(simplices[0], ctx.h, ctx.opts);
        } else {
            // Inclusion-exclusion over the covering simplices; intersections
            // are strictly lower-dimensional, so the recursion terminates.
            std::vector<RationalCone> pieces;
            for (const auto& s : simplices)
                pieces.push_back(RationalCone::from_generators(c.ambient_dim(), s.gens));
            const std::size_t n = pieces.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                RationalCone inter = pieces[0];
                bool first = true;
                int bits = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!(mask & (std::size_t(1) << i)))
                        continue;
                    ++bits;
                    inter = first ? pieces[i] : inter.intersect(pieces[i]);
                    first = false;
                }
                const RationalSeries sub = ie_series_of_cone(inter, ctx);
                if (bits % 2 == 1)
                    result += sub;
                else
                    result -= sub;
            }
        }
    }
    ctx.memo.emplace(key, result);
    return result;
}

} // namespace

RationalSeries inclusion_exclusion(const std::vector<RationalCone>& cones,
                                   const H0Oracle& h, const SeriesOptions& opts) {
    if (cones.empty())
        throw DomainError("bad-argument", "inclusion-exclusion needs at least one cone");
    const std::size_t arity = cones[0].ambient_dim();
    for (const auto& c : cones)
        if (c.ambient_dim() != arity)
            throw DomainError("dimension-mismatch", "cones live in different spaces");

    IeContext ctx{h, opts, {}};
    RationalSeries acc = RationalSeries::zero(arity);
    const std::size_t n = cones.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        RationalCone inter = cones[0];
        bool first = true;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i)))
                continue;
            ++bits;
            inter = first ? cones[i] : inter.intersect(cones[i]);
            first = false;
        }
        const RationalSeries sub = ie_series_of_cone(inter, ctx);
        if (bits % 2 == 1)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

// --- chamber_reduced_series -------------------------------------------------------

namespace {

struct BigStep {
    Divisor l;   // integral step divisor
    Divisor p;   // nef part (integral inside big_integral)
    Divisor n;   // negative part
    ExpVec exp;  // exponent step in the output lattice
};

struct ChamberCtx {
    const SurfaceLattice& s;
    const std::vector<Divisor>& bigs;
    const DivisorH0& h0raw;
    const SeriesOptions& opts;
    ChamberDiagnostics* diag;
    std::size_t l;
    std::map<Vec, Integer> h0_cache;
    std::map<std::string, RationalSeries> big_memo;
    std::map<std::string, RationalSeries> nef_memo;
    std::map<std::string, RationalSeries> cone_memo;

    Integer h0(const Divisor& d) {
        auto it = h0_cache.find(d);
        if (it == h0_cache.end())
            it = h0_cache.emplace(d, h0raw(d)).first;
        return it->second;
    }
    void note(const std::string& s_) {
        if (diag)
            diag->notes.push_back(s_);
    }
};

Divisor phi(const ChamberCtx& ctx, const ExpVec& m) {
    Divisor d(ctx.s.rank());
    for (std::size_t i = 0; i < ctx.l; ++i)
        d += Rational(m[i]) * ctx.bigs[i];
    return d;
}

ExpVec exp_sum(const std::vector<ExpVec>& exps, std::size_t arity) {
    ExpVec e(arity, 0);
    for (const auto& x : exps)
        for (std::size_t i = 0; i < arity; ++i)
            e[i] += x[i];
    return e;
}

std::string steps_key(const Divisor& base, const std::vector<BigStep>& steps) {
    std::ostringstream os;
    os << base.str() << "|";
    for (const auto& st : steps) {
        os << st.l.str() << "@";
        for (int x : st.exp)
            os << x << ",";
        os << ";";
    }
    return os.str();
}

// Series of sum_{k in N^r} h0(G + sum k_j P_j) t^{sum k_j e_j}, for nef
// integral steps. The numerator candidate is certified on a window; when the
// head of the series refuses the candidate, the low-index strips k_j < N are
// chopped off and recursed on fewer variables.
RationalSeries nef_series(ChamberCtx& ctx, const Divisor& g,
                          const std::vector<Divisor>& steps,
                          const std::vector<ExpVec>& exps) {
    const std::size_t r = steps.size();
    if (r == 0)
        return RationalSeries::monomial(ExpVec(ctx.l, 0), ctx.h0(g));

    std::ostringstream keyos;
    keyos << g.str() << "#";
    for (std::size_t j = 0; j < r; ++j) {
        keyos << steps[j].str() << "@";
        for (int x : exps[j])
            keyos << x << ",";
    }
    const std::string key = keyos.str();
    auto hit = ctx.nef_memo.find(key);
    if (hit != ctx.nef_memo.end())
        return hit->second;

    std::vector<std::pair<std::vector<int>, int>> factors;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<int> unit(r, 0);
        unit[j] = 1;
        factors.push_back({unit, 3});
    }
    const ExpVec total_step = exp_sum(exps, ctx.l);

    for (int chop = 0; chop <= ctx.opts.chop_cap; ++chop) {
        Divisor head = g;
        for (std::size_t j = 0; j < r; ++j)
            head += Rational(chop) * steps[j];
        auto oracle = [&](const std::vector<int>& k) {
            Divisor d = head;
            for (std::size_t j = 0; j < r; ++j)
                d += Rational(k[j]) * steps[j];
            return ctx.h0(d);
        };
        std::optional<MultiPoly> f;
        int used_window = 0;
        for (int growth = 0; growth <= ctx.opts.max_box_growth && !f; ++growth) {
            const int b = 3 + growth;
            used_window = ctx.opts.window_mult * b;
            f = numerator_within(oracle, factors, std::vector<int>(r, b),
                                 std::vector<int>(r, used_window));
        }
        if (!f)
            continue;
        if (chop > 0)
            ctx.note("nef chop N=" + std::to_string(chop) + " at base " + g.str());

        MultiPoly num(ctx.l);
        for (const auto& [le, c] : f->terms()) {
            ExpVec e(ctx.l, 0);
            for (std::size_t i = 0; i < ctx.l; ++i) {
                e[i] = chop * total_step[i];
                for (std::size_t j = 0; j < r; ++j)
                    e[i] += le[j] * exps[j][i];
            }
            num.add_term(e, c);
        }
        std::vector<DenomFactor> den;
        for (std::size_t j = 0; j < r; ++j)
            den.push_back(DenomFactor{exps[j], 3});
        RationalSeries result(std::move(num), std::move(den));
        result.set_certified_window(used_window);

        // Low-index strips m_i < chop for i in a nonempty index set, by
        // inclusion-exclusion; each strip is a series on fewer variables.
        for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
            int bits = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (mask & (std::size_t(1) << i))
                    ++bits;
            std::vector<Divisor> rest_steps;
            std::vector<ExpVec> rest_exps;
            std::vector<std::size_t> strip_vars;
            for (std::size_t i = 0; i < r; ++i) {
                if (mask & (std::size_t(1) << i))
                    strip_vars.push_back(i);
                else {
                    rest_steps.push_back(steps[i]);
                    rest_exps.push_back(exps[i]);
                }
            }
            std::vector<int> c(strip_vars.size(), 0);
            bool more = !strip_vars.empty() && chop > 0;
            while (more) {
                Divisor base = g;
                ExpVec off(ctx.l, 0);
                for (std::size_t a = 0; a < strip_vars.size(); ++a) {
                    base += Rational(c[a]) * steps[strip_vars[a]];
                    for (std::size_t i = 0; i < ctx.l; ++i)
                        off[i] += c[a] * exps[strip_vars[a]][i];
                }
                const RationalSeries sub =
                    nef_series(ctx, base, rest_steps, rest_exps).shifted(off);
                if (bits % 2 == 1)
                    result += sub;
                else
                    result -= sub;
                std::size_t a = 0;
                while (a < c.size()) {
                    if (c[a] + 1 < chop) {
                        ++c[a];
                        break;
                    }
                    c[a] = 0;
                    ++a;
                }
                if (a == c.size())
                    more = false;
            }
        }
        ctx.nef_memo.emplace(key, result);
        return result;
    }
    throw DomainError("coset-not-rational-within-window",
                      "nef coset at base " + g.str() + " did not verify");
}

// Series over N^r of h0(D0 + sum m_j L_j) for integral steps with integral
// Zariski parts, pairwise compatible. Shifts the base until its decomposition
// is compatible with the steps, which reduces evaluation to the nef parts.
RationalSeries big_integral(ChamberCtx& ctx, const Divisor& d0,
                            const std::vector<BigStep>& steps) {
    const std::size_t r = steps.size();
    if (r == 0)
        return RationalSeries::monomial(ExpVec(ctx.l, 0), ctx.h0(d0));

    const std::string key = steps_key(d0, steps);
    auto hit = ctx.big_memo.find(key);
    if (hit != ctx.big_memo.end())
        return hit->second;

    Divisor sum_l(ctx.s.rank()), sum_p(ctx.s.rank()), sum_n(ctx.s.rank());
    for (const auto& st : steps) {
        sum_l += st.l;
        sum_p += st.p;
        sum_n += st.n;
    }
    int shift = -1;
    for (int n = 0; n <= ctx.opts.shift_cap; ++n) {
        Divisor b = d0;
        for (int i = 0; i < n; ++i)
            b += sum_l;
        try {
            const ZariskiPair z = zariski_decompose(ctx.s, b);
            if (pair(ctx.s, z.p + sum_p, z.n + sum_n).is_zero()) {
                shift = n;
                break;
            }
        } catch (const DomainError& e) {
            if (e.code() != "not-pseudo-effective")
                throw;
        }
    }
    if (shift < 0)
        throw DomainError("compatibility-shift-not-found",
                          "no shift <= " + std::to_string(ctx.opts.shift_cap) +
                              " makes the decomposition at " + d0.str() +
                              " compatible with the steps");
    if (shift > 0)
        ctx.note("compatibility shift n=" + std::to_string(shift) + " at base " + d0.str());

    Divisor b = d0;
    for (int i = 0; i < shift; ++i)
        b += sum_l;
    std::vector<Divisor> nef_steps;
    std::vector<ExpVec> exps;
    for (const auto& st : steps) {
        nef_steps.push_back(st.p);
        exps.push_back(st.exp);
    }
    ExpVec main_off(ctx.l, 0);
    for (const auto& st : steps)
        for (std::size_t i = 0; i < ctx.l; ++i)
            main_off[i] += shift * st.exp[i];
    RationalSeries result = nef_series(ctx, b, nef_steps, exps).shifted(main_off);

    for (std::size_t mask = 1; mask < (std::size_t(1) << r) && shift > 0; ++mask) {
        int bits = 0;
        std::vector<std::size_t> strip_vars;
        std::vector<BigStep> rest;
        for (std::size_t i = 0; i < r; ++i) {
            if (mask & (std::size_t(1) << i)) {
                ++bits;
                strip_vars.push_back(i);
            } else {
                rest.push_back(steps[i]);
            }
        }
        std::vector<int> c(strip_vars.size(), 0);
        bool more = true;
        while (more) {
            Divisor base = d0;
            ExpVec off(ctx.l, 0);
            for (std::size_t a = 0; a < strip_vars.size(); ++a) {
                base += Rational(c[a]) * steps[strip_vars[a]].l;
                for (std::size_t i = 0; i < ctx.l; ++i)
                    off[i] += c[a] * steps[strip_vars[a]].exp[i];
            }
            const RationalSeries sub = big_integral(ctx, base, rest).shifted(off);
            if (bits % 2 == 1)
                result += sub;
            else
                result -= sub;
            std::size_t a = 0;
            while (a < c.size()) {
                if (c[a] + 1 < shift) {
                    ++c[a];
                    break;
                }
                c[a] = 0;
                ++a;
            }
            if (a == c.size())
                more = false;
        }
    }
    ctx.big_memo.emplace(key, result);
    return result;
}

// Clears denominators: replaces each step L by sL with integral Zariski
// parts, summing over the s^r residue offsets.
RationalSeries big_series(ChamberCtx& ctx, const Divisor& d0,
                          const std::vector<std::pair<Divisor, ExpVec>>& raw_steps) {
    const std::size_t r = raw_steps.size();
    if (r == 0)
        return RationalSeries::monomial(ExpVec(ctx.l, 0), ctx.h0(d0));

    std::vector<ZariskiPair> zs;
    Divisor sum_p(ctx.s.rank()), sum_n(ctx.s.rank());
    Integer s_clear = 1;
    for (const auto& [l_div, e] : raw_steps) {
        ZariskiPair z = zariski_decompose(ctx.s, l_div);
        sum_p += z.p;
        sum_n += z.n;
        for (std::size_t i = 0; i < ctx.s.rank(); ++i)
            s_clear = lcm_int(s_clear, z.p[i].denominator());
        zs.push_back(std::move(z));
    }
    if (!pair(ctx.s, sum_p, sum_n).is_zero())
        throw DomainError("steps-incompatible",
                          "step divisors do not have compatible decompositions");
    const int s = static_cast<int>(to_int64(s_clear));
    if (s > 1)
        ctx.note("denominator clearing s=" + std::to_string(s));

    std::vector<BigStep> steps;
    for (std::size_t j = 0; j < r; ++j) {
        BigStep st;
        st.l = Rational(s) * raw_steps[j].first;
        st.p = Rational(s) * zs[j].p;
        st.n = Rational(s) * zs[j].n;
        st.exp = raw_steps[j].second;
        for (auto& x : st.exp)
            x *= s;
        steps.push_back(std::move(st));
    }
    if (s == 1)
        return big_integral(ctx, d0, steps);

    RationalSeries acc = RationalSeries::zero(ctx.l);
    std::vector<int> res(r, 0);
    for (;;) {
        Divisor base = d0;
        ExpVec off(ctx.l, 0);
        for (std::size_t j = 0; j < r; ++j) {
            base += Rational(res[j]) * raw_steps[j].first;
            for (std::size_t i = 0; i < ctx.l; ++i)
                off[i] += res[j] * raw_steps[j].second[i];
        }
        acc += big_integral(ctx, base, steps).shifted(off);
        std::size_t j = 0;
        while (j < r) {
            if (res[j] + 1 < s) {
                ++res[j];
                break;
            }
            res[j] = 0;
            ++j;
        }
        if (j == r)
            break;
    }
    return acc;
}

RationalSeries chamber_simplex_series(ChamberCtx& ctx, const Divisor& d,
                                      const SimplicialCone& simplex) {
    std::vector<std::pair<Divisor, ExpVec>> steps;
    for (const Vec& w : simplex.gens) {
        const ExpVec e = to_expvec(w);
        for (int x : e)
            if (x < 0)
                throw DomainError("chamber-internal",
                                  "index-space simplex left the positive orthant");
        steps.emplace_back(phi(ctx, e), e);
    }
    RationalSeries acc = RationalSeries::zero(ctx.l);
    for (const Vec& ev : fundamental_parallelepiped(simplex)) {
        const ExpVec e0 = to_expvec(ev);
        acc += big_series(ctx, d + phi(ctx, e0), steps).shifted(e0);
    }
    return acc;
}

RationalSeries chamber_series_of_cone(ChamberCtx& ctx, const Divisor& d,
                                      const RationalCone& c) {
    const std::string key = cone_key(c);
    auto hit = ctx.cone_memo.find(key);
    if (hit != ctx.cone_memo.end())
        return hit->second;

    RationalSeries result = RationalSeries::zero(ctx.l);
    if (c.is_zero_cone()) {
        result = RationalSeries::monomial(ExpVec(ctx.l, 0), ctx.h0(d));
    } else {
        const std::vector<SimplicialCone> simplices = triangulate(c);
        if (simplices.size() == 1) {
            result = chamber_simplex_series(ctx, d, simplices[0]);
        } else {
            std::vector<RationalCone> pieces;
            for (const auto& s : simplices)
                pieces.push_back(RationalCone::from_generators(c.ambient_dim(), s.gens));
            const std::size_t n = pieces.size();
            for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
                RationalCone inter = pieces[0];
                bool first = true;
                int bits = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (!(mask & (std::size_t(1) << i)))
                        continue;
                    ++bits;
                    inter = first ? pieces[i] : inter.intersect(pieces[i]);
                    first = false;
                }
                const RationalSeries sub = chamber_series_of_cone(ctx, d, inter);
                if (bits % 2 == 1)
                    result += sub;
                else
                    result -= sub;
            }
        }
    }
    ctx.cone_memo.emplace(key, result);
    return result;
}

} // namespace

RationalSeries chamber_reduced_series(const SurfaceLattice& s, const Divisor& d,
                                      const std::vector<Divisor>& bigs,
                                      const DivisorH0& h0,
                                      const SeriesOptions& opts,
                                      ChamberDiagnostics* diag) {
    ChamberCtx ctx{s, bigs, h0, opts, diag, bigs.size(), {}, {}, {}, {}};
    if (!d.is_integral())
        throw DomainError("not-integral", "base divisor must be integral");
    if (bigs.empty())
        return RationalSeries::monomial(ExpVec(0), ctx.h0(d));
    for (const Divisor& b : bigs) {
        if (!b.is_integral())
            throw DomainError("not-integral", "series divisors must be integral");
        if (!is_big(s, b))
            throw DomainError("not-big", "series divisor " + b.str() +
                                             " is not big relative to the catalogue");
    }

    const RationalCone w = RationalCone::from_generators(s.rank(), bigs);
    const std::vector<Chamber> chambers = zariski_chambers(s, w);

    std::vector<RationalCone> pullbacks;
    for (const Chamber& ch : chambers) {
        std::vector<Vec> normals, eqs;
        auto pullback = [&](const Vec& a) {
            Vec pb(bigs.size());
            for (std::size_t i = 0; i < bigs.size(); ++i)
                pb[i] = dot(a, bigs[i]);
            return pb;
        };
        for (const Vec& f : ch.cone.facets()) {
            Vec pb = pullback(f);
            if (!pb.is_zero())
                normals.push_back(primitive(pb));
        }
        for (const Vec& e : ch.cone.equations()) {
            Vec pb = pullback(e);
            if (!pb.is_zero())
                eqs.push_back(primitive(pb));
        }
        for (std::size_t i = 0; i < bigs.size(); ++i)
            normals.push_back(Vec::unit(bigs.size(), i));
        pullbacks.push_back(RationalCone::from_inequalities(bigs.size(), normals, eqs));
    }

    RationalSeries acc = RationalSeries::zero(bigs.size());
    const std::size_t n = pullbacks.size();
    for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
        RationalCone inter = pullbacks[0];
        bool first = true;
        int bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask & (std::size_t(1) << i)))
                continue;
            ++bits;
            inter = first ? pullbacks[i] : inter.intersect(pullbacks[i]);
            first = false;
        }
        const RationalSeries sub = chamber_series_of_cone(ctx, d, inter);
        if (bits % 2 == 1)
            acc += sub;
        else
            acc -= sub;
    }
    return acc;
}

RationalSeries direct_rationalize(std::size_t arity, const H0Oracle& h, int period_hint,
                                  const SeriesOptions& opts) {
    if (period_hint < 1)
        throw DomainError("bad-period-hint", "period hint must be positive");
    if (arity == 0)
        return RationalSeries::monomial(ExpVec(), h(ExpVec()));
    PointCache cached{h, {}};
    for (int p : divisors_ascending(period_hint)) {
        std::vector<std::pair<std::vector<int>, int>> factors;
        for (std::size_t j = 0; j < arity; ++j) {
            std::vector<int> step(arity, 0);
            step[j] = p;
            factors.push_back({step, 3});
        }
        for (int growth = 0; growth <= opts.max_box_growth; ++growth) {
            const int b = 3 * p + growth;
            auto oracle = [&](const std::vector<int>& k) {
                return cached(ExpVec(k.begin(), k.end()));
            };
            auto f = numerator_within(oracle, factors, std::vector<int>(arity, b),
                                      std::vector<int>(arity, opts.window_mult * b));
            if (!f)
                continue;
            std::vector<DenomFactor> den;
            for (std::size_t j = 0; j < arity; ++j) {
                ExpVec step(arity, 0);
                step[j] = p;
                den.push_back(DenomFactor{step, 3});
            }
            RationalSeries out(std::move(*f), std::move(den));
            out.set_certified_window(opts.window_mult * b);
            return out;
        }
    }
    throw DomainError("not-rational-within-window",
                      "no candidate denominator verified on the window");
}

} // namespace zarchow
