#include "charclass/milnor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>
#include <utility>

#include "charclass/errors.hpp"

namespace charclass {

namespace {

ExpVec zero_exp() {
    ExpVec e{};
    e.fill(0);
    return e;
}

ExpVec exp_add(const ExpVec& a, const ExpVec& b) {
    ExpVec r{};
    for (int i = 0; i < kMaxVars; ++i) {
        int s = int(a[i]) + int(b[i]);
        if (s > 255) throw PreconditionError("monomial degree out of supported range");
        r[i] = static_cast<std::uint8_t>(s);
    }
    return r;
}

bool exp_divides(const ExpVec& a, const ExpVec& b) {
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > b[i]) return false;
    return true;
}

ExpVec exp_sub(const ExpVec& b, const ExpVec& a) {
    ExpVec r{};
    for (int i = 0; i < kMaxVars; ++i) r[i] = static_cast<std::uint8_t>(b[i] - a[i]);
    return r;
}

// All exponent vectors in the first nv variables with total degree exactly d.
void monomials_of_degree(int nv, int d, int from, ExpVec& cur,
                         std::vector<ExpVec>& out) {
    if (from == nv - 1) {
        cur[from] = static_cast<std::uint8_t>(d);
        out.push_back(cur);
        cur[from] = 0;
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[from] = static_cast<std::uint8_t>(k);
        monomials_of_degree(nv, d - k, from + 1, cur, out);
    }
    cur[from] = 0;
}

std::vector<ExpVec> monomials_below(int nv, int max_deg_exclusive) {
    std::vector<ExpVec> out;
    ExpVec cur = zero_exp();
    for (int d = 0; d < max_deg_exclusive; ++d)
        monomials_of_degree(nv, d, 0, cur, out);
    return out;
}

// ---------------------------------------------------------------------------
// Sparse exact row echelon over the rationals. Rows are (column, coefficient)
// pairs sorted by column; each stored row is normalized with leading
// coefficient 1 and a distinct leading column, so span membership is decided
// by eliminating leading entries only.

using SparseRow = std::vector<std::pair<int, Rational>>;

class RationalEchelon {
public:
    int rank() const { return static_cast<int>(rows_.size()); }

    SparseRow reduce(SparseRow row) const {
        for (;;) {
            if (row.empty()) return row;
            auto it = pivot_.find(row.front().first);
            if (it == pivot_.end()) return row;
            subtract_scaled(row, rows_[it->second], row.front().second);
        }
    }

    bool insert(SparseRow row) {
        row = reduce(std::move(row));
        if (row.empty()) return false;
        const Rational lead = row.front().second;
        for (auto& [c, v] : row) v /= lead;
        pivot_.emplace(row.front().first, rank());
        rows_.push_back(std::move(row));
        return true;
    }

    bool in_span(SparseRow row) const { return reduce(std::move(row)).empty(); }

private:
    // row -= factor * other; other has leading coefficient 1 and shares
    // row's leading column, which therefore cancels exactly.
    static void subtract_scaled(SparseRow& row, const SparseRow& other,
                                const Rational& factor) {
        SparseRow out;
        out.reserve(row.size() + other.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < other.size()) {
            if (j == other.size() ||
                (i < row.size() && row[i].first < other[j].first)) {
                out.push_back(std::move(row[i++]));
            } else if (i == row.size() || other[j].first < row[i].first) {
                out.emplace_back(other[j].first, -factor * other[j].second);
                ++j;
            } else {
                Rational v = row[i].second - factor * other[j].second;
                if (v != 0) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row = std::move(out);
    }

    std::vector<SparseRow> rows_;
    std::unordered_map<int, int> pivot_;
};

// ---------------------------------------------------------------------------
// Graded reverse-lexicographic order, largest first: higher total degree
// wins, ties broken by the smaller exponent at the last differing variable.

struct GrevlexDesc {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da > db;
        for (int i = kMaxVars - 1; i >= 0; --i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
};

using GPoly = std::map<ExpVec, Rational, GrevlexDesc>;

GPoly to_gpoly(const Poly& p) {
    GPoly g;
    for (const auto& [e, c] : p.terms()) g.emplace(e, c);
    return g;
}

void gp_add_term(GPoly& p, const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = p.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

// p -= factor * x^shift * g
void gp_subtract_multiple(GPoly& p, const Rational& factor, const ExpVec& shift,
                          const GPoly& g) {
    for (const auto& [e, c] : g) gp_add_term(p, exp_add(e, shift), -factor * c);
}

GPoly normal_form(GPoly p, const std::vector<GPoly>& basis) {
    GPoly rem;
    while (!p.empty()) {
        const auto& [le, lc] = *p.begin();
        bool reduced = false;
        for (const auto& g : basis) {
            const auto& [ge, gc] = *g.begin();
            if (exp_divides(ge, le)) {
                gp_subtract_multiple(p, lc / gc, exp_sub(le, ge), g);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.insert(*p.begin());
            p.erase(p.begin());
        }
    }
    return rem;
}

GPoly s_polynomial(const GPoly& f, const GPoly& g) {
    const auto& [fe, fc] = *f.begin();
    const auto& [ge, gc] = *g.begin();
    ExpVec lcm{};
    for (int i = 0; i < kMaxVars; ++i) lcm[i] = std::max(fe[i], ge[i]);
    GPoly s;
    gp_subtract_multiple(s, Rational(-1) / fc, exp_sub(lcm, fe), f);
    gp_subtract_multiple(s, Rational(1) / gc, exp_sub(lcm, ge), g);
    return s;
}

bool coprime_leads(const GPoly& f, const GPoly& g) {
    const ExpVec& a = f.begin()->first;
    const ExpVec& b = g.begin()->first;
    for (int i = 0; i < kMaxVars; ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------------------

Rational parse_rational(const std::string& text) {
    std::size_t pos = 0;
    auto parse_int = [&](bool allow_sign) -> Int {
        bool neg = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            neg = text[pos] == '-';
            ++pos;
        }
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits += text[pos++];
        if (digits.empty()) throw ParseError("expected a number", pos);
        Int v(digits);
        return neg ? Int(-v) : v;
    };
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    Int num = parse_int(true);
    Int den(1);
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = parse_int(false);
        if (den == 0) throw ParseError("zero denominator", pos);
    }
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos != text.size())
        throw ParseError("unexpected character in rational literal", pos);
    return Rational(num, den);
}

std::vector<Rational> parse_point(const std::string& text) {
    std::vector<Rational> coords;
    std::size_t start = 0;
    for (;;) {
        std::size_t colon = text.find(':', start);
        std::string piece = text.substr(start, colon == std::string::npos
                                                   ? std::string::npos
                                                   : colon - start);
        coords.push_back(parse_rational(piece));
        if (colon == std::string::npos) break;
        start = colon + 1;
    }
    if (coords.size() < 2)
        throw ParseError("a projective point needs at least two coordinates", 0);
    bool all_zero = true;
    for (const auto& c : coords) all_zero = all_zero && c == 0;
    if (all_zero) throw ParseError("the zero vector is not a projective point", 0);
    return coords;
}

std::vector<std::vector<Rational>> parse_point_list(const std::string& text) {
    std::vector<std::vector<Rational>> points;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t semi = text.find(';', start);
        std::string piece = text.substr(start, semi == std::string::npos
                                                   ? std::string::npos
                                                   : semi - start);
        std::size_t a = piece.find_first_not_of(" \t");
        if (a != std::string::npos) {
            std::size_t b = piece.find_last_not_of(" \t");
            points.push_back(parse_point(piece.substr(a, b - a + 1)));
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    return points;
}

std::string point_to_string(const std::vector<Rational>& p) {
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ":";
        out += rat_str(p[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------

int verify_singular_point(const Poly& f, const std::vector<Rational>& p,
                          std::optional<int> forced_chart) {
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1)
        throw PreconditionError("a nonzero homogeneous polynomial of positive degree is required");
    if (static_cast<int>(p.size()) != f.num_vars())
        throw PreconditionError("point has " + std::to_string(p.size()) +
                                " coordinates but the polynomial has " +
                                std::to_string(f.num_vars()) + " variables");
    int chart = -1;
    if (forced_chart) {
        chart = *forced_chart;
        if (chart < 0 || chart >= f.num_vars())
            throw PreconditionError("chart index out of range");
        if (p[chart] == 0)
            throw PreconditionError("the point has coordinate zero in the requested chart");
    } else {
        for (int i = 0; i < f.num_vars() && chart < 0; ++i)
            if (p[i] != 0) chart = i;
        if (chart < 0) throw PreconditionError("the zero vector is not a projective point");
    }
    if (f.evaluate(p) != 0)
        throw PreconditionError("the point " + point_to_string(p) +
                                " does not lie on the hypersurface");
    for (const Poly& d : f.gradient())
        if (d.evaluate(p) != 0)
            throw PreconditionError("the point " + point_to_string(p) +
                                    " is a smooth point of the hypersurface");
    return chart;
}

Poly local_equation(const Poly& f_homogeneous, const std::vector<Rational>& point,
                    int chart) {
    if (chart < 0 || chart >= f_homogeneous.num_vars() ||
        static_cast<int>(point.size()) != f_homogeneous.num_vars())
        throw PreconditionError("chart or point incompatible with the polynomial");
    const Rational scale = point[chart];
    if (scale == 0)
        throw PreconditionError("the point has coordinate zero in the requested chart");
    std::vector<Rational> affine;
    for (int i = 0; i < f_homogeneous.num_vars(); ++i)
        if (i != chart) affine.push_back(point[i] / scale);
    return f_homogeneous.dehomogenize(chart).translate(affine);
}

// ---------------------------------------------------------------------------

MilnorResult milnor_at(const Poly& f_affine, int max_cutoff) {
    const int nv = f_affine.num_vars();
    if (nv < 1) throw PreconditionError("at least one variable is required");
    if (max_cutoff < 2 || max_cutoff > 200)
        throw PreconditionError("cutoff out of supported range");
    for (const auto& [e, c] : f_affine.terms())
        if (total_degree(e) == 0)
            throw PreconditionError("the origin does not lie on the hypersurface");

    std::vector<Poly> grad = f_affine.gradient();

    MilnorResult last{0, max_cutoff, false};
    for (int D = 2; D <= max_cutoff; ++D) {
        std::vector<ExpVec> cols = monomials_below(nv, D);
        std::sort(cols.begin(), cols.end(), GradedLexDesc{});
        std::map<ExpVec, int, GradedLexDesc> index;
        for (int i = 0; i < static_cast<int>(cols.size()); ++i) index.emplace(cols[i], i);

        RationalEchelon ech;
        for (const Poly& g : grad) {
            if (g.is_zero()) continue;
            for (const ExpVec& alpha : cols) {
                SparseRow row;
                for (const auto& [e, c] : g.terms()) {
                    if (total_degree(e) + total_degree(alpha) >= D) continue;
                    row.emplace_back(index.at(exp_add(e, alpha)), c);
                }
                if (row.empty()) continue;
                std::sort(row.begin(), row.end(),
                          [](const auto& a, const auto& b) { return a.first < b.first; });
                ech.insert(std::move(row));
            }
        }

        const long long mu = static_cast<long long>(cols.size()) - ech.rank();
        bool certified = true;
        for (const ExpVec& q : cols) {
            if (total_degree(q) != D - 1) continue;
            if (!ech.in_span({{index.at(q), Rational(1)}})) {
                certified = false;
                break;
            }
        }
        if (certified) return {mu, D, true};
        last = {mu, D, false};
    }
    return last;
}

long long total_milnor_affine(const Poly& f_affine, int max_cutoff) {
    const int nv = f_affine.num_vars();
    if (nv < 1) throw PreconditionError("at least one variable is required");
    const int degree_bound = std::min(250, std::max(48, 3 * max_cutoff));

    std::vector<GPoly> basis;
    for (const Poly& g : f_affine.gradient())
        if (!g.is_zero()) basis.push_back(to_gpoly(g));
    if (basis.empty())
        throw NonIsolatedError("non-isolated singular locus in this chart");

    std::deque<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j)
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    long long processed = 0;
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        if (++processed > 100000)
            throw PreconditionError("ideal completion exceeded the safety bound");
        if (coprime_leads(basis[i], basis[j])) continue;
        GPoly r = normal_form(s_polynomial(basis[i], basis[j]), basis);
        if (r.empty()) continue;
        if (total_degree(r.begin()->first) > degree_bound ||
            basis.size() > 256)
            throw PreconditionError("ideal completion exceeded the safety bound");
        for (std::size_t k = 0; k < basis.size(); ++k)
            pairs.emplace_back(static_cast<int>(k), static_cast<int>(basis.size()));
        basis.push_back(std::move(r));
    }

    // A constant leading term means the critical locus is empty.
    for (const auto& g : basis)
        if (total_degree(g.begin()->first) == 0) return 0;

    // Zero-dimensionality: every variable must appear as a pure-power lead.
    std::vector<int> bound(nv, -1);
    for (const auto& g : basis) {
        const ExpVec& lm = g.begin()->first;
        int support = -1;
        bool pure = true;
        for (int v = 0; v < nv && pure; ++v) {
            if (lm[v] == 0) continue;
            if (support >= 0)
                pure = false;
            else
                support = v;
        }
        if (pure && support >= 0) {
            if (bound[support] < 0 || lm[support] < bound[support])
                bound[support] = lm[support];
        }
    }
    for (int v = 0; v < nv; ++v)
        if (bound[v] < 0)
            throw NonIsolatedError("non-isolated singular locus in this chart");

    long long box = 1;
    for (int v = 0; v < nv; ++v) {
        box *= bound[v];
        if (box > 10'000'000)
            throw PreconditionError("critical-point count exceeds the supported size");
    }

    std::vector<ExpVec> leads;
    leads.reserve(basis.size());
    for (const auto& g : basis) leads.push_back(g.begin()->first);

    long long count = 0;
    ExpVec cur = zero_exp();
    for (;;) {
        bool standard = true;
        for (const ExpVec& lm : leads)
            if (exp_divides(lm, cur)) {
                standard = false;
                break;
            }
        if (standard) ++count;
        int v = 0;
        while (v < nv) {
            if (int(cur[v]) + 1 < bound[v]) {
                ++cur[v];
                break;
            }
            cur[v] = 0;
            ++v;
        }
        if (v == nv) break;
    }
    return count;
}

SingularityData build_singularity_data(const Poly& f_homogeneous,
                                       const std::vector<std::vector<Rational>>& points,
                                       const std::vector<std::optional<int>>& charts,
                                       int max_cutoff) {
    if (!charts.empty() && charts.size() != points.size())
        throw PreconditionError("chart list and point list differ in length");
    for (std::size_t a = 0; a < points.size(); ++a)
        for (std::size_t b = a + 1; b < points.size(); ++b) {
            if (points[a].size() != points[b].size()) continue;
            bool proportional = true;
            const auto& p = points[a];
            const auto& q = points[b];
            for (std::size_t i = 0; i < p.size() && proportional; ++i)
                for (std::size_t j = i + 1; j < q.size() && proportional; ++j)
                    proportional = p[i] * q[j] == p[j] * q[i];
            if (proportional)
                throw PreconditionError("singular points must be pairwise distinct: " +
                                        point_to_string(p) + " and " +
                                        point_to_string(q));
        }

    SingularityData data;
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::optional<int> forced = charts.empty() ? std::nullopt : charts[i];
        const int chart = verify_singular_point(f_homogeneous, points[i], forced);
        const Poly g = local_equation(f_homogeneous, points[i], chart);
        MilnorResult mr = milnor_at(g, max_cutoff);
        if (!mr.certified)
            throw NonIsolatedError(
                "Milnor number at " + point_to_string(points[i]) +
                " not certified up to cutoff " + std::to_string(mr.cutoff) +
                "; the singularity may not be isolated");
        data.push_back({points[i], chart, mr});
    }
    return data;
}

}  // namespace charclass
