#include "otv/series.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace otv {

VarTable::VarTable(std::vector<std::string> n)
    : names(std::move(n)), weights(names.size(), 1) {}

VarTable::VarTable(std::vector<std::string> n, std::vector<int> w)
    : names(std::move(n)), weights(std::move(w)) {
    if (names.size() != weights.size()) fail(errc::bad_argument, "names/weights size mismatch");
}

int VarTable::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return (int)i;
    return -1;
}

VarTable qvars(int n) {
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("q_" + std::to_string(i));
    return VarTable(names);
}

Series::Series(VarTable vars, int trunc) : vars_(std::move(vars)), trunc_(trunc) {}

Series Series::zero(VarTable vars, int trunc) { return Series(std::move(vars), trunc); }

Series Series::constant(VarTable vars, Int c, int trunc) {
    Series s(std::move(vars), trunc);
    if (c != 0 && trunc >= 0) s.terms_[Exps(s.vars_.size(), 0)] = std::move(c);
    return s;
}

Series Series::monomial(VarTable vars, Exps exps, Int coeff) {
    Series s(std::move(vars), TRUNC_INF);
    if (exps.size() != s.vars_.size()) fail(errc::bad_argument, "exponent vector length mismatch");
    s.floor_ = s.degree_of(exps);
    if (coeff != 0) s.terms_[std::move(exps)] = std::move(coeff);
    return s;
}

int Series::degree_of(const Exps& e) const {
    long long d = 0;
    for (size_t i = 0; i < e.size(); ++i) d += (long long)e[i] * vars_.weights[i];
    return (int)d;
}

Int Series::coeff(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void Series::add_term(const Exps& e, const Int& c) {
    if (c == 0 || degree_of(e) > trunc_) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Series Series::truncated(int new_trunc) const {
    Series out(vars_, std::min(trunc_, new_trunc));
    out.floor_ = floor_;
    for (const auto& [e, c] : terms_)
        if (degree_of(e) <= out.trunc_) out.terms_.emplace(e, c);
    return out;
}

int Series::min_degree() const {
    int best = TRUNC_INF;
    for (const auto& [e, c] : terms_) best = std::min(best, degree_of(e));
    return best;
}

namespace {
void check_same_vars(const Series& f, const Series& g) {
    if (!(f.vars() == g.vars())) fail(errc::var_table_mismatch, "variable tables differ");
}
int sat_add(int a, int b) {
    if (a >= TRUNC_INF || b >= TRUNC_INF) return TRUNC_INF;
    long long s = (long long)a + b;
    return s >= TRUNC_INF ? TRUNC_INF : (int)s;
}
} // namespace

Series add(const Series& f, const Series& g) {
    check_same_vars(f, g);
    Series out(f.vars(), std::min(f.trunc(), g.trunc()));
    out.set_floor(std::min(f.floor(), g.floor()));
    for (const auto& [e, c] : f.terms()) out.add_term(e, c);
    for (const auto& [e, c] : g.terms()) out.add_term(e, c);
    return out;
}

Series sub(const Series& f, const Series& g) { return add(f, negate(g)); }

Series negate(const Series& f) { return scale(f, Int(-1)); }

Series scale(const Series& f, const Int& c) {
    Series out(f.vars(), f.trunc());
    out.set_floor(f.floor());
    if (c == 0) return out;
    for (const auto& [e, k] : f.terms()) out.add_term(e, k * c);
    return out;
}

Series multiply(const Series& f, const Series& g) {
    check_same_vars(f, g);
    int trunc = std::min(sat_add(f.trunc(), g.floor()), sat_add(g.trunc(), f.floor()));
    Series out(f.vars(), trunc);
    out.set_floor(sat_add(f.floor(), g.floor()));
    if (f.is_zero() || g.is_zero()) return out;
    size_t nvars = f.vars().size();
    Exps e(nvars);
    for (const auto& [ef, cf] : f.terms()) {
        int df = f.degree_of(ef);
        for (const auto& [eg, cg] : g.terms()) {
            if (df + g.degree_of(eg) > trunc) continue;
            for (size_t i = 0; i < nvars; ++i) e[i] = ef[i] + eg[i];
            out.add_term(e, cf * cg);
        }
    }
    return out;
}

Series pow(const Series& f, int k) {
    if (k < 0) fail(errc::bad_argument, "pow wants k >= 0");
    Series acc = Series::constant(f.vars(), 1);
    for (int i = 0; i < k; ++i) acc = multiply(acc, f);
    return acc;
}

Series invert_unit(const Series& f) {
    if (f.is_zero()) fail(errc::not_a_unit, "cannot invert zero series");
    int d0 = f.min_degree();
    const Exps* lead = nullptr;
    for (const auto& [e, c] : f.terms()) {
        if (f.degree_of(e) == d0) {
            if (lead) fail(errc::not_a_unit, "minimal stratum is not a single monomial");
            if (c != 1 && c != -1) fail(errc::not_a_unit, "leading coefficient is not +-1");
            lead = &e;
        }
    }
    Exps inv_e = *lead;
    for (auto& x : inv_e) x = -x;
    Int lead_c = f.coeff(*lead); // +-1, equal to its own inverse
    Series m_inv = Series::monomial(f.vars(), inv_e, lead_c);
    Series h = sub(multiply(f, m_inv), Series::constant(f.vars(), 1));
    // every term of h has weighted degree >= 1
    int T = h.trunc();
    if (T >= TRUNC_INF) {
        if (h.is_zero()) return m_inv; // exact monomial
        fail(errc::bad_argument, "invert_unit needs a truncated input for non-monomials");
    }
    Series acc = Series::constant(f.vars(), 1, T);
    int steps = std::max(T, 0); // h is nilpotent modulo truncation
    for (int i = 0; i < steps; ++i) {
        Series next = sub(Series::constant(f.vars(), 1, T), multiply(h, acc).truncated(T));
        if (next == acc) break;
        acc = next;
    }
    return multiply(acc, m_inv);
}

Series bar_involution(const Series& f, int n) {
    if (!(f.vars() == qvars(n))) fail(errc::var_table_mismatch, "bar involution wants q_0..q_{n-1}");
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = ((n - k) % n);
    return permute_vars(f, perm);
}

Series permute_vars(const Series& f, const std::vector<int>& perm) {
    size_t nvars = f.vars().size();
    if (perm.size() != nvars) fail(errc::bad_argument, "permutation size mismatch");
    for (size_t i = 0; i < nvars; ++i)
        if (f.vars().weights[i] != f.vars().weights[perm[i]])
            fail(errc::bad_argument, "permutation does not preserve weights");
    Series out(f.vars(), f.trunc());
    out.set_floor(f.floor());
    Exps e(nvars);
    for (const auto& [ef, c] : f.terms()) {
        for (size_t i = 0; i < nvars; ++i) e[perm[i]] = ef[i];
        out.add_term(e, c);
    }
    return out;
}

Series sign_twist(const Series& f, const std::vector<bool>& flip) {
    if (flip.size() != f.vars().size()) fail(errc::bad_argument, "flip mask size mismatch");
    Series out(f.vars(), f.trunc());
    out.set_floor(f.floor());
    for (const auto& [e, c] : f.terms()) {
        long long parity = 0;
        for (size_t i = 0; i < e.size(); ++i)
            if (flip[i]) parity += e[i];
        out.add_term(e, (parity % 2 + 2) % 2 == 1 ? -c : c);
    }
    return out;
}

Series map_exponents(const Series& f, const VarTable& to, const std::vector<Exps>& matrix) {
    if (matrix.size() != f.vars().size()) fail(errc::bad_argument, "exponent map size mismatch");
    Series out(to, f.trunc());
    out.set_floor(f.floor());
    Exps e(to.size());
    for (const auto& [ef, c] : f.terms()) {
        std::fill(e.begin(), e.end(), 0);
        for (size_t i = 0; i < ef.size(); ++i)
            for (size_t j = 0; j < e.size(); ++j) e[j] += ef[i] * matrix[i][j];
        if (out.degree_of(e) != f.degree_of(ef))
            fail(errc::bad_argument, "exponent map does not preserve degree");
        out.add_term(e, c);
    }
    return out;
}

Series collapse_to_single(const Series& f, const VarTable& to) {
    if (to.size() != 1) fail(errc::bad_argument, "collapse target must have one variable");
    std::vector<Exps> matrix(f.vars().size(), Exps{1});
    return map_exponents(f, to, matrix);
}

namespace {
Int binomial(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    Int res = 1;
    for (long long i = 1; i <= b; ++i) {
        res *= Int(a - b + i);
        res /= Int(i);
    }
    return res;
}
const Exps* single_term(const Series& s) {
    if (s.terms().size() != 1 || s.terms().begin()->second != 1) return nullptr;
    return &s.terms().begin()->first;
}
} // namespace

Series macmahon(const Series& v, const Series& q, int D) {
    check_same_vars(v, q);
    const Exps* ev = single_term(v);
    const Exps* eq = single_term(q);
    if (!ev || !eq) fail(errc::bad_argument, "macmahon wants unit monomials");
    int dv = v.degree_of(*ev), dq = q.degree_of(*eq);
    if (dq < 1 || dv + dq < 1) fail(errc::non_convergent, "macmahon factor degrees must be positive");
    Series acc = Series::constant(v.vars(), 1, D);
    for (int m = 1; dv + (long long)m * dq <= D; ++m) {
        int dstep = dv + m * dq;
        Exps step(ev->size());
        for (size_t i = 0; i < step.size(); ++i) step[i] = (*ev)[i] + m * (*eq)[i];
        Series factor = Series::zero(v.vars(), D);
        Exps e(step.size(), 0);
        for (int j = 0; (long long)j * dstep <= D; ++j) {
            factor.add_term(e, binomial(j + m - 1, m - 1));
            for (size_t i = 0; i < e.size(); ++i) e[i] += step[i];
        }
        acc = multiply(acc, factor).truncated(D);
    }
    acc.set_floor(std::min(0, dv + dq));
    return acc;
}

bool equal_to_degree(const Series& f, const Series& g, int D) {
    return !first_mismatch(f, g, D).found;
}

CoeffMismatch first_mismatch(const Series& f, const Series& g, int D) {
    check_same_vars(f, g);
    CoeffMismatch out;
    if (f.trunc() < D || g.trunc() < D)
        fail(errc::bad_argument, "series not exact to requested degree");
    for (const auto& [e, c] : f.terms()) {
        if (f.degree_of(e) > D) continue;
        if (g.coeff(e) != c) {
            out.found = true;
            out.exps = e;
            out.lhs = c;
            out.rhs = g.coeff(e);
            return out;
        }
    }
    for (const auto& [e, c] : g.terms()) {
        if (g.degree_of(e) > D) continue;
        if (f.coeff(e) != c) {
            out.found = true;
            out.exps = e;
            out.lhs = f.coeff(e);
            out.rhs = c;
            return out;
        }
    }
    return out;
}

std::string Series::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Int a = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = false;
        std::ostringstream vs;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (has_var) vs << "*";
            vs << vars_.names[i];
            if (e[i] != 1) vs << "^" << e[i];
            has_var = true;
        }
        if (!has_var) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << vs.str();
        }
    }
    return os.str();
}

std::string Series::json() const {
    nlohmann::json j;
    j["vars"] = vars_.names;
    bool weighted = false;
    for (int w : vars_.weights)
        if (w != 1) weighted = true;
    if (weighted) j["weights"] = vars_.weights;
    if (trunc_ >= TRUNC_INF)
        j["trunc"] = nullptr;
    else
        j["trunc"] = trunc_;
    j["floor"] = floor_;
    j["terms"] = nlohmann::json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::json t;
        t["e"] = e;
        t["c"] = c.str();
        j["terms"].push_back(t);
    }
    return j.dump();
}

Series Series::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::vector<std::string> names = j.at("vars").get<std::vector<std::string>>();
    VarTable vt = j.contains("weights")
                      ? VarTable(names, j.at("weights").get<std::vector<int>>())
                      : VarTable(names);
    int trunc = j.at("trunc").is_null() ? TRUNC_INF : j.at("trunc").get<int>();
    Series s(vt, trunc);
    s.floor_ = j.value("floor", 0);
    for (const auto& t : j.at("terms")) {
        Exps e = t.at("e").get<Exps>();
        s.add_term(e, Int(t.at("c").get<std::string>()));
    }
    return s;
}

} // namespace otv
