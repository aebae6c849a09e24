#ifndef OTV_SERIES_HPP
#define OTV_SERIES_HPP

#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "otv/error.hpp"

namespace otv {

using Int = boost::multiprecision::cpp_int;

// Truncation sentinel for exact objects (monomials, polynomials known in full).
inline constexpr int TRUNC_INF = std::numeric_limits<int>::max() / 4;

// Ordered variable table. Each variable carries a degree weight; the global
// filtration is by weighted total degree. Weight 1 everywhere except the
// curve-class variables in gluing, which do not count toward box degree.
struct VarTable {
    std::vector<std::string> names;
    std::vector<int> weights; // same length as names

    VarTable() = default;
    explicit VarTable(std::vector<std::string> n);
    VarTable(std::vector<std::string> n, std::vector<int> w);

    int index_of(const std::string& name) const; // -1 if absent
    size_t size() const { return names.size(); }
    bool operator==(const VarTable&) const = default;
};

// q_0 .. q_{n-1}, all weight 1.
VarTable qvars(int n);

using Exps = std::vector<int32_t>;

// Sparse Laurent series: map from exponent vectors to nonzero integer
// coefficients, exact for weighted total degree <= trunc and empty above,
// with floor a lower bound for the degree of any stored term.
class Series {
public:
    Series() = default;
    explicit Series(VarTable vars, int trunc = TRUNC_INF);

    static Series zero(VarTable vars, int trunc = TRUNC_INF);
    static Series constant(VarTable vars, Int c, int trunc = TRUNC_INF);
    static Series monomial(VarTable vars, Exps exps, Int coeff);

    const VarTable& vars() const { return vars_; }
    const std::map<Exps, Int>& terms() const { return terms_; }
    int trunc() const { return trunc_; }
    int floor() const { return floor_; }
    bool is_zero() const { return terms_.empty(); }

    int degree_of(const Exps& e) const; // weighted total degree
    Int coeff(const Exps& e) const;     // 0 if absent

    void add_term(const Exps& e, const Int& c); // respects truncation
    Series truncated(int new_trunc) const;
    void set_floor(int f) { floor_ = f; }

    // Minimal weighted degree among stored terms; TRUNC_INF when zero.
    int min_degree() const;

    std::string str() const; // deterministic human-readable form
    std::string json() const;
    static Series from_json(const std::string& text);

    bool operator==(const Series&) const = default;

private:
    VarTable vars_;
    std::map<Exps, Int> terms_;
    int trunc_ = TRUNC_INF;
    int floor_ = 0;
};

Series add(const Series& f, const Series& g);
Series sub(const Series& f, const Series& g);
Series multiply(const Series& f, const Series& g);
Series negate(const Series& f);
Series scale(const Series& f, const Int& c);
Series pow(const Series& f, int k);

// Inverse of a series whose unique minimal-degree term is a monomial with
// coefficient +-1. Result is exact to trunc(f) - 2*deg(leading monomial).
Series invert_unit(const Series& f);

// Exchange q_k <-> q_{-k mod n}; vars must be exactly q_0..q_{n-1}.
Series bar_involution(const Series& f, int n);

// Permute variables: exponent of new var perm[i] receives exponent of var i.
// Weights must be preserved by the permutation.
Series permute_vars(const Series& f, const std::vector<int>& perm);

// Multiply each term by prod of (-1)^{e_i} over flipped variables.
Series sign_twist(const Series& f, const std::vector<bool>& flip);

// Remap terms into a new table: new_exps[j] = sum_i e_i * matrix[i][j].
// The map must preserve weighted degree (checked per term).
Series map_exponents(const Series& f, const VarTable& to,
                     const std::vector<Exps>& matrix);

// Identify all variables with the single variable of `to` (n=1 collapse).
Series collapse_to_single(const Series& f, const VarTable& to);

// M(v,q) = prod_{m>=1} (1 - v q^m)^{-m}, exact to weighted degree D.
// v and q must be single-term monomials with coefficient 1, deg q >= 1 and
// deg v + deg q >= 1.
Series macmahon(const Series& v, const Series& q, int D);

bool equal_to_degree(const Series& f, const Series& g, int D);

// First exponent vector (lex order) where coefficients differ at weighted
// degree <= D, if any.
struct CoeffMismatch {
    bool found = false;
    Exps exps;
    Int lhs, rhs;
};
CoeffMismatch first_mismatch(const Series& f, const Series& g, int D);

} // namespace otv

#endif
