#include "otv/glue.hpp"

#include <algorithm>
#include <numeric>

#include "otv/ptvertex.hpp"
#include "otv/symfun.hpp"

#include "json.hpp"

namespace otv {

WebDiagram WebDiagram::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    WebDiagram d;
    for (const auto& jv : j.at("vertices")) {
        WebVertex v;
        v.id = jv.at("id").get<std::string>();
        auto e = jv.at("edges");
        if (e.size() != 3) fail(errc::invalid_diagram, "vertex must list exactly three edges");
        for (int i = 0; i < 3; ++i) v.edges[i] = e[i].get<std::string>();
        d.vertices.push_back(v);
    }
    for (const auto& je : j.at("edges")) {
        WebEdge e;
        e.id = je.at("id").get<std::string>();
        e.tail = je.at("tail").get<std::string>();
        if (je.contains("head") && !je.at("head").is_null())
            e.head = je.at("head").get<std::string>();
        e.compact = je.value("compact", false);
        e.n = je.value("n", 1);
        e.m = je.value("m", 0);
        e.mp = je.value("mp", 0);
        if (je.contains("adj")) {
            const auto& a = je.at("adj");
            e.adj_f = a.value("f", "");
            e.adj_fp = a.value("fp", "");
            e.adj_g = a.value("g", "");
            e.adj_gp = a.value("gp", "");
        }
        d.edges.push_back(e);
    }
    return d;
}

std::string WebDiagram::json() const {
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (const auto& v : vertices)
        j["vertices"].push_back({{"id", v.id}, {"edges", {v.edges[0], v.edges[1], v.edges[2]}}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : edges) {
        nlohmann::json je = {{"id", e.id},     {"tail", e.tail}, {"compact", e.compact},
                             {"n", e.n},       {"m", e.m},       {"mp", e.mp}};
        if (!e.head.empty()) je["head"] = e.head;
        if (e.compact)
            je["adj"] = {{"f", e.adj_f}, {"fp", e.adj_fp}, {"g", e.adj_g}, {"gp", e.adj_gp}};
        j["edges"].push_back(je);
    }
    return j.dump();
}

const WebEdge& WebDiagram::edge(const std::string& id) const {
    for (const auto& e : edges)
        if (e.id == id) return e;
    fail(errc::invalid_diagram, "unknown edge id " + id);
}

const WebVertex& WebDiagram::vertex(const std::string& id) const {
    for (const auto& v : vertices)
        if (v.id == id) return v;
    fail(errc::invalid_diagram, "unknown vertex id " + id);
}

WebDiagram::Deltas WebDiagram::deltas(const WebEdge& e) const {
    Deltas d;
    const WebVertex& v0 = vertex(e.tail);
    const WebVertex& vi = vertex(e.head);
    d.d0 = !e.adj_f.empty() && v0.edges[2] == e.adj_f;
    d.d0p = !e.adj_fp.empty() && v0.edges[2] == e.adj_fp;
    d.dinf = !e.adj_g.empty() && vi.edges[2] == e.adj_g;
    d.dinfp = !e.adj_gp.empty() && vi.edges[2] == e.adj_gp;
    return d;
}

ValidationReport validate(const WebDiagram& diagram) {
    ValidationReport rep;
    auto complain = [&](const std::string& what) { rep.violations.push_back(what); };
    for (const auto& v : diagram.vertices) {
        int high = 0;
        for (int i = 0; i < 3; ++i) {
            const WebEdge* e = nullptr;
            try {
                e = &diagram.edge(v.edges[i]);
            } catch (const error&) {
                complain("vertex " + v.id + " references unknown edge " + v.edges[i]);
                continue;
            }
            if (e->tail != v.id && e->head != v.id)
                complain("edge " + e->id + " listed at vertex " + v.id + " but not incident");
            if (e->n > 1) {
                high++;
                if (i != 2)
                    complain("edge " + e->id + " has n > 1 at vertex " + v.id +
                             " but is not its third edge");
            }
        }
        if (high > 1) complain("vertex " + v.id + " has several edges with n > 1");
    }
    for (const auto& e : diagram.edges) {
        if (e.n < 1) complain("edge " + e.id + " has n < 1");
        if (!e.compact) {
            if (!e.head.empty()) complain("non-compact edge " + e.id + " has a head");
            continue;
        }
        if (e.head.empty()) {
            complain("compact edge " + e.id + " has no head");
            continue;
        }
        for (const std::string* adj : {&e.adj_f, &e.adj_fp, &e.adj_g, &e.adj_gp})
            if (adj->empty()) complain("compact edge " + e.id + " misses an adjacent edge");
        WebDiagram::Deltas d = diagram.deltas(e);
        long long cy = e.m + e.mp - d.d0 - d.d0p - d.dinf - d.dinfp + 2;
        if (cy != 0)
            complain("edge " + e.id + " violates the Calabi-Yau condition (sum = " +
                     std::to_string(cy) + ")");
    }
    rep.valid = rep.violations.empty();
    return rep;
}

VarTable diagram_vars(const WebDiagram& diagram) {
    std::vector<std::string> names;
    std::vector<int> weights;
    for (const auto& e : diagram.edges)
        for (int k = 0; k < e.n; ++k) {
            names.push_back("q_{" + e.id + "," + std::to_string(k) + "}");
            weights.push_back(1);
        }
    for (const auto& e : diagram.edges)
        for (int k = 0; k < e.n; ++k) {
            names.push_back("v_{" + e.id + "," + std::to_string(k) + "}");
            weights.push_back(0);
        }
    return VarTable(names, weights);
}

namespace {

int qvar_index(const WebDiagram& d, const std::string& edge_id, int k) {
    int idx = 0;
    for (const auto& e : d.edges) {
        if (e.id == edge_id) return idx + normalize_residue(k, e.n);
        idx += e.n;
    }
    fail(errc::invalid_diagram, "unknown edge id " + edge_id);
}

int vvar_index(const WebDiagram& d, const std::string& edge_id, int k) {
    int total = 0;
    for (const auto& e : d.edges) total += e.n;
    int idx = total;
    for (const auto& e : d.edges) {
        if (e.id == edge_id) return idx + normalize_residue(k, e.n);
        idx += e.n;
    }
    fail(errc::invalid_diagram, "unknown edge id " + edge_id);
}

} // namespace

Series edge_factor(const WebDiagram& diagram, const WebEdge& e, const Partition& lambda_e) {
    VarTable vt = diagram_vars(diagram);
    if (!e.compact) {
        if (!lambda_e.empty()) fail(errc::invalid_diagram, "non-compact edge with nonempty partition");
        return Series::constant(vt, 1);
    }
    WebDiagram::Deltas d = diagram.deltas(e);
    int n = e.n;
    Exps exps(vt.size(), 0);
    // v_{e,k}^{|lambda|_k}, q_{e,k}^{C[k,n]}
    std::vector<long long> counts(n);
    for (int k = 0; k < n; ++k) {
        counts[k] = colored_count(lambda_e, n, ColorRole::edge_or_leg3, k);
        exps[vvar_index(diagram, e.id, k)] += (int32_t)counts[k];
        exps[qvar_index(diagram, e.id, k)] += (int32_t)C_stat(lambda_e, e.m, e.mp, k, n);
    }
    Partition lp = lambda_e.conjugate();
    auto add_A = [&](const std::string& adj, const Partition& shape, bool bar, int flag) {
        if (!flag) return;
        const WebEdge& f = diagram.edge(adj);
        for (int k = 0; k < f.n; ++k) {
            long long a = A_stat(shape, bar ? normalize_residue(-k, f.n) : k, f.n);
            exps[qvar_index(diagram, adj, k)] += (int32_t)a;
        }
    };
    add_A(e.adj_f, lambda_e, true, d.d0);
    add_A(e.adj_fp, lp, false, d.d0p);
    add_A(e.adj_g, lambda_e, false, d.dinf);
    add_A(e.adj_gp, lp, true, d.dinfp);
    // sign exponent S^e
    long long sign = 0;
    for (int k = 0; k < n; ++k) {
        long long ckm = colored_count(lambda_e, n, ColorRole::edge_or_leg3, k - 1);
        long long ckp = colored_count(lambda_e, n, ColorRole::edge_or_leg3, k + 1);
        sign += C_stat(lambda_e, e.m, e.mp, k, n) * (ckm - ckp);
        sign += counts[k] * (1 + (1 + e.m + d.d0 + d.dinf) * ckm);
    }
    Int coeff = (sign % 2 + 2) % 2 == 1 ? -1 : 1;
    return Series::monomial(vt, exps, coeff);
}

Series vertex_factor(const WebDiagram& diagram, const WebVertex& v,
                     const EdgeAssignment& assignment, int box_degree) {
    VarTable vt = diagram_vars(diagram);
    const WebEdge& e3 = diagram.edge(v.edges[2]);
    int n = e3.n;
    Partition legs3[3];
    for (int i = 0; i < 3; ++i) {
        const WebEdge& e = diagram.edge(v.edges[i]);
        Partition lam;
        auto it = assignment.find(e.id);
        if (it != assignment.end()) lam = it->second;
        legs3[i] = (e.tail == v.id) ? lam : lam.conjugate();
    }
    LegTriple legs(legs3[0], legs3[1], legs3[2], n);
    Series w = pt_vertex_enum(legs, box_degree);
    if (pt_closed_valid(legs)) {
        Series wc = pt_vertex_closed(legs, box_degree);
        if (!equal_to_degree(w, wc, box_degree))
            fail(errc::lemma_violated, "vertex factor triangulation failed");
    }
    // componentwise signs (-1)^{s~_k(lambda_3)}
    std::vector<bool> flip(n);
    for (int k = 0; k < n; ++k) {
        long long s = colored_count(legs3[2], n, ColorRole::edge_or_leg3, k - 1) +
                      colored_count(legs3[2], n, ColorRole::edge_or_leg3, k + 1);
        flip[k] = (s % 2) != 0;
    }
    w = sign_twist(w, flip);
    // global parity sign (-1)^{Xi}
    long long xi = 0;
    for (int k = 0; k < n; ++k)
        xi += (long long)colored_count(legs3[2], n, ColorRole::edge_or_leg3, k) *
              (colored_count(legs3[0], n, ColorRole::leg1, k) +
               colored_count(legs3[1], n, ColorRole::leg2, k) +
               colored_count(legs3[0], n, ColorRole::leg1, k + 1) +
               colored_count(legs3[1], n, ColorRole::leg2, k - 1));
    if ((xi % 2 + 2) % 2 == 1) w = negate(w);
    // rename q_l to the e3 variables (barred when e3 points inward)
    bool outward = e3.tail == v.id;
    std::vector<Exps> matrix(n, Exps(vt.size(), 0));
    for (int l = 0; l < n; ++l) {
        int target = outward ? l : normalize_residue(-l, n);
        matrix[l][qvar_index(diagram, e3.id, target)] = 1;
    }
    return map_exponents(w, vt, matrix);
}

Series pt_partition(const WebDiagram& diagram, int curve_degree, int box_degree) {
    ValidationReport rep = validate(diagram);
    if (!rep.valid) fail(errc::invalid_diagram, rep.violations.front());
    VarTable vt = diagram_vars(diagram);
    std::vector<const WebEdge*> compact;
    for (const auto& e : diagram.edges)
        if (e.compact) compact.push_back(&e);

    Series total = Series::zero(vt, box_degree);
    std::vector<Partition> choice(compact.size());
    std::function<void(size_t, int)> rec = [&](size_t idx, int budget) {
        if (idx == compact.size()) {
            EdgeAssignment assign;
            for (size_t i = 0; i < compact.size(); ++i) assign[compact[i]->id] = choice[i];
            // edge monomials first: their degrees feed the vertex truncations
            Series term = Series::constant(vt, 1);
            for (size_t i = 0; i < compact.size(); ++i)
                term = multiply(term, edge_factor(diagram, *compact[i], choice[i]));
            int mono_deg = term.is_zero() ? 0 : term.min_degree();
            // vertex floors
            int floor_sum = 0;
            std::vector<int> floors;
            for (const auto& v : diagram.vertices) {
                const WebEdge& e3 = diagram.edge(v.edges[2]);
                Partition l3[3];
                for (int i = 0; i < 3; ++i) {
                    const WebEdge& e = diagram.edge(v.edges[i]);
                    Partition lam;
                    auto it = assign.find(e.id);
                    if (it != assign.end()) lam = it->second;
                    l3[i] = (e.tail == v.id) ? lam : lam.conjugate();
                }
                RegionSets r = region_sets(LegTriple(l3[0], l3[1], l3[2], e3.n));
                int fl = (int)(-r.II_total - 2 * r.III_total);
                floors.push_back(fl);
                floor_sum += fl;
            }
            for (size_t vi = 0; vi < diagram.vertices.size(); ++vi) {
                int others = floor_sum - floors[vi];
                int target = box_degree - mono_deg - others;
                Series f = vertex_factor(diagram, diagram.vertices[vi], assign,
                                         std::max(target, 0));
                term = multiply(term, f);
            }
            total = add(total, term.truncated(box_degree));
            return;
        }
        for (const Partition& p : partitions_up_to(budget)) {
            choice[idx] = p;
            rec(idx + 1, budget - p.size());
        }
    };
    rec(0, curve_degree);
    // the global sign substitution q_{e,0} -> -q_{e,0}
    std::vector<bool> flip(vt.size(), false);
    for (const auto& e : diagram.edges) flip[qvar_index(diagram, e.id, 0)] = true;
    return sign_twist(total, flip);
}

int parity_E(int n_e, long long m_e, long long mp_e, int d0, int dinf, const Partition& lambda_e) {
    long long s = 0;
    if (n_e == 1) {
        s = (long long)lambda_e.size() * (m_e + d0 + dinf);
    } else {
        for (int k = 0; k < n_e; ++k) {
            long long ck = colored_count(lambda_e, n_e, ColorRole::edge_or_leg3, k);
            long long ckm = colored_count(lambda_e, n_e, ColorRole::edge_or_leg3, k - 1);
            long long ckp = colored_count(lambda_e, n_e, ColorRole::edge_or_leg3, k + 1);
            s += C_stat(lambda_e, m_e, mp_e, k, n_e) * (ckm - ckp) + ck * (1 + (1 + m_e) * ckm);
        }
    }
    return (int)((s % 2 + 2) % 2);
}

int parity_V(const std::vector<long long>& ell_colored,
             const std::vector<long long>& pibar_colored, const std::vector<int>& l1,
             const std::vector<int>& l2, const std::vector<int>& l3) {
    int n = (int)ell_colored.size();
    auto at = [&](const std::vector<int>& v, int k) { return v[normalize_residue(k, n)]; };
    long long s = ell_colored[0];
    for (int k = 0; k < n; ++k) {
        s += (ell_colored[k] + pibar_colored[k]) * (at(l3, k - 1) + at(l3, k + 1));
        s += (long long)at(l3, k) * (at(l1, k) + at(l2, k) + at(l1, k + 1) + at(l2, k - 1));
    }
    return (int)((s % 2 + 2) % 2);
}

} // namespace otv
