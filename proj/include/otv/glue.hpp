#ifndef OTV_GLUE_HPP
#define OTV_GLUE_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "otv/regions.hpp"
#include "otv/series.hpp"

namespace otv {

struct WebEdge {
    std::string id;
    std::string tail, head; // head empty for non-compact edges
    bool compact = false;
    int n = 1;
    long long m = 0, mp = 0;
    std::string adj_f, adj_fp, adj_g, adj_gp; // edges of Figure-1 type adjacency
};

struct WebVertex {
    std::string id;
    std::array<std::string, 3> edges; // counterclockwise; e_{3,v} last
};

struct WebDiagram {
    std::vector<WebVertex> vertices;
    std::vector<WebEdge> edges;

    static WebDiagram from_json(const std::string& text);
    std::string json() const;

    const WebEdge& edge(const std::string& id) const;
    const WebVertex& vertex(const std::string& id) const;

    // derived delta flags of a compact edge
    struct Deltas {
        int d0 = 0, d0p = 0, dinf = 0, dinfp = 0;
    };
    Deltas deltas(const WebEdge& e) const;
};

struct ValidationReport {
    bool valid = false;
    std::vector<std::string> violations;
};

ValidationReport validate(const WebDiagram& diagram);

// Variable table of a diagram: q_{e,k} with weight 1 and v_{e,k} with
// weight 0, edges in listed order.
VarTable diagram_vars(const WebDiagram& diagram);

using EdgeAssignment = std::map<std::string, Partition>;

// The edge factor E^e: a signed monomial over the diagram variables.
Series edge_factor(const WebDiagram& diagram, const WebEdge& e, const Partition& lambda_e);

// The vertex factor: the PT vertex of the triple at v, renamed into the
// e_{3,v} variables (barred for the inward orientation), componentwise
// sign-twisted and multiplied by the parity sign.
Series vertex_factor(const WebDiagram& diagram, const WebVertex& v,
                     const EdgeAssignment& assignment, int box_degree);

// Sum over edge assignments with total size <= curve_degree of the edge
// and vertex factors, truncated at box degree, with the final
// q_{e,0} -> -q_{e,0} substitution.
Series pt_partition(const WebDiagram& diagram, int curve_degree, int box_degree);

// Standalone parity calculators.
int parity_E(int n_e, long long m_e, long long mp_e, int d0, int dinf, const Partition& lambda_e);
int parity_V(const std::vector<long long>& ell_colored,
             const std::vector<long long>& pibar_colored, const std::vector<int>& l1,
             const std::vector<int>& l2, const std::vector<int>& l3);

} // namespace otv

#endif
