#include "otv.h"

#include <cstring>
#include <string>

#include "otv/checks.hpp"
#include "otv/dtvertex.hpp"
#include "otv/glue.hpp"
#include "otv/ptvertex.hpp"
#include "otv/symfun.hpp"

#include "json.hpp"

struct otv_buf {
    std::string data;
};

namespace {

thread_local std::string g_last_error;

int code_of(const otv::error& e) {
    switch (e.code()) {
    case otv::errc::empty_partition: return OTV_E_EMPTY_PARTITION;
    case otv::errc::cell_out_of_shape: return OTV_E_CELL_OUT_OF_SHAPE;
    case otv::errc::var_table_mismatch: return OTV_E_VAR_TABLE_MISMATCH;
    case otv::errc::not_a_unit: return OTV_E_NOT_A_UNIT;
    case otv::errc::non_convergent: return OTV_E_NON_CONVERGENT;
    case otv::errc::patch_too_small: return OTV_E_PATCH_TOO_SMALL;
    case otv::errc::unstable: return OTV_E_UNSTABLE;
    case otv::errc::out_of_validity: return OTV_E_OUT_OF_VALIDITY;
    case otv::errc::invalid_diagram: return OTV_E_INVALID_DIAGRAM;
    case otv::errc::lemma_violated: return OTV_E_LEMMA_VIOLATED;
    case otv::errc::recurrence_violated: return OTV_E_RECURRENCE_VIOLATED;
    case otv::errc::bad_argument: return OTV_E_BAD_ARGUMENT;
    default: return OTV_E_INTERNAL;
    }
}

int deliver(otv_buf** out, std::string text) {
    if (!out) {
        g_last_error = "null output pointer";
        return OTV_E_BAD_ARGUMENT;
    }
    *out = new otv_buf{std::move(text)};
    return OTV_OK;
}

template <typename F>
int guarded(otv_buf** out, F&& f) {
    try {
        return deliver(out, f());
    } catch (const otv::error& e) {
        g_last_error = e.what();
        return code_of(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return OTV_E_INTERNAL;
    }
}

nlohmann::json report_json(const otv::CheckReport& r) {
    return {{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}};
}

} // namespace

extern "C" {

const char* otv_version(void) { return "otv 1.0.0"; }

void otv_set_jobs(int jobs) { otv::set_jobs(jobs); }

int otv_vertex_dt(int n, const char* legs, int degree, otv_buf** out) {
    return guarded(out, [&] {
        return otv::dt_vertex(otv::LegTriple::parse(legs ? legs : "", n), degree).json();
    });
}

int otv_vertex_pt(int n, const char* legs, int degree, const char* method, otv_buf** out) {
    return guarded(out, [&] {
        otv::LegTriple l = otv::LegTriple::parse(legs ? legs : "", n);
        std::string m = method ? method : "enum";
        if (m == "enum") return otv::pt_vertex_enum(l, degree).json();
        if (m == "closed") return otv::pt_vertex_closed(l, degree).json();
        if (m == "dt-ratio") return otv::pt_vertex_dt_ratio(l, degree).json();
        if (m == "triangulate") {
            otv::Series w = otv::pt_vertex_enum(l, degree);
            if (otv::pt_closed_valid(l)) {
                otv::Series c = otv::pt_vertex_closed(l, degree);
                if (!otv::equal_to_degree(w, c, degree))
                    otv::fail(otv::errc::lemma_violated, "enum and closed pipelines disagree");
            }
            if (otv::is_multi_regular(l.nu, l.n)) {
                otv::Series r = otv::pt_vertex_dt_ratio(l, degree);
                if (!otv::equal_to_degree(w, r, degree))
                    otv::fail(otv::errc::lemma_violated, "enum and DT-ratio pipelines disagree");
            }
            return w.json();
        }
        otv::fail(otv::errc::bad_argument, "unknown method " + m);
    });
}

int otv_symfun_hook(const char* nu, int n, int degree, otv_buf** out) {
    return guarded(out, [&] {
        return otv::hook_series_H(otv::Partition::parse(nu ? nu : ""), n, degree).json();
    });
}

int otv_symfun_loop_schur(const char* nu, int n, int degree, otv_buf** out) {
    return guarded(out, [&] {
        return otv::loop_schur(otv::Partition::parse(nu ? nu : ""), n, degree).json();
    });
}

int otv_symfun_skew(const char* xi, const char* eta, const char* nu, int n, int degree,
                    otv_buf** out) {
    return guarded(out, [&] {
        return otv::skew_schur_spec(otv::Partition::parse(xi ? xi : ""),
                                    otv::Partition::parse(eta ? eta : ""),
                                    otv::Partition::parse(nu ? nu : ""), n, degree)
            .json();
    });
}

int otv_check(const char* which, int n, const char* legs, int degree, int extra,
              const char* side, unsigned long long seed, int count, otv_buf** out) {
    return guarded(out, [&] {
        std::string w = which ? which : "";
        std::vector<otv::CheckReport> reports;
        if (w == "recurrence") {
            otv::RecSide s = side && std::string(side) == "pt" ? otv::RecSide::PT
                                                               : otv::RecSide::DT;
            reports.push_back(otv::recurrence_check(
                extra, s, otv::LegTriple::parse(legs ? legs : "", n), degree));
        } else if (w == "correspondence") {
            reports.push_back(
                otv::correspondence_check(otv::LegTriple::parse(legs ? legs : "", n), degree));
        } else if (w == "vacuum") {
            reports.push_back(otv::vacuum_check(n, degree));
        } else if (w == "symmetry") {
            uint64_t state = seed ? seed : 1;
            int done = 0;
            while (done < std::max(count, 1)) {
                otv::LegTriple l(otv::random_partition(state, 2, 2),
                                 otv::random_partition(state, 2, 2),
                                 otv::random_partition(state, 2, 2), n);
                reports.push_back(otv::dt_symmetry_report(l, degree));
                reports.push_back(otv::pt_symmetry_report(l, degree));
                done++;
            }
        } else if (w == "weights") {
            reports = otv::weights_report(extra > 0 ? extra : 6, 3, {9, 10, 11},
                                          seed ? seed : 20240811, std::max(count, 8));
        } else if (w == "partition-lemmas") {
            reports.push_back(otv::partition_lemma_report(extra > 0 ? extra : 14));
        } else {
            otv::fail(otv::errc::bad_argument, "unknown check " + w);
        }
        bool pass = true;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) {
            pass = pass && r.pass;
            arr.push_back(report_json(r));
        }
        nlohmann::json j;
        j["pass"] = pass;
        j["reports"] = arr;
        return j.dump();
    });
}

int otv_glue(const char* diagram_json, int curve_degree, int box_degree, otv_buf** out) {
    return guarded(out, [&] {
        otv::WebDiagram d = otv::WebDiagram::from_json(diagram_json ? diagram_json : "");
        return otv::pt_partition(d, curve_degree, box_degree).json();
    });
}

int otv_series_text(const char* series_json, otv_buf** out) {
    return guarded(out, [&] {
        return otv::Series::from_json(series_json ? series_json : "").str();
    });
}

const char* otv_buf_data(const otv_buf* buf) { return buf ? buf->data.c_str() : ""; }

size_t otv_buf_size(const otv_buf* buf) { return buf ? buf->data.size() : 0; }

void otv_buf_free(otv_buf* buf) { delete buf; }

const char* otv_last_error(void) { return g_last_error.c_str(); }

} // extern "C"
