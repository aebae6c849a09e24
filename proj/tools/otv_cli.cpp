// Command-line surface for the orbifold vertex library. Talks to the core
// exclusively through the C API.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "otv.h"

namespace {

int print_buf(otv_buf* buf, const std::string& format) {
    std::string data(otv_buf_data(buf), otv_buf_size(buf));
    otv_buf_free(buf);
    if (format == "text") {
        otv_buf* txt = nullptr;
        if (otv_series_text(data.c_str(), &txt) == OTV_OK) {
            std::cout << otv_buf_data(txt) << "\n";
            otv_buf_free(txt);
            return 0;
        }
        // not a series: fall through to raw JSON
    }
    std::cout << data << "\n";
    return 0;
}

int fail_with(int code) {
    std::cerr << "error: " << otv_last_error() << "\n";
    return code == OTV_E_BAD_ARGUMENT ? 2 : 1;
}

// checks emit {"pass": ...}; exit 0 on pass, 1 on failure
int print_check(otv_buf* buf) {
    std::string data(otv_buf_data(buf), otv_buf_size(buf));
    otv_buf_free(buf);
    std::cout << data << "\n";
    return data.find("\"pass\":true") != std::string::npos ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"orbifold DT/PT topological vertex calculator"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    std::string format = "json";
    int jobs = 0;
    app.add_option("--format", format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--jobs", jobs, "worker threads (0 = hardware)")->envname("OTV_JOBS");

    int n = 1, degree = 3, which = 1, count = 10, extra = 0;
    std::string legs = ";;", method = "enum", side = "dt", nu, xi, eta, diagram_path;
    unsigned long long seed = 20240811ull;
    int curve_degree = 1, box_degree = 3;

    auto* vertex = app.add_subcommand("vertex", "compute a topological vertex series");
    auto* vdt = vertex->add_subcommand("dt", "DT vertex by box enumeration");
    vdt->add_option("--n", n, "color modulus")->required();
    vdt->add_option("--legs", legs, "legs as \"lambda;mu;nu\"")->required();
    vdt->add_option("--degree", degree, "truncation degree")->required();
    auto* vpt = vertex->add_subcommand("pt", "PT vertex");
    vpt->add_option("--n", n)->required();
    vpt->add_option("--legs", legs)->required();
    vpt->add_option("--degree", degree)->required();
    vpt->add_option("--method", method, "enum|closed|dt-ratio|triangulate")
        ->check(CLI::IsMember({"enum", "closed", "dt-ratio", "triangulate"}));

    auto* check = app.add_subcommand("check", "run a verification suite");
    auto* crec = check->add_subcommand("recurrence", "condensation recurrences");
    crec->add_option("--which", which, "1, 2 or 3")->required()->check(CLI::Range(1, 3));
    crec->add_option("--side", side)->check(CLI::IsMember({"dt", "pt"}));
    crec->add_option("--n", n)->required();
    crec->add_option("--legs", legs)->required();
    crec->add_option("--degree", degree);
    auto* ccor = check->add_subcommand("correspondence", "DT/PT correspondence");
    ccor->add_option("--n", n)->required();
    ccor->add_option("--legs", legs)->required();
    ccor->add_option("--degree", degree);
    auto* cvac = check->add_subcommand("vacuum", "vacuum product identity");
    cvac->add_option("--n", n)->required();
    cvac->add_option("--degree", degree);
    auto* csym = check->add_subcommand("symmetry", "bar-transpose symmetries");
    csym->add_option("--n", n)->required();
    csym->add_option("--degree", degree);
    csym->add_option("--count", count);
    csym->add_option("--seed", seed);
    auto* cwei = check->add_subcommand("weights", "weight-lemma suite");
    cwei->add_option("--max-eta", extra);
    cwei->add_option("--count", count);
    cwei->add_option("--seed", seed);
    auto* cpar = check->add_subcommand("partition-lemmas", "partition identities");
    cpar->add_option("--max-size", extra);

    auto* symfun = app.add_subcommand("symfun", "symmetric function evaluations");
    auto* shook = symfun->add_subcommand("hook", "colored hook product H_nu");
    shook->add_option("--nu", nu)->required();
    shook->add_option("--n", n)->required();
    shook->add_option("--degree", degree)->required();
    auto* sloop = symfun->add_subcommand("loop-schur", "loop Schur function");
    sloop->add_option("--nu", nu)->required();
    sloop->add_option("--n", n)->required();
    sloop->add_option("--degree", degree)->required();
    auto* sskew = symfun->add_subcommand("skew", "skew Schur specialization");
    sskew->add_option("--xi", xi)->required();
    sskew->add_option("--eta", eta);
    sskew->add_option("--nu", nu);
    sskew->add_option("--n", n)->required();
    sskew->add_option("--degree", degree)->required();

    auto* glue = app.add_subcommand("glue", "PT partition function of a web diagram");
    glue->add_option("--diagram", diagram_path, "diagram JSON file")->required();
    glue->add_option("--curve-degree", curve_degree)->required();
    glue->add_option("--box-degree", box_degree)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }
    otv_set_jobs(jobs);

    otv_buf* buf = nullptr;
    int rc = OTV_OK;
    if (vdt->parsed()) {
        rc = otv_vertex_dt(n, legs.c_str(), degree, &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    if (vpt->parsed()) {
        rc = otv_vertex_pt(n, legs.c_str(), degree, method.c_str(), &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    if (shook->parsed()) {
        rc = otv_symfun_hook(nu.c_str(), n, degree, &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    if (sloop->parsed()) {
        rc = otv_symfun_loop_schur(nu.c_str(), n, degree, &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    if (sskew->parsed()) {
        rc = otv_symfun_skew(xi.c_str(), eta.c_str(), nu.c_str(), n, degree, &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    if (glue->parsed()) {
        std::ifstream in(diagram_path);
        if (!in) {
            std::cerr << "error: cannot read " << diagram_path << "\n";
            return 2;
        }
        std::stringstream ss;
        ss << in.rdbuf();
        rc = otv_glue(ss.str().c_str(), curve_degree, box_degree, &buf);
        return rc == OTV_OK ? print_buf(buf, format) : fail_with(rc);
    }
    const char* check_name = crec->parsed()          ? "recurrence"
                             : ccor->parsed()        ? "correspondence"
                             : cvac->parsed()        ? "vacuum"
                             : csym->parsed()        ? "symmetry"
                             : cwei->parsed()        ? "weights"
                             : cpar->parsed()        ? "partition-lemmas"
                                                     : nullptr;
    if (check_name) {
        rc = otv_check(check_name, n, legs.c_str(), degree, crec->parsed() ? which : extra,
                       side.c_str(), seed, count, &buf);
        return rc == OTV_OK ? print_check(buf) : fail_with(rc);
    }
    std::cerr << "error: no subcommand\n";
    return 2;
}
