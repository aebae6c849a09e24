// Exercises the extern-C surface the CLI is built on.
#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "otv.h"

static std::string take(otv_buf* buf) {
    std::string s(otv_buf_data(buf), otv_buf_size(buf));
    otv_buf_free(buf);
    return s;
}

int main() {
    otv_buf* buf = nullptr;

    assert(otv_vertex_dt(1, ";;", 4, &buf) == OTV_OK);
    std::string v = take(buf);
    assert(v.find("\"c\":\"13\"") != std::string::npos); // 13 plane partitions of 4
    assert(otv_series_text(v.c_str(), &buf) == OTV_OK);
    std::string txt = take(buf);
    assert(txt == "1 + q_0 + 3*q_0^2 + 6*q_0^3 + 13*q_0^4");

    assert(otv_vertex_pt(1, "1;1;", 2, "triangulate", &buf) == OTV_OK);
    std::string w = take(buf);
    assert(w.find("\"floor\":-1") != std::string::npos);

    int rc = otv_vertex_pt(2, ";;1", 3, "dt-ratio", &buf);
    assert(rc == OTV_E_OUT_OF_VALIDITY);
    assert(std::strlen(otv_last_error()) > 0);

    assert(otv_symfun_loop_schur("1", 2, 3, &buf) == OTV_OK);
    take(buf);

    assert(otv_check("vacuum", 2, "", 4, 0, "", 0, 0, &buf) == OTV_OK);
    std::string rep = take(buf);
    assert(rep.find("\"pass\":true") != std::string::npos);

    assert(otv_check("recurrence", 1, "1;1;", 3, 1, "pt", 0, 0, &buf) == OTV_OK);
    rep = take(buf);
    assert(rep.find("\"pass\":true") != std::string::npos);

    const char* diagram =
        "{\"vertices\":[{\"id\":\"v\",\"edges\":[\"a\",\"b\",\"c\"]}],"
        "\"edges\":[{\"id\":\"a\",\"tail\":\"v\"},{\"id\":\"b\",\"tail\":\"v\"},"
        "{\"id\":\"c\",\"tail\":\"v\"}]}";
    assert(otv_glue(diagram, 1, 2, &buf) == OTV_OK);
    take(buf);

    assert(otv_vertex_dt(0, ";;", 4, &buf) == OTV_E_BAD_ARGUMENT);

    std::puts("capi ok");
    return 0;
}
