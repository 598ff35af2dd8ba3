#include <stdio.h>
#include <string.h>
#include "shifted_chains.h"

static int fail(const char *what) {
    const char *e = sc_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no message)");
    return 1;
}

int main(void) {
    ScPath *p = NULL;
    char *s = NULL;
    if (sc_path_parse("duduud", &p) != SC_STATUS_OK) return fail("parse");
    if (sc_path_saturated_count(p, &s) != SC_STATUS_OK) return fail("saturated");
    if (strcmp(s, "198") != 0) return fail("saturated value");
    sc_string_free(s);
    if (sc_path_f(p, &s) != SC_STATUS_OK || strcmp(s, "2") != 0) return fail("f");
    sc_string_free(s);
    sc_path_free(p);

    ScTableau *t = NULL;
    if (sc_tableau_parse("[[1,2],[3]]", &t) != SC_STATUS_OK) return fail("tableau");
    if (sc_theta_inv(t, 3, &s) != SC_STATUS_OK) return fail("theta_inv");
    printf("%s", s);
    sc_string_free(s);
    sc_tableau_free(t);

    if (sc_path_parse("dx", &p) != SC_STATUS_PARSE_ERROR) return fail("bad word accepted");
    if (sc_last_error() == NULL) return fail("missing message");
    return 0;
}
