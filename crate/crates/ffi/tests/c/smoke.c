#include <stdio.h>
#include <string.h>
#include "turan.h"

int main(void) {
    TuranGraph *g = NULL, *t = NULL, *f = NULL;
    if (turan_graph_pattern("K5", &g) != TURAN_STATUS_OK) return 1;
    if (turan_graph_pattern("K2", &t) != TURAN_STATUS_OK) return 1;
    if (turan_graph_pattern("K3", &f) != TURAN_STATUS_OK) return 1;
    const TuranGraph *fam[1] = {f};
    uint64_t value = 0;
    if (turan_exact_ex(g, t, fam, 1, 0, 1, &value, NULL) != TURAN_STATUS_OK) return 2;
    if (turan_graph_parse("p edge 2 1\ne 1 1\n", &g) != TURAN_STATUS_PARSE_ERROR) return 3;
    if (strstr(turan_last_error(), "line 2") == NULL) return 4;
    printf("%llu\n", (unsigned long long)value);
    turan_graph_free(g);
    turan_graph_free(t);
    turan_graph_free(f);
    return 0;
}
