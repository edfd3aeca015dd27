#include <stdio.h>
#include <string.h>
#include "coulomb_hankel.h"

static int check(int ok, const char *what) {
    if (!ok) fprintf(stderr, "failed: %s\n", what);
    return ok ? 0 : 1;
}

int main(void) {
    int bad = 0;
    char *det = NULL;
    bad += check(ch_hankel_det("0", "0", 2, &det) == CH_STATUS_OK, "hankel det status");
    bad += check(det && strcmp(det, "1/135") == 0, "hankel det value");
    ch_string_free(det);

    size_t m = 0;
    bad += check(ch_classify("-7/4", "3/2", 0, &m) == CH_STATUS_OK && m == 1, "classify");
    bad += check(ch_classify("-1", "1", 0, &m) == CH_STATUS_EXCLUDED_PARAMETER, "excluded");
    bad += check(ch_last_error() != NULL, "error message");

    ChZeroReport *r = NULL;
    bad += check(ch_find_zeros(-1.75, 1.5, NULL, 0.0, &r) == CH_STATUS_OK, "find zeros");
    ChZeroCounts counts;
    bad += check(ch_zero_report_counts(r, &counts) == CH_STATUS_OK && counts.complex_pairs == 1, "counts");
    ch_zero_report_free(r);

    printf("%s\n", ch_version());
    return bad;
}
